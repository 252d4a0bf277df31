#pragma once

#include <map>

#include <Eigen/Core>

#include "hjbx/sym_tensor.hpp"

namespace hjbx {

/// Polynomial without constant term, stored degree by degree as symmetric
/// tensors (all degrees >= 1, all with the same variable count).
class GradedPoly {
public:
    GradedPoly() = default;
    explicit GradedPoly(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool empty() const { return terms_.empty(); }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    const std::map<int, SymTensor>& terms() const { return terms_; }
    const SymTensor* term(int degree) const;

    /// Accumulate scale * t into the matching degree slot.
    void add_term(const SymTensor& t, double scale = 1.0);
    void add(const GradedPoly& other, double scale = 1.0);

    double eval(const Eigen::VectorXd& state) const;

    /// Exact analytic gradient of eval.
    Eigen::VectorXd gradient(const Eigen::VectorXd& state) const;

    /// Derivative polynomial with respect to one variable.
    /// Requires every stored degree >= 2 (so the result has no constant term).
    GradedPoly partial(int var) const;

    GradedPoly truncated(int max_degree) const;
    double max_abs_coeff() const;

private:
    int dim_ = 0;
    std::map<int, SymTensor> terms_;
};

/// Polynomial product, dropping result degrees above cutoff.
GradedPoly product(const GradedPoly& a, const GradedPoly& b, int cutoff);

/// Monomial coefficients of every stored term, keyed by index tuple.
std::map<MultiIndex, double> to_monomials(const GradedPoly& p, double drop_below = 0.0);

} // namespace hjbx
