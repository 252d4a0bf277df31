#pragma once

#include <map>
#include <vector>

#include <Eigen/Core>

#include "hjbx/multi_index.hpp"

namespace hjbx {

/// Fully symmetric degree-k coefficient tensor over n variables, stored dense
/// in canonical-rank order.
///
/// Convention (symmetric-sum): the polynomial represented is
///     value(z) = sum over ALL ordered index tuples (i1..ik) of
///                coeff(i1..ik) * z_i1 * ... * z_ik,
/// so the monomial coefficient of a monomial with multiplicities (m_0..m_{n-1})
/// is (k!/prod m_i!) * coeff(sorted tuple).
class SymTensor {
public:
    SymTensor() = default;
    SymTensor(int dim, int degree);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    std::size_t size() const { return coeffs_.size(); }

    double coeff(const MultiIndex& mi) const;
    void set_coeff(const MultiIndex& mi, double value);
    void add_coeff(const MultiIndex& mi, double value);

    const std::vector<double>& raw() const { return coeffs_; }
    double raw_at(std::size_t rank) const { return coeffs_[rank]; }
    void set_raw(std::size_t rank, double value) { coeffs_[rank] = value; }

    /// Full symmetric-sum value at a state (length must equal dim).
    double eval(const Eigen::VectorXd& state) const;

    /// Contract one slot against a vector; returns the degree-(k-1) tensor
    /// T'(j2..jk) = sum_i T(i, j2..jk) v_i. Requires degree >= 2.
    SymTensor contract(const Eigen::VectorXd& slot) const;

    SymTensor scaled(double factor) const;
    SymTensor& operator+=(const SymTensor& other);
    double max_abs() const;
    bool is_zero(double tol = 0.0) const;

private:
    int dim_ = 0;
    int degree_ = 0;
    std::vector<double> coeffs_;
};

/// Partial evaluation in the given slots (one vector per contracted slot).
/// Returns a tensor of degree k - slots.size(); requires slots.size() < k.
SymTensor contract(const SymTensor& t, const std::vector<Eigen::VectorXd>& slots);

/// Full contraction (slots.size() == degree). Equals eval when every slot
/// holds the same vector.
double contract_full(const SymTensor& t, const std::vector<Eigen::VectorXd>& slots);

enum class SymmetrizeMode {
    Lenient, ///< average over the orderings present in the raw map
    Strict   ///< every ordering of a present tuple must be supplied
};

/// Symmetrize a map from ordered index tuples to values: the coefficient at a
/// sorted tuple is the average of the raw values over the distinct orderings
/// present. All tuples must share one length; indices must be < dim.
SymTensor symmetrize(int dim, const std::map<std::vector<int>, double>& raw,
                     SymmetrizeMode mode = SymmetrizeMode::Lenient);

/// Product of two symmetric forms as polynomials: the result's symmetric-sum
/// value equals the product of the operands' values.
SymTensor sym_product(const SymTensor& a, const SymTensor& b);

/// Tensor whose polynomial is exactly monomial_coeff * prod_{i in mono} z_i,
/// i.e. coeff(mono) = monomial_coeff / multiplicity(mono).
SymTensor monomial_tensor(int dim, const MultiIndex& mono, double monomial_coeff);

/// Monomial coefficient carried by a tensor entry: multiplicity * coeff.
double monomial_coeff(const SymTensor& t, const MultiIndex& mono);

/// Degree-2 tensor with coeff(sorted(i,j)) = m(i,j); m must be symmetric.
SymTensor tensor_from_matrix(const Eigen::MatrixXd& m);

} // namespace hjbx
