#include "hjbx/graded_poly.hpp"

#include <cmath>

#include "hjbx/errors.hpp"

namespace hjbx {

const SymTensor* GradedPoly::term(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? nullptr : &it->second;
}

void GradedPoly::add_term(const SymTensor& t, double scale) {
    if (dim_ == 0) dim_ = t.dim();
    if (t.dim() != dim_) throw DimensionMismatch("GradedPoly: term dim mismatch");
    auto it = terms_.find(t.degree());
    if (it == terms_.end()) {
        terms_.emplace(t.degree(), scale == 1.0 ? t : t.scaled(scale));
    } else {
        it->second += t.scaled(scale);
    }
}

void GradedPoly::add(const GradedPoly& other, double scale) {
    for (const auto& [deg, t] : other.terms_) {
        (void)deg;
        add_term(t, scale);
    }
}

double GradedPoly::eval(const Eigen::VectorXd& state) const {
    double sum = 0.0;
    for (const auto& [deg, t] : terms_) {
        (void)deg;
        sum += t.eval(state);
    }
    return sum;
}

Eigen::VectorXd GradedPoly::gradient(const Eigen::VectorXd& state) const {
    if (state.size() != dim_) throw DimensionMismatch("gradient: state length != dim");
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(dim_);
    for (const auto& [deg, t] : terms_) {
        const auto tuples = all_multi_indices(dim_, deg);
        for (std::size_t r = 0; r < tuples.size(); ++r) {
            const double c = t.raw_at(r);
            if (c == 0.0) continue;
            const auto& idx = tuples[r].indices();
            const double base = c * tuples[r].multiplicity();
            // d/dz_m of the monomial: count(m) * z^(tuple minus one m)
            for (std::size_t p = 0; p < idx.size(); ++p) {
                if (p > 0 && idx[p] == idx[p - 1]) continue; // each variable once
                int count = 0;
                double prod = 1.0;
                for (std::size_t q = 0; q < idx.size(); ++q) {
                    if (idx[q] == idx[p]) {
                        ++count;
                    } else {
                        prod *= state(idx[q]);
                    }
                }
                for (int rep = 0; rep < count - 1; ++rep) prod *= state(idx[p]);
                grad(idx[p]) += base * count * prod;
            }
        }
    }
    return grad;
}

GradedPoly GradedPoly::partial(int var) const {
    GradedPoly out(dim_);
    for (const auto& [deg, t] : terms_) {
        if (deg < 2) throw DimensionMismatch("partial: degree-1 term would leave a constant");
        Eigen::VectorXd unit = Eigen::VectorXd::Zero(dim_);
        unit(var) = 1.0;
        out.add_term(t.contract(unit), static_cast<double>(deg));
    }
    return out;
}

GradedPoly GradedPoly::truncated(int max_degree) const {
    GradedPoly out(dim_);
    for (const auto& [deg, t] : terms_) {
        if (deg <= max_degree) out.add_term(t);
    }
    return out;
}

double GradedPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [deg, t] : terms_) {
        (void)deg;
        m = std::max(m, t.max_abs());
    }
    return m;
}

GradedPoly product(const GradedPoly& a, const GradedPoly& b, int cutoff) {
    if (a.dim() != b.dim()) throw DimensionMismatch("product: dim mismatch");
    GradedPoly out(a.dim());
    for (const auto& [da, ta] : a.terms()) {
        for (const auto& [db, tb] : b.terms()) {
            if (da + db > cutoff) continue;
            out.add_term(sym_product(ta, tb));
        }
    }
    return out;
}

std::map<MultiIndex, double> to_monomials(const GradedPoly& p, double drop_below) {
    std::map<MultiIndex, double> out;
    for (const auto& [deg, t] : p.terms()) {
        const auto tuples = all_multi_indices(p.dim(), deg);
        for (std::size_t r = 0; r < tuples.size(); ++r) {
            const double mono = t.raw_at(r) * tuples[r].multiplicity();
            if (std::abs(mono) > drop_below) out[tuples[r]] = mono;
        }
    }
    return out;
}

} // namespace hjbx
