#include "hjbx/sym_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hjbx/errors.hpp"

namespace hjbx {

SymTensor::SymTensor(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 1 || degree < 1) {
        throw DimensionMismatch("SymTensor requires dim >= 1 and degree >= 1");
    }
    coeffs_.assign(symmetric_space_dim(dim, degree), 0.0);
}

double SymTensor::coeff(const MultiIndex& mi) const {
    if (mi.degree() != degree_) throw DimensionMismatch("multi-index degree != tensor degree");
    return coeffs_[canonical_rank(mi, dim_)];
}

void SymTensor::set_coeff(const MultiIndex& mi, double value) {
    if (mi.degree() != degree_) throw DimensionMismatch("multi-index degree != tensor degree");
    coeffs_[canonical_rank(mi, dim_)] = value;
}

void SymTensor::add_coeff(const MultiIndex& mi, double value) {
    if (mi.degree() != degree_) throw DimensionMismatch("multi-index degree != tensor degree");
    coeffs_[canonical_rank(mi, dim_)] += value;
}

double SymTensor::eval(const Eigen::VectorXd& state) const {
    if (state.size() != dim_) throw DimensionMismatch("state length != tensor dim");
    double sum = 0.0;
    const auto tuples = all_multi_indices(dim_, degree_);
    for (std::size_t r = 0; r < tuples.size(); ++r) {
        const double c = coeffs_[r];
        if (c == 0.0) continue;
        double prod = 1.0;
        for (int idx : tuples[r].indices()) prod *= state(idx);
        sum += c * tuples[r].multiplicity() * prod;
    }
    return sum;
}

SymTensor SymTensor::contract(const Eigen::VectorXd& slot) const {
    if (slot.size() != dim_) throw DimensionMismatch("slot length != tensor dim");
    if (degree_ < 2) throw DimensionMismatch("contract requires degree >= 2");
    SymTensor out(dim_, degree_ - 1);
    const auto tuples = all_multi_indices(dim_, degree_ - 1);
    for (std::size_t r = 0; r < tuples.size(); ++r) {
        double sum = 0.0;
        for (int i = 0; i < dim_; ++i) {
            const double v = slot(i);
            if (v == 0.0) continue;
            sum += coeffs_[canonical_rank(tuples[r].with(i), dim_)] * v;
        }
        out.set_raw(r, sum);
    }
    return out;
}

SymTensor SymTensor::scaled(double factor) const {
    SymTensor out = *this;
    for (double& c : out.coeffs_) c *= factor;
    return out;
}

SymTensor& SymTensor::operator+=(const SymTensor& other) {
    if (other.dim_ != dim_ || other.degree_ != degree_) {
        throw DimensionMismatch("tensor sum requires equal dim and degree");
    }
    for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] += other.coeffs_[r];
    return *this;
}

double SymTensor::max_abs() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool SymTensor::is_zero(double tol) const { return max_abs() <= tol; }

SymTensor contract(const SymTensor& t, const std::vector<Eigen::VectorXd>& slots) {
    if (static_cast<int>(slots.size()) >= t.degree()) {
        throw DimensionMismatch("partial contraction needs fewer slots than the degree");
    }
    SymTensor cur = t;
    for (const auto& v : slots) cur = cur.contract(v);
    return cur;
}

double contract_full(const SymTensor& t, const std::vector<Eigen::VectorXd>& slots) {
    if (static_cast<int>(slots.size()) != t.degree()) {
        throw DimensionMismatch("full contraction needs one slot per degree");
    }
    SymTensor cur = t;
    for (std::size_t s = 0; s + 1 < slots.size(); ++s) cur = cur.contract(slots[s]);
    // degree-1 tensor against the last slot
    const Eigen::VectorXd& v = slots.back();
    if (v.size() != cur.dim()) throw DimensionMismatch("slot length != tensor dim");
    double sum = 0.0;
    for (int i = 0; i < cur.dim(); ++i) sum += cur.coeff(MultiIndex{i}) * v(i);
    return sum;
}

SymTensor symmetrize(int dim, const std::map<std::vector<int>, double>& raw, SymmetrizeMode mode) {
    if (raw.empty()) throw DimensionMismatch("symmetrize: empty raw map");
    const std::size_t degree = raw.begin()->first.size();
    if (degree == 0) throw DimensionMismatch("symmetrize: zero-length tuples");

    std::map<MultiIndex, std::pair<double, int>> acc; // sorted tuple -> (sum, count)
    for (const auto& [tuple, value] : raw) {
        if (tuple.size() != degree) {
            throw DimensionMismatch("symmetrize: inconsistent tuple lengths");
        }
        auto& slot = acc[MultiIndex(tuple)];
        slot.first += value;
        slot.second += 1;
    }

    SymTensor out(dim, static_cast<int>(degree));
    for (const auto& [mi, sum_count] : acc) {
        if (mode == SymmetrizeMode::Strict &&
            sum_count.second != static_cast<int>(std::llround(mi.multiplicity()))) {
            throw DimensionMismatch("symmetrize(strict): missing orderings for a tuple");
        }
        out.set_coeff(mi, sum_count.first / sum_count.second);
    }
    return out;
}

namespace {

// All ways to choose `take` positions out of `total`, as bitmasks.
std::vector<unsigned> position_subsets(int total, int take) {
    std::vector<unsigned> masks;
    std::vector<int> pick(static_cast<std::size_t>(take));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        unsigned m = 0;
        for (int p : pick) m |= 1u << p;
        masks.push_back(m);
        int j = take - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] == total - take + j) --j;
        if (j < 0) break;
        ++pick[static_cast<std::size_t>(j)];
        for (int q = j + 1; q < take; ++q) {
            pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return masks;
}

} // namespace

SymTensor sym_product(const SymTensor& a, const SymTensor& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("sym_product: dim mismatch");
    const int da = a.degree();
    const int db = b.degree();
    const int d = da + db;
    SymTensor out(a.dim(), d);

    // sym(a (x) b): average a(tau[P]) * b(tau[P^c]) over position subsets P.
    const auto subsets = position_subsets(d, da);
    const double inv = 1.0 / static_cast<double>(subsets.size());
    const auto tuples = all_multi_indices(a.dim(), d);
    std::vector<int> ta(static_cast<std::size_t>(da));
    std::vector<int> tb(static_cast<std::size_t>(db));
    for (std::size_t r = 0; r < tuples.size(); ++r) {
        const auto& tau = tuples[r].indices();
        double sum = 0.0;
        for (unsigned mask : subsets) {
            int ia = 0, ib = 0;
            for (int p = 0; p < d; ++p) {
                if (mask & (1u << p)) {
                    ta[static_cast<std::size_t>(ia++)] = tau[static_cast<std::size_t>(p)];
                } else {
                    tb[static_cast<std::size_t>(ib++)] = tau[static_cast<std::size_t>(p)];
                }
            }
            sum += a.coeff(MultiIndex(ta)) * b.coeff(MultiIndex(tb));
        }
        out.set_raw(r, sum * inv);
    }
    return out;
}

SymTensor monomial_tensor(int dim, const MultiIndex& mono, double coeff_of_monomial) {
    SymTensor out(dim, mono.degree());
    out.set_coeff(mono, coeff_of_monomial / mono.multiplicity());
    return out;
}

double monomial_coeff(const SymTensor& t, const MultiIndex& mono) {
    return t.coeff(mono) * mono.multiplicity();
}

SymTensor tensor_from_matrix(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("tensor_from_matrix: square matrix required");
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + m.cwiseAbs().maxCoeff())) {
        throw DimensionMismatch("tensor_from_matrix: matrix not symmetric");
    }
    const int n = static_cast<int>(m.rows());
    SymTensor out(n, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) out.set_coeff(MultiIndex{i, j}, m(i, j));
    }
    return out;
}

} // namespace hjbx
