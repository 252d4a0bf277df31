#include "hjbx/multi_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hjbx {

MultiIndex::MultiIndex(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
}

MultiIndex::MultiIndex(std::initializer_list<int> indices) : indices_(indices) {
    std::sort(indices_.begin(), indices_.end());
}

MultiIndex MultiIndex::with(int extra) const {
    std::vector<int> v = indices_;
    v.insert(std::upper_bound(v.begin(), v.end(), extra), extra);
    MultiIndex out;
    out.indices_ = std::move(v);
    return out;
}

double MultiIndex::multiplicity() const {
    double mult = 1.0;
    int run = 1;
    int pos = 1;
    for (std::size_t i = 1; i < indices_.size(); ++i) {
        ++pos;
        run = (indices_[i] == indices_[i - 1]) ? run + 1 : 1;
        // incremental k!/prod(m_i!): multiply by pos, divide by current run length
        mult *= static_cast<double>(pos) / static_cast<double>(run);
    }
    return mult;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::size_t symmetric_space_dim(int dim, int degree) {
    return static_cast<std::size_t>(binomial(dim + degree - 1, degree));
}

std::size_t canonical_rank(const MultiIndex& mi, int dim) {
    std::size_t rank = 0;
    const auto& idx = mi.indices();
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < 0 || idx[j] >= dim) {
            throw std::out_of_range("multi-index entry " + std::to_string(idx[j]) +
                                    " outside 0.." + std::to_string(dim - 1));
        }
        // colex rank of a sorted multiset: sum_j C(i_j + j, j+1), j zero-based
        rank += static_cast<std::size_t>(binomial(idx[j] + static_cast<int>(j), static_cast<int>(j) + 1));
    }
    return rank;
}

std::vector<MultiIndex> all_multi_indices(int dim, int degree) {
    std::vector<MultiIndex> out;
    out.reserve(symmetric_space_dim(dim, degree));
    std::vector<int> t(static_cast<std::size_t>(degree), 0);
    while (true) {
        out.emplace_back(t);
        // colex successor: bump the lowest slot that can grow, reset those below it
        int j = 0;
        for (; j < degree; ++j) {
            const int cap = (j + 1 < degree) ? t[static_cast<std::size_t>(j + 1)] : dim - 1;
            if (t[static_cast<std::size_t>(j)] < cap) break;
        }
        if (j == degree) break;
        ++t[static_cast<std::size_t>(j)];
        std::fill(t.begin(), t.begin() + j, 0);
    }
    return out;
}

} // namespace hjbx
