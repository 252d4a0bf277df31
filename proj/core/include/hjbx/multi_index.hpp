#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hjbx {

/// Index tuple of a fully symmetric tensor entry, stored sorted non-decreasing.
/// Two MultiIndex values are equal iff their sorted tuples are equal.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> indices);
    MultiIndex(std::initializer_list<int> indices);

    int degree() const { return static_cast<int>(indices_.size()); }
    const std::vector<int>& indices() const { return indices_; }
    int operator[](int slot) const { return indices_[static_cast<std::size_t>(slot)]; }

    /// Copy with one extra index inserted (stays sorted).
    MultiIndex with(int extra) const;

    /// Number of distinct orderings of the tuple: k! / prod(m_i!)
    /// where m_i is the multiplicity of variable i.
    double multiplicity() const;

    bool operator==(const MultiIndex&) const = default;
    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<int> indices_;
};

std::uint64_t binomial(int n, int k);

/// Dimension of the space of degree-k symmetric coefficients over n variables:
/// C(n+k-1, k).
std::size_t symmetric_space_dim(int dim, int degree);

/// Graded-colex position of a sorted tuple within its degree block.
/// Bijective onto 0..C(n+k-1,k)-1 and stable across calls.
/// Throws std::out_of_range if any index is outside 0..dim-1.
std::size_t canonical_rank(const MultiIndex& mi, int dim);

/// All degree-k tuples over n variables in canonical (colex) order,
/// i.e. position in the returned vector == canonical_rank.
std::vector<MultiIndex> all_multi_indices(int dim, int degree);

} // namespace hjbx
