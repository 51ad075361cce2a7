#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeinlab/perm.hpp"

namespace skeinlab {

// Set partition of {1..n} in canonical form: elements ascending within each
// block, blocks ordered by minimum element.
class SetPartition {
public:
    SetPartition() = default;
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int singleton_count() const;
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block_containing(int i) const;
    int block_index_of(int i) const;

    // Deterministic output order: block count, then singleton count, then
    // lexicographic comparison of the canonical block lists.
    friend bool operator<(const SetPartition& a, const SetPartition& b);
    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

bool is_noncrossing(const SetPartition& pi);
bool subsets_cross(const std::vector<int>& a, const std::vector<int>& b);

// Restricted-growth-string lexicographic order.
std::vector<SetPartition> enumerate_partitions(int n,
                                               std::optional<int> k = std::nullopt,
                                               std::optional<int> m = std::nullopt,
                                               bool noncrossing_only = false);

SetPartition apply_perm(const Perm& w, const SetPartition& pi);

int tangle(const SetPartition& pi);
std::vector<std::pair<int, int>> crossing_pairs(const SetPartition& pi);

// Alternating maximal cyclic intervals of the ordered set A ⊔ B:
// A = A_1 ⊔ ... ⊔ A_m, B = B_1 ⊔ ... ⊔ B_m, cyclically sequential.
struct CyclicDecomposition {
    std::vector<std::vector<int>> a_intervals;
    std::vector<std::vector<int>> b_intervals;
    int m() const { return static_cast<int>(a_intervals.size()); }
};
CyclicDecomposition cyclic_decomposition(const std::vector<int>& a,
                                         const std::vector<int>& b, int n);

struct SegmentedPermutation {
    Perm w;
    std::vector<int> alpha;

    SegmentedPermutation(Perm w_, std::vector<int> alpha_);
    int n() const { return w.size(); }
    int segment_count() const { return static_cast<int>(alpha.size()); }
    // Letters of segment i (1-based) in written order.
    std::vector<int> segment(int i) const;
};

SetPartition to_partition(const SegmentedPermutation& sp);
int odd_part_sum(const std::vector<int>& alpha);  // alpha_1 + alpha_3 + ...
SegmentedPermutation canonical_segperm(const SetPartition& pi);

// Text formats: "1 3 5 / 2 4 / 6" (braces and commas accepted).
SetPartition parse_set_partition(const std::string& text,
                                 std::optional<int> n = std::nullopt);
std::string format_set_partition(const SetPartition& pi);
SegmentedPermutation parse_segmented_permutation(const std::string& text);
std::string format_segmented_permutation(const SegmentedPermutation& sp);

}  // namespace skeinlab
