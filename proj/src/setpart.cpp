#include "skeinlab/setpart.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skeinlab {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n < 0 || n > 16) throw std::invalid_argument("ground-set size must satisfy 0 <= n <= 16");
    std::vector<char> seen(n + 1, 0);
    int count = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("empty block");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("blocks must partition {1..n}");
            seen[v] = 1;
            ++count;
        }
    }
    if (count != n) throw std::invalid_argument("blocks must cover {1..n}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

int SetPartition::singleton_count() const {
    int m = 0;
    for (const auto& b : blocks_)
        if (b.size() == 1) ++m;
    return m;
}

int SetPartition::block_index_of(int i) const {
    for (size_t j = 0; j < blocks_.size(); ++j)
        if (std::binary_search(blocks_[j].begin(), blocks_[j].end(), i))
            return static_cast<int>(j);
    throw std::invalid_argument("element not in ground set");
}

const std::vector<int>& SetPartition::block_containing(int i) const {
    return blocks_[block_index_of(i)];
}

bool operator<(const SetPartition& a, const SetPartition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
    if (a.singleton_count() != b.singleton_count())
        return a.singleton_count() < b.singleton_count();
    return a.blocks_ < b.blocks_;
}

bool subsets_cross(const std::vector<int>& a, const std::vector<int>& b) {
    // Crossing iff the merged order alternates a-b-a-b somewhere, i.e. the
    // cyclic run count m of the decomposition is at least 2.
    std::vector<std::pair<int, bool>> merged;
    for (int v : a) merged.push_back({v, false});
    for (int v : b) merged.push_back({v, true});
    std::sort(merged.begin(), merged.end());
    int switches = 0;
    for (size_t i = 1; i < merged.size(); ++i)
        if (merged[i].second != merged[i - 1].second) ++switches;
    // The cyclic run count is switches (wraparound sides equal) or
    // switches + 1 (sides differ, switches odd); crossing means >= 4 runs,
    // which both cases reduce to switches >= 3.
    return switches >= 3;
}

bool is_noncrossing(const SetPartition& pi) {
    const auto& blocks = pi.blocks();
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j)
            if (subsets_cross(blocks[i], blocks[j])) return false;
    return true;
}

std::vector<SetPartition> enumerate_partitions(int n, std::optional<int> k,
                                               std::optional<int> m,
                                               bool noncrossing_only) {
    if (n < 0 || n > 16) throw std::invalid_argument("n out of range");
    if (k && (*k < 0 || *k > n)) throw std::invalid_argument("invalid block count");
    if (m && !k) throw std::invalid_argument("singleton count requires block count");
    if (m && (*m < 0 || *m > *k)) throw std::invalid_argument("invalid singleton count");
    std::vector<SetPartition> out;
    if (n == 0) {
        SetPartition empty(0, {});
        bool ok = (!k || *k == 0) && (!m || *m == 0);
        if (ok) out.push_back(empty);
        return out;
    }
    std::vector<int> rgs(n, 0);
    auto emit = [&](int nblocks) {
        if (k && nblocks != *k) return;
        std::vector<std::vector<int>> blocks(nblocks);
        for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
        SetPartition pi(n, std::move(blocks));
        if (m && pi.singleton_count() != *m) return;
        if (noncrossing_only && !is_noncrossing(pi)) return;
        out.push_back(std::move(pi));
    };
    // Lexicographic restricted growth strings.
    auto rec = [&](auto&& self, int pos, int maxv) -> void {
        if (pos == n) {
            emit(maxv + 1);
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[pos] = v;
            self(self, pos + 1, std::max(maxv, v));
        }
    };
    rgs[0] = 0;
    rec(rec, 1, 0);
    return out;
}

SetPartition apply_perm(const Perm& w, const SetPartition& pi) {
    if (w.size() != pi.n()) throw std::invalid_argument("permutation size mismatch");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : pi.blocks()) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int v : b) nb.push_back(w(v));
        blocks.push_back(std::move(nb));
    }
    return SetPartition(pi.n(), std::move(blocks));
}

std::vector<std::pair<int, int>> crossing_pairs(const SetPartition& pi) {
    std::vector<std::pair<int, int>> out;
    const auto& blocks = pi.blocks();
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j)
            if (subsets_cross(blocks[i], blocks[j]))
                out.push_back({static_cast<int>(i), static_cast<int>(j)});
    return out;
}

int tangle(const SetPartition& pi) {
    return static_cast<int>(crossing_pairs(pi).size());
}

CyclicDecomposition cyclic_decomposition(const std::vector<int>& a,
                                         const std::vector<int>& b, int n) {
    if (a.empty() || b.empty()) throw std::invalid_argument("subsets must be nonempty");
    std::vector<std::pair<int, bool>> merged;  // (element, in_b)
    for (int v : a) merged.push_back({v, false});
    for (int v : b) merged.push_back({v, true});
    std::sort(merged.begin(), merged.end());
    for (size_t i = 0; i + 1 < merged.size(); ++i)
        if (merged[i].first == merged[i + 1].first)
            throw std::invalid_argument("subsets must be disjoint");
    if (merged.back().first > n) throw std::invalid_argument("element exceeds n");

    // Runs of the cyclic sequence; the linear first and last run merge when
    // they lie on the same side.
    std::vector<std::pair<bool, std::vector<int>>> runs;
    for (const auto& [v, side] : merged) {
        if (runs.empty() || runs.back().first != side)
            runs.push_back({side, {}});
        runs.back().second.push_back(v);
    }
    if (runs.size() > 1 && runs.front().first == runs.back().first) {
        auto& front = runs.front().second;
        front.insert(front.begin(), runs.back().second.begin(), runs.back().second.end());
        runs.pop_back();
    }

    CyclicDecomposition out;
    if (runs.size() == 1) {
        // degenerate: one of the sides is empty of runs -- impossible since
        // both sets are nonempty, so runs.size() >= 2 always
        throw std::logic_error("cyclic decomposition needs both sides");
    }
    // Start at the A-run containing min(A ⊔ B) when the minimum lies in A,
    // else at the A-run following the B-run containing the minimum.
    int min_elem = merged.front().first;
    size_t start = 0;
    for (size_t i = 0; i < runs.size(); ++i) {
        const auto& vals = runs[i].second;
        if (std::find(vals.begin(), vals.end(), min_elem) != vals.end()) {
            start = runs[i].first ? (i + 1) % runs.size() : i;
            break;
        }
    }
    for (size_t t = 0; t < runs.size(); ++t) {
        const auto& run = runs[(start + t) % runs.size()];
        auto vals = run.second;
        std::sort(vals.begin(), vals.end());
        if (run.first)
            out.b_intervals.push_back(std::move(vals));
        else
            out.a_intervals.push_back(std::move(vals));
    }
    if (out.a_intervals.size() != out.b_intervals.size())
        throw std::logic_error("interval counts must match");
    return out;
}

SegmentedPermutation::SegmentedPermutation(Perm w_, std::vector<int> alpha_)
    : w(std::move(w_)), alpha(std::move(alpha_)) {
    int total = 0;
    for (int a : alpha) {
        if (a <= 0) throw std::invalid_argument("composition parts must be positive");
        total += a;
    }
    if (total != w.size()) throw std::invalid_argument("composition must sum to n");
}

std::vector<int> SegmentedPermutation::segment(int i) const {
    int start = 0;
    for (int j = 0; j < i - 1; ++j) start += alpha[j];
    std::vector<int> out;
    for (int t = 0; t < alpha[i - 1]; ++t) out.push_back(w(start + t + 1));
    return out;
}

SetPartition to_partition(const SegmentedPermutation& sp) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= sp.segment_count(); ++i) blocks.push_back(sp.segment(i));
    return SetPartition(sp.n(), std::move(blocks));
}

int odd_part_sum(const std::vector<int>& alpha) {
    int total = 0;
    for (size_t i = 0; i < alpha.size(); i += 2) total += alpha[i];
    return total;
}

SegmentedPermutation canonical_segperm(const SetPartition& pi) {
    std::vector<int> one_line;
    std::vector<int> alpha;
    for (const auto& b : pi.blocks()) {
        one_line.insert(one_line.end(), b.begin(), b.end());
        alpha.push_back(static_cast<int>(b.size()));
    }
    return SegmentedPermutation(Perm(std::move(one_line)), std::move(alpha));
}

namespace {

std::vector<std::vector<int>> parse_blocks(const std::string& text) {
    std::string cleaned;
    for (char c : text) {
        if (c == '{' || c == '}' || c == ',') c = ' ';
        cleaned += c;
    }
    std::vector<std::vector<int>> blocks;
    size_t pos = 0;
    while (pos <= cleaned.size()) {
        size_t next = cleaned.find('/', pos);
        std::string part = cleaned.substr(pos, next == std::string::npos ? next : next - pos);
        std::istringstream in(part);
        std::vector<int> block;
        int v;
        while (in >> v) block.push_back(v);
        if (!in.eof()) throw std::invalid_argument("bad token in block '" + part + "'");
        blocks.push_back(std::move(block));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return blocks;
}

}  // namespace

SetPartition parse_set_partition(const std::string& text, std::optional<int> n) {
    auto blocks = parse_blocks(text);
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    if (blocks.empty()) throw std::invalid_argument("empty partition text");
    int max_elem = 0;
    for (const auto& b : blocks)
        for (int v : b) max_elem = std::max(max_elem, v);
    return SetPartition(n.value_or(max_elem), std::move(blocks));
}

std::string format_set_partition(const SetPartition& pi) {
    std::string out;
    for (size_t i = 0; i < pi.blocks().size(); ++i) {
        if (i) out += " / ";
        const auto& b = pi.blocks()[i];
        for (size_t j = 0; j < b.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(b[j]);
        }
    }
    return out;
}

SegmentedPermutation parse_segmented_permutation(const std::string& text) {
    auto segments = parse_blocks(text);
    std::erase_if(segments, [](const auto& b) { return b.empty(); });
    if (segments.empty()) throw std::invalid_argument("empty segmented permutation");
    std::vector<int> one_line;
    std::vector<int> alpha;
    for (const auto& seg : segments) {
        one_line.insert(one_line.end(), seg.begin(), seg.end());
        alpha.push_back(static_cast<int>(seg.size()));
    }
    return SegmentedPermutation(Perm(std::move(one_line)), std::move(alpha));
}

std::string format_segmented_permutation(const SegmentedPermutation& sp) {
    std::string out;
    for (int i = 1; i <= sp.segment_count(); ++i) {
        if (i > 1) out += " / ";
        auto seg = sp.segment(i);
        for (size_t j = 0; j < seg.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(seg[j]);
        }
    }
    return out;
}

}  // namespace skeinlab
