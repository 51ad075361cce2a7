#include "skeinlab/skein.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

#include "skeinlab/fermions.hpp"

namespace skeinlab {
namespace skein {

NCVector NCVector::basis_element(const SetPartition& pi) {
    NCVector v(pi.n());
    v.add_term(pi, 1);
    return v;
}

Rational NCVector::coefficient(const SetPartition& pi) const {
    auto it = terms_.find(pi);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool NCVector::all_integer() const {
    for (const auto& [pi, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

NCVector& NCVector::add_term(const SetPartition& pi, const Rational& c) {
    if (c == 0) return *this;
    if (pi.n() != n_) throw std::invalid_argument("ground-set size mismatch");
    if (!is_noncrossing(pi)) throw std::invalid_argument("NCVector keys must be noncrossing");
    auto [it, inserted] = terms_.emplace(pi, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

NCVector operator+(const NCVector& a, const NCVector& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("ground-set size mismatch");
    NCVector out = a;
    for (const auto& [pi, c] : b.terms_) out.add_term(pi, c);
    return out;
}

NCVector operator-(const NCVector& a, const NCVector& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("ground-set size mismatch");
    NCVector out = a;
    for (const auto& [pi, c] : b.terms_) out.add_term(pi, -c);
    return out;
}

NCVector operator*(const Rational& c, const NCVector& a) {
    NCVector out(a.n());
    if (c == 0) return out;
    for (const auto& [pi, v] : a.terms()) out.add_term(pi, c * v);
    return out;
}

std::vector<int> resolution_indices(const SetPartition& pi) {
    std::vector<int> out;
    if (is_noncrossing(pi)) return out;
    for (int i = 1; i < pi.n(); ++i) {
        SetPartition swapped = apply_perm(Perm::adjacent_transposition(pi.n(), i), pi);
        if (is_noncrossing(swapped)) out.push_back(i);
    }
    return out;
}

bool is_almost_noncrossing(const SetPartition& pi) {
    return !resolution_indices(pi).empty();
}

namespace {

std::vector<int> without(const std::vector<int>& block, int v) {
    std::vector<int> out;
    for (int x : block)
        if (x != v) out.push_back(x);
    return out;
}

std::vector<int> with(std::vector<int> block, int v) {
    block.push_back(v);
    std::sort(block.begin(), block.end());
    return block;
}

SetPartition replace_pair(const SetPartition& pi, int bi, int bj,
                          std::vector<int> first, std::vector<int> second) {
    std::vector<std::vector<int>> blocks;
    for (int t = 0; t < pi.block_count(); ++t)
        if (t != bi && t != bj) blocks.push_back(pi.blocks()[t]);
    blocks.push_back(std::move(first));
    blocks.push_back(std::move(second));
    return SetPartition(pi.n(), std::move(blocks));
}

NCVector sigma_via(const SetPartition& pi, int i) {
    const int bi = pi.block_index_of(i);
    const int bj = pi.block_index_of(i + 1);
    if (bi == bj) throw std::invalid_argument("i and i+1 share a block");
    const auto& block_i = pi.blocks()[bi];
    const auto& block_j = pi.blocks()[bj];
    if (block_i.size() < 2 || block_j.size() < 2)
        throw std::invalid_argument("crossed blocks must have size at least 2");

    SetPartition pi1 = replace_pair(pi, bi, bj, with(without(block_i, i), i + 1),
                                    with(without(block_j, i + 1), i));
    std::vector<int> merged;
    for (int v : block_i)
        if (v != i) merged.push_back(v);
    for (int v : block_j)
        if (v != i + 1) merged.push_back(v);
    std::sort(merged.begin(), merged.end());
    SetPartition pi2 = replace_pair(pi, bi, bj, merged, {i, i + 1});

    NCVector out(pi.n());
    out.add_term(pi1, 1);
    out.add_term(pi2, 1);
    if (block_i.size() > 2)
        out.add_term(replace_pair(pi, bi, bj, without(block_i, i), with(block_j, i)), -1);
    if (block_j.size() > 2)
        out.add_term(replace_pair(pi, bi, bj, without(block_j, i + 1), with(block_i, i + 1)), -1);
    return out;
}

}  // namespace

NCVector sigma(const SetPartition& pi, int i) {
    auto valid = resolution_indices(pi);
    if (std::find(valid.begin(), valid.end(), i) == valid.end())
        throw std::invalid_argument("index does not resolve the partition");
    NCVector result = sigma_via(pi, i);
    for (int j : valid)
        if (j != i && !(sigma_via(pi, j) == result))
            throw std::logic_error("sigma disagrees across resolution indices");
    return result;
}

NCVector skein_si(int i, const NCVector& v) {
    const int n = v.n();
    if (i < 1 || i >= n) throw std::invalid_argument("s_i needs 1 <= i <= n-1");
    Perm si = Perm::adjacent_transposition(n, i);
    NCVector out(n);
    for (const auto& [pi, c] : v.terms()) {
        SetPartition swapped = apply_perm(si, pi);
        if (is_noncrossing(swapped)) {
            out.add_term(swapped, -c);
        } else {
            out = out + c * sigma_via(swapped, i);
        }
    }
    return out;
}

NCVector skein_act(const Perm& w, const NCVector& v) {
    if (w.size() != v.n()) throw std::invalid_argument("size mismatch");
    NCVector out = v;
    auto word = w.adjacent_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = skein_si(*it, out);
    return out;
}

std::vector<TwoBlockTerm> two_block_resolution(const std::vector<int>& a,
                                               const std::vector<int>& b, int n) {
    CyclicDecomposition dec = cyclic_decomposition(a, b, n);
    const int m = dec.m();
    std::vector<TwoBlockTerm> out;
    if (m < 2) {
        out.push_back({1, a, b});
        return out;
    }
    // Interleaved cyclic sequence (A_1, B_1, ..., A_m, B_m); candidate blocks
    // are unions of complementary cyclic arcs.
    std::vector<const std::vector<int>*> seq;
    for (int t = 0; t < m; ++t) {
        seq.push_back(&dec.a_intervals[t]);
        seq.push_back(&dec.b_intervals[t]);
    }
    const int len = 2 * m;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (int start = 0; start < len; ++start) {
        for (int take = 1; take < len; ++take) {
            std::vector<int> s, t;
            for (int p = 0; p < len; ++p) {
                const auto& chunk = *seq[(start + p) % len];
                auto& dest = (p < take) ? s : t;
                dest.insert(dest.end(), chunk.begin(), chunk.end());
            }
            std::sort(s.begin(), s.end());
            std::sort(t.begin(), t.end());
            if (s > t) std::swap(s, t);
            if (!seen.insert({s, t}).second) continue;
            if (s.size() < 2 || t.size() < 2) continue;
            out.push_back({(take % 2) ? 1 : -1, std::move(s), std::move(t)});
        }
    }
    return out;
}

namespace {

std::pair<int, int> select_crossing_pair(const SetPartition& pi, PairPolicy policy) {
    auto pairs = crossing_pairs(pi);
    if (pairs.empty()) throw std::logic_error("no crossing pair");
    if (policy == PairPolicy::LexMin) return pairs.front();  // blocks sorted by min
    int best_tangle = -1;
    std::pair<int, int> best = pairs.front();
    for (const auto& [bi, bj] : pairs) {
        // Count crossings involving the pair; replacing them removes at least
        // the pair's own crossing and can only reduce third-party crossings.
        int involved = 0;
        for (const auto& [ci, cj] : pairs)
            if (ci == bi || cj == bi || ci == bj || cj == bj) ++involved;
        if (involved > best_tangle) {
            best_tangle = involved;
            best = {bi, bj};
        }
    }
    return best;
}

}  // namespace

NCVector resolve_greedy(const SetPartition& pi, PairPolicy policy) {
    if (is_noncrossing(pi)) return NCVector::basis_element(pi);
    auto [bi, bj] = select_crossing_pair(pi, policy);
    const auto& a = pi.blocks()[bi];
    const auto& b = pi.blocks()[bj];
    std::vector<std::vector<int>> rest;
    for (int t = 0; t < pi.block_count(); ++t)
        if (t != bi && t != bj) rest.push_back(pi.blocks()[t]);
    NCVector out(pi.n());
    for (const auto& term : two_block_resolution(a, b, pi.n())) {
        std::vector<std::vector<int>> blocks = rest;
        blocks.push_back(term.s);
        blocks.push_back(term.t);
        SetPartition next(pi.n(), std::move(blocks));
        if (tangle(next) >= tangle(pi))
            throw std::logic_error("tangle failed to decrease");
        out = out + Rational(term.coeff) * resolve_greedy(next, policy);
    }
    return out;
}

namespace {

struct BasisCacheEntry {
    std::vector<SetPartition> basis;
    std::unique_ptr<FermionExpander> expander;
    std::once_flag once;
};

BasisCacheEntry& basis_cache(int n, int k) {
    static std::mutex map_mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<BasisCacheEntry>> cache;
    std::lock_guard<std::mutex> lock(map_mutex);
    auto& slot = cache[{n, k}];
    if (!slot) slot = std::make_unique<BasisCacheEntry>();
    return *slot;
}

BasisCacheEntry& initialized_cache(int n, int k) {
    BasisCacheEntry& entry = basis_cache(n, k);
    std::call_once(entry.once, [&] {
        entry.basis = enumerate_partitions(n, k, std::nullopt, true);
        std::vector<Fermion> fs;
        fs.reserve(entry.basis.size());
        for (const auto& pi : entry.basis) fs.push_back(fermions::F(pi));
        entry.expander = std::make_unique<FermionExpander>(std::move(fs));
    });
    return entry;
}

}  // namespace

const std::vector<SetPartition>& nc_basis(int n, int k) {
    return initialized_cache(n, k).basis;
}

const FermionExpander& nc_fermion_expander(int n, int k) {
    return *initialized_cache(n, k).expander;
}

NCVector resolve_algebraic(const SetPartition& pi) {
    const int n = pi.n();
    if (n > 9)
        throw std::invalid_argument(
            "algebraic resolution is limited to n <= 9 (use the greedy route)");
    const int k = pi.block_count();
    const auto& basis = nc_basis(n, k);
    const auto& expander = nc_fermion_expander(n, k);
    std::vector<Rational> coeffs = expander.expand(fermions::F(pi));
    NCVector out(n);
    for (size_t t = 0; t < basis.size(); ++t) {
        if (coeffs[t] == 0) continue;
        if (coeffs[t].get_den() != 1)
            throw std::logic_error("resolution produced a non-integer coefficient");
        out.add_term(basis[t], coeffs[t]);
    }
    return out;
}

std::vector<std::vector<long long>> rep_matrix(const Perm& w,
                                               const std::vector<SetPartition>& basis) {
    std::map<SetPartition, size_t> index;
    for (size_t j = 0; j < basis.size(); ++j) index[basis[j]] = j;
    std::vector<std::vector<long long>> mat(basis.size(),
                                            std::vector<long long>(basis.size(), 0));
    for (size_t j = 0; j < basis.size(); ++j) {
        NCVector image = skein_act(w, NCVector::basis_element(basis[j]));
        for (const auto& [pi, c] : image.terms()) {
            auto it = index.find(pi);
            if (it == index.end())
                throw std::invalid_argument("action leaves the given basis span");
            if (c.get_den() != 1) throw std::logic_error("non-integer skein coefficient");
            mat[it->second][j] = static_cast<long long>(c.get_num().get_si());
        }
    }
    return mat;
}

}  // namespace skein
}  // namespace skeinlab
