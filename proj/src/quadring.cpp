#include "skeinlab/quadring.hpp"

#include <algorithm>
#include <stdexcept>

#include "skeinlab/fermions.hpp"
#include "skeinlab/numbers.hpp"

namespace skeinlab {
namespace quadring {

DisjointMonomial::DisjointMonomial(int n, std::vector<std::vector<int>> supports)
    : n_(n), supports_(std::move(supports)) {
    if (n < 0 || n > 16) throw std::invalid_argument("n out of range");
    std::vector<char> seen(n + 1, 0);
    for (auto& s : supports_) {
        if (s.empty()) throw std::invalid_argument("empty support");
        std::sort(s.begin(), s.end());
        for (int v : s) {
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("supports must be disjoint subsets of {1..n}");
            seen[v] = 1;
        }
    }
    std::sort(supports_.begin(), supports_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

int DisjointMonomial::total_size() const {
    int total = 0;
    for (const auto& s : supports_) total += static_cast<int>(s.size());
    return total;
}

bool DisjointMonomial::all_noncrossing() const {
    for (size_t i = 0; i < supports_.size(); ++i)
        for (size_t j = i + 1; j < supports_.size(); ++j)
            if (subsets_cross(supports_[i], supports_[j])) return false;
    return true;
}

namespace {

int monomial_tangle(const DisjointMonomial& m) {
    int t = 0;
    for (size_t i = 0; i < m.supports().size(); ++i)
        for (size_t j = i + 1; j < m.supports().size(); ++j)
            if (subsets_cross(m.supports()[i], m.supports()[j])) ++t;
    return t;
}

std::pair<size_t, size_t> pick_pair(const DisjointMonomial& m, skein::PairPolicy policy) {
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < m.supports().size(); ++i)
        for (size_t j = i + 1; j < m.supports().size(); ++j)
            if (subsets_cross(m.supports()[i], m.supports()[j])) pairs.push_back({i, j});
    if (policy == skein::PairPolicy::LexMin) return pairs.front();
    size_t best_involved = 0, best_index = 0;
    for (size_t t = 0; t < pairs.size(); ++t) {
        size_t involved = 0;
        for (const auto& [ci, cj] : pairs)
            if (ci == pairs[t].first || cj == pairs[t].first || ci == pairs[t].second ||
                cj == pairs[t].second)
                ++involved;
        if (involved > best_involved) {
            best_involved = involved;
            best_index = t;
        }
    }
    return pairs[best_index];
}

}  // namespace

Reduction reduce(const DisjointMonomial& m, skein::PairPolicy policy) {
    if (m.all_noncrossing()) return {{m, Rational(1)}};
    auto [bi, bj] = pick_pair(m, policy);
    std::vector<std::vector<int>> rest;
    for (size_t t = 0; t < m.supports().size(); ++t)
        if (t != bi && t != bj) rest.push_back(m.supports()[t]);
    Reduction out;
    for (const auto& term :
         skein::two_block_resolution(m.supports()[bi], m.supports()[bj], m.n())) {
        std::vector<std::vector<int>> supports = rest;
        supports.push_back(term.s);
        supports.push_back(term.t);
        DisjointMonomial next(m.n(), std::move(supports));
        if (monomial_tangle(next) >= monomial_tangle(m))
            throw std::logic_error("tangle failed to decrease");
        for (const auto& [mono, c] : reduce(next, policy)) {
            auto [it, inserted] = out.emplace(mono, Rational(term.coeff) * c);
            if (!inserted) {
                it->second += Rational(term.coeff) * c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

Fermion block_operator_evaluation(const DisjointMonomial& m) {
    Fermion out = theta_product(m.n());
    for (const auto& s : m.supports()) out = fermions::rho_block(s, out);
    return out;
}

std::vector<std::vector<mpz_class>> hilbert_series(int n, Quotient which) {
    if (n < 0 || n > 16) throw std::invalid_argument("n out of range");
    std::vector<std::vector<mpz_class>> table(n + 1, std::vector<mpz_class>(n + 1, 0));
    for (int m = 0; m <= n; ++m)
        for (int k = 0; k <= n; ++k)
            table[m][k] = binomial(n, m) * (which == Quotient::DisjointOnly
                                                ? stirling2(m, k)
                                                : narayana(m, k));
    return table;
}

std::vector<std::vector<mpz_class>> hilbert_series_enumerated(int n, Quotient which) {
    if (n < 0 || n > 12)
        throw std::invalid_argument("enumeration cross-check limited to n <= 12");
    std::vector<std::vector<mpz_class>> table(n + 1, std::vector<mpz_class>(n + 1, 0));
    // Basis monomials with support union U are the set partitions of U
    // (noncrossing ones for R/(I+J)); loop over U through its sorted list.
    for (uint32_t u = 0; u < (1u << n); ++u) {
        std::vector<int> elems;
        for (int i = 1; i <= n; ++i)
            if (u & (1u << (i - 1))) elems.push_back(i);
        const int m = static_cast<int>(elems.size());
        for (const auto& pi :
             enumerate_partitions(m, std::nullopt, std::nullopt, false)) {
            std::vector<std::vector<int>> supports;
            for (const auto& b : pi.blocks()) {
                std::vector<int> s;
                for (int v : b) s.push_back(elems[v - 1]);
                supports.push_back(std::move(s));
            }
            DisjointMonomial mono(n, std::move(supports));
            if (which == Quotient::DisjointNoncrossing && !mono.all_noncrossing()) continue;
            table[m][mono.support_count()] += 1;
        }
    }
    return table;
}

}  // namespace quadring
}  // namespace skeinlab
