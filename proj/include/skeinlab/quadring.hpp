#pragma once

#include <gmpxx.h>
#include <map>
#include <vector>

#include "skeinlab/extalg.hpp"
#include "skeinlab/setpart.hpp"
#include "skeinlab/skein.hpp"

namespace skeinlab {
namespace quadring {

// Product of variables y_B over pairwise disjoint nonempty supports; the
// commutative normal form stores supports sorted by minimum element.
class DisjointMonomial {
public:
    DisjointMonomial(int n, std::vector<std::vector<int>> supports);

    int n() const { return n_; }
    int support_count() const { return static_cast<int>(supports_.size()); }
    int total_size() const;
    const std::vector<std::vector<int>>& supports() const { return supports_; }
    bool all_noncrossing() const;

    friend bool operator<(const DisjointMonomial& a, const DisjointMonomial& b) {
        return a.supports_ < b.supports_;
    }
    friend bool operator==(const DisjointMonomial& a, const DisjointMonomial& b) {
        return a.n_ == b.n_ && a.supports_ == b.supports_;
    }

private:
    int n_;
    std::vector<std::vector<int>> supports_;
};

using Reduction = std::map<DisjointMonomial, Rational>;

// Rewrites crossing support pairs until every pair is noncrossing; the
// result is the unique expansion in the disjoint-noncrossing basis.
Reduction reduce(const DisjointMonomial& m,
                 skein::PairPolicy policy = skein::PairPolicy::LexMin);

// y_{B_1}...y_{B_k} acting on theta_1...theta_n through the block operators.
Fermion block_operator_evaluation(const DisjointMonomial& m);

enum class Quotient { DisjointOnly, DisjointNoncrossing };  // R/J and R/(I+J)

// Closed-form bigraded Hilbert table: entry [m][k] is the coefficient of
// q^m t^k (y_B has bidegree (|B|, 1)).
std::vector<std::vector<mpz_class>> hilbert_series(int n, Quotient which);
// Independent cross-check counting basis monomials one by one.
std::vector<std::vector<mpz_class>> hilbert_series_enumerated(int n, Quotient which);

}  // namespace quadring
}  // namespace skeinlab
