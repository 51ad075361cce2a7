#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "skeinlab/extalg.hpp"
#include "skeinlab/linalg.hpp"
#include "skeinlab/setpart.hpp"

namespace skeinlab {
namespace skein {

// Exact linear combination of noncrossing set partitions of [n].
class NCVector {
public:
    explicit NCVector(int n) : n_(n) {}
    static NCVector basis_element(const SetPartition& pi);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<SetPartition, Rational>& terms() const { return terms_; }
    Rational coefficient(const SetPartition& pi) const;
    bool all_integer() const;

    NCVector& add_term(const SetPartition& pi, const Rational& c);
    friend NCVector operator+(const NCVector& a, const NCVector& b);
    friend NCVector operator-(const NCVector& a, const NCVector& b);
    friend NCVector operator*(const Rational& c, const NCVector& a);
    friend bool operator==(const NCVector& a, const NCVector& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    std::map<SetPartition, Rational> terms_;
};

bool is_almost_noncrossing(const SetPartition& pi);
// Indices i with s_i(pi) noncrossing (pi itself crossing).
std::vector<int> resolution_indices(const SetPartition& pi);

// Crossing resolution of an almost noncrossing partition at index i; the
// result is checked to agree across every valid index.
NCVector sigma(const SetPartition& pi, int i);

NCVector skein_si(int i, const NCVector& v);
NCVector skein_act(const Perm& w, const NCVector& v);

struct TwoBlockTerm {
    int coeff;  // +1 or -1
    std::vector<int> s;
    std::vector<int> t;
};
// Noncrossing resolution of the two-block partition {A / B} on the ordered
// set A ⊔ B inside [n].
std::vector<TwoBlockTerm> two_block_resolution(const std::vector<int>& a,
                                               const std::vector<int>& b, int n);

enum class PairPolicy {
    LexMin,        // crossing pair minimizing (min A, min B)
    MaxTangleDrop  // pair whose replacement drops the tangle the most
};

NCVector resolve_greedy(const SetPartition& pi, PairPolicy policy = PairPolicy::LexMin);
NCVector resolve_algebraic(const SetPartition& pi);

// Representing matrix in the given skein basis: column j holds the expansion
// of w acting on basis[j].
std::vector<std::vector<long long>> rep_matrix(const Perm& w,
                                               const std::vector<SetPartition>& basis);

// Cached noncrossing fermion bases {F_mu : mu in NC(n,k)}; concurrent reads
// after single initialization per (n,k).
const FermionExpander& nc_fermion_expander(int n, int k);
const std::vector<SetPartition>& nc_basis(int n, int k);

}  // namespace skein
}  // namespace skeinlab
