#pragma once

#include <map>
#include <vector>

#include "skeinlab/extalg.hpp"

namespace skeinlab {

// Destructive Gaussian elimination; pivots chosen by smallest combined
// numerator/denominator bit length to keep intermediate entries small.
int rank_of_rows(std::vector<std::vector<Rational>>& rows);

int rank_of_fermions(const std::vector<Fermion>& vectors);

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> m);

// Expands targets in a fixed linearly independent set of fermions.  Solves
// through a square pivot submatrix factored once, then verifies the full
// expansion, so repeated expansions against one basis are cheap.
class FermionExpander {
public:
    explicit FermionExpander(std::vector<Fermion> basis);

    size_t basis_size() const { return basis_.size(); }
    // Coefficients c with target = sum c_i basis_i; throws if not in span.
    std::vector<Rational> expand(const Fermion& target) const;

private:
    std::vector<Fermion> basis_;
    std::vector<ExtMonomial> pivot_monomials_;
    std::vector<std::vector<Rational>> solve_;  // inverse of the pivot submatrix
};

}  // namespace skeinlab
