#pragma once

#include "skeinlab/extalg.hpp"

namespace skeinlab {
namespace fdr {

struct InvariantGenerators {
    Fermion theta;  // theta_1 + ... + theta_n
    Fermion xi;     // xi_1 + ... + xi_n
    Fermion delta;  // theta_1 xi_1 + ... + theta_n xi_n
};

InvariantGenerators invariant_generators(int n);

// Rank of theta * (i-1,j) + xi * (i,j-1) + delta * (i-1,j-1) inside the
// bidegree (i,j) slice.
int ideal_slice_dimension(int n, int i, int j);

int fdr_dimension(int n, int i, int j);
// C(n-1,i)C(n-1,j) - C(n-1,i+1)C(n-1,j+1) for i+j < n, else 0.
long long fdr_dimension_closed_form(int n, int i, int j);

bool check_basis_descends(int n, int k);
bool check_theta_injectivity(int n, int k);

}  // namespace fdr
}  // namespace skeinlab
