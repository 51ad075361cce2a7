#pragma once

#include "skeinlab/extalg.hpp"
#include "skeinlab/setpart.hpp"

namespace skeinlab {
namespace fermions {

// rho_B(f) = sum over i != j in B of xi_i (theta_j ⊙ f); for B = {i} the
// single term xi_i (theta_i ⊙ f).
Fermion rho_block(const std::vector<int>& block, const Fermion& f);
// psi_B = rho_B when |B| > 1, zero when |B| <= 1.
Fermion psi_block(const std::vector<int>& block, const Fermion& f);
Fermion psi_pair(const std::vector<int>& a, const std::vector<int>& b, const Fermion& f);

Fermion rho_partition(const SetPartition& pi, const Fermion& f);
Fermion psi_partition(const SetPartition& pi, const Fermion& f);

Fermion F(const SetPartition& pi);  // rho_pi(theta_1 ... theta_n)
Fermion f(const SetPartition& pi);  // (xi_1 + ... + xi_n) ⊙ F_pi

Fermion G(const SegmentedPermutation& sp);
Fermion g(const SegmentedPermutation& sp);

// Sum over the parabolic subgroup fixing the blocks of `subgroup`; signed
// variant weights by sign(w). Guarded: product of block factorials <= 1e7.
Fermion antisymmetrize(const SetPartition& subgroup, bool signed_sum, const Fermion& f);

Fermion tilde_F(const SegmentedPermutation& sp);
Fermion tilde_f(const SegmentedPermutation& sp);

// +1 for k = 0,3 mod 4 and -1 for k = 1,2 mod 4.
int epsilon_mod4(int k);

// Verifies the three-case relation between tilde_F of pi and of pi with n
// removed. See the module notes in README for the sign in the singleton case.
bool check_n_removal(const SetPartition& pi);

Fermion xi_sum(int n);
Fermion theta_sum(int n);

}  // namespace fermions
}  // namespace skeinlab
