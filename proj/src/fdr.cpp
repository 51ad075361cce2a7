#include "skeinlab/fdr.hpp"

#include <stdexcept>

#include "skeinlab/fermions.hpp"
#include "skeinlab/linalg.hpp"
#include "skeinlab/numbers.hpp"
#include "skeinlab/skein.hpp"

namespace skeinlab {
namespace fdr {

InvariantGenerators invariant_generators(int n) {
    Fermion delta(n);
    for (int i = 1; i <= n; ++i)
        delta = delta + wedge(theta_gen(n, i), xi_gen(n, i));
    return {fermions::theta_sum(n), fermions::xi_sum(n), delta};
}

namespace {

// theta * (monomials of d1) ∪ xi * (d2) ∪ delta * (d3), skipping invalid
// bidegrees.
std::vector<Fermion> ideal_slice_spanning_set(int n, int i, int j) {
    auto gens = invariant_generators(n);
    std::vector<Fermion> out;
    auto push_products = [&](const Fermion& g, Bidegree d) {
        if (d.theta < 0 || d.xi < 0 || d.theta > n || d.xi > n) return;
        for (const auto& m : bidegree_basis(n, d)) {
            Fermion prod = wedge(g, Fermion::monomial(n, m.theta_mask(), m.xi_mask()));
            if (!prod.is_zero()) out.push_back(std::move(prod));
        }
    };
    push_products(gens.theta, {i - 1, j});
    push_products(gens.xi, {i, j - 1});
    push_products(gens.delta, {i - 1, j - 1});
    return out;
}

}  // namespace

int ideal_slice_dimension(int n, int i, int j) {
    if (i < 0 || j < 0 || i > n || j > n) throw std::invalid_argument("bidegree out of range");
    auto span = ideal_slice_spanning_set(n, i, j);
    return rank_of_fermions(span);
}

int fdr_dimension(int n, int i, int j) {
    if (i < 0 || j < 0 || i > n || j > n) return 0;
    long long ambient = mpz_class(binomial(n, i) * binomial(n, j)).get_si();
    return static_cast<int>(ambient) - ideal_slice_dimension(n, i, j);
}

long long fdr_dimension_closed_form(int n, int i, int j) {
    if (i < 0 || j < 0 || i + j >= n) return 0;
    mpz_class v = binomial(n - 1, i) * binomial(n - 1, j) -
                  binomial(n - 1, i - 1) * binomial(n - 1, j - 1);
    return v.get_si();
}

bool check_basis_descends(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    auto span = ideal_slice_spanning_set(n, n - k, k - 1);
    const int slice_dim = rank_of_fermions(span);
    for (const auto& pi : skein::nc_basis(n, k)) span.push_back(fermions::f(pi));
    const int joint = rank_of_fermions(span);
    const long long nar = narayana(n, k).get_si();
    return joint == slice_dim + nar;
}

bool check_theta_injectivity(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    Fermion theta = fermions::theta_sum(n);
    std::vector<Fermion> images;
    for (const auto& pi : skein::nc_basis(n, k))
        images.push_back(wedge(theta, fermions::f(pi)));
    return rank_of_fermions(images) == narayana(n, k).get_si();
}

}  // namespace fdr
}  // namespace skeinlab
