#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/fdr.hpp"
#include "skeinlab/fermions.hpp"
#include "skeinlab/linalg.hpp"
#include "skeinlab/numbers.hpp"
#include "skeinlab/skein.hpp"

using namespace skeinlab;

TEST_CASE("invariant generators") {
    auto gens = fdr::invariant_generators(3);
    CHECK(act(Perm::adjacent_transposition(3, 1), gens.delta) == gens.delta);
    CHECK(act(Perm::adjacent_transposition(3, 2), gens.theta) == gens.theta);
    CHECK(act(Perm::long_cycle(3), gens.xi) == gens.xi);
    CHECK(wedge(gens.theta, gens.theta).is_zero());
    CHECK(wedge(gens.xi, gens.xi).is_zero());
    CHECK(contract(gens.theta, gens.delta) == gens.xi);
}

TEST_CASE("ideal slice dimensions") {
    CHECK(fdr::ideal_slice_dimension(3, 0, 0) == 0);
    CHECK(fdr::ideal_slice_dimension(3, 1, 1) == 6);
    for (int n = 2; n <= 5; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                if (i + j < n) continue;
                mpz_class full = binomial(n, i) * binomial(n, j);
                CHECK(mpz_class(fdr::ideal_slice_dimension(n, i, j)) == full);
            }
}

TEST_CASE("bigraded dimensions match the closed form") {
    CHECK(fdr::fdr_dimension(3, 1, 1) == 3);
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                CHECK(fdr::fdr_dimension(n, i, j) == fdr::fdr_dimension_closed_form(n, i, j));
}

TEST_CASE("extreme bidegrees are Narayana with Catalan total") {
    for (int n = 1; n <= 5; ++n) {
        mpz_class total = 0;
        for (int k = 1; k <= n; ++k) {
            int d = fdr::fdr_dimension(n, n - k, k - 1);
            CHECK(mpz_class(d) == narayana(n, k));
            total += d;
        }
        CHECK(total == catalan(n));
    }
}

TEST_CASE("noncrossing fermions descend to a quotient basis") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) CHECK(fdr::check_basis_descends(n, k));
    CHECK(fdr::check_basis_descends(4, 4));  // all singletons: one-dimensional
}

TEST_CASE("basis descent detects a corrupted family") {
    // replace one f_pi by something inside the ideal slice
    const int n = 4, k = 2;
    auto gens = fdr::invariant_generators(n);
    std::vector<Fermion> span;
    for (const auto& m : bidegree_basis(n, {n - k - 1, k - 1}))
        span.push_back(wedge(gens.theta, Fermion::monomial(n, m.theta_mask(), m.xi_mask())));
    for (const auto& m : bidegree_basis(n, {n - k, k - 2}))
        span.push_back(wedge(gens.xi, Fermion::monomial(n, m.theta_mask(), m.xi_mask())));
    for (const auto& m : bidegree_basis(n, {n - k - 1, k - 2}))
        span.push_back(wedge(gens.delta, Fermion::monomial(n, m.theta_mask(), m.xi_mask())));
    std::vector<Fermion> cleaned;
    for (const auto& v : span)
        if (!v.is_zero()) cleaned.push_back(v);
    const int slice_dim = rank_of_fermions(cleaned);
    auto basis = skein::nc_basis(n, k);
    std::vector<Fermion> with_fs = cleaned;
    for (size_t t = 0; t + 1 < basis.size(); ++t) with_fs.push_back(fermions::f(basis[t]));
    with_fs.push_back(cleaned.front());  // the corrupted member
    CHECK(rank_of_fermions(with_fs) <
          slice_dim + static_cast<int>(basis.size()));
}

TEST_CASE("multiplication by theta is injective on the span") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) CHECK(fdr::check_theta_injectivity(n, k));

    Fermion f12 = fermions::f(parse_set_partition("1 2"));
    Fermion theta = fermions::theta_sum(2);
    CHECK_FALSE(wedge(theta, f12).is_zero());
}

TEST_CASE("orthogonality used in the quotient argument") {
    for (int n = 2; n <= 4; ++n) {
        auto gens = fdr::invariant_generators(n);
        Fermion xid = wedge(gens.xi, gens.delta);
        for (const auto& pi : enumerate_partitions(n)) {
            Fermion F = fermions::F(pi);
            for (uint32_t s = 0; s < (1u << n); ++s)
                for (uint32_t t = 0; t < (1u << n); ++t) {
                    Fermion m = wedge(xid, Fermion::monomial(n, s, t));
                    if (!m.is_zero()) CHECK(inner(F, m) == 0);
                }
        }
    }
}
