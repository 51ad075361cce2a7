#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skeinlab/extalg.hpp"
#include "skeinlab/numbers.hpp"

using namespace skeinlab;

namespace {

Fermion fm(const std::string& text, int n) { return parse_fermion(text, n); }

}  // namespace

TEST_CASE("wedge kills repeated generators") {
    Fermion t1 = theta_gen(3, 1);
    CHECK(wedge(t1, t1).is_zero());
    CHECK(wedge(xi_gen(3, 2), xi_gen(3, 2)).is_zero());
}

TEST_CASE("wedge anticommutes on generators") {
    CHECK(wedge(theta_gen(2, 2), theta_gen(2, 1)) == fm("-t1 t2", 2));
    CHECK(wedge(theta_gen(2, 1), theta_gen(2, 2)) == fm("t1 t2", 2));
}

TEST_CASE("xi passing a theta block collects an even sign") {
    Fermion t13 = wedge(theta_gen(3, 1), theta_gen(3, 3));
    CHECK(wedge(xi_gen(3, 2), t13) == fm("t1 t3 x2", 3));
}

TEST_CASE("wedge is associative and bilinear on random inputs") {
    std::mt19937 gen(7);
    auto rnd = [&](int n) {
        Fermion f(n);
        std::uniform_int_distribution<uint32_t> mask(0, (1u << n) - 1);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int t = 0; t < 3; ++t) f.add_term(ExtMonomial(n, mask(gen), mask(gen)), coeff(gen));
        return f;
    };
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + trial % 5;
        Fermion a = rnd(n), b = rnd(n), c = rnd(n);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        CHECK(wedge(a + b, c) == wedge(a, c) + wedge(b, c));
    }
}

TEST_CASE("contraction on generators") {
    Fermion t12 = wedge(theta_gen(2, 1), theta_gen(2, 2));
    CHECK(contract(theta_gen(2, 1), t12) == theta_gen(2, 2));
    CHECK(contract(theta_gen(2, 2), t12) == -theta_gen(2, 1));
    CHECK(contract(theta_gen(2, 1), xi_gen(2, 1)).is_zero());
}

TEST_CASE("worked contraction with a xi sum") {
    // (x1+x2+x3) ⊙ (x3 x2 t3 - x1 x2 t1) = x2 t3 - x3 t3 - x2 t1 + x1 t1
    Fermion target = wedge(wedge(xi_gen(3, 3), xi_gen(3, 2)), theta_gen(3, 3)) -
                     wedge(wedge(xi_gen(3, 1), xi_gen(3, 2)), theta_gen(3, 1));
    Fermion xsum = xi_gen(3, 1) + xi_gen(3, 2) + xi_gen(3, 3);
    Fermion expected = wedge(xi_gen(3, 2), theta_gen(3, 3)) -
                       wedge(xi_gen(3, 3), theta_gen(3, 3)) -
                       wedge(xi_gen(3, 2), theta_gen(3, 1)) +
                       wedge(xi_gen(3, 1), theta_gen(3, 1));
    CHECK(contract(xsum, target) == expected);
}

TEST_CASE("inner product is orthonormal on monomials") {
    Fermion m = fm("t1 x2", 2);
    CHECK(inner(m, m) == 1);
    CHECK(inner(theta_gen(2, 1), xi_gen(2, 1)) == 0);
    CHECK(inner(fm("3/2*t1", 2), fm("4*t1", 2)) == 6);
}

TEST_CASE("adjointness of wedge and contraction") {
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> nd(1, 5), coeff(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = nd(gen);
        std::uniform_int_distribution<uint32_t> mask(0, (1u << n) - 1);
        auto rnd = [&] {
            Fermion f(n);
            for (int t = 0; t < 3; ++t)
                f.add_term(ExtMonomial(n, mask(gen), mask(gen)), coeff(gen));
            return f;
        };
        Fermion f = rnd(), g = rnd(), h = rnd();
        CHECK(inner(wedge(f, g), h) == inner(g, contract(f, h)));
    }
}

TEST_CASE("diagonal action relabels with sign") {
    Perm s1 = Perm::adjacent_transposition(2, 1);
    Fermion t12 = fm("t1 t2", 2);
    CHECK(act(s1, t12) == fm("-t1 t2", 2));
    CHECK(act(Perm::identity(2), t12) == t12);

    std::mt19937 gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 5;
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), gen);
        Perm w(v);
        std::shuffle(v.begin(), v.end(), gen);
        Perm u(v);
        std::uniform_int_distribution<uint32_t> mask(0, (1u << n) - 1);
        Fermion f(n);
        for (int t = 0; t < 3; ++t) f.add_term(ExtMonomial(n, mask(gen), mask(gen)), 1 + t);
        CHECK(act(u, act(w, f)) == act(u * w, f));
        Fermion g = act(w, f);
        CHECK(inner(g, g) == inner(f, f));
    }
}

TEST_CASE("bidegree projection and substitution") {
    Fermion f = theta_gen(2, 1) + fm("t1 x2", 2);
    CHECK(bidegree_component(f, {1, 0}) == theta_gen(2, 1));
    CHECK(bidegree_component(f, {1, 1}) == fm("t1 x2", 2));
    CHECK(bidegree_component(f, {0, 1}).is_zero());
    CHECK(bidegree_component(f, {1, 0}) + bidegree_component(f, {1, 1}) == f);

    Fermion g = theta_gen(1, 1) + xi_gen(1, 1);
    CHECK(substitute_zero(g, {true, 1}) == theta_gen(1, 1));
    CHECK(substitute_zero(substitute_zero(g, {true, 1}), {true, 1}) == theta_gen(1, 1));
    CHECK(substitute_zero(bidegree_component(Fermion::zero(2), {1, 1}), {false, 1}).is_zero());
}

TEST_CASE("bidegree slice dimensions follow binomials") {
    for (int n = 0; n <= 6; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                mpz_class expected = binomial(n, i) * binomial(n, j);
                CHECK(mpz_class(static_cast<long>(bidegree_basis(n, {i, j}).size())) == expected);
            }
}

TEST_CASE("rank guard rejects oversized alphabets") {
    CHECK_THROWS(Fermion(17));
    CHECK_THROWS(ExtMonomial(20, 1, 1));
    CHECK_NOTHROW(Fermion(16));
}

TEST_CASE("mismatched ranks are rejected") {
    CHECK_THROWS(wedge(theta_gen(2, 1), theta_gen(3, 1)));
    CHECK_THROWS(contract(theta_gen(2, 1), theta_gen(3, 1)));
    CHECK_THROWS(inner(theta_gen(2, 1), theta_gen(3, 1)));
    CHECK_THROWS(act(Perm::identity(3), theta_gen(2, 1)));
}

TEST_CASE("format and parse round trip") {
    CHECK(format_fermion(Fermion::zero(3)) == "0");
    CHECK(format_fermion(fm("3/2 * t1 t3 x2", 3)) == "3/2*t1 t3 x2");
    CHECK(format_fermion(fm("-t1 - 2*x1", 1)) == "-2*x1 - t1");
    std::mt19937 gen(17);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 8;
        std::uniform_int_distribution<uint32_t> mask(0, (1u << n) - 1);
        std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
        Fermion f(n);
        for (int t = 0; t < 4; ++t) {
            Rational c(num(gen), den(gen));
            c.canonicalize();
            f.add_term(ExtMonomial(n, mask(gen), mask(gen)), c);
        }
        CHECK(parse_fermion(format_fermion(f), n) == f);
    }
}
