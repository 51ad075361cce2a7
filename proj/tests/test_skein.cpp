#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skeinlab/fermions.hpp"
#include "skeinlab/numbers.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/verify.hpp"

using namespace skeinlab;
using namespace skeinlab::skein;

namespace {

SetPartition sp(const std::string& text) { return parse_set_partition(text); }

NCVector nc(int n, std::initializer_list<std::pair<int, const char*>> terms) {
    NCVector v(n);
    for (const auto& [c, text] : terms) v.add_term(parse_set_partition(text, n), c);
    return v;
}

}  // namespace

TEST_CASE("sigma on the basic chord crossing") {
    CHECK(sigma(sp("1 3 / 2 4"), 1) == nc(4, {{1, "1 4 / 2 3"}, {1, "1 2 / 3 4"}}));
    CHECK(sigma(sp("1 3 / 2 4"), 3) == sigma(sp("1 3 / 2 4"), 1));
}

TEST_CASE("sigma with a large block") {
    CHECK(sigma(sp("1 3 5 / 2 4"), 3) ==
          nc(5, {{1, "1 4 5 / 2 3"}, {1, "1 2 5 / 3 4"}, {-1, "1 5 / 2 3 4"}}));
}

TEST_CASE("sigma preconditions") {
    CHECK_THROWS(sigma(sp("1 2 / 3 4"), 1));      // already noncrossing
    CHECK_THROWS(sigma(sp("1 3 5 / 2 4"), 1));    // s_1 image still crossing
    CHECK_THROWS(sigma(sp("1 3 5 / 2 4"), 4));
    CHECK(resolution_indices(sp("1 3 5 / 2 4")) == std::vector<int>{2, 3});
    CHECK(resolution_indices(sp("1 3 / 2 4")) == std::vector<int>{1, 2, 3});
    CHECK(is_almost_noncrossing(sp("1 3 / 2 4")));
    CHECK_FALSE(is_almost_noncrossing(sp("1 2 / 3 4")));
}

TEST_CASE("skein generator action") {
    CHECK(skein_si(2, NCVector::basis_element(sp("1 2 / 3 4"))) ==
          nc(4, {{1, "1 4 / 2 3"}, {1, "1 2 / 3 4"}}));
    // i ~ i+1 in pi gives -pi
    CHECK(skein_si(1, NCVector::basis_element(sp("1 2 / 3 4"))) ==
          nc(4, {{-1, "1 2 / 3 4"}}));

    std::mt19937 gen(41);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 5;
        auto basis = enumerate_partitions(n, std::nullopt, std::nullopt, true);
        NCVector v(n);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1);
        std::uniform_int_distribution<int> coeff(-2, 2);
        for (int t = 0; t < 3; ++t) v.add_term(basis[pick(gen)], coeff(gen));
        for (int i = 1; i < n; ++i) CHECK(skein_si(i, skein_si(i, v)) == v);
    }
}

TEST_CASE("skein action matches the long cycle example") {
    Perm c = Perm::long_cycle(6);
    NCVector result = skein_act(c, NCVector::basis_element(sp("1 5 6 / 2 4 / 3")));
    CHECK(result == nc(6, {{-1, "1 2 6 / 3 5 / 4"}}));
}

TEST_CASE("long element acts by a global sign") {
    Perm w0 = Perm::long_element(5);
    Rational s(((5 * 4 / 2) % 2) ? -1 : 1);
    for (const auto& pi : enumerate_partitions(5, std::nullopt, std::nullopt, true)) {
        NCVector lhs = skein_act(w0, NCVector::basis_element(pi));
        CHECK(lhs == s * NCVector::basis_element(apply_perm(w0, pi)));
    }
}

TEST_CASE("local symmetries") {
    for (const auto& pi : enumerate_partitions(5, std::nullopt, std::nullopt, true)) {
        std::vector<int> v{1, 2, 3, 4, 5};
        do {
            Perm w(v);
            SetPartition image = apply_perm(w, pi);
            if (!is_noncrossing(image)) continue;
            CHECK(skein_act(w, NCVector::basis_element(pi)) ==
                  Rational(w.sign()) * NCVector::basis_element(image));
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("coxeter relations for the skein action") {
    for (int n = 2; n <= 5; ++n)
        CHECK(verify::coxeter_relations_hold(
            n, [](int i, const NCVector& v) { return skein_si(i, v); }));
}

TEST_CASE("a sign flip breaks the coxeter relations") {
    auto broken = [](int i, const NCVector& v) {
        NCVector out(v.n());
        Perm si = Perm::adjacent_transposition(v.n(), i);
        for (const auto& [pi, c] : v.terms()) {
            SetPartition swapped = apply_perm(si, pi);
            if (is_noncrossing(swapped)) {
                out.add_term(swapped, c);  // wrong sign on the first branch
            } else {
                out = out + c * sigma(swapped, i);
            }
        }
        return out;
    };
    CHECK_FALSE(verify::coxeter_relations_hold(4, broken));
}

TEST_CASE("operator identity for almost noncrossing partitions") {
    for (const auto& pi : enumerate_partitions(5)) {
        auto indices = resolution_indices(pi);
        for (int i : indices) {
            NCVector res = sigma(pi, i);
            Fermion total = fermions::F(pi);
            for (const auto& [mu, c] : res.terms()) total = total + c * fermions::F(mu);
            CHECK(total.is_zero());
        }
    }
}

TEST_CASE("two-block resolution") {
    auto terms = two_block_resolution({1, 3}, {2, 4}, 4);
    REQUIRE(terms.size() == 2);
    for (const auto& t : terms) CHECK(t.coeff == -1);

    auto single = two_block_resolution({1, 2}, {3, 4}, 4);
    REQUIRE(single.size() == 1);
    CHECK(single[0].coeff == 1);

    // the 16-element example resolves into 12 signed terms, six of each sign
    auto big = two_block_resolution({1, 2, 4, 8, 9, 10, 12, 13, 14, 15, 16},
                                    {3, 5, 6, 7, 11}, 16);
    CHECK(big.size() == 12);
    int plus = 0, minus = 0;
    for (const auto& t : big) (t.coeff > 0 ? plus : minus)++;
    CHECK(plus == 6);
    CHECK(minus == 6);
}

TEST_CASE("resolution fixed points and chord example") {
    CHECK(resolve_greedy(sp("1 2 / 3 4")) == nc(4, {{1, "1 2 / 3 4"}}));
    CHECK(resolve_algebraic(sp("1 2 / 3 4")) == nc(4, {{1, "1 2 / 3 4"}}));
    NCVector expected = nc(4, {{-1, "1 2 / 3 4"}, {-1, "1 4 / 2 3"}});
    CHECK(resolve_greedy(sp("1 3 / 2 4")) == expected);
    CHECK(resolve_algebraic(sp("1 3 / 2 4")) == expected);
}

TEST_CASE("asterisk of order four") {
    NCVector res = resolve_algebraic(sp("1 5 / 2 6 / 3 7 / 4 8"));
    CHECK(res == resolve_greedy(sp("1 5 / 2 6 / 3 7 / 4 8")));
    int twos = 0, ones = 0;
    for (const auto& [mu, c] : res.terms()) {
        CHECK(c.get_den() == 1);
        mpz_class a = abs(c.get_num());
        if (a == 2)
            ++twos;
        else if (a == 1)
            ++ones;
        else
            CHECK(false);
    }
    CHECK(res.terms().size() == 14);
    CHECK(twos == 2);
    CHECK(ones == 12);
}

TEST_CASE("greedy equals algebraic over all partitions of six") {
    for (const auto& pi : enumerate_partitions(6)) {
        NCVector alg = resolve_algebraic(pi);
        CHECK(alg.all_integer());
        CHECK(resolve_greedy(pi, PairPolicy::LexMin) == alg);
        CHECK(resolve_greedy(pi, PairPolicy::MaxTangleDrop) == alg);
        if (is_noncrossing(pi)) CHECK(alg == NCVector::basis_element(pi));
    }
}

TEST_CASE("resolution is equivariant") {
    std::mt19937 gen(43);
    auto all = enumerate_partitions(5);
    for (int trial = 0; trial < 60; ++trial) {
        const SetPartition& pi = all[trial % all.size()];
        std::vector<int> v{1, 2, 3, 4, 5};
        std::shuffle(v.begin(), v.end(), gen);
        Perm w(v);
        CHECK(Rational(w.sign()) * resolve_greedy(apply_perm(w, pi)) ==
              skein_act(w, resolve_greedy(pi)));
    }
}

TEST_CASE("representing matrices") {
    auto basis = enumerate_partitions(4, 2, std::nullopt, true);
    auto id = rep_matrix(Perm::identity(4), basis);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            CHECK(id[i][j] == (i == j ? 1 : 0));
    for (int i = 1; i < 4; ++i) {
        auto m = rep_matrix(Perm::adjacent_transposition(4, i), basis);
        // involution: m^2 = identity
        for (size_t r = 0; r < basis.size(); ++r)
            for (size_t c = 0; c < basis.size(); ++c) {
                long long total = 0;
                for (size_t t = 0; t < basis.size(); ++t) total += m[r][t] * m[t][c];
                CHECK(total == (r == c ? 1 : 0));
            }
    }
}

TEST_CASE("ncvector rejects crossing keys and mismatched sizes") {
    NCVector v(4);
    CHECK_THROWS(v.add_term(sp("1 3 / 2 4"), 1));
    CHECK_THROWS(v.add_term(parse_set_partition("1 2 / 3"), 1));
    v.add_term(sp("1 2 / 3 4"), Rational(1, 2));
    CHECK_FALSE(v.all_integer());
}

TEST_CASE("algebraic route is capped while greedy handles the full range") {
    SetPartition big = sp("1 9 / 2 10 / 3 11 / 4 12 / 5 13 / 6 14 / 7 15 / 8 16");
    CHECK_THROWS(resolve_algebraic(big));
    CHECK(resolve_greedy(big).terms().size() == 1430);
}

TEST_CASE("expander rejects targets outside the span") {
    std::vector<Fermion> basis;
    for (const auto& pi : nc_basis(4, 2)) basis.push_back(fermions::F(pi));
    FermionExpander expander(basis);
    CHECK_THROWS(expander.expand(theta_product(4)));  // wrong bidegree entirely
    // right bidegree but outside the span: no partition fermion with two
    // blocks puts a xi index outside its theta support like t3 t4 x1 x2
    Fermion outside = Fermion::monomial(4, 0b1100, 0b0011);
    CHECK_THROWS(expander.expand(outside));
    // linearly dependent basis is rejected up front
    std::vector<Fermion> dependent = basis;
    dependent.push_back(basis.front());
    CHECK_THROWS(FermionExpander(dependent));
}

TEST_CASE("rank of the noncrossing fermion family") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<Fermion> fs, lows;
            for (const auto& pi : nc_basis(n, k)) {
                fs.push_back(fermions::F(pi));
                lows.push_back(fermions::f(pi));
            }
            CHECK(rank_of_fermions(fs) == narayana(n, k).get_si());
            CHECK(rank_of_fermions(lows) == narayana(n, k).get_si());
        }
}
