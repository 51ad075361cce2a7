#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/numbers.hpp"
#include "skeinlab/quadring.hpp"

using namespace skeinlab;
using namespace skeinlab::quadring;

TEST_CASE("disjoint monomial validation") {
    CHECK_NOTHROW(DisjointMonomial(4, {{1, 3}, {2, 4}}));
    CHECK_THROWS(DisjointMonomial(4, {{1, 2}, {2, 3}}));
    CHECK_THROWS(DisjointMonomial(4, {{}}));
    DisjointMonomial m(4, {{2, 4}, {1, 3}});
    CHECK(m.supports()[0] == std::vector<int>{1, 3});  // sorted by minimum
    CHECK(m.total_size() == 4);
    CHECK_FALSE(m.all_noncrossing());
}

TEST_CASE("reduction fixes noncrossing monomials") {
    DisjointMonomial m(4, {{1, 2}});
    auto red = reduce(m);
    REQUIRE(red.size() == 1);
    CHECK(red.begin()->first == m);
    CHECK(red.begin()->second == 1);
}

TEST_CASE("reduction of the chord crossing") {
    DisjointMonomial m(4, {{1, 3}, {2, 4}});
    auto red = reduce(m);
    REQUIRE(red.size() == 2);
    CHECK(red.at(DisjointMonomial(4, {{1, 2}, {3, 4}})) == -1);
    CHECK(red.at(DisjointMonomial(4, {{1, 4}, {2, 3}})) == -1);
}

TEST_CASE("reduction agrees with block operator evaluation") {
    DisjointMonomial m(4, {{1, 3}, {2, 4}});
    Fermion direct = block_operator_evaluation(m);
    Fermion combo(4);
    for (const auto& [mono, c] : reduce(m))
        combo = combo + c * block_operator_evaluation(mono);
    CHECK(direct == combo);
}

TEST_CASE("reduction is confluent at n = 5") {
    const int n = 5;
    for (uint32_t u = 0; u < (1u << n); ++u) {
        std::vector<int> elems;
        for (int i = 1; i <= n; ++i)
            if (u & (1u << (i - 1))) elems.push_back(i);
        for (const auto& pi : enumerate_partitions(static_cast<int>(elems.size()))) {
            std::vector<std::vector<int>> supports;
            for (const auto& b : pi.blocks()) {
                std::vector<int> s;
                for (int v : b) s.push_back(elems[v - 1]);
                supports.push_back(std::move(s));
            }
            DisjointMonomial mono(n, std::move(supports));
            auto lex = reduce(mono, skein::PairPolicy::LexMin);
            CHECK(lex == reduce(mono, skein::PairPolicy::MaxTangleDrop));
            for (const auto& [bm, c] : lex) {
                CHECK(bm.all_noncrossing());
                CHECK(c.get_den() == 1);
            }
        }
    }
}

TEST_CASE("hilbert series closed form") {
    auto tij = hilbert_series(3, Quotient::DisjointNoncrossing);
    CHECK(tij[2][1] == 3);  // C(3,2) * Nar(2,1)
    CHECK(tij[0][0] == 1);
    auto tj = hilbert_series(3, Quotient::DisjointOnly);
    CHECK(tj[3][2] == 3);  // C(3,3) * Stir(3,2)
    CHECK(tj[0][0] == 1);
}

TEST_CASE("hilbert series cross-check by enumeration") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(hilbert_series(n, Quotient::DisjointOnly) ==
              hilbert_series_enumerated(n, Quotient::DisjointOnly));
        CHECK(hilbert_series(n, Quotient::DisjointNoncrossing) ==
              hilbert_series_enumerated(n, Quotient::DisjointNoncrossing));
    }
}
