#include <random>

#include "diagram.hpp"
#include "doctest.h"
#include "relations.hpp"

using namespace atl;

namespace {

Diagram random_word(int N, std::mt19937_64& rng, int len) {
    std::uniform_int_distribution<int> pick(0, N + 1);
    WeightedDiagram w{Diagram::identity(N), 0};
    for (int k = 0; k < len; ++k) {
        int g = pick(rng);
        Diagram d = g == 0 ? Diagram::omega(N, 1) : g == 1 ? Diagram::omega(N, -1) : Diagram::e(g - 1, N);
        w = compose(w, WeightedDiagram{d, 0});
    }
    return w.diagram;
}

}  // namespace

TEST_CASE("generators") {
    CHECK(Diagram::identity(3).through() == 3);
    CHECK(Diagram::identity(3).rank() == 0);
    for (int N = 1; N <= 6; ++N) CHECK(Diagram::omega(N).rank() == 1);
    CHECK(Diagram::e(1, 4).rank() == 0);
    CHECK(Diagram::e(4, 4).rank() == 2);
}

TEST_CASE("defining relations hold for N = 2..8") {
    for (int N = 2; N <= 8; ++N) {
        DiagramAlgebra alg{N};
        auto fails = check_genrel(N, alg);
        CAPTURE(N);
        CHECK(fails.empty());
        for (auto& f : fails) MESSAGE(f);
    }
}

TEST_CASE("composition examples") {
    Diagram e1 = Diagram::e(1, 4), e2 = Diagram::e(2, 4);
    auto r = compose(e1, e1);
    CHECK(r.diagram == e1);
    CHECK(r.beta_power == 1);
    auto s = compose(Diagram::omega(4, 1), Diagram::omega(4, -1));
    CHECK(s.diagram == Diagram::identity(4));
    CHECK(s.beta_power == 0);
    auto t = compose(WeightedDiagram{e1, 0}, compose(e2, e1));
    CHECK(t.diagram == e1);
    CHECK(t.beta_power == 0);
    CHECK_THROWS_AS(compose(Diagram::identity(3), Diagram::identity(4)), SizeMismatch);
}

TEST_CASE("the four sample (4,2)-diagrams have ranks 0,0,1,2") {
    Diagram d1(4, 2, {{2, 3}}, {}, 0);
    // the second sample differs from the first by a contractible loop only
    auto d2 = compose(Diagram(4, 4, {{2, 3}}, {{2, 3}}, 0), d1);
    Diagram d3(4, 2, {{3, 4}, {2, 5}}, {{1, 2}}, 0);
    Diagram d4(4, 2, {{1, 4}, {2, 3}}, {{2, 3}}, 0, 1);
    CHECK(d1.rank() == 0);
    CHECK(d2.diagram == d1);
    CHECK(d2.beta_power == 1);
    CHECK(d2.diagram.rank() == 0);
    CHECK(d3.rank() == 1);
    CHECK(d4.rank() == 2);
}

TEST_CASE("dagger and vertical flip") {
    for (int N = 2; N <= 6; ++N) {
        CHECK(Diagram::identity(N).dagger() == Diagram::identity(N));
        CHECK(Diagram::omega(N).dagger() == Diagram::omega(N, -1));
        CHECK(Diagram::identity(N).vflip() == Diagram::identity(N));
        CHECK(Diagram::omega(N).vflip() == Diagram::omega(N, -1));
        for (int i = 1; i <= N; ++i) {
            CHECK(Diagram::e(i, N).dagger() == Diagram::e(i, N));
            int j = ((N - i) % N + N) % N;
            CHECK(Diagram::e(i, N).vflip() == Diagram::e(j == 0 ? N : j, N));
        }
    }
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> nd(2, 7), ld(0, 12);
    for (int it = 0; it < 1000; ++it) {
        int N = nd(rng);
        Diagram a = random_word(N, rng, ld(rng));
        CHECK(a.dagger().dagger() == a);
        CHECK(a.vflip().vflip() == a);
        if (it % 4 == 0) {
            Diagram b = random_word(N, rng, ld(rng));
            auto ab = compose(a, b);
            auto fab = compose(a.vflip(), b.vflip());
            CHECK(fab.diagram == ab.diagram.vflip());
            CHECK(fab.beta_power == ab.beta_power);
            auto dab = compose(b.dagger(), a.dagger());
            CHECK(dab.diagram == ab.diagram.dagger());
            CHECK(dab.beta_power == ab.beta_power);
        }
    }
}

TEST_CASE("canonical form does not depend on the construction") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        int N = 3 + static_cast<int>(rng() % 4);
        Diagram a = random_word(N, rng, 6), b = random_word(N, rng, 6), c = random_word(N, rng, 6);
        auto x = compose(compose(WeightedDiagram{a, 0}, WeightedDiagram{b, 0}), WeightedDiagram{c, 0});
        auto y = compose(WeightedDiagram{a, 0}, compose(WeightedDiagram{b, 0}, WeightedDiagram{c, 0}));
        CHECK(x == y);
        Diagram back = Diagram::from_json(a.to_json());
        CHECK(back == a);
        CHECK(a.rank() == back.rank());
    }
}

TEST_CASE("invalid diagrams are rejected") {
    CHECK_THROWS_AS(Diagram(4, 0, {{1, 3}, {2, 4}}, {}, 0), InvalidDiagram);
    CHECK_THROWS_AS(Diagram(4, 2, {{1, 3}}, {}, 0), InvalidDiagram);
    CHECK_THROWS_AS(Diagram(2, 2, {}, {}, 0, 1), InvalidDiagram);
    CHECK_NOTHROW(Diagram(2, 0, {{2, 3}}, {}, 0, 2));
}
