#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "orbhf/catalog.hpp"
#include "orbhf/error.hpp"
#include "orbhf/homology.hpp"
#include "orbhf/orbifold.hpp"

using namespace orbhf;

namespace {

}  // namespace

TEST_SUITE("orbifold") {

TEST_CASE("d_n") {
    auto d1 = d_n(1);
    CHECK(d1.size() == 1);
    CHECK(d1.edges() == std::set<Edge>{{0, 0, Basis::R23}});
    auto d3 = d_n(3);
    CHECK(d3.edges() ==
          std::set<Edge>{{0, 1, Basis::R23}, {1, 2, Basis::R23}, {2, 0, Basis::R23}});
    for (const auto& g : d3.generators()) CHECK(g.idem == Basis::I2);
    CHECK_THROWS_AS(d_n(0), Error);
}

TEST_CASE("bracket") {
    CHECK(bracket(4, 2) == 2);
    CHECK(bracket(5, 3) == 2);
    CHECK(bracket(1, 1) == 1);
    for (int n = 1; n <= 7; ++n)
        for (long long j = 1; j <= 40; ++j) {
            int b = bracket(j, n);
            CHECK(b >= 1);
            CHECK(b <= n);
            CHECK((j - b) % n == 0);
        }
    CHECK_THROWS_AS(bracket(3, 0), Error);
}

TEST_CASE("shift_count") {
    CHECK(shift_count(Word{Basis::R23, Basis::R23}) == 2);
    CHECK(shift_count(Word{Basis::R1, Basis::R2}) == 0);
    CHECK(shift_count(Word{}) == 0);
    CHECK(shift_count(Word{Basis::R3, Basis::R12, Basis::R123}) == 2);
}

TEST_CASE("orb_extend examples") {
    auto e = orb_extend(lens_space_cfa(3), 2);
    CHECK(e.size() == 6);
    CHECK(e.ops().empty());

    auto a = random_type_a(12);
    auto one = orb_extend(a, 1);
    REQUIRE(one.size() == a.size());
    CHECK(one.ops() == a.ops());
    CHECK(one.generator(0).name == a.generator(0).name + ":1");

    // In i2 A: m_2(i2, r2) = r2, m_2(r2, r3) = r23, m_2(i2, r23) = r23.
    auto p = projective_module(Basis::I2);
    const GenIndex i2 = *p.find("i2"), r2 = *p.find("r2"), r23 = *p.find("r23");
    auto m = orb_extend(p, 2);
    OpTable expected;
    for (int j = 1; j <= 2; ++j) {
        const int k = j == 1 ? 2 : 1;
        expected[{indexed(i2, j, 2), {Basis::R2}}] = {indexed(r2, j, 2)};
        expected[{indexed(r2, j, 2), {Basis::R3}}] = {indexed(r23, k, 2)};
        expected[{indexed(i2, j, 2), {Basis::R23}}] = {indexed(r23, k, 2)};
    }
    CHECK(m.ops() == expected);
}

TEST_CASE("orb_extend rejects invalid input") {
    TypeAStructure bad;
    bad.add_generator("y", Basis::I2);
    bad.toggle_op(0, {}, 0);
    CHECK_THROWS_AS(orb_extend(bad, 2), Error);
    CHECK_THROWS_AS(orb_extend(lens_space_cfa(2), 0), Error);
}

TEST_CASE("copy-and-shift preserves the A-infinity relations") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto a = random_type_a(seed);
        for (int n = 1; n <= 5; ++n) {
            auto e = orb_extend(a, n);
            CHECK(check_type_a(e));
            if (n <= 3) CHECK(oracle::relations_hold(e, 5));
        }
    }
    // Products that create rho23 or rho123 from shifting letters.
    for (Basis r : kReebBasis) {
        auto p = projective_module(source_idem(r));
        for (int n = 2; n <= 4; ++n) CHECK(check_type_a(orb_extend(p, n)));
    }
}

TEST_CASE("lemma42_witness") {
    auto w = lemma42_witness(lens_space_cfa(2), 3);
    CHECK(w.map.size() == 6);
    CHECK(w.intertwines);

    auto a = random_type_a(4);
    auto w1 = lemma42_witness(a, 1);
    CHECK(w1.intertwines);
    for (std::size_t i = 0; i < w1.map.size(); ++i) CHECK(w1.map[i] == i);

    int with_r23 = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto r = random_type_a(seed);
        bool nontrivial = std::any_of(r.ops().begin(), r.ops().end(), [](const auto& e) {
            return std::find(e.first.word.begin(), e.first.word.end(), Basis::R23) !=
                   e.first.word.end();
        });
        with_r23 += nontrivial;
        for (int n = 2; n <= 5; ++n) CHECK(lemma42_witness(r, n).intertwines);
    }
    CHECK(with_r23 > 0);
}

TEST_CASE("orb_extend_box_da") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto a = random_type_a(seed);
        for (int n = 1; n <= 4; ++n) {
            auto via_da = orb_extend_box_da(a, identity_da(), n);
            auto direct = orb_extend(a, n);
            CHECK(via_da.ops() == direct.ops());
            CHECK(via_da.size() == direct.size());
        }
        CHECK(orb_extend_box_da(a, identity_da(), 1).ops() == box_a_da(a, identity_da()).ops());
    }
    auto lens = orb_extend_box_da(lens_space_cfa(2), identity_da(), 2);
    CHECK(lens.size() == 4);
    CHECK(lens.ops().empty());
}

TEST_CASE("shift_morphism") {
    auto a = random_type_a(9);
    for (int n = 1; n <= 4; ++n) {
        auto t = shift_morphism(MorphismA::identity(a), n);
        CHECK(t.components.size() == a.size() * static_cast<std::size_t>(n));
        for (const auto& [key, outs] : t.components) {
            CHECK(key.word.empty());
            CHECK(outs == GenSet{key.gen});
        }
    }

    MorphismA t;
    t.source = {{"x", Basis::I2}};
    t.target = {{"y", Basis::I2}};
    t.components[{0, {Basis::R23}}] = {0};
    auto one = shift_morphism(t, 1);
    CHECK(one.components == t.components);
    auto two = shift_morphism(t, 2);
    OpTable expected;
    expected[{0, {Basis::R23}}] = {1};
    expected[{1, {Basis::R23}}] = {0};
    CHECK(two.components == expected);
    CHECK(two.source[1].name == "x:2");
}

TEST_CASE("hfo examples") {
    CHECK(hfo(lens_space_cfa(3), OrbifoldOrders({2, 3})) == 18);
    for (int p = 1; p <= 6; ++p) CHECK(hfo(lens_space_cfa(p), OrbifoldOrders({1})) == p);
    CHECK(hfo(lens_space_cfa(2), OrbifoldOrders({2, 2, 2})) == 16);
    CHECK(oracle::pipeline_rank(lens_space_cfa(2), {2, 2, 2}) == 16);
    CHECK_THROWS_AS(OrbifoldOrders({}), Error);
    CHECK_THROWS_AS(OrbifoldOrders({2, 0}), Error);
}

TEST_CASE("hfo with all-one orders equals the plain box rank") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto a = random_type_a(seed);
        std::size_t base = homology_rank(box_a_d(a, d_n(1)));
        for (std::size_t ones = 1; ones <= 4; ++ones)
            CHECK(hfo(a, OrbifoldOrders(std::vector<int>(ones, 1))) == base);
    }
}

TEST_CASE("hfo matches the closed-form pipeline expansion") {
    const std::vector<std::vector<int>> order_sets = {{2}, {3, 2}, {2, 3}, {2, 2, 2}, {4, 1, 3}};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto a = random_type_a(seed);
        for (const auto& orders : order_sets)
            CHECK(hfo(a, OrbifoldOrders(orders)) == oracle::pipeline_rank(a, orders));
    }
}

TEST_CASE("pipeline generator count") {
    auto a = lens_space_cfa(3);
    auto e = orb_extend(orb_extend(a, 2), 3);
    CHECK(box_a_d(e, d_n(4)).size() == 3u * 2 * 3 * 4);
}

}
