#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "khal/rule_map.hpp"
#include "khal/space_map.hpp"

using namespace khal;

TEST_CASE("staircase rule h(2m) = h(2m+1) = 2m+1") {
    const RuleMap d = staircase_rule(1);
    CHECK(d.apply(KPoint{-2}) == KPoint{-1});
    CHECK(d.apply(KPoint{-1}) == KPoint{-1});
    CHECK(d.apply(KPoint{0}) == KPoint{1});
    CHECK(d.apply(KPoint{1}) == KPoint{1});
    CHECK(d.apply(KPoint{2}) == KPoint{3});
    CHECK(d.apply(KPoint{3}) == KPoint{3});
    CHECK(!d.constant_value().has_value());
}

TEST_CASE("parity sign rule h(2m) = 1, h(2m+1) = -1") {
    const RuleMap e = parity_sign_rule(2);
    CHECK(e.apply(KPoint{0, 1}) == KPoint{1, -1});
    CHECK(e.apply(KPoint{-3, -4}) == KPoint{-1, 1});
    CHECK(!e.constant_value().has_value());
}

TEST_CASE("constant and identity rules") {
    const RuleMap c = constant_rule(KPoint{1, 1});
    CHECK(c.apply(KPoint{5, -7}) == KPoint{1, 1});
    CHECK(c.constant_value() == KPoint{1, 1});
    CHECK_THROWS_AS(c.apply(KPoint{5}), std::invalid_argument);

    const RuleMap id = identity_rule(2);
    CHECK(id.apply(KPoint{5, -7}) == KPoint{5, -7});
    CHECK(!id.constant_value().has_value());
}

TEST_CASE("a parity rule with equal constants is constant") {
    const RuleMap flat = parity_rule(
        2, {ParityRule1D::Action::constant(4), ParityRule1D::Action::constant(4)});
    CHECK(flat.constant_value() == KPoint{4, 4});
}

TEST_CASE("table-with-default rules") {
    const Box window({{0, 1}});
    auto fallback = std::make_shared<const RuleMap>(constant_rule(KPoint{0}));
    const RuleMap patched(
        1, RuleMap::TableWithDefault{window, {KPoint{2}, KPoint{0}}, fallback});
    CHECK(patched.apply(KPoint{0}) == KPoint{2});
    CHECK(patched.apply(KPoint{1}) == KPoint{0});
    CHECK(patched.apply(KPoint{9}) == KPoint{0});
    CHECK(!patched.constant_value().has_value());

    const RuleMap unpatched(1, RuleMap::TableWithDefault{window, {KPoint{0}, KPoint{0}}, fallback});
    CHECK(unpatched.constant_value() == KPoint{0});
}

TEST_CASE("pointwise rule checks match the worked examples") {
    const RuleMap id1 = identity_rule(1);
    for (std::int64_t x = -4; x <= 4; ++x) {
        CHECK(check_rule_at(id1, LocalProperty::kContinuity, KPoint{x}));
        CHECK(check_rule_at(id1, LocalProperty::kQuasiContinuity, KPoint{x}));
    }

    const RuleMap e1 = parity_sign_rule(1);
    CHECK(!check_rule_at(e1, LocalProperty::kQuasiContinuity, KPoint{0}));
    CHECK(check_rule_at(e1, LocalProperty::kQuasiContinuity, KPoint{1}));

    const RuleMap d2 = staircase_rule(2);
    CHECK(!check_rule_at(d2, LocalProperty::kContinuity, KPoint{0, 0}));
    CHECK(check_rule_at(d2, LocalProperty::kQuasiContinuity, KPoint{0, 0}));
}

TEST_CASE("rule and table checkers agree on interior points") {
    // Interval [-5,5]; both endpoints are odd, so their subspace neighborhoods
    // equal the ambient ones and the two routes must agree everywhere.
    auto space = std::make_shared<FiniteSpace>(interval_space(-5, 5));
    for (const RuleMap& rule : {staircase_rule(1), parity_sign_rule(1), identity_rule(1),
                                constant_rule(KPoint{1})}) {
        std::vector<std::size_t> table(space->size());
        for (std::size_t i = 0; i < space->size(); ++i) {
            const KPoint image = rule.apply(space->embedded(i));
            const auto idx = space->index_of_embedded(image);
            REQUIRE(idx.has_value());
            table[i] = *idx;
        }
        const SpaceMap f(space, space, table);
        const auto in_target = [&](std::size_t q, std::size_t target) {
            const IndexSet& u = space->nbhd(target);
            return std::binary_search(u.begin(), u.end(), f(q));
        };
        for (std::size_t i = 0; i < space->size(); ++i) {
            const KPoint p = space->embedded(i);
            if (p[0] <= -5 || p[0] >= 5) continue;  // subspace and ambient differ here
            bool table_cont = true;
            for (std::size_t q : space->nbhd(i)) {
                table_cont = table_cont && in_target(q, f(i));
            }
            CHECK(check_rule_at(rule, LocalProperty::kContinuity, p) == table_cont);

            bool table_quasi = false;
            for (std::size_t w : space->nbhd(i)) {
                bool inside = true;
                for (std::size_t q : space->nbhd(w)) inside = inside && in_target(q, f(i));
                if (inside) {
                    table_quasi = true;
                    break;
                }
            }
            CHECK(check_rule_at(rule, LocalProperty::kQuasiContinuity, p) == table_quasi);
        }
    }
}

TEST_CASE("rule and table checkers agree on a planar window") {
    auto space = std::make_shared<FiniteSpace>(box_space(Box({{-5, 5}, {-5, 5}})));
    for (const RuleMap& rule :
         {staircase_rule(2), parity_sign_rule(2), identity_rule(2),
          constant_rule(KPoint{1, 1})}) {
        std::vector<std::size_t> table(space->size());
        for (std::size_t i = 0; i < space->size(); ++i) {
            const auto idx = space->index_of_embedded(rule.apply(space->embedded(i)));
            REQUIRE(idx.has_value());
            table[i] = *idx;
        }
        const SpaceMap f(space, space, table);
        const auto in_target = [&](std::size_t q, std::size_t target) {
            const IndexSet& u = space->nbhd(target);
            return std::binary_search(u.begin(), u.end(), f(q));
        };
        for (std::size_t i = 0; i < space->size(); ++i) {
            const KPoint p = space->embedded(i);
            if (std::abs(p[0]) >= 5 || std::abs(p[1]) >= 5) continue;
            bool table_cont = true;
            for (std::size_t q : space->nbhd(i)) table_cont = table_cont && in_target(q, f(i));
            CHECK(check_rule_at(rule, LocalProperty::kContinuity, p) == table_cont);

            bool table_quasi = false;
            for (std::size_t w : space->nbhd(i)) {
                bool inside = true;
                for (std::size_t q : space->nbhd(w)) inside = inside && in_target(q, f(i));
                if (inside) {
                    table_quasi = true;
                    break;
                }
            }
            CHECK(check_rule_at(rule, LocalProperty::kQuasiContinuity, p) == table_quasi);
        }
    }
}

TEST_CASE("closed-graph refutation on rule maps") {
    const Box region1({{-2, 2}});
    CHECK(!refute_closed_graph_rule(constant_rule(KPoint{0}), region1).has_value());

    const Box region2({{-2, 2}, {-2, 2}});
    CHECK(!refute_closed_graph_rule(constant_rule(KPoint{0, 0}), region2).has_value());

    const auto ones = refute_closed_graph_rule(constant_rule(KPoint{1, 1}), region2);
    REQUIRE(ones.has_value());
    CHECK(ones->second == KPoint{0, 0});  // first y in lex order with (1,1) in V(y)

    const auto id = refute_closed_graph_rule(identity_rule(1), Box({{0, 2}}));
    REQUIRE(id.has_value());
    CHECK(id->first == KPoint{1});
    CHECK(id->second == KPoint{0});

    CHECK_THROWS_AS(refute_closed_graph_rule(identity_rule(2), region1),
                    std::invalid_argument);
}

TEST_CASE("rule analysis summarizes the diagram position") {
    const Box window({{-4, 4}, {-4, 4}});
    const RuleReport b = analyze_rule(constant_rule(KPoint{1, 1}), window, window);
    CHECK(b.summary() == "constant, continuous, quasi-continuous, NOT closed graph");
    CHECK(b.graph_status == RuleReport::GraphStatus::kNotClosed);
    REQUIRE(b.graph_witness.has_value());

    const RuleReport a = analyze_rule(constant_rule(KPoint{0, 0}), window, window);
    CHECK(a.summary() == "constant, continuous, quasi-continuous, closed graph");

    const RuleReport e = analyze_rule(parity_sign_rule(2), window, window);
    CHECK(!e.quasi_continuous_on_window);
    CHECK(e.quasi_witness == KPoint{-4, -4});
}
