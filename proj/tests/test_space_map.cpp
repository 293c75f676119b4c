#include <doctest.h>

#include <memory>
#include <random>

#include "khal/space_map.hpp"
#include "oracle.hpp"

using namespace khal;

namespace {

std::shared_ptr<const FiniteSpace> shared_interval(std::int64_t a, std::int64_t b) {
    return std::make_shared<FiniteSpace>(interval_space(a, b));
}

SpaceMap self_map(std::shared_ptr<const FiniteSpace> s, std::vector<std::size_t> table) {
    return SpaceMap(s, s, std::move(table));
}

SpaceMap identity_on(std::shared_ptr<const FiniteSpace> s) {
    std::vector<std::size_t> table(s->size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
    return self_map(std::move(s), std::move(table));
}

// Replays every witness in a report through the defining conditions.
void check_witnesses(const SpaceMap& f, const PropertyReport& report) {
    if (report.continuous.witness) {
        const std::size_t x = *report.continuous.witness;
        bool inside = true;
        for (std::size_t q : f.domain->nbhd(x)) {
            inside = inside && oracle::member(f.codomain->nbhd(f(x)), f(q));
        }
        CHECK(!inside);
    }
    if (report.quasi_continuous.witness) {
        const std::size_t a = *report.quasi_continuous.witness;
        for (std::size_t w : f.domain->nbhd(a)) {
            bool inside = true;
            for (std::size_t q : f.domain->nbhd(w)) {
                inside = inside && oracle::member(f.codomain->nbhd(f(a)), f(q));
            }
            CHECK(!inside);
        }
    }
    if (report.closed_graph.witness) {
        const auto [x, y] = *report.closed_graph.witness;
        CHECK(f(x) != y);
        CHECK(graph_closure_member(f, x, y));
    }
}

}  // namespace

TEST_CASE("constant detection") {
    auto s = shared_interval(0, 2);
    CHECK(is_constant(self_map(s, {0, 0, 0})) == 0);
    CHECK(!is_constant(identity_on(s)).has_value());
    CHECK(is_constant(self_map(s, {1, 1, 1})) == 1);
}

TEST_CASE("continuity checker on [0,2]") {
    auto s = shared_interval(0, 2);
    CHECK(is_continuous(identity_on(s)).holds);
    for (std::size_t v = 0; v < 3; ++v) {
        CHECK(is_continuous(self_map(s, {v, v, v})).holds);
    }
    // (0,0,2): the image of U(2) = {1,2} is {0,2}, not inside U(2).
    const SpaceMap f1 = self_map(s, {0, 0, 2});
    const PointCheck c1 = is_continuous(f1);
    CHECK(!c1.holds);
    CHECK(c1.witness == 2);
    CHECK(!oracle::continuous(f1));

    const SpaceMap f2 = self_map(s, {0, 2, 2});
    const PointCheck c2 = is_continuous(f2);
    CHECK(!c2.holds);
    CHECK(c2.witness == 0);
}

TEST_CASE("all four checkers agree with the definitional oracle") {
    const std::vector<std::shared_ptr<const FiniteSpace>> spaces = {
        shared_interval(0, 2),
        shared_interval(0, 3),
        std::make_shared<FiniteSpace>(box_space(Box({{0, 1}, {0, 1}}))),
        std::make_shared<FiniteSpace>(
            FiniteSpace({"a", "b"}, {{0}, {0, 1}})),  // Sierpinski pair
        std::make_shared<FiniteSpace>(FiniteSpace({"a", "b"}, {{0}, {1}})),  // discrete pair
    };
    for (const auto& s : spaces) {
        REQUIRE(s->validate().empty());
        for (const auto& table : oracle::all_tables(s->size())) {
            const SpaceMap f(s, s, table);
            CHECK(is_continuous(f).holds == oracle::continuous(f));
            CHECK(is_quasi_continuous(f).holds == oracle::quasi_continuous(f));
            CHECK(has_closed_graph(f).holds == oracle::closed_graph(f));
        }
    }
}

TEST_CASE("graph closure membership") {
    auto s = shared_interval(0, 2);
    const SpaceMap id = identity_on(s);
    for (std::size_t x = 0; x < 3; ++x) {
        CHECK(graph_closure_member(id, x, id(x)));
    }
    CHECK(graph_closure_member(id, 1, 0));  // f(1)=1 lies in U(0)

    const SpaceMap zero = self_map(s, {0, 0, 0});
    CHECK(!graph_closure_member(zero, 1, 2));  // 0 is not in U(2)
}

TEST_CASE("closed graph checker and frozen witnesses") {
    auto s = shared_interval(0, 2);
    CHECK(has_closed_graph(self_map(s, {0, 0, 0})).holds);

    const GraphCheck one = has_closed_graph(self_map(s, {1, 1, 1}));
    CHECK(!one.holds);
    CHECK(one.witness == std::make_pair(std::size_t{0}, std::size_t{0}));

    const GraphCheck id = has_closed_graph(identity_on(s));
    CHECK(!id.holds);
    CHECK(id.witness == std::make_pair(std::size_t{1}, std::size_t{0}));
}

TEST_CASE("classify nests the diagram and reports replayable witnesses") {
    for (std::int64_t b = 2; b <= 3; ++b) {
        auto s = shared_interval(0, b);
        for (const auto& table : oracle::all_tables(s->size())) {
            const SpaceMap f(s, s, table);
            const PropertyReport report = classify(f);
            if (report.closed_graph.holds) CHECK(report.is_constant());
            if (report.is_constant()) CHECK(report.continuous.holds);
            if (report.continuous.holds) CHECK(report.quasi_continuous.holds);
            check_witnesses(f, report);
        }
    }
}

TEST_CASE("classify tiers for the reference maps") {
    auto s = shared_interval(0, 2);
    CHECK(diagram_tier(classify(self_map(s, {0, 0, 0}))) == "closed graph");
    CHECK(diagram_tier(classify(self_map(s, {1, 1, 1}))) == "constant, no closed graph");
    CHECK(diagram_tier(classify(identity_on(s))) == "continuous, non-constant");
}

TEST_CASE("nesting holds on random samples of the 9-point box") {
    auto s = std::make_shared<FiniteSpace>(box_space(Box({{0, 2}, {0, 2}})));
    std::mt19937_64 rng(12345);
    std::vector<std::size_t> table(s->size());
    for (int t = 0; t < 100000; ++t) {
        for (auto& v : table) v = static_cast<std::size_t>(rng() % s->size());
        const SpaceMap f(s, s, table);
        const PropertyReport report = classify(f);  // throws on any nesting violation
        if (report.closed_graph.holds) CHECK(report.is_constant());
    }
}

TEST_CASE("disconnected domains may carry non-constant closed-graph maps") {
    auto discrete = std::make_shared<FiniteSpace>(FiniteSpace({"a", "b"}, {{0}, {1}}));
    const SpaceMap id = identity_on(discrete);
    CHECK(has_closed_graph(id).holds);
    const PropertyReport report = classify(id);  // must not be treated as a checker bug
    CHECK(report.closed_graph.holds);
    CHECK(!report.is_constant());
}

TEST_CASE("closed-graph maps are constant on neighborhoods and closures") {
    for (std::int64_t b = 1; b <= 3; ++b) {
        auto s = shared_interval(0, b);
        for (const auto& table : oracle::all_tables(s->size())) {
            const SpaceMap f(s, s, table);
            if (!has_closed_graph(f).holds) continue;
            for (std::size_t x = 0; x < s->size(); ++x) {
                for (std::size_t q : s->nbhd(x)) CHECK(f(q) == f(x));
                for (std::size_t q : s->closure_of({x})) CHECK(f(q) == f(x));
            }
        }
    }
}

TEST_CASE("map construction validates its table") {
    auto s = shared_interval(0, 2);
    CHECK_THROWS_AS(self_map(s, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(self_map(s, {0, 1, 3}), std::invalid_argument);
}
