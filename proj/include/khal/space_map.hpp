#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khal/finite_space.hpp"

namespace khal {

// A map between finite spaces, as a total table over the domain's points.
struct SpaceMap {
    std::shared_ptr<const FiniteSpace> domain;
    std::shared_ptr<const FiniteSpace> codomain;
    std::vector<std::size_t> table;  // table[x] = index of f(x) in the codomain

    SpaceMap(std::shared_ptr<const FiniteSpace> dom,
             std::shared_ptr<const FiniteSpace> cod,
             std::vector<std::size_t> tbl);

    std::size_t operator()(std::size_t x) const { return table[x]; }
    bool is_self_map() const { return domain == codomain; }
};

// Outcome of a single-point property check. `witness` holds the first point
// (ascending index order) at which the property fails.
struct PointCheck {
    bool holds = true;
    std::optional<std::size_t> witness;
};

// Outcome of the closed-graph check. `witness` is the first pair (x, y),
// scanned with y in the outer loop, such that the minimal neighborhood of
// (x, y) in the product meets the graph although y != f(x).
struct GraphCheck {
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// The unique value of a constant table, or nullopt.
std::optional<std::size_t> is_constant(const SpaceMap& f);

// f(U(x)) contained in U(f(x)) at every x.
PointCheck is_continuous(const SpaceMap& f);

// At every a there is some w in U(a) with f(U(w)) contained in U(f(a)).
// Quantifying U over U(a), V over U(f(a)) and W over {U(w) : w in U(a)} is
// complete: the minimal neighborhoods are the hardest choices of U and V,
// and every nonempty open W inside U(a) contains U(w) for each of its
// points w, which all lie in U(a).
PointCheck is_quasi_continuous(const SpaceMap& f);

// True iff the minimal product neighborhood U(x) x U(y) of (x, y) meets the
// graph of f, i.e. some x' in U(x) has f(x') in U(y).
bool graph_closure_member(const SpaceMap& f, std::size_t x, std::size_t y);

// The graph is closed iff every pair in its closure is a graph point.
GraphCheck has_closed_graph(const SpaceMap& f);

struct PropertyReport {
    std::optional<std::size_t> constant_value;
    PointCheck continuous;
    PointCheck quasi_continuous;
    GraphCheck closed_graph;

    bool is_constant() const { return constant_value.has_value(); }
};

// Runs all four checkers and asserts the nesting
//   closed graph => constant => continuous => quasi-continuous.
// A nesting violation indicates a checker bug and throws std::logic_error.
// The first implication is asserted only on chain-connected domains; on a
// disconnected domain a non-constant map can legitimately have closed graph
// (e.g. the identity on two discrete points).
PropertyReport classify(const SpaceMap& f);

// Innermost tier of the nested diagram that the report lands in.
std::string diagram_tier(const PropertyReport& report);

}  // namespace khal
