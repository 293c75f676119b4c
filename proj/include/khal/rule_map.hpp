#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "khal/khalimsky.hpp"

namespace khal {

// A 1-D rule given by its action on each parity class, extended
// 2-periodically: each class either shifts its argument by a fixed offset
// or collapses it to a fixed value.
struct ParityRule1D {
    struct Action {
        enum class Kind { kOffset, kConst };
        Kind kind = Kind::kOffset;
        std::int64_t amount = 0;  // offset delta, or the constant value

        std::int64_t apply(std::int64_t x) const {
            return kind == Kind::kOffset ? x + amount : amount;
        }
        static Action offset(std::int64_t d) { return {Kind::kOffset, d}; }
        static Action constant(std::int64_t c) { return {Kind::kConst, c}; }
    };
    Action even;
    Action odd;

    std::int64_t apply(std::int64_t x) const {
        return (x % 2 == 0) ? even.apply(x) : odd.apply(x);
    }
};

// A rule-defined self-map of the n-dimensional lattice, evaluated pointwise.
class RuleMap {
public:
    struct Constant {
        KPoint value;
    };
    struct Identity {};
    // f(x_1, ..., x_n) = (h(x_1), ..., h(x_n)) for a 1-D parity rule h.
    struct Coordinatewise {
        ParityRule1D h;
    };
    // Explicit values on a finite window, any rule elsewhere.
    struct TableWithDefault {
        Box window;
        std::vector<KPoint> values;  // indexed by the window's lex point order
        std::shared_ptr<const RuleMap> fallback;
    };
    using Rule = std::variant<Constant, Identity, Coordinatewise, TableWithDefault>;

    RuleMap(std::size_t dim, Rule rule);

    std::size_t dim() const { return dim_; }
    const Rule& rule() const { return rule_; }

    KPoint apply(const KPoint& p) const;
    // The constant value when the rule is constant as a function, else nullopt.
    std::optional<KPoint> constant_value() const;

private:
    std::size_t dim_;
    Rule rule_;
};

RuleMap constant_rule(KPoint value);
RuleMap identity_rule(std::size_t dim);
RuleMap parity_rule(std::size_t dim, ParityRule1D h);
// h(2m) = h(2m+1) = 2m+1: quasi-continuous everywhere, continuous only at
// all-odd points.
RuleMap staircase_rule(std::size_t dim);
// h(2m) = 1, h(2m+1) = -1: quasi-continuity fails wherever a coordinate is even.
RuleMap parity_sign_rule(std::size_t dim);

enum class LocalProperty { kContinuity, kQuasiContinuity };

// Evaluates the table checkers' criterion at one lattice point, using the
// ambient minimal neighborhoods. Exact: both criteria are local and every
// neighborhood involved is finite.
bool check_rule_at(const RuleMap& rule, LocalProperty property, const KPoint& p);

// Scans region x region for a pair (x, y), y in the outer loop, whose minimal
// product neighborhood meets the graph although y != f(x). Neighborhoods are
// ambient, so points just outside the region participate as witnesses' f-values.
// No witness refutes nothing: the search is refutation-complete within the
// region only.
std::optional<std::pair<KPoint, KPoint>> refute_closed_graph_rule(const RuleMap& rule,
                                                                  const Box& region);

// Pointwise analysis of a rule over a finite window of the ambient lattice.
struct RuleReport {
    std::optional<KPoint> constant_value;
    bool continuous_on_window = true;
    std::optional<KPoint> continuity_witness;
    bool quasi_continuous_on_window = true;
    std::optional<KPoint> quasi_witness;

    // Constant rules are decided exactly by the closed-point criterion;
    // everything else is refutation-only within the scan region.
    enum class GraphStatus { kClosed, kNotClosed, kNotRefutedInRegion };
    GraphStatus graph_status = GraphStatus::kNotRefutedInRegion;
    std::optional<std::pair<KPoint, KPoint>> graph_witness;

    std::string summary() const;
};

RuleReport analyze_rule(const RuleMap& rule, const Box& window, const Box& refutation_region);

}  // namespace khal
