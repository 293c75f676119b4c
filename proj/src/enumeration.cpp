#include "khal/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "khal/khalimsky.hpp"

namespace khal {

namespace {

// Lexicographically next table over values {0, ..., base-1}; false at the end.
bool next_table(std::vector<std::size_t>& table, std::size_t base) {
    for (std::size_t i = table.size(); i-- > 0;) {
        if (++table[i] < base) return true;
        table[i] = 0;
    }
    return false;
}

// Unbiased index in [0, n) from a 64-bit generator, independent of the
// standard library's distribution implementations.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

void tally(Census& census, const PropertyReport& report,
           const std::vector<std::size_t>& table) {
    ++census.total;
    if (report.quasi_continuous.holds) ++census.quasi_continuous;
    if (report.continuous.holds) ++census.continuous;
    if (report.is_constant()) ++census.constant;
    if (report.closed_graph.holds) {
        ++census.closed_graph;
        census.closed_graph_tables.push_back(table);
    }
}

bool all_equal_under(const SpaceMap& f, const IndexSet& subset) {
    for (std::size_t i = 1; i < subset.size(); ++i) {
        if (f(subset[i]) != f(subset[0])) return false;
    }
    return true;
}

std::string table_to_string(const FiniteSpace& space, const std::vector<std::size_t>& table) {
    std::string s = "[";
    for (std::size_t x = 0; x < table.size(); ++x) {
        if (x > 0) s += ", ";
        s += space.label(x) + "->" + space.label(table[x]);
    }
    return s + "]";
}

}  // namespace

std::uint64_t self_map_count_saturating(std::uint64_t points) {
    const std::uint64_t cap = std::numeric_limits<std::int64_t>::max();
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < points; ++i) {
        if (points != 0 && total > cap / points) return cap;
        total *= points;
    }
    return total;
}

Census enumerate_census(std::shared_ptr<const FiniteSpace> space, std::uint64_t limit) {
    const std::size_t n = space->size();
    if (n == 0) throw std::invalid_argument("census needs a nonempty space");
    const std::uint64_t count = self_map_count_saturating(n);
    if (count > limit) {
        throw BudgetExceededError("enumeration of " + std::to_string(n) + "^" +
                                  std::to_string(n) +
                                  " self-maps exceeds the budget; use sampling mode");
    }
    Census census;
    census.space = space->description();
    std::vector<std::size_t> table(n, 0);
    SpaceMap f(space, space, table);
    do {
        f.table = table;
        tally(census, classify(f), table);
    } while (next_table(table, n));
    return census;
}

Census sample_census(std::shared_ptr<const FiniteSpace> space,
                     std::uint64_t trials,
                     std::uint64_t seed) {
    const std::size_t n = space->size();
    if (n == 0) throw std::invalid_argument("census needs a nonempty space");
    Census census;
    census.space = space->description();
    census.sampled = true;
    census.trials = trials;
    census.seed = seed;

    std::set<std::vector<std::size_t>> seen;
    SpaceMap f(space, space, std::vector<std::size_t>(n, 0));
    const auto evaluate = [&](const std::vector<std::size_t>& table) {
        if (!seen.insert(table).second) return;
        f.table = table;
        tally(census, classify(f), table);
    };

    for (std::size_t v = 0; v < n; ++v) {
        evaluate(std::vector<std::size_t>(n, v));
    }
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> table(n);
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            table[i] = static_cast<std::size_t>(uniform_index(rng, n));
        }
        evaluate(table);
    }
    std::sort(census.closed_graph_tables.begin(), census.closed_graph_tables.end());
    return census;
}

namespace {

// Interval/box scope for spaces not built by those constructors directly
// (e.g. products of intervals): the embedding must fill a box in lex order
// and the neighborhoods must match the reference construction.
TheoremCheck::Scope deduce_scope(const FiniteSpace& space) {
    switch (space.kind()) {
        case FiniteSpace::Kind::kInterval:
            return space.size() >= 2 ? TheoremCheck::Scope::kIntervalTheorem
                                     : TheoremCheck::Scope::kSingletonInterval;
        case FiniteSpace::Kind::kBox:
            return TheoremCheck::Scope::kBoxConjecture;
        case FiniteSpace::Kind::kGeneric:
            break;
    }
    const std::optional<Box> window = space.lattice_window();
    if (!window) return TheoremCheck::Scope::kOutsideTheorem;
    const FiniteSpace reference = box_space(*window);
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (space.nbhd(i) != reference.nbhd(i)) return TheoremCheck::Scope::kOutsideTheorem;
    }
    if (window->dim() == 1) {
        return space.size() >= 2 ? TheoremCheck::Scope::kIntervalTheorem
                                 : TheoremCheck::Scope::kSingletonInterval;
    }
    return TheoremCheck::Scope::kBoxConjecture;
}

}  // namespace

TheoremCheck verify_main_theorem(std::shared_ptr<const FiniteSpace> space,
                                 std::uint64_t limit) {
    TheoremCheck check;
    check.space = space->description();
    check.scope = deduce_scope(*space);

    const Census census = enumerate_census(space, limit);
    check.closed_graph_tables = census.closed_graph_tables;
    check.predicted_values = space->closed_points();

    std::vector<std::vector<std::size_t>> predicted;
    predicted.reserve(check.predicted_values.size());
    for (std::size_t v : check.predicted_values) {
        predicted.emplace_back(space->size(), v);
    }
    // Both lists are lexicographically sorted; the first difference is the
    // lex-least counterexample to either inclusion.
    if (check.closed_graph_tables != predicted) {
        check.pass = false;
        std::vector<std::vector<std::size_t>> diff;
        std::set_symmetric_difference(check.closed_graph_tables.begin(),
                                      check.closed_graph_tables.end(), predicted.begin(),
                                      predicted.end(), std::back_inserter(diff));
        check.counterexample = diff.front();
        const bool actual_closed = std::binary_search(check.closed_graph_tables.begin(),
                                                      check.closed_graph_tables.end(),
                                                      diff.front());
        check.detail = table_to_string(*space, diff.front()) +
                       (actual_closed ? " has closed graph but is not a constant at a closed point"
                                      : " is a constant at a closed point but lacks closed graph");
    } else {
        check.detail = "closed-graph self-maps = constants at " +
                       std::to_string(predicted.size()) + " closed point(s), " +
                       std::to_string(census.total) + " maps enumerated";
    }
    return check;
}

LemmaSuiteReport lemma_suite(std::shared_ptr<const FiniteSpace> space, std::uint64_t limit) {
    LemmaSuiteReport report;
    if (!space->has_embedding()) {
        report.pass = false;
        report.failures.push_back("space has no lattice embedding");
        return report;
    }

    // (a) overlapping chains between all embedded point pairs.
    for (std::size_t i = 0; i < space->size(); ++i) {
        for (std::size_t j = 0; j < space->size(); ++j) {
            const KPoint& from = space->embedded(i);
            const KPoint& to = space->embedded(j);
            const std::vector<KPoint> path = chain(from, to);
            ++report.chains_checked;
            bool ok = !path.empty() && path.front() == from && path.back() == to;
            for (std::size_t k = 0; ok && k + 1 < path.size(); ++k) {
                const PointSet a = min_nbhd(path[k]);
                const PointSet b = min_nbhd(path[k + 1]);
                ok = std::any_of(a.begin(), a.end(),
                                 [&](const KPoint& p) { return b.contains(p); });
            }
            if (!ok) {
                report.pass = false;
                report.failures.push_back("invalid chain " + from.to_string() + " -> " +
                                          to.to_string());
            }
        }
    }

    // (b) closed-graph maps are constant on minimal neighborhoods and closures.
    const Census census = enumerate_census(space, limit);
    for (const auto& table : census.closed_graph_tables) {
        SpaceMap f(space, space, table);
        ++report.closed_graph_maps_checked;
        for (std::size_t x = 0; x < space->size(); ++x) {
            if (!all_equal_under(f, space->nbhd(x))) {
                report.pass = false;
                report.failures.push_back("map " + table_to_string(*space, table) +
                                          " not constant on U(" + space->label(x) + ")");
            }
            if (!all_equal_under(f, space->closure_of({x}))) {
                report.pass = false;
                report.failures.push_back("map " + table_to_string(*space, table) +
                                          " not constant on cl{" + space->label(x) + "}");
            }
        }
    }
    return report;
}

}  // namespace khal
