#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "khal/space_map.hpp"

namespace khal {

// Exhaustive enumeration refuses to run past this many tables by default;
// [0,4] (5^5 = 3125) is comfortably inside, [0,3]^2 (16^16) is not.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Classification counts for a family of self-maps, with the closed-graph
// maps kept as explicit tables. Counts are over distinct maps; in sampled
// mode duplicates (random hits on injected constants) collapse.
struct Census {
    std::string space;
    bool sampled = false;
    std::uint64_t trials = 0;  // requested random trials (sampled mode only)
    std::uint64_t seed = 0;
    std::uint64_t total = 0;
    std::uint64_t quasi_continuous = 0;
    std::uint64_t continuous = 0;
    std::uint64_t constant = 0;
    std::uint64_t closed_graph = 0;
    std::vector<std::vector<std::size_t>> closed_graph_tables;  // lex ascending
};

// Classifies every self-map of `space`, iterating tables in lexicographic
// order. Throws BudgetExceededError if |X|^|X| exceeds `limit`.
Census enumerate_census(std::shared_ptr<const FiniteSpace> space,
                        std::uint64_t limit = kDefaultEnumerationBudget);

// Classifies `trials` uniformly random tables from a seeded generator, plus
// every constant map, so the closed-graph row stays exact. Reproducible:
// identical space, trials and seed give identical censuses.
Census sample_census(std::shared_ptr<const FiniteSpace> space,
                     std::uint64_t trials,
                     std::uint64_t seed);

struct TheoremCheck {
    enum class Scope {
        kIntervalTheorem,    // Khalimsky interval, >= 2 points
        kSingletonInterval,  // one point; every self-map is constant and closed
        kBoxConjecture,      // finite box window: reported, not asserted
        kOutsideTheorem,     // any other space: reported only
    };
    bool pass = true;
    Scope scope = Scope::kOutsideTheorem;
    std::string space;
    std::vector<std::vector<std::size_t>> closed_graph_tables;
    std::vector<std::size_t> predicted_values;  // closed points of the space
    // First self-map in or out of the closed-graph set against the prediction.
    std::optional<std::vector<std::size_t>> counterexample;
    std::string detail;
};

// Exhaustively compares {self-maps with closed graph} against {constant maps
// at closed points}.
TheoremCheck verify_main_theorem(std::shared_ptr<const FiniteSpace> space,
                                 std::uint64_t limit = kDefaultEnumerationBudget);

struct LemmaSuiteReport {
    bool pass = true;
    std::uint64_t chains_checked = 0;
    std::uint64_t closed_graph_maps_checked = 0;
    std::vector<std::string> failures;
};

// (a) every pair of embedded points yields a chain whose consecutive minimal
// neighborhoods overlap; (b) every closed-graph self-map is constant on each
// minimal neighborhood and each point closure.
LemmaSuiteReport lemma_suite(std::shared_ptr<const FiniteSpace> space,
                             std::uint64_t limit = kDefaultEnumerationBudget);

// |X|^|X| capped at 2^63-1, for budget checks.
std::uint64_t self_map_count_saturating(std::uint64_t points);

}  // namespace khal
