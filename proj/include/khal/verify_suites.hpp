#pragma once

#include <string>
#include <vector>

namespace khal {

// Seed used by every randomized check in the verification suites.
inline constexpr std::uint64_t kSuiteSeed = 0x6b68616cULL;

struct SuiteLine {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<SuiteLine> lines;
};

// Exhaustive interval check: closed-graph self-maps of [a,b] are exactly the
// constants at even points, for every -4 <= a <= 4 and a < b <= a+4.
SuiteLine check_interval_theorem();

// The five fixture maps classify as the diagram says, pointwise over the
// window [-4,4]^n for n in {1,2}, with closed-graph refutation on [-2,2]^n.
SuiteLine check_example_fixtures();

// Every closed-graph self-map of [0,2], [0,3], [0,4] is constant on every
// minimal neighborhood and every point closure.
SuiteLine check_constancy_propagation();

// 1000 seeded random point pairs per dimension 1..3 in [-100,100]^n all
// produce chains with overlapping consecutive neighborhoods.
SuiteLine check_chain_validity();

// Compactified graph decision agrees with "globally constant at a closed
// point" on the constant families and on the 2^3 window perturbations.
SuiteLine check_compactified_agreement();

// Box windows: exhaustive census on [0,1]^2 and seeded sampling on [0,2]^2
// find closed graphs exactly at the all-even constants.
SuiteLine check_box_conjecture();

// Alexandroff axiom, closure duality and the neighborhood product law over
// the tested coordinate ranges, plus product/closure commutation on small
// interval products.
SuiteLine check_structural_invariants();

SuiteResult run_suite(const std::string& name);  // lemmas|theorem|compactified|examples
std::vector<SuiteResult> run_all_suites();

std::string render_suites(const std::vector<SuiteResult>& results);

}  // namespace khal
