#include "khal/verify_suites.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "khal/compactified.hpp"
#include "khal/enumeration.hpp"
#include "khal/rule_map.hpp"

namespace khal {

namespace {

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

std::int64_t uniform_coord(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    uniform_index(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

KPoint random_point(std::mt19937_64& rng, std::size_t dim, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> coords(dim);
    for (auto& c : coords) c = uniform_coord(rng, lo, hi);
    return KPoint(std::move(coords));
}

bool all_coords_odd(const KPoint& p) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p[i] % 2 == 0) return false;
    }
    return true;
}

Box cube(std::size_t dim, std::int64_t lo, std::int64_t hi) {
    return Box(std::vector<std::pair<std::int64_t, std::int64_t>>(dim, {lo, hi}));
}

// Replays a refutation witness through the defining condition.
bool witness_reproduces(const RuleMap& rule, const std::pair<KPoint, KPoint>& w) {
    const auto& [x, y] = w;
    if (rule.apply(x) == y) return false;
    const PointSet uy = min_nbhd(y);
    for (const KPoint& xp : min_nbhd(x)) {
        if (uy.contains(rule.apply(xp))) return true;
    }
    return false;
}

bool chain_is_valid(const KPoint& from, const KPoint& to) {
    const std::vector<KPoint> path = chain(from, to);
    if (path.empty() || path.front() != from || path.back() != to) return false;
    std::uint64_t bound = 2;
    for (std::size_t i = 0; i < from.dim(); ++i) {
        const std::uint64_t delta = static_cast<std::uint64_t>(
            from[i] > to[i] ? from[i] - to[i] : to[i] - from[i]);
        bound += delta / 2 + 3;
    }
    if (path.size() > bound) return false;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const PointSet a = min_nbhd(path[k]);
        const PointSet b = min_nbhd(path[k + 1]);
        if (std::none_of(a.begin(), a.end(),
                         [&](const KPoint& p) { return b.contains(p); })) {
            return false;
        }
    }
    return true;
}

SuiteLine pass_line(std::string name, std::string detail) {
    return {std::move(name), true, std::move(detail)};
}

SuiteLine fail_line(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

}  // namespace

SuiteLine check_interval_theorem() {
    const std::string name = "interval theorem";
    std::size_t intervals = 0;
    for (std::int64_t a = -4; a <= 4; ++a) {
        for (std::int64_t b = a + 1; b <= a + 4; ++b) {
            auto space = std::make_shared<FiniteSpace>(interval_space(a, b));
            const TheoremCheck check = verify_main_theorem(space);
            if (!check.pass) {
                return fail_line(name, space->description() + ": " + check.detail);
            }
            std::size_t evens = 0;
            for (std::int64_t x = a; x <= b; ++x) {
                if (x % 2 == 0) ++evens;
            }
            if (check.closed_graph_tables.size() != evens) {
                return fail_line(name, space->description() + ": expected " +
                                           std::to_string(evens) + " closed-graph maps");
            }
            ++intervals;
        }
    }
    const Census c02 = enumerate_census(std::make_shared<FiniteSpace>(interval_space(0, 2)));
    const Census c04 = enumerate_census(std::make_shared<FiniteSpace>(interval_space(0, 4)));
    if (c02.total != 27 || c02.closed_graph != 2 || c04.total != 3125 || c04.closed_graph != 3) {
        return fail_line(name, "reference censuses for [0,2] / [0,4] are off");
    }
    return pass_line(name, std::to_string(intervals) +
                               " intervals: closed-graph maps = constants at even points");
}

SuiteLine check_example_fixtures() {
    const std::string name = "diagram fixtures";
    std::size_t checks = 0;
    for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
        const Box window = cube(n, -4, 4);
        const Box region = cube(n, -2, 2);
        const std::vector<KPoint> pts = window.points();

        const RuleMap ex_a = constant_rule(KPoint(std::vector<std::int64_t>(n, 0)));
        const RuleMap ex_b = constant_rule(KPoint(std::vector<std::int64_t>(n, 1)));
        const RuleMap ex_c = identity_rule(n);
        const RuleMap ex_d = staircase_rule(n);
        const RuleMap ex_e = parity_sign_rule(n);

        for (const KPoint& p : pts) {
            const bool odd = all_coords_odd(p);
            struct Expected {
                const RuleMap* rule;
                bool continuous;
                bool quasi;
                const char* tag;
            };
            const Expected table[] = {
                {&ex_a, true, true, "A"},   {&ex_b, true, true, "B"},
                {&ex_c, true, true, "C"},   {&ex_d, odd, true, "D"},
                {&ex_e, odd, odd, "E"},
            };
            for (const Expected& e : table) {
                if (check_rule_at(*e.rule, LocalProperty::kContinuity, p) != e.continuous ||
                    check_rule_at(*e.rule, LocalProperty::kQuasiContinuity, p) != e.quasi) {
                    return fail_line(name, std::string("example ") + e.tag + " at " +
                                               p.to_string() + ", n=" + std::to_string(n));
                }
                ++checks;
            }
        }

        if (!constant_map_closed_graph(ExtPoint(*ex_a.constant_value())) ||
            refute_closed_graph_rule(ex_a, region).has_value()) {
            return fail_line(name, "example A closed graph, n=" + std::to_string(n));
        }
        if (constant_map_closed_graph(ExtPoint(*ex_b.constant_value()))) {
            return fail_line(name, "example B value must not be closed, n=" + std::to_string(n));
        }
        for (const auto& [rule, tag] :
             {std::make_pair(&ex_b, "B"), {&ex_c, "C"}, {&ex_d, "D"}, {&ex_e, "E"}}) {
            const auto witness = refute_closed_graph_rule(*rule, region);
            if (!witness || !witness_reproduces(*rule, *witness)) {
                return fail_line(name, std::string("example ") + tag +
                                           " not refuted, n=" + std::to_string(n));
            }
            ++checks;
        }
        if (ex_c.constant_value() || ex_d.constant_value() || ex_e.constant_value()) {
            return fail_line(name, "examples C, D, E must be non-constant");
        }
    }
    return pass_line(name, "fixtures A-E match for n=1 and n=2 (5/5, " +
                               std::to_string(checks) + " pointwise checks)");
}

SuiteLine check_constancy_propagation() {
    const std::string name = "constancy propagation";
    const std::size_t expected_closed[] = {2, 2, 3};
    std::uint64_t maps = 0;
    for (std::int64_t b = 2; b <= 4; ++b) {
        auto space = std::make_shared<FiniteSpace>(interval_space(0, b));
        const LemmaSuiteReport report = lemma_suite(space);
        if (!report.pass) {
            return fail_line(name, space->description() + ": " + report.failures.front());
        }
        if (report.closed_graph_maps_checked != expected_closed[b - 2]) {
            return fail_line(name, space->description() + ": unexpected closed-graph count");
        }
        maps += report.closed_graph_maps_checked;
    }
    return pass_line(name, "all closed-graph maps of [0,2], [0,3], [0,4] are constant on "
                           "neighborhoods and closures (" +
                               std::to_string(maps) + " maps)");
}

SuiteLine check_chain_validity() {
    const std::string name = "chain validity";
    std::uint64_t chains = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        std::mt19937_64 rng(kSuiteSeed + n);
        for (int t = 0; t < 1000; ++t) {
            const KPoint from = random_point(rng, n, -100, 100);
            const KPoint to = random_point(rng, n, -100, 100);
            if (!chain_is_valid(from, to)) {
                return fail_line(name, "invalid chain " + from.to_string() + " -> " +
                                           to.to_string());
            }
            ++chains;
        }
    }
    return pass_line(name, std::to_string(chains) + " random chains valid in dimensions 1-3");
}

SuiteLine check_compactified_agreement() {
    const std::string name = "compactified agreement";

    std::vector<EventuallyConstantMap> family;
    for (std::int64_t v : {0, 1, 2, 3}) {
        family.push_back(EventuallyConstantMap::constant(1, ExtPoint(KPoint{v})));
    }
    family.push_back(EventuallyConstantMap::constant(1, ExtPoint::infinity()));
    for (const KPoint& v : {KPoint{0, 0}, KPoint{1, 0}, KPoint{2, 2}}) {
        family.push_back(EventuallyConstantMap::constant(2, ExtPoint(v)));
    }
    family.push_back(EventuallyConstantMap::constant(2, ExtPoint::infinity()));
    for (const EventuallyConstantMap& f : family) {
        if (has_closed_graph_ext(f).holds != constant_map_closed_graph(f.tail())) {
            return fail_line(name, "constant map disagreement at " + f.tail().to_string());
        }
    }

    // All 2^3 window perturbations over [0,2] with values in {(0),(2)}.
    const Box window = cube(1, 0, 2);
    std::vector<EventuallyConstantMap> perturbations;
    std::size_t closed_count = 0;
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<ExtPoint> values;
        for (unsigned bit = 0; bit < 3; ++bit) {
            values.emplace_back(KPoint{(mask >> bit) & 1u ? 2 : 0});
        }
        perturbations.emplace_back(1, window, std::move(values), ExtPoint(KPoint{0}),
                                   ExtPoint(KPoint{0}));
        const ExtGraphCheck check = has_closed_graph_ext(perturbations.back());
        if (check.holds) {
            ++closed_count;
            if (mask != 0) {
                return fail_line(name, "perturbed map must not have closed graph");
            }
        }
    }
    if (closed_count != 1) {
        return fail_line(name, "expected exactly the unperturbed map to pass");
    }
    family.insert(family.end(), perturbations.begin(), perturbations.end());
    const CompactifiedTheoremReport report = verify_compactified_theorem(family);
    if (!report.pass) {
        return fail_line(name, report.mismatches.front());
    }
    return pass_line(name, std::to_string(report.checked) +
                               " maps agree with the constant-at-closed-point criterion");
}

SuiteLine check_box_conjecture() {
    const std::string name = "box conjecture";
    auto small_box = std::make_shared<FiniteSpace>(box_space(cube(2, 0, 1)));
    const TheoremCheck check = verify_main_theorem(small_box);
    if (!check.pass || check.scope != TheoremCheck::Scope::kBoxConjecture) {
        return fail_line(name, "[0,1]^2: " + check.detail);
    }
    if (check.closed_graph_tables.size() != 1 ||
        check.closed_graph_tables[0] !=
            std::vector<std::size_t>(4, *small_box->index_of_embedded(KPoint{0, 0}))) {
        return fail_line(name, "[0,1]^2 must have exactly the constant (0,0) map");
    }

    auto big_box = std::make_shared<FiniteSpace>(box_space(cube(2, 0, 2)));
    const Census census = sample_census(big_box, 100000, kSuiteSeed);
    std::vector<std::vector<std::size_t>> expected;
    for (const KPoint& v : {KPoint{0, 0}, KPoint{0, 2}, KPoint{2, 0}, KPoint{2, 2}}) {
        expected.emplace_back(big_box->size(), *big_box->index_of_embedded(v));
    }
    std::sort(expected.begin(), expected.end());
    if (census.closed_graph_tables != expected) {
        return fail_line(name, "[0,2]^2 sampled census closed-graph set is off");
    }
    return pass_line(name, "conjecture extension: [0,1]^2 exhaustive (1 of 256) and [0,2]^2 "
                           "sampled (4 injected constants) as predicted");
}

SuiteLine check_structural_invariants() {
    const std::string name = "structural invariants";

    // 1-D axiom and duality, exhaustive on [-100,100].
    for (std::int64_t x = -100; x <= 100; ++x) {
        const auto ux = min_nbhd_1d(x);
        for (std::int64_t q : ux) {
            const auto uq = min_nbhd_1d(q);
            if (!std::includes(ux.begin(), ux.end(), uq.begin(), uq.end())) {
                return fail_line(name, "1-D axiom fails at " + std::to_string(x));
            }
        }
        for (std::int64_t y = -100; y <= 100; ++y) {
            const auto cy = closure_1d(x);
            const bool in_closure = std::find(cy.begin(), cy.end(), y) != cy.end();
            const auto uy = min_nbhd_1d(y);
            const bool dual = std::find(uy.begin(), uy.end(), x) != uy.end();
            if (in_closure != dual) {
                return fail_line(name, "1-D duality fails at (" + std::to_string(x) + "," +
                                           std::to_string(y) + ")");
            }
        }
    }

    const auto check_point = [&](const KPoint& p) -> bool {
        const PointSet up = min_nbhd(p);
        const PointSet cp = point_closure(p);
        std::size_t evens = 0;
        for (std::size_t i = 0; i < p.dim(); ++i) {
            if (p[i] % 2 == 0) ++evens;
        }
        std::uint64_t pow3_even = 1, pow3_odd = 1;
        for (std::size_t i = 0; i < evens; ++i) pow3_even *= 3;
        for (std::size_t i = 0; i < p.dim() - evens; ++i) pow3_odd *= 3;
        if (up.size() != pow3_even || cp.size() != pow3_odd) return false;
        for (const KPoint& q : up) {
            if (!min_nbhd(q).is_subset_of(up)) return false;
        }
        // Duality and the product law over the surrounding 5^n block.
        std::vector<std::pair<std::int64_t, std::int64_t>> around;
        for (std::size_t i = 0; i < p.dim(); ++i) around.emplace_back(p[i] - 2, p[i] + 2);
        for (const KPoint& q : Box(around).points()) {
            if (cp.contains(q) != min_nbhd(q).contains(p)) return false;
            bool coordwise = true;
            for (std::size_t i = 0; i < p.dim(); ++i) {
                const auto axis = min_nbhd_1d(p[i]);
                if (std::find(axis.begin(), axis.end(), q[i]) == axis.end()) {
                    coordwise = false;
                    break;
                }
            }
            if (up.contains(q) != coordwise) return false;
        }
        return true;
    };

    for (std::int64_t x = -100; x <= 100; ++x) {
        for (std::int64_t y = -100; y <= 100; ++y) {
            if (!check_point(KPoint{x, y})) {
                return fail_line(name, "2-D invariants fail at (" + std::to_string(x) + "," +
                                           std::to_string(y) + ")");
            }
        }
    }
    std::mt19937_64 rng(kSuiteSeed);
    for (int t = 0; t < 2000; ++t) {
        const KPoint p = random_point(rng, 3, -100, 100);
        if (!check_point(p)) {
            return fail_line(name, "3-D invariants fail at " + p.to_string());
        }
    }
    for (std::int64_t x : {-100, -99, -51, -50, -1, 0, 1, 49, 50, 99, 100}) {
        for (std::int64_t y : {-100, -99, 0, 1, 99, 100}) {
            for (std::int64_t z : {-100, -1, 0, 2, 99, 100}) {
                if (!check_point(KPoint{x, y, z})) {
                    return fail_line(name, "3-D invariants fail at boundary pattern");
                }
            }
        }
    }

    // closed_points(interval) = even integers, exhaustively for small intervals.
    for (std::int64_t a = -10; a <= 10; ++a) {
        for (std::int64_t b = a; b <= 10; ++b) {
            const FiniteSpace s = interval_space(a, b);
            IndexSet evens;
            for (std::int64_t x = a; x <= b; ++x) {
                if (x % 2 == 0) evens.push_back(static_cast<std::size_t>(x - a));
            }
            if (b > a && s.closed_points() != evens) {
                return fail_line(name, "closed points of " + s.description() +
                                           " are not the even integers");
            }
        }
    }

    // Product/closure commutation, exhaustive over interval products up to 5x5.
    for (std::int64_t len1 = 1; len1 <= 5; ++len1) {
        for (std::int64_t len2 = 1; len2 <= 5; ++len2) {
            const FiniteSpace s1 = interval_space(-1, -1 + len1 - 1);
            const FiniteSpace s2 = interval_space(0, len2 - 1);
            const FiniteSpace prod = product(s1, s2);
            if (!prod.validate().empty()) {
                return fail_line(name, "product space fails validation");
            }
            for (std::size_t a = 0; a < s1.size(); ++a) {
                const IndexSet ca = s1.closure_of({a});
                for (std::size_t b = 0; b < s2.size(); ++b) {
                    const IndexSet cb = s2.closure_of({b});
                    IndexSet expected;
                    for (std::size_t qa : ca) {
                        for (std::size_t qb : cb) expected.push_back(qa * s2.size() + qb);
                    }
                    std::sort(expected.begin(), expected.end());
                    if (prod.closure_of({a * s2.size() + b}) != expected) {
                        return fail_line(name, "closure does not commute with products");
                    }
                }
            }
        }
    }

    return pass_line(name, "axiom, duality, product law and closure commutation hold on all "
                           "tested ranges");
}

SuiteResult run_suite(const std::string& name) {
    SuiteResult result;
    result.suite = name;
    if (name == "theorem") {
        result.lines = {check_interval_theorem(), check_box_conjecture()};
    } else if (name == "examples") {
        result.lines = {check_example_fixtures()};
    } else if (name == "lemmas") {
        result.lines = {check_chain_validity(), check_constancy_propagation(),
                        check_structural_invariants()};
    } else if (name == "compactified") {
        result.lines = {check_compactified_agreement()};
    } else {
        throw std::invalid_argument("unknown suite " + name);
    }
    for (const SuiteLine& line : result.lines) result.pass = result.pass && line.pass;
    return result;
}

std::vector<SuiteResult> run_all_suites() {
    return {run_suite("lemmas"), run_suite("theorem"), run_suite("compactified"),
            run_suite("examples")};
}

std::string render_suites(const std::vector<SuiteResult>& results) {
    std::string out;
    bool all_pass = true;
    for (const SuiteResult& suite : results) {
        out += "suite " + suite.suite + ": " + (suite.pass ? "PASS" : "FAIL") + "\n";
        for (const SuiteLine& line : suite.lines) {
            out += std::string("  [") + (line.pass ? "pass" : "FAIL") + "] " + line.name +
                   ": " + line.detail + "\n";
        }
        all_pass = all_pass && suite.pass;
    }
    out += std::string("overall: ") + (all_pass ? "PASS" : "FAIL") + "\n";
    return out;
}

}  // namespace khal
