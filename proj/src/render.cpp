#include "khal/render.hpp"

#include <json.hpp>

namespace khal {

namespace {

nlohmann::json table_json(const FiniteSpace& space, const std::vector<std::size_t>& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t x = 0; x < table.size(); ++x) {
        entries.push_back({space.label(x), space.label(table[x])});
    }
    return entries;
}

}  // namespace

std::string render_census_text(const Census& census, const FiniteSpace& space) {
    std::string out;
    out += "census of self-maps: " + census.space + "\n";
    if (census.sampled) {
        out += "mode: sampled (" + std::to_string(census.trials) + " trials, seed " +
               std::to_string(census.seed) + ", all constant maps injected)\n";
    } else {
        out += "mode: exhaustive\n";
    }
    out += "total: " + std::to_string(census.total) + "\n";
    out += "quasi_continuous: " + std::to_string(census.quasi_continuous) + "\n";
    out += "continuous: " + std::to_string(census.continuous) + "\n";
    out += "constant: " + std::to_string(census.constant) + "\n";
    out += "closed_graph: " + std::to_string(census.closed_graph) + "\n";
    for (const auto& table : census.closed_graph_tables) {
        std::string line = "closed-graph map:";
        for (std::size_t x = 0; x < table.size(); ++x) {
            line += " " + space.label(x) + "->" + space.label(table[x]);
        }
        out += line + "\n";
    }
    return out;
}

std::string render_census_csv(const Census& census) {
    std::string out = "class,count\n";
    out += "all," + std::to_string(census.total) + "\n";
    out += "quasi_continuous," + std::to_string(census.quasi_continuous) + "\n";
    out += "continuous," + std::to_string(census.continuous) + "\n";
    out += "constant," + std::to_string(census.constant) + "\n";
    out += "closed_graph," + std::to_string(census.closed_graph) + "\n";
    return out;
}

namespace {

nlohmann::json census_json_value(const Census& census, const FiniteSpace& space) {
    nlohmann::json j;
    j["space"] = census.space;
    j["mode"] = census.sampled ? "sampled" : "exhaustive";
    if (census.sampled) {
        j["trials"] = census.trials;
        j["seed"] = census.seed;
    }
    j["counts"] = {
        {"all", census.total},
        {"quasi_continuous", census.quasi_continuous},
        {"continuous", census.continuous},
        {"constant", census.constant},
        {"closed_graph", census.closed_graph},
    };
    nlohmann::json tables = nlohmann::json::array();
    for (const auto& table : census.closed_graph_tables) {
        tables.push_back(table_json(space, table));
    }
    j["closed_graph_maps"] = tables;
    return j;
}

const char* scope_name(TheoremCheck::Scope scope) {
    switch (scope) {
        case TheoremCheck::Scope::kIntervalTheorem: return "interval";
        case TheoremCheck::Scope::kSingletonInterval: return "singleton interval";
        case TheoremCheck::Scope::kBoxConjecture: return "box conjecture extension";
        case TheoremCheck::Scope::kOutsideTheorem: return "outside theorem scope";
    }
    return "unknown";
}

}  // namespace

std::string render_census_json(const Census& census, const FiniteSpace& space) {
    return census_json_value(census, space).dump(2) + "\n";
}

std::string render_census_json(const Census& census, const FiniteSpace& space,
                               const TheoremCheck& check) {
    nlohmann::json j = census_json_value(census, space);
    nlohmann::json v;
    v["scope"] = scope_name(check.scope);
    v["pass"] = check.pass;
    v["detail"] = check.detail;
    if (check.counterexample) {
        v["counterexample"] = table_json(space, *check.counterexample);
    }
    j["verification"] = v;
    return j.dump(2) + "\n";
}

std::string render_theorem_check(const TheoremCheck& check) {
    std::string out;
    switch (check.scope) {
        case TheoremCheck::Scope::kIntervalTheorem:
            out += "interval case\n";
            break;
        case TheoremCheck::Scope::kSingletonInterval:
            out += "singleton interval (trivial case)\n";
            break;
        case TheoremCheck::Scope::kBoxConjecture:
            out += "box window: conjecture extension (reported, not asserted)\n";
            break;
        case TheoremCheck::Scope::kOutsideTheorem:
            out += "outside the interval/box setting (reported only)\n";
            break;
    }
    out += std::string("verification: ") + (check.pass ? "pass" : "COUNTEREXAMPLE") + "\n";
    out += check.detail + "\n";
    return out;
}

std::string render_report_text(const PropertyReport& report, const FiniteSpace& domain,
                               const FiniteSpace& codomain) {
    std::string out;
    if (report.constant_value) {
        out += "constant: yes (value " + codomain.label(*report.constant_value) + ")\n";
    } else {
        out += "constant: no\n";
    }
    out += std::string("continuous: ") + (report.continuous.holds ? "yes" : "no");
    if (report.continuous.witness) {
        out += " (fails at " + domain.label(*report.continuous.witness) + ")";
    }
    out += "\n";
    out += std::string("quasi_continuous: ") + (report.quasi_continuous.holds ? "yes" : "no");
    if (report.quasi_continuous.witness) {
        out += " (fails at " + domain.label(*report.quasi_continuous.witness) + ")";
    }
    out += "\n";
    out += std::string("closed_graph: ") + (report.closed_graph.holds ? "yes" : "no");
    if (report.closed_graph.witness) {
        out += " (witness x=" + domain.label(report.closed_graph.witness->first) +
               ", y=" + codomain.label(report.closed_graph.witness->second) + ")";
    }
    out += "\n";
    out += "tier: " + diagram_tier(report) + "\n";
    return out;
}

}  // namespace khal
