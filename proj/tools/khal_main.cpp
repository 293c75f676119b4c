#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "khal/compactified.hpp"
#include "khal/enumeration.hpp"
#include "khal/manifest.hpp"
#include "khal/render.hpp"
#include "khal/rule_map.hpp"
#include "khal/verify_suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalidSpace = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 70;

std::string point_str(const khal::KPoint& p) {
    return p.dim() == 1 ? std::to_string(p[0]) : p.to_string();
}

int report_manifest_error(const khal::ManifestError& e) {
    std::cerr << "manifest error";
    if (e.line_col) {
        std::cerr << " at line " << e.line_col->first << ", column " << e.line_col->second;
    }
    std::cerr << ": " << e.what() << "\n";
    return kExitParse;
}

int require_valid(const khal::FiniteSpace& space) {
    const auto violations = space.validate();
    if (violations.empty()) return kExitOk;
    std::cerr << "invalid space (" << violations.size() << " violation(s)):\n";
    for (const auto& v : violations) {
        std::cerr << "  " << v.describe(space) << "\n";
    }
    return kExitInvalidSpace;
}

khal::KPoint parse_cli_point(const std::string& text) {
    std::vector<std::int64_t> coords;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string part =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        coords.push_back(std::stoll(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return khal::KPoint(std::move(coords));
}

int cmd_classify(const std::string& path) {
    khal::Manifest manifest;
    try {
        manifest = khal::load_manifest_file(path);
    } catch (const khal::ManifestError& e) {
        return report_manifest_error(e);
    }

    if (manifest.ext_map) {
        const auto& f = *manifest.ext_map;
        std::cout << "self-map of the compactified " << f.dim() << "-dimensional lattice\n";
        if (const auto value = f.global_constant_value()) {
            std::cout << "constant: yes (value " << value->to_string() << ")\n";
        } else {
            std::cout << "constant: no\n";
        }
        std::cout << "continuous: n/a for compactified maps\n";
        std::cout << "quasi_continuous: n/a for compactified maps\n";
        const khal::ExtGraphCheck check = khal::has_closed_graph_ext(f);
        std::cout << "closed_graph: " << (check.holds ? "yes" : "no");
        if (check.witness) {
            std::cout << " (witness x=" << check.witness->first.to_string()
                      << ", y=" << check.witness->second.to_string() << "; "
                      << check.condition << ")";
        }
        std::cout << "\n";
        return kExitOk;
    }

    if (const int rc = require_valid(*manifest.space); rc != kExitOk) return rc;

    if (manifest.table_map) {
        try {
            const khal::PropertyReport report = khal::classify(*manifest.table_map);
            std::cout << "map on " << manifest.space->description() << "\n";
            std::cout << khal::render_report_text(report, *manifest.space, *manifest.space);
        } catch (const std::logic_error& e) {
            std::cerr << "internal error: " << e.what() << "\n";
            return kExitInternal;
        }
        return kExitOk;
    }

    if (manifest.rule) {
        const auto window = manifest.space->lattice_window();
        const khal::RuleReport report = khal::analyze_rule(*manifest.rule, *window, *window);
        std::cout << "rule map over window " << window->to_string() << "\n";
        if (report.constant_value) {
            std::cout << "constant: yes (value " << report.constant_value->to_string() << ")\n";
        } else {
            std::cout << "constant: no\n";
        }
        std::cout << "continuous: " << (report.continuous_on_window ? "yes" : "no");
        if (report.continuity_witness) {
            std::cout << " (fails at " << point_str(*report.continuity_witness) << ")";
        }
        std::cout << "\n";
        std::cout << "quasi_continuous: " << (report.quasi_continuous_on_window ? "yes" : "no");
        if (report.quasi_witness) {
            std::cout << " (fails at " << point_str(*report.quasi_witness) << ")";
        }
        std::cout << "\n";
        std::cout << "closed_graph: ";
        switch (report.graph_status) {
            case khal::RuleReport::GraphStatus::kClosed:
                std::cout << "yes (constant at a closed point)";
                break;
            case khal::RuleReport::GraphStatus::kNotClosed:
                std::cout << "no";
                break;
            case khal::RuleReport::GraphStatus::kNotRefutedInRegion:
                std::cout << "not refuted within the window (no proof either way)";
                break;
        }
        if (report.graph_witness) {
            std::cout << " (witness x=" << point_str(report.graph_witness->first)
                      << ", y=" << point_str(report.graph_witness->second) << ")";
        }
        std::cout << "\n";
        std::cout << "summary: " << report.summary() << "\n";
        return kExitOk;
    }

    std::cerr << "manifest has no map to classify\n";
    return kExitParse;
}

int cmd_enumerate(const std::string& path, std::uint64_t limit, std::uint64_t sample,
                  bool sample_set, std::uint64_t seed, const std::string& format, bool verify) {
    khal::Manifest manifest;
    try {
        manifest = khal::load_manifest_file(path);
    } catch (const khal::ManifestError& e) {
        return report_manifest_error(e);
    }
    if (!manifest.space) {
        std::cerr << "enumerate needs a finite space manifest\n";
        return kExitParse;
    }
    if (const int rc = require_valid(*manifest.space); rc != kExitOk) return rc;

    khal::Census census;
    try {
        census = sample_set ? khal::sample_census(manifest.space, sample, seed)
                            : khal::enumerate_census(manifest.space, limit);
    } catch (const khal::BudgetExceededError& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    }

    khal::TheoremCheck check;
    if (verify) {
        try {
            check = khal::verify_main_theorem(manifest.space, limit);
        } catch (const khal::BudgetExceededError& e) {
            std::cerr << e.what() << "\n";
            return kExitBudget;
        }
    }

    if (format == "csv") {
        std::cout << khal::render_census_csv(census);
        if (verify) std::cout << "verify," << (check.pass ? "pass" : "counterexample") << "\n";
    } else if (format == "json") {
        std::cout << (verify ? khal::render_census_json(census, *manifest.space, check)
                             : khal::render_census_json(census, *manifest.space));
    } else {
        std::cout << khal::render_census_text(census, *manifest.space);
        if (verify) std::cout << khal::render_theorem_check(check);
    }
    return verify && !check.pass ? kExitCounterexample : kExitOk;
}

int cmd_chain(const std::string& from_text, const std::string& to_text) {
    khal::KPoint from, to;
    try {
        from = parse_cli_point(from_text);
        to = parse_cli_point(to_text);
    } catch (const std::exception& e) {
        std::cerr << "cannot parse point: " << e.what() << "\n";
        return kExitParse;
    }
    std::vector<khal::KPoint> path;
    try {
        path = khal::chain(from, to);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }
    std::string line = "chain:";
    for (const khal::KPoint& p : path) line += " " + point_str(p);
    std::cout << line << "\n";
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const khal::PointSet a = khal::min_nbhd(path[k]);
        const khal::PointSet b = khal::min_nbhd(path[k + 1]);
        for (const khal::KPoint& p : a) {
            if (b.contains(p)) {
                std::cout << "overlap(" << point_str(path[k]) << "," << point_str(path[k + 1])
                          << "): " << point_str(p) << "\n";
                break;
            }
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite) {
    std::vector<khal::SuiteResult> results;
    if (suite == "all") {
        results = khal::run_all_suites();
    } else {
        results = {khal::run_suite(suite)};
    }
    std::cout << khal::render_suites(results);
    for (const auto& r : results) {
        if (!r.pass) return kExitCounterexample;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"khal: Khalimsky digital topology toolkit"};
    app.require_subcommand(1);

    std::string manifest_path;
    std::uint64_t limit = khal::kDefaultEnumerationBudget;
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;
    std::string format = "text";
    bool verify = false;

    CLI::App* classify = app.add_subcommand("classify", "classify the map in a manifest");
    classify->add_option("manifest", manifest_path, "manifest file")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "census of self-maps of a space");
    enumerate->add_option("manifest", manifest_path, "manifest file")->required();
    enumerate->add_option("--limit", limit, "exhaustive enumeration budget");
    CLI::Option* sample_opt =
        enumerate->add_option("--sample", sample, "sample this many random maps");
    enumerate->add_option("--seed", seed, "random seed for sampling");
    enumerate->add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    enumerate->add_flag("--verify", verify, "also compare closed graphs against the "
                                            "constant-at-closed-point prediction");

    std::string chain_from, chain_to;
    CLI::App* chain_cmd = app.add_subcommand("chain", "overlapping-neighborhood chain "
                                                      "between two lattice points");
    chain_cmd->add_option("from", chain_from, "comma-separated coordinates")->required();
    chain_cmd->add_option("to", chain_to, "comma-separated coordinates")->required();

    std::string suite = "all";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--suite", suite, "all, lemmas, theorem, compactified or examples")
        ->check(CLI::IsMember({"all", "lemmas", "theorem", "compactified", "examples"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (classify->parsed()) return cmd_classify(manifest_path);
        if (enumerate->parsed()) {
            return cmd_enumerate(manifest_path, limit, sample, sample_opt->count() > 0, seed,
                                 format, verify);
        }
        if (chain_cmd->parsed()) return cmd_chain(chain_from, chain_to);
        if (verify_cmd->parsed()) return cmd_verify(suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
