#include "khal/space_map.hpp"

#include <algorithm>

namespace khal {

namespace {

bool in(const IndexSet& s, std::size_t v) {
    return std::binary_search(s.begin(), s.end(), v);
}

// f(U(w)) contained in target, where target is a sorted index set.
bool image_of_nbhd_inside(const SpaceMap& f, std::size_t w, const IndexSet& target) {
    for (std::size_t q : f.domain->nbhd(w)) {
        if (!in(target, f(q))) return false;
    }
    return true;
}

}  // namespace

SpaceMap::SpaceMap(std::shared_ptr<const FiniteSpace> dom,
                   std::shared_ptr<const FiniteSpace> cod,
                   std::vector<std::size_t> tbl)
    : domain(std::move(dom)), codomain(std::move(cod)), table(std::move(tbl)) {
    if (!domain || !codomain) {
        throw std::invalid_argument("map requires domain and codomain");
    }
    if (table.size() != domain->size()) {
        throw std::invalid_argument("map table must be total on the domain");
    }
    for (std::size_t v : table) {
        if (v >= codomain->size()) {
            throw std::invalid_argument("map table value out of codomain range");
        }
    }
}

std::optional<std::size_t> is_constant(const SpaceMap& f) {
    if (f.table.empty()) return std::nullopt;
    const std::size_t v = f.table[0];
    for (std::size_t w : f.table) {
        if (w != v) return std::nullopt;
    }
    return v;
}

PointCheck is_continuous(const SpaceMap& f) {
    for (std::size_t x = 0; x < f.domain->size(); ++x) {
        if (!image_of_nbhd_inside(f, x, f.codomain->nbhd(f(x)))) {
            return {false, x};
        }
    }
    return {};
}

PointCheck is_quasi_continuous(const SpaceMap& f) {
    for (std::size_t a = 0; a < f.domain->size(); ++a) {
        const IndexSet& target = f.codomain->nbhd(f(a));
        bool found = false;
        for (std::size_t w : f.domain->nbhd(a)) {
            if (image_of_nbhd_inside(f, w, target)) {
                found = true;
                break;
            }
        }
        if (!found) return {false, a};
    }
    return {};
}

bool graph_closure_member(const SpaceMap& f, std::size_t x, std::size_t y) {
    const IndexSet& uy = f.codomain->nbhd(y);
    for (std::size_t xp : f.domain->nbhd(x)) {
        if (in(uy, f(xp))) return true;
    }
    return false;
}

GraphCheck has_closed_graph(const SpaceMap& f) {
    for (std::size_t y = 0; y < f.codomain->size(); ++y) {
        for (std::size_t x = 0; x < f.domain->size(); ++x) {
            if (f(x) != y && graph_closure_member(f, x, y)) {
                return {false, std::make_pair(x, y)};
            }
        }
    }
    return {};
}

PropertyReport classify(const SpaceMap& f) {
    PropertyReport report;
    report.constant_value = is_constant(f);
    report.continuous = is_continuous(f);
    report.quasi_continuous = is_quasi_continuous(f);
    report.closed_graph = has_closed_graph(f);

    if (report.closed_graph.holds && !report.is_constant() && f.domain->size() > 0 &&
        f.domain->is_chain_connected()) {
        throw std::logic_error("nesting violation: closed graph but not constant");
    }
    if (report.is_constant() && !report.continuous.holds) {
        throw std::logic_error("nesting violation: constant but not continuous");
    }
    if (report.continuous.holds && !report.quasi_continuous.holds) {
        throw std::logic_error("nesting violation: continuous but not quasi-continuous");
    }
    return report;
}

std::string diagram_tier(const PropertyReport& report) {
    if (report.closed_graph.holds) return "closed graph";
    if (report.is_constant()) return "constant, no closed graph";
    if (report.continuous.holds) return "continuous, non-constant";
    if (report.quasi_continuous.holds) return "quasi-continuous, not continuous";
    return "not quasi-continuous";
}

}  // namespace khal
