#include "khal/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace khal {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
    throw ManifestError(msg);
}

std::int64_t require_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) fail(what + " must be an integer");
    return j.get<std::int64_t>();
}

KPoint parse_point(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) fail(what + " must be a nonempty array of integers");
    std::vector<std::int64_t> coords;
    coords.reserve(j.size());
    for (const auto& c : j) coords.push_back(require_int(c, what + " coordinate"));
    try {
        return KPoint(std::move(coords));
    } catch (const std::exception& e) {
        fail(what + ": " + e.what());
    }
}

Box parse_ranges(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) fail(what + " must be a nonempty array of [lo,hi] pairs");
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    for (const auto& r : j) {
        if (!r.is_array() || r.size() != 2) fail(what + " entries must be [lo,hi] pairs");
        ranges.emplace_back(require_int(r[0], what + " bound"), require_int(r[1], what + " bound"));
    }
    try {
        return Box(std::move(ranges));
    } catch (const std::exception& e) {
        fail(what + ": " + e.what());
    }
}

ExtPoint parse_ext_point(const json& j, const std::string& what) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return ExtPoint::infinity();
        fail(what + ": the only string value allowed is \"inf\"");
    }
    return ExtPoint(parse_point(j, what));
}

json point_to_json(const KPoint& p) {
    return json(p.coords());
}

json ext_point_to_json(const ExtPoint& p) {
    if (p.is_infinity()) return json("inf");
    return point_to_json(p.lattice());
}

json ranges_to_json(const Box& box) {
    json out = json::array();
    for (const auto& [a, b] : box.ranges()) out.push_back({a, b});
    return out;
}

struct ParsedSpace {
    std::shared_ptr<const FiniteSpace> space;
    json canonical;
};

ParsedSpace parse_space(const json& j);

ParsedSpace parse_product(const json& j) {
    const auto it = j.find("factors");
    if (it == j.end() || !it->is_array() || it->size() < 2) {
        fail("product space needs at least two factors");
    }
    ParsedSpace first = parse_space((*it)[0]);
    FiniteSpace acc = *first.space;
    json factors = json::array();
    factors.push_back(first.canonical);
    for (std::size_t i = 1; i < it->size(); ++i) {
        ParsedSpace next = parse_space((*it)[i]);
        acc = product(acc, *next.space);
        factors.push_back(next.canonical);
    }
    return {std::make_shared<FiniteSpace>(std::move(acc)),
            json{{"type", "product"}, {"factors", factors}}};
}

ParsedSpace parse_explicit(const json& j) {
    const auto pts = j.find("points");
    const auto nbs = j.find("min_nbhd");
    if (pts == j.end() || !pts->is_array() || pts->empty()) {
        fail("explicit space needs a nonempty points array");
    }
    if (nbs == j.end() || !nbs->is_object()) {
        fail("explicit space needs a min_nbhd object");
    }
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& p : *pts) {
        if (!p.is_string()) fail("explicit space points must be strings");
        labels.push_back(p.get<std::string>());
        if (!index.emplace(labels.back(), labels.size() - 1).second) {
            fail("duplicate point label " + labels.back());
        }
    }
    std::vector<IndexSet> nbhds(labels.size());
    for (const auto& [label, nb] : nbs->items()) {
        const auto at = index.find(label);
        if (at == index.end()) fail("min_nbhd names unknown point " + label);
        if (!nb.is_array()) fail("min_nbhd of " + label + " must be an array");
        for (const auto& q : nb) {
            if (!q.is_string()) fail("min_nbhd entries must be point labels");
            const auto qi = index.find(q.get<std::string>());
            if (qi == index.end()) fail("min_nbhd of " + label + " names unknown point");
            nbhds[at->second].push_back(qi->second);
        }
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (nbs->find(labels[i]) == nbs->end()) {
            fail("min_nbhd missing for point " + labels[i]);
        }
    }
    json canonical_nbhd = json::object();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        json list = json::array();
        for (std::size_t q : nbhds[i]) list.push_back(labels[q]);
        canonical_nbhd[labels[i]] = list;
    }
    auto space = std::make_shared<FiniteSpace>(labels, std::move(nbhds));
    return {space,
            json{{"type", "explicit"}, {"points", labels}, {"min_nbhd", canonical_nbhd}}};
}

ParsedSpace parse_space(const json& j) {
    if (!j.is_object()) fail("space must be an object");
    const auto type_it = j.find("type");
    if (type_it == j.end() || !type_it->is_string()) fail("space needs a \"type\" string");
    const std::string type = type_it->get<std::string>();
    if (type == "interval") {
        const std::int64_t a = require_int(j.value("a", json()), "interval bound a");
        const std::int64_t b = require_int(j.value("b", json()), "interval bound b");
        if (a > b) fail("interval requires a <= b");
        return {std::make_shared<FiniteSpace>(interval_space(a, b)),
                json{{"type", "interval"}, {"a", a}, {"b", b}}};
    }
    if (type == "box") {
        const Box box = parse_ranges(j.value("ranges", json()), "box ranges");
        return {std::make_shared<FiniteSpace>(box_space(box)),
                json{{"type", "box"}, {"ranges", ranges_to_json(box)}}};
    }
    if (type == "product") return parse_product(j);
    if (type == "explicit") return parse_explicit(j);
    fail("unknown space type \"" + type + "\"");
}

std::size_t resolve_point(const FiniteSpace& space, const json& j, const std::string& what) {
    if (j.is_string()) {
        const std::string label = j.get<std::string>();
        for (std::size_t i = 0; i < space.size(); ++i) {
            if (space.label(i) == label) return i;
        }
        fail(what + ": unknown point label " + label);
    }
    const KPoint p = parse_point(j, what);
    if (const auto i = space.index_of_embedded(p)) return *i;
    fail(what + ": point " + p.to_string() + " is not in the space");
}

SpaceMap parse_table_map(const std::shared_ptr<const FiniteSpace>& space, const json& j) {
    const auto pairs = j.find("pairs");
    if (pairs == j.end() || !pairs->is_array()) fail("table map needs a pairs array");
    std::vector<std::optional<std::size_t>> partial(space->size());
    for (const auto& pr : *pairs) {
        if (!pr.is_array() || pr.size() != 2) fail("table pairs must be [from, to]");
        const std::size_t from = resolve_point(*space, pr[0], "table pair source");
        const std::size_t to = resolve_point(*space, pr[1], "table pair target");
        if (partial[from]) fail("table maps point " + space->label(from) + " twice");
        partial[from] = to;
    }
    std::vector<std::size_t> table(space->size());
    for (std::size_t i = 0; i < space->size(); ++i) {
        if (!partial[i]) fail("table missing point " + space->label(i));
        table[i] = *partial[i];
    }
    return SpaceMap(space, space, std::move(table));
}

ParityRule1D::Action parse_parity_action(const json& j, const std::string& what) {
    if (j.is_object() && j.contains("offset")) {
        return ParityRule1D::Action::offset(require_int(j["offset"], what + " offset"));
    }
    if (j.is_object() && j.contains("const")) {
        return ParityRule1D::Action::constant(require_int(j["const"], what + " const"));
    }
    fail(what + " must be {\"offset\": d} or {\"const\": c}");
}

json parity_action_to_json(const ParityRule1D::Action& a) {
    if (a.kind == ParityRule1D::Action::Kind::kOffset) return json{{"offset", a.amount}};
    return json{{"const", a.amount}};
}

RuleMap parse_rule_map(std::size_t dim, const json& j, json& canonical) {
    const auto rule_it = j.find("rule");
    if (rule_it == j.end() || !rule_it->is_string()) fail("rule map needs a \"rule\" string");
    const std::string name = rule_it->get<std::string>();
    canonical = json{{"type", "rule"}, {"rule", name}};
    if (name == "constant") {
        KPoint value = parse_point(j.value("value", json()), "constant rule value");
        if (value.dim() != dim) fail("constant rule value dimension mismatch");
        canonical["value"] = point_to_json(value);
        return constant_rule(std::move(value));
    }
    if (name == "identity") return identity_rule(dim);
    if (name == "example-d") return staircase_rule(dim);
    if (name == "example-e") return parity_sign_rule(dim);
    if (name == "parity") {
        ParityRule1D h{parse_parity_action(j.value("even", json()), "parity rule even"),
                       parse_parity_action(j.value("odd", json()), "parity rule odd")};
        canonical["even"] = parity_action_to_json(h.even);
        canonical["odd"] = parity_action_to_json(h.odd);
        return parity_rule(dim, h);
    }
    fail("unknown rule \"" + name + "\"");
}

Manifest parse_compactified(const json& space_j, const json* map_j) {
    const std::size_t n =
        static_cast<std::size_t>(require_int(space_j.value("n", json()), "dimension n"));
    if (n == 0) fail("compactified space needs n >= 1");
    std::optional<Box> window;
    if (space_j.contains("box")) {
        window = parse_ranges(space_j["box"], "compactified box");
        if (window->dim() != n) fail("compactified box dimension mismatch");
    }
    if (!space_j.contains("tail")) fail("compactified space needs a tail value");
    if (!space_j.contains("infinity")) fail("compactified space needs an infinity value");
    const ExtPoint tail = parse_ext_point(space_j["tail"], "tail value");
    const ExtPoint at_inf = parse_ext_point(space_j["infinity"], "infinity value");

    std::vector<ExtPoint> values;
    json canonical_map;
    if (window) {
        const std::vector<KPoint> pts = window->points();
        if (!map_j) fail("compactified manifest with a box needs a table map");
        const auto pairs = map_j->find("pairs");
        if (pairs == map_j->end() || !pairs->is_array()) fail("table map needs a pairs array");
        std::vector<std::optional<ExtPoint>> partial(pts.size());
        for (const auto& pr : *pairs) {
            if (!pr.is_array() || pr.size() != 2) fail("table pairs must be [from, to]");
            const KPoint from = parse_point(pr[0], "table pair source");
            const auto at = std::lower_bound(pts.begin(), pts.end(), from);
            if (at == pts.end() || *at != from) {
                fail("table pair source " + from.to_string() + " outside the box");
            }
            const std::size_t idx = static_cast<std::size_t>(at - pts.begin());
            if (partial[idx]) fail("table maps point " + from.to_string() + " twice");
            partial[idx] = parse_ext_point(pr[1], "table pair target");
        }
        values.reserve(pts.size());
        json canonical_pairs = json::array();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (!partial[i]) fail("table missing point " + pts[i].to_string());
            values.push_back(*partial[i]);
            canonical_pairs.push_back({point_to_json(pts[i]), ext_point_to_json(values[i])});
        }
        canonical_map = json{{"type", "table"}, {"pairs", canonical_pairs}};
    } else if (map_j) {
        fail("compactified manifest without a box cannot carry a map");
    }

    Manifest out;
    try {
        out.ext_map = EventuallyConstantMap(n, window, std::move(values), tail, at_inf);
    } catch (const std::exception& e) {
        fail(std::string("compactified map: ") + e.what());
    }
    json canonical_space = json{{"type", "compactified"},
                                {"n", n},
                                {"tail", ext_point_to_json(tail)},
                                {"infinity", ext_point_to_json(at_inf)}};
    if (window) canonical_space["box"] = ranges_to_json(*window);
    out.canonical = json{{"space", canonical_space}};
    if (!canonical_map.is_null()) out.canonical["map"] = canonical_map;
    return out;
}

}  // namespace

Manifest parse_manifest(const json& doc) {
    if (!doc.is_object()) fail("manifest must be a JSON object");
    const auto space_it = doc.find("space");
    if (space_it == doc.end()) fail("manifest needs a \"space\" entry");
    const json* map_j = doc.contains("map") ? &doc["map"] : nullptr;
    if (map_j && !map_j->is_object()) fail("map must be an object");

    if (space_it->is_object() && space_it->value("type", "") == "compactified") {
        return parse_compactified(*space_it, map_j);
    }

    Manifest out;
    ParsedSpace parsed = parse_space(*space_it);
    out.space = parsed.space;
    out.canonical = json{{"space", parsed.canonical}};
    if (!map_j) return out;

    const std::string map_type = map_j->value("type", "");
    if (map_type == "table") {
        out.table_map = parse_table_map(out.space, *map_j);
        json pairs = json::array();
        for (std::size_t x = 0; x < out.space->size(); ++x) {
            if (out.space->has_embedding()) {
                pairs.push_back({point_to_json(out.space->embedded(x)),
                                 point_to_json(out.space->embedded(out.table_map->table[x]))});
            } else {
                pairs.push_back({out.space->label(x), out.space->label(out.table_map->table[x])});
            }
        }
        out.canonical["map"] = json{{"type", "table"}, {"pairs", pairs}};
    } else if (map_type == "rule") {
        const std::optional<Box> window = out.space->lattice_window();
        if (!window) fail("rule maps need a lattice window space (interval or box)");
        json canonical_rule;
        out.rule = parse_rule_map(window->dim(), *map_j, canonical_rule);
        out.canonical["map"] = canonical_rule;
    } else {
        fail("unknown map type \"" + map_type + "\"");
    }
    return out;
}

Manifest load_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ManifestError("cannot open manifest file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ManifestError(std::string("JSON syntax error: ") + e.what(),
                            std::make_pair(line, col));
    }
    return parse_manifest(doc);
}

nlohmann::json manifest_to_json(const Manifest& manifest) {
    return manifest.canonical;
}

}  // namespace khal
