#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "khal/compactified.hpp"
#include "khal/finite_space.hpp"
#include "khal/rule_map.hpp"
#include "khal/space_map.hpp"

namespace khal {

class ManifestError : public std::runtime_error {
public:
    explicit ManifestError(const std::string& what,
                           std::optional<std::pair<std::size_t, std::size_t>> line_col =
                               std::nullopt)
        : std::runtime_error(what), line_col(line_col) {}
    std::optional<std::pair<std::size_t, std::size_t>> line_col;
};

// A parsed manifest: one space plus an optional map over it. Compactified
// manifests carry the whole eventually-constant self-map instead of a
// FiniteSpace.
struct Manifest {
    std::shared_ptr<const FiniteSpace> space;          // null for compactified
    std::optional<SpaceMap> table_map;                 // "map": {"type": "table", ...}
    std::optional<RuleMap> rule;                       // "map": {"type": "rule", ...}
    std::optional<EventuallyConstantMap> ext_map;      // compactified space
    nlohmann::json canonical;                          // normalized round-trip form
};

// Manifest files are JSON with top-level keys "space" and optional "map".
//
//   space: {"type":"interval","a":0,"b":2}
//        | {"type":"box","ranges":[[0,2],[0,2]]}
//        | {"type":"product","factors":[<space>, ...]}
//        | {"type":"explicit","points":["a","b"],"min_nbhd":{"a":["a"],"b":["a","b"]}}
//        | {"type":"compactified","n":1,"box":[[0,2]],"tail":[0],"infinity":"inf"}
//   map:   {"type":"table","pairs":[[[0],[0]],[[1],[0]],[[2],[0]]]}
//        | {"type":"rule","rule":"constant","value":[1,1]}
//        | {"type":"rule","rule":"identity" | "example-d" | "example-e"}
//        | {"type":"rule","rule":"parity","even":{"offset":1},"odd":{"const":-1}}
//
// Coordinates are arrays of integers; infinity is the literal string "inf".
// Table entries may name points by coordinates or by label. For compactified
// manifests the table pairs assign values to the box's lattice points.
Manifest parse_manifest(const nlohmann::json& doc);

// Reads and parses a manifest file; JSON syntax errors carry line/column.
Manifest load_manifest_file(const std::string& path);

// Canonical JSON for a parsed manifest; parsing it again yields an identical
// canonical form.
nlohmann::json manifest_to_json(const Manifest& manifest);

}  // namespace khal
