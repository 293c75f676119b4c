#pragma once

#include <string>

#include "khal/enumeration.hpp"
#include "khal/space_map.hpp"

namespace khal {

// All renderers emit UTF-8 ending in a newline, byte-identical for identical
// inputs (and seed, in sampled mode).
std::string render_census_text(const Census& census, const FiniteSpace& space);
std::string render_census_csv(const Census& census);
std::string render_census_json(const Census& census, const FiniteSpace& space);
// Census with the theorem verdict (and any counterexample) folded in.
std::string render_census_json(const Census& census, const FiniteSpace& space,
                               const TheoremCheck& check);

std::string render_theorem_check(const TheoremCheck& check);

std::string render_report_text(const PropertyReport& report, const FiniteSpace& domain,
                               const FiniteSpace& codomain);

}  // namespace khal
