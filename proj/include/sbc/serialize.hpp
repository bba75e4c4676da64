#pragma once

// JSON forms of presentations, words, representations and ring elements.
//
// Presentation:   {"vertices": [...], "arrows": [{"name", "from", "to"}],
//                  "elements": [[{"path": [...], "coeff": "3/2"}, ...], ...],
//                  "boundary": [...]}          ("boundary" optional)
// Word:           [{"arrow": name, "dir": "+" | "-"}, ...], first letter first
// Representation: {"dims": {vertex: d}, "matrices": {arrow: [[entry, ...], ...]}}
//
// Paths list arrow names in traversal order. A trivial path is written as
// {"vertex": v} in place of an arrow list.

#include "sbc/cyclotomic.hpp"
#include "sbc/qdim_green.hpp"
#include "sbc/quiver.hpp"
#include "sbc/representation.hpp"
#include "sbc/words.hpp"

#include <json.hpp>

#include <string>

namespace sbc {

using Json = nlohmann::ordered_json;

Json to_json(const CoalgebraPresentation& b);
/// Throws ParseError on schema violations and DomainError on invalid quivers.
CoalgebraPresentation presentation_from_json(const Json& j);
CoalgebraPresentation parse_presentation(const std::string& text);

Json to_json(const Quiver& q, const Word& w);
Word word_from_json(const Quiver& q, const Json& j, std::optional<int> base = std::nullopt);

Json to_json(const Quiver& q, const Representation& m);
Representation representation_from_json(const Quiver& q, const Json& j);

Json to_json(const Cyclotomic& c);
Json to_json(const GreenElem& g);

}  // namespace sbc
