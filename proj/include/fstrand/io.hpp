#pragma once

#include "fstrand/annular.hpp"
#include "fstrand/mather.hpp"
#include "fstrand/plmap.hpp"
#include "fstrand/strand.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace fstrand {

// {"domain": m, "range": n, "breakpoints": [["p/q", "p/q"], ...]}
nlohmann::json to_json(const PLMap& f);
PLMap plmap_from_json(const nlohmann::json& j);

// {"m": m, "n": n, "offset": "lift(0)", "breakpoints": [...]}
nlohmann::json to_json(const CircleMap& c);
CircleMap circle_map_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FixedInterval& fi);
nlohmann::json to_json(const LoopInfo& l);

std::string describe(const FixedInterval& fi);
std::string describe(const PLMap& f);

struct Element {
    PLMap map;
    StrandDiagram diagram;
};

// Generator word, tree pair "D | R" or PLMap JSON.  Throws ParseError with the
// offending position, or DomainError for a well-formed but invalid element.
Element parse_element(std::string_view text);

}  // namespace fstrand
