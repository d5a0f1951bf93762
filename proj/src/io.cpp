#include "fstrand/io.hpp"

#include "fstrand/error.hpp"
#include "fstrand/words.hpp"

#include <cctype>
#include <sstream>

namespace fstrand {

namespace {

nlohmann::json points_json(const PLMap& f)
{
    auto pts = nlohmann::json::array();
    for (const auto& p : f.breakpoints())
        pts.push_back({to_string(p.x), to_string(p.y)});
    return pts;
}

Rational rational_field(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return Rational(v.get<long>());
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    throw DomainError("expected a rational as \"p/q\" or an integer");
}

std::vector<Breakpoint> points_from(const nlohmann::json& j)
{
    if (!j.contains("breakpoints") || !j["breakpoints"].is_array())
        throw DomainError("missing \"breakpoints\" array");
    std::vector<Breakpoint> pts;
    for (const auto& p : j["breakpoints"]) {
        if (!p.is_array() || p.size() != 2)
            throw DomainError("each breakpoint is a pair [x, y]");
        pts.push_back({rational_field(p[0]), rational_field(p[1])});
    }
    return pts;
}

const char* loop_kind_name(LoopKind k)
{
    switch (k) {
    case LoopKind::Merge: return "merge";
    case LoopKind::Split: return "split";
    case LoopKind::Free: return "free";
    }
    return "?";
}

}  // namespace

nlohmann::json to_json(const PLMap& f)
{
    nlohmann::json j;
    j["domain"] = f.domain_len();
    j["range"] = f.range_len();
    j["breakpoints"] = points_json(f);
    return j;
}

PLMap plmap_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw DomainError("element JSON must be an object");
    PLMap f(points_from(j));
    if (j.contains("domain") && rational_field(j["domain"]) != f.x_max())
        throw DomainError("\"domain\" does not match the last breakpoint");
    if (j.contains("range") && rational_field(j["range"]) != f.y_max())
        throw DomainError("\"range\" does not match the last breakpoint");
    f.domain_len();
    f.range_len();
    return f;
}

nlohmann::json to_json(const CircleMap& c)
{
    nlohmann::json j;
    j["m"] = c.m();
    j["n"] = c.n();
    j["offset"] = to_string(c.lift().y_min());
    j["breakpoints"] = points_json(c.lift());
    return j;
}

CircleMap circle_map_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("m") || !j.contains("n"))
        throw DomainError("circle map JSON needs \"m\", \"n\" and \"breakpoints\"");
    return CircleMap(j["m"].get<int>(), j["n"].get<int>(), PLMap(points_from(j)));
}

nlohmann::json to_json(const FixedInterval& fi)
{
    nlohmann::json j;
    if (const auto* cp = std::get_if<CantorPoint>(&fi)) {
        j["kind"] = "point";
        j["offset"] = cp->offset;
        j["location"] = cp->location.str();
        j["value"] = to_string(cp->value());
        j["slope_exp"] = cp->slope_exp;
        j["tail"] = cp->tail.str();
    } else {
        const auto& iv = std::get<PointwiseInterval>(fi);
        j["kind"] = "interval";
        j["a"] = to_string(iv.a);
        j["b"] = to_string(iv.b);
    }
    return j;
}

nlohmann::json to_json(const LoopInfo& l)
{
    nlohmann::json j;
    j["kind"] = loop_kind_name(l.kind);
    j["size"] = l.size;
    j["pattern"] = l.pattern.str();
    j["tail"] = l.tail.str();
    j["radial_index"] = l.radial_index;
    j["component"] = l.component;
    return j;
}

std::string describe(const FixedInterval& fi)
{
    std::ostringstream os;
    if (const auto* cp = std::get_if<CantorPoint>(&fi)) {
        os << "point " << cp->offset << " + " << cp->location.str() << " = " << to_string(cp->value())
           << "  slope 2^" << cp->slope_exp << "  tail (" << cp->tail.str() << ")";
    } else {
        const auto& iv = std::get<PointwiseInterval>(fi);
        os << "interval [" << to_string(iv.a) << ", " << to_string(iv.b) << "]";
    }
    return os.str();
}

std::string describe(const PLMap& f)
{
    std::ostringstream os;
    os << "[" << to_string(f.x_min()) << "," << to_string(f.x_max()) << "] -> [" << to_string(f.y_min()) << ","
       << to_string(f.y_max()) << "]:";
    for (const auto& p : f.breakpoints())
        os << " (" << to_string(p.x) << "," << to_string(p.y) << ")";
    return os.str();
}

Element parse_element(std::string_view text)
{
    std::size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead])))
        ++lead;
    if (lead < text.size() && text[lead] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
        }
        PLMap f = plmap_from_json(j);
        if (!is_thompson_like(f))
            throw DomainError("element is not Thompson-like");
        StrandDiagram d = from_pl_map(f);
        return {std::move(f), std::move(d)};
    }
    const auto bar = text.find('|');
    if (bar != std::string_view::npos) {
        Tree dom;
        Tree ran;
        try {
            dom = parse_tree(text.substr(0, bar));
        } catch (const ParseError& e) {
            throw ParseError("bad domain tree", e.position());
        }
        try {
            ran = parse_tree(text.substr(bar + 1));
        } catch (const ParseError& e) {
            throw ParseError("bad range tree", bar + 1 + e.position());
        }
        StrandDiagram d = from_tree_pair(dom, ran);
        PLMap f = to_pl_map(d);
        return {std::move(f), std::move(d)};
    }
    const Word w = parse_word(text);
    return {word_map(w), word_diagram(w)};
}

}  // namespace fstrand
