#include "commands.hpp"

#include "fstrand/annular.hpp"
#include "fstrand/error.hpp"
#include "fstrand/io.hpp"
#include "fstrand/mather.hpp"
#include "fstrand/orbits.hpp"
#include "fstrand/random.hpp"
#include "fstrand/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <random>
#include <variant>

namespace fstrand::cli {
namespace {

using nlohmann::json;

// Stand-in for the "--" between the two point lists of `transport`; CLI11
// would swallow the real one.
constexpr const char* kListBreak = "\x1f--";

enum class Format { Json, Text, Dot };

struct Context {
    std::istream& in;
    std::ostream& out;
    std::string format;  // empty: the command's own default
    std::optional<std::string> stdin_text;

    Format format_or(Format fallback) const
    {
        if (format == "json")
            return Format::Json;
        if (format == "text")
            return Format::Text;
        if (format == "dot")
            return Format::Dot;
        return fallback;
    }

    Element element(const std::string& arg)
    {
        if (arg != "-")
            return parse_element(arg);
        if (!stdin_text)
            stdin_text.emplace(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        return parse_element(*stdin_text);
    }
};

using Point = std::variant<Rational, TailWord>;

Point parse_point(const std::string& s)
{
    if (!s.empty() && s.front() == '.')
        return TailWord::parse(s);
    return parse_rational(s);
}

TailWord as_tail(const Point& p)
{
    if (const auto* t = std::get_if<TailWord>(&p))
        return *t;
    const auto tails = rational_to_tails(std::get<Rational>(p));
    if (tails.empty())
        throw DomainError("point must lie in (0,1)");
    return tails.front();
}

void emit_element(Context& ctx, const PLMap& f)
{
    if (ctx.format_or(Format::Json) == Format::Text)
        ctx.out << describe(f) << '\n';
    else
        ctx.out << to_json(f).dump() << '\n';
}

void emit_verdict(Context& ctx, const char* yes, const char* no, bool value, json extra = json::object())
{
    if (ctx.format_or(Format::Text) == Format::Json) {
        extra["verdict"] = value ? yes : no;
        ctx.out << extra.dump() << '\n';
        return;
    }
    ctx.out << (value ? yes : no) << '\n';
    for (const auto& [key, v] : extra.items())
        ctx.out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

void cmd_reduce(Context& ctx, const std::string& arg)
{
    const Element e = ctx.element(arg);
    const StrandDiagram r = reduce(e.diagram);
    switch (ctx.format_or(Format::Text)) {
    case Format::Dot:
        ctx.out << to_dot(r);
        break;
    case Format::Json:
        ctx.out << json{{"element", to_json(e.map)},
                        {"splits", r.split_count()},
                        {"merges", r.merge_count()},
                        {"code", diagram_code(r)}}
                       .dump()
                << '\n';
        break;
    case Format::Text:
        ctx.out << to_text(r);
        break;
    }
}

void cmd_conj(Context& ctx, const std::string& a, const std::string& b)
{
    const Element f = ctx.element(a);
    const Element g = ctx.element(b);
    const std::string kf = canonical_key(annular_diagram(f.map));
    const std::string kg = canonical_key(annular_diagram(g.map));
    emit_verdict(ctx, "conjugate", "not-conjugate", kf == kg, json{{"key1", kf}, {"key2", kg}});
}

void cmd_fixed(Context& ctx, const std::string& arg)
{
    const Element e = ctx.element(arg);
    const auto analytic = fixed_intervals(e.map);
    std::optional<std::vector<FixedInterval>> from_loops;
    std::string loop_error;
    try {
        from_loops = fixed_intervals_from_loops(annular_diagram(e.map), e.map);
    } catch (const DomainError& ex) {
        loop_error = ex.what();
    }
    const bool agree = from_loops && *from_loops == analytic;

    if (ctx.format_or(Format::Text) == Format::Json) {
        json j{{"analytic", json::array()}, {"agree", agree}};
        for (const auto& fi : analytic)
            j["analytic"].push_back(to_json(fi));
        if (from_loops) {
            j["loops"] = json::array();
            for (const auto& fi : *from_loops)
                j["loops"].push_back(to_json(fi));
        } else {
            j["loops_error"] = loop_error;
        }
        ctx.out << j.dump() << '\n';
        return;
    }
    for (const auto& fi : analytic)
        ctx.out << describe(fi) << '\n';
    if (!agree) {
        ctx.out << "DISAGREE: loop-derived list differs\n";
        if (from_loops)
            for (const auto& fi : *from_loops)
                ctx.out << "  loop " << describe(fi) << '\n';
        else
            ctx.out << "  " << loop_error << '\n';
    }
}

void emit_circle_map(Context& ctx, const CircleMap& c)
{
    if (ctx.format_or(Format::Json) == Format::Text)
        ctx.out << "R/" << c.m() << "Z -> R/" << c.n() << "Z, lift " << describe(c.lift()) << '\n';
    else
        ctx.out << to_json(c).dump() << '\n';
}

void cmd_orbit(Context& ctx, const std::string& a, const std::string& b)
{
    const Point p = parse_point(a);
    const Point q = parse_point(b);
    bool same = false;
    if (std::holds_alternative<Rational>(p) && std::holds_alternative<Rational>(q))
        same = in_same_orbit(std::get<Rational>(p), std::get<Rational>(q));
    else
        same = in_same_orbit(as_tail(p), as_tail(q));
    emit_verdict(ctx, "same-orbit", "different-orbits", same);
}

void cmd_transport(Context& ctx, const std::vector<std::string>& args)
{
    const auto brk = std::find(args.begin(), args.end(), kListBreak);
    if (brk == args.end())
        throw ParseError("transport expects '<points> -- <points>'", 0);
    std::vector<Point> ts;
    std::vector<Point> us;
    for (auto it = args.begin(); it != brk; ++it)
        ts.push_back(parse_point(*it));
    for (auto it = std::next(brk); it != args.end(); ++it)
        us.push_back(parse_point(*it));
    const auto all_rational = [](const std::vector<Point>& v) {
        return std::all_of(v.begin(), v.end(), [](const Point& p) { return std::holds_alternative<Rational>(p); });
    };
    if (all_rational(ts) && all_rational(us)) {
        std::vector<Rational> rt;
        std::vector<Rational> ru;
        for (const auto& p : ts)
            rt.push_back(std::get<Rational>(p));
        for (const auto& p : us)
            ru.push_back(std::get<Rational>(p));
        emit_element(ctx, multipoint_transporter(rt, ru));
        return;
    }
    std::vector<TailWord> tt;
    std::vector<TailWord> tu;
    for (const auto& p : ts)
        tt.push_back(as_tail(p));
    for (const auto& p : us)
        tu.push_back(as_tail(p));
    emit_element(ctx, multipoint_transporter(tt, tu));
}

void cmd_render(Context& ctx, const std::string& arg, bool annular)
{
    const Element e = ctx.element(arg);
    const bool text = ctx.format_or(Format::Dot) == Format::Text;
    if (annular) {
        const AnnularDiagram a = annular_diagram(e.map);
        ctx.out << (text ? to_text(a) : to_dot(a));
    } else {
        const StrandDiagram r = reduce(e.diagram);
        ctx.out << (text ? to_text(r) : to_dot(r));
    }
}

void cmd_random(Context& ctx, std::optional<std::uint64_t> seed, int length, int count)
{
    if (length < 0 || count < 0)
        throw DomainError("length and count must be non-negative");
    const std::uint64_t s = seed ? *seed : std::random_device{}();
    Rng rng(s);
    std::vector<Word> words;
    for (int i = 0; i < count; ++i)
        words.push_back(random_word(rng, length));
    if (ctx.format_or(Format::Text) == Format::Json) {
        json j{{"seed", s}, {"words", json::array()}};
        for (const auto& w : words)
            j["words"].push_back(format_word(w));
        ctx.out << j.dump() << '\n';
        return;
    }
    ctx.out << "seed " << s << '\n';
    for (const auto& w : words)
        ctx.out << format_word(w) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Context ctx{in, out, {}, std::nullopt};

    CLI::App app{"Strand diagrams for Thompson's group F and its groupoid", "fstrand"};
    app.require_subcommand(1);
    app.add_option("--format", ctx.format, "json, text or dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));

    std::string e1;
    std::string e2;
    std::vector<std::string> points;
    bool annular = false;
    std::optional<std::uint64_t> seed;
    int length = 5;
    int count = 1;

    const auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };
    auto* reduce_cmd = sub("reduce", "reduced strand diagram");
    reduce_cmd->add_option("element", e1)->required();
    auto* mul_cmd = sub("mul", "product: apply the first element, then the second");
    mul_cmd->add_option("f", e1)->required();
    mul_cmd->add_option("g", e2)->required();
    auto* inv_cmd = sub("inv", "inverse element");
    inv_cmd->add_option("element", e1)->required();
    auto* conj_cmd = sub("conj", "conjugacy test via reduced annular diagrams");
    conj_cmd->add_option("f", e1)->required();
    conj_cmd->add_option("g", e2)->required();
    auto* fixed_cmd = sub("fixed", "fixed intervals, analytic and from loops");
    fixed_cmd->add_option("element", e1)->required();
    auto* mather_cmd = sub("mather", "circle map of a one-bump element");
    mather_cmd->add_option("element", e1)->required();
    auto* mather_eq_cmd = sub("mather-eq", "compare circle maps up to rotation");
    mather_eq_cmd->add_option("f", e1)->required();
    mather_eq_cmd->add_option("g", e2)->required();
    auto* orbit_cmd = sub("orbit", "same F-orbit test for two points of (0,1)");
    orbit_cmd->add_option("t", e1)->required();
    orbit_cmd->add_option("u", e2)->required();
    auto* transport_cmd = sub("transport", "element sending t_i to u_i: t... -- u...");
    transport_cmd->add_option("points", points)->required();
    auto* render_cmd = sub("render", "DOT drawing of the reduced diagram");
    render_cmd->add_option("element", e1)->required();
    render_cmd->add_flag("--annular", annular, "closed-up reduced annular diagram");
    auto* random_cmd = sub("random", "random generator words");
    random_cmd->add_option("--seed", seed);
    random_cmd->add_option("--length", length);
    random_cmd->add_option("--count", count);

    // CLI11 wants the arguments reversed.
    std::vector<std::string> argv(args.rbegin(), args.rend());
    if (const auto t = std::find(args.begin(), args.end(), "transport"); t != args.end()) {
        const auto brk = std::find(t, args.end(), "--");
        if (brk != args.end())
            argv[args.size() - 1 - static_cast<std::size_t>(brk - args.begin())] = kListBreak;
    }

    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (*reduce_cmd) {
            cmd_reduce(ctx, e1);
        } else if (*mul_cmd) {
            emit_element(ctx, compose(ctx.element(e1).map, ctx.element(e2).map));
        } else if (*inv_cmd) {
            emit_element(ctx, invert(ctx.element(e1).map));
        } else if (*conj_cmd) {
            cmd_conj(ctx, e1, e2);
        } else if (*fixed_cmd) {
            cmd_fixed(ctx, e1);
        } else if (*mather_cmd) {
            emit_circle_map(ctx, mather_invariant(ctx.element(e1).map));
        } else if (*mather_eq_cmd) {
            const CircleMap c1 = mather_invariant(ctx.element(e1).map);
            const CircleMap c2 = mather_invariant(ctx.element(e2).map);
            emit_verdict(ctx, "equivalent", "not-equivalent", mather_equivalent(c1, c2));
        } else if (*orbit_cmd) {
            cmd_orbit(ctx, e1, e2);
        } else if (*transport_cmd) {
            cmd_transport(ctx, points);
        } else if (*render_cmd) {
            cmd_render(ctx, e1, annular);
        } else if (*random_cmd) {
            cmd_random(ctx, seed, length, count);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace fstrand::cli
