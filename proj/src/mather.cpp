#include "fstrand/mather.hpp"

#include "fstrand/error.hpp"

#include <algorithm>

namespace fstrand {

namespace {

long mod(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

PLMap normalised(const PLMap& lift, int n)
{
    const Integer k = floor(Rational(lift.y_min() / n));
    if (k == 0)
        return lift;
    return shift(lift, 0, Rational(-k * n));
}

Rational word_value(const BinaryWord& w)
{
    return Rational(w.to_integer()) / pow2(static_cast<int>(w.size()));
}

}  // namespace

CircleMap::CircleMap(int m, int n, const PLMap& lift) : m_(m), n_(n), lift_(normalised(lift, n))
{
    if (m < 1 || n < 1)
        throw DomainError("circle maps need positive m and n");
    if (lift_.x_min() != 0 || lift_.x_max() != m)
        throw DomainError("circle map lift must be defined on [0,m]");
    if (lift_.y_max() - lift_.y_min() != n)
        throw DomainError("circle map lift does not have degree one");
}

Rational CircleMap::operator()(const Rational& x) const
{
    const Integer turns = floor(Rational(x / m_));
    const Rational base = x - Rational(turns * m_);
    return lift_(base) + Rational(turns * n_);
}

MatherParameters mather_parameters(const PLMap& f)
{
    if (!is_one_bump(f))
        throw DomainError("mather invariant needs a one-bump element");
    if (!is_thompson_like(f))
        throw DomainError("mather invariant needs a Thompson-like element");
    const auto e0 = slope_at(f, 0, Side::Right);
    const auto e1 = slope_at(f, 1, Side::Left);
    if (!e0 || *e0 < 1)
        throw DomainError("slope at 0 must be 2^m with m >= 1");
    if (!e1 || *e1 > -1)
        throw DomainError("slope at 1 must be 2^-n with n >= 1");
    const auto pts = f.breakpoints();
    MatherParameters p{};
    p.m = *e0;
    p.n = -*e1;
    p.a = -floor_log2(pts[1].x);
    p.b = -floor_log2(Rational(1 - pts[pts.size() - 2].x));
    const Rational target = 1 - pow2(-p.b);
    Rational x = pow2(-p.a - p.m);
    p.iterations = 0;
    while (x <= target) {
        x = f(x);
        ++p.iterations;
    }
    return p;
}

CircleMap mather_invariant(const PLMap& f, int extra_iterations)
{
    const MatherParameters p = mather_parameters(f);
    if (p.iterations + extra_iterations < 1)
        throw DomainError("mather invariant needs at least one iteration");

    std::vector<Breakpoint> in;
    for (int t = 0; t <= p.m; ++t)
        in.push_back({Rational(t), plog_inv(Rational(t - p.a - p.m))});
    PLMap chain(std::move(in));
    for (int i = 0; i < p.iterations + extra_iterations; ++i)
        chain = compose(chain, restrict(f, chain.y_min(), chain.y_max()));

    // s -> -plog(1 - s) has a corner wherever 1 - s is a power of two.
    const Rational lo = chain.y_min();
    const Rational hi = chain.y_max();
    std::vector<Rational> corners{lo, hi};
    for (int k = floor_log2(Rational(1 - hi)); k <= floor_log2(Rational(1 - lo)); ++k) {
        const Rational s = 1 - pow2(k);
        if (s > lo && s < hi)
            corners.push_back(s);
    }
    std::sort(corners.begin(), corners.end());
    std::vector<Breakpoint> out;
    for (const auto& s : corners)
        out.push_back({s, Rational(-plog(Rational(1 - s)))});
    return CircleMap(p.m, p.n, compose(chain, PLMap(std::move(out))));
}

CircleMap rotate(const CircleMap& c, long k, CircleSide side)
{
    if (side == CircleSide::Range)
        return CircleMap(c.m(), c.n(), shift(c.lift(), 0, Rational(k)));
    const long r = mod(k, c.m());
    std::vector<Rational> xs{Rational(0), Rational(c.m())};
    for (const auto& p : c.lift().breakpoints()) {
        Rational x = p.x + r;
        if (x >= c.m())
            x -= c.m();
        xs.push_back(std::move(x));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Breakpoint> pts;
    for (auto& x : xs) {
        Rational y = c(Rational(x - r));
        pts.push_back({std::move(x), std::move(y)});
    }
    return CircleMap(c.m(), c.n(), PLMap(std::move(pts)));
}

bool mather_equivalent(const CircleMap& c1, const CircleMap& c2)
{
    if (c1.m() != c2.m() || c1.n() != c2.n())
        return false;
    for (long k = 0; k < c1.m(); ++k) {
        const CircleMap d = rotate(c1, k, CircleSide::Domain);
        for (long l = 0; l < c1.n(); ++l)
            if (rotate(d, l, CircleSide::Range) == c2)
                return true;
    }
    return false;
}

bool is_reduced(const CylindricalDiagram& c)
{
    return is_reduced(c.diagram);
}

CylindricalDiagram cylindrical_from_annular(const AnnularDiagram& a)
{
    if (!is_reduced(a))
        throw DomainError("cylindrical_from_annular needs a reduced annular diagram");
    const auto loops = classify_loops(a);
    if (loops.size() != 2 || loops[0].kind != LoopKind::Split || loops[1].kind != LoopKind::Merge ||
        loops[0].pattern.count(1) != 0 || loops[1].pattern.count(0) != 0)
        throw DomainError("not the annular diagram of a one-bump element");
    const Graph& g = a.graph();
    const auto& outer = loops[0].vertices;
    const auto& inner = loops[1].vertices;

    Graph out;
    std::vector<int> map(static_cast<std::size_t>(g.node_slots()), -1);
    std::vector<int> role(static_cast<std::size_t>(g.node_slots()), 0);  // 1 outer loop, 2 inner loop
    for (int v : outer)
        role[static_cast<std::size_t>(v)] = 1;
    for (int v : inner)
        role[static_cast<std::size_t>(v)] = 2;
    for (int v = 0; v < g.node_slots(); ++v)
        if (g.node(v).alive && role[static_cast<std::size_t>(v)] == 0)
            map[static_cast<std::size_t>(v)] = out.add_node(g.node(v).kind);

    // Increasing theta runs against the direction of traversal on both loops.
    std::vector<int> sources;
    std::vector<int> sinks;
    std::vector<int> source_of(static_cast<std::size_t>(g.node_slots()), -1);
    std::vector<int> sink_of(static_cast<std::size_t>(g.node_slots()), -1);
    for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
        source_of[static_cast<std::size_t>(*it)] = out.add_node(NodeKind::Source);
        sources.push_back(source_of[static_cast<std::size_t>(*it)]);
    }
    for (auto it = inner.rbegin(); it != inner.rend(); ++it) {
        sink_of[static_cast<std::size_t>(*it)] = out.add_node(NodeKind::Sink);
        sinks.push_back(sink_of[static_cast<std::size_t>(*it)]);
    }
    for (int e = 0; e < g.edge_slots(); ++e) {
        const Edge& ed = g.edge(e);
        if (!ed.alive)
            continue;
        const int rf = role[static_cast<std::size_t>(ed.from)];
        const int rt = role[static_cast<std::size_t>(ed.to)];
        if ((rf == 1 && rt == 1) || (rf == 2 && rt == 2))
            continue;
        const int from = rf == 1 ? source_of[static_cast<std::size_t>(ed.from)] : map[static_cast<std::size_t>(ed.from)];
        const int from_port = rf == 1 ? 0 : ed.from_port;
        const int to = rt == 2 ? sink_of[static_cast<std::size_t>(ed.to)] : map[static_cast<std::size_t>(ed.to)];
        const int to_port = rt == 2 ? 0 : ed.to_port;
        if (from == -1 || to == -1)
            throw std::logic_error("cylindrical_from_annular: edge leaves the annulus");
        out.add_edge(from, from_port, to, to_port, ed.crossings);
    }
    return CylindricalDiagram{StrandDiagram(std::move(out), std::move(sources), std::move(sinks))};
}

CircleMap circle_map_from_cylindrical(const CylindricalDiagram& c, int source_base, int sink_base)
{
    const int m = c.m();
    const int n = c.n();
    struct Span {
        Rational x;
        Rational x_len;
        Rational y;
        Rational y_len;
    };
    std::vector<Span> spans;
    for (const auto& p : trace_pieces(c.diagram)) {
        const long k = mod(p.source - source_base, m);
        const long j = mod(p.sink - sink_base, n);
        spans.push_back({Rational(k) + word_value(p.w), pow2(-static_cast<int>(p.w.size())),
                         Rational(j) + word_value(p.u), pow2(-static_cast<int>(p.u.size()))});
    }
    std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.x < b.x; });
    std::vector<Breakpoint> pts;
    Rational x_end = 0;
    Rational y_end = spans.front().y;
    for (const auto& s : spans) {
        if (s.x != x_end)
            throw DomainError("cylindrical diagram pieces do not tile the domain circle");
        const Rational gap = y_end - s.y;
        if (gap.get_den() != 1 || gap.get_num() % n != 0)
            throw DomainError("cylindrical diagram pieces do not join on the range circle");
        pts.push_back({s.x, y_end});
        x_end = s.x + s.x_len;
        y_end += s.y_len;
    }
    pts.push_back({x_end, y_end});
    return CircleMap(m, n, PLMap(std::move(pts)));
}

namespace {

void carve_circle(const CircleMap& f, int k, BinaryWord& w, std::vector<BinaryWord>& top,
                  std::vector<std::pair<Rational, BinaryWord>>& images)
{
    if (w.size() > 4096)
        throw DomainError("circle map has no dyadic subdivision");
    const PLMap& L = f.lift();
    const Rational lo = Rational(k) + word_value(w);
    const Rational hi = lo + pow2(-static_cast<int>(w.size()));
    bool linear = true;
    for (const auto& p : L.breakpoints())
        if (p.x > lo && p.x < hi) {
            linear = false;
            break;
        }
    if (linear) {
        const Rational flo = L(lo);
        const auto e = log2_exact(Rational(L(hi) - flo));
        if (e && *e <= 0) {
            const Rational scaled = flo * pow2(-*e);
            if (scaled.get_den() == 1) {
                const Integer j = floor(flo);
                const Integer digits = scaled.get_num() - j * pow2(-*e).get_num();
                std::string bits = *e == 0 ? std::string() : digits.get_str(2);
                bits.insert(0, static_cast<std::size_t>(-*e) - bits.size(), '0');
                top.push_back(w);
                Integer jm = j % f.n();
                if (jm < 0)
                    jm += f.n();
                images.emplace_back(Rational(jm) + Rational(flo - j), BinaryWord(bits));
                return;
            }
        }
    }
    w.push_back(0);
    carve_circle(f, k, w, top, images);
    w.pop_back();
    w.push_back(1);
    carve_circle(f, k, w, top, images);
    w.pop_back();
}

}  // namespace

CylindricalDiagram cylindrical_from_circle_map(const CircleMap& f)
{
    if (!is_thompson_like(f.lift()))
        throw DomainError("cylindrical_from_circle_map needs a Thompson-like circle map");
    std::vector<std::vector<BinaryWord>> top(static_cast<std::size_t>(f.m()));
    std::vector<std::pair<Rational, BinaryWord>> images;  // start on [0,n), leaf address
    for (int k = 0; k < f.m(); ++k) {
        BinaryWord w;
        carve_circle(f, k, w, top[static_cast<std::size_t>(k)], images);
    }
    // Range leaves sorted around the circle; the domain order is a rotation of it.
    std::vector<std::size_t> order(images.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return images[a].first < images[b].first; });
    std::vector<std::vector<BinaryWord>> bottom(static_cast<std::size_t>(f.n()));
    std::size_t shift = 0;
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto& img = images[order[r]];
        bottom[floor(img.first).get_ui()].push_back(img.second);
        if (order[r] == 0)
            shift = r;
        if (order[r] != (order[0] + r) % order.size())
            throw DomainError("circle map leaves are not cyclically ordered");
    }
    return CylindricalDiagram{reduce(forest_diagram(top, bottom, shift))};
}

}  // namespace fstrand
