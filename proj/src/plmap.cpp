#include "fstrand/plmap.hpp"

#include "fstrand/error.hpp"

#include <algorithm>

namespace fstrand {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c)
{
    return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

int int_of(const Rational& q, const char* what)
{
    if (q.get_den() != 1 || !q.get_num().fits_sint_p())
        throw DomainError(std::string(what) + " is not an integer: " + to_string(q));
    return static_cast<int>(q.get_num().get_si());
}

}  // namespace

PLMap::PLMap(std::vector<Breakpoint> points)
{
    if (points.size() < 2)
        throw DomainError("a PL map needs at least two breakpoints");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].x <= points[i - 1].x || points[i].y <= points[i - 1].y)
            throw DomainError("breakpoints must be strictly increasing in both coordinates");
    pts_.reserve(points.size());
    for (auto& p : points) {
        while (pts_.size() >= 2 && collinear(pts_[pts_.size() - 2], pts_.back(), p))
            pts_.pop_back();
        pts_.push_back(std::move(p));
    }
}

PLMap PLMap::identity(const Rational& a, const Rational& b)
{
    return PLMap({{a, a}, {b, b}});
}

Rational PLMap::slope(std::size_t seg) const
{
    return Rational((pts_[seg + 1].y - pts_[seg].y) / (pts_[seg + 1].x - pts_[seg].x));
}

int PLMap::domain_len() const
{
    if (x_min() != 0 || y_min() != 0)
        throw DomainError("groupoid elements start at (0,0)");
    return int_of(x_max(), "domain length");
}

int PLMap::range_len() const
{
    if (x_min() != 0 || y_min() != 0)
        throw DomainError("groupoid elements start at (0,0)");
    return int_of(y_max(), "range length");
}

std::size_t PLMap::segment_of(const Rational& x) const
{
    auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                               [](const Rational& v, const Breakpoint& p) { return v < p.x; });
    std::size_t idx = static_cast<std::size_t>(it - pts_.begin());
    if (idx == 0)
        return 0;
    return std::min(idx - 1, segments() - 1);
}

Rational PLMap::operator()(const Rational& x) const
{
    if (x < x_min() || x > x_max())
        throw DomainError("evaluate: " + to_string(x) + " outside [" + to_string(x_min()) + ", " +
                          to_string(x_max()) + "]");
    const std::size_t s = segment_of(x);
    const auto& a = pts_[s];
    const auto& b = pts_[s + 1];
    return Rational(a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x));
}

PLMap compose(const PLMap& f, const PLMap& g)
{
    if (f.y_min() != g.x_min() || f.y_max() != g.x_max())
        throw DomainError("compose: range [" + to_string(f.y_min()) + ", " + to_string(f.y_max()) +
                          "] does not match domain [" + to_string(g.x_min()) + ", " +
                          to_string(g.x_max()) + "]");
    const PLMap fi = invert(f);
    std::vector<Rational> xs;
    for (const auto& p : f.breakpoints())
        xs.push_back(p.x);
    for (const auto& p : g.breakpoints())
        xs.push_back(fi(p.x));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Breakpoint> pts;
    pts.reserve(xs.size());
    for (auto& x : xs) {
        Rational y = g(f(x));
        pts.push_back({std::move(x), std::move(y)});
    }
    return PLMap(std::move(pts));
}

PLMap invert(const PLMap& f)
{
    std::vector<Breakpoint> pts;
    for (const auto& p : f.breakpoints())
        pts.push_back({p.y, p.x});
    return PLMap(std::move(pts));
}

Rational evaluate(const PLMap& f, const Rational& x)
{
    return f(x);
}

PLMap shift(const PLMap& f, const Rational& dx, const Rational& dy)
{
    std::vector<Breakpoint> pts;
    for (const auto& p : f.breakpoints())
        pts.push_back({p.x + dx, p.y + dy});
    return PLMap(std::move(pts));
}

PLMap restrict(const PLMap& f, const Rational& lo, const Rational& hi)
{
    if (lo >= hi || lo < f.x_min() || hi > f.x_max())
        throw DomainError("restrict: bad interval");
    std::vector<Breakpoint> pts{{lo, f(lo)}};
    for (const auto& p : f.breakpoints())
        if (p.x > lo && p.x < hi)
            pts.push_back(p);
    pts.push_back({hi, f(hi)});
    return PLMap(std::move(pts));
}

bool is_thompson_like(const PLMap& f)
{
    for (std::size_t s = 0; s < f.segments(); ++s)
        if (!log2_exact(f.slope(s)))
            return false;
    for (const auto& p : f.breakpoints())
        if (!is_dyadic(p.x) || !is_dyadic(p.y))
            return false;
    return true;
}

std::optional<int> slope_at(const PLMap& f, const Rational& x, Side side)
{
    const auto pts = f.breakpoints();
    std::size_t seg;
    if (side == Side::Right) {
        if (x < f.x_min() || x >= f.x_max())
            throw DomainError("slope_at: no segment to the right of " + to_string(x));
        seg = f.segment_of(x);
    } else {
        if (x <= f.x_min() || x > f.x_max())
            throw DomainError("slope_at: no segment to the left of " + to_string(x));
        auto it = std::lower_bound(pts.begin(), pts.end(), x,
                                   [](const Breakpoint& p, const Rational& v) { return p.x < v; });
        seg = static_cast<std::size_t>(it - pts.begin()) - 1;
    }
    return log2_exact(f.slope(seg));
}

const PLMap& x0()
{
    static const PLMap g({{0, 0}, {Rational(1, 2), Rational(1, 4)}, {Rational(3, 4), Rational(1, 2)}, {1, 1}});
    return g;
}

const PLMap& x1()
{
    static const PLMap g({{0, 0},
                          {Rational(1, 2), Rational(1, 2)},
                          {Rational(3, 4), Rational(5, 8)},
                          {Rational(7, 8), Rational(3, 4)},
                          {1, 1}});
    return g;
}

namespace {

struct FixedItem {
    Rational a;
    Rational b;
    bool interval;
};

std::vector<FixedItem> scan_fixed(const PLMap& f)
{
    if (!f.is_square())
        throw DomainError("fixed points need a square map");
    std::vector<FixedItem> items;
    const auto pts = f.breakpoints();
    for (std::size_t s = 0; s < f.segments(); ++s) {
        const auto& p = pts[s];
        const auto& q = pts[s + 1];
        const Rational k = f.slope(s);
        if (k == 1) {
            if (p.x != p.y)
                continue;
            if (!items.empty() && items.back().b == p.x) {
                items.back().b = q.x;
                items.back().interval = true;
            } else {
                items.push_back({p.x, q.x, true});
            }
            continue;
        }
        Rational x = (p.y - k * p.x) / (1 - k);
        if (x < p.x || x > q.x)
            continue;
        if (!items.empty() && items.back().b == x)
            continue;
        items.push_back({x, x, false});
    }
    return items;
}

CantorPoint side_point(const PLMap& f, const Rational& p, Side side)
{
    auto e = slope_at(f, p, side);
    if (!e)
        throw DomainError("slope at fixed point " + to_string(p) + " is not a power of two");
    const Integer i = floor(p);
    const Rational r = p - Rational(i);
    CantorPoint cp;
    cp.slope_exp = *e;
    if (r == 0) {
        cp.offset = side == Side::Right ? i.get_si() : i.get_si() - 1;
        cp.location = TailWord(BinaryWord(), BinaryWord(side == Side::Right ? "0" : "1"));
    } else {
        auto tails = rational_to_tails(r);
        cp.offset = i.get_si();
        cp.location = side == Side::Right ? tails.back() : tails.front();
    }
    cp.tail = cp.location.period();
    return cp;
}

}  // namespace

std::vector<FixedInterval> fixed_intervals(const PLMap& f)
{
    if (f.x_min() != 0)
        throw DomainError("fixed_intervals needs a map on [0,m]");
    const Rational m = f.x_max();
    std::vector<FixedInterval> out;
    for (const auto& it : scan_fixed(f)) {
        if (it.interval) {
            if (it.a > 0)
                out.emplace_back(side_point(f, it.a, Side::Left));
            out.emplace_back(PointwiseInterval{it.a, it.b});
            if (it.b < m)
                out.emplace_back(side_point(f, it.b, Side::Right));
            continue;
        }
        const Rational& p = it.a;
        if (is_dyadic(p)) {
            if (p > 0)
                out.emplace_back(side_point(f, p, Side::Left));
            if (p < m)
                out.emplace_back(side_point(f, p, Side::Right));
            continue;
        }
        CantorPoint left = side_point(f, p, Side::Left);
        CantorPoint right = side_point(f, p, Side::Right);
        if (left.slope_exp != right.slope_exp)
            throw DomainError("unequal slopes at non-dyadic fixed point " + to_string(p));
        out.emplace_back(std::move(left));
    }
    return out;
}

std::vector<Rational> cut_points(const PLMap& f)
{
    std::vector<Rational> cuts{f.x_min(), f.x_max()};
    for (const auto& it : scan_fixed(f)) {
        if (it.interval) {
            cuts.push_back(it.a);
            cuts.push_back(it.b);
        } else if (is_dyadic(it.a)) {
            cuts.push_back(it.a);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

bool is_one_bump(const PLMap& f)
{
    if (f.x_min() != 0 || f.x_max() != 1 || !f.is_square())
        return false;
    const auto pts = f.breakpoints();
    if (pts.size() < 3)
        return false;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i)
        if (pts[i].y <= pts[i].x)
            return false;
    return true;
}

Rational plog(const Rational& x)
{
    if (sgn(x) <= 0)
        throw DomainError("plog of a non-positive number");
    const int k = floor_log2(x);
    return Rational(k + x / pow2(k) - 1);
}

Rational plog_inv(const Rational& y)
{
    const Integer kf = floor(y);
    const int k = static_cast<int>(kf.get_si());
    return Rational(pow2(k) * (1 + y - k));
}

PLMap rescale_to_unit(const Rational& alpha, const Rational& beta)
{
    if (!is_dyadic(alpha) || !is_dyadic(beta))
        throw DomainError("rescale_to_unit needs dyadic endpoints");
    if (alpha >= beta)
        throw DomainError("rescale_to_unit needs alpha < beta");
    // Greedy cover of [alpha, beta] by maximal aligned dyadic intervals.
    std::vector<Rational> starts;
    Rational a = alpha;
    while (a < beta) {
        starts.push_back(a);
        int j = floor_log2(beta - a);
        while (Rational(a / pow2(j)).get_den() != 1)
            --j;
        a += pow2(j);
    }
    const int k = static_cast<int>(starts.size());
    std::vector<Breakpoint> pts;
    Rational t = 0;
    for (int i = 0; i < k; ++i) {
        pts.push_back({starts[static_cast<std::size_t>(i)], t});
        t += pow2(-std::min(i + 1, k - 1));
    }
    pts.push_back({beta, 1});
    return PLMap(std::move(pts));
}

PLMap conjugate_to_unit(const PLMap& f, const Rational& lo, const Rational& hi)
{
    const PLMap phi = rescale_to_unit(lo, hi);
    return compose(compose(invert(phi), restrict(f, lo, hi)), phi);
}

}  // namespace fstrand
