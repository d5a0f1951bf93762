#pragma once

#include "fstrand/binary.hpp"
#include "fstrand/rational.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace fstrand {

struct Breakpoint {
    Rational x;
    Rational y;
    bool operator==(const Breakpoint&) const = default;
};

// Increasing piecewise-linear homeomorphism [x0, x1] -> [y0, y1].  Redundant
// (collinear) breakpoints are dropped on construction, so == is equality of maps.
// Elements of the groupoid live on [0,m] -> [0,n]; general intervals appear
// while rescaling and restricting.
class PLMap {
public:
    explicit PLMap(std::vector<Breakpoint> points);

    static PLMap identity(const Rational& a, const Rational& b);
    static PLMap identity(int m) { return identity(Rational(0), Rational(m)); }

    std::span<const Breakpoint> breakpoints() const noexcept { return pts_; }
    std::size_t segments() const noexcept { return pts_.size() - 1; }
    Rational slope(std::size_t seg) const;

    const Rational& x_min() const { return pts_.front().x; }
    const Rational& x_max() const { return pts_.back().x; }
    const Rational& y_min() const { return pts_.front().y; }
    const Rational& y_max() const { return pts_.back().y; }

    // Integer lengths of a groupoid element; throws unless it starts at (0,0)
    // and ends at integer coordinates.
    int domain_len() const;
    int range_len() const;
    bool is_square() const { return x_min() == y_min() && x_max() == y_max(); }

    // Index of the segment containing x; on a breakpoint, the segment to its right
    // (or the last one at x_max).
    std::size_t segment_of(const Rational& x) const;

    Rational operator()(const Rational& x) const;

    bool operator==(const PLMap&) const = default;

private:
    std::vector<Breakpoint> pts_;
};

// Apply f, then g.  Requires the range of f to be the domain of g.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
Rational evaluate(const PLMap& f, const Rational& x);

// Same map translated: x -> x + dx on the domain, y -> y + dy on the range.
PLMap shift(const PLMap& f, const Rational& dx, const Rational& dy);
PLMap restrict(const PLMap& f, const Rational& lo, const Rational& hi);

bool is_thompson_like(const PLMap& f);

enum class Side { Left, Right };

// Exponent e with slope 2^e of the segment on the given side of x; nullopt when
// that slope is not a power of two.  Throws if the side lies outside the domain.
std::optional<int> slope_at(const PLMap& f, const Rational& x, Side side);

// The two standard generators of F on [0,1].
const PLMap& x0();
const PLMap& x1();

struct CantorPoint {
    long offset = 0;      // integer part i of the point i + .location
    TailWord location{BinaryWord(), BinaryWord("0")};
    int slope_exp = 0;    // slope 2^e on the side this point represents
    BinaryWord tail;      // period word of the tail
    Rational value() const { return Rational(offset) + tail_to_rational(location); }
    bool operator==(const CantorPoint&) const = default;
};

struct PointwiseInterval {
    Rational a;
    Rational b;
    bool operator==(const PointwiseInterval&) const = default;
};

using FixedInterval = std::variant<CantorPoint, PointwiseInterval>;

// Fixed intervals of a square element [0,m] -> [0,m] ordered along [0,m].
// Dyadic isolated fixed points appear once per side that lies in the domain,
// left side first; each endpoint of a maximal pointwise interval contributes the
// side facing away from the interval.
std::vector<FixedInterval> fixed_intervals(const PLMap& f);

// Dyadic isolated fixed points and endpoints of pointwise intervals, including
// both ends of the domain.
std::vector<Rational> cut_points(const PLMap& f);

bool is_one_bump(const PLMap& f);

Rational plog(const Rational& x);
Rational plog_inv(const Rational& y);

// Thompson-like map [alpha, beta] -> [0,1].
PLMap rescale_to_unit(const Rational& alpha, const Rational& beta);

// phi^-1 f phi restricted to [lo, hi], transported to [0,1] by rescale_to_unit.
PLMap conjugate_to_unit(const PLMap& f, const Rational& lo, const Rational& hi);

}  // namespace fstrand
