#pragma once

#include "fstrand/annular.hpp"
#include "fstrand/plmap.hpp"
#include "fstrand/strand.hpp"

namespace fstrand {

// Degree-one map R/mZ -> R/nZ given by an increasing lift on [0,m] with
// lift(m) = lift(0) + n, normalised so that lift(0) lies in [0,n).
class CircleMap {
public:
    CircleMap(int m, int n, const PLMap& lift);  // normalises; throws DomainError on bad degree

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const PLMap& lift() const noexcept { return lift_; }

    // Lift extended to all of R by lift(x + m) = lift(x) + n.
    Rational operator()(const Rational& x) const;

    bool operator==(const CircleMap&) const = default;

private:
    int m_;
    int n_;
    PLMap lift_;
};

// Parameters picked by mather_invariant: f has slope 2^m at 0 and 2^-n at 1,
// is linear on [0, 2^-a] and [1 - 2^-b, 1], and N iterates carry the
// fundamental domain [2^(-a-m), 2^-a] into (1 - 2^-b, 1].
struct MatherParameters {
    int m;
    int n;
    int a;
    int b;
    int iterations;
};

MatherParameters mather_parameters(const PLMap& f);

// theta -> -plog(1 - f^N(plog_inv(theta - a - m))), with N replaced by
// N + extra_iterations when asked; the result does not depend on that choice.
CircleMap mather_invariant(const PLMap& f, int extra_iterations = 0);

enum class CircleSide { Domain, Range };

// Domain: theta -> lift(theta - k).  Range: theta -> lift(theta) + k.
CircleMap rotate(const CircleMap& c, long k, CircleSide side);

bool mather_equivalent(const CircleMap& c1, const CircleMap& c2);

// (m,n)-strand diagram whose sources and sinks are read cyclically.  Source i
// stands for [i, i+1] on R/mZ and sink j for [j, j+1] on R/nZ.
struct CylindricalDiagram {
    StrandDiagram diagram;

    int m() const { return diagram.source_count(); }
    int n() const { return diagram.sink_count(); }
};

bool is_reduced(const CylindricalDiagram& c);

// Removes the outer split loop and the inner merge loop of the reduced
// annular diagram of a one-bump element.
CylindricalDiagram cylindrical_from_annular(const AnnularDiagram& a);

// Labels source_base and sink_base as 0; other labels follow cyclically.
CircleMap circle_map_from_cylindrical(const CylindricalDiagram& c, int source_base = 0, int sink_base = 0);
CylindricalDiagram cylindrical_from_circle_map(const CircleMap& f);

}  // namespace fstrand
