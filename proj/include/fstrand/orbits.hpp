#pragma once

#include "fstrand/binary.hpp"
#include "fstrand/plmap.hpp"
#include "fstrand/strand.hpp"

#include <span>

namespace fstrand {

// Points of (0,1).  Throws DomainError on 0 or 1.
bool in_same_orbit(const TailWord& t, const TailWord& u);
bool in_same_orbit(const Rational& t, const Rational& u);

// Tree-pair diagram realising .mu a -> .nu a for t = .mu w and u = .nu w.
StrandDiagram pipeline_diagram(const TailWord& t, const TailWord& u);

// g in F with g(t) = u.  Throws DomainError when the tails differ.
PLMap pipeline_element(const TailWord& t, const TailWord& u);
PLMap pipeline_element(const Rational& t, const Rational& u);

// g in F with g(ts[i]) = us[i] for every i.  Both lists strictly increasing
// inside (0,1).
PLMap multipoint_transporter(std::span<const Rational> ts, std::span<const Rational> us);
PLMap multipoint_transporter(std::span<const TailWord> ts, std::span<const TailWord> us);

}  // namespace fstrand
