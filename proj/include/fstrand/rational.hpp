#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace fstrand {

using Rational = mpq_class;
using Integer = mpz_class;

// 2^k for any integer k.
Rational pow2(int k);

bool is_dyadic(const Rational& q);

// k with q == 2^k, if q is an exact power of two.
std::optional<int> log2_exact(const Rational& q);

// Largest k with 2^k <= q.  q must be positive.
int floor_log2(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Accepts "p/q", "p" and a leading '-'.  Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

}  // namespace fstrand
