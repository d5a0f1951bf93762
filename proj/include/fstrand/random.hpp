#pragma once

#include "fstrand/mather.hpp"
#include "fstrand/plmap.hpp"
#include "fstrand/strand.hpp"
#include "fstrand/words.hpp"

#include <cstdint>
#include <random>

namespace fstrand {

// Seeded source of test data; the seed is kept so runs can be reproduced.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::mt19937_64& engine() noexcept { return engine_; }
    long uniform(long lo, long hi);  // inclusive

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

Word random_word(Rng& rng, int length);

// Dyadic in [lo, hi] with denominator at most 2^max_depth.
Rational random_dyadic(Rng& rng, const Rational& lo, const Rational& hi, int max_depth);

// Random element [0,m] -> [0,n] built from two random dyadic subdivisions with
// the given number of pieces (at least max(m, n)).
PLMap random_thompson_map(Rng& rng, int m, int n, int pieces);

CircleMap random_circle_map(Rng& rng, int m, int n, int pieces);

// Unreduced diagram: random generator diagrams and random groupoid forests
// glued end to end.
StrandDiagram random_diagram(Rng& rng, int blocks);

}  // namespace fstrand
