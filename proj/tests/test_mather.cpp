#include "fstrand/error.hpp"
#include "fstrand/mather.hpp"
#include "fstrand/random.hpp"
#include "fstrand/words.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace fstrand;

namespace {

// Distinct one-bump elements among words up to the given length.
std::vector<PLMap> one_bump_corpus(int max_len)
{
    std::vector<PLMap> out;
    for (const Word& w : all_words(max_len)) {
        PLMap f = word_map(w);
        if (is_one_bump(f) && std::find(out.begin(), out.end(), f) == out.end())
            out.push_back(std::move(f));
    }
    return out;
}

void check_thompson_circle_map(const CircleMap& c)
{
    const PLMap& l = c.lift();
    CHECK(l.x_min() == 0);
    CHECK(l.x_max() == c.m());
    CHECK(l.y_max() - l.y_min() == c.n());
    CHECK(l.y_min() >= 0);
    CHECK(l.y_min() < c.n());
    for (std::size_t s = 0; s < l.segments(); ++s)
        CHECK(log2_exact(l.slope(s)).has_value());
    for (const auto& b : l.breakpoints()) {
        CHECK(is_dyadic(b.x));
        CHECK(is_dyadic(b.y));
    }
}

bool whole_turns(const Rational& d, int n)
{
    const Rational q = d / n;
    return q.get_den() == 1;
}

}  // namespace

TEST_CASE("circle maps")
{
    const CircleMap id(1, 1, PLMap::identity(1));
    CHECK(id(Rational(5, 2)) == Rational(5, 2));
    CHECK(id(Rational(-1, 4)) == Rational(-1, 4));

    // A lift starting above [0,n) is shifted down.
    const CircleMap c(1, 2, PLMap({{0, 3}, {Rational(1, 2), 4}, {1, 5}}));
    CHECK(c.lift().y_min() == 1);
    CHECK(c(1) == 3);
    CHECK_THROWS_AS(CircleMap(1, 2, PLMap::identity(1)), DomainError);
}

TEST_CASE("mather invariant of the inverse of x0")
{
    const PLMap f = invert(x0());
    const MatherParameters p = mather_parameters(f);
    CHECK(p.m == 1);
    CHECK(p.n == 1);
    const CircleMap c = mather_invariant(f);
    CHECK(c.m() == 1);
    CHECK(c.n() == 1);
    check_thompson_circle_map(c);
    CHECK(mather_invariant(f, 1) == c);
    CHECK(mather_invariant(f, 2) == c);
    CHECK_THROWS_AS(mather_invariant(x0()), DomainError);
    CHECK_THROWS_AS(mather_invariant(x1()), DomainError);
}

TEST_CASE("rotations")
{
    Rng rng(61);
    for (int i = 0; i < 30; ++i) {
        const int m = static_cast<int>(rng.uniform(1, 3));
        const int n = static_cast<int>(rng.uniform(1, 3));
        const CircleMap c = random_circle_map(rng, m, n, std::max(m, n) + 3);
        check_thompson_circle_map(c);
        CHECK(rotate(c, 0, CircleSide::Domain) == c);
        CHECK(rotate(c, m, CircleSide::Domain) == c);
        CHECK(rotate(c, n, CircleSide::Range) == c);
        for (long k = -3; k <= 3; ++k) {
            CHECK(rotate(rotate(c, k, CircleSide::Domain), -k, CircleSide::Domain) == c);
            CHECK(rotate(rotate(c, k, CircleSide::Range), -k, CircleSide::Range) == c);
            CHECK(mather_equivalent(c, rotate(c, k, CircleSide::Domain)));
            CHECK(mather_equivalent(c, rotate(c, k, CircleSide::Range)));
            // Pointwise: lift(theta - k) and lift(theta) + k, up to whole turns of the range.
            const Rational t = random_dyadic(rng, 0, m, 5);
            CHECK(whole_turns(rotate(c, k, CircleSide::Domain)(t) - c(t - k), n));
            CHECK(whole_turns(rotate(c, k, CircleSide::Range)(t) - c(t) - k, n));
        }
    }
}

TEST_CASE("the invariant does not depend on N")
{
    for (const PLMap& f : one_bump_corpus(4)) {
        const CircleMap c = mather_invariant(f);
        check_thompson_circle_map(c);
        CHECK(mather_invariant(f, 1) == c);
        CHECK(mather_invariant(f, 2) == c);
    }
}

TEST_CASE("conjugates have equivalent invariants")
{
    const auto corpus = one_bump_corpus(4);
    REQUIRE(corpus.size() > 10);
    Rng rng(67);
    for (int i = 0; i < 50; ++i) {
        const PLMap& f = corpus[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(corpus.size()) - 1))];
        const PLMap g = word_map(random_word(rng, 4));
        const PLMap h = compose(compose(invert(g), f), g);
        REQUIRE(is_one_bump(h));
        CHECK(mather_equivalent(mather_invariant(f), mather_invariant(h)));
    }
}

TEST_CASE("equal end slopes, different classes")
{
    // Group the corpus by end slopes and look for a pair that is not conjugate.
    const auto corpus = one_bump_corpus(5);
    std::map<std::pair<int, int>, std::vector<const PLMap*>> by_slopes;
    for (const auto& f : corpus) {
        const auto p = mather_parameters(f);
        by_slopes[{p.m, p.n}].push_back(&f);
    }
    int found = 0;
    for (const auto& [slopes, fs] : by_slopes)
        for (std::size_t i = 0; i < fs.size() && found < 20; ++i)
            for (std::size_t j = i + 1; j < fs.size() && found < 20; ++j)
                if (!are_conjugate(*fs[i], *fs[j])) {
                    CHECK_FALSE(mather_equivalent(mather_invariant(*fs[i]), mather_invariant(*fs[j])));
                    ++found;
                }
    CHECK(found > 0);
}

TEST_CASE("cylindrical diagrams")
{
    const CylindricalDiagram c = cylindrical_from_annular(annular_diagram(invert(x0())));
    CHECK(c.m() == 1);
    CHECK(c.n() == 1);
    CHECK(is_reduced(c));

    const CylindricalDiagram trivial{StrandDiagram::trivial()};
    CHECK(circle_map_from_cylindrical(trivial) == CircleMap(1, 1, PLMap::identity(1)));
    CHECK_THROWS_AS(cylindrical_from_annular(annular_diagram(x0())), DomainError);

    for (const PLMap& f : one_bump_corpus(4)) {
        const auto p = mather_parameters(f);
        const CylindricalDiagram cyl = cylindrical_from_annular(annular_diagram(f));
        CHECK(cyl.m() == p.m);
        CHECK(cyl.n() == p.n);
        CHECK(is_reduced(cyl));
        const CircleMap from_diagram = circle_map_from_cylindrical(cyl);
        CHECK(mather_equivalent(from_diagram, mather_invariant(f)));
    }
}

TEST_CASE("relabelling acts by rotation")
{
    const PLMap f = one_bump_corpus(4).back();
    const CylindricalDiagram cyl = cylindrical_from_annular(annular_diagram(f));
    const CircleMap base = circle_map_from_cylindrical(cyl);
    for (int s = 0; s < cyl.m(); ++s)
        for (int t = 0; t < cyl.n(); ++t)
            CHECK(mather_equivalent(circle_map_from_cylindrical(cyl, s, t), base));
}

TEST_CASE("circle maps round trip through cylinders")
{
    Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        const int m = static_cast<int>(rng.uniform(1, 3));
        const int n = static_cast<int>(rng.uniform(1, 3));
        const CircleMap c = random_circle_map(rng, m, n, std::max(m, n) + static_cast<int>(rng.uniform(0, 4)));
        const CylindricalDiagram cyl = cylindrical_from_circle_map(c);
        CHECK(is_reduced(cyl));
        CHECK(cyl.m() == m);
        CHECK(cyl.n() == n);
        CHECK(circle_map_from_cylindrical(cyl) == c);
    }
}
