#include "fstrand/error.hpp"
#include "fstrand/orbits.hpp"
#include "fstrand/random.hpp"
#include "fstrand/words.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace fstrand;

namespace {

void check_bijection(const PLMap& g)
{
    CHECK(is_thompson_like(g));
    CHECK(g.x_min() == 0);
    CHECK(g.x_max() == 1);
    CHECK(g.y_min() == 0);
    CHECK(g.y_max() == 1);
}

// Some expansion of a and some expansion of b repeat the same block up to
// rotation.
bool tails_match(const Rational& a, const Rational& b)
{
    for (const auto& s : rational_to_tails(a))
        for (const auto& t : rational_to_tails(b))
            if (min_rotation(s.period()) == min_rotation(t.period()))
                return true;
    return false;
}

}  // namespace

TEST_CASE("same orbit")
{
    CHECK(in_same_orbit(Rational(3, 4), Rational(1, 2)));
    CHECK(in_same_orbit(Rational(1, 3), Rational(7, 12)));
    CHECK(in_same_orbit(Rational(2, 7), Rational(2, 7)));
    CHECK_FALSE(in_same_orbit(Rational(1, 3), Rational(1, 5)));
    CHECK(in_same_orbit(TailWord::parse(".(01)"), TailWord::parse(".10(01)")));
    CHECK(in_same_orbit(TailWord::parse(".10(1)"), TailWord::parse(".1(0)")));
    CHECK_THROWS_AS(in_same_orbit(Rational(0), Rational(1, 2)), DomainError);
    CHECK_THROWS_AS(in_same_orbit(TailWord::parse(".(1)"), TailWord::parse(".1(0)")), DomainError);
}

TEST_CASE("pipelines")
{
    const PLMap g = pipeline_element(Rational(1, 3), Rational(7, 12));
    check_bijection(g);
    CHECK(g(Rational(1, 3)) == Rational(7, 12));

    const PLMap h = pipeline_element(Rational(1, 2), Rational(1, 4));
    check_bijection(h);
    CHECK(h(Rational(1, 2)) == Rational(1, 4));

    const PLMap id = pipeline_element(Rational(2, 5), Rational(2, 5));
    CHECK(id(Rational(2, 5)) == Rational(2, 5));

    const TailWord t = TailWord::parse(".(01)");
    const TailWord u = TailWord::parse(".10(01)");
    const StrandDiagram d = pipeline_diagram(t, u);
    CHECK(evaluate(d, 0, t).second == u);
    CHECK(pipeline_element(t, u)(Rational(1, 3)) == Rational(7, 12));

    CHECK_THROWS_AS(pipeline_element(Rational(1, 3), Rational(1, 5)), DomainError);
}

TEST_CASE("orbit test against expansions and pipelines")
{
    Rng rng(73);
    int same = 0;
    for (int i = 0; i < 300; ++i) {
        const long qa = rng.uniform(2, 24);
        const long qb = rng.uniform(2, 24);
        Rational a(rng.uniform(1, qa - 1), qa);
        Rational b(rng.uniform(1, qb - 1), qb);
        a.canonicalize();
        b.canonicalize();
        const bool s = in_same_orbit(a, b);
        CHECK(s == tails_match(a, b));
        if (s) {
            ++same;
            const PLMap g = pipeline_element(a, b);
            check_bijection(g);
            CHECK(g(a) == b);
        } else {
            CHECK_THROWS_AS(pipeline_element(a, b), DomainError);
        }
    }
    CHECK(same > 20);
}

TEST_CASE("no short word joins different orbits")
{
    const Rational pts[] = {Rational(1, 3), Rational(1, 5), Rational(2, 7), Rational(1, 2)};
    const auto words = all_words(4);
    for (const auto& a : pts)
        for (const auto& b : pts) {
            if (in_same_orbit(a, b))
                continue;
            for (const Word& w : words)
                CHECK(word_map(w)(a) != b);
        }
}

TEST_CASE("multipoint transport")
{
    const std::vector<Rational> ts = {Rational(1, 4), Rational(3, 4)};
    const std::vector<Rational> us = {Rational(1, 2), Rational(7, 8)};
    const PLMap g = multipoint_transporter(ts, us);
    check_bijection(g);
    CHECK(g(ts[0]) == us[0]);
    CHECK(g(ts[1]) == us[1]);

    const std::vector<Rational> one_t = {Rational(1, 3)};
    const std::vector<Rational> one_u = {Rational(7, 12)};
    CHECK(multipoint_transporter(one_t, one_u)(Rational(1, 3)) == Rational(7, 12));

    const std::vector<Rational> bad_t = {Rational(1, 3), Rational(1, 2)};
    const std::vector<Rational> bad_u = {Rational(1, 5), Rational(3, 4)};
    CHECK_THROWS_AS(multipoint_transporter(bad_t, bad_u), DomainError);
    const std::vector<Rational> down = {Rational(3, 4), Rational(1, 4)};
    CHECK_THROWS_AS(multipoint_transporter(down, us), DomainError);

    const std::vector<TailWord> tt = {TailWord::parse(".(01)"), TailWord::parse(".1(0011)")};
    const std::vector<TailWord> tu = {TailWord::parse(".0001(10)"), TailWord::parse(".(0110)")};
    const PLMap h = multipoint_transporter(tt, tu);
    check_bijection(h);
    for (std::size_t i = 0; i < tt.size(); ++i)
        CHECK(h(tail_to_rational(tt[i])) == tail_to_rational(tu[i]));
}

TEST_CASE("random multipoint transport")
{
    Rng rng(79);
    const Rational seeds[] = {Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(1, 2), Rational(3, 11)};
    for (int i = 0; i < 60; ++i) {
        // Points from several orbits, moved by two random elements of F.
        const int k = static_cast<int>(rng.uniform(1, 4));
        std::vector<Rational> ts;
        std::vector<Rational> us;
        const PLMap a = word_map(random_word(rng, 6));
        const PLMap b = word_map(random_word(rng, 6));
        std::vector<Rational> base;
        while (static_cast<int>(base.size()) < k) {
            const Rational s = seeds[rng.uniform(0, 4)] + random_dyadic(rng, 0, Rational(1, 2), 4);
            if (s > 0 && s < 1 && std::find(base.begin(), base.end(), s) == base.end())
                base.push_back(s);
        }
        std::sort(base.begin(), base.end());
        for (const auto& s : base) {
            ts.push_back(a(s));
            us.push_back(b(s));
        }
        const PLMap g = multipoint_transporter(ts, us);
        check_bijection(g);
        for (std::size_t j = 0; j < ts.size(); ++j)
            CHECK(g(ts[j]) == us[j]);
    }
}
