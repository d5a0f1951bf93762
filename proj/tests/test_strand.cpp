#include "fstrand/error.hpp"
#include "fstrand/random.hpp"
#include "fstrand/strand.hpp"
#include "fstrand/words.hpp"

#include <doctest.h>

using namespace fstrand;

namespace {

StrandDiagram three_paths()
{
    // .00a -> .0a, .01a -> .10a, .1a -> .11a
    return from_tree_pair(parse_tree("((**)*)"), parse_tree("(*(**))"));
}

// Value k + .w carried by a tail word and its source index.
Rational value_of(int k, const TailWord& w)
{
    return Rational(k) + tail_to_rational(w);
}

}  // namespace

TEST_CASE("trees")
{
    const Tree t = parse_tree("((**)*)");
    REQUIRE(t.leaves.size() == 3);
    CHECK(t.leaves[0] == BinaryWord("00"));
    CHECK(t.leaves[1] == BinaryWord("01"));
    CHECK(t.leaves[2] == BinaryWord("1"));
    CHECK(format_tree(t) == "((**)*)");
    CHECK(parse_tree(" ( * ( * * ) ) ").leaves.size() == 3);
    CHECK_THROWS_AS(parse_tree("((**)"), ParseError);
    CHECK_THROWS_AS(parse_tree("(*a)"), ParseError);
    CHECK_THROWS_AS(from_tree_pair(parse_tree("(**)"), parse_tree("*")), DomainError);
}

TEST_CASE("three path example")
{
    const StrandDiagram d = three_paths();
    CHECK(to_pl_map(d) == PLMap({{0, 0}, {Rational(1, 4), Rational(1, 2)}, {Rational(1, 2), Rational(3, 4)}, {1, 1}}));
    const auto [sink, out] = evaluate(d, 0, TailWord::parse(".01(1)"));
    CHECK(sink == 0);
    CHECK(out.str() == ".10(1)");
    CHECK(to_pl_map(d)(Rational(3, 8)) == Rational(5, 8));
    CHECK(is_reduced(d));
}

TEST_CASE("trivial diagram")
{
    const StrandDiagram t = StrandDiagram::trivial();
    CHECK(to_pl_map(t) == PLMap::identity(1));
    CHECK(from_tree_pair(parse_tree("*"), parse_tree("*")).split_count() == 0);
    const TailWord w = TailWord::parse(".0110(101)");
    CHECK(evaluate(t, 0, w).second == w);
    CHECK(equal_reduced(invert_diagram(t), t));
    CHECK(to_pl_map(StrandDiagram::trivial(3)) == PLMap::identity(3));
}

TEST_CASE("generator diagrams match the generator maps")
{
    for (int gen = 0; gen < 2; ++gen)
        for (bool inv : {false, true}) {
            const Letter l{gen, inv};
            CHECK(to_pl_map(generator_diagram(l)) == generator_map(l));
        }
    CHECK(to_pl_map(generator_diagram({0, false})) == x0());
    const auto [sink, out] = evaluate(generator_diagram({0, false}), 0, TailWord::parse(".(0)"));
    CHECK(sink == 0);
    CHECK(out.str() == ".(0)");
    CHECK(to_pl_map(invert_diagram(generator_diagram({0, false})))(Rational(1, 4)) == Rational(1, 2));
}

TEST_CASE("type I reduction")
{
    // A split whose two strands merge straight back.
    const StrandDiagram d = from_tree_pair(parse_tree("(**)"), parse_tree("(**)"));
    CHECK_FALSE(is_reduced(d));
    const StrandDiagram r = reduce(d);
    CHECK(r.split_count() == 0);
    CHECK(r.merge_count() == 0);
    CHECK(equal_reduced(r, StrandDiagram::trivial()));
}

TEST_CASE("type II reduction")
{
    // x0 followed by its inverse: the middle merge feeds a split.
    const StrandDiagram d = concatenate(generator_diagram({0, false}), generator_diagram({0, true}));
    CHECK(equal_reduced(reduce(d), StrandDiagram::trivial()));
}

TEST_CASE("reduced forms identify elements")
{
    const auto rd = [](const char* w) { return reduce(word_diagram(parse_word(w))); };
    CHECK(equal_reduced(rd("x0 x0^-1 x1"), rd("x1")));
    CHECK_FALSE(equal_reduced(rd("x0 x1"), rd("x1 x0")));
    CHECK(word_map(parse_word("x0 x1"))(Rational(3, 4)) != word_map(parse_word("x1 x0"))(Rational(3, 4)));
    CHECK_THROWS_AS(equal_reduced(word_diagram(parse_word("x0 x0^-1")), StrandDiagram::trivial()), DomainError);
}

TEST_CASE("relators reduce to the trivial diagram")
{
    // [a, b] = a^-1 b^-1 a b with a = x1^-1 x0, b = x0 x1 x0^-1 (and x0^2 x1 x0^-2)
    const auto comm = [](const Word& a, const Word& b) {
        Word w = inverse(a);
        const Word bi = inverse(b);
        w.insert(w.end(), bi.begin(), bi.end());
        w.insert(w.end(), a.begin(), a.end());
        w.insert(w.end(), b.begin(), b.end());
        return w;
    };
    const Word a = parse_word("x1^-1 x0");
    for (const char* b : {"x0 x1 x0^-1", "x0^2 x1 x0^-2"}) {
        const StrandDiagram d = word_diagram(comm(a, parse_word(b)));
        CHECK(equal_reduced(reduce(d), StrandDiagram::trivial()));
    }
}

TEST_CASE("concatenation is composition")
{
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        const Word w1 = random_word(rng, 4);
        const Word w2 = random_word(rng, 4);
        const StrandDiagram d = concatenate(word_diagram(w1), word_diagram(w2));
        CHECK(to_pl_map(d) == compose(word_map(w1), word_map(w2)));
        CHECK(to_pl_map(reduce(d)) == to_pl_map(d));
    }
    const PLMap f = random_thompson_map(rng, 2, 3, 5);
    const PLMap g = random_thompson_map(rng, 3, 2, 6);
    CHECK(to_pl_map(concatenate(from_pl_map(f), from_pl_map(g))) == compose(f, g));
    CHECK_THROWS_AS(concatenate(from_pl_map(f), from_pl_map(f)), DomainError);
    CHECK(equal_reduced(reduce(concatenate(from_pl_map(f), StrandDiagram::trivial(3))), from_pl_map(f)));
}

TEST_CASE("groupoid round trip")
{
    Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        const int m = static_cast<int>(rng.uniform(1, 4));
        const int n = static_cast<int>(rng.uniform(1, 4));
        const PLMap f = random_thompson_map(rng, m, n, static_cast<int>(rng.uniform(std::max(m, n), 9)));
        const StrandDiagram d = from_pl_map(f);
        CHECK(d.source_count() == m);
        CHECK(d.sink_count() == n);
        CHECK(is_reduced(d));
        CHECK(to_pl_map(d) == f);
        CHECK(to_pl_map(invert_diagram(d)) == invert(f));
        CHECK(equal_reduced(invert_diagram(invert_diagram(d)), d));
        CHECK(equal_reduced(from_pl_map(to_pl_map(d)), d));
    }
    CHECK_THROWS_AS(from_pl_map(PLMap({{0, 0}, {Rational(1, 3), Rational(1, 2)}, {1, 1}})), DomainError);
}

TEST_CASE("stack machine agrees with the map")
{
    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
        const StrandDiagram d = random_diagram(rng, 4);
        const PLMap f = to_pl_map(d);
        for (int k = 0; k < 30; ++k) {
            const Rational x = random_dyadic(rng, 0, d.source_count(), 8);
            if (x == d.source_count())
                continue;
            const long src = floor(x).get_si();
            const auto tails = rational_to_tails(x - src);
            const TailWord w = tails.empty() ? TailWord::parse(".(0)") : tails.back();
            const auto [sink, out] = evaluate(d, static_cast<int>(src), w);
            CHECK(value_of(sink, out) == f(x));
        }
        // Non-dyadic inputs go through the same machine.
        const Rational third = Rational(1, 3);
        const auto [sink, out] = evaluate(d, 0, TailWord::parse(".(01)"));
        CHECK(value_of(sink, out) == f(third));
    }
}

TEST_CASE("reduction order does not matter")
{
    Rng rng(37);
    for (int i = 0; i < 30; ++i) {
        const StrandDiagram d = random_diagram(rng, 5);
        std::mt19937_64 a(rng.engine()());
        std::mt19937_64 b(rng.engine()());
        const StrandDiagram r1 = reduce(d, &a);
        const StrandDiagram r2 = reduce(d, &b);
        CHECK(equal_reduced(r1, r2));
        CHECK(equal_reduced(r1, reduce(d)));
        CHECK(equal_reduced(r1, from_pl_map(to_pl_map(d))));
    }
}

TEST_CASE("text and DOT output")
{
    const StrandDiagram d = reduce(word_diagram(parse_word("x0")));
    const std::string dot = to_dot(d);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("invtriangle") != std::string::npos);
    CHECK(!to_text(d).empty());
}
