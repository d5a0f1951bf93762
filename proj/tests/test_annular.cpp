#include "fstrand/annular.hpp"
#include "fstrand/error.hpp"
#include "fstrand/random.hpp"
#include "fstrand/words.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fstrand;

namespace {

// [0,4] -> [0,4]; its annular diagram has one vertex per split and merge.
PLMap groupoid_rep()
{
    return PLMap({{0, 0}, {Rational(1, 2), 1}, {1, Rational(3, 2)}, {3, Rational(5, 2)}, {Rational(7, 2), 3}, {4, 4}});
}

// Piece i of the partition sent linearly onto [i, i+1].
PLMap partition_map(const std::vector<Rational>& cuts)
{
    std::vector<Breakpoint> pts;
    for (std::size_t i = 0; i < cuts.size(); ++i)
        pts.push_back({cuts[i], Rational(static_cast<long>(i))});
    return PLMap(std::move(pts));
}

PLMap four_point_element()
{
    return PLMap({{0, 0},
                  {Rational(1, 4), Rational(1, 8)},
                  {Rational(5, 16), Rational(1, 4)},
                  {Rational(3, 8), Rational(1, 2)},
                  {Rational(1, 2), Rational(5, 8)},
                  {Rational(3, 4), Rational(3, 4)},
                  {Rational(13, 16), Rational(7, 8)},
                  {Rational(7, 8), Rational(15, 16)},
                  {1, 1}});
}

// f(i + .b) = i + .1101b near i + 13/15 on [0,3].
PLMap merge_loop_element()
{
    return PLMap({{0, 0}, {Rational(7, 8), Rational(7, 4)}, {1, Rational(29, 16)}, {2, Rational(15, 8)}, {Rational(5, 2), 2}, {3, 3}});
}

std::string key(const PLMap& f)
{
    return canonical_key(annular_diagram(f));
}

std::vector<LoopKind> kinds(const AnnularDiagram& a)
{
    std::vector<LoopKind> k;
    for (const auto& l : classify_loops(a))
        k.push_back(l.kind);
    return k;
}

}  // namespace

TEST_CASE("closing the trivial diagram leaves a free loop")
{
    const AnnularDiagram a = reduce_annular(close(StrandDiagram::trivial()));
    CHECK(a.vertex_count() == 0);
    CHECK(a.free_loop_count() == 1);
    CHECK(kinds(a) == std::vector{LoopKind::Free});
    CHECK(canonical_key(a) == "F|");

    // Three parallel strands close up into concentric free loops that merge.
    const AnnularDiagram b = reduce_annular(close(StrandDiagram::trivial(3)));
    CHECK(b.free_loop_count() == 1);
    CHECK(canonical_key(b) == canonical_key(a));
    CHECK(cut(a).source_count() == 1);
    CHECK(to_pl_map(cut(a)) == PLMap::identity(1));
    Rng rng(1);
    CHECK_THROWS_AS(close(from_pl_map(random_thompson_map(rng, 1, 2, 3))), DomainError);
}

TEST_CASE("loops of the generators")
{
    const AnnularDiagram a0 = annular_diagram(x0());
    CHECK(a0.vertex_count() == 2);
    CHECK(kinds(a0) == std::vector{LoopKind::Merge, LoopKind::Split});

    const AnnularDiagram a1 = annular_diagram(x1());
    CHECK(kinds(a1) == std::vector{LoopKind::Free, LoopKind::Merge, LoopKind::Split});
    CHECK(components(a1).size() == 2);
    CHECK(canonical_key(a0) != canonical_key(a1));
    CHECK_FALSE(are_conjugate(x0(), x1()));

    const AnnularDiagram ai = annular_diagram(invert(x0()));
    CHECK(kinds(ai) == std::vector{LoopKind::Split, LoopKind::Merge});
}

TEST_CASE("three conjugate elements and their minimal representative")
{
    const PLMap g = groupoid_rep();
    const AnnularDiagram ag = annular_diagram(g);
    const StrandDiagram dg = from_pl_map(g);
    CHECK(ag.vertex_count() == dg.split_count() + dg.merge_count());

    const std::vector<std::vector<Rational>> partitions = {
        {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1},
        {0, Rational(1, 2), Rational(3, 4), Rational(7, 8), 1},
        {0, Rational(1, 8), Rational(1, 4), Rational(1, 2), 1},
    };
    std::vector<std::string> keys;
    for (const auto& cuts : partitions) {
        const PLMap p = partition_map(cuts);
        const PLMap f = compose(compose(p, g), invert(p));
        CHECK(is_thompson_like(f));
        const StrandDiagram d = from_pl_map(f);
        CHECK(d.split_count() + d.merge_count() > ag.vertex_count());
        CHECK(are_conjugate(f, g));
        keys.push_back(key(f));
    }
    CHECK(keys[0] == keys[1]);
    CHECK(keys[1] == keys[2]);
    CHECK(keys[0] == canonical_key(ag));

    // Cutting along the ray gives the minimal representative back.
    const StrandDiagram c = cut(ag);
    CHECK(to_pl_map(c) == g);
}

TEST_CASE("keys are conjugacy invariants")
{
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const Word f = random_word(rng, 5);
        const Word g = random_word(rng, 4);
        Word conj = inverse(g);
        conj.insert(conj.end(), f.begin(), f.end());
        conj.insert(conj.end(), g.begin(), g.end());
        CHECK(key(word_map(conj)) == key(word_map(f)));

        // Same key from the unreduced closure of the unreduced word diagram.
        const AnnularDiagram a = reduce_annular(close(word_diagram(conj)));
        CHECK(is_reduced(a));
        CHECK(canonical_key(a) == key(word_map(f)));
    }
}

TEST_CASE("reduction order does not change the key")
{
    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        const Word w = random_word(rng, 6);
        const AnnularDiagram a = close(word_diagram(w));
        std::mt19937_64 e1(rng.engine()());
        std::mt19937_64 e2(rng.engine()());
        CHECK(canonical_key(reduce_annular(a, &e1)) == canonical_key(reduce_annular(a, &e2)));
    }
    CHECK_THROWS_AS(canonical_key(close(word_diagram(parse_word("x0 x0^-1")))), DomainError);
}

TEST_CASE("loop classification matches fixed intervals")
{
    for (const Word& w : all_words(3)) {
        const PLMap f = word_map(w);
        const AnnularDiagram a = annular_diagram(f);
        const auto loops = classify_loops(a);
        const auto analytic = fixed_intervals(f);
        REQUIRE(loops.size() == analytic.size());
        for (std::size_t i = 0; i < loops.size(); ++i) {
            if (const auto* p = std::get_if<CantorPoint>(&analytic[i])) {
                CHECK(loops[i].kind == (p->slope_exp > 0 ? LoopKind::Split : LoopKind::Merge));
                CHECK(loops[i].size == std::abs(p->slope_exp));
                CHECK(same_tail(TailWord({}, loops[i].tail), TailWord({}, p->tail)));
            } else {
                CHECK(loops[i].kind == LoopKind::Free);
            }
        }
        CHECK(fixed_intervals_from_loops(a, f) == analytic);

        // Kinds alternate inside each component; ends are dyadic.
        for (std::size_t i = 0; i + 1 < loops.size(); ++i)
            if (loops[i].component == loops[i + 1].component)
                CHECK(loops[i].kind != loops[i + 1].kind);
    }
}

TEST_CASE("four fixed point element")
{
    const PLMap f = four_point_element();
    const AnnularDiagram a = annular_diagram(f);
    const auto loops = classify_loops(a);
    REQUIRE(loops.size() == 5);
    const int signed_sizes[] = {-1, 2, -1, 1, -1};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK((loops[i].kind == LoopKind::Split ? loops[i].size : -loops[i].size) == signed_sizes[i]);
    CHECK(loops[1].tail == BinaryWord("01"));
    CHECK(fixed_intervals_from_loops(a, f) == fixed_intervals(f));

    // Components split at 0, 3/4 and 1.
    const auto cs = components(a);
    CHECK(cut_points(f) == std::vector<Rational>{0, Rational(3, 4), 1});
    REQUIRE(cs.size() == 2);
    CHECK(canonical_key(cs[0]) == key(conjugate_to_unit(f, 0, Rational(3, 4))));
    CHECK(canonical_key(cs[1]) == key(conjugate_to_unit(f, Rational(3, 4), 1)));
}

TEST_CASE("merge loop worked example")
{
    const PLMap f = merge_loop_element();
    CHECK(f(1 + Rational(13, 15)) == 1 + Rational(13, 15));
    // i + .b -> i + .1101b for b near .(1101)
    for (const Rational b : {Rational(13, 15), Rational(Rational(13, 15) + Rational(1, 1024))})
        CHECK(f(1 + b) == 1 + Rational(13, 16) + b / 16);

    const AnnularDiagram a = annular_diagram(f);
    const auto loops = classify_loops(a);
    const auto it = std::find_if(loops.begin(), loops.end(), [](const LoopInfo& l) { return l.kind == LoopKind::Merge; });
    REQUIRE(it != loops.end());
    CHECK(it->size == 4);
    CHECK(it->tail == BinaryWord("1101"));

    const auto fi = fixed_intervals_from_loops(a, f);
    REQUIRE(fi.size() == 3);
    const auto& p = std::get<CantorPoint>(fi[1]);
    CHECK(p.offset == 1);
    CHECK(p.value() == 1 + Rational(13, 15));
    CHECK(p.slope_exp == -4);
    CHECK(p.tail == BinaryWord("1101"));
}

TEST_CASE("components are the conjugated restrictions")
{
    Rng rng(47);
    for (int i = 0; i < 60; ++i) {
        const PLMap f = word_map(random_word(rng, 5));
        const AnnularDiagram a = annular_diagram(f);
        const auto cs = components(a);
        const auto cp = cut_points(f);
        // Free-loop components stand for whole identity intervals.
        REQUIRE(cs.size() + 1 == cp.size());
        for (std::size_t k = 0; k < cs.size(); ++k)
            CHECK(canonical_key(cs[k]) == key(conjugate_to_unit(f, cp[k], cp[k + 1])));
    }
}

TEST_CASE("cut and close")
{
    Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        const PLMap f = word_map(random_word(rng, 5));
        const AnnularDiagram a = annular_diagram(f);
        const StrandDiagram c = cut(a);
        CHECK(c.source_count() == c.sink_count());
        CHECK(c.split_count() + c.merge_count() == a.vertex_count());
        CHECK(is_thompson_like(to_pl_map(c)));
        CHECK(canonical_key(reduce_annular(close(c))) == canonical_key(a));
        CHECK(are_conjugate(to_pl_map(c), f));
    }
    const StrandDiagram c0 = cut(annular_diagram(x0()));
    CHECK(canonical_key(reduce_annular(close(c0))) == key(x0()));
}

TEST_CASE("groupoid conjugacy")
{
    Rng rng(59);
    for (int i = 0; i < 40; ++i) {
        const int m = static_cast<int>(rng.uniform(1, 3));
        const int n = static_cast<int>(rng.uniform(1, 3));
        const PLMap f = random_thompson_map(rng, m, m, m + 3);
        const PLMap h = random_thompson_map(rng, m, n, std::max(m, n) + 2);
        CHECK(are_conjugate(f, compose(compose(invert(h), f), h)));
    }
    CHECK_THROWS_AS(are_conjugate(random_thompson_map(rng, 1, 2, 3), x0()), DomainError);
}

TEST_CASE("output")
{
    const AnnularDiagram a = annular_diagram(x1());
    CHECK(to_dot(a).find("digraph") != std::string::npos);
    CHECK(!to_text(a).empty());
    CHECK(to_hex("F|") == "467c");
}
