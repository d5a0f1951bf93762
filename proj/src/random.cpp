#include "fstrand/random.hpp"

#include "fstrand/error.hpp"

namespace fstrand {

long Rng::uniform(long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    return d(engine_);
}

Word random_word(Rng& rng, int length)
{
    Word w;
    for (int i = 0; i < length; ++i)
        w.push_back({static_cast<int>(rng.uniform(0, 1)), rng.uniform(0, 1) == 1});
    return w;
}

Rational random_dyadic(Rng& rng, const Rational& lo, const Rational& hi, int max_depth)
{
    const int d = static_cast<int>(rng.uniform(0, max_depth));
    const Rational scale = pow2(d);
    const Integer a = ceil(Rational(lo * scale));
    const Integer b = floor(Rational(hi * scale));
    if (a > b)
        return random_dyadic(rng, lo, hi, max_depth);
    const Integer span = b - a;
    if (!span.fits_slong_p())
        throw DomainError("random_dyadic: range too wide");
    return Rational(a + rng.uniform(0, span.get_si())) / scale;
}

namespace {

std::vector<std::vector<BinaryWord>> random_forest(Rng& rng, int roots, int pieces)
{
    std::vector<std::vector<BinaryWord>> f(static_cast<std::size_t>(roots), std::vector<BinaryWord>{BinaryWord()});
    for (int have = roots; have < pieces; ++have) {
        auto& tree = f[static_cast<std::size_t>(rng.uniform(0, roots - 1))];
        const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(tree.size()) - 1));
        BinaryWord a = tree[i];
        BinaryWord b = a;
        a.push_back(0);
        b.push_back(1);
        tree[i] = b;
        tree.insert(tree.begin() + static_cast<long>(i), a);
    }
    return f;
}

struct Span {
    Rational start;
    Rational len;
};

std::vector<Span> spans(const std::vector<std::vector<BinaryWord>>& forest)
{
    std::vector<Span> out;
    for (std::size_t k = 0; k < forest.size(); ++k)
        for (const auto& w : forest[k])
            out.push_back({Rational(static_cast<long>(k)) + Rational(w.to_integer()) / pow2(static_cast<int>(w.size())),
                           pow2(-static_cast<int>(w.size()))});
    return out;
}

}  // namespace

PLMap random_thompson_map(Rng& rng, int m, int n, int pieces)
{
    if (pieces < std::max(m, n))
        throw DomainError("random_thompson_map needs at least max(m, n) pieces");
    const auto dom = spans(random_forest(rng, m, pieces));
    const auto ran = spans(random_forest(rng, n, pieces));
    std::vector<Breakpoint> pts;
    for (std::size_t i = 0; i < dom.size(); ++i)
        pts.push_back({dom[i].start, ran[i].start});
    pts.push_back({m, n});
    return PLMap(std::move(pts));
}

CircleMap random_circle_map(Rng& rng, int m, int n, int pieces)
{
    if (pieces < std::max(m, n))
        throw DomainError("random_circle_map needs at least max(m, n) pieces");
    const auto dom = spans(random_forest(rng, m, pieces));
    const auto ran = spans(random_forest(rng, n, pieces));
    const std::size_t shift = static_cast<std::size_t>(rng.uniform(0, pieces - 1));
    std::vector<Breakpoint> pts;
    Rational y = ran[shift].start;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        pts.push_back({dom[i].start, y});
        y += ran[(i + shift) % ran.size()].len;
    }
    pts.push_back({m, y});
    return CircleMap(m, n, PLMap(std::move(pts)));
}

StrandDiagram random_diagram(Rng& rng, int blocks)
{
    StrandDiagram d = StrandDiagram::trivial(1);
    int width = 1;
    for (int b = 0; b < blocks; ++b) {
        if (width == 1 && rng.uniform(0, 2) != 0) {
            d = concatenate(d, generator_diagram({static_cast<int>(rng.uniform(0, 1)), rng.uniform(0, 1) == 1}));
            continue;
        }
        const int next = b + 1 == blocks ? 1 : static_cast<int>(rng.uniform(1, 3));
        const int pieces = std::max(width, next) + static_cast<int>(rng.uniform(0, 3));
        const auto top = random_forest(rng, width, pieces);
        const auto bottom = random_forest(rng, next, pieces);
        d = concatenate(d, forest_diagram(top, bottom));
        width = next;
    }
    if (width != 1) {
        const auto top = random_forest(rng, width, width + 1);
        const auto bottom = random_forest(rng, 1, width + 1);
        d = concatenate(d, forest_diagram(top, bottom));
    }
    return d;
}

}  // namespace fstrand
