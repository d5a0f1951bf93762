#include "fstrand/orbits.hpp"

#include "fstrand/error.hpp"

namespace fstrand {

namespace {

void require_interior(const Rational& q)
{
    if (q <= 0 || q >= 1)
        throw DomainError("orbit questions need points strictly inside (0,1), got " + to_string(q));
}

// Leaves of the smallest tree that has .mu as a leaf: one left sibling per 1
// in mu, then mu, then one right sibling per 0 (innermost first).
struct PathLeaves {
    std::vector<BinaryWord> left;
    std::vector<BinaryWord> right;
};

PathLeaves path_leaves(const BinaryWord& mu)
{
    PathLeaves p;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        BinaryWord sib = mu.substr(0, i);
        if (mu[i] == 1) {
            sib.push_back(0);
            p.left.push_back(sib);
        }
    }
    for (std::size_t i = mu.size(); i-- > 0;) {
        BinaryWord sib = mu.substr(0, i);
        if (mu[i] == 0) {
            sib.push_back(1);
            p.right.push_back(sib);
        }
    }
    return p;
}

// Splits the first leaf until the list has the wanted length.
void pad(std::vector<BinaryWord>& leaves, std::size_t want)
{
    while (leaves.size() < want) {
        BinaryWord a = leaves.front();
        BinaryWord b = a;
        a.push_back(0);
        b.push_back(1);
        leaves.front() = b;
        leaves.insert(leaves.begin(), a);
    }
}

// Prefixes mu, nu with t = .mu w and u = .nu w for one common tail w, both
// containing a 0 and a 1.
std::pair<BinaryWord, BinaryWord> aligned_prefixes(const TailWord& t, const TailWord& u)
{
    if (!same_tail(t, u))
        throw DomainError(t.str() + " and " + u.str() + " have different tails");
    const auto& rho = t.period().str();
    const auto& sigma = u.period().str();
    const std::size_t r = (rho + rho).find(sigma);
    BinaryWord mu = t.preperiod() + t.period().substr(0, r);
    BinaryWord nu = u.preperiod();
    const TailWord rest(BinaryWord(), u.period());
    for (std::size_t i = 0; mu.count(0) == 0 || mu.count(1) == 0 || nu.count(0) == 0 || nu.count(1) == 0; ++i) {
        if (i > 2 * (mu.size() + nu.size() + rest.period().size()) + 4)
            throw DomainError("pipeline: prefixes never contain both digits");
        mu.push_back(rest.digit(i));
        nu.push_back(rest.digit(i));
    }
    return {mu, nu};
}

// Expansions of t and u sharing a tail.
std::pair<TailWord, TailWord> matching_expansions(const Rational& t, const Rational& u)
{
    require_interior(t);
    require_interior(u);
    for (const auto& a : rational_to_tails(t))
        for (const auto& b : rational_to_tails(u))
            if (same_tail(a, b))
                return {a, b};
    throw DomainError(to_string(t) + " and " + to_string(u) + " lie in different orbits");
}

}  // namespace

bool in_same_orbit(const TailWord& t, const TailWord& u)
{
    const Rational a = tail_to_rational(t);
    const Rational b = tail_to_rational(u);
    require_interior(a);
    require_interior(b);
    // Dyadic points form a single orbit whichever expansion names them.
    return same_tail(t, u) || (is_dyadic(a) && is_dyadic(b));
}

bool in_same_orbit(const Rational& t, const Rational& u)
{
    require_interior(t);
    require_interior(u);
    for (const auto& a : rational_to_tails(t))
        for (const auto& b : rational_to_tails(u))
            if (same_tail(a, b))
                return true;
    return false;
}

StrandDiagram pipeline_diagram(const TailWord& t, const TailWord& u)
{
    require_interior(tail_to_rational(t));
    require_interior(tail_to_rational(u));
    const auto [mu, nu] = aligned_prefixes(t, u);
    PathLeaves a = path_leaves(mu);
    PathLeaves b = path_leaves(nu);
    const std::size_t left = std::max(a.left.size(), b.left.size());
    const std::size_t right = std::max(a.right.size(), b.right.size());
    pad(a.left, left);
    pad(b.left, left);
    pad(a.right, right);
    pad(b.right, right);
    Tree dom;
    Tree ran;
    dom.leaves = a.left;
    dom.leaves.push_back(mu);
    dom.leaves.insert(dom.leaves.end(), a.right.begin(), a.right.end());
    ran.leaves = b.left;
    ran.leaves.push_back(nu);
    ran.leaves.insert(ran.leaves.end(), b.right.begin(), b.right.end());
    return from_tree_pair(dom, ran);
}

PLMap pipeline_element(const TailWord& t, const TailWord& u)
{
    const StrandDiagram d = pipeline_diagram(t, u);
    const auto [sink, image] = evaluate(d, 0, t);
    if (sink != 0 || tail_to_rational(image) != tail_to_rational(u))
        throw std::logic_error("pipeline does not carry " + t.str() + " to " + u.str());
    return to_pl_map(reduce(d));
}

PLMap pipeline_element(const Rational& t, const Rational& u)
{
    const auto [a, b] = matching_expansions(t, u);
    return pipeline_element(a, b);
}

PLMap multipoint_transporter(std::span<const Rational> ts, std::span<const Rational> us)
{
    if (ts.size() != us.size() || ts.empty())
        throw DomainError("multipoint_transporter needs two nonempty lists of equal length");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        require_interior(ts[i]);
        require_interior(us[i]);
        if (i > 0 && (ts[i] <= ts[i - 1] || us[i] <= us[i - 1]))
            throw DomainError("multipoint_transporter needs strictly increasing points");
    }
    // Dyadic with the smallest denominator strictly between a and b.
    auto separator = [](const Rational& a, const Rational& b) {
        for (int r = 0;; ++r) {
            const Rational scale = pow2(r);
            const Rational c = Rational(floor(Rational(a * scale)) + 1) / scale;
            if (c < b)
                return c;
        }
    };
    std::vector<Rational> sa{0};
    std::vector<Rational> sb{0};
    for (std::size_t i = 1; i < ts.size(); ++i) {
        sa.push_back(separator(ts[i - 1], ts[i]));
        sb.push_back(separator(us[i - 1], us[i]));
    }
    sa.emplace_back(1);
    sb.emplace_back(1);

    std::vector<Breakpoint> pts;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const PLMap phi = rescale_to_unit(sa[i], sa[i + 1]);
        const PLMap psi = rescale_to_unit(sb[i], sb[i + 1]);
        const PLMap g = pipeline_element(phi(ts[i]), psi(us[i]));
        const PLMap block = compose(compose(phi, g), invert(psi));
        const auto bp = block.breakpoints();
        for (std::size_t k = 0; k + 1 < bp.size(); ++k)
            pts.push_back(bp[k]);
    }
    pts.push_back({1, 1});
    PLMap out(std::move(pts));
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (out(ts[i]) != us[i])
            throw std::logic_error("multipoint transporter misses a point");
    return out;
}

PLMap multipoint_transporter(std::span<const TailWord> ts, std::span<const TailWord> us)
{
    std::vector<Rational> a;
    std::vector<Rational> b;
    for (const auto& t : ts)
        a.push_back(tail_to_rational(t));
    for (const auto& u : us)
        b.push_back(tail_to_rational(u));
    return multipoint_transporter(std::span<const Rational>(a), std::span<const Rational>(b));
}

}  // namespace fstrand
