#include "fstrand/binary.hpp"

#include "fstrand/error.hpp"

#include <algorithm>
#include <map>

namespace fstrand {

BinaryWord::BinaryWord(std::string_view bits) : bits_(bits)
{
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] != '0' && bits_[i] != '1')
            throw ParseError("binary digit expected", i);
}

BinaryWord BinaryWord::substr(std::size_t pos, std::size_t len) const
{
    BinaryWord r;
    r.bits_ = bits_.substr(pos, len);
    return r;
}

BinaryWord BinaryWord::rotated(std::size_t k) const
{
    if (bits_.empty())
        return *this;
    k %= bits_.size();
    BinaryWord r;
    r.bits_ = bits_.substr(k) + bits_.substr(0, k);
    return r;
}

BinaryWord BinaryWord::reversed() const
{
    BinaryWord r = *this;
    std::reverse(r.bits_.begin(), r.bits_.end());
    return r;
}

std::size_t BinaryWord::count(int bit) const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), bit ? '1' : '0'));
}

Integer BinaryWord::to_integer() const
{
    if (bits_.empty())
        return 0;
    return Integer(bits_, 2);
}

BinaryWord operator+(const BinaryWord& a, const BinaryWord& b)
{
    BinaryWord r;
    r.bits_ = a.bits_ + b.bits_;
    return r;
}

BinaryWord primitive_root(const BinaryWord& w)
{
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i)
            ok = w[i] == w[i - d];
        if (ok)
            return w.substr(0, d);
    }
    return w;
}

BinaryWord min_rotation(const BinaryWord& w)
{
    BinaryWord best = w;
    for (std::size_t k = 1; k < w.size(); ++k)
        best = std::min(best, w.rotated(k));
    return best;
}

TailWord::TailWord(BinaryWord preperiod, BinaryWord period)
    : pre_(std::move(preperiod)), period_(primitive_root(period))
{
    if (period_.empty())
        throw DomainError("tail word needs a nonempty period");
    while (!pre_.empty() && pre_.back() == period_.back()) {
        period_ = period_.rotated(period_.size() - 1);
        pre_.pop_back();
    }
}

TailWord TailWord::parse(std::string_view text)
{
    std::size_t i = 0;
    if (i >= text.size() || text[i] != '.')
        throw ParseError("tail word must start with '.'", i);
    ++i;
    std::string pre;
    while (i < text.size() && (text[i] == '0' || text[i] == '1'))
        pre.push_back(text[i++]);
    if (i == text.size())
        return TailWord(BinaryWord(pre), BinaryWord("0"));
    if (text[i] != '(')
        throw ParseError("expected '(' or binary digit", i);
    ++i;
    std::string per;
    while (i < text.size() && (text[i] == '0' || text[i] == '1'))
        per.push_back(text[i++]);
    if (i >= text.size() || text[i] != ')')
        throw ParseError("expected ')'", i);
    if (per.empty())
        throw ParseError("empty period", i);
    if (i + 1 != text.size())
        throw ParseError("trailing characters", i + 1);
    return TailWord(BinaryWord(pre), BinaryWord(per));
}

int TailWord::digit(std::size_t i) const
{
    if (i < pre_.size())
        return pre_[i];
    return period_[(i - pre_.size()) % period_.size()];
}

TailWord TailWord::drop(std::size_t k) const
{
    if (k <= pre_.size())
        return TailWord(pre_.substr(k), period_);
    return TailWord(BinaryWord(), period_.rotated((k - pre_.size()) % period_.size()));
}

TailWord TailWord::prepend(const BinaryWord& w) const
{
    return TailWord(w + pre_, period_);
}

BinaryWord TailWord::prefix(std::size_t k) const
{
    BinaryWord r;
    for (std::size_t i = 0; i < k; ++i)
        r.push_back(digit(i));
    return r;
}

bool TailWord::is_dyadic() const
{
    return period_.size() == 1;
}

std::string TailWord::str() const
{
    return "." + pre_.str() + "(" + period_.str() + ")";
}

Rational tail_to_rational(const TailWord& w)
{
    const auto& pre = w.preperiod();
    const auto& per = w.period();
    Rational head(pre.to_integer());
    head /= pow2(static_cast<int>(pre.size()));
    Rational cycle(per.to_integer(), Integer(pow2(static_cast<int>(per.size())).get_num() - 1));
    cycle.canonicalize();
    return head + cycle / pow2(static_cast<int>(pre.size()));
}

std::vector<TailWord> rational_to_tails(const Rational& q)
{
    if (q < 0 || q > 1)
        throw DomainError("rational_to_tails: " + to_string(q) + " is outside [0,1]");
    if (q == 0)
        return {TailWord(BinaryWord(), BinaryWord("0"))};
    if (q == 1)
        return {TailWord(BinaryWord(), BinaryWord("1"))};
    if (is_dyadic(q)) {
        // q = a / 2^k with a odd: finite expansion of length k ending in 1.
        const int k = static_cast<int>(mpz_sizeinbase(q.get_den_mpz_t(), 2) - 1);
        std::string bits = q.get_num().get_str(2);
        bits.insert(0, static_cast<std::size_t>(k) - bits.size(), '0');
        BinaryWord upper(bits);
        BinaryWord lower = upper;
        lower.pop_back();
        lower.push_back(0);
        return {TailWord(lower, BinaryWord("1")), TailWord(upper, BinaryWord("0"))};
    }
    // Long division; the remainder sequence is eventually periodic.
    std::map<Rational, std::size_t> seen;
    std::string digits;
    Rational r = q;
    while (seen.find(r) == seen.end()) {
        seen.emplace(r, digits.size());
        r *= 2;
        if (r >= 1) {
            digits.push_back('1');
            r -= 1;
        } else {
            digits.push_back('0');
        }
    }
    const std::size_t start = seen.at(r);
    return {TailWord(BinaryWord(digits.substr(0, start)), BinaryWord(digits.substr(start)))};
}

bool same_tail(const TailWord& t, const TailWord& u)
{
    const auto& a = t.period().str();
    const auto& b = u.period().str();
    return a.size() == b.size() && (a + a).find(b) != std::string::npos;
}

TailWord apply_replacement(const BinaryWord& mu, const BinaryWord& nu, const TailWord& w)
{
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (w.digit(i) != mu[i])
            throw DomainError("replacement rule ." + mu.str() + "a does not match " + w.str());
    return w.drop(mu.size()).prepend(nu);
}

}  // namespace fstrand
