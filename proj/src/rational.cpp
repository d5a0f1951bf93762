#include "fstrand/rational.hpp"

#include "fstrand/error.hpp"

#include <cctype>

namespace fstrand {

Rational pow2(int k)
{
    Integer p = 1;
    if (k >= 0) {
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
        return Rational(p);
    }
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    return Rational(Integer(1), p);
}

bool is_dyadic(const Rational& q)
{
    const Integer& d = q.get_den();
    return mpz_popcount(d.get_mpz_t()) == 1;
}

std::optional<int> log2_exact(const Rational& q)
{
    if (sgn(q) <= 0)
        return std::nullopt;
    const Integer& n = q.get_num();
    const Integer& d = q.get_den();
    if (n == 1 && mpz_popcount(d.get_mpz_t()) == 1)
        return -static_cast<int>(mpz_sizeinbase(d.get_mpz_t(), 2) - 1);
    if (d == 1 && mpz_popcount(n.get_mpz_t()) == 1)
        return static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2) - 1);
    return std::nullopt;
}

int floor_log2(const Rational& q)
{
    if (sgn(q) <= 0)
        throw DomainError("floor_log2 of a non-positive number");
    int k = static_cast<int>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
            static_cast<int>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    if (pow2(k) > q)
        --k;
    return k;
}

Integer floor(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

namespace {

Integer parse_integer(std::string_view s, std::size_t base_pos)
{
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size())
        throw ParseError("expected digits", base_pos + i);
    Integer v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError(std::string("unexpected character '") + s[i] + "'", base_pos + i);
        v = v * 10 + (s[i] - '0');
    }
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead])))
        ++lead;
    std::size_t end = text.size();
    while (end > lead && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    std::string_view body = text.substr(lead, end - lead);
    auto slash = body.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(body, lead));
    Integer num = parse_integer(body.substr(0, slash), lead);
    Integer den = parse_integer(body.substr(slash + 1), lead + slash + 1);
    if (den == 0)
        throw ParseError("zero denominator", lead + slash + 1);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

}  // namespace fstrand
