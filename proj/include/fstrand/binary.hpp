#pragma once

#include "fstrand/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fstrand {

// Finite word over {0,1}.  Stored as the characters '0'/'1' so it prints as is.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::string_view bits);  // throws ParseError on other characters

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    int operator[](std::size_t i) const { return bits_[i] - '0'; }
    int back() const { return bits_.back() - '0'; }

    void push_back(int bit) { bits_.push_back(bit ? '1' : '0'); }
    void pop_back() { bits_.pop_back(); }
    void push_front(int bit) { bits_.insert(bits_.begin(), bit ? '1' : '0'); }

    BinaryWord substr(std::size_t pos, std::size_t len = std::string::npos) const;
    BinaryWord rotated(std::size_t k) const;  // left rotation by k
    BinaryWord reversed() const;
    std::size_t count(int bit) const;

    // Value of the word as an unsigned binary integer.
    Integer to_integer() const;

    const std::string& str() const noexcept { return bits_; }

    friend BinaryWord operator+(const BinaryWord& a, const BinaryWord& b);
    auto operator<=>(const BinaryWord&) const = default;

private:
    std::string bits_;
};

// Eventually periodic expansion .pre(period)^inf, always in canonical form:
// primitive period, minimal preperiod.  .u0(1) and .u1(0) stay distinct.
class TailWord {
public:
    TailWord(BinaryWord preperiod, BinaryWord period);

    static TailWord parse(std::string_view text);  // ".10(01)"; ".101" means .101(0)

    const BinaryWord& preperiod() const noexcept { return pre_; }
    const BinaryWord& period() const noexcept { return period_; }

    int digit(std::size_t i) const;
    // The word with its first k digits removed.
    TailWord drop(std::size_t k) const;
    TailWord prepend(const BinaryWord& w) const;
    BinaryWord prefix(std::size_t k) const;

    // Ends in (0) or (1), i.e. denotes a dyadic rational.
    bool is_dyadic() const;

    std::string str() const;

    auto operator<=>(const TailWord&) const = default;

private:
    BinaryWord pre_;
    BinaryWord period_;
};

Rational tail_to_rational(const TailWord& w);

// One expansion, or two (lower side first) for dyadics strictly inside (0,1).
std::vector<TailWord> rational_to_tails(const Rational& q);

bool same_tail(const TailWord& t, const TailWord& u);

// Canonical representative of the rotation class of a period word.
BinaryWord min_rotation(const BinaryWord& w);

// Smallest root r of w with w = r^k.
BinaryWord primitive_root(const BinaryWord& w);

// Replacement rule .mu a -> .nu a.  Throws DomainError if w does not begin with mu.
TailWord apply_replacement(const BinaryWord& mu, const BinaryWord& nu, const TailWord& w);

}  // namespace fstrand
