#ifndef CARPET_DIGITS_HPP
#define CARPET_DIGITS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carpet/rational.hpp"

namespace carpet {

/// Value of an arbitrary (not necessarily canonical) eventually periodic
/// base-n digit string 0.d1 d2 ... (p1 p2 ...).
Rat digits_value(int base, const std::vector<int>& preperiod,
                 const std::vector<int>& period);

enum class DigitTransform {
    DecrementFirst,   // a1 -> a1 - 1
    IncrementFirst,   // a1 -> a1 + 1
    ComplementAll,    // ai -> (n-1) - ai for every i
    ComplementFrom,   // ai -> (n-1) - ai for i >= k
};

/// Exact eventually periodic base-n expansion of a number in [0, 1].
///
/// Canonical storage is the terminating form: the stored digits are the
/// output of long division, so the period is primitive, the preperiod is
/// minimal and an all-(n-1) tail never appears. The value 1 is kept as an
/// explicit unit flag rather than as digits. Equality of values is
/// therefore structural equality of representations.
class DigitNumber {
public:
    DigitNumber() = default;

    static DigitNumber from_rational(const Rat& value, int base);
    static DigitNumber from_rational(long p, long q, int base);
    /// Canonicalizes arbitrary digit lists by value.
    static DigitNumber from_digits(int base, std::vector<int> preperiod,
                                   std::vector<int> period);
    static DigitNumber zero(int base);
    static DigitNumber one(int base);

    Rat to_rational() const;
    int base() const { return base_; }
    bool is_unit() const { return unit_; }
    bool is_zero() const;
    const std::vector<int>& preperiod() const { return pre_; }
    const std::vector<int>& period() const { return per_; }

    /// Digit a_i of the canonical expansion, i >= 1. Undefined for the unit.
    int digit(std::size_t i) const;

    /// The all-(n-1)-tail twin of a terminating expansion
    /// (e.g. 0.10(0) base 2 -> 0.0(1)). Throws for zero, which has no twin.
    std::pair<std::vector<int>, std::vector<int>> nonterminating_view() const;

    /// Digit transform applied to the canonical representation (or to the
    /// non-terminating view). Throws std::domain_error when the targeted
    /// digit does not admit the transform.
    DigitNumber transform(DigitTransform kind, int k = 0,
                          bool use_nonterminating_view = false) const;

    /// Left shift by one digit: value n*x mod 1; also reports the digit
    /// dropped. Right shift prepends a zero: value x/n.
    std::pair<DigitNumber, int> shift_left_with_digit() const;
    DigitNumber shift_left(int k = 1) const;
    DigitNumber shift_right(int k = 1) const;

    /// Textual form "0.d1d2(p1p2)_n"; the unit prints as "1_n".
    std::string str() const;
    static DigitNumber parse(const std::string& text);

    bool operator==(const DigitNumber& o) const
    {
        return base_ == o.base_ && unit_ == o.unit_ && pre_ == o.pre_ &&
               per_ == o.per_;
    }
    bool operator!=(const DigitNumber& o) const { return !(*this == o); }

private:
    int base_ = 2;
    bool unit_ = false;
    std::vector<int> pre_;
    std::vector<int> per_;  // nonempty unless unit; [0] for terminating
};

}  // namespace carpet

#endif
