#include "carpet/digits.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace carpet {

Rat digits_value(int base, const std::vector<int>& preperiod,
                 const std::vector<int>& period)
{
    if (base < 2) throw std::invalid_argument("digits_value: base < 2");
    Rat v = 0;
    Rat scale = 1;
    for (int d : preperiod) {
        if (d < 0 || d >= base) throw std::invalid_argument("digit out of range");
        scale /= base;
        v += scale * d;
    }
    if (!period.empty()) {
        // Sum of the periodic block, scaled by 1/(n^p - 1) past the preperiod.
        Rat block = 0;
        Rat s = 1;
        for (int d : period) {
            if (d < 0 || d >= base)
                throw std::invalid_argument("digit out of range");
            s /= base;
            block += s * d;
        }
        Rat denom = pow_int(base, static_cast<int>(period.size())) - 1;
        v += scale * block * pow_int(base, static_cast<int>(period.size())) / denom;
    }
    return v;
}

DigitNumber DigitNumber::from_rational(const Rat& value, int base)
{
    if (base < 2) throw std::invalid_argument("DigitNumber: base < 2");
    if (value < 0 || value > 1)
        throw std::invalid_argument("DigitNumber: value outside [0,1]");
    DigitNumber d;
    d.base_ = base;
    if (value == 1) {
        d.unit_ = true;
        return d;
    }
    // Long division p/q in base n; the remainder sequence is eventually
    // periodic and the first repeated remainder marks the period start.
    mpz_class p = value.get_num(), q = value.get_den();
    std::map<mpz_class, std::size_t> seen;
    std::vector<int> digits;
    mpz_class r = p;
    while (true) {
        auto it = seen.find(r);
        if (it != seen.end()) {
            d.pre_.assign(digits.begin(), digits.begin() + it->second);
            d.per_.assign(digits.begin() + it->second, digits.end());
            break;
        }
        seen.emplace(r, digits.size());
        r *= base;
        mpz_class dig = r / q;
        r -= dig * q;
        digits.push_back(static_cast<int>(dig.get_si()));
    }
    return d;
}

DigitNumber DigitNumber::from_rational(long p, long q, int base)
{
    if (q <= 0 || p < 0 || p > q)
        throw std::invalid_argument("DigitNumber: need 0 <= p <= q, q > 0");
    return from_rational(rat(p, q), base);
}

DigitNumber DigitNumber::from_digits(int base, std::vector<int> preperiod,
                                     std::vector<int> period)
{
    return from_rational(digits_value(base, preperiod, period), base);
}

DigitNumber DigitNumber::zero(int base)
{
    return from_rational(Rat(0), base);
}

DigitNumber DigitNumber::one(int base)
{
    return from_rational(Rat(1), base);
}

Rat DigitNumber::to_rational() const
{
    if (unit_) return 1;
    return digits_value(base_, pre_, per_);
}

bool DigitNumber::is_zero() const
{
    return !unit_ && pre_.empty() && per_ == std::vector<int>{0};
}

int DigitNumber::digit(std::size_t i) const
{
    if (unit_ || i == 0) throw std::domain_error("DigitNumber::digit");
    if (i <= pre_.size()) return pre_[i - 1];
    return per_[(i - 1 - pre_.size()) % per_.size()];
}

std::pair<std::vector<int>, std::vector<int>> DigitNumber::nonterminating_view()
    const
{
    if (is_zero()) throw std::domain_error("zero has no non-terminating twin");
    std::vector<int> pre, per;
    if (unit_) {
        per = {base_ - 1};
        return {pre, per};
    }
    if (per_ != std::vector<int>{0}) {
        // Already non-terminating; the canonical digits are the view.
        return {pre_, per_};
    }
    // 0.d1..dm with dm >= 1  ->  0.d1..(dm-1)(n-1 n-1 ...)
    pre = pre_;
    pre.back() -= 1;
    per = {base_ - 1};
    return {pre, per};
}

DigitNumber DigitNumber::transform(DigitTransform kind, int k,
                                   bool use_nonterminating_view) const
{
    const Rat x = to_rational();
    Rat result;
    switch (kind) {
        case DigitTransform::DecrementFirst: {
            int first;
            if (use_nonterminating_view) {
                auto [pre, per] = nonterminating_view();
                first = pre.empty() ? per[0] : pre[0];
            } else {
                if (unit_) throw std::domain_error("transform on unit");
                first = digit(1);
            }
            if (first < 1)
                throw std::domain_error("decrement_first: first digit is 0");
            result = x - rat(1, base_);
            break;
        }
        case DigitTransform::IncrementFirst: {
            int first;
            if (use_nonterminating_view) {
                auto [pre, per] = nonterminating_view();
                first = pre.empty() ? per[0] : pre[0];
            } else {
                if (unit_) throw std::domain_error("transform on unit");
                first = digit(1);
            }
            if (first > base_ - 2)
                throw std::domain_error("increment_first: first digit is n-1");
            result = x + rat(1, base_);
            break;
        }
        case DigitTransform::ComplementAll:
            // Digit-wise a -> (n-1)-a sums to 1 - x for every representation.
            result = 1 - x;
            break;
        case DigitTransform::ComplementFrom: {
            if (k < 1) throw std::invalid_argument("complement_from: k >= 1");
            if (unit_) throw std::domain_error("transform on unit");
            Rat prefix = 0;
            Rat scale = 1;
            for (int i = 1; i < k; ++i) {
                scale /= base_;
                prefix += scale * digit(i);
            }
            Rat tail = x - prefix;
            result = prefix + (pow_int(base_, -(k - 1)) - tail);
            break;
        }
    }
    if (result < 0 || result > 1)
        throw std::domain_error("transform inapplicable to this class");
    return from_rational(result, base_);
}

std::pair<DigitNumber, int> DigitNumber::shift_left_with_digit() const
{
    if (unit_) throw std::domain_error("shift on unit");
    int d = digit(1);
    Rat v = to_rational() * base_ - d;
    return {from_rational(v, base_), d};
}

DigitNumber DigitNumber::shift_left(int k) const
{
    DigitNumber r = *this;
    for (int i = 0; i < k; ++i) r = r.shift_left_with_digit().first;
    return r;
}

DigitNumber DigitNumber::shift_right(int k) const
{
    if (unit_) throw std::domain_error("shift on unit");
    return from_rational(to_rational() / pow_int(base_, k), base_);
}

std::string DigitNumber::str() const
{
    std::ostringstream os;
    if (unit_) {
        os << "1_" << base_;
        return os.str();
    }
    os << "0.";
    for (int d : pre_) os << d;
    os << "(";
    for (int d : per_) os << d;
    os << ")_" << base_;
    return os.str();
}

DigitNumber DigitNumber::parse(const std::string& text)
{
    auto us = text.rfind('_');
    if (us == std::string::npos)
        throw std::invalid_argument("DigitNumber::parse: missing base suffix");
    int base = std::stoi(text.substr(us + 1));
    std::string body = text.substr(0, us);
    if (body == "1") return one(base);
    if (body.rfind("0.", 0) != 0)
        throw std::invalid_argument("DigitNumber::parse: expected 0.");
    body = body.substr(2);
    std::vector<int> pre, per;
    bool in_per = false;
    for (char c : body) {
        if (c == '(') { in_per = true; continue; }
        if (c == ')') { in_per = false; continue; }
        if (c < '0' || c > '9')
            throw std::invalid_argument("DigitNumber::parse: bad digit");
        (in_per ? per : pre).push_back(c - '0');
    }
    if (per.empty()) per = {0};
    return from_digits(base, pre, per);
}

}  // namespace carpet
