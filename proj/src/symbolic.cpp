#include "carpet/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace carpet {

namespace {

void check_digits(int base, const std::vector<int>& v)
{
    for (int d : v)
        if (d < 0 || d >= base)
            throw std::invalid_argument("BiSequence: digit out of range");
}

// Primitive period, then minimal preperiod: absorb a trailing preperiod
// digit whenever it matches the last period digit (rotating the period).
void canonicalize_side(std::vector<int>& pre, std::vector<int>& per)
{
    const std::size_t L = per.size();
    for (std::size_t d = 1; d < L; ++d) {
        if (L % d != 0) continue;
        bool rep = true;
        for (std::size_t i = d; i < L && rep; ++i)
            if (per[i] != per[i % d]) rep = false;
        if (rep) {
            per.resize(d);
            break;
        }
    }
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        std::rotate(per.begin(), per.end() - 1, per.end());
    }
}

}  // namespace

BiSequence::BiSequence(int base, std::vector<int> left_pre,
                       std::vector<int> left_per, std::vector<int> right_pre,
                       std::vector<int> right_per)
    : base_(base),
      lpre_(std::move(left_pre)),
      lper_(std::move(left_per)),
      rpre_(std::move(right_pre)),
      rper_(std::move(right_per))
{
    if (base_ < 2) throw std::invalid_argument("BiSequence: base < 2");
    if (lper_.empty() || rper_.empty())
        throw std::invalid_argument("BiSequence: empty period");
    check_digits(base_, lpre_);
    check_digits(base_, lper_);
    check_digits(base_, rpre_);
    check_digits(base_, rper_);
    canonicalize();
}

void BiSequence::canonicalize()
{
    canonicalize_side(lpre_, lper_);
    canonicalize_side(rpre_, rper_);
}

BiSequence BiSequence::constant(int base, int symbol)
{
    return BiSequence(base, {}, {symbol}, {}, {symbol});
}

BiSequence BiSequence::periodic(int base, const std::vector<int>& word)
{
    if (word.empty()) throw std::invalid_argument("periodic: empty word");
    std::vector<int> rev(word.rbegin(), word.rend());
    return BiSequence(base, {}, rev, {}, word);
}

int BiSequence::digit(long i) const
{
    if (i >= 1) {
        std::size_t j = static_cast<std::size_t>(i - 1);
        if (j < rpre_.size()) return rpre_[j];
        return rper_[(j - rpre_.size()) % rper_.size()];
    }
    std::size_t j = static_cast<std::size_t>(-i);  // b_{1-i}, zero-based
    if (j < lpre_.size()) return lpre_[j];
    return lper_[(j - lpre_.size()) % lper_.size()];
}

BiSequence BiSequence::shifted(bool inverse) const
{
    std::vector<int> lpre = lpre_, lper = lper_, rpre = rpre_, rper = rper_;
    if (!inverse) {
        // a1 crosses the split and becomes the new b1.
        int a1 = digit(1);
        if (!rpre.empty())
            rpre.erase(rpre.begin());
        else
            std::rotate(rper.begin(), rper.begin() + 1, rper.end());
        lpre.insert(lpre.begin(), a1);
    } else {
        int b1 = digit(0);
        if (!lpre.empty())
            lpre.erase(lpre.begin());
        else
            std::rotate(lper.begin(), lper.begin() + 1, lper.end());
        rpre.insert(rpre.begin(), b1);
    }
    return BiSequence(base_, std::move(lpre), std::move(lper), std::move(rpre),
                      std::move(rper));
}

std::string BiSequence::str() const
{
    std::ostringstream os;
    os << "(";
    for (int d : lper_) os << d;
    os << ")";
    for (auto it = lpre_.rbegin(); it != lpre_.rend(); ++it) os << *it;
    os << ";";
    for (int d : rpre_) os << d;
    os << "(";
    for (int d : rper_) os << d;
    os << ")_" << base_;
    return os.str();
}

Rat shift_dist(const BiSequence& s, const BiSequence& t)
{
    if (s.base() != t.base())
        throw std::invalid_argument("shift_dist: base mismatch");
    if (s == t) return 0;
    // Both tails are eventually periodic, so a disagreement exists within
    // preperiod + lcm of the two periods on at least one side.
    auto bound = [](std::size_t p1, std::size_t l1, std::size_t p2,
                    std::size_t l2) {
        return std::max(p1, p2) + std::lcm(l1, l2) + 1;
    };
    long B = static_cast<long>(
        std::max(bound(s.right_pre().size(), s.right_per().size(),
                       t.right_pre().size(), t.right_per().size()),
                 bound(s.left_pre().size(), s.left_per().size(),
                       t.left_pre().size(), t.left_per().size())));
    long right_first = B + 1;  // first disagreeing index >= 1
    for (long i = 1; i <= B; ++i)
        if (s.digit(i) != t.digit(i)) {
            right_first = i;
            break;
        }
    long left_first = -(B + 1);  // first disagreeing index <= 0
    for (long i = 0; i >= -B; --i)
        if (s.digit(i) != t.digit(i)) {
            left_first = i;
            break;
        }
    long k = std::min(right_first - 1, -left_first);
    return pow_int(2, -static_cast<int>(k));
}

ProbabilityVector::ProbabilityVector(std::vector<Rat> entries) : p(std::move(entries))
{
    if (p.empty()) throw std::invalid_argument("ProbabilityVector: empty");
    Rat sum = 0;
    for (const Rat& e : p) {
        if (e < 0) throw std::invalid_argument("ProbabilityVector: negative entry");
        sum += e;
    }
    if (sum != 1) throw std::invalid_argument("ProbabilityVector: sum != 1");
}

Rat cylinder_measure(const ProbabilityVector& P, const std::vector<int>& word)
{
    Rat m = 1;
    for (int d : word) {
        if (d < 0 || static_cast<std::size_t>(d) >= P.size())
            throw std::invalid_argument("cylinder_measure: digit out of range");
        m *= P.p[d];
    }
    return m;
}

std::vector<BiSequence> enumerate_periodic(int base, int p, std::uint64_t cap)
{
    if (p < 1) throw std::invalid_argument("enumerate_periodic: p >= 1");
    std::uint64_t total = 1;
    for (int i = 0; i < p; ++i) {
        total *= static_cast<std::uint64_t>(base);
        if (total > cap)
            throw std::length_error("enumerate_periodic: n^p exceeds cap");
    }
    std::vector<BiSequence> out;
    out.reserve(total);
    std::vector<int> word(p, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (int i = p - 1; i >= 0; --i) {
            word[i] = static_cast<int>(v % base);
            v /= base;
        }
        out.push_back(BiSequence::periodic(base, word));
    }
    return out;
}

}  // namespace carpet
