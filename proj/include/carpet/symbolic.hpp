#ifndef CARPET_SYMBOLIC_HPP
#define CARPET_SYMBOLIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "carpet/rational.hpp"

namespace carpet {

/// Two-sided eventually periodic sequence (... b2 b1 ; a1 a2 ...) over
/// {0, ..., n-1}. Index 1, 2, ... reads a1 a2 ... to the right of the
/// split; index 0, -1, ... reads b1 b2 ... to the left. Both tails are
/// stored as (preperiod, primitive period) and kept canonical, so equality
/// is structural.
class BiSequence {
public:
    BiSequence() = default;
    BiSequence(int base, std::vector<int> left_pre, std::vector<int> left_per,
               std::vector<int> right_pre, std::vector<int> right_per);

    static BiSequence constant(int base, int symbol);
    /// The bi-infinite repetition of `word` placed so that digits 1..p
    /// equal the word; fixed by shift^p.
    static BiSequence periodic(int base, const std::vector<int>& word);

    int base() const { return base_; }
    /// Digit at integer index i (i >= 1 right of the split, i <= 0 left).
    int digit(long i) const;

    const std::vector<int>& left_pre() const { return lpre_; }
    const std::vector<int>& left_per() const { return lper_; }
    const std::vector<int>& right_pre() const { return rpre_; }
    const std::vector<int>& right_per() const { return rper_; }

    BiSequence shifted(bool inverse = false) const;

    bool operator==(const BiSequence& o) const
    {
        return base_ == o.base_ && lpre_ == o.lpre_ && lper_ == o.lper_ &&
               rpre_ == o.rpre_ && rper_ == o.rper_;
    }
    bool operator!=(const BiSequence& o) const { return !(*this == o); }

    std::string str() const;

private:
    void canonicalize();

    int base_ = 2;
    std::vector<int> lpre_, lper_{0}, rpre_, rper_{0};
};

/// dist(s, t) = 2^{-k} with k the largest radius m >= 0 such that the two
/// sequences agree at every index i with -m < i <= m; 0 iff equal.
Rat shift_dist(const BiSequence& s, const BiSequence& t);

struct ProbabilityVector {
    std::vector<Rat> p;

    explicit ProbabilityVector(std::vector<Rat> entries);
    std::size_t size() const { return p.size(); }
};

/// Bernoulli measure of the cylinder fixed by `word` (product of p_digit).
Rat cylinder_measure(const ProbabilityVector& P, const std::vector<int>& word);

/// All n^p sequences fixed by shift^p, in lexicographic word order.
/// Throws std::length_error when n^p exceeds `cap`.
std::vector<BiSequence> enumerate_periodic(int base, int p,
                                           std::uint64_t cap = (1u << 20));

}  // namespace carpet

#endif
