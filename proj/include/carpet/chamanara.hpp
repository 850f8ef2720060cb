#ifndef CARPET_CHAMANARA_HPP
#define CARPET_CHAMANARA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carpet/digits.hpp"
#include "carpet/symbolic.hpp"

namespace carpet {

/// Canonical representative of an equivalence class on the surface C_n.
///
/// Interior classes are singletons in (0,1)^2. Side classes are the glued
/// pairs on I_k/I_k' and J_k/J_k'; the canonical member is the one with
/// x = 0 (I) or y = 0 (J). The singular class (the one containing all four
/// corners and the points (0, 1/n^k), (1/n^k, 0), ...) is a sentinel.
struct CnPoint {
    enum class Kind { Interior, SideI, SideJ, Singular };

    int base = 2;
    Kind kind = Kind::Singular;
    int k = 0;  // side depth, for SideI/SideJ
    DigitNumber x, y;

    Rat xr() const { return x.to_rational(); }
    Rat yr() const { return y.to_rational(); }

    bool operator==(const CnPoint& o) const
    {
        if (base != o.base || kind != o.kind) return false;
        if (kind == Kind::Singular) return true;
        return k == o.k && x == o.x && y == o.y;
    }
    bool operator!=(const CnPoint& o) const { return !(*this == o); }

    std::string str() const;
};

/// Canonical class of a point of the closed square.
CnPoint cn_canonicalize(int base, const Rat& x, const Rat& y);

/// All members of the class. The singular class yields the four corners
/// followed by the four boundary points at each depth k = 1..limit.
std::vector<std::pair<Rat, Rat>> cn_class_members(const CnPoint& z,
                                                  int limit = 8);

/// The n-baker map (or its inverse) on classes.
CnPoint baker(const CnPoint& z, bool inverse = false);

/// P_n(b; a) = class of (0.a1a2..., 0.b1b2...).
CnPoint factor_map(const BiSequence& s);

struct SemiconjWitness {
    bool ok;
    CnPoint lhs;  // factor_map(shift(s))
    CnPoint rhs;  // baker(factor_map(s))
};

SemiconjWitness check_semiconjugacy(const BiSequence& s);

/// Squared min-over-members Euclidean distance between two classes.
Rat cn_dist2(const CnPoint& a, const CnPoint& b);

struct PeriodicWitness {
    CnPoint point;
    int period;
};

/// A baker-periodic class within eps of `center` (min-member metric),
/// searched over symbolic periodic points of period <= max_period.
std::optional<PeriodicWitness> periodic_density_witness(const CnPoint& center,
                                                        const Rat& eps,
                                                        int max_period = 10);

}  // namespace carpet

#endif
