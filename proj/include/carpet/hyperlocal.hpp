#ifndef CARPET_HYPERLOCAL_HPP
#define CARPET_HYPERLOCAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "carpet/quad.hpp"
#include "carpet/rational.hpp"

namespace carpet {

inline int ssign(const Rat& r) { return sign(r); }
inline int ssign(const QuadVal& q) { return q.sgn(); }
inline Rat sabs(const Rat& r) { return abs_rat(r); }
inline QuadVal sabs(const QuadVal& q) { return q.abs(); }

/// Region label near a hyperbolic fixed point of (x,y) -> (x/l, l*y):
/// the box D = (-l*e, l*e)^2 splits into four open sectors by the
/// diagonals; E is the outer band of D where max(|x|,|y|) >= e; the
/// starred sets are the horizontal sectors minus E and the axes. Axes and
/// diagonals inside D are labeled Axis.
enum class Region {
    OutsideD,
    D1Star,  // right sector, inner core
    D1E,     // right sector, outer band
    D2,      // top sector
    D3Star,  // left sector, inner core
    D3E,     // left sector, outer band
    D4,      // bottom sector
    Axis,
};

std::string region_name(Region r);

/// The map (x,y) -> (x/lambda, lambda*y) together with the region
/// thresholds for a given epsilon.
template <class S>
struct HypModel {
    S lambda, eps, lam_eps;

    HypModel(const S& l, const S& e) : lambda(l), eps(e), lam_eps(l * e)
    {
        if (!(ssign(e) > 0) || !(ssign(l - e / e) > 0))  // e > 0, l > 1
            throw std::invalid_argument("HypModel: need lambda > 1, eps > 0");
    }

    void apply(S& x, S& y, bool inverse = false) const
    {
        if (!inverse) {
            x = x / lambda;
            y = y * lambda;
        } else {
            x = x * lambda;
            y = y / lambda;
        }
    }

    bool in_D(const S& x, const S& y) const
    {
        return ssign(sabs(x) - lam_eps) < 0 && ssign(sabs(y) - lam_eps) < 0;
    }
    /// Outer band of D (points with a coordinate of magnitude >= eps).
    bool in_E(const S& x, const S& y) const
    {
        return in_D(x, y) && (ssign(sabs(x) - eps) >= 0 ||
                              ssign(sabs(y) - eps) >= 0);
    }
    /// Closed horizontal sectors (these include the x-axis, unlike the
    /// Region labels, which send axes to Axis).
    bool in_sector_right(const S& x, const S& y) const
    {
        return in_D(x, y) && ssign(x) > 0 && ssign(sabs(x) - sabs(y)) > 0;
    }
    bool in_sector_left(const S& x, const S& y) const
    {
        return in_D(x, y) && ssign(x) < 0 && ssign(sabs(x) - sabs(y)) > 0;
    }

    Region classify(const S& x, const S& y) const
    {
        if (!in_D(x, y)) return Region::OutsideD;
        int sx = ssign(x), sy = ssign(y);
        if (sx == 0 || sy == 0) return Region::Axis;
        int cmp = ssign(sabs(x) - sabs(y));
        if (cmp == 0) return Region::Axis;
        bool band = in_E(x, y);
        if (cmp > 0) {
            if (sx > 0) return band ? Region::D1E : Region::D1Star;
            return band ? Region::D3E : Region::D3Star;
        }
        return sy > 0 ? Region::D2 : Region::D4;
    }
};

template <class S>
struct Excursion {
    long N = 0;        // last index outside D before entry
    long K = 0;        // length of the in-D run (indices N+1 .. N+K)
    long star_visits = 0;  // visits to the inner horizontal core
    S entry_x, entry_y;
    long m = 0;        // crossover: largest k with |p| > lambda^{2k} |q|
    bool witness_ok = false;  // the crossover-pattern checks below
    std::string witness_note;

    Rat proportion() const { return rat(star_visits, K); }
};

/// Follows the orbit of (x,y) and reports the (single) excursion through
/// the right sector (left when `mirror`): the consecutive in-D run entered
/// from outside through that sector with y != 0, together with the count
/// of inner-core visits. The crossover witness checks that visits
/// 2..m+1 are in the inner core, visits m+2..2m+1 are in the vertical
/// sectors (diagonal hits allowed and noted), and K >= 2m+1 when m >= 1.
template <class S>
std::optional<Excursion<S>> excursion_stats(const HypModel<S>& L, S x, S y,
                                            long horizon, bool mirror = false)
{
    bool prev_in = L.in_D(x, y);
    for (long j = 0; j < horizon; ++j) {
        S nx = x, ny = y;
        L.apply(nx, ny);
        bool now_in = L.in_D(nx, ny);
        bool enters = !prev_in && now_in &&
                      (mirror ? L.in_sector_left(nx, ny)
                              : L.in_sector_right(nx, ny)) &&
                      ssign(ny) != 0;
        if (!enters) {
            x = nx;
            y = ny;
            prev_in = now_in;
            continue;
        }
        Excursion<S> e;
        e.N = j;
        e.entry_x = nx;
        e.entry_y = ny;
        // Crossover index from the entry point.
        {
            S p = sabs(nx), q = sabs(ny), pow = L.lambda * L.lambda;
            S acc = q * pow;
            while (ssign(p - acc) > 0) {
                ++e.m;
                acc = acc * pow;
            }
        }
        const Region core = mirror ? Region::D3Star : Region::D1Star;
        e.witness_ok = true;
        long t = 0;
        while (true) {
            ++t;
            Region r = L.classify(nx, ny);
            if (r == core) ++e.star_visits;
            bool core_expected = (t >= 2 && t <= e.m + 1);
            bool vert_expected = (t >= e.m + 2 && t <= 2 * e.m + 1);
            if (core_expected && r != core) {
                e.witness_ok = false;
                e.witness_note = "core step " + std::to_string(t) +
                                 " landed in " + region_name(r);
            }
            if (vert_expected && r != Region::D2 && r != Region::D4) {
                if (r == Region::Axis) {
                    e.witness_note = "diagonal hit at step " + std::to_string(t);
                } else {
                    e.witness_ok = false;
                    e.witness_note = "vertical step " + std::to_string(t) +
                                     " landed in " + region_name(r);
                }
            }
            L.apply(nx, ny);
            if (!L.in_D(nx, ny)) break;
            if (j + t >= horizon) return std::nullopt;  // exit not observed
        }
        e.K = t;
        if (e.m >= 1 && e.K < 2 * e.m + 1) {
            e.witness_ok = false;
            e.witness_note = "run shorter than 2m+1";
        }
        if (e.m == 0 && e.star_visits != 0) {
            e.witness_ok = false;
            e.witness_note = "m = 0 excursion with core visits";
        }
        return e;
    }
    return std::nullopt;
}

struct HalfBoundReport {
    long samples = 0;
    long qualifying = 0;
    long witness_failures = 0;
    Rat max_proportion = 0;
    std::vector<std::string> violations;  // must stay empty

    bool ok() const { return violations.empty() && witness_failures == 0; }
};

/// Runs excursion_stats on every sample and asserts the <= 1/2 proportion
/// bound plus the crossover witness on each qualifying excursion.
template <class S>
HalfBoundReport verify_half_bound(const HypModel<S>& L,
                                  const std::vector<std::pair<S, S>>& samples,
                                  long horizon, bool mirror = false)
{
    HalfBoundReport rep;
    rep.samples = static_cast<long>(samples.size());
    for (const auto& [x, y] : samples) {
        auto e = excursion_stats(L, x, y, horizon, mirror);
        if (!e) continue;
        ++rep.qualifying;
        Rat prop = e->proportion();
        if (prop > rep.max_proportion) rep.max_proportion = prop;
        if (prop > rat(1, 2))
            rep.violations.push_back("proportion " + rat_str(prop) +
                                     " at entry (" + "..." + ")");
        if (!e->witness_ok) ++rep.witness_failures;
    }
    return rep;
}

/// Rational starting points whose orbits enter D through the right (or
/// left) sector: random admissible entry points pulled back outside D.
/// Deterministic in `seed`.
std::vector<std::pair<Rat, Rat>> qualifying_starts(const HypModel<Rat>& L,
                                                   long count,
                                                   unsigned long seed,
                                                   bool mirror = false);

/// Entry points straddling the band boundaries (|x| or |y| near eps and
/// lambda*eps) to exercise the half-open conventions.
std::vector<std::pair<Rat, Rat>> boundary_starts(const HypModel<Rat>& L,
                                                 int per_edge,
                                                 bool mirror = false);

}  // namespace carpet

#endif
