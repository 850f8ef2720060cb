#ifndef CARPET_INVLIM_HPP
#define CARPET_INVLIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "carpet/hyperlocal.hpp"
#include "carpet/quad.hpp"
#include "carpet/toral.hpp"

namespace carpet {

/// Tower of circle blow-ups over a hyperbolic torus automorphism (or its
/// pillowcase quotient). Stage j's blown circle is drawn with radius
/// R0 / 2^j, R0 = 1/8, so chart diameters shrink down the tower.
struct BlowupAtlas {
    ToralAuto base;
    bool quotient_mode = false;
    std::vector<TorusOrbit> blown;

    QuadVal lambda() const { return base.leading_eigenvalue(); }
    QuadVal beta() const { return QuadVal(Rat(1), base.discriminant()) / lambda(); }
    Rat circle_radius(int stage) const
    {
        return rat(1, 8) / pow_int(2, stage);
    }
};

BlowupAtlas make_atlas(const ToralAuto& A, bool quotient_mode);

/// Adds a blown orbit; rejects orbits meeting the existing blown set, or
/// the pillowcase branch points when in quotient mode.
void blow_up(BlowupAtlas& atlas, const TorusOrbit& orbit);

/// Cat map with the fixed point blown (upstairs), the atlas all the
/// falsifier arguments run on.
BlowupAtlas default_atlas();

/// Truncated inverse-limit point near the blown fixed point, in the
/// eigenbasis chart: x along the contracting direction, y along the
/// expanding one. A point at the origin carries instead a direction on
/// the blown circle; every deeper coordinate repeats this data, so the
/// compatibility conditions hold by construction.
struct LimPoint {
    bool on_circle = false;
    QuadVal x, y;
    QuadVec dir;

    static LimPoint off(const QuadVal& x, const QuadVal& y);
    static LimPoint circle(const QuadVec& dir);
    std::string str() const;
};

/// z(1) (i = 1) and z(2) (i = 2): the circle points in the positive and
/// negative contracting eigendirections.
LimPoint z_ray(const BlowupAtlas& atlas, int i);

/// Coordinate-wise action: chart points by diag(1/lambda, lambda),
/// directions by the same differential (projective, sign kept).
LimPoint h_apply(const BlowupAtlas& atlas, const LimPoint& z,
                 bool inverse = false);

struct Dinf {
    double value = 0;
    double tail_bound = 0;  // the discarded stages contribute < this
};

/// Truncated product metric sum_j d_j / (2^j (1 + d_j)) up to `depth`,
/// with tail bound 2^{-depth}. Stage-j distance: Euclidean between chart
/// positions, circle points placed at radius R0/2^j (arc metric when both
/// arguments are on the circle); stage 0 collapses the circle to the
/// origin.
Dinf dinf(const BlowupAtlas& atlas, const LimPoint& a, const LimPoint& b,
          int depth = 3);

struct BallProjReport {
    bool mirror = false;     // false: z(1) into the right sector
    long samples = 0;
    long inside = 0;         // samples with dinf < r_star
    long violators = 0;      // samples projecting outside the sector
    double r_star = 0;       // largest safe radius located by bisection
    bool ok = false;         // r_star > 0 and no violator inside it
};

/// Bisects for the largest radius r* such that every sampled point of the
/// r*-ball around z(1) projects into the closed right sector or the blown
/// point itself (left sector for z(2) when `mirror`).
BallProjReport ball_projection_check(const BlowupAtlas& atlas,
                                     const Rat& eps, long nsamples,
                                     unsigned long seed, bool mirror = false);

/// Model zip neighborhood: the closed unit disc with the radial slit from
/// the center to radius zeta at angle 0. h collapses the slit to the
/// center and fixes the boundary circle; h_delta shortens the slit to an
/// arc of length delta instead and is bijective.
struct ZipModel {
    Rat zeta = rat(1, 2);
};

/// Image radius of the point (r, angle pi*u), u in [-1, 1].
Rat zip_h(const ZipModel& m, const Rat& r, const Rat& u);
Rat zip_hdelta(const ZipModel& m, const Rat& delta, const Rat& r,
               const Rat& u);

struct ZipReport {
    Rat delta;
    Rat sup_dist;      // exact: the maps differ most at the slit tip
    Rat grid_max;      // max difference over the evaluation grid
    bool consistent;   // grid_max <= sup_dist, attained at the tip
};

ZipReport zip_maps(const ZipModel& m, const Rat& delta, int grid = 64);

struct TraceCategory {
    std::string certificate;
    long candidates = 0;
    std::string example_trace;
};

struct FalsifyReport {
    std::string property;  // which shadowing property is being falsified
    std::string epistemic_status;
    int resolution_bits = 0;
    long total_candidates = 0;
    long survivors = 0;
    std::vector<TraceCategory> traces;
};

/// Approximate-product-property falsifier: targets alternate between z(1)
/// and z(2); every chart grid candidate at the given resolution is
/// excluded by an exact sign certificate (the contracting component of an
/// orbit never changes sign, so the two window demands are incompatible).
FalsifyReport app_falsify(const BlowupAtlas& atlas, const Rat& eps,
                          const Rat& delta1, const Rat& delta2, long n,
                          int resolution_bits);

/// Specification falsifier: targets on the two opposite contracting rays
/// with gap N; same sign-certificate exclusion.
FalsifyReport spec_falsify(const BlowupAtlas& atlas, const Rat& delta,
                           long N, int resolution_bits);

}  // namespace carpet

#endif
