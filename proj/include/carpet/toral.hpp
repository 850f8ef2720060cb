#ifndef CARPET_TORAL_HPP
#define CARPET_TORAL_HPP

#include <string>
#include <vector>

#include "carpet/quad.hpp"
#include "carpet/rational.hpp"

namespace carpet {

/// Point of the 2-torus with exact rational coordinates in [0, 1).
struct TorusPoint {
    Rat x = 0, y = 0;

    TorusPoint() = default;
    TorusPoint(Rat x_, Rat y_);

    bool operator==(const TorusPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const TorusPoint& o) const { return !(*this == o); }
    bool operator<(const TorusPoint& o) const
    {
        return x != o.x ? x < o.x : y < o.y;
    }
    std::string str() const;
};

/// Hyperbolic integer automorphism of the torus, |det| = 1 and no
/// eigenvalue of modulus 1. Construction rejects anything else.
class ToralAuto {
public:
    ToralAuto(long a, long b, long c, long d);

    static ToralAuto cat() { return ToralAuto(2, 1, 1, 1); }

    long a() const { return a_; }
    long b() const { return b_; }
    long c() const { return c_; }
    long d() const { return d_; }
    long det() const { return a_ * d_ - b_ * c_; }
    long trace() const { return a_ + d_; }

    TorusPoint apply(const TorusPoint& z, bool inverse = false) const;

    /// Leading eigenvalue |lambda| as an exact quadratic number, and
    /// log|lambda| (the entropy of the automorphism).
    QuadVal leading_eigenvalue() const;
    double entropy() const;

    /// Discriminant of the characteristic polynomial (positive, nonsquare
    /// for the hyperbolic integer case handled here).
    long discriminant() const;

    /// Expanding and contracting eigendirections over Q(sqrt(disc)).
    QuadVec expanding_direction() const;
    QuadVec contracting_direction() const;

    QuadVec apply_vec(const QuadVec& v) const;

private:
    QuadVec eigvec(const QuadVal& lambda) const;
    long a_, b_, c_, d_;
};

/// Canonical representative of {z, -z} on the pillowcase, with fiber.
TorusPoint pillowcase(const TorusPoint& z);
std::vector<TorusPoint> pillowcase_fiber(const TorusPoint& z);

/// The four pillowcase branch points (half-integer coordinates).
std::vector<TorusPoint> pillowcase_branch_points();

struct TorusOrbit {
    std::vector<TorusPoint> points;  // one full orbit, in iteration order
    int period() const { return static_cast<int>(points.size()); }
};

/// All points with denominator dividing q, decomposed into orbits of A.
/// Orbits are listed by their least point; each starts at its least point.
std::vector<TorusOrbit> periodic_points(const ToralAuto& A, long q);

/// Orbits from periodic_points whose pillowcase image avoids the branch
/// set (the orbit selection used for blow-ups).
std::vector<TorusOrbit> non_branch_orbits(const ToralAuto& A, long q);

}  // namespace carpet

#endif
