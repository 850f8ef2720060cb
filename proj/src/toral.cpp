#include "carpet/toral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace carpet {

namespace {

Rat mod1(const Rat& r)
{
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return r - Rat(fl);
}

}  // namespace

TorusPoint::TorusPoint(Rat x_, Rat y_) : x(mod1(x_)), y(mod1(y_)) {}

std::string TorusPoint::str() const
{
    return "(" + rat_str(x) + ", " + rat_str(y) + ")";
}

ToralAuto::ToralAuto(long a, long b, long c, long d)
    : a_(a), b_(b), c_(c), d_(d)
{
    long D = det();
    if (D != 1 && D != -1)
        throw std::invalid_argument("ToralAuto: |det| must be 1");
    long t = trace();
    bool hyperbolic = (D == 1) ? (t > 2 || t < -2) : (t != 0);
    if (!hyperbolic)
        throw std::invalid_argument("ToralAuto: eigenvalue of modulus 1");
}

TorusPoint ToralAuto::apply(const TorusPoint& z, bool inverse) const
{
    if (!inverse) return TorusPoint(a_ * z.x + b_ * z.y, c_ * z.x + d_ * z.y);
    long s = det();  // inverse = adjugate / det, still integer
    return TorusPoint(s * (d_ * z.x - b_ * z.y), s * (a_ * z.y - c_ * z.x));
}

long ToralAuto::discriminant() const
{
    return trace() * trace() - 4 * det();
}

QuadVal ToralAuto::leading_eigenvalue() const
{
    long t = trace() < 0 ? -trace() : trace();
    return QuadVal(rat(t, 2), rat(1, 2), discriminant());
}

double ToralAuto::entropy() const
{
    return std::log(leading_eigenvalue().to_d());
}

QuadVec ToralAuto::eigvec(const QuadVal& lambda) const
{
    long disc = discriminant();
    if (b_ != 0) return {QuadVal(Rat(b_), disc), lambda - QuadVal(Rat(a_), disc)};
    if (c_ != 0) return {lambda - QuadVal(Rat(d_), disc), QuadVal(Rat(c_), disc)};
    throw std::logic_error("eigvec: diagonal matrix cannot be hyperbolic");
}

QuadVec ToralAuto::expanding_direction() const
{
    long t = trace();
    Rat s = t >= 0 ? rat(1, 2) : rat(-1, 2);
    return eigvec(QuadVal(rat(t, 2), s, discriminant()));
}

QuadVec ToralAuto::contracting_direction() const
{
    long t = trace();
    Rat s = t >= 0 ? rat(-1, 2) : rat(1, 2);
    return eigvec(QuadVal(rat(t, 2), s, discriminant()));
}

QuadVec ToralAuto::apply_vec(const QuadVec& v) const
{
    long disc = v.x.disc;
    QuadVal A(Rat(a_), disc), B(Rat(b_), disc), C(Rat(c_), disc),
        D(Rat(d_), disc);
    return {A * v.x + B * v.y, C * v.x + D * v.y};
}

TorusPoint pillowcase(const TorusPoint& z)
{
    TorusPoint m(-z.x, -z.y);
    return m < z ? m : z;
}

std::vector<TorusPoint> pillowcase_fiber(const TorusPoint& z)
{
    TorusPoint m(-z.x, -z.y);
    if (m == z) return {z};
    return {pillowcase(z), m < z ? z : m};
}

std::vector<TorusPoint> pillowcase_branch_points()
{
    Rat h = rat(1, 2);
    return {TorusPoint(Rat(0), Rat(0)), TorusPoint(h, Rat(0)),
            TorusPoint(Rat(0), h), TorusPoint(h, h)};
}

std::vector<TorusOrbit> periodic_points(const ToralAuto& A, long q)
{
    if (q < 1) throw std::invalid_argument("periodic_points: q >= 1");
    if (q > 4096) throw std::invalid_argument("periodic_points: q too large");
    std::vector<char> seen(static_cast<std::size_t>(q) * q, 0);
    auto idx = [&](const TorusPoint& z) {
        // Denominator divides q, so z = (i/q, j/q) with 0 <= i, j < q.
        Rat ix = z.x * q, iy = z.y * q;
        return static_cast<std::size_t>(ix.get_num().get_si()) * q +
               static_cast<std::size_t>(iy.get_num().get_si());
    };
    std::vector<TorusOrbit> out;
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < q; ++j) {
            TorusPoint start(rat(i, q), rat(j, q));
            if (seen[idx(start)]) continue;
            TorusOrbit orb;
            TorusPoint z = start;
            do {
                seen[idx(z)] = 1;
                orb.points.push_back(z);
                z = A.apply(z);
            } while (z != start);
            // Start the listing at the orbit's least point.
            auto mn = std::min_element(orb.points.begin(), orb.points.end());
            std::rotate(orb.points.begin(), mn, orb.points.end());
            out.push_back(std::move(orb));
        }
    std::sort(out.begin(), out.end(),
              [](const TorusOrbit& u, const TorusOrbit& v) {
                  return u.points.front() < v.points.front();
              });
    return out;
}

std::vector<TorusOrbit> non_branch_orbits(const ToralAuto& A, long q)
{
    auto branch = pillowcase_branch_points();
    std::vector<TorusOrbit> out;
    for (auto& orb : periodic_points(A, q)) {
        bool hits = false;
        for (const TorusPoint& z : orb.points)
            for (const TorusPoint& c : branch)
                if (z == c) {
                    hits = true;
                    break;
                }
        if (!hits) out.push_back(std::move(orb));
    }
    return out;
}

}  // namespace carpet
