#ifndef CARPET_QUAD_HPP
#define CARPET_QUAD_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "carpet/rational.hpp"

namespace carpet {

/// Element a + b*sqrt(disc) of a real quadratic field, disc a positive
/// nonsquare integer. All arithmetic and sign tests are exact.
struct QuadVal {
    Rat a = 0, b = 0;
    long disc = 5;

    QuadVal() = default;
    QuadVal(Rat a_, Rat b_, long disc_) : a(std::move(a_)), b(std::move(b_)), disc(disc_) {}
    /// Rational embedding; the disc tag only matters once mixed with others.
    QuadVal(const Rat& r, long disc_ = 5) : a(r), disc(disc_) {}
    QuadVal(long n, long disc_ = 5) : a(n), disc(disc_) {}

    static void check(const QuadVal& x, const QuadVal& y)
    {
        if (x.disc != y.disc)
            throw std::invalid_argument("QuadVal: field mismatch");
    }

    QuadVal conj() const { return {a, -b, disc}; }
    Rat norm() const { return a * a - b * b * disc; }

    friend QuadVal operator+(const QuadVal& x, const QuadVal& y)
    {
        check(x, y);
        return {x.a + y.a, x.b + y.b, x.disc};
    }
    friend QuadVal operator-(const QuadVal& x, const QuadVal& y)
    {
        check(x, y);
        return {x.a - y.a, x.b - y.b, x.disc};
    }
    QuadVal operator-() const { return {-a, -b, disc}; }
    friend QuadVal operator*(const QuadVal& x, const QuadVal& y)
    {
        check(x, y);
        return {x.a * y.a + x.b * y.b * x.disc, x.a * y.b + x.b * y.a, x.disc};
    }
    friend QuadVal operator/(const QuadVal& x, const QuadVal& y)
    {
        check(x, y);
        Rat n = y.norm();
        if (n == 0) throw std::domain_error("QuadVal: division by zero");
        QuadVal num = x * y.conj();
        return {num.a / n, num.b / n, x.disc};
    }

    /// Exact sign of a + b*sqrt(d): when the terms disagree in sign the
    /// comparison reduces to a^2 vs b^2 d.
    int sgn() const
    {
        int sa = sign(a), sb = sign(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rat lhs = a * a, rhs = b * b * disc;
        if (lhs == rhs) return 0;
        return (lhs > rhs) ? sa : sb;
    }

    bool operator==(const QuadVal& y) const
    {
        check(*this, y);
        return a == y.a && b == y.b;
    }
    bool operator!=(const QuadVal& y) const { return !(*this == y); }
    bool operator<(const QuadVal& y) const { return (*this - y).sgn() < 0; }
    bool operator>(const QuadVal& y) const { return (*this - y).sgn() > 0; }
    bool operator<=(const QuadVal& y) const { return (*this - y).sgn() <= 0; }
    bool operator>=(const QuadVal& y) const { return (*this - y).sgn() >= 0; }

    QuadVal abs() const { return sgn() < 0 ? -*this : *this; }

    double to_d() const
    {
        return ::carpet::to_double(a) +
               ::carpet::to_double(b) * std::sqrt(static_cast<double>(disc));
    }

    std::string str() const
    {
        return rat_str(a) + (sign(b) < 0 ? "" : "+") + rat_str(b) + "*sqrt(" +
               std::to_string(disc) + ")";
    }
};

inline QuadVal qpow(QuadVal x, int e)
{
    if (e < 0) return QuadVal(Rat(1), x.disc) / qpow(x, -e);
    QuadVal r(Rat(1), x.disc);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

/// Planar vector with quadratic-field entries; equality of directions is
/// projective with orientation (same ray).
struct QuadVec {
    QuadVal x, y;

    friend QuadVec operator+(const QuadVec& u, const QuadVec& v)
    {
        return {u.x + v.x, u.y + v.y};
    }
    friend QuadVec operator-(const QuadVec& u, const QuadVec& v)
    {
        return {u.x - v.x, u.y - v.y};
    }
    QuadVec operator-() const { return {-x, -y}; }
    friend QuadVec operator*(const QuadVal& s, const QuadVec& v)
    {
        return {s * v.x, s * v.y};
    }

    QuadVal cross(const QuadVec& v) const { return x * v.y - y * v.x; }
    QuadVal dot(const QuadVec& v) const { return x * v.x + y * v.y; }

    bool same_ray(const QuadVec& v) const
    {
        return cross(v).sgn() == 0 && dot(v).sgn() > 0;
    }
};

}  // namespace carpet

#endif
