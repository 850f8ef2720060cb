#include "carpet/quotient.hpp"

#include <sstream>
#include <stdexcept>

namespace carpet {

CnPoint cn_rotate(const CnPoint& z)
{
    if (z.kind == CnPoint::Kind::Singular) return z;
    Rat x = z.xr(), y = z.yr();
    return cn_canonicalize(z.base, 1 - x, 1 - y);
}

bool cn_less(const CnPoint& a, const CnPoint& b)
{
    if (a.base != b.base) throw std::invalid_argument("cn_less: base mismatch");
    auto rank = [](CnPoint::Kind k) {
        switch (k) {
            case CnPoint::Kind::Singular: return 0;
            case CnPoint::Kind::SideI: return 1;
            case CnPoint::Kind::SideJ: return 2;
            case CnPoint::Kind::Interior: return 3;
        }
        return 4;
    };
    if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind);
    if (a.kind == CnPoint::Kind::Singular) return false;
    if (a.k != b.k) return a.k < b.k;
    Rat ax = a.xr(), bx = b.xr();
    if (ax != bx) return ax < bx;
    return a.yr() < b.yr();
}

std::string QnPoint::str() const
{
    std::ostringstream os;
    os << "[" << rep.str() << "]" << (branch ? "*" : "");
    return os.str();
}

QnPoint qn_canonicalize(const CnPoint& z)
{
    CnPoint r = cn_rotate(z);
    QnPoint q;
    q.branch = (r == z);
    q.rep = cn_less(r, z) ? r : z;
    return q;
}

QnPoint qn_from_square(int base, const Rat& x, const Rat& y)
{
    return qn_canonicalize(cn_canonicalize(base, x, y));
}

std::vector<CnPoint> qn_fiber(const QnPoint& q)
{
    std::vector<CnPoint> out{q.rep};
    if (!q.branch) out.push_back(cn_rotate(q.rep));
    return out;
}

QnPoint qn_apply(const QnPoint& q, bool inverse)
{
    QnPoint image = qn_canonicalize(baker(q.rep, inverse));
    if (!q.branch) {
        QnPoint other = qn_canonicalize(baker(cn_rotate(q.rep), inverse));
        if (other != image)
            throw std::logic_error("qn_apply: fiber members disagree");
    }
    return image;
}

Rat qn_dist2(const QnPoint& a, const QnPoint& b)
{
    Rat best = 8;
    for (const CnPoint& u : qn_fiber(a))
        for (const CnPoint& v : qn_fiber(b)) {
            Rat d2 = cn_dist2(u, v);
            if (d2 < best) best = d2;
        }
    return best;
}

Rat interval_length_I(int base, int j)
{
    if (j < 1) throw std::invalid_argument("interval_length_I: j >= 1");
    return pow_int(base, 1 - j) + pow_int(base, -j);
}

Rat interval_length_J(int base, int k)
{
    if (k < 1) throw std::invalid_argument("interval_length_J: k >= 1");
    if (k == 1) return rat(base - 1, base);
    return pow_int(base, 1 - k) + pow_int(base, -k);
}

std::vector<QnPoint> branch_catalog(int base, int depth)
{
    std::vector<QnPoint> out;
    out.push_back(qn_from_square(base, Rat(0), Rat(0)));          // singular
    out.push_back(qn_from_square(base, rat(1, 2), rat(1, 2)));    // center
    // Fixed point of the first bottom interval, listed via the top edge.
    out.push_back(
        qn_from_square(base, interval_length_J(base, 1) / 2, Rat(1)));
    for (int j = 1; j <= depth; ++j)
        out.push_back(qn_from_square(base, Rat(0), interval_length_I(base, j) / 2));
    for (int k = 2; k <= depth; ++k)
        out.push_back(qn_from_square(base, interval_length_J(base, k) / 2, Rat(0)));
    for (const QnPoint& q : out)
        if (!q.branch) throw std::logic_error("branch_catalog: non-fixed entry");
    return out;
}

}  // namespace carpet
