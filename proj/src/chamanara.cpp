#include "carpet/chamanara.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace carpet {

namespace {

// Depth k >= 1 of the boundary interval (n^{-k}, n^{1-k}) containing t.
int side_depth(int base, const Rat& t)
{
    int k = 1;
    Rat lo = rat(1, base);
    while (t <= lo) {
        lo /= base;
        ++k;
    }
    return k;
}

// Offset between the two members of the depth-k side pair:
// the x = 1 (resp. y = 1) member sits at t + 1 - n^{1-k} - n^{-k}.
Rat side_offset(int base, int k)
{
    return 1 - pow_int(base, 1 - k) - pow_int(base, -k);
}

bool on_singular_class(int base, const Rat& x, const Rat& y)
{
    bool xb = (x == 0 || x == 1), yb = (y == 0 || y == 1);
    if (xb && yb) return true;
    if (x == 0) return is_reciprocal_power(y, base);
    if (x == 1) return is_reciprocal_power(1 - y, base);
    if (y == 0) return is_reciprocal_power(x, base);
    if (y == 1) return is_reciprocal_power(1 - x, base);
    return false;
}

CnPoint make_point(int base, CnPoint::Kind kind, int k, const Rat& x,
                   const Rat& y)
{
    CnPoint z;
    z.base = base;
    z.kind = kind;
    z.k = k;
    z.x = DigitNumber::from_rational(x, base);
    z.y = DigitNumber::from_rational(y, base);
    return z;
}

}  // namespace

std::string CnPoint::str() const
{
    std::ostringstream os;
    switch (kind) {
        case Kind::Interior:
            os << "int(" << x.str() << ", " << y.str() << ")";
            break;
        case Kind::SideI:
            os << "I" << k << "(0, " << y.str() << ")";
            break;
        case Kind::SideJ:
            os << "J" << k << "(" << x.str() << ", 0)";
            break;
        case Kind::Singular:
            os << "sing_" << base;
            break;
    }
    return os.str();
}

CnPoint cn_canonicalize(int base, const Rat& x, const Rat& y)
{
    if (base < 2) throw std::invalid_argument("cn_canonicalize: base < 2");
    if (x < 0 || x > 1 || y < 0 || y > 1)
        throw std::invalid_argument("cn_canonicalize: point outside square");
    if (on_singular_class(base, x, y)) {
        CnPoint z;
        z.base = base;
        z.kind = CnPoint::Kind::Singular;
        return z;
    }
    if (x > 0 && x < 1 && y > 0 && y < 1)
        return make_point(base, CnPoint::Kind::Interior, 0, x, y);
    if (x == 0) {
        int k = side_depth(base, y);
        return make_point(base, CnPoint::Kind::SideI, k, 0, y);
    }
    if (x == 1) {
        // (1, y) pairs with (0, y - offset) at the depth of 1 - y's band
        // mirrored back to the left side.
        int k = side_depth(base, 1 - y);
        return make_point(base, CnPoint::Kind::SideI, k, 0,
                          y - side_offset(base, k));
    }
    if (y == 0) {
        int k = side_depth(base, x);
        return make_point(base, CnPoint::Kind::SideJ, k, x, 0);
    }
    // y == 1
    int k = side_depth(base, 1 - x);
    return make_point(base, CnPoint::Kind::SideJ, k, x - side_offset(base, k),
                      0);
}

std::vector<std::pair<Rat, Rat>> cn_class_members(const CnPoint& z, int limit)
{
    std::vector<std::pair<Rat, Rat>> out;
    switch (z.kind) {
        case CnPoint::Kind::Interior:
            out.emplace_back(z.xr(), z.yr());
            break;
        case CnPoint::Kind::SideI: {
            Rat y = z.yr();
            out.emplace_back(Rat(0), y);
            out.emplace_back(Rat(1), y + side_offset(z.base, z.k));
            break;
        }
        case CnPoint::Kind::SideJ: {
            Rat x = z.xr();
            out.emplace_back(x, Rat(0));
            out.emplace_back(x + side_offset(z.base, z.k), Rat(1));
            break;
        }
        case CnPoint::Kind::Singular: {
            out.emplace_back(Rat(0), Rat(0));
            out.emplace_back(Rat(1), Rat(1));
            out.emplace_back(Rat(1), Rat(0));
            out.emplace_back(Rat(0), Rat(1));
            Rat p = 1;
            for (int k = 1; k <= limit; ++k) {
                p /= z.base;
                out.emplace_back(Rat(0), p);
                out.emplace_back(p, Rat(0));
                out.emplace_back(Rat(1), 1 - p);
                out.emplace_back(1 - p, Rat(1));
            }
            break;
        }
    }
    return out;
}

CnPoint baker(const CnPoint& z, bool inverse)
{
    if (z.kind == CnPoint::Kind::Singular) return z;
    // The canonical member has x < 1 and y < 1, so it lies in the domain of
    // exactly one branch of the map (resp. its inverse).
    const int n = z.base;
    Rat x = z.xr(), y = z.yr();
    if (!inverse) {
        Rat nx = n * x;
        mpz_class fl = nx.get_num() / nx.get_den();  // floor, nx >= 0
        int k = static_cast<int>(fl.get_si()) + 1;
        return cn_canonicalize(n, nx - (k - 1), (y + k - 1) / n);
    }
    Rat ny = n * y;
    mpz_class fl = ny.get_num() / ny.get_den();
    int j = static_cast<int>(fl.get_si()) + 1;
    return cn_canonicalize(n, (x + j - 1) / n, ny - (j - 1));
}

CnPoint factor_map(const BiSequence& s)
{
    Rat x = digits_value(s.base(), s.right_pre(), s.right_per());
    Rat y = digits_value(s.base(), s.left_pre(), s.left_per());
    return cn_canonicalize(s.base(), x, y);
}

SemiconjWitness check_semiconjugacy(const BiSequence& s)
{
    SemiconjWitness w{false, factor_map(s.shifted()), baker(factor_map(s))};
    w.ok = (w.lhs == w.rhs);
    return w;
}

Rat cn_dist2(const CnPoint& a, const CnPoint& b)
{
    if (a.base != b.base) throw std::invalid_argument("cn_dist2: base mismatch");
    // 1/n^40 is far below any tolerance used with this metric, so the
    // truncated singular family changes nothing past the corners it limits to.
    auto ma = cn_class_members(a, 40);
    auto mb = cn_class_members(b, 40);
    Rat best = 8;  // > diam^2 of the square over all member pairs
    for (const auto& [ax, ay] : ma)
        for (const auto& [bx, by] : mb) {
            Rat dx = ax - bx, dy = ay - by;
            Rat d2 = dx * dx + dy * dy;
            if (d2 < best) best = d2;
        }
    return best;
}

namespace {

struct PeriodicEntry {
    CnPoint point;
    int period;  // minimal period under the map
    std::vector<std::pair<double, double>> members;
};

// Periodic classes of minimal period exactly p, for screening with doubles.
const std::vector<PeriodicEntry>& periodic_classes(int base, int p)
{
    static std::map<std::pair<int, int>, std::vector<PeriodicEntry>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(base, p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<PeriodicEntry> out;
    for (const BiSequence& s : enumerate_periodic(base, p)) {
        CnPoint z = factor_map(s);
        if (z.kind == CnPoint::Kind::Singular) continue;
        int period = 1;
        CnPoint w = baker(z);
        while (w != z && period <= p) {
            w = baker(w);
            ++period;
        }
        if (period != p) continue;  // counted at its minimal period
        PeriodicEntry e;
        e.point = z;
        e.period = period;
        for (const auto& [mx, my] : cn_class_members(z))
            e.members.emplace_back(to_double(mx), to_double(my));
        bool dup = false;
        for (const auto& prev : out)
            if (prev.point == z) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(e));
    }
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::optional<PeriodicWitness> periodic_density_witness(const CnPoint& center,
                                                        const Rat& eps,
                                                        int max_period)
{
    const Rat eps2 = eps * eps;
    // The singular class is fixed by the map, so it is a period-1 witness
    // whenever it is close enough (and the only one the symbolic sweep
    // below cannot produce, since it skips singular images).
    CnPoint sing;
    sing.base = center.base;
    sing.kind = CnPoint::Kind::Singular;
    if (cn_dist2(center, sing) <= eps2) return PeriodicWitness{sing, 1};
    std::vector<std::pair<double, double>> cm;
    for (const auto& [mx, my] : cn_class_members(center, 40))
        cm.emplace_back(to_double(mx), to_double(my));
    const double screen = to_double(eps2) * (1 + 1e-9) + 1e-12;
    for (int p = 1; p <= max_period; ++p) {
        for (const auto& e : periodic_classes(center.base, p)) {
            bool close = false;
            for (const auto& [ax, ay] : cm) {
                for (const auto& [bx, by] : e.members) {
                    double dx = ax - bx, dy = ay - by;
                    if (dx * dx + dy * dy <= screen) {
                        close = true;
                        break;
                    }
                }
                if (close) break;
            }
            if (close && cn_dist2(center, e.point) <= eps2)
                return PeriodicWitness{e.point, e.period};
        }
    }
    return std::nullopt;
}

}  // namespace carpet
