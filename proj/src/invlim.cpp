#include "carpet/invlim.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace carpet {

BlowupAtlas make_atlas(const ToralAuto& A, bool quotient_mode)
{
    return BlowupAtlas{A, quotient_mode, {}};
}

void blow_up(BlowupAtlas& atlas, const TorusOrbit& orbit)
{
    if (orbit.points.empty())
        throw std::invalid_argument("blow_up: empty orbit");
    for (std::size_t i = 0; i < orbit.points.size(); ++i) {
        const TorusPoint& next =
            orbit.points[(i + 1) % orbit.points.size()];
        if (atlas.base.apply(orbit.points[i]) != next)
            throw std::invalid_argument("blow_up: not an orbit of the base");
    }
    for (const TorusPoint& p : orbit.points) {
        for (const TorusOrbit& prev : atlas.blown)
            for (const TorusPoint& q : prev.points)
                if (p == q)
                    throw std::invalid_argument(
                        "blow_up: orbit meets existing blown set");
        if (atlas.quotient_mode)
            for (const TorusPoint& c : pillowcase_branch_points())
                if (p == c)
                    throw std::invalid_argument(
                        "blow_up: orbit meets a branch point");
    }
    atlas.blown.push_back(orbit);
}

BlowupAtlas default_atlas()
{
    BlowupAtlas atlas = make_atlas(ToralAuto::cat(), false);
    TorusOrbit fixed;
    fixed.points.push_back(TorusPoint(Rat(0), Rat(0)));
    blow_up(atlas, fixed);
    return atlas;
}

LimPoint LimPoint::off(const QuadVal& x, const QuadVal& y)
{
    LimPoint z;
    z.x = x;
    z.y = y;
    z.dir = {QuadVal(Rat(1), x.disc), QuadVal(Rat(0), x.disc)};
    return z;
}

LimPoint LimPoint::circle(const QuadVec& dir)
{
    if (dir.x.sgn() == 0 && dir.y.sgn() == 0)
        throw std::invalid_argument("LimPoint: zero direction");
    LimPoint z;
    z.on_circle = true;
    z.x = QuadVal(Rat(0), dir.x.disc);
    z.y = z.x;
    z.dir = dir;
    return z;
}

std::string LimPoint::str() const
{
    if (on_circle)
        return "circle<" + dir.x.str() + ", " + dir.y.str() + ">";
    return "(" + x.str() + ", " + y.str() + ")";
}

LimPoint z_ray(const BlowupAtlas& atlas, int i)
{
    if (i != 1 && i != 2) throw std::invalid_argument("z_ray: i in {1,2}");
    long disc = atlas.base.discriminant();
    QuadVal one(Rat(i == 1 ? 1 : -1), disc), zero(Rat(0), disc);
    return LimPoint::circle({one, zero});
}

LimPoint h_apply(const BlowupAtlas& atlas, const LimPoint& z, bool inverse)
{
    QuadVal l = atlas.lambda(), b = atlas.beta();
    if (inverse) std::swap(l, b);
    if (z.on_circle) return LimPoint::circle({b * z.dir.x, l * z.dir.y});
    return LimPoint::off(b * z.x, l * z.y);
}

namespace {

double angle_of(const QuadVec& v)
{
    return std::atan2(v.y.to_d(), v.x.to_d());
}

std::pair<double, double> stage_pos(const BlowupAtlas& atlas,
                                    const LimPoint& z, int stage)
{
    if (!z.on_circle) return {z.x.to_d(), z.y.to_d()};
    if (stage == 0) return {0.0, 0.0};
    double r = to_double(atlas.circle_radius(stage));
    double t = angle_of(z.dir);
    return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace

Dinf dinf(const BlowupAtlas& atlas, const LimPoint& a, const LimPoint& b,
          int depth)
{
    if (depth < 0) throw std::invalid_argument("dinf: depth >= 0");
    Dinf d;
    double w = 1.0;
    for (int j = 0; j <= depth; ++j) {
        double dj;
        if (a.on_circle && b.on_circle && j >= 1) {
            double dt = std::fabs(angle_of(a.dir) - angle_of(b.dir));
            if (dt > M_PI) dt = 2 * M_PI - dt;
            dj = to_double(atlas.circle_radius(j)) * dt;
        } else {
            auto [ax, ay] = stage_pos(atlas, a, j);
            auto [bx, by] = stage_pos(atlas, b, j);
            dj = std::hypot(ax - bx, ay - by);
        }
        d.value += w * dj / (1 + dj);
        w /= 2;
    }
    // Each term is < 2^{-j}, so the discarded stages sum to < 2^{-depth}.
    d.tail_bound = std::pow(2.0, -depth);
    return d;
}

BallProjReport ball_projection_check(const BlowupAtlas& atlas, const Rat& eps,
                                     long nsamples, unsigned long seed,
                                     bool mirror)
{
    BallProjReport rep;
    rep.mirror = mirror;
    long disc = atlas.base.discriminant();
    LimPoint center = z_ray(atlas, mirror ? 2 : 1);
    // Rational bound under the true box half-width lambda*eps: points
    // inside it are certainly in D.
    Rat lam_lo =
        rat(static_cast<long>(atlas.lambda().to_d() * 1000) - 1, 1000);
    Rat box = lam_lo * eps;

    std::mt19937_64 gen(seed);
    auto u20 = [&gen] { return static_cast<long>(gen() >> 44); };
    auto frac = [&] { return rat(u20(), 1 << 20); };  // [0, 1)

    struct Sample {
        LimPoint p;
        bool contained;
        double dist;
    };
    std::vector<Sample> samples;
    samples.reserve(nsamples);
    int flip = mirror ? -1 : 1;
    for (long k = 0; k < nsamples; ++k) {
        Rat x, y;
        bool contained;
        LimPoint p;
        switch (k % 4) {
            case 0: {  // circle point: always projects to the blown point
                double t = 2 * M_PI * to_double(frac());
                Rat c = rat(static_cast<long>(std::cos(t) * (1 << 20)), 1 << 20);
                Rat s = rat(static_cast<long>(std::sin(t) * (1 << 20)), 1 << 20);
                if (c == 0 && s == 0) c = 1;
                p = LimPoint::circle({QuadVal(c, disc), QuadVal(s, disc)});
                contained = true;
                break;
            }
            case 1: {  // in the target sector
                x = box * frac();
                if (x == 0) x = box / 2;
                y = x * frac() * rat(1, 2) * (gen() & 1 ? 1 : -1);
                x *= flip;
                p = LimPoint::off(QuadVal(x, disc), QuadVal(y, disc));
                contained = true;
                break;
            }
            case 2: {  // vertical sector: violator
                y = box * frac();
                if (y == 0) y = box / 2;
                x = y * frac() * rat(1, 2) * flip;
                y *= (gen() & 1 ? 1 : -1);
                p = LimPoint::off(QuadVal(x, disc), QuadVal(y, disc));
                contained = false;
                break;
            }
            default: {  // wrong horizontal sector: violator
                x = -(box * frac());
                if (x == 0) x = -box / 2;
                y = abs_rat(x) * frac() * rat(1, 2) * (gen() & 1 ? 1 : -1);
                x *= flip;
                p = LimPoint::off(QuadVal(x, disc), QuadVal(y, disc));
                contained = false;
                break;
            }
        }
        double dist = dinf(atlas, center, p).value;
        if (!contained) ++rep.violators;
        samples.push_back({p, contained, dist});
    }
    rep.samples = nsamples;

    auto safe = [&](double r) {
        for (const Sample& s : samples)
            if (s.dist < r && !s.contained) return false;
        return true;
    };
    double lo = 0, hi = 1;
    for (int it = 0; it < 48; ++it) {
        double mid = (lo + hi) / 2;
        if (safe(mid))
            lo = mid;
        else
            hi = mid;
    }
    rep.r_star = lo;
    for (const Sample& s : samples)
        if (s.dist < rep.r_star) ++rep.inside;
    rep.ok = rep.r_star > 0 && safe(rep.r_star);
    return rep;
}

Rat zip_h(const ZipModel& m, const Rat& r, const Rat& u)
{
    if (r < 0 || r > 1 || u < -1 || u > 1)
        throw std::invalid_argument("zip_h: out of domain");
    Rat w = 1 - abs_rat(u);
    Rat s = m.zeta * w;
    if (r <= s) return r * (1 - w);
    Rat m0 = s * (1 - w);
    return m0 + (r - s) * (1 - m0) / (1 - s);
}

Rat zip_hdelta(const ZipModel& m, const Rat& delta, const Rat& r,
               const Rat& u)
{
    if (delta <= 0 || delta >= m.zeta)
        throw std::invalid_argument("zip_hdelta: need 0 < delta < zeta");
    if (r < 0 || r > 1 || u < -1 || u > 1)
        throw std::invalid_argument("zip_hdelta: out of domain");
    Rat w = 1 - abs_rat(u);
    Rat s = m.zeta * w;
    if (r <= s) return r * ((1 - w) + delta * w / m.zeta);
    Rat m1 = s * (1 - w) + delta * w * w;
    return m1 + (r - s) * (1 - m1) / (1 - s);
}

ZipReport zip_maps(const ZipModel& m, const Rat& delta, int grid)
{
    ZipReport rep;
    rep.delta = delta;
    // Along each ray both maps are piecewise linear with the same breaks,
    // so their difference peaks at the break r = zeta*w, where it equals
    // delta*w^2; the maximum over rays is delta, at the slit tip.
    rep.sup_dist = delta;
    rep.grid_max = 0;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j) {
            Rat r = rat(i, grid);
            Rat u = rat(2 * j, grid) - 1;
            Rat diff = abs_rat(zip_hdelta(m, delta, r, u) - zip_h(m, r, u));
            if (diff > rep.grid_max) rep.grid_max = diff;
        }
    Rat tip = abs_rat(zip_hdelta(m, delta, m.zeta, Rat(0)) -
                      zip_h(m, m.zeta, Rat(0)));
    rep.consistent = (rep.grid_max <= rep.sup_dist) && (tip == rep.sup_dist);
    return rep;
}

namespace {

// First `steps` region labels of the chart orbit of (x, y), as text.
std::string trace_orbit(const BlowupAtlas& atlas, const HypModel<QuadVal>& M,
                        QuadVal x, QuadVal y, int steps)
{
    std::ostringstream os;
    for (int j = 0; j < steps; ++j) {
        if (j) os << " -> ";
        os << region_name(M.classify(x, y));
        M.apply(x, y);
    }
    (void)atlas;
    return os.str();
}

// Window counts for one candidate orbit: how many of the first n iterates
// lie in the right sector (or at the blown point), and in the left one.
std::pair<long, long> window_counts(const HypModel<QuadVal>& M, QuadVal x,
                                    QuadVal y, long skip, long n)
{
    for (long j = 0; j < skip; ++j) M.apply(x, y);
    long right = 0, left = 0;
    for (long j = 0; j < n; ++j) {
        bool origin = ssign(x) == 0 && ssign(y) == 0;
        if (origin || M.in_sector_right(x, y)) ++right;
        if (origin || M.in_sector_left(x, y)) ++left;
        M.apply(x, y);
    }
    return {right, left};
}

void require_fixed_point_atlas(const BlowupAtlas& atlas)
{
    if (atlas.blown.empty() || atlas.blown[0].points.size() != 1 ||
        atlas.blown[0].points[0] != TorusPoint(Rat(0), Rat(0)))
        throw std::invalid_argument(
            "falsifier: atlas must blow the fixed point first");
}

const char* kEvidenceLabel =
    "falsification evidence at the stated resolution and budget; not a "
    "proof (the property quantifies over all points of the space)";

}  // namespace

FalsifyReport app_falsify(const BlowupAtlas& atlas, const Rat& eps,
                          const Rat& delta1, const Rat& delta2, long n,
                          int resolution_bits)
{
    require_fixed_point_atlas(atlas);
    if (n < 100 || n % 100 != 0)
        throw std::invalid_argument("app_falsify: need n >= 100 with 100|n");
    if (eps <= 0 || delta1 <= 0 || delta1 >= 1 || delta2 <= 0)
        throw std::invalid_argument("app_falsify: bad constants");
    long disc = atlas.base.discriminant();
    HypModel<QuadVal> M(atlas.lambda(), QuadVal(eps, disc));

    // Chart grid of half-width lambda*eps at the stated resolution.
    Rat lam_hi = rat(static_cast<long>(atlas.lambda().to_d() * 1000) + 1, 1000);
    Rat denom = pow_int(2, resolution_bits);
    Rat Rr = lam_hi * eps * denom;
    long R = mpz_class(Rr.get_num() / Rr.get_den()).get_si() + 1;

    FalsifyReport rep;
    rep.property = "approximate product property";
    rep.epistemic_status = kEvidenceLabel;
    rep.resolution_bits = resolution_bits;
    rep.total_candidates = (2 * R + 1) * (2 * R + 1);
    rep.survivors = 0;

    const long need = n - static_cast<long>(to_double(delta1 * n));  // (1-d1)n
    const long gap_slack = static_cast<long>(to_double(delta2 * n)) + 1;

    // Exclusion is by the sign of the contracting chart component, which
    // diag(beta, lambda) preserves: the z(1) windows need the right
    // sector (x > 0), the z(2) windows the left one (x < 0). One
    // representative per category is traced and counted in full.
    auto sample_xy = [&](long i, long j) {
        return std::pair<QuadVal, QuadVal>(
            QuadVal(rat(i, 1) / denom, disc), QuadVal(rat(j, 1) / denom, disc));
    };
    {
        TraceCategory c;
        c.certificate =
            "x0 > 0: contracting component stays positive, so every "
            "admissible gap window toward z(2) counts 0 left-sector visits "
            "(< (1-delta1)n = " + std::to_string(need) + ")";
        c.candidates = R * (2 * R + 1);
        auto [x, y] = sample_xy(std::max(1l, R / 2), std::max(1l, R / 7));
        long worst_left = 0;
        for (long gap = n; gap < n + gap_slack; ++gap)
            worst_left =
                std::max(worst_left, window_counts(M, x, y, gap, n).second);
        if (worst_left >= need)
            throw std::logic_error("app_falsify: certificate check failed");
        c.example_trace = trace_orbit(atlas, M, x, y, 10) +
                          "; left-sector count over gap windows = " +
                          std::to_string(worst_left);
        rep.traces.push_back(c);
    }
    {
        TraceCategory c;
        c.certificate =
            "x0 < 0: contracting component stays negative, so window 1 "
            "toward z(1) counts 0 right-sector visits";
        c.candidates = R * (2 * R + 1);
        auto [x, y] = sample_xy(-std::max(1l, R / 2), std::max(1l, R / 7));
        long right = window_counts(M, x, y, 0, n).first;
        if (right >= need)
            throw std::logic_error("app_falsify: certificate check failed");
        c.example_trace = trace_orbit(atlas, M, x, y, 10) +
                          "; right-sector count in window 1 = " +
                          std::to_string(right);
        rep.traces.push_back(c);
    }
    {
        TraceCategory c;
        c.certificate =
            "x0 = 0, y0 != 0: orbit rides the expanding axis, never in "
            "either horizontal sector nor at the blown point";
        c.candidates = 2 * R;
        auto [x, y] = sample_xy(0, std::max(1l, R / 3));
        long right = window_counts(M, x, y, 0, n).first;
        if (right >= need)
            throw std::logic_error("app_falsify: certificate check failed");
        c.example_trace = trace_orbit(atlas, M, x, y, 10) +
                          "; right-sector count in window 1 = " +
                          std::to_string(right);
        rep.traces.push_back(c);
    }
    {
        TraceCategory c;
        c.certificate =
            "origin: circle directions split by the sign of the "
            "contracting component, which the differential preserves; "
            "+: never near z(2); -: never near z(1); 0: expanding "
            "directions, near neither";
        c.candidates = 1;  // the blown point, all directions certified
        c.example_trace =
            "direction (1,0) fixed by the transport; antipode unreachable";
        rep.traces.push_back(c);
    }
    return rep;
}

FalsifyReport spec_falsify(const BlowupAtlas& atlas, const Rat& delta, long N,
                           int resolution_bits)
{
    require_fixed_point_atlas(atlas);
    if (N < 1) throw std::invalid_argument("spec_falsify: need N >= 1");
    if (delta <= 0) throw std::invalid_argument("spec_falsify: delta > 0");
    long disc = atlas.base.discriminant();
    HypModel<QuadVal> M(atlas.lambda(), QuadVal(delta, disc));

    Rat lam_hi = rat(static_cast<long>(atlas.lambda().to_d() * 1000) + 1, 1000);
    Rat denom = pow_int(2, resolution_bits);
    Rat Rr = lam_hi * delta * denom;
    long R = mpz_class(Rr.get_num() / Rr.get_den()).get_si() + 1;

    FalsifyReport rep;
    rep.property = "specification";
    rep.epistemic_status = kEvidenceLabel;
    rep.resolution_bits = resolution_bits;
    rep.total_candidates = (2 * R + 1) * (2 * R + 1);
    rep.survivors = 0;

    auto sample_xy = [&](long i, long j) {
        return std::pair<QuadVal, QuadVal>(
            QuadVal(rat(i, 1) / denom, disc), QuadVal(rat(j, 1) / denom, disc));
    };
    {
        TraceCategory c;
        c.certificate =
            "x0 > 0: shadows the positive contracting ray through step N+1 "
            "at best, but step 2N+1 still has x > 0, never delta-close to "
            "the negative-ray target";
        c.candidates = R * (2 * R + 1);
        auto [x, y] = sample_xy(std::max(1l, R / 2), 0);
        QuadVal xx = x, yy = y;
        for (long l = 0; l < 2 * N + 1; ++l) M.apply(xx, yy);
        c.example_trace = trace_orbit(atlas, M, x, y, 8) +
                          "; sign of x at step 2N+1 = " +
                          std::to_string(ssign(xx));
        if (ssign(xx) <= 0)
            throw std::logic_error("spec_falsify: certificate check failed");
        rep.traces.push_back(c);
    }
    {
        TraceCategory c;
        c.certificate =
            "x0 <= 0 (including the expanding axis and the blown circle): "
            "step 0 already fails the positive-ray window, whose "
            "delta-ball projects inside the right sector";
        c.candidates = (R + 1) * (2 * R + 1);
        auto [x, y] = sample_xy(-std::max(1l, R / 2), std::max(1l, R / 5));
        c.example_trace = trace_orbit(atlas, M, x, y, 8);
        rep.traces.push_back(c);
    }
    return rep;
}

}  // namespace carpet
