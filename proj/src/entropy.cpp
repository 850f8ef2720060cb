#include "carpet/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "carpet/chamanara.hpp"
#include "carpet/quotient.hpp"

namespace carpet {

double bernoulli_entropy(const ProbabilityVector& P)
{
    double h = 0;
    for (const Rat& p : P.p) {
        double pd = to_double(p);
        if (pd > 0) h -= pd * std::log(pd);
    }
    return h;
}

Realization realize_entropy(double h, double tol)
{
    if (h <= 0 || tol <= 0)
        throw std::invalid_argument("realize_entropy: h > 0, tol > 0");
    int N = 2;
    while (std::log(static_cast<double>(N)) < h) ++N;
    if (std::abs(std::log(static_cast<double>(N)) - h) <= tol) {
        std::vector<Rat> uniform(N, rat(1, N));
        ProbabilityVector P(uniform);
        return {N, P, bernoulli_entropy(P)};
    }
    // Entropy of (1-t, t/(N-1), ...) increases from 0 to log N as t runs
    // over (0, (N-1)/N]; bisect with dyadic t so the vector stays exact.
    auto family = [N](const Rat& t) {
        std::vector<Rat> v;
        v.push_back(1 - t);
        for (int i = 1; i < N; ++i) v.push_back(t / (N - 1));
        return ProbabilityVector(v);
    };
    Rat lo = 0, hi = rat(N - 1, N);
    Rat mid = hi / 2;
    double achieved = 0;
    for (int iter = 0; iter < 200; ++iter) {
        mid = (lo + hi) / 2;
        achieved = bernoulli_entropy(family(mid));
        if (std::abs(achieved - h) <= tol / 2) break;
        if (achieved < h)
            lo = mid;
        else
            hi = mid;
    }
    ProbabilityVector P = family(mid);
    return {N, P, bernoulli_entropy(P)};
}

mpz_class shift_spanning_exact(int symbols, int window, int m)
{
    if (symbols < 2 || window < 0 || m < 1)
        throw std::invalid_argument("shift_spanning_exact: bad arguments");
    // Two sequences are within 2^{-m} in every shifted position
    // t = 0..window-1 iff they agree on indices 1-m+t .. m+t for all t,
    // i.e. on a block of window + 2m - 1 coordinates; distinct blocks are
    // farther than eps apart, so the cylinder centers are optimal.
    mpz_class r = 1;
    for (int i = 0; i < window + 2 * m - 1; ++i) r *= symbols;
    return r;
}

SpanBounds spanning_bounds(
    long count, int window, double eps,
    const std::function<double(long, long, int)>& dist_step)
{
    if (count < 0) throw std::invalid_argument("spanning_bounds: count < 0");
    SpanBounds b;
    if (count == 0) {
        b.exact = true;
        return b;
    }
    // within[i][j]: Bowen distance over the window is <= eps.
    std::vector<std::vector<char>> within(count, std::vector<char>(count, 1));
    std::vector<std::vector<char>> sep(count, std::vector<char>(count, 0));
    for (long i = 0; i < count; ++i)
        for (long j = i + 1; j < count; ++j) {
            double dmax = 0;
            for (int t = 0; t < window; ++t)
                dmax = std::max(dmax, dist_step(i, j, t));
            within[i][j] = within[j][i] = (dmax <= eps);
            sep[i][j] = sep[j][i] = (dmax > 2 * eps);
        }
    // Greedy cover: upper bound.
    std::vector<char> covered(count, 0);
    long remaining = count;
    while (remaining > 0) {
        long best = -1, best_gain = -1;
        for (long i = 0; i < count; ++i) {
            long gain = 0;
            for (long j = 0; j < count; ++j)
                if (!covered[j] && within[i][j]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        for (long j = 0; j < count; ++j)
            if (within[best][j] && !covered[j]) {
                covered[j] = 1;
                --remaining;
            }
        ++b.upper;
    }
    // Greedy 2*eps-separated set: lower bound (each eps-ball of any
    // spanning set contains at most one separated point).
    std::vector<long> kept;
    for (long i = 0; i < count; ++i) {
        bool ok = true;
        for (long k : kept)
            if (!sep[i][k]) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(i);
    }
    b.lower = static_cast<long>(kept.size());
    b.exact = (b.lower == b.upper);
    return b;
}

EntropyEstimate estimate_from_counts(std::string system,
                                     std::vector<int> windows,
                                     std::vector<double> log_r)
{
    if (windows.size() != log_r.size() || windows.size() < 2)
        throw std::invalid_argument("estimate_from_counts: need >= 2 windows");
    EntropyEstimate e;
    e.system = std::move(system);
    e.windows = std::move(windows);
    e.log_r = std::move(log_r);
    std::size_t last = e.windows.size() - 1;
    e.slope = (e.log_r[last] - e.log_r[last - 1]) /
              (e.windows[last] - e.windows[last - 1]);
    for (std::size_t i = e.windows.size() / 2; i < e.windows.size(); ++i)
        e.proxy_max = std::max(e.proxy_max, e.log_r[i] / e.windows[i]);
    return e;
}

EntropyEstimate shift_estimate(int symbols, const std::vector<int>& windows,
                               int m)
{
    std::vector<double> lr;
    for (int n : windows)
        lr.push_back((n + 2 * m - 1) *
                     std::log(static_cast<double>(symbols)));
    return estimate_from_counts("shift-" + std::to_string(symbols), windows,
                                lr);
}

ChainReport factor_chain_estimates(int grid, const std::vector<int>& windows,
                                   int m)
{
    if (grid < 2 || windows.empty())
        throw std::invalid_argument("factor_chain_estimates: bad arguments");
    const int max_window = *std::max_element(windows.begin(), windows.end());
    const double eps = std::pow(2.0, -m);

    // Grid sample orbits on the surface, with member coordinates cached
    // for the min-member metric; the quotient reuses the same orbits with
    // the rotated members added.
    struct Step {
        std::vector<std::pair<double, double>> members, qmembers;
    };
    std::vector<std::vector<Step>> orbit;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            CnPoint z = cn_canonicalize(2, rat(2 * i + 1, 2 * grid),
                                        rat(2 * j + 1, 2 * grid));
            std::vector<Step> row;
            for (int t = 0; t < max_window; ++t) {
                Step s;
                for (const auto& [x, y] : cn_class_members(z, 12))
                    s.members.emplace_back(to_double(x), to_double(y));
                s.qmembers = s.members;
                CnPoint r = cn_rotate(z);
                for (const auto& [x, y] : cn_class_members(r, 12))
                    s.qmembers.emplace_back(to_double(x), to_double(y));
                row.push_back(std::move(s));
                z = baker(z);
            }
            orbit.push_back(std::move(row));
        }
    const long count = static_cast<long>(orbit.size());

    auto min_member_dist = [](const std::vector<std::pair<double, double>>& A,
                              const std::vector<std::pair<double, double>>& B) {
        double best = 1e300;
        for (const auto& [ax, ay] : A)
            for (const auto& [bx, by] : B) {
                double dx = ax - bx, dy = ay - by;
                double d2 = dx * dx + dy * dy;
                if (d2 < best) best = d2;
            }
        return std::sqrt(best);
    };
    auto surf_dist = [&](long i, long j, int t) {
        return min_member_dist(orbit[i][t].members, orbit[j][t].members);
    };
    auto quot_dist = [&](long i, long j, int t) {
        return min_member_dist(orbit[i][t].qmembers, orbit[j][t].qmembers);
    };

    std::vector<double> surf_lr, quot_lr;
    for (int n : windows) {
        SpanBounds s = spanning_bounds(count, n, eps, surf_dist);
        SpanBounds q = spanning_bounds(count, n, eps, quot_dist);
        surf_lr.push_back(std::log(static_cast<double>(s.upper)));
        // The quotient metric is dominated by the surface metric, so a
        // surface spanning set projects to a quotient spanning set.
        quot_lr.push_back(
            std::log(static_cast<double>(std::min(q.upper, s.upper))));
    }
    ChainReport rep;
    rep.shift = shift_estimate(2, windows, m);
    rep.surface = estimate_from_counts("baker-2", windows, surf_lr);
    rep.quotient = estimate_from_counts("quotient-2", windows, quot_lr);
    return rep;
}

}  // namespace carpet
