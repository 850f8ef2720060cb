#ifndef CARPET_ENTROPY_HPP
#define CARPET_ENTROPY_HPP

#include <functional>
#include <string>
#include <vector>

#include "carpet/symbolic.hpp"

namespace carpet {

/// -sum p_i log p_i with 0 log 0 = 0.
double bernoulli_entropy(const ProbabilityVector& P);

struct Realization {
    int N;
    ProbabilityVector P;
    double achieved;
};

/// Smallest N >= 2 with log N >= h, and a probability vector on N symbols
/// whose Bernoulli entropy is within tol of h, found by bisection along
/// the one-parameter family (1-t, t/(N-1), ..., t/(N-1)).
Realization realize_entropy(double h, double tol);

/// Minimal (window, eps)-spanning cardinality of the full shift on
/// `symbols` symbols under dist 2^{-agreement radius}, for
/// eps in [2^{-m}, 2^{-(m-1)}): a Bowen ball is a cylinder on
/// window + 2m - 1 coordinates, so the count is symbols^(window+2m-1).
mpz_class shift_spanning_exact(int symbols, int window, int m);

struct SpanBounds {
    long lower = 0, upper = 0;
    bool exact = false;  // set only when lower == upper
};

/// Certified bounds on the minimal (window, eps)-spanning subset of a
/// finite sample set: greedy cover above, 2*eps-separated set below.
/// dist_step(i, j, t) is the coordinate distance at orbit time t.
SpanBounds spanning_bounds(
    long count, int window, double eps,
    const std::function<double(long, long, int)>& dist_step);

struct EntropyEstimate {
    std::string system;
    std::vector<int> windows;
    std::vector<double> log_r;  // log spanning count (upper bound) per window
    /// Difference quotient of log_r over the final window pair — the
    /// headline growth-rate estimate.
    double slope = 0;
    /// max over the last half of log_r/window: a documented finite-window
    /// stand-in for the limsup, biased by the additive constant.
    double proxy_max = 0;
};

EntropyEstimate estimate_from_counts(std::string system,
                                     std::vector<int> windows,
                                     std::vector<double> log_r);

/// Exact full-shift estimate (cylinder counts) along a window schedule.
EntropyEstimate shift_estimate(int symbols, const std::vector<int>& windows,
                               int m);

struct ChainReport {
    EntropyEstimate shift, surface, quotient;
};

/// Growth-rate estimates along the factor chain: full 2-shift, the base-2
/// baker surface on a centered grid of grid^2 sample orbits, and its
/// sphere quotient (same grid projected). eps = 2^{-m}.
ChainReport factor_chain_estimates(int grid, const std::vector<int>& windows,
                                   int m);

}  // namespace carpet

#endif
