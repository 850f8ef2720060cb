#include "carpet/acceptance.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "carpet/chamanara.hpp"
#include "carpet/entropy.hpp"
#include "carpet/hyperlocal.hpp"
#include "carpet/invlim.hpp"
#include "carpet/quotient.hpp"
#include "carpet/toral.hpp"

namespace carpet {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void fact(CriterionResult& r, std::string k, std::string v)
{
    r.facts.emplace_back(std::move(k), std::move(v));
}

// ---- criteria 1 & 2 share one pass over the sequence enumeration ----

struct EnumStats {
    long cases = 0;
    long semiconj_failures = 0;
    long quotient_failures = 0;
    long side_cases = 0;
    long side_failures = 0;
    double seconds = 0;
};

EnumStats run_enumeration(int threads)
{
    struct Task {
        int n, a, b, c, d;
    };
    std::vector<Task> tasks;
    for (int n : {2, 3, 4})
        for (int k = 2; k <= 8; ++k)
            for (int a = 0; a <= k - 2; ++a)
                for (int b = 1; a + b <= k - 1; ++b)
                    for (int c = 0; a + b + c <= k - 1; ++c)
                        tasks.push_back({n, a, b, c, k - a - b - c});

    std::atomic<std::size_t> next{0};
    std::atomic<long> cases{0}, sfail{0}, qfail{0};
    auto worker = [&] {
        std::vector<int> lpre, lper, rpre, rper;
        for (;;) {
            std::size_t ti = next.fetch_add(1);
            if (ti >= tasks.size()) return;
            const Task t = tasks[ti];
            const int k = t.a + t.b + t.c + t.d;
            std::uint64_t total = 1;
            for (int i = 0; i < k; ++i) total *= t.n;
            lpre.assign(t.a, 0);
            lper.assign(t.b, 0);
            rpre.assign(t.c, 0);
            rper.assign(t.d, 0);
            long local_s = 0, local_q = 0;
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                std::uint64_t v = idx;
                auto pull = [&](std::vector<int>& dst) {
                    for (int& d : dst) {
                        d = static_cast<int>(v % t.n);
                        v /= t.n;
                    }
                };
                pull(lpre);
                pull(lper);
                pull(rpre);
                pull(rper);
                BiSequence s(t.n, lpre, lper, rpre, rper);
                CnPoint z = factor_map(s);
                CnPoint rhs = baker(z);
                if (factor_map(s.shifted()) != rhs) ++local_s;
                try {
                    if (qn_apply(qn_canonicalize(z)) != qn_canonicalize(rhs))
                        ++local_q;
                } catch (const std::logic_error&) {
                    ++local_q;
                }
            }
            cases += static_cast<long>(total);
            sfail += local_s;
            qfail += local_q;
        }
    };
    auto t0 = Clock::now();
    int nt = effective_threads(threads);
    std::vector<std::thread> pool;
    for (int i = 1; i < nt; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    EnumStats st;
    st.cases = cases;
    st.semiconj_failures = sfail;
    st.quotient_failures = qfail;

    // Side classes I_k, J_k for k <= 6, n = 2..5: equivariance both ways
    // on midpoints, quarter points and the first-interval subdivision.
    for (int n = 2; n <= 5; ++n)
        for (int kk = 1; kk <= 6; ++kk) {
            std::vector<CnPoint> pts;
            Rat lo = pow_int(n, -kk), hi = pow_int(n, 1 - kk);
            for (int j = 1; j <= 7; ++j) {
                Rat y = lo + (hi - lo) * rat(j, 8);
                pts.push_back(cn_canonicalize(n, Rat(0), y));
                pts.push_back(cn_canonicalize(n, y, Rat(0)));
            }
            for (const CnPoint& z : pts) {
                ++st.side_cases;
                bool ok = true;
                try {
                    QnPoint q = qn_canonicalize(z);
                    ok = qn_apply(q) == qn_canonicalize(baker(z)) &&
                         qn_apply(q, true) == qn_canonicalize(baker(z, true));
                } catch (const std::logic_error&) {
                    ok = false;
                }
                if (!ok) ++st.side_failures;
            }
        }
    st.seconds = since(t0);
    return st;
}

CriterionResult criterion_1(const EnumStats& st)
{
    CriterionResult r;
    r.id = 1;
    r.name = "semiconjugacy-exhaustive";
    r.seconds = st.seconds;
    r.pass = st.semiconj_failures == 0 && st.cases > (1l << 16);
    fact(r, "cases", std::to_string(st.cases));
    fact(r, "failures", std::to_string(st.semiconj_failures));
    return r;
}

CriterionResult criterion_2(const EnumStats& st)
{
    CriterionResult r;
    r.id = 2;
    r.name = "quotient-equivariance";
    r.seconds = st.seconds;
    r.pass = st.quotient_failures == 0 && st.side_failures == 0;
    fact(r, "cases", std::to_string(st.cases));
    fact(r, "failures", std::to_string(st.quotient_failures));
    fact(r, "side_cases", std::to_string(st.side_cases));
    fact(r, "side_failures", std::to_string(st.side_failures));
    return r;
}

CriterionResult criterion_3()
{
    CriterionResult r;
    r.id = 3;
    r.name = "fiber-structure";
    auto t0 = Clock::now();
    long checks = 0, failures = 0;
    auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++failures;
    };
    for (int n = 2; n <= 5; ++n) {
        auto catalog = branch_catalog(n, 6);
        auto in_catalog = [&](const QnPoint& q) {
            for (const QnPoint& c : catalog)
                if (c == q) return true;
            return false;
        };
        // Midpoint coordinates recomputed from the interval endpoint sums.
        for (int j = 1; j <= 6; ++j) {
            Rat lj = (1 + rat(1, n)) / pow_int(n, j - 1);
            QnPoint q = qn_from_square(n, Rat(0), lj / 2);
            expect(q.branch && qn_fiber(q).size() == 1 && in_catalog(q));
        }
        for (int k = 2; k <= 6; ++k) {
            Rat mk = pow_int(n, -(k - 2)) / n + pow_int(n, -(k - 1)) / n;
            QnPoint q = qn_from_square(n, mk / 2, Rat(0));
            expect(q.branch && qn_fiber(q).size() == 1 && in_catalog(q));
        }
        expect(interval_length_I(n, 1) == 1 + rat(1, n));
        for (int k = 3; k <= 7; ++k)
            expect(interval_length_J(n, k - 1) ==
                   pow_int(n, -(k - 2)) + pow_int(n, -(k - 1)));
        // Off-catalog boundary classes have fiber exactly 2.
        for (int k = 1; k <= 6; ++k) {
            Rat lo = pow_int(n, -k), hi = pow_int(n, 1 - k);
            for (int j : {1, 3}) {
                Rat t = lo + (hi - lo) * rat(j, 4);
                QnPoint qi = qn_from_square(n, Rat(0), t);
                QnPoint qj = qn_from_square(n, t, Rat(0));
                expect(!qi.branch && qn_fiber(qi).size() == 2 &&
                       !in_catalog(qi));
                expect(!qj.branch && qn_fiber(qj).size() == 2 &&
                       !in_catalog(qj));
            }
        }
        expect(qn_from_square(n, Rat(0), Rat(0)).branch);  // singular
        expect(qn_from_square(n, rat(1, 2), rat(1, 2)).branch);
        expect(qn_fiber(qn_from_square(n, rat(1, 3), rat(1, 7))).size() == 2);
    }
    r.seconds = since(t0);
    r.pass = failures == 0;
    fact(r, "checks", std::to_string(checks));
    fact(r, "failures", std::to_string(failures));
    return r;
}

CriterionResult criterion_4()
{
    CriterionResult r;
    r.id = 4;
    r.name = "periodic-density";
    auto t0 = Clock::now();
    long centers = 0, hits = 0;
    int max_period_seen = 0;
    for (int n : {2, 3}) {
        Rat eps = pow_int(n, -4);
        for (int i = 0; i < 32; ++i)
            for (int j = 0; j < 32; ++j) {
                CnPoint c = cn_canonicalize(n, rat(2 * i + 1, 64),
                                            rat(2 * j + 1, 64));
                ++centers;
                auto w = periodic_density_witness(c, eps, 10);
                if (w) {
                    ++hits;
                    max_period_seen = std::max(max_period_seen, w->period);
                }
            }
    }
    r.seconds = since(t0);
    r.pass = hits == centers;
    fact(r, "centers", std::to_string(centers));
    fact(r, "hits", std::to_string(hits));
    fact(r, "max_period_used", std::to_string(max_period_seen));
    return r;
}

CriterionResult criterion_5()
{
    CriterionResult r;
    r.id = 5;
    r.name = "entropy-values";
    auto t0 = Clock::now();
    bool ok = true;

    double h2 = bernoulli_entropy(ProbabilityVector({rat(1, 2), rat(1, 2)}));
    ok &= std::abs(h2 - std::log(2.0)) <= 1e-12;
    fact(r, "bernoulli_half", fmt(h2));

    for (double h : {0.1, 1.0, std::log(3.0), 5.0}) {
        Realization real = realize_entropy(h, 1e-9);
        ok &= std::abs(real.achieved - h) <= 1e-9;
        fact(r, "realize_" + fmt(h),
             "N=" + std::to_string(real.N) + " h=" + fmt(real.achieved));
    }

    double cat = ToralAuto::cat().entropy();
    double ref = std::log((3.0 + std::sqrt(5.0)) / 2.0);
    ok &= std::abs(cat - ref) <= 1e-12;
    fact(r, "cat_entropy", fmt(cat));

    r.seconds = since(t0);
    r.pass = ok;
    return r;
}

CriterionResult criterion_6(int threads)
{
    (void)threads;
    CriterionResult r;
    r.id = 6;
    r.name = "spanning-estimates";
    auto t0 = Clock::now();
    bool ok = true;

    EntropyEstimate shift = shift_estimate(2, {8, 9, 10, 11, 12}, 4);
    ok &= std::abs(shift.slope - std::log(2.0)) <= 0.10;
    fact(r, "shift_slope", fmt(shift.slope));

    // Identity map: the same 16 points at every time step.
    std::vector<double> pts;
    for (int i = 0; i < 16; ++i) pts.push_back(i / 16.0);
    auto ident = [&](long i, long j, int) { return std::fabs(pts[i] - pts[j]); };
    std::vector<double> lr;
    std::vector<int> win{4, 8, 12};
    for (int n : win)
        lr.push_back(std::log(
            static_cast<double>(spanning_bounds(16, n, 1.0 / 16, ident).upper)));
    EntropyEstimate ide = estimate_from_counts("identity", win, lr);
    ok &= ide.slope == 0.0;
    fact(r, "identity_slope", fmt(ide.slope));

    ChainReport chain = factor_chain_estimates(16, {2, 3, 4, 5, 6}, 4);
    ok &= chain.surface.slope <= chain.shift.slope + 0.05;
    ok &= chain.quotient.slope <= chain.surface.slope + 0.05;
    fact(r, "chain_shift_slope", fmt(chain.shift.slope));
    fact(r, "chain_surface_slope", fmt(chain.surface.slope));
    fact(r, "chain_quotient_slope", fmt(chain.quotient.slope));

    r.seconds = since(t0);
    r.pass = ok;
    return r;
}

CriterionResult criterion_7(unsigned long seed)
{
    CriterionResult r;
    r.id = 7;
    r.name = "excursion-bound";
    auto t0 = Clock::now();
    HypModel<Rat> L(Rat(2), rat(1, 10));
    bool ok = true;
    for (bool mirror : {false, true}) {
        auto starts = qualifying_starts(L, 1000, seed + (mirror ? 1 : 0), mirror);
        auto extra = boundary_starts(L, 3, mirror);
        starts.insert(starts.end(), extra.begin(), extra.end());
        HalfBoundReport rep = verify_half_bound(L, starts, 500, mirror);
        ok &= rep.ok() && rep.qualifying >= 1000 &&
              rep.max_proportion <= rat(1, 2);
        std::string side = mirror ? "mirror_" : "";
        fact(r, side + "qualifying", std::to_string(rep.qualifying));
        fact(r, side + "max_proportion", rat_str(rep.max_proportion));
        fact(r, side + "witness_failures",
             std::to_string(rep.witness_failures));
    }
    r.seconds = since(t0);
    r.pass = ok;
    return r;
}

CriterionResult criterion_8()
{
    CriterionResult r;
    r.id = 8;
    r.name = "near-homeomorphism";
    auto t0 = Clock::now();
    ZipModel zm;
    bool ok = true;
    Rat prev = -1;
    std::vector<Rat> achieved{2, 2, 2};  // per target 1e-1, 1e-2, 1e-3
    const Rat targets[3] = {rat(1, 10), rat(1, 100), rat(1, 1000)};
    for (int k = 1; k <= 12; ++k) {
        Rat delta = zm.zeta / pow_int(2, k);
        ZipReport rep = zip_maps(zm, delta, 32);
        ok &= rep.consistent;
        if (prev >= 0) ok &= rep.sup_dist <= prev;  // monotone
        prev = rep.sup_dist;
        for (int i = 0; i < 3; ++i)
            if (rep.sup_dist < targets[i] && rep.sup_dist < achieved[i])
                achieved[i] = rep.sup_dist;
    }
    for (int i = 0; i < 3; ++i) {
        ok &= achieved[i] < targets[i];
        fact(r, "sup_dist_below_" + rat_str(targets[i]), rat_str(achieved[i]));
    }
    r.seconds = since(t0);
    r.pass = ok;
    return r;
}

CriterionResult criterion_9(unsigned long seed)
{
    CriterionResult r;
    r.id = 9;
    r.name = "ball-projection";
    auto t0 = Clock::now();
    BlowupAtlas atlas = default_atlas();
    bool ok = true;
    for (bool mirror : {false, true}) {
        BallProjReport rep = ball_projection_check(atlas, rat(1, 16), 10000,
                                                   seed + (mirror ? 3 : 2),
                                                   mirror);
        ok &= rep.ok && rep.r_star > 0;
        std::string side = mirror ? "z2_" : "z1_";
        fact(r, side + "r_star", fmt(rep.r_star));
        fact(r, side + "inside", std::to_string(rep.inside));
        fact(r, side + "violators_sampled", std::to_string(rep.violators));
    }
    r.seconds = since(t0);
    r.pass = ok;
    return r;
}

CriterionResult criterion_10()
{
    CriterionResult r;
    r.id = 10;
    r.name = "shadowing-falsifiers";
    auto t0 = Clock::now();
    BlowupAtlas atlas = default_atlas();
    bool ok = true;
    FalsifyReport app =
        app_falsify(atlas, rat(1, 64), rat(1, 10), rat(1, 100), 100, 12);
    FalsifyReport spec = spec_falsify(atlas, rat(1, 100), 5, 12);
    for (const FalsifyReport* rep : {&app, &spec}) {
        long covered = 0;
        for (const TraceCategory& c : rep->traces) covered += c.candidates;
        // The circle category certifies the blown point's direction fiber,
        // which sits over the single origin candidate.
        ok &= rep->survivors == 0 && !rep->traces.empty() &&
              covered == rep->total_candidates &&
              rep->epistemic_status.find("not a proof") != std::string::npos;
    }
    fact(r, "app_candidates", std::to_string(app.total_candidates));
    fact(r, "app_survivors", std::to_string(app.survivors));
    fact(r, "spec_candidates", std::to_string(spec.total_candidates));
    fact(r, "spec_survivors", std::to_string(spec.survivors));
    fact(r, "label", "evidence-not-proof");
    r.seconds = since(t0);
    r.pass = ok;
    return r;
}

std::string serialize_facts(const std::vector<CriterionResult>& rs)
{
    std::ostringstream os;
    for (const auto& r : rs) {
        os << r.id << "|" << r.name << "|" << (r.pass ? 1 : 0);
        for (const auto& [k, v] : r.facts) os << "|" << k << "=" << v;
        os << "\n";
    }
    return os.str();
}

CriterionResult criterion_11(unsigned long seed)
{
    CriterionResult r;
    r.id = 11;
    r.name = "determinism";
    auto t0 = Clock::now();
    // The only randomized criteria are 7 and 9; everything else carries no
    // RNG state. Running them twice from the same seed must reproduce
    // every reported fact byte for byte (the CLI test additionally diffs
    // two full `verify --all` reports end to end).
    auto run_once = [&] {
        std::vector<CriterionResult> rs;
        rs.push_back(criterion_7(seed));
        rs.push_back(criterion_9(seed));
        return serialize_facts(rs);
    };
    std::string first = run_once(), second = run_once();
    r.pass = (first == second);
    fact(r, "seed", std::to_string(seed));
    fact(r, "rerun_identical", r.pass ? "yes" : "no");
    r.seconds = since(t0);
    return r;
}

}  // namespace

int effective_threads(int requested)
{
    int n = requested > 0 ? requested
                          : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("CARPET_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt)
{
    std::vector<CriterionResult> out;
    EnumStats st = run_enumeration(opt.threads);
    out.push_back(criterion_1(st));
    out.push_back(criterion_2(st));
    out.push_back(criterion_3());
    out.push_back(criterion_4());
    out.push_back(criterion_5());
    out.push_back(criterion_6(opt.threads));
    out.push_back(criterion_7(opt.seed));
    out.push_back(criterion_8());
    out.push_back(criterion_9(opt.seed));
    out.push_back(criterion_10());
    out.push_back(criterion_11(opt.seed));
    return out;
}

std::string format_line(const CriterionResult& r)
{
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " criterion-" << r.id << " " << r.name
       << " (" << fmt(r.seconds) << "s)";
    for (const auto& [k, v] : r.facts) os << " " << k << "=" << v;
    return os.str();
}

}  // namespace carpet
