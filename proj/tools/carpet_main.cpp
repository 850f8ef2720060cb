#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "carpet/acceptance.hpp"
#include "carpet/chamanara.hpp"
#include "carpet/entropy.hpp"
#include "carpet/hyperlocal.hpp"
#include "carpet/invlim.hpp"
#include "carpet/quotient.hpp"
#include "carpet/toral.hpp"

using json = nlohmann::ordered_json;
using namespace carpet;

namespace {

Rat parse_rat(const std::string& s)
{
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw CLI::ValidationError("expected a rational like 3/10, got " + s);
    r.canonicalize();
    return r;
}

std::pair<Rat, Rat> parse_point(const std::string& s)
{
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("expected \"x,y\", got " + s);
    return {parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
}

void emit(const json& j, const std::string& out)
{
    std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary | std::ios::trunc);
        f << text;
    }
}

// ---- deterministic SVG helpers ----

std::string svg_header(int w, int h)
{
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
       << "\">\n";
    return os.str();
}

std::string svg_region_plot(const Rat& lambda, const Rat& eps)
{
    // The box D = (-le, le)^2 scaled to a 400x400 canvas, sectors colored,
    // the band E shaded, the inner core outlined.
    double le = to_double(lambda * eps), e = to_double(eps);
    double s = 180.0 / le;  // chart unit -> pixels, center (200,200)
    auto X = [&](double x) { return 200 + s * x; };
    auto Y = [&](double y) { return 200 - s * y; };
    std::ostringstream os;
    os << svg_header(400, 400);
    os << "<rect x=\"" << X(-le) << "\" y=\"" << Y(le) << "\" width=\""
       << 2 * s * le << "\" height=\"" << 2 * s * le
       << "\" fill=\"#f2f2f2\" stroke=\"black\"/>\n";
    auto tri = [&](double x1, double y1, double x2, double y2, double x3,
                   double y3, const char* fill) {
        os << "<polygon points=\"" << X(x1) << "," << Y(y1) << " " << X(x2)
           << "," << Y(y2) << " " << X(x3) << "," << Y(y3) << "\" fill=\""
           << fill << "\" fill-opacity=\"0.5\"/>\n";
    };
    tri(0, 0, le, le, le, -le, "#d55");   // right sector
    tri(0, 0, -le, le, -le, -le, "#5d5"); // left sector
    tri(0, 0, -le, le, le, le, "#55d");   // top sector
    tri(0, 0, -le, -le, le, -le, "#dd5"); // bottom sector
    os << "<rect x=\"" << X(-e) << "\" y=\"" << Y(e) << "\" width=\""
       << 2 * s * e << "\" height=\"" << 2 * s * e
       << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 2\"/>\n";
    os << "<line x1=\"" << X(-le) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(le)
       << "\" y2=\"" << Y(0) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(-le) << "\" x2=\"" << X(0)
       << "\" y2=\"" << Y(le) << "\" stroke=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string svg_identification_plot(int base)
{
    // The unit square with the geometric side intervals labeled.
    std::ostringstream os;
    os << svg_header(440, 440);
    auto X = [](double x) { return 20 + 400 * x; };
    auto Y = [](double y) { return 420 - 400 * y; };
    os << "<rect x=\"20\" y=\"20\" width=\"400\" height=\"400\" "
          "fill=\"white\" stroke=\"black\"/>\n";
    double hi = 1.0;
    for (int k = 1; k <= 6; ++k) {
        double lo = hi / base;
        os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(lo) << "\" x2=\""
           << X(0.03) << "\" y2=\"" << Y(lo) << "\" stroke=\"red\"/>\n";
        os << "<text x=\"" << X(0.035) << "\" y=\"" << Y((lo + hi) / 2)
           << "\" font-size=\"12\">I" << k << "</text>\n";
        os << "<line x1=\"" << X(lo) << "\" y1=\"" << Y(0) << "\" x2=\""
           << X(lo) << "\" y2=\"" << Y(0.03) << "\" stroke=\"blue\"/>\n";
        os << "<text x=\"" << X((lo + hi) / 2) << "\" y=\"" << Y(0.035)
           << "\" font-size=\"12\">J" << k << "</text>\n";
        os << "<line x1=\"" << X(1) << "\" y1=\"" << Y(1 - lo) << "\" x2=\""
           << X(0.97) << "\" y2=\"" << Y(1 - lo) << "\" stroke=\"red\"/>\n";
        os << "<line x1=\"" << X(1 - lo) << "\" y1=\"" << Y(1) << "\" x2=\""
           << X(1 - lo) << "\" y2=\"" << Y(0.97) << "\" stroke=\"blue\"/>\n";
        hi = lo;
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_orbit_plot(const std::vector<std::pair<double, double>>& pts)
{
    std::ostringstream os;
    os << svg_header(440, 440);
    os << "<rect x=\"20\" y=\"20\" width=\"400\" height=\"400\" "
          "fill=\"white\" stroke=\"black\"/>\n";
    for (const auto& [x, y] : pts)
        os << "<circle cx=\"" << 20 + 400 * x << "\" cy=\"" << 420 - 400 * y
           << "\" r=\"2.5\" fill=\"#c33\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string svg_zip_plot(const Rat& zeta, const Rat& delta)
{
    std::ostringstream os;
    os << svg_header(440, 220);
    os << "<circle cx=\"110\" cy=\"110\" r=\"100\" fill=\"white\" "
          "stroke=\"black\"/>\n";
    os << "<line x1=\"110\" y1=\"110\" x2=\"" << 110 + 100 * to_double(zeta)
       << "\" y2=\"110\" stroke=\"red\" stroke-width=\"3\"/>\n";
    os << "<circle cx=\"330\" cy=\"110\" r=\"100\" fill=\"white\" "
          "stroke=\"black\"/>\n";
    os << "<line x1=\"330\" y1=\"110\" x2=\"" << 330 + 100 * to_double(delta)
       << "\" y2=\"110\" stroke=\"red\" stroke-width=\"3\"/>\n";
    os << "</svg>\n";
    return os.str();
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << text;
}

json point_json(const CnPoint& z)
{
    json j;
    j["class"] = z.str();
    if (z.kind != CnPoint::Kind::Singular) {
        j["x"] = rat_str(z.xr());
        j["y"] = rat_str(z.yr());
    }
    return j;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"carpet: exact baker-surface, quotient-sphere and "
                 "inverse-limit dynamics toolkit"};
    app.require_subcommand(0, 1);
    std::string out;
    app.add_option("--out", out, "write the JSON report here (default stdout)");

    // chamanara
    auto* cham = app.add_subcommand("chamanara", "baker map on the surface");
    int base = 2, period_max = 6, steps = 10;
    bool check_semiconj = false;
    std::string orbit_start;
    cham->add_option("--base", base);
    cham->add_flag("--check-semiconj", check_semiconj);
    cham->add_option("--period-max", period_max);
    cham->add_option("--orbit", orbit_start, "start point \"p/q,r/s\"");
    cham->add_option("--steps", steps);

    // quotient
    auto* quot = app.add_subcommand("quotient", "sphere quotient");
    int depth = 6;
    std::string fiber_point;
    quot->add_option("--base", base);
    quot->add_option("--catalog-depth", depth);
    quot->add_option("--fiber", fiber_point, "point \"p/q,r/s\"");

    // toral
    auto* tor = app.add_subcommand("toral", "torus automorphisms");
    std::string matrix = "2,1,1,1";
    long periodic_q = 0;
    tor->add_option("--matrix", matrix, "a,b,c,d");
    tor->add_option("--orbit", orbit_start);
    tor->add_option("--steps", steps);
    tor->add_option("--periodic", periodic_q);

    // hyperlocal
    auto* hyp = app.add_subcommand("hyperlocal", "excursion analysis");
    std::string lambda_s = "2", eps_s = "1/10";
    long samples = 1000;
    unsigned long seed = 42;
    bool mirror = false;
    hyp->add_option("--lambda", lambda_s);
    hyp->add_option("--eps", eps_s);
    hyp->add_option("--samples", samples);
    hyp->add_option("--seed", seed);
    hyp->add_flag("--mirror", mirror);

    // entropy
    auto* ent = app.add_subcommand("entropy", "entropy computations");
    std::string system = "bernoulli", pvec = "1/2,1/2";
    double realize = -1, tol = 1e-9;
    ent->add_option("--system", system);
    ent->add_option("--p", pvec);
    ent->add_option("--realize", realize);
    ent->add_option("--tol", tol);

    // invlim
    auto* inv = app.add_subcommand("invlim", "inverse-limit tools");
    int inv_depth = 3, resolution = 12;
    bool do_spec = false, do_app = false, do_ball = false;
    std::string blow = "fixed";
    inv->add_option("--depth", inv_depth);
    inv->add_option("--blow", blow);
    inv->add_flag("--spec-falsify", do_spec);
    inv->add_flag("--app-falsify", do_app);
    inv->add_flag("--ball-check", do_ball);
    inv->add_option("--resolution", resolution);
    inv->add_option("--seed", seed);

    // verify
    auto* ver = app.add_subcommand("verify", "acceptance battery");
    bool all = false;
    int threads = 0;
    ver->add_flag("--all", all);
    ver->add_option("--seed", seed);
    ver->add_option("--threads", threads);

    // plot
    auto* plt = app.add_subcommand("plot", "SVG diagrams");
    std::string kind = "region", plot_out = "plot.svg";
    plt->add_option("--kind", kind,
                    "region | identification | orbit | zip");
    plt->add_option("--svg-out", plot_out);
    plt->add_option("--base", base);
    plt->add_option("--lambda", lambda_s);
    plt->add_option("--eps", eps_s);
    plt->add_option("--orbit", orbit_start);
    plt->add_option("--steps", steps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        json report;
        bool failed = false;

        if (cham->parsed()) {
            report["command"] = "chamanara";
            report["base"] = base;
            if (check_semiconj) {
                long cases = 0, failures = 0;
                for (int p = 1; p <= period_max; ++p)
                    for (const BiSequence& s : enumerate_periodic(base, p)) {
                        ++cases;
                        if (!check_semiconjugacy(s).ok) ++failures;
                    }
                report["semiconjugacy"] = {{"cases", cases},
                                           {"failures", failures}};
                failed |= failures != 0;
            }
            if (!orbit_start.empty()) {
                auto [x, y] = parse_point(orbit_start);
                CnPoint z = cn_canonicalize(base, x, y);
                json orb = json::array();
                for (int i = 0; i <= steps; ++i) {
                    orb.push_back(point_json(z));
                    z = baker(z);
                }
                report["orbit"] = orb;
            }
        } else if (quot->parsed()) {
            report["command"] = "quotient";
            report["base"] = base;
            json cat = json::array();
            for (const QnPoint& q : branch_catalog(base, depth))
                cat.push_back(q.str());
            report["branch_catalog"] = cat;
            if (!fiber_point.empty()) {
                auto [x, y] = parse_point(fiber_point);
                QnPoint q = qn_from_square(base, x, y);
                json fib = json::array();
                for (const CnPoint& z : qn_fiber(q)) fib.push_back(z.str());
                report["class"] = q.str();
                report["fiber"] = fib;
            }
        } else if (tor->parsed()) {
            report["command"] = "toral";
            long a, b, c, d;
            if (std::sscanf(matrix.c_str(), "%ld,%ld,%ld,%ld", &a, &b, &c,
                            &d) != 4)
                throw CLI::ValidationError("--matrix expects a,b,c,d");
            ToralAuto A(a, b, c, d);
            report["matrix"] = {a, b, c, d};
            report["entropy"] = A.entropy();
            if (!orbit_start.empty()) {
                auto [x, y] = parse_point(orbit_start);
                TorusPoint z(x, y);
                json orb = json::array();
                for (int i = 0; i <= steps; ++i) {
                    orb.push_back(z.str());
                    z = A.apply(z);
                }
                report["orbit"] = orb;
            }
            if (periodic_q > 0) {
                json orbits = json::array();
                for (const TorusOrbit& o : periodic_points(A, periodic_q)) {
                    json jo;
                    jo["period"] = o.period();
                    jo["start"] = o.points.front().str();
                    orbits.push_back(jo);
                }
                report["periodic_orbits"] = orbits;
            }
        } else if (hyp->parsed()) {
            report["command"] = "hyperlocal";
            HypModel<Rat> L(parse_rat(lambda_s), parse_rat(eps_s));
            auto starts = qualifying_starts(L, samples, seed, mirror);
            HalfBoundReport rep = verify_half_bound(L, starts, 500, mirror);
            report["samples"] = rep.samples;
            report["qualifying"] = rep.qualifying;
            report["max_proportion"] = rat_str(rep.max_proportion);
            report["witness_failures"] = rep.witness_failures;
            report["bound_holds"] = rep.ok();
            failed |= !rep.ok();
        } else if (ent->parsed()) {
            report["command"] = "entropy";
            if (realize > 0) {
                Realization real = realize_entropy(realize, tol);
                report["target"] = realize;
                report["N"] = real.N;
                json pj = json::array();
                for (const Rat& p : real.P.p) pj.push_back(rat_str(p));
                report["P"] = pj;
                report["achieved"] = real.achieved;
            } else if (system == "bernoulli") {
                std::vector<Rat> ps;
                std::stringstream ss(pvec);
                std::string tokn;
                while (std::getline(ss, tokn, ',')) ps.push_back(parse_rat(tokn));
                report["entropy"] = bernoulli_entropy(ProbabilityVector(ps));
            } else if (system == "cat") {
                report["entropy"] = ToralAuto::cat().entropy();
            } else {
                throw CLI::ValidationError("unknown --system " + system);
            }
        } else if (inv->parsed()) {
            report["command"] = "invlim";
            if (blow != "fixed")
                throw CLI::ValidationError("only --blow fixed is supported");
            BlowupAtlas atlas = default_atlas();
            report["depth"] = inv_depth;
            auto falsify_json = [](const FalsifyReport& f) {
                json j;
                j["property"] = f.property;
                j["status"] = f.epistemic_status;
                j["resolution_bits"] = f.resolution_bits;
                j["candidates"] = f.total_candidates;
                j["survivors"] = f.survivors;
                json ts = json::array();
                for (const TraceCategory& c : f.traces)
                    ts.push_back({{"certificate", c.certificate},
                                  {"candidates", c.candidates},
                                  {"example", c.example_trace}});
                j["traces"] = ts;
                return j;
            };
            if (do_app) {
                FalsifyReport f = app_falsify(atlas, rat(1, 64), rat(1, 10),
                                              rat(1, 100), 100, resolution);
                report["approximate_product"] = falsify_json(f);
                failed |= f.survivors != 0;
            }
            if (do_spec) {
                FalsifyReport f =
                    spec_falsify(atlas, rat(1, 100), 5, resolution);
                report["specification"] = falsify_json(f);
                failed |= f.survivors != 0;
            }
            if (do_ball) {
                for (bool m : {false, true}) {
                    BallProjReport rep = ball_projection_check(
                        atlas, rat(1, 16), 10000, seed + (m ? 1 : 0), m);
                    json j;
                    j["r_star"] = rep.r_star;
                    j["inside"] = rep.inside;
                    j["ok"] = rep.ok;
                    report[m ? "ball_z2" : "ball_z1"] = j;
                    failed |= !rep.ok;
                }
            }
        } else if (ver->parsed()) {
            report["command"] = "verify";
            report["seed"] = seed;
            AcceptanceOptions opt;
            opt.seed = seed;
            opt.threads = threads;
            json crits = json::array();
            for (const CriterionResult& r : run_acceptance(opt)) {
                json j;
                j["id"] = r.id;
                j["name"] = r.name;
                j["pass"] = r.pass;
                json facts;
                for (const auto& [k, v] : r.facts) facts[k] = v;
                j["facts"] = facts;
                crits.push_back(j);
                failed |= !r.pass;
                std::cerr << format_line(r) << "\n";
            }
            report["criteria"] = crits;
            report["all_pass"] = !failed;
        } else if (plt->parsed()) {
            if (kind == "region") {
                write_text(plot_out,
                           svg_region_plot(parse_rat(lambda_s), parse_rat(eps_s)));
            } else if (kind == "identification") {
                write_text(plot_out, svg_identification_plot(base));
            } else if (kind == "orbit") {
                std::vector<std::pair<double, double>> pts;
                if (!orbit_start.empty()) {
                    auto [x, y] = parse_point(orbit_start);
                    CnPoint z = cn_canonicalize(base, x, y);
                    for (int i = 0; i <= steps; ++i) {
                        if (z.kind != CnPoint::Kind::Singular)
                            pts.emplace_back(to_double(z.xr()),
                                             to_double(z.yr()));
                        z = baker(z);
                    }
                }
                write_text(plot_out, svg_orbit_plot(pts));
            } else if (kind == "zip") {
                write_text(plot_out, svg_zip_plot(rat(1, 2), rat(1, 8)));
            } else {
                throw CLI::ValidationError("unknown plot kind " + kind);
            }
            report["command"] = "plot";
            report["kind"] = kind;
            report["file"] = plot_out;
        } else {
            std::cout << app.help() << "\n";
            return 0;
        }

        emit(report, out);
        return failed ? 1 : 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
