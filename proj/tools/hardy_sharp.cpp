// hardy-sharp: sharp constants of weighted fractional Hardy inequalities, the
// verification suites, and parameter-grid sweeps.
//
// Exit codes: 0 ok, 1 verification failure, 2 validation failure, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hardy/constants.hpp"
#include "hardy/core.hpp"
#include "hardy/geometry.hpp"
#include "hardy/profiles.hpp"
#include "hardy/sweep.hpp"
#include "hardy/verifier.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_fail = 1;
constexpr int exit_validation = 2;
constexpr int exit_numerical = 3;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

hardy::Regime parse_regime(const std::string& name) {
    if (name == "full") return hardy::Regime::full;
    if (name == "full-punctured") return hardy::Regime::full_punctured;
    if (name == "half") return hardy::Regime::half;
    if (name == "interval") return hardy::Regime::interval;
    throw hardy::validation_error("unknown regime '" + name + "'");
}

struct ConstantArgs {
    std::string regime = "full";
    hardy::HardyParams params;
    std::string method = "auto";
};

int run_constant(const ConstantArgs& args) {
    using namespace hardy;
    const Regime regime = parse_regime(args.regime);
    const HardyParams& q = args.params;
    const bool half_like = (regime == Regime::half || regime == Regime::interval);

    std::string method = args.method;
    if (method == "auto") method = (q.p == 2.0 || q.s == 0.0) ? "closed" : "integral";

    auto closed_route = [&]() -> ConstantReport {
        if (q.s == 0.0)
            return half_like ? constants::constant_D_s0_closed_p2(q)
                             : constants::constant_C_s0_closed_p2(q);
        return half_like ? constants::constant_D_closed_p2(q)
                         : constants::constant_C_closed_p2(q);
    };
    auto integral_route = [&]() -> ConstantReport {
        require_admissible(q, regime, "constant");
        return half_like ? constants::constant_D(q) : constants::constant_C(q);
    };

    if (method == "closed") {
        ConstantReport rep = closed_route();
        std::cout << "constant = " << fmt(rep.constant) << "  (" << to_string(rep.method)
                  << ", regime " << to_string(regime) << ")\n";
        return exit_ok;
    }
    if (method == "integral" || method == "limit-s0") {
        ConstantReport rep = integral_route();
        std::cout << "constant = " << fmt(rep.constant) << "  (" << to_string(rep.method)
                  << ", regime " << to_string(regime) << ", abs_err "
                  << fmt(rep.quad ? rep.quad->abs_err : 0.0) << ")\n";
        return exit_ok;
    }
    if (method == "both") {
        ConstantReport ri = integral_route();
        ConstantReport rc = closed_route();
        const double denom = std::max(std::abs(rc.constant), 1e-300);
        const double disc = std::abs(ri.constant - rc.constant) / denom;
        std::cout << "constant(integral)  = " << fmt(ri.constant) << "\n"
                  << "constant(closed)    = " << fmt(rc.constant) << "\n"
                  << "discrepancy         = " << fmt(disc) << "\n";
        return disc <= 100 * hardy::tol::closed_vs_quad ? exit_ok : exit_numerical;
    }
    std::cerr << "unknown method '" << method << "'\n";
    return exit_validation;
}

struct VerifyArgs {
    std::string suite;
    std::string regime = "full";
    std::string shape = "ball";
    hardy::HardyParams params{1, 0.4, 2.0, 0.1, 0.2};
};

int run_verify(const VerifyArgs& args) {
    using namespace hardy;
    using profiles::ProfileFunction;
    const HardyParams q = args.params;
    int failures = 0;
    auto report = [&failures](const std::string& label, double margin, double tolv) {
        const bool ok = margin >= -tolv;
        if (!ok) ++failures;
        std::cout << (ok ? "  ok   " : "  FAIL ") << label << "  margin = " << fmt(margin)
                  << "\n";
    };

    if (args.suite == "hardy-full" || args.suite == "hardy-half") {
        const bool half = args.suite == "hardy-half";
        const std::vector<ProfileFunction> profs = {
            ProfileFunction::tent(1.0, 2.0), ProfileFunction::smooth_bump(0.5, 3.0),
            ProfileFunction::truncated_power(-0.3, 0.25, 4.0)};
        const char* names[] = {"tent(1,2)", "bump(0.5,3)", "power(-0.3)"};
        int i = 0;
        for (const auto& u : profs) {
            verifier::SeminormBreakdown br = half ? verifier::rayleigh_half_profile(q, u)
                                                  : verifier::rayleigh_full_radial(q, u);
            const double quot = br.quotient();
            report(std::string(names[i++]) + "  quotient " + fmt(quot) + " vs constant " +
                       fmt(br.rhs_constant),
                   (quot - br.rhs_constant) / std::max(quot, 1e-300), 1e-6);
        }
    } else if (args.suite == "identity-p2") {
        HardyParams q2 = q;
        q2.p = 2.0;
        for (auto regime : {Regime::full, Regime::half}) {
            if (args.regime == "half" && regime != Regime::half) continue;
            if (args.regime == "full" && regime != Regime::full) continue;
            const double resid = verifier::ground_state_identity_p2(
                q2, ProfileFunction::smooth_bump(1.0, 2.0), regime);
            report(std::string("ground-state identity, ") + to_string(regime) + ", residual " +
                       fmt(resid),
                   1e-6 - resid, 0.0);
        }
    } else if (args.suite == "remainder") {
        HardyParams q2 = q;
        if (q2.p < 2.0) q2.p = 3.0;
        const Regime regime = parse_regime(args.regime);
        const double margin = verifier::remainder_positivity(
            q2, ProfileFunction::tent(1.0, 2.0), regime);
        report("remainder margin (relative)", margin, 1e-6);
    } else if (args.suite == "hsm-chain") {
        auto rep = verifier::hsm_positivity_chain(q, ProfileFunction::tent(1.0, 2.0));
        report("drop-region gap", rep.gap_drop, 1e-8 * rep.full_mixed);
        report("ratio-weight gap", rep.gap_ratio, 1e-8 * rep.full_mixed);
        report("half-symmetric identity residual", 1e-6 - rep.eq_residual, 0.0);
    } else if (args.suite == "interval") {
        HardyParams qi = q;
        qi.d = 1;
        if (!(qi.sp() > 1.0 + qi.alpha + qi.beta)) {
            qi.s = 0.8;
            qi.p = 2.0;
            qi.alpha = -0.2;
            qi.beta = -0.3;
        }
        auto br =
            verifier::interval_inequality(ProfileFunction::smooth_bump(0.375, 0.625), qi);
        report("interval quotient " + fmt(br.quotient()) + " vs D " + fmt(br.rhs_constant),
               (br.quotient() - br.rhs_constant) / std::max(br.quotient(), 1e-300), 1e-6);
    } else if (args.suite == "mdist") {
        using geometry::ConvexBody;
        using geometry::Point;
        const double a = q.sp() - q.alpha - q.beta > 0 ? q.sp() - q.alpha - q.beta : 1.0;
        ConvexBody body = args.shape == "half-space" ? ConvexBody::half_space(3)
                          : args.shape == "box"
                              ? ConvexBody::box(3, Point{{-1.0, -0.8, -0.6}},
                                                Point{{1.0, 0.9, 0.7}})
                              : ConvexBody::ball(3, 1.0);
        std::mt19937_64 rng(2026);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        int checked = 0;
        double worst = std::numeric_limits<double>::infinity();
        while (checked < 100) {
            Point x{{unif(rng), unif(rng), std::abs(unif(rng)) + 1e-3}};
            if (args.shape != "half-space") x[2] = unif(rng);
            if (!body.contains(x)) continue;
            ++checked;
            const double m = geometry::pseudo_distance_m(body, x, a, 1e-9);
            const double dist = body.dist_boundary(x);
            worst = std::min(worst, dist - m);
            if (args.shape == "half-space") worst = std::min(worst, -std::abs(m - x[2]) + 1e-8);
        }
        report("m_a <= dist at 100 points (worst slack)", worst, 1e-8);
    } else if (args.suite == "sharpness") {
        const Regime regime = parse_regime(args.regime);
        const std::vector<double> deltas{0.4, 0.2, 0.1, 0.05, 0.02, 0.01};
        auto quots = verifier::near_optimal_quotients(q, regime, deltas);
        const double constant = (regime == Regime::half) ? verifier::detail::half_constant(q)
                                                         : verifier::detail::full_constant(q);
        bool monotone = true;
        for (std::size_t i = 0; i + 1 < quots.size(); ++i)
            if (quots[i + 1].second > quots[i].second * (1.0 + 1e-9)) monotone = false;
        for (auto [delta, quot] : quots)
            std::cout << "  delta = " << fmt(delta) << "  quotient = " << fmt(quot)
                      << "  gap = " << fmt(quot / constant - 1.0) << "\n";
        report("quotients non-increasing", monotone ? 1.0 : -1.0, 0.0);
        report("final gap <= 5%", 0.05 - (quots.back().second / constant - 1.0), 0.0);
    } else {
        std::cerr << "unknown suite '" << args.suite << "'\n";
        return exit_validation;
    }
    return failures == 0 ? exit_ok : exit_verify_fail;
}

struct LimitsArgs {
    std::string regime = "full";
    hardy::HardyParams params{2, 0.0, 2.0, 0.8, 0.6};
};

int run_limits(const LimitsArgs& args) {
    using namespace hardy;
    HardyParams q = args.params;
    q.s = 0.0;
    const bool half = args.regime == "half";
    int failures = 0;
    std::cout << "s -> 0 comparison, regime " << to_string(half ? Regime::half : Regime::full)
              << ", d = " << q.d << ", p = " << fmt(q.p) << ", alpha = " << fmt(q.alpha)
              << ", beta = " << fmt(q.beta) << "\n";
    const ConstantReport c0 =
        half ? constants::constant_D(q) : constants::constant_C_s0(q);
    std::cout << "  limit constant (s = 0)     = " << fmt(c0.constant) << "\n";
    if (q.p == 2.0) {
        const ConstantReport cd = half ? constants::constant_D_s0_closed_p2(q)
                                       : constants::constant_C_s0_closed_p2(q);
        const double rel = std::abs(cd.constant - c0.constant) / std::abs(cd.constant);
        std::cout << "  digamma closed form        = " << fmt(cd.constant)
                  << "   (rel dev " << fmt(rel) << ")\n";
        if (!(rel <= 1e-8)) ++failures;
    }
    for (double s : {1e-2, 1e-3}) {
        HardyParams qs = q;
        qs.s = s;
        const ConstantReport cs =
            half ? constants::constant_D(qs) : constants::constant_C(qs);
        std::cout << "  constant at s = " << fmt(s) << " = " << fmt(cs.constant)
                  << "   (rel dev from limit " << fmt(std::abs(cs.constant - c0.constant) /
                                                      std::abs(c0.constant))
                  << ")\n";
    }
    return failures == 0 ? exit_ok : exit_numerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp constants of weighted fractional Hardy inequalities"};
    app.require_subcommand(1);

    ConstantArgs cargs;
    auto* c = app.add_subcommand("constant", "compute a sharp constant");
    c->add_option("--regime", cargs.regime, "full | full-punctured | half | interval");
    c->add_option("--d", cargs.params.d, "dimension")->required();
    c->add_option("--s", cargs.params.s, "order s in [0,1)")->required();
    c->add_option("--p", cargs.params.p, "exponent p >= 1")->required();
    c->add_option("--alpha", cargs.params.alpha, "weight exponent alpha")->required();
    c->add_option("--beta", cargs.params.beta, "weight exponent beta")->required();
    c->add_option("--method", cargs.method, "integral | closed | both | limit-s0 (default auto)");

    VerifyArgs vargs;
    auto* v = app.add_subcommand("verify", "run a verification suite");
    v->add_option("--suite", vargs.suite,
                  "hardy-full | hardy-half | identity-p2 | remainder | hsm-chain | interval | "
                  "mdist | sharpness")
        ->required();
    v->add_option("--regime", vargs.regime, "full | half (suite dependent)");
    v->add_option("--shape", vargs.shape, "half-space | ball | box (mdist)");
    v->add_option("--d", vargs.params.d);
    v->add_option("--s", vargs.params.s);
    v->add_option("--p", vargs.params.p);
    v->add_option("--alpha", vargs.params.alpha);
    v->add_option("--beta", vargs.params.beta);

    hardy::sweep::SweepSpec spec;
    std::string sweep_config, sweep_regime, sweep_ds, sweep_s, sweep_p, sweep_alpha, sweep_beta,
        sweep_format;
    auto* w = app.add_subcommand("sweep", "sweep a parameter grid to CSV/JSON");
    w->add_option("--config", sweep_config, "config file (key=value lines)");
    w->add_option("--regime", sweep_regime, "full | full-punctured | half | interval");
    w->add_option("--d", sweep_ds, "comma-separated dimensions, e.g. 1,2,3");
    w->add_option("--s", sweep_s, "value or min:max:step");
    w->add_option("--p", sweep_p, "value or min:max:step");
    w->add_option("--alpha", sweep_alpha, "value or min:max:step");
    w->add_option("--beta", sweep_beta, "value or min:max:step");
    w->add_option("--format", sweep_format, "csv | json");
    w->add_option("--out", spec.out_path, "output path (default stdout)");
    w->add_flag("--no-timing", spec.no_timing, "omit the wall_ms column");
    w->add_option("--threads", spec.threads, "pool size (default HARDY_SHARP_THREADS)");

    LimitsArgs largs;
    auto* l = app.add_subcommand("limits", "s -> 0 limit comparisons");
    l->add_option("--regime", largs.regime, "full | half");
    l->add_option("--d", largs.params.d);
    l->add_option("--p", largs.params.p);
    l->add_option("--alpha", largs.params.alpha);
    l->add_option("--beta", largs.params.beta);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c)) return run_constant(cargs);
        if (app.got_subcommand(v)) return run_verify(vargs);
        if (app.got_subcommand(l)) return run_limits(largs);
        if (app.got_subcommand(w)) {
            if (!sweep_config.empty()) {
                std::ifstream in(sweep_config);
                if (!in) {
                    std::cerr << "cannot open config '" << sweep_config << "'\n";
                    return exit_validation;
                }
                spec = hardy::sweep::parse_config(in);
            }
            if (!sweep_regime.empty()) spec.regime = parse_regime(sweep_regime);
            auto parse_ds = [](const std::string& text) {
                std::vector<int> out;
                std::stringstream ss(text);
                std::string tok;
                while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
                return out;
            };
            if (!sweep_ds.empty()) spec.ds = parse_ds(sweep_ds);
            if (!sweep_s.empty()) spec.s = hardy::sweep::Range::parse(sweep_s);
            if (!sweep_p.empty()) spec.p = hardy::sweep::Range::parse(sweep_p);
            if (!sweep_alpha.empty()) spec.alpha = hardy::sweep::Range::parse(sweep_alpha);
            if (!sweep_beta.empty()) spec.beta = hardy::sweep::Range::parse(sweep_beta);
            if (sweep_format == "json") spec.format = hardy::sweep::Format::json;
            else if (sweep_format == "csv" || sweep_format.empty()) {
            } else {
                std::cerr << "unknown format '" << sweep_format << "'\n";
                return exit_validation;
            }

            auto rows = hardy::sweep::run_sweep(spec);
            auto emit = [&](std::ostream& os) {
                if (spec.format == hardy::sweep::Format::csv)
                    hardy::sweep::write_csv(os, rows, spec.no_timing);
                else
                    hardy::sweep::write_json(os, rows, spec.no_timing);
            };
            if (spec.out_path.empty()) {
                emit(std::cout);
            } else {
                std::ofstream out(spec.out_path, std::ios::binary);
                if (!out) {
                    std::cerr << "cannot open output '" << spec.out_path << "'\n";
                    return exit_numerical;
                }
                emit(out);
            }
            return exit_ok;
        }
    } catch (const hardy::validation_error& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return exit_validation;
    } catch (const hardy::quadrature_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }
    return exit_ok;
}
