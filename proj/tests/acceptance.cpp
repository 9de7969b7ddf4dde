// acceptance <criterion> [cli] [config]
#include "rising/config.hpp"
#include "rising/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace rising;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Config six_points() { return parse_config(six_points_config_text(), "bundled"); }

Outcome base_map() {
    const Rational in[] = {q(-1), q(-3, 4), q(-1, 2), q(0), q(1, 2), q(1)};
    const Rational out[] = {q(-1), q(-1, 2), q(0), q(1, 2), q(3, 4), q(1)};
    for (int i = 0; i < 6; ++i)
        if (f01_eval(in[i]) != out[i]) return {false, "f01(" + to_string(in[i]) + ") = " + to_string(f01_eval(in[i]))};
    return {true, "6/6 values exact"};
}

Outcome conditions() {
    const long K = 12;
    const Config cfg = six_points();
    std::string float_info;
    {
        const SquareMap<double> f(cfg.families, K);
        f.ensure_stage(K);
        const ConditionReport r = check_conditions(f, K, 64);
        float_info = "float K=12: " + std::to_string(r.violations) + " violations in " + std::to_string(r.samples) +
                     " samples";
    }
    const SquareMap<Rational> f(cfg.families, K);
    f.set_deadline(Clock::now() + std::chrono::minutes(2));
    long built = 0;
    try {
        for (long k = 1; k <= K; ++k) {
            f.ensure_stage(k);
            built = k;
        }
        const ConditionReport r = check_conditions(f, K, 64);
        long bad = r.violations + (r.c1_ok ? 0 : 1) + (r.level_ok ? 0 : 1);
        return {bad == 0, "exact K=12: " + std::to_string(r.violations) + " violations in " +
                              std::to_string(r.samples) + " samples; " + float_info};
    } catch (const Error& e) {
        return {false, std::string("exact build stopped after stage ") + std::to_string(built) + " (" + e.kind_name() +
                           ": " + e.what() + "); " + float_info};
    }
}

Outcome homeomorphism() {
    const long K = 3;
    const long max_strip = (K + 1) * (K + 1) - 2;
    const SquareMap<Rational> f(six_points().families, K);
    f.ensure_stage(K);
    Sampler rng(20260101);
    std::string detail;
    bool ok = true;
    for (const CheckResult& c : {check_round_trip(f, max_strip, 10000, rng), check_monotone(f, max_strip, 10000, rng),
                                 check_normally_rising(f, max_strip, 10000, rng), check_stage0(f)}) {
        ok = ok && c.ok;
        detail += c.name + (c.ok ? " ok" : " FAILED") + " (" + c.detail + "); ";
    }
    return {ok, "exact stage " + std::to_string(K) + ": " + detail};
}

const SquarePoint<double> kStarts[] = {make_point(0.1, 0.4), make_point(-0.5, 0.4), make_point(0.1, 1.0 / 3.0)};
const double kTargets[] = {0.0, -0.5, 0.5};

Outcome limit_law(bool alpha) {
    const SquareMap<double> f(six_points().families, 128);
    bool ok = true;
    std::ostringstream d;
    for (const auto& [budget, bound] : {std::pair<long, double>{30, 12.0 / 67.0}, {120, 0.05}}) {
        double worst = 0.0;
        for (int i = 0; i < 3; ++i) {
            std::vector<LimitEstimate<double>> es;
            if (alpha) {
                // The alpha side runs Psi_v f^-1 Psi_v forward from the reflected start.
                es.push_back(estimate_alpha(f, kStarts[i], budget));
                es.push_back(estimate_omega(f.reflected(), reflect_v(kStarts[i]), budget));
            } else {
                es.push_back(estimate_omega(f, kStarts[i], budget));
            }
            for (const auto& e : es)
                worst = std::max({worst, std::fabs(e.lo - kTargets[i]), std::fabs(e.hi - kTargets[i])});
            if (es[0].edge != (alpha ? Edge::bottom : Edge::top)) ok = false;
        }
        ok = ok && worst <= bound;
        d << "budget " << budget << ": max error " << num(worst) << " (bound " << num(bound) << "); ";
    }
    return {ok, d.str()};
}

Outcome quotient() {
    Sampler rng(20260101);
    bool ok = true;
    std::string detail;
    for (const CheckResult& c : verify_quotient(rng, 512)) {
        ok = ok && c.ok;
        detail += c.name + (c.ok ? " ok" : " FAILED") + " (" + c.detail + "); ";
    }
    return {ok, detail};
}

const PlanePipeline<double>& pipeline() {
    static const PlanePipeline<double> pipe(build_six_points<double>(128), DiskSpec::unit_disk());
    return pipe;
}

Outcome pushforward() {
    const auto& pipe = pipeline();
    Sampler rng(20260101);
    long bad = 0;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const SquarePoint<double> x = make_point(rng.uniform(-0.95, 0.95, 10), rng.uniform(-0.95, 0.95, 10));
        for (Side side : {Side::omega, Side::alpha}) {
            const PushforwardReport r = pushforward_check(pipe, x, 30, side);
            worst = std::max(worst, r.hausdorff);
            if (!r.ok) ++bad;
        }
    }
    return {bad == 0, "20 starts x 2 sides, " + std::to_string(bad) + " failures, max distance " + num(worst)};
}

Outcome dichotomy() {
    const auto& pipe = pipeline();
    const Config cfg = six_points();
    const auto& sp = SixPointsConfig::get();
    const PlanePoint x1 = pipe.to_plane(make_point(to_double(sp.x[0].r), to_double(sp.x[0].s)));
    const PlanePoint x3 = pipe.to_plane(make_point(to_double(sp.x[2].r), to_double(sp.x[2].s)));
    const ClassifyParams params = cfg.estimation.classify();

    long bounded = 0;
    double worst = 0.0;
    for (const PlanePoint& y : boundary_samples(DiskSpec::unit_disk(), 40)) {
        const PlaneClassification<double> c = pipe.classify(y, params);
        const PlanePoint& target = six_points_region(pipe.to_square(y), 1e-9) == Region::l1 ? x1 : x3;
        if (c.kind != PlaneClass::bounded || !c.forward_limit) continue;
        const double d = std::hypot(c.forward_limit->x - target.x, c.forward_limit->y - target.y);
        worst = std::max(worst, d);
        if (d < 1e-2) ++bounded;
    }

    long divergent = 0, near_top = 0, far = 0, flagged = 0;
    const double gap = std::ldexp(1.0, -40);
    for (const PlanePoint& y : interior_samples(DiskSpec::unit_disk(), 40)) {
        if (pipe.classify(y, params).kind == PlaneClass::doubly_divergent) ++divergent;
        SquarePoint<double> x = pipe.to_square(y);
        const Stepper<double> g = pipe.lifted_stepper(x, Direction::forward);
        double norm = 0.0;
        bool reached = false, guarded = false;
        for (int n = 1; n <= 60 && !reached; ++n) {
            x = g(x);
            reached = top_gap(x.y) < gap;
            try {
                const PlanePoint p = pipe.to_plane(x);
                norm = std::max(norm, std::hypot(p.x, p.y));
            } catch (const Error&) {
                guarded = true;
            }
        }
        if (reached) ++near_top;
        if (norm > 1e6) ++far;
        if (guarded) ++flagged;
    }
    const bool ok = bounded == 40 && divergent == 40 && near_top == 40 && far == 40;
    return {ok, "boundary bounded " + std::to_string(bounded) + "/40 (max limit error " + num(worst) +
                    "); interior doubly divergent " + std::to_string(divergent) + "/40, ordinate past 1-2^-40 within 60 steps " +
                    std::to_string(near_top) + "/40, plane norm > 1e6 " + std::to_string(far) +
                    "/40 (overflow-guarded within 60 steps " + std::to_string(flagged) + "/40)"};
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    status = pclose(p);
    return out;
}

Outcome determinism(const std::string& cli, const std::string& config) {
    if (cli.empty() || config.empty()) return {false, "usage: acceptance 9 <cli> <config>"};
    const std::string base = "'" + cli + "' ";
    const std::string cfg = " --config '" + config + "'";
    const std::string cmds[] = {base + "verify" + cfg, base + "orbit" + cfg + " --square-point 0.1,0.4 --steps 200",
                                base + "orbit" + cfg + " --plane-point 0.3,-0.2 --steps 50 --direction bwd"};
    std::string detail;
    bool ok = true;
    for (const std::string& c : cmds) {
        int s1 = 0, s2 = 0;
        const std::string a = capture(c + " 2>&1", s1);
        const std::string b = capture(c + " 2>&1", s2);
        const bool same = a == b && s1 == s2 && s1 == 0 && !a.empty();
        ok = ok && same;
        detail += std::to_string(a.size()) + (same ? " bytes identical; " : " bytes DIFFER or failed; ");
    }
    return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <1-9> [cli] [config]\n";
        return 2;
    }
    const int n = std::atoi(argv[1]);
    const std::string cli = argc > 2 ? argv[2] : "";
    const std::string config = argc > 3 ? argv[3] : "";
    static const double limits[] = {0, 1, 120, 60, 300, 300, 60, 300, 300, 300};
    const std::function<Outcome()> runs[] = {
        [] { return Outcome{}; }, base_map,  conditions,  homeomorphism,
        [] { return limit_law(false); },     [] { return limit_law(true); }, quotient, pushforward, dichotomy,
        [&] { return determinism(cli, config); }};
    if (n < 1 || n > 9) {
        std::cerr << "criterion must be 1..9\n";
        return 2;
    }
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = runs[n]();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = secs < limits[n];
    const bool pass = o.ok && in_time;
    std::printf("criterion %d: %s  %s [%.2f s, limit %.0f s%s]\n", n, pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                limits[n], in_time ? "" : ", over time");
    return pass ? 0 : 1;
}
