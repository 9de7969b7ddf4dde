#include "rising/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rising {

namespace {

using Q = Rational;

CheckResult make(const std::string& module, const std::string& name, bool ok, const std::string& detail) {
    return CheckResult{module, name, ok, detail};
}

std::string num(double x) { return to_string(x); }

template <class S>
std::string describe(const SquarePoint<S>& p) {
    std::ostringstream os;
    os << "(" << to_string(p.r) << ", ";
    if (p.y.kind == Level<S>::Kind::top)
        os << "top";
    else if (p.y.kind == Level<S>::Kind::bottom)
        os << "bottom";
    else
        os << "strip " << p.y.strip << " base " << to_string(p.y.base);
    os << ")";
    return os.str();
}

template <class S>
const char* mode_tag() {
    return is_exact_v<S> ? "exact" : "float";
}

template <class S>
bool close(const S& a, const S& b, double tol) {
    if constexpr (is_exact_v<S>)
        return a == b;
    else
        return std::fabs(a - b) <= tol;
}

template <class S>
bool same_point(const SquarePoint<S>& a, const SquarePoint<S>& b, double tol) {
    if constexpr (is_exact_v<S>)
        return a == b;
    else
        return point_distance(a, b) <= tol;
}

// A point of the built region: an interior level with |strip| <= max_strip.
template <class S>
SquarePoint<S> sample_point(Sampler& rng, long max_strip) {
    SquarePoint<S> p;
    p.r = rng.uniform<S>(S(-1), S(1));
    p.y = rng.level<S>(1 - max_strip, max_strip);
    return p;
}

}  // namespace

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json out;
    out["ok"] = ok();
    long failed = 0;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        failed += c.ok ? 0 : 1;
        nlohmann::ordered_json j;
        j["module"] = c.module;
        j["name"] = c.name;
        j["ok"] = c.ok;
        j["detail"] = c.detail;
        arr.push_back(j);
    }
    out["checks_run"] = checks.size();
    out["checks_failed"] = failed;
    out["checks"] = arr;
    return out.dump(2) + "\n";
}

// ---- pl1d ------------------------------------------------------------------

std::vector<CheckResult> verify_pl1d(Sampler& rng) {
    std::vector<CheckResult> out;
    {
        const Q xs[] = {Q(-1), Q(-3, 4), Q(-1, 2), Q(0), Q(1, 2), Q(1)};
        const Q ys[] = {Q(-1), Q(-1, 2), Q(0), Q(1, 2), Q(3, 4), Q(1)};
        bool ok = true;
        std::string bad;
        for (int i = 0; i < 6; ++i)
            if (f01_eval<Q>(xs[i]) != ys[i]) {
                ok = false;
                bad = to_string(xs[i]);
            }
        out.push_back(make("pl1d", "f01_values", ok, ok ? "6 exact values" : "mismatch at " + bad));
    }
    {
        long bad = 0;
        const int n = 1000;
        for (int i = 0; i < n; ++i) {
            const Q s = rng.uniform<Q>(Q(-1), Q(1));
            if (!(f01_eval(s) > s)) ++bad;
            if (f01_eval<Q>(-s) != -f01_invert(s)) ++bad;
            if (f01_invert(f01_eval(s)) != s) ++bad;
        }
        out.push_back(make("pl1d", "f01_rising_and_reflection", bad == 0,
                           std::to_string(n) + " exact samples, " + std::to_string(bad) + " failures"));
    }
    {
        long bad = 0;
        for (long n = -30; n <= 30; ++n) {
            const Q closed = n >= 0 ? Q(1) - times_pow2(Q(1), -n) : times_pow2(Q(1), n) - Q(1);
            if (level<Q>(n) != closed) ++bad;
            if (n >= -29 && n <= 29) {
                const Q t = level<Q>(n);
                const StripIndex<Q> st = strip_of(t);
                if (st.n != n + 1 || !(st.lower <= t && t < st.upper)) ++bad;
                if (f01_eval(t) != level<Q>(n + 1)) ++bad;
            }
        }
        out.push_back(make("pl1d", "levels_closed_form", bad == 0, "n in [-30, 30], " + std::to_string(bad) + " failures"));
    }
    {
        long bad = 0;
        const int n = 1000;
        for (int i = 0; i < n; ++i) {
            const Q s = rng.uniform<Q>(Q(-1), Q(1));
            const Level<Q> y = Level<Q>::from_ordinate(s);
            if (y.ordinate() != s) ++bad;
            if (y.next().prev() != y || y.prev().next() != y) ++bad;
            if (y.reflect().reflect() != y) ++bad;
            if (y.reflect().ordinate() != -s) ++bad;
            if (y.next().ordinate() != f01_eval(s)) ++bad;
            const Level<double> yd = Level<double>::from_ordinate(to_double(s));
            if (std::fabs(yd.ordinate() - to_double(s)) > 1e-15) ++bad;
        }
        out.push_back(make("pl1d", "level_round_trip", bad == 0,
                           std::to_string(n) + " samples, " + std::to_string(bad) + " failures"));
    }
    {
        long bad = 0;
        for (int m = 0; m < 50; ++m) {
            const int nodes = 2 + static_cast<int>(rng.integer(0, 8));
            std::vector<Q> xs{Q(-1)}, ys{Q(-1)};
            for (int i = 1; i < nodes; ++i) {
                xs.push_back(xs.back() + rng.uniform<Q>(Q(0), Q(1), 8));
                ys.push_back(ys.back() + rng.uniform<Q>(Q(0), Q(1), 8));
            }
            MonotonePL1D<Q> mq(xs, ys);
            std::vector<double> dx, dy;
            for (int i = 0; i < nodes; ++i) {
                dx.push_back(to_double(xs[i]));
                dy.push_back(to_double(ys[i]));
            }
            MonotonePL1D<double> md(dx, dy);
            for (int t = 0; t < 20; ++t) {
                const Q x = rng.uniform<Q>(xs.front(), xs.back());
                if (mq.invert(mq.eval(x)) != x) ++bad;
                const double xd = to_double(x);
                if (std::fabs(md.invert(md.eval(xd)) - xd) > 1e-12) ++bad;
            }
        }
        out.push_back(make("pl1d", "pl_round_trip", bad == 0, "50 random maps x 20 points, " + std::to_string(bad) + " failures"));
    }
    return out;
}

// ---- profiles --------------------------------------------------------------

std::vector<CheckResult> verify_profiles(const Config& config, Sampler& rng) {
    std::vector<CheckResult> out;
    const IntervalFamily* fams[] = {&config.families.omega, &config.families.alpha};
    const char* names[] = {"omega", "alpha"};
    for (int side = 0; side < 2; ++side) {
        const IntervalFamily& fam = *fams[side];
        const std::string tag = names[side];
        long bad = 0;
        for (const auto& m : fam.members) {
            for (long k = 1; k <= 64; ++k) {
                const ClosedInterval a = truncate(m.set, k), b = truncate(m.set, k + 1);
                if (!(b.lo <= a.lo && a.hi <= b.hi && a.lo <= a.hi)) ++bad;
                if (!m.set.contains(a.lo) || !m.set.contains(a.hi)) ++bad;
            }
        }
        out.push_back(make("profiles", tag + "_truncation_monotone", bad == 0,
                           "k = 1..64, " + std::to_string(bad) + " failures"));

        bad = 0;
        for (long k = 1; k <= 64; ++k)
            for (std::size_t i = 0; i < fam.members.size(); ++i)
                for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
                    const ClosedInterval a = truncate(fam.members[i].set, k), b = truncate(fam.members[j].set, k);
                    if (!(a.hi < b.lo || b.hi < a.lo)) ++bad;
                }
        out.push_back(make("profiles", tag + "_truncation_disjoint", bad == 0,
                           "k = 1..64, " + std::to_string(bad) + " overlaps"));

        bad = 0;
        long tried = 0;
        for (const auto& m : fam.members) {
            std::vector<Q> xs;
            if (!m.set.a_open) xs.push_back(m.set.a);
            if (!m.set.b_open) xs.push_back(m.set.b);
            if (!m.set.is_point())
                for (int i = 0; i < 20; ++i) xs.push_back(rng.uniform<Q>(m.set.a, m.set.b));
            for (const Q& x : xs) {
                ++tried;
                bool found = false;
                for (long k = 1; k <= (1L << 40) && !found; k *= 2) {
                    const ClosedInterval c = truncate(m.set, k);
                    found = c.lo <= x && x <= c.hi;
                }
                if (!found) ++bad;
            }
        }
        out.push_back(make("profiles", tag + "_truncation_exhaustion", bad == 0,
                           std::to_string(tried) + " points, " + std::to_string(bad) + " never covered"));

        const DenseGrid grid = DenseGrid::for_family(fam);
        bad = 0;
        std::vector<Q> prev = grid.prefix(1);
        for (long k = 2; k <= 1022; ++k) {
            std::vector<Q> cur = grid.prefix(k);
            if (cur.size() != prev.size() + 1 || !std::equal(prev.begin(), prev.end(), cur.begin())) ++bad;
            prev = std::move(cur);
        }
        std::vector<Q> sorted = prev;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) ++bad;
        long missing = 0;
        for (const auto& m : fam.members)
            for (const Envelope* e : {&m.profile.lower, &m.profile.upper})
                for (const auto& node : e->nodes())
                    if (!std::binary_search(sorted.begin(), sorted.end(), node.x)) ++missing;
        out.push_back(make("profiles", tag + "_grid_prefix", bad == 0 && missing == 0,
                           "1024 entries, " + std::to_string(bad) + " nesting failures, " + std::to_string(missing) +
                               " breakpoints missing"));
    }
    return out;
}

// ---- builder ---------------------------------------------------------------

template <class S>
CheckResult check_normally_rising(const SquareMap<S>& f, long max_strip, long samples, Sampler& rng) {
    long bad = 0;
    std::string first;
    auto fail = [&](const SquarePoint<S>& p) {
        if (bad++ == 0) first = describe(p);
    };
    for (long i = 0; i < samples; ++i) {
        SquarePoint<S> p = sample_point<S>(rng, max_strip);
        switch (i % 8) {
            case 0: p.r = S(rng.integer(0, 1) ? 1 : -1); break;
            case 1: p.y = rng.integer(0, 1) ? Level<S>::top() : Level<S>::bottom(); break;
            default: break;
        }
        const SquarePoint<S> q = f.eval(p);
        if (q.y != p.y.next()) fail(p);
        if (p.y.is_edge() && q != p) fail(p);
        if ((p.r == S(1) || p.r == S(-1)) && q != f02(p)) fail(p);
        if (q.r < S(-1) || q.r > S(1)) fail(p);
        if constexpr (is_exact_v<S>) {
            if (!p.y.is_edge() && std::labs(p.y.strip) <= 40 && q.y.ordinate() != f01_eval(p.y.ordinate())) fail(p);
        }
    }
    return make("builder", std::string("normally_rising_") + mode_tag<S>(), bad == 0,
                std::to_string(samples) + " points up to strip " + std::to_string(max_strip) + ", " +
                    std::to_string(bad) + " failures" + (bad ? ", first " + first : ""));
}

template <class S>
CheckResult check_monotone(const SquareMap<S>& f, long max_strip, long samples, Sampler& rng) {
    long bad = 0, ties = 0;
    std::string first;
    for (long i = 0; i < samples; ++i) {
        const Level<S> y = rng.level<S>(1 - max_strip, max_strip);
        S a = rng.uniform<S>(S(-1), S(1)), b = rng.uniform<S>(S(-1), S(1));
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        const S fa = f.eval(SquarePoint<S>{a, y}).r, fb = f.eval(SquarePoint<S>{b, y}).r;
        if (fa > fb) {
            if (bad++ == 0) first = describe(SquarePoint<S>{a, y});
        } else if (fa == fb) {
            ++ties;
        }
    }
    // Floating mode may round neighbouring abscissae together deep in the strips.
    const bool ok = bad == 0 && (!is_exact_v<S> || ties == 0);
    return make("builder", std::string("strictly_increasing_") + mode_tag<S>(), ok,
                std::to_string(samples) + " pairs, " + std::to_string(bad) + " inversions, " + std::to_string(ties) +
                    " ties" + (bad ? ", first " + first : ""));
}

template <class S>
CheckResult check_round_trip(const SquareMap<S>& f, long max_strip, long samples, Sampler& rng) {
    long bad = 0;
    double worst = 0.0;
    std::string first;
    for (long i = 0; i < samples; ++i) {
        const SquarePoint<S> p = sample_point<S>(rng, max_strip);
        const SquarePoint<S> back = f.eval_inverse(f.eval(p));
        const SquarePoint<S> fwd = f.eval(f.eval_inverse(p));
        if constexpr (!is_exact_v<S>) worst = std::max({worst, point_distance(back, p), point_distance(fwd, p)});
        if (!same_point(back, p, 1e-9) || !same_point(fwd, p, 1e-9)) {
            if (bad++ == 0) first = describe(p);
        }
    }
    std::string detail = std::to_string(samples) + " points, " + std::to_string(bad) + " failures";
    if (!is_exact_v<S>) detail += ", max error " + num(worst);
    if (bad) detail += ", first " + first;
    return make("builder", std::string("round_trip_") + mode_tag<S>(), bad == 0, detail);
}

template <class S>
CheckResult check_anchor_law(const SquareMap<S>& f, long stages) {
    const IntervalFamily& fam = f.upper().family();
    const DenseGrid& grid = f.upper().grid();
    long bad = 0, checked = 0;
    std::string first;
    for (long k = 1; k <= stages; ++k) {
        const StageData<S>& st = f.upper().stage_data(k);
        const int branch = k % 2 == 1 ? 1 : 2;
        const S c = from_int<S>(2 * k + 7);
        std::vector<Q> pts = grid.prefix(k);
        std::vector<std::size_t> order(pts.size());
        for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
        for (const AnchorArcs<S>& arcs : st.arcs) {
            if (arcs.member < 0) continue;
            const LimitProfile& prof = fam.members[static_cast<std::size_t>(arcs.member)].profile;
            for (std::size_t t = 0; t < order.size(); ++t) {
                const Q& g = pts[order[t]];
                SquarePoint<S> p{from_rational<S>(g), Level<S>::from_ordinate(arcs.base)};
                for (long d = 0; d < k * k - 1; ++d) p = f.eval(p);
                const S x0 = p.r;
                S xi_target;
                if constexpr (is_exact_v<S>)
                    xi_target = profile_target(prof, g, branch);
                else
                    xi_target = profile_target(prof, to_double(g), branch);
                for (long i = 0; i <= 2 * k + 1; ++i) {
                    const S expect = ((c - from_int<S>(i)) * x0 + from_int<S>(i) * xi_target) / c;
                    ++checked;
                    const S& stored = arcs.rows[static_cast<std::size_t>(i)][t];
                    if (!close(stored, expect, 1e-12) || !close(stored, p.r, 1e-12)) {
                        if (bad++ == 0)
                            first = "stage " + std::to_string(k) + " base " + to_string(arcs.base) + " step " +
                                    std::to_string(i);
                    }
                    if (i <= 2 * k) p = f.eval(p);
                }
            }
        }
    }
    return make("builder", std::string("anchor_orbit_law_") + mode_tag<S>(), bad == 0 && checked > 0,
                "stages 1.." + std::to_string(stages) + ", " + std::to_string(checked) + " abscissae, " +
                    std::to_string(bad) + " failures" + (bad ? ", first " + first : ""));
}

template <class S>
CheckResult check_mirror(const SquareMap<S>& f, long max_strip, long samples, Sampler& rng) {
    RisingBuilder<S> other(mirror_family(f.families().alpha), f.max_stage());
    long bad = 0;
    for (long i = 0; i < samples; ++i) {
        SquarePoint<S> q;
        q.r = rng.uniform<S>(S(-1), S(1));
        q.y = rng.level<S>(2, max_strip);
        const SquarePoint<S> lhs = reflect_v(f.eval(reflect_v(q)));
        const Level<S> ly = q.y.prev();
        const SquarePoint<S> rhs{other.apply_inverse(ly, q.r), ly};
        if (lhs != rhs) ++bad;
    }
    return make("builder", std::string("mirror_coherence_") + mode_tag<S>(), bad == 0,
                std::to_string(samples) + " lower-half points, " + std::to_string(bad) + " mismatches");
}

template <class S>
CheckResult check_stage0(const SquareMap<S>& f) {
    long bad = 0;
    Sampler rng(7);
    for (int i = 0; i < 1000; ++i) {
        Level<S> y;
        y.strip = 0;
        y.base = rng.uniform<S>(S(0), from_int<S>(1, 2));
        const S r = rng.uniform<S>(S(-1), S(1));
        if (f.eval(SquarePoint<S>{r, y}).r != r) ++bad;
    }
    const SquarePoint<S> seam = f.eval(make_point(from_int<S>(3, 10), from_int<S>(-1, 2)));
    if (seam != make_point(from_int<S>(3, 10), S(0))) ++bad;
    const SquarePoint<S> first = f.eval(make_point(from_int<S>(3, 10), from_int<S>(-1, 5)));
    if (first != make_point(from_int<S>(3, 10), from_int<S>(3, 10))) ++bad;
    return make("builder", std::string("stage0_identity_") + mode_tag<S>(), bad == 0,
                "1000 points of D0 plus the seam, " + std::to_string(bad) + " failures");
}

template <class S>
CheckResult conditions_check(const SquareMap<S>& f, long k) {
    const ConditionReport rep = check_conditions(f, k);
    double worst_ratio = 0.0;
    for (const auto& b : rep.blocks) worst_ratio = std::max(worst_ratio, b.observed / b.bound);
    worst_ratio = std::max(worst_ratio, rep.level_observed / rep.level_bound);
    const bool ok = rep.violations == 0 && rep.c1_ok && rep.d0_observed == 0.0;
    return make("builder", std::string("conditions_") + mode_tag<S>(), ok,
                "stage " + std::to_string(k) + ", " + std::to_string(rep.samples) + " samples, " +
                    std::to_string(rep.violations) + " violations, worst observed/bound " + num(worst_ratio));
}

// ---- limits ----------------------------------------------------------------

std::vector<CheckResult> verify_limits(const SquareMap<double>& f, const Config& config) {
    std::vector<CheckResult> out;
    const long budget = std::min<long>(config.estimation.stage_budget, 12);
    {
        long bad = 0;
        const SquarePoint<double> starts[] = {SquarePoint<double>{0.3, Level<double>::top()},
                                              SquarePoint<double>{-0.7, Level<double>::bottom()},
                                              make_point(1.0, 0.2), make_point(-1.0, -0.6)};
        for (const auto& p : starts)
            for (const auto& e : {estimate_omega(f, p, budget), estimate_alpha(f, p, budget)})
                if (e.lo != p.r || e.hi != p.r || e.residual != 0.0) ++bad;
        out.push_back(make("limits", "degenerate_starts", bad == 0, "4 edge starts, " + std::to_string(bad) + " failures"));
    }
    {
        long bad = 0;
        Sampler rng(11);
        for (int i = 0; i < 6; ++i) {
            const SquarePoint<double> p = make_point(rng.uniform(-0.9, 0.9, 10), rng.uniform(-0.9, 0.9, 10));
            const auto a = estimate_alpha(f, p, budget);
            const auto d = estimate_alpha_direct(f, p, budget);
            if (a.block_ends != d.block_ends || a.lo != d.lo || a.hi != d.hi) ++bad;
        }
        out.push_back(make("limits", "alpha_duality", bad == 0, "6 starts, " + std::to_string(bad) + " mismatches"));
    }
    {
        long bad = 0;
        for (double s : {-0.3, 0.1, 0.4}) {
            std::vector<double> prev;
            for (int i = 0; i <= 8; ++i) {
                const double r = -0.8 + 0.2 * i;
                const auto e = estimate_omega(f, make_point(r, s), budget);
                if (!prev.empty())
                    for (std::size_t j = 0; j < std::min(prev.size(), e.block_ends.size()); ++j)
                        if (e.block_ends[j] < prev[j]) ++bad;
                prev = e.block_ends;
            }
        }
        out.push_back(make("limits", "block_ends_monotone", bad == 0, "3 levels x 9 abscissae, " + std::to_string(bad) + " inversions"));
    }
    return out;
}

// ---- plane -----------------------------------------------------------------

std::vector<CheckResult> verify_quotient(Sampler& rng, int grid) {
    std::vector<CheckResult> out;
    const QuotientMap<Q> xi;
    auto P = [](const Q& r, const Q& s) { return make_point(r, s); };
    {
        long bad = 0;
        for (int i = 0; i < 1000; ++i) {
            const SquarePoint<Q> p = P(rng.uniform<Q>(Q(-1), Q(1)), rng.uniform<Q>(Q(-1, 2), Q(1, 2)));
            if (xi.eval(p) != p) ++bad;
            const Q rs[] = {Q(-1), Q(0), Q(1)};
            const SquarePoint<Q> v = P(rs[i % 3], rng.uniform<Q>(Q(-1), Q(1)));
            if (xi.eval(v) != v) ++bad;
        }
        for (const Q& r : {Q(-1), Q(0), Q(1)})
            for (const Level<Q>& y : {Level<Q>::top(), Level<Q>::bottom()})
                if (xi.eval(SquarePoint<Q>{r, y}) != SquarePoint<Q>{r, y}) ++bad;
        out.push_back(make("plane", "quotient_identity", bad == 0, "2000 exact points, " + std::to_string(bad) + " moved"));
    }
    {
        const auto& cfg = SixPointsConfig::get();
        auto pt = [&](const RPoint& a) { return P(a.r, a.s); };
        const SquarePoint<Q> u2 = pt(cfg.u[1]), u3 = pt(cfg.u[2]), v2 = pt(cfg.v[1]), w3 = pt(cfg.w[2]),
                             w4 = pt(cfg.w[3]), x3 = pt(cfg.x[2]);
        struct Seg {
            SquarePoint<Q> a, b, fa, fb;
        };
        const Seg segs[] = {{u2, w3, u2, u3}, {w3, u3, u3, x3}, {u3, w4, x3, u3}, {w4, v2, u3, v2}};
        long bad = 0;
        auto mid = [](const SquarePoint<Q>& a, const SquarePoint<Q>& b) {
            return make_point<Q>((a.r + b.r) / 2, (a.y.ordinate() + b.y.ordinate()) / 2);
        };
        for (const auto& s : segs) {
            if (xi.eval(s.a) != s.fa || xi.eval(s.b) != s.fb) ++bad;
            for (int t = 1; t < 8; ++t) {
                Q w(t, 8);
                w.canonicalize();
                const SquarePoint<Q> p = make_point<Q>(s.a.r + w * (s.b.r - s.a.r), Q(1));
                const SquarePoint<Q> img = xi.eval(p);
                const Q er = s.fa.r + w * (s.fb.r - s.fa.r);
                const Q es = s.fa.y.ordinate() + w * (s.fb.y.ordinate() - s.fa.y.ordinate());
                if (img != make_point(er, es)) ++bad;
            }
            if (xi.eval(mid(s.a, s.b)) != mid(s.fa, s.fb)) ++bad;
        }
        out.push_back(make("plane", "quotient_segments", bad == 0, "4 segments, endpoints and 8 points each, " +
                                                                        std::to_string(bad) + " failures"));
    }
    {
        long bad = 0;
        for (int i = 0; i < 1000; ++i) {
            const SquarePoint<Q> p = P(rng.uniform<Q>(Q(-1), Q(1)), rng.uniform<Q>(Q(-1), Q(1)));
            const SquarePoint<Q> img = xi.eval(p);
            const SquarePoint<Q> ph{-p.r, p.y};
            if (xi.eval(ph) != SquarePoint<Q>{-img.r, img.y}) ++bad;
            if (xi.eval(reflect_v(p)) != reflect_v(img)) ++bad;
        }
        out.push_back(make("plane", "quotient_equivariance", bad == 0, "1000 exact points, " + std::to_string(bad) + " failures"));
    }
    {
        long bad = 0;
        for (const auto& t : xi.triangles()) {
            for (const auto* tri : {&t.src, &t.dst}) {
                const auto& v = *tri;
                const Q area = (v[1][0] - v[0][0]) * (v[2][1] - v[0][1]) - (v[2][0] - v[0][0]) * (v[1][1] - v[0][1]);
                if (area == 0) ++bad;
            }
            const auto orient = [](const std::array<std::array<Q, 2>, 3>& v) {
                return sgn((v[1][0] - v[0][0]) * (v[2][1] - v[0][1]) - (v[2][0] - v[0][0]) * (v[1][1] - v[0][1]));
            };
            if (orient(t.src) != orient(t.dst)) ++bad;
        }
        out.push_back(make("plane", "quotient_triangles", bad == 0,
                           std::to_string(xi.triangles().size()) + " triangles, " + std::to_string(bad) + " degenerate or flipped"));
    }
    {
        const QuotientMap<double> xd;
        std::vector<std::array<double, 2>> img;
        img.reserve(static_cast<std::size_t>(grid) * grid);
        long on_slit = 0;
        for (int i = 0; i < grid; ++i)
            for (int j = 0; j < grid; ++j) {
                const double r = -1.0 + (2.0 * i + 1.0) / grid, s = -1.0 + (2.0 * j + 1.0) / grid;
                const SquarePoint<double> q = xd.eval(make_point(r, s));
                if (xd.on_slit(q)) ++on_slit;
                img.push_back({q.r, q.y.ordinate()});
            }
        std::sort(img.begin(), img.end());
        double min_d = std::numeric_limits<double>::infinity();
        const double window = 1e-6;
        for (std::size_t a = 0; a < img.size(); ++a)
            for (std::size_t b = a + 1; b < img.size() && img[b][0] - img[a][0] <= window; ++b)
                min_d = std::min(min_d, std::hypot(img[b][0] - img[a][0], img[b][1] - img[a][1]));
        const bool ok = min_d > 1e-9 && on_slit == 0;
        out.push_back(make("plane", "quotient_injective", ok,
                           std::to_string(grid) + "x" + std::to_string(grid) + " grid, min image distance " +
                               (std::isfinite(min_d) ? num(min_d) : std::string(">1e-6")) + ", " +
                               std::to_string(on_slit) + " images on slits"));
    }
    {
        long bad = 0;
        const auto& cfg = SixPointsConfig::get();
        const auto x3 = xi.invert(make_point(cfg.x[2].r, cfg.x[2].s));
        if (x3.size() != 1 || x3[0] != make_point(cfg.u[2].r, cfg.u[2].s)) ++bad;
        const auto two = xi.invert(make_point(Q(1, 2), Q(7, 8)));
        if (two.size() != 2) ++bad;
        for (const auto& p : two)
            if (p.y != Level<Q>::top() || xi.eval(p) != make_point(Q(1, 2), Q(7, 8))) ++bad;
        for (int i = 0; i < 1000; ++i) {
            const SquarePoint<Q> p = P(rng.uniform<Q>(Q(-1), Q(1)), rng.uniform<Q>(Q(-1), Q(1)));
            const SquarePoint<Q> img = xi.eval(p);
            const auto pre = xi.invert(img);
            if (pre.size() != 1 || pre[0] != p) ++bad;
        }
        out.push_back(make("plane", "quotient_inverse", bad == 0, "slit examples and 1000 exact points, " +
                                                                       std::to_string(bad) + " failures"));
    }
    return out;
}

std::vector<PlanePoint> boundary_samples(const DiskSpec& disk, long count) {
    std::vector<PlanePoint> out;
    for (long k = 0; k < count; ++k) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
        const double ux = std::cos(th), uy = std::sin(th);
        const double rho = disk.radius(ux, uy);
        out.push_back(PlanePoint{disk.center().x + rho * ux, disk.center().y + rho * uy});
    }
    return out;
}

std::vector<PlanePoint> interior_samples(const DiskSpec& disk, long count) {
    std::vector<PlanePoint> out;
    for (long k = 0; k < count; ++k) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
        const double ux = std::cos(th), uy = std::sin(th);
        const double rho = disk.radius(ux, uy) * (0.1 + 0.8 * static_cast<double>(k % 8) / 8.0);
        out.push_back(PlanePoint{disk.center().x + rho * ux, disk.center().y + rho * uy});
    }
    return out;
}

std::vector<CheckResult> verify_plane(const PlanePipeline<double>& pipe, const Config& config, long boundary_points,
                                      long pushforward_starts, Sampler& rng) {
    std::vector<CheckResult> out;
    const SquareMap<double>& f = pipe.square_map();
    {
        long bad = 0;
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const SquarePoint<double> p = make_point(rng.uniform(-0.999, 0.999), rng.uniform(-0.999, 0.999));
            const SquarePoint<double> back = tangent_invert<double>(tangent_eval(p));
            worst = std::max(worst, point_distance(back, p));
            const PlanePoint y{std::tan(rng.uniform(-1.5, 1.5)), std::tan(rng.uniform(-1.5, 1.5))};
            const PlanePoint z = tangent_eval(tangent_invert<double>(y));
            const double rel = std::max(std::fabs(z.x - y.x) / (1 + std::fabs(y.x)), std::fabs(z.y - y.y) / (1 + std::fabs(y.y)));
            worst = std::max(worst, rel);
        }
        bad += worst > 1e-12 ? 1 : 0;
        bool guard = false;
        try {
            tangent_eval(make_point(0.0, 1.0 - 1e-13));
        } catch (const Error& e) {
            guard = e.kind() == ErrorKind::DomainError;
        }
        out.push_back(make("plane", "tangent_round_trip", bad == 0 && guard,
                           "2000 points, max error " + num(worst) + (guard ? "" : ", overflow guard missing")));
    }
    {
        const DiskConjugacy& zeta = pipe.zeta();
        const DiskSpec& g = pipe.reference();
        const DiskSpec& e = zeta.target();
        double worst = 0.0, edge = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
            const double ux = std::cos(th), uy = std::sin(th);
            const double factor = i % 3 == 0 ? 1.0 : rng.uniform(0.0, 3.0);
            const double rho = g.radius(ux, uy) * factor;
            const PlanePoint p{g.center().x + rho * ux, g.center().y + rho * uy};
            const PlanePoint q = zeta.forward(p);
            const PlanePoint back = zeta.backward(q);
            worst = std::max(worst, std::hypot(back.x - p.x, back.y - p.y) / (1 + std::hypot(p.x, p.y)));
            if (i % 3 == 0) {
                const double dx = q.x - e.center().x, dy = q.y - e.center().y, d = std::hypot(dx, dy);
                edge = std::max(edge, std::fabs(d - e.radius(dx / d, dy / d)));
            }
        }
        out.push_back(make("plane", "disk_conjugacy", worst <= 1e-9 && edge <= 1e-9,
                           "1000 points, round-trip error " + num(worst) + ", boundary error " + num(edge)));
    }
    {
        long bad = 0;
        double worst = 0.0;
        for (const PlanePoint& y : interior_samples(config.disk, 16)) {
            const PlaneStep<double> a = pipe.plane_map(y, Direction::forward);
            if (a.overflow) {
                ++bad;
                continue;
            }
            const PlaneStep<double> b = pipe.plane_map(a.plane, Direction::backward);
            const double err = std::hypot(b.plane.x - y.x, b.plane.y - y.y);
            worst = std::max(worst, err);
            if (b.overflow || err > 1e-9) ++bad;
        }
        out.push_back(make("plane", "plane_round_trip", bad == 0, "16 points, max error " + num(worst)));
    }
    {
        const auto& cfg = SixPointsConfig::get();
        const PlanePoint x1 = pipe.to_plane(make_point(to_double(cfg.x[0].r), to_double(cfg.x[0].s)));
        const PlanePoint x3 = pipe.to_plane(make_point(to_double(cfg.x[2].r), to_double(cfg.x[2].s)));
        const ClassifyParams params = config.estimation.classify();
        long good = 0;
        double worst = 0.0;
        for (const PlanePoint& y : boundary_samples(config.disk, boundary_points)) {
            const PlaneClassification<double> c = pipe.classify(y, params);
            const Region reg = six_points_region(pipe.to_square(y), 1e-9);
            const PlanePoint& target = reg == Region::l1 ? x1 : x3;
            if (c.kind == PlaneClass::bounded && c.forward_limit) {
                const double d = std::hypot(c.forward_limit->x - target.x, c.forward_limit->y - target.y);
                worst = std::max(worst, d);
                if (d < 1e-2) ++good;
            }
        }
        out.push_back(make("plane", "boundary_bounded", good == boundary_points,
                           std::to_string(good) + "/" + std::to_string(boundary_points) +
                               " boundary points bounded, max limit error " + num(worst)));
        long dd = 0;
        for (const PlanePoint& y : interior_samples(config.disk, boundary_points))
            if (pipe.classify(y, params).kind == PlaneClass::doubly_divergent) ++dd;
        out.push_back(make("plane", "interior_doubly_divergent", dd == boundary_points,
                           std::to_string(dd) + "/" + std::to_string(boundary_points) + " interior points doubly divergent"));
    }
    {
        const Q third(1, 3);
        const SquarePoint<double> starts[] = {make_point(0.1, 0.4), make_point(-0.5, 0.4), make_point(0.1, to_double(third))};
        const double targets[] = {0.0, -0.5, 0.5};
        long bad = 0;
        double worst = 0.0;
        const long budget = config.estimation.stage_budget;
        for (int i = 0; i < 3; ++i)
            for (const auto& e : {estimate_omega(f, starts[i], budget), estimate_alpha(f, starts[i], budget)}) {
                const double err = std::max(std::fabs(e.lo - targets[i]), std::fabs(e.hi - targets[i]));
                worst = std::max(worst, err);
                if (err > e.residual) ++bad;
            }
        out.push_back(make("plane", "six_points_limits", bad == 0,
                           "3 starts both sides, budget " + std::to_string(budget) + ", max error " + num(worst)));
    }
    {
        // Direct g = xi f xi^-1 against the lifted orbit while the gap is resolvable.
        long bad = 0, compared = 0;
        double worst = 0.0;
        for (long i = 0; i < pushforward_starts; ++i) {
            const SquarePoint<double> x = make_point(rng.uniform(-0.95, 0.95, 10), rng.uniform(-0.95, 0.95, 10));
            for (Direction dir : {Direction::forward, Direction::backward}) {
                SquarePoint<double> a = pipe.quotient().eval(x), b = a, lift = x;
                const Stepper<double> lifted = pipe.lifted_stepper(a, dir);
                for (int n = 0; n < 40; ++n) {
                    a = pipe.six_points_map(a, dir);
                    b = lifted(b);
                    lift = dir == Direction::forward ? f.eval(lift) : f.eval_inverse(lift);
                    if (std::min(top_gap(lift.y), bottom_gap(lift.y)) < 1e-6) break;
                    ++compared;
                    const double d = point_distance(a, b);
                    worst = std::max(worst, d);
                    if (d > 1e-9) {
                        ++bad;
                        break;
                    }
                }
            }
        }
        out.push_back(make("plane", "six_points_map_lift", bad == 0,
                           std::to_string(compared) + " steps compared, max distance " + num(worst)));
    }
    for (Side side : {Side::omega, Side::alpha}) {
        long bad = 0;
        double worst = 0.0;
        for (long i = 0; i < pushforward_starts; ++i) {
            const SquarePoint<double> x = make_point(rng.uniform(-0.95, 0.95, 10), rng.uniform(-0.95, 0.95, 10));
            const PushforwardReport rep = pushforward_check(pipe, x, config.estimation.stage_budget, side);
            worst = std::max(worst, rep.hausdorff);
            if (!rep.ok) ++bad;
        }
        out.push_back(make("plane", std::string("pushforward_") + side_name(side), bad == 0,
                           std::to_string(pushforward_starts) + " starts, max distance " + num(worst) + ", " +
                               std::to_string(bad) + " failures"));
    }
    return out;
}

VerifyReport run_verify(const Config& config, const VerifyOptions& opt) {
    VerifyReport rep;
    Sampler rng(opt.seed);
    auto add = [&](std::vector<CheckResult> v) {
        for (auto& c : v) rep.checks.push_back(std::move(c));
    };
    add(verify_pl1d(rng));
    add(verify_profiles(config, rng));

    const long cap = std::max({config.max_stage, opt.float_stage + 1, opt.exact_stage + 1});
    SquareMap<double> fd(config.families, cap);
    fd.ensure_stage(opt.float_stage);
    const long float_strip = (opt.float_stage + 1) * (opt.float_stage + 1) - 2;
    rep.checks.push_back(check_normally_rising(fd, float_strip, opt.samples, rng));
    rep.checks.push_back(check_monotone(fd, float_strip, opt.samples, rng));
    rep.checks.push_back(check_round_trip(fd, float_strip, opt.samples, rng));
    rep.checks.push_back(check_anchor_law(fd, std::min<long>(opt.float_stage, 8)));
    rep.checks.push_back(check_mirror(fd, float_strip, 1000, rng));
    rep.checks.push_back(check_stage0(fd));
    rep.checks.push_back(conditions_check(fd, opt.float_stage));

    SquareMap<Q> fq(config.families, cap);
    fq.ensure_stage(opt.exact_stage);
    const long exact_strip = (opt.exact_stage + 1) * (opt.exact_stage + 1) - 2;
    rep.checks.push_back(check_normally_rising(fq, exact_strip, opt.exact_samples, rng));
    rep.checks.push_back(check_monotone(fq, exact_strip, opt.exact_samples, rng));
    rep.checks.push_back(check_round_trip(fq, exact_strip, opt.exact_samples, rng));
    rep.checks.push_back(check_anchor_law(fq, opt.exact_stage));
    rep.checks.push_back(check_mirror(fq, exact_strip, 1000, rng));
    rep.checks.push_back(check_stage0(fq));
    rep.checks.push_back(conditions_check(fq, opt.exact_stage));

    add(verify_limits(fd, config));
    add(verify_quotient(rng));
    PlanePipeline<double> pipe(build_six_points<double>(std::max<long>(config.max_stage, 128)), config.disk);
    add(verify_plane(pipe, config, opt.boundary_points, opt.pushforward_starts, rng));
    return rep;
}

#define RISING_VERIFY(S)                                                                                  \
    template CheckResult check_normally_rising<S>(const SquareMap<S>&, long, long, Sampler&);           \
    template CheckResult check_monotone<S>(const SquareMap<S>&, long, long, Sampler&);                  \
    template CheckResult check_round_trip<S>(const SquareMap<S>&, long, long, Sampler&);                \
    template CheckResult check_anchor_law<S>(const SquareMap<S>&, long);                                \
    template CheckResult check_mirror<S>(const SquareMap<S>&, long, long, Sampler&);                    \
    template CheckResult check_stage0<S>(const SquareMap<S>&);

RISING_VERIFY(double)
RISING_VERIFY(Rational)

}  // namespace rising
