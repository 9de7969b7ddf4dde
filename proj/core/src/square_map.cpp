#include "rising/square_map.hpp"

#include <cmath>

namespace rising {

template <class S>
SquareMap<S>::SquareMap(const FamilyReport& families, long max_stage) {
    families_ = std::make_shared<const FamilyReport>(families);
    upper_ = std::make_shared<RisingBuilder<S>>(families.omega, max_stage);
    lower_ = std::make_shared<RisingBuilder<S>>(mirror_family(families.alpha), max_stage);
}

template <class S>
SquarePoint<S> SquareMap<S>::eval(const SquarePoint<S>& p) const {
    const Level<S>& L = p.y;
    if (L.is_edge() || p.r == S(-1) || p.r == S(1)) return f02(p);
    if (p.r < S(-1) || p.r > S(1)) throw Error(ErrorKind::DomainError, "abscissa outside J");
    S r = p.r;
    if (L.strip >= 1)
        r = upper_->apply(L, r);
    else if (L.strip <= -1)
        r = lower_->apply_inverse(L.reflect().prev(), r);
    return SquarePoint<S>{r, L.next()};
}

template <class S>
SquarePoint<S> SquareMap<S>::eval_inverse(const SquarePoint<S>& p) const {
    const Level<S>& L = p.y;
    if (L.is_edge() || p.r == S(-1) || p.r == S(1)) return SquarePoint<S>{p.r, L.prev()};
    if (p.r < S(-1) || p.r > S(1)) throw Error(ErrorKind::DomainError, "abscissa outside J");
    const Level<S> Ls = L.prev();
    S r = p.r;
    if (Ls.strip >= 1)
        r = upper_->apply_inverse(Ls, r);
    else if (Ls.strip <= -1)
        r = lower_->apply(L.reflect(), r);
    return SquarePoint<S>{r, Ls};
}

template <class S>
SquareMap<S> SquareMap<S>::reflected() const {
    SquareMap out;
    out.families_ = families_;
    out.upper_ = lower_;
    out.lower_ = upper_;
    out.reflected_ = !reflected_;
    return out;
}

template <class S>
void SquareMap<S>::ensure_stage(long k) const {
    upper_->ensure_stage(k);
    lower_->ensure_stage(k);
}

template <class S>
void SquareMap<S>::set_deadline(std::optional<typename Clock::time_point> deadline) const {
    upper_->set_deadline(deadline);
    lower_->set_deadline(deadline);
}

template <class S>
ConditionReport check_conditions(const SquareMap<S>& map, long k, int grid) {
    ConditionReport rep;
    rep.stage = k;
    map.upper().ensure_stage(k);
    std::vector<S> rs;
    for (int i = 0; i < grid; ++i) rs.push_back(from_int<S>(2 * i + 1 - grid, grid));

    auto displacement = [&](const Level<S>& L, double& worst) {
        for (const S& r : rs) {
            SquarePoint<S> q;
            try {
                q = map.eval(SquarePoint<S>{r, L});
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::InternalOrderViolation) rep.c1_ok = false;
                throw;
            }
            if (!(q.r > S(-1) && q.r < S(1)) && r != S(-1) && r != S(1)) rep.c1_ok = false;
            worst = std::max(worst, std::fabs(to_double(q.r) - to_double(r)));
            ++rep.samples;
        }
    };

    for (int j = 0; j < grid; ++j) {
        Level<S> L{Level<S>::Kind::interior, 0, from_int<S>(j, 2 * grid)};
        displacement(L, rep.d0_observed);
    }

    // Block m covers strips (m-1)^2 .. m^2 - 1.
    for (long m = 1; m <= k + 1; ++m) {
        BlockReport b;
        b.m = m;
        b.first_strip = (m - 1) * (m - 1);
        b.last_strip = m * m - 1;
        b.bound = 2.0 / (2.0 * m + 3.0);
        const long span = b.last_strip - b.first_strip + 1;
        for (int j = 0; j < grid; ++j) {
            const long strip = b.first_strip + (span * j) / grid;
            const long within = (span * j) % grid;
            const S base = from_int<S>(2 * within + 1, 4L * grid);
            Level<S> L{Level<S>::Kind::interior, strip, base};
            displacement(L, b.observed);
        }
        b.ok = b.observed < b.bound;
        if (!b.ok) ++rep.violations;
        rep.blocks.push_back(b);
    }

    const long top = (k + 1) * (k + 1) - 1;
    rep.level_bound = 2.0 / (2.0 * k + 7.0);
    displacement(Level<S>{Level<S>::Kind::interior, top + 1, S(0)}, rep.level_observed);
    rep.level_ok = rep.level_observed < rep.level_bound;
    if (!rep.level_ok) ++rep.violations;
    if (!rep.c1_ok) ++rep.violations;
    return rep;
}

template class SquareMap<double>;
template class SquareMap<Rational>;
template ConditionReport check_conditions<double>(const SquareMap<double>&, long, int);
template ConditionReport check_conditions<Rational>(const SquareMap<Rational>&, long, int);

}  // namespace rising
