#include "rising/pl1d.hpp"

#include <algorithm>
#include <cmath>

namespace rising {

namespace {

template <class S>
bool is_finite(const S& x) {
    if constexpr (is_exact_v<S>) {
        (void)x;
        return true;
    } else {
        return std::isfinite(x);
    }
}

template <class S>
S interpolate(const S& x0, const S& y0, const S& x1, const S& y1, const S& x) {
    if (x0 == y0 && x1 == y1) return x;
    S t = (x - x0) / (x1 - x0);
    S y = y0 + t * (y1 - y0);
    if constexpr (!is_exact_v<S>) y = std::clamp(y, std::min(y0, y1), std::max(y0, y1));
    return y;
}

template <class S>
S tolerance() {
    if constexpr (is_exact_v<S>) return S(0);
    else return kEpsDomain;
}

}  // namespace

template <class S>
S pl_eval(const S* xs, const S* ys, std::size_t n, const S& x) {
    if (x <= xs[0]) {
        // With repeated first abscissae the last copy wins.
        std::size_t i = 0;
        while (i + 1 < n && xs[i + 1] == xs[0] && x == xs[0]) ++i;
        return ys[i];
    }
    if (x >= xs[n - 1]) return ys[n - 1];
    std::size_t i = static_cast<std::size_t>(std::upper_bound(xs, xs + n, x) - xs) - 1;
    if (xs[i] == x) return ys[i];
    return interpolate(xs[i], ys[i], xs[i + 1], ys[i + 1], x);
}

template <class S>
S pl_invert(const S* xs, const S* ys, std::size_t n, const S& y) {
    if (y <= ys[0]) return xs[0];
    if (y >= ys[n - 1]) return xs[n - 1];
    std::size_t i = static_cast<std::size_t>(std::upper_bound(ys, ys + n, y) - ys) - 1;
    if (ys[i] == y) return xs[i];
    return interpolate(ys[i], xs[i], ys[i + 1], xs[i + 1], y);
}

template <class S>
MonotonePL1D<S>::MonotonePL1D(std::vector<S> xs, std::vector<S> ys, Strictness strictness)
    : xs_(std::move(xs)), ys_(std::move(ys)), strictness_(strictness) {
    if (xs_.size() < 2 || xs_.size() != ys_.size())
        throw Error(ErrorKind::NotIncreasing, "a PL map needs at least two breakpoints with matching values");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (!is_finite(xs_[i]) || !is_finite(ys_[i]))
            throw Error(ErrorKind::DomainError, "non-finite breakpoint");
        if (i == 0) continue;
        if (!(xs_[i - 1] < xs_[i]))
            throw Error(ErrorKind::NotIncreasing, "breakpoint abscissae must be strictly increasing");
        bool ok = strictness_ == Strictness::strict ? ys_[i - 1] < ys_[i] : ys_[i - 1] <= ys_[i];
        if (!ok) throw Error(ErrorKind::NotIncreasing, "breakpoint values violate the declared monotonicity");
    }
}

template <class S>
MonotonePL1D<S> MonotonePL1D<S>::identity(const S& lo, const S& hi) {
    return MonotonePL1D({lo, hi}, {lo, hi});
}

template <class S>
S MonotonePL1D<S>::eval(const S& x) const {
    const S tol = tolerance<S>();
    if (!is_finite(x) || x < xs_.front() - tol || x > xs_.back() + tol)
        throw Error(ErrorKind::DomainError, "argument outside the map's domain");
    return pl_eval(xs_.data(), ys_.data(), xs_.size(), x);
}

template <class S>
S MonotonePL1D<S>::invert(const S& y) const {
    const S tol = tolerance<S>();
    if (!is_finite(y) || y < ys_.front() - tol || y > ys_.back() + tol)
        throw Error(ErrorKind::RangeError, "value outside the map's range");
    if (strictness_ == Strictness::non_decreasing) {
        for (std::size_t i = 1; i < ys_.size(); ++i)
            if (ys_[i - 1] == ys_[i] && ys_[i] == y)
                throw Error(ErrorKind::NotInvertible, "value lies on a flat segment");
    }
    return pl_invert(xs_.data(), ys_.data(), xs_.size(), y);
}

template <class S>
const MonotonePL1D<S>& f01() {
    static const MonotonePL1D<S> map({from_int<S>(-1), from_int<S>(-1, 2), from_int<S>(0), from_int<S>(1)},
                                     {from_int<S>(-1), from_int<S>(0), from_int<S>(1, 2), from_int<S>(1)});
    return map;
}

template <class S>
S f01_eval(const S& s) {
    if (s >= 0) return (s + 1) / 2;
    if (s >= from_int<S>(-1, 2)) return s + from_int<S>(1, 2);
    return 2 * s + 1;
}

template <class S>
S f01_invert(const S& s) {
    if (s >= from_int<S>(1, 2)) return 2 * s - 1;
    if (s >= 0) return s - from_int<S>(1, 2);
    return (s - 1) / 2;
}

template <class S>
S level(long n) {
    if (n >= 0) return S(1) - times_pow2(S(1), -n);
    return times_pow2(S(1), n) - S(1);
}

template <class S>
StripIndex<S> strip_of(const S& s) {
    if (!(s > -1 && s < 1)) throw Error(ErrorKind::DomainError, "strip_of needs -1 < s < 1");
    long n = Level<S>::from_ordinate(s).strip;
    return StripIndex<S>{n, level<S>(n - 1), level<S>(n)};
}

template <class S>
Level<S> Level<S>::from_ordinate(const S& s) {
    if (!is_finite(s) || s > 1 || s < -1) throw Error(ErrorKind::DomainError, "ordinate outside J");
    if (s == 1) return top();
    if (s == -1) return bottom();
    const S half = from_int<S>(1, 2);
    if (s >= -half && s < half) return s >= 0 ? Level{Kind::interior, 1, s} : Level{Kind::interior, 0, s + half};
    if (s >= 0) return from_gap_top(S(1) - s);
    return from_gap_bottom(S(1) + s);
}

template <class S>
Level<S> Level<S>::from_gap_top(const S& gap) {
    if (!(gap > 0)) return top();
    if (gap > 1) throw Error(ErrorKind::DomainError, "gap to the top edge exceeds 1");
    long fl = floor_log2(gap);
    Level out;
    if (gap == times_pow2(S(1), fl)) {
        out.strip = -fl + 1;
        out.base = S(0);
    } else {
        long j = -fl - 1;
        out.strip = j + 1;
        out.base = S(1) - times_pow2(gap, j);
    }
    return out;
}

template <class S>
Level<S> Level<S>::from_gap_bottom(const S& gap) {
    if (!(gap > 0)) return bottom();
    if (gap >= 1) return from_gap_top(S(2) - gap);
    long fl = floor_log2(gap);
    Level out;
    out.strip = fl + 1;
    out.base = times_pow2(gap, -(fl + 1)) - from_int<S>(1, 2);
    return out;
}

template <class S>
S Level<S>::ordinate() const {
    if (kind == Kind::top) return S(1);
    if (kind == Kind::bottom) return S(-1);
    if (strip == 1) return base;
    if (strip == 0) return base - from_int<S>(1, 2);
    if (strip >= 1) return S(1) - gap();
    return gap() - S(1);
}

template <class S>
S Level<S>::gap() const {
    if (kind != Kind::interior) return S(0);
    if (strip >= 1) return times_pow2(S(1) - base, -(strip - 1));
    return times_pow2(base + from_int<S>(1, 2), strip);
}

template <class S>
Level<S> Level<S>::next() const {
    Level out = *this;
    if (kind == Kind::interior) ++out.strip;
    return out;
}

template <class S>
Level<S> Level<S>::prev() const {
    Level out = *this;
    if (kind == Kind::interior) --out.strip;
    return out;
}

template <class S>
Level<S> Level<S>::reflect() const {
    if (kind == Kind::top) return bottom();
    if (kind == Kind::bottom) return top();
    Level out;
    if (base == 0) {
        out.strip = 2 - strip;
        out.base = S(0);
    } else {
        out.strip = 1 - strip;
        out.base = from_int<S>(1, 2) - base;
    }
    return out;
}

template <class S>
bool Level<S>::operator<(const Level& o) const {
    auto rank = [](Kind k) { return k == Kind::bottom ? 0 : k == Kind::interior ? 1 : 2; };
    if (kind != o.kind) return rank(kind) < rank(o.kind);
    if (kind != Kind::interior) return false;
    if (strip != o.strip) return strip < o.strip;
    return base < o.base;
}

#define RISING_INSTANTIATE(S)                                                    \
    template class MonotonePL1D<S>;                                              \
    template S pl_eval<S>(const S*, const S*, std::size_t, const S&);            \
    template S pl_invert<S>(const S*, const S*, std::size_t, const S&);          \
    template const MonotonePL1D<S>& f01<S>();                                    \
    template S f01_eval<S>(const S&);                                            \
    template S f01_invert<S>(const S&);                                          \
    template S level<S>(long);                                                   \
    template StripIndex<S> strip_of<S>(const S&);                                \
    template struct Level<S>;

RISING_INSTANTIATE(double)
RISING_INSTANTIATE(Rational)

#undef RISING_INSTANTIATE

}  // namespace rising
