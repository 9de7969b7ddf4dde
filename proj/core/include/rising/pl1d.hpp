#pragma once

#include "rising/error.hpp"
#include "rising/scalar.hpp"

#include <cstddef>
#include <vector>

namespace rising {

inline constexpr double kEpsDomain = 1e-12;
inline constexpr double kEpsInverse = 1e-12;

enum class Strictness { strict, non_decreasing };

/// Monotone piecewise-linear function given by its breakpoints.
template <class S>
class MonotonePL1D {
public:
    MonotonePL1D() = default;
    MonotonePL1D(std::vector<S> xs, std::vector<S> ys, Strictness strictness = Strictness::strict);

    static MonotonePL1D identity(const S& lo, const S& hi);

    const std::vector<S>& xs() const { return xs_; }
    const std::vector<S>& ys() const { return ys_; }
    Strictness strictness() const { return strictness_; }
    std::size_t size() const { return xs_.size(); }

    S domain_lo() const { return xs_.front(); }
    S domain_hi() const { return xs_.back(); }

    S eval(const S& x) const;
    S invert(const S& y) const;

private:
    std::vector<S> xs_;
    std::vector<S> ys_;
    Strictness strictness_ = Strictness::strict;
};

/// Unchecked evaluation over sorted node arrays, shared with the builder.
/// Ties in x resolve to the last node with that abscissa.
template <class S>
S pl_eval(const S* xs, const S* ys, std::size_t n, const S& x);

template <class S>
S pl_invert(const S* xs, const S* ys, std::size_t n, const S& y);

template <class S>
S eval_pl(const MonotonePL1D<S>& map, const S& x) { return map.eval(x); }

template <class S>
S invert_pl(const MonotonePL1D<S>& map, const S& y) { return map.invert(y); }

/// The base homeomorphism f01 of J = [-1, 1].
template <class S>
const MonotonePL1D<S>& f01();

template <class S>
S f01_eval(const S& s);

template <class S>
S f01_invert(const S& s);

/// t_n = f01^n(0).
template <class S>
S level(long n);

template <class S>
struct StripIndex {
    long n = 0;
    S lower;
    S upper;
};

template <class S>
StripIndex<S> strip_of(const S& s);

/// A horizontal level of J^2, stored so that levels near s = +-1 keep full
/// precision in floating mode: the ordinate is f01^(strip-1)(base) with base
/// in [0, 1/2), and the strip follows the upward tie-break t_n -> n+1.
template <class S>
struct Level {
    enum class Kind { interior, top, bottom };

    Kind kind = Kind::interior;
    long strip = 1;
    S base{};

    static Level top() { return Level{Kind::top, 0, S{}}; }
    static Level bottom() { return Level{Kind::bottom, 0, S{}}; }
    static Level from_ordinate(const S& s);
    /// Level with 1 - s = gap (gap in (0, 1]).
    static Level from_gap_top(const S& gap);
    /// Level with s + 1 = gap (gap in (0, 1]).
    static Level from_gap_bottom(const S& gap);

    bool is_edge() const { return kind != Kind::interior; }
    bool upper_half() const { return kind == Kind::top || (kind == Kind::interior && strip >= 1); }

    S ordinate() const;
    /// 1 - s for the upper half (strip >= 1), s + 1 otherwise.
    S gap() const;

    Level next() const;
    Level prev() const;
    /// The vertical reflection s -> -s.
    Level reflect() const;

    bool operator==(const Level& o) const {
        return kind == o.kind && (kind != Kind::interior || (strip == o.strip && base == o.base));
    }
    bool operator!=(const Level& o) const { return !(*this == o); }
    bool operator<(const Level& o) const;
};

template <class S>
struct SquarePoint {
    S r{};
    Level<S> y;

    bool operator==(const SquarePoint& o) const { return r == o.r && y == o.y; }
    bool operator!=(const SquarePoint& o) const { return !(*this == o); }
};

template <class S>
SquarePoint<S> make_point(const S& r, const S& s) {
    return SquarePoint<S>{r, Level<S>::from_ordinate(s)};
}

/// The product map f02(r, s) = (r, f01(s)) on levels.
template <class S>
SquarePoint<S> f02(const SquarePoint<S>& p) { return SquarePoint<S>{p.r, p.y.next()}; }

}  // namespace rising
