#pragma once

#include "rising/pl1d.hpp"
#include "rising/profiles.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace rising {

/// Stage k covers the strips k^2 .. (k+1)^2 - 1; strip 0 is stage 0.
long stage_of_strip(long m);

/// Abscissae of one level orbit across the 2k+1 steps of stage k.
/// rows[i][t] is the abscissa after i steps of the stage (row 0 is the
/// value reached at depth k^2-1) of the t-th grid point of R_k in
/// ascending order. The map applied at step i is the PL map
/// rows[i-1] -> rows[i].
template <class S>
struct AnchorArcs {
    S base{};
    int member = 0;
    std::vector<std::vector<S>> rows;
};

/// A component of the stage layout in base coordinates b in [0, 1/2];
/// the level with base b in strip m has ordinate f01^(m-1)(b).
template <class S>
struct Band {
    enum class Kind { anchor, gap };
    Kind kind = Kind::gap;
    S lo{};
    S hi{};
    int member = -1;  ///< anchor bands only
};

template <class S>
struct StageData {
    long k = 0;
    std::vector<std::size_t> order;    ///< grid positions of R_k sorted by abscissa
    std::vector<Band<S>> bands;        ///< tiles [0, 1/2]
    std::vector<AnchorArcs<S>> arcs;   ///< band boundaries by base; the top orbit (base 1/2) is last
    double max_step = 0.0;             ///< largest |x_i - x_{i-1}| over the stored arcs
};

/// Upper half of a normally rising map for one normalized family: the
/// abscissa maps phi(m, b) of the levels in strips m >= 1, built stage by
/// stage and evaluated lazily between stored band boundaries.
template <class S>
class RisingBuilder {
public:
    using Clock = std::chrono::steady_clock;

    RisingBuilder(IntervalFamily normalized, long max_stage);

    const IntervalFamily& family() const { return family_; }
    const DenseGrid& grid() const { return grid_; }
    long max_stage() const { return max_stage_; }
    /// Number of completed stages; the built region is J x [-1/2, t_{(k+1)^2-1}].
    long stage() const;

    /// Builds stage stage()+1. Throws StageOverflow past the cap.
    void advance_stage();
    /// Builds through stage k. Throws CapReached past the cap.
    void ensure_stage(long k);

    /// phi at an interior level of strip m >= 1, applied to r.
    S apply(const Level<S>& level, const S& r);
    S apply_inverse(const Level<S>& level, const S& y);

    /// The PL map phi at a level, as explicit breakpoints (gap levels give the
    /// merged breakpoints of the blend).
    MonotonePL1D<S> level_map(const Level<S>& level);

    const StageData<S>& stage_data(long k) const;
    /// Installs precomputed stage data (deserialization); must be the next stage.
    void install_stage(StageData<S> data);
    StageData<S> layout_for_stage(long k) const;

    /// Target of member n at grid position j for the branch used at stage k.
    S target(int member, long k, std::size_t j);
    S grid_value(std::size_t j);

    /// Evaluations abort with BudgetExceeded once the deadline passes.
    void set_deadline(std::optional<Clock::time_point> deadline) { deadline_ = deadline; }
    /// Largest bit size of any stored coordinate (0 in floating mode).
    std::size_t max_bit_size() const;

private:
    struct Cursor {
        S base{};
        long horizon = 0;
        long depth = 0;
        std::vector<S> pushed;
        std::map<long, std::vector<S>> starts;
    };

    struct MapRef {
        enum class Kind { identity, nodes, blend, anchor };
        Kind kind = Kind::identity;
        const std::vector<S>* x0 = nullptr;
        const std::vector<S>* y0 = nullptr;
        const std::vector<S>* x1 = nullptr;
        const std::vector<S>* y1 = nullptr;
        S w0{};
        S w1{};
        std::vector<S> own_x;
        std::vector<S> own_y;
    };

    void check_deadline() const;
    long stage_bound_checked(long k);
    void top_map(long m, MapRef& out);
    void arc_map(const AnchorArcs<S>& arcs, long m, MapRef& out) const;
    void resolve(const Level<S>& level, MapRef& out, Cursor* self);
    void anchor_nodes(long k, long i, int member, const std::vector<S>& start, MapRef& out);
    S eval_ref(const MapRef& ref, const S& x) const;
    S invert_ref(const MapRef& ref, const S& y) const;
    void blend_breakpoints(const MapRef& ref, std::vector<S>& xs, std::vector<S>& ys) const;

    Cursor& cursor_for(const S& base);
    const std::vector<S>& stage_start(Cursor& c, long k);
    void reset_cursor(Cursor& c, long horizon);
    void step_cursor(Cursor& c);

    /// Member anchored at base b in stage k, or -1 for gap levels; sets band.
    int locate(long k, const S& b, const Band<S>** band) const;
    std::size_t arc_index(const StageData<S>& st, const S& base) const;

    IntervalFamily family_;
    DenseGrid grid_;
    long max_stage_;
    std::vector<StageData<S>> stages_;  // stages_[k-1] is stage k
    std::vector<S> grid_values_;
    std::vector<std::vector<S>> targets_;  // [member * 2 + branch - 1][j]
    std::map<S, Cursor> cursors_;
    std::optional<Clock::time_point> deadline_;
    std::vector<S> identity_nodes_;
    mutable std::recursive_mutex mutex_;
};

}  // namespace rising
