#pragma once

#include "rising/builder.hpp"

#include <memory>

namespace rising {

/// The assembled normally rising homeomorphism of J^2: the upper builder
/// on strips m >= 1, f02 on D0, and the mirrored lower builder below.
template <class S>
class SquareMap {
public:
    using Clock = typename RisingBuilder<S>::Clock;

    SquareMap(const FamilyReport& families, long max_stage);

    SquarePoint<S> eval(const SquarePoint<S>& p) const;
    SquarePoint<S> eval_inverse(const SquarePoint<S>& p) const;

    /// Psi_v f^-1 Psi_v, sharing the stage data with this map.
    SquareMap reflected() const;

    RisingBuilder<S>& upper() const { return *upper_; }
    RisingBuilder<S>& lower() const { return *lower_; }
    const FamilyReport& families() const { return *families_; }
    long max_stage() const { return upper_->max_stage(); }
    bool is_reflected() const { return reflected_; }

    void ensure_stage(long k) const;
    void set_deadline(std::optional<typename Clock::time_point> deadline) const;

private:
    SquareMap() = default;

    std::shared_ptr<const FamilyReport> families_;
    std::shared_ptr<RisingBuilder<S>> upper_;
    std::shared_ptr<RisingBuilder<S>> lower_;
    bool reflected_ = false;
};

template <class S>
SquarePoint<S> reflect_v(const SquarePoint<S>& p) {
    return SquarePoint<S>{p.r, p.y.reflect()};
}

struct BlockReport {
    long m = 0;
    long first_strip = 0;
    long last_strip = 0;
    double bound = 0.0;
    double observed = 0.0;
    bool ok = true;
};

struct ConditionReport {
    long stage = 0;
    std::vector<BlockReport> blocks;  ///< C.2 blocks for m = 1 .. stage + 1
    double level_bound = 0.0;         ///< C.3 at t_{(stage+1)^2 - 1}
    double level_observed = 0.0;
    bool level_ok = true;
    bool c1_ok = true;                ///< C.1: the built maps stayed strictly increasing
    double d0_observed = 0.0;
    long samples = 0;
    long violations = 0;
};

/// Samples |p f(r, s) - r| on a grid of `grid` abscissae by `grid` levels
/// per block.
template <class S>
ConditionReport check_conditions(const SquareMap<S>& map, long k, int grid = 64);

}  // namespace rising
