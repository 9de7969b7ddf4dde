#pragma once

#include "rising/config.hpp"

#include <cstdint>
#include <random>

namespace rising {

/// Deterministic sample source (fixed seed, no distribution objects).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }
    /// Integer in [lo, hi].
    long integer(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    /// Dyadic rational in (lo, hi) with 2^bits steps.
    template <class S>
    S uniform(const S& lo, const S& hi, int bits = 20) {
        const long n = 1L << bits;
        const long i = integer(0, n - 1);
        return lo + (hi - lo) * from_int<S>(2 * i + 1, 2 * n);
    }
    /// A level in strips [lo_strip, hi_strip] with a dyadic base.
    template <class S>
    Level<S> level(long lo_strip, long hi_strip, int bits = 20) {
        Level<S> y;
        y.strip = integer(lo_strip, hi_strip);
        const long n = 1L << bits;
        y.base = from_int<S>(integer(0, n - 1), 2 * n);
        return y;
    }

private:
    std::mt19937_64 rng_;
};

struct CheckResult {
    std::string module;
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerifyOptions {
    long float_stage = 12;
    long exact_stage = 3;
    long samples = 10000;
    long exact_samples = 2000;
    long pushforward_starts = 20;
    long boundary_points = 40;
    std::uint64_t seed = 20260101;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool ok() const;
    std::string to_json() const;
};

VerifyReport run_verify(const Config& config, const VerifyOptions& options = {});

// Individual suites, shared with the test programs.
std::vector<CheckResult> verify_pl1d(Sampler& rng);
std::vector<CheckResult> verify_profiles(const Config& config, Sampler& rng);

template <class S>
CheckResult check_normally_rising(const SquareMap<S>& f, long max_strip, long samples, Sampler& rng);
template <class S>
CheckResult check_monotone(const SquareMap<S>& f, long max_strip, long samples, Sampler& rng);
template <class S>
CheckResult check_round_trip(const SquareMap<S>& f, long max_strip, long samples, Sampler& rng);
template <class S>
CheckResult check_anchor_law(const SquareMap<S>& f, long stages);
template <class S>
CheckResult check_mirror(const SquareMap<S>& f, long max_strip, long samples, Sampler& rng);
template <class S>
CheckResult check_stage0(const SquareMap<S>& f);

std::vector<CheckResult> verify_limits(const SquareMap<double>& f, const Config& config);
std::vector<CheckResult> verify_quotient(Sampler& rng, int grid = 512);
std::vector<CheckResult> verify_plane(const PlanePipeline<double>& pipe, const Config& config, long boundary_points,
                                      long pushforward_starts, Sampler& rng);

/// Points of the plane on the boundary of E and strictly inside it.
std::vector<PlanePoint> boundary_samples(const DiskSpec& disk, long count);
std::vector<PlanePoint> interior_samples(const DiskSpec& disk, long count);

}  // namespace rising
