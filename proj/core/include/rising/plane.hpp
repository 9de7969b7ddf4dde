#pragma once

#include "rising/limits.hpp"

#include <array>
#include <optional>

namespace rising {

struct RPoint {
    Rational r;
    Rational s;
};

/// The fixed points of the six-points construction.
struct SixPointsConfig {
    Rational k_lo{1, 3};
    Rational k_hi{1, 2};
    std::array<RPoint, 6> u;
    std::array<RPoint, 4> v;
    std::array<RPoint, 8> w;
    std::array<RPoint, 6> x;

    static const SixPointsConfig& get();
};

/// The omega and alpha families of the six-points map (already normalized).
FamilyReport six_points_families();

template <class S>
SquareMap<S> build_six_points(long max_stage);

enum class Region { l1, l2, interior_f, outside_f };
const char* region_name(Region r);
/// Position relative to F = [-1/2, 1/2] x [1/3, 1/2]; tol widens the edges.
template <class S>
Region six_points_region(const SquarePoint<S>& p, double tol = 0.0);

/// The PL quotient map xi of the square onto itself minus four slits.
template <class S>
class QuotientMap {
public:
    QuotientMap();

    SquarePoint<S> eval(const SquarePoint<S>& p) const;
    /// One preimage off the slits, two on a slit (except at its inner end).
    std::vector<SquarePoint<S>> invert(const SquarePoint<S>& p) const;
    bool on_slit(const SquarePoint<S>& p) const;

    struct Triangle {
        std::array<std::array<Rational, 2>, 3> src;  ///< (r, 1 - s) on the upper right quadrant
        std::array<std::array<Rational, 2>, 3> dst;
    };
    const std::vector<Triangle>& triangles() const { return tris_; }

private:
    struct Local {
        S r{};
        S e{};
    };
    struct Frame {
        bool identity = false;
        bool flip_r = false;
        bool flip_v = false;
        Local q;
    };
    Frame to_local(const SquarePoint<S>& p) const;
    SquarePoint<S> from_local(const Frame& f, const Local& q) const;
    bool map_through(const Local& q, bool forward, Local& out) const;

    std::vector<Triangle> tris_;
    std::vector<std::array<std::array<S, 2>, 3>> src_;
    std::vector<std::array<std::array<S, 2>, 3>> dst_;
};

template <class S>
SquarePoint<S> quotient_eval(const QuotientMap<S>& q, const SquarePoint<S>& p) { return q.eval(p); }
template <class S>
std::vector<SquarePoint<S>> quotient_invert(const QuotientMap<S>& q, const SquarePoint<S>& p) { return q.invert(p); }

struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

inline constexpr double kDeltaTan = 1e-12;

/// psi(r, s) = (tan(pi r / 2), tan(pi s / 2)). Throws DomainError within
/// kDeltaTan of the boundary.
template <class S>
PlanePoint tangent_eval(const SquarePoint<S>& p);
template <class S>
SquarePoint<S> tangent_invert(const PlanePoint& y);

class DiskSpec {
public:
    enum class Kind { rectangle, ellipse, star_polygon };

    static DiskSpec rectangle(PlanePoint center, double half_width, double half_height);
    static DiskSpec ellipse(PlanePoint center, double a, double b);
    static DiskSpec star_polygon(PlanePoint center, std::vector<PlanePoint> vertices);
    static DiskSpec unit_disk() { return ellipse({0.0, 0.0}, 1.0, 1.0); }
    /// G = psi(F) = [-1, 1] x [sqrt(3)/3, 1].
    static DiskSpec reference();

    Kind kind() const { return kind_; }
    const char* kind_name() const;
    PlanePoint center() const { return center_; }
    double a() const { return a_; }
    double b() const { return b_; }
    const std::vector<PlanePoint>& vertices() const { return vertices_; }

    /// Distance from the center to the boundary along the unit vector (ux, uy).
    double radius(double ux, double uy) const;

private:
    DiskSpec() = default;
    void validate() const;

    Kind kind_ = Kind::ellipse;
    PlanePoint center_;
    double a_ = 1.0;
    double b_ = 1.0;
    std::vector<PlanePoint> vertices_;
};

/// Radial homeomorphism of the plane taking G onto E.
class DiskConjugacy {
public:
    explicit DiskConjugacy(DiskSpec target) : g_(DiskSpec::reference()), e_(std::move(target)) {}
    PlanePoint forward(const PlanePoint& p) const;
    PlanePoint backward(const PlanePoint& q) const;
    const DiskSpec& target() const { return e_; }

private:
    static PlanePoint radial(const DiskSpec& from, const DiskSpec& to, const PlanePoint& p);
    DiskSpec g_;
    DiskSpec e_;
};

PlanePoint disk_conjugacy(const DiskSpec& spec, const PlanePoint& p, Direction direction);

template <class S>
struct PlaneStep {
    bool overflow = false;
    PlanePoint plane;
    SquarePoint<S> square;
};

enum class PlaneClass { bounded, positively_divergent, negatively_divergent, doubly_divergent, undetermined };
const char* plane_class_name(PlaneClass c);

template <class S>
struct PlaneClassification {
    PlaneClass kind = PlaneClass::undetermined;
    SquarePoint<S> square_start;
    Classification<S> forward;
    Classification<S> backward;
    std::optional<PlanePoint> forward_limit;
    std::optional<PlanePoint> backward_limit;
};

/// h = zeta psi g psi^-1 zeta^-1 with g = xi f xi^-1.
template <class S>
class PlanePipeline {
public:
    PlanePipeline(SquareMap<S> f, DiskSpec disk);

    const SquareMap<S>& square_map() const { return f_; }
    const QuotientMap<S>& quotient() const { return xi_; }
    const DiskConjugacy& zeta() const { return zeta_; }
    const DiskSpec& reference() const { return g_rect_; }

    /// g and its inverse.
    SquarePoint<S> six_points_map(const SquarePoint<S>& p, Direction direction) const;
    /// g along xi(f^n(x)): the same orbit, without re-inverting xi.
    Stepper<S> lifted_stepper(const SquarePoint<S>& start, Direction direction) const;

    SquarePoint<S> to_square(const PlanePoint& y) const;
    PlanePoint to_plane(const SquarePoint<S>& x) const;

    PlaneStep<S> plane_map(const PlanePoint& y, Direction direction) const;
    PlaneClassification<S> classify(const PlanePoint& y, const ClassifyParams& params = {}) const;
    PlaneClassification<S> classify_square(const SquarePoint<S>& x, const ClassifyParams& params = {}) const;

private:
    SquareMap<S> f_;
    QuotientMap<S> xi_;
    DiskConjugacy zeta_;
    DiskSpec g_rect_;
};

template <class S>
PlaneStep<S> plane_map(const PlanePipeline<S>& pipe, const PlanePoint& y, Direction direction) {
    return pipe.plane_map(y, direction);
}
template <class S>
PlaneClassification<S> classify_plane_orbit(const PlanePipeline<S>& pipe, const PlanePoint& y,
                                            const ClassifyParams& params = {}) {
    return pipe.classify(y, params);
}

/// Block-end samples of g started at xi(x) (stepped along the lift), compared
/// with the xi-image of the f-estimate at x.
struct PushforwardReport {
    double residual = 0.0;
    double hausdorff = 0.0;
    long samples = 0;
    bool ok = false;
};

template <class S>
PushforwardReport pushforward_check(const PlanePipeline<S>& pipe, const SquarePoint<S>& x, long stage_budget,
                                    Side side);

}  // namespace rising
