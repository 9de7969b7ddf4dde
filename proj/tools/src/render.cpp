#include "cli.hpp"

#include "rising/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace cli {

using namespace rising;

namespace {

constexpr int kSize = 1024;

class Svg {
public:
    Svg() {
        os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
            << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
        os_ << "<rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const char* stroke, double width, const char* extra = "") {
        os_ << "<line x1=\"" << n(x1) << "\" y1=\"" << n(y1) << "\" x2=\"" << n(x2) << "\" y2=\"" << n(y2)
            << "\" stroke=\"" << stroke << "\" stroke-width=\"" << n(width) << "\"" << extra << "/>\n";
    }
    void rect(double x, double y, double w, double h, const char* stroke, double width) {
        os_ << "<rect x=\"" << n(x) << "\" y=\"" << n(y) << "\" width=\"" << n(w) << "\" height=\"" << n(h)
            << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << n(width) << "\"/>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts, const char* stroke, double width,
                  const char* extra = "") {
        if (pts.size() < 2) return;
        os_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << n(width) << "\"" << extra
            << " points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) os_ << (i ? " " : "") << n(pts[i].first) << "," << n(pts[i].second);
        os_ << "\"/>\n";
    }
    void dot(double x, double y, double r, const char* fill) {
        os_ << "<circle cx=\"" << n(x) << "\" cy=\"" << n(y) << "\" r=\"" << n(r) << "\" fill=\"" << fill << "\"/>\n";
    }
    void text(double x, double y, const std::string& s, int size = 14) {
        os_ << "<text x=\"" << n(x) << "\" y=\"" << n(y) << "\" font-family=\"serif\" font-size=\"" << size << "\">"
            << s << "</text>\n";
    }
    std::string finish() {
        os_ << "</svg>\n";
        return os_.str();
    }

private:
    static std::string n(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        std::string s = buf;
        return s == "-0.00" ? "0.00" : s;
    }
    std::ostringstream os_;
};

// J^2 onto the canvas with a margin.
constexpr double kMargin = 48.0;
double sx(double r) { return kSize / 2.0 + (kSize / 2.0 - kMargin) * r; }
double sy(double s) { return kSize / 2.0 - (kSize / 2.0 - kMargin) * s; }

template <class S>
std::pair<double, double> at(const SquarePoint<S>& p) {
    return {sx(to_double(p.r)), sy(to_double(p.y.ordinate()))};
}

void square_frame(Svg& svg) {
    for (long n = -9; n <= 9; ++n) {
        const double t = level<double>(n);
        svg.line(sx(-1), sy(t), sx(1), sy(t), "#d0d0d0", 0.8);
    }
    svg.rect(sx(-1), sy(1), sx(1) - sx(-1), sy(-1) - sy(1), "black", 1.5);
}

void orbit_path(Svg& svg, const std::vector<std::pair<double, double>>& pts, const char* color) {
    svg.polyline(pts, color, 1.0, " stroke-dasharray=\"2,3\"");
    for (const auto& [x, y] : pts) svg.dot(x, y, 2.0, color);
}

const char* kColors[] = {"#c0392b", "#2471a3", "#229954", "#8e44ad", "#d68910", "#17202a"};

template <class S>
std::string render_square(const Options& opt, const Config& cfg) {
    SquareMap<S> f(cfg.families, cfg.max_stage);
    const long stages = opt.budget > 0 ? std::min(opt.budget, cfg.max_stage) : std::min(4L, cfg.max_stage);
    f.ensure_stage(stages);
    Svg svg;
    square_frame(svg);
    for (int half = 0; half < 2; ++half) {
        RisingBuilder<S>& b = half == 0 ? f.upper() : f.lower();
        const double sign = half == 0 ? 1.0 : -1.0;
        for (long k = 1; k <= stages; ++k) {
            for (const AnchorArcs<S>& arcs : b.stage_data(k).arcs) {
                Level<double> y0 = Level<double>::from_ordinate(to_double(arcs.base));
                for (long d = 0; d < k * k - 1; ++d) y0 = y0.next();
                for (std::size_t t = 0; t < arcs.rows.front().size(); ++t) {
                    std::vector<std::pair<double, double>> pts;
                    Level<double> y = y0;
                    for (const auto& row : arcs.rows) {
                        pts.emplace_back(sx(to_double(row[t])), sy(sign * y.ordinate()));
                        y = y.next();
                    }
                    svg.polyline(pts, k % 2 ? "#5d6d7e" : "#a04000", 0.7);
                }
            }
        }
    }
    const Direction dir = parse_direction(opt.direction);
    std::vector<std::string> starts = opt.square_points;
    if (starts.empty()) starts = {"-0.6,0.1", "-0.2,0.1", "0.2,0.1", "0.6,0.1", "-0.4,-0.7", "0.4,-0.7"};
    int c = 0;
    for (const auto& text : starts) {
        const OrbitRecord<S> rec = orbit(f, parse_square_point<S>(text), opt.steps, dir);
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : rec.points) pts.push_back(at(p));
        orbit_path(svg, pts, kColors[c++ % 6]);
    }
    svg.text(kMargin, kMargin / 2 + 6, "strips t_n, anchor arcs through stage " + std::to_string(stages));
    return svg.finish();
}

template <class S>
std::string render_six_points(const Options& opt, const Config& cfg) {
    const PlanePipeline<S> pipe(SquareMap<S>(cfg.families, cfg.max_stage), cfg.disk);
    const auto& sp = SixPointsConfig::get();
    Svg svg;
    square_frame(svg);
    svg.rect(sx(-0.5), sy(0.5), sx(0.5) - sx(-0.5), sy(1.0 / 3) - sy(0.5), "#1f618d", 1.5);
    svg.rect(sx(-0.5), sy(-1.0 / 3), sx(0.5) - sx(-0.5), sy(-0.5) - sy(-1.0 / 3), "#1f618d", 1.5);
    for (int i : {0, 2, 3, 5}) svg.line(sx(to_double(sp.u[i].r)), sy(to_double(sp.u[i].s)), sx(to_double(sp.x[i].r)),
                                        sy(to_double(sp.x[i].s)), "black", 2.5);
    auto label = [&](const RPoint& p, const std::string& name) {
        const double x = sx(to_double(p.r)), y = sy(to_double(p.s));
        svg.dot(x, y, 3.5, "black");
        svg.text(x + 5, y + (p.s > 0 ? -8 : 18), name);
    };
    for (int i = 0; i < 6; ++i) label(sp.u[i], "u" + std::to_string(i + 1));
    for (int i = 0; i < 4; ++i) label(sp.v[i], "v" + std::to_string(i + 1));
    for (int i = 0; i < 8; ++i) label(sp.w[i], "w" + std::to_string(i + 1));
    for (int i = 0; i < 6; ++i) label(sp.x[i], "x" + std::to_string(i + 1));

    std::vector<SquarePoint<S>> starts;
    for (const auto& text : opt.square_points) starts.push_back(parse_square_point<S>(text));
    if (starts.empty())
        for (const char* t : {"-1/2,0.4", "0.1,1/3", "0.1,0.4", "0.3,-0.4"}) starts.push_back(parse_square_point<S>(t));
    const Direction dir = parse_direction(opt.direction);
    int c = 0;
    for (const auto& x : starts) {
        const Stepper<S> g = pipe.lifted_stepper(x, dir);
        std::vector<std::pair<double, double>> pts{at(x)};
        SquarePoint<S> p = x;
        for (long n = 0; n < opt.steps; ++n) {
            p = g(p);
            pts.push_back(at(p));
        }
        orbit_path(svg, pts, kColors[c++ % 6]);
    }
    svg.text(kMargin, kMargin / 2 + 6, "F, slits and orbits of g");
    return svg.finish();
}

template <class S>
std::string render_plane(const Options& opt, const Config& cfg) {
    const PlanePipeline<S> pipe(SquareMap<S>(cfg.families, cfg.max_stage), cfg.disk);
    const DiskSpec& e = cfg.disk;
    // Viewport centered on E, three radii wide.
    double extent = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double th = 2.0 * std::numbers::pi * i / 64;
        extent = std::max(extent, e.radius(std::cos(th), std::sin(th)));
    }
    extent *= 3.0;
    const PlanePoint c0 = e.center();
    auto px = [&](const PlanePoint& p) {
        return std::make_pair(kSize / 2.0 + (p.x - c0.x) / extent * (kSize / 2.0),
                              kSize / 2.0 - (p.y - c0.y) / extent * (kSize / 2.0));
    };
    auto inside = [&](const PlanePoint& p) {
        return std::fabs(p.x - c0.x) <= extent && std::fabs(p.y - c0.y) <= extent;
    };
    Svg svg;
    svg.line(0, px(PlanePoint{c0.x, 0}).second, kSize, px(PlanePoint{c0.x, 0}).second, "#d0d0d0", 0.8);
    svg.line(px(PlanePoint{0, c0.y}).first, 0, px(PlanePoint{0, c0.y}).first, kSize, "#d0d0d0", 0.8);
    std::vector<std::pair<double, double>> boundary;
    for (const PlanePoint& p : boundary_samples(e, 256)) boundary.push_back(px(p));
    boundary.push_back(boundary.front());
    svg.polyline(boundary, "black", 1.5);

    std::vector<PlanePoint> starts;
    for (const auto& text : opt.plane_points) starts.push_back(parse_plane_point(text));
    if (starts.empty()) {
        const auto b = boundary_samples(e, 8);
        const auto in = interior_samples(e, 8);
        starts = {b[1], b[5], in[2], in[6]};
    }
    const Direction dir = parse_direction(opt.direction);
    int c = 0;
    for (const PlanePoint& y : starts) {
        SquarePoint<S> x = pipe.to_square(y);
        const Stepper<S> g = pipe.lifted_stepper(x, dir);
        std::vector<std::pair<double, double>> seg;
        const char* color = kColors[c++ % 6];
        if (inside(y)) seg.push_back(px(y));
        for (long n = 0; n < opt.steps; ++n) {
            x = g(x);
            PlanePoint q;
            bool ok = true;
            try {
                q = pipe.to_plane(x);
            } catch (const Error&) {
                ok = false;
            }
            if (ok && inside(q)) {
                seg.push_back(px(q));
            } else {
                orbit_path(svg, seg, color);
                seg.clear();
            }
        }
        orbit_path(svg, seg, color);
    }
    svg.text(16, 28, "plane orbits near E");
    return svg.finish();
}

}  // namespace

int cmd_render(const Options& opt) {
    Config cfg = load(opt);
    std::string svg;
    const bool exact = cfg.mode == Mode::exact;
    if (opt.figure == "square")
        svg = exact ? render_square<Rational>(opt, cfg) : render_square<double>(opt, cfg);
    else if (opt.figure == "six-points")
        svg = exact ? render_six_points<Rational>(opt, cfg) : render_six_points<double>(opt, cfg);
    else
        svg = exact ? render_plane<Rational>(opt, cfg) : render_plane<double>(opt, cfg);
    emit(opt, svg);
    return 0;
}

}  // namespace cli
