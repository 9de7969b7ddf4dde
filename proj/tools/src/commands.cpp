#include "cli.hpp"

#include "rising/serialize.hpp"
#include "rising/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace cli {

using namespace rising;

std::string fmt(double x) { return to_string(x == 0.0 ? 0.0 : x); }
std::string fmt(const Rational& q) { return to_string(q); }

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        write_file(opt.out, text);
    }
}

namespace {

std::pair<std::string, std::string> split_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw Error(ErrorKind::ParseError, "expected two comma separated numbers, got '" + text + "'");
    return {text.substr(0, comma), text.substr(comma + 1)};
}

Mode map_mode(const std::string& path) {
    const json doc = json::parse(read_file(path), nullptr, false);
    if (doc.is_discarded() || !doc.contains("mode") || !doc["mode"].is_string())
        throw Error(ErrorKind::ParseError, path + ": not a serialized map");
    return parse_mode(doc["mode"].get<std::string>());
}

template <class S>
SquareMap<S> acquire(const Options& opt, Config& cfg) {
    if (!opt.map.empty()) return deserialize_map<S>(read_file(opt.map), &cfg);
    return SquareMap<S>(cfg.families, cfg.max_stage);
}

// Runs f(0..n-1) on a small pool; results keep the input order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, F f) {
    std::vector<T> out(n);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        out[i] = f(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

json plane_json(const std::optional<PlanePoint>& p) {
    if (!p) return nullptr;
    return json::array({scalar(p->x), scalar(p->y)});
}

template <class S>
std::string csv_row(const PlanePipeline<S>& pipe, long step, const SquarePoint<S>& p) {
    std::ostringstream os;
    os << step << "," << fmt(p.r) << ",";
    if (p.y.kind == Level<S>::Kind::top)
        os << "1,inf,";
    else if (p.y.kind == Level<S>::Kind::bottom)
        os << "-1,-inf,";
    else
        os << fmt(p.y.ordinate()) << "," << p.y.strip << ",";
    try {
        const PlanePoint y = pipe.to_plane(p);
        os << fmt(y.x) << "," << fmt(y.y);
    } catch (const Error&) {
        os << ",";
    }
    os << "\n";
    return os.str();
}

template <class S>
int build_impl(const Options& opt, const Config& cfg) {
    SquareMap<S> f(cfg.families, cfg.max_stage);
    const long k = opt.budget >= 0 ? opt.budget : std::min(12L, cfg.max_stage);
    f.ensure_stage(k);
    const std::string path = opt.out.empty() ? cfg.output_dir + "/map.json" : opt.out;
    write_file(path, serialize_map(f, cfg));
    json j;
    j["command"] = "build";
    j["mode"] = mode_name(cfg.mode);
    j["stage"] = k;
    j["path"] = path;
    j["max_bits"] = std::max(f.upper().max_bit_size(), f.lower().max_bit_size());
    std::cout << j.dump(2) << "\n";
    return 0;
}

template <class S>
int orbit_impl(const Options& opt, Config& cfg) {
    if (opt.square_points.size() + opt.plane_points.size() != 1)
        throw Error(ErrorKind::ParseError, "orbit needs exactly one --square-point or --plane-point");
    const SquareMap<S> f = acquire<S>(opt, cfg);
    const PlanePipeline<S> pipe(f, cfg.disk);
    const Direction dir = parse_direction(opt.direction);
    std::string csv = "step,r,s,strip,plane_x,plane_y\n";
    bool capped = false;
    if (!opt.square_points.empty()) {
        const OrbitRecord<S> rec = orbit(f, parse_square_point<S>(opt.square_points[0]), opt.steps, dir);
        for (std::size_t i = 1; i < rec.points.size(); ++i) csv += csv_row(pipe, static_cast<long>(i), rec.points[i]);
        capped = rec.status == OrbitStatus::cap_reached;
    } else {
        SquarePoint<S> x = pipe.to_square(parse_plane_point(opt.plane_points[0]));
        const Stepper<S> g = pipe.lifted_stepper(x, dir);
        for (long n = 1; n <= opt.steps; ++n) {
            try {
                x = g(x);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::CapReached) throw;
                capped = true;
                break;
            }
            csv += csv_row(pipe, n, x);
        }
    }
    emit(opt, csv);
    if (capped) throw Error(ErrorKind::CapReached, "orbit stopped at the stage cap " + std::to_string(f.max_stage()));
    return 0;
}

template <class S>
json estimate_json(const LimitEstimate<S>& e) {
    json j;
    j["edge"] = edge_name(e.edge);
    j["lo"] = scalar(e.lo);
    j["hi"] = scalar(e.hi);
    j["residual"] = e.residual;
    j["samples"] = e.samples;
    j["blocks"] = e.blocks;
    j["last_stage"] = e.last_stage;
    j["status"] = orbit_status_name(e.status);
    return j;
}

template <class S>
int limits_impl(const Options& opt, Config& cfg) {
    if (!opt.plane_points.empty()) throw Error(ErrorKind::ParseError, "limits takes --square-point starts");
    if (opt.square_points.empty()) throw Error(ErrorKind::ParseError, "limits needs at least one --square-point");
    const SquareMap<S> f = acquire<S>(opt, cfg);
    const long budget = opt.budget > 0 ? opt.budget : cfg.estimation.stage_budget;
    std::vector<SquarePoint<S>> starts;
    for (const auto& t : opt.square_points) starts.push_back(parse_square_point<S>(t));
    const bool want_omega = !opt.direction_set || opt.direction == "fwd";
    const bool want_alpha = !opt.direction_set || opt.direction == "bwd";
    auto results = parallel_map<json>(starts.size(), opt.jobs, [&](std::size_t i) {
        json r;
        r["start"] = point_json(starts[i]);
        if (want_omega) r["omega"] = estimate_json(estimate_omega(f, starts[i], budget));
        if (want_alpha) r["alpha"] = estimate_json(estimate_alpha(f, starts[i], budget));
        return r;
    });
    json out;
    out["command"] = "limits";
    out["mode"] = mode_name(cfg.mode);
    out["budget"] = budget;
    out["results"] = results;
    emit(opt, out.dump(2) + "\n");
    return 0;
}

template <class S>
json side_json(const Classification<S>& c) {
    json j;
    j["kind"] = orbit_class_name(c.kind);
    j["steps"] = c.steps;
    j["limit"] = c.kind == OrbitClass::undetermined ? json(nullptr) : point_json(c.limit);
    return j;
}

template <class S>
int classify_impl(const Options& opt, Config& cfg) {
    if (opt.square_points.empty() && opt.plane_points.empty())
        throw Error(ErrorKind::ParseError, "classify needs --square-point or --plane-point");
    const SquareMap<S> f = acquire<S>(opt, cfg);
    const PlanePipeline<S> pipe(f, cfg.disk);
    ClassifyParams params = cfg.estimation.classify();
    if (opt.steps > 0) params.max_steps = opt.steps;
    struct Job {
        bool plane = false;
        SquarePoint<S> x;
        PlanePoint y;
    };
    std::vector<Job> jobs;
    for (const auto& t : opt.square_points) jobs.push_back(Job{false, parse_square_point<S>(t), {}});
    for (const auto& t : opt.plane_points) jobs.push_back(Job{true, {}, parse_plane_point(t)});
    auto results = parallel_map<json>(jobs.size(), opt.jobs, [&](std::size_t i) {
        const Job& job = jobs[i];
        const PlaneClassification<S> c = job.plane ? pipe.classify(job.y, params) : pipe.classify_square(job.x, params);
        json r;
        if (job.plane)
            r["plane_start"] = json::array({scalar(job.y.x), scalar(job.y.y)});
        r["square_start"] = point_json(c.square_start);
        r["region"] = region_name(six_points_region(c.square_start, 1e-9));
        r["kind"] = plane_class_name(c.kind);
        r["forward"] = side_json(c.forward);
        r["backward"] = side_json(c.backward);
        r["forward_limit"] = plane_json(c.forward_limit);
        r["backward_limit"] = plane_json(c.backward_limit);
        return r;
    });
    json out;
    out["command"] = "classify";
    out["mode"] = mode_name(cfg.mode);
    out["disk"] = cfg.disk.kind_name();
    out["results"] = results;
    emit(opt, out.dump(2) + "\n");
    return 0;
}

}  // namespace

template <class S>
SquarePoint<S> parse_square_point(const std::string& text) {
    const auto [a, b] = split_pair(text);
    const Rational r = parse_rational(a), s = parse_rational(b);
    if (r < -1 || r > 1 || s < -1 || s > 1) throw Error(ErrorKind::DomainError, "square point outside J^2: " + text);
    return make_point(from_rational<S>(r), from_rational<S>(s));
}

template SquarePoint<double> parse_square_point<double>(const std::string&);
template SquarePoint<Rational> parse_square_point<Rational>(const std::string&);

PlanePoint parse_plane_point(const std::string& text) {
    const auto [a, b] = split_pair(text);
    return PlanePoint{to_double(parse_rational(a)), to_double(parse_rational(b))};
}

Config load(const Options& opt) {
    Config cfg = opt.config.empty() ? parse_config(six_points_config_text(), "lemma31.json") : load_config(opt.config);
    json doc = json::parse(cfg.text);
    if (!opt.mode.empty()) {
        cfg.mode = parse_mode(opt.mode);
    } else if (!opt.map.empty()) {
        cfg.mode = map_mode(opt.map);
    }
    doc["mode"] = mode_name(cfg.mode);
    if (const char* env = std::getenv("RISING_ORBITS_MAX_STAGE"); env && *env) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (*end != '\0' || cap < 1) throw Error(ErrorKind::ParseError, "RISING_ORBITS_MAX_STAGE must be a positive integer");
        cfg.max_stage = cap;
        doc["max_stage"] = cap;
    }
    cfg.text = doc.dump();
    return cfg;
}

int cmd_build(const Options& opt) {
    const Config cfg = load(opt);
    return cfg.mode == Mode::exact ? build_impl<Rational>(opt, cfg) : build_impl<double>(opt, cfg);
}

int cmd_orbit(const Options& opt) {
    Config cfg = load(opt);
    return cfg.mode == Mode::exact ? orbit_impl<Rational>(opt, cfg) : orbit_impl<double>(opt, cfg);
}

int cmd_limits(const Options& opt) {
    Config cfg = load(opt);
    return cfg.mode == Mode::exact ? limits_impl<Rational>(opt, cfg) : limits_impl<double>(opt, cfg);
}

int cmd_classify(const Options& opt) {
    Config cfg = load(opt);
    return cfg.mode == Mode::exact ? classify_impl<Rational>(opt, cfg) : classify_impl<double>(opt, cfg);
}

int cmd_verify(const Options& opt) {
    const Config cfg = load(opt);
    const VerifyReport rep = run_verify(cfg);
    emit(opt, rep.to_json());
    return rep.ok() ? 0 : 1;
}

}  // namespace cli
