#include "rising/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace rising {

using nlohmann::json;

namespace {

struct Reader {
    std::string source;

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw Error(ErrorKind::ParseError, source + ": field '" + field + "': " + what);
    }

    const json& need(const json& obj, const std::string& key, const std::string& path) const {
        if (!obj.is_object()) fail(path, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
        return *it;
    }

    Rational rational(const json& v, const std::string& path) const {
        try {
            if (v.is_string()) return parse_rational(v.get<std::string>());
            if (v.is_number_integer()) return Rational(v.get<long>());
            if (v.is_number_float()) return Rational(v.get<double>());
        } catch (const Error& e) {
            fail(path, e.what());
        }
        fail(path, "expected a number or a \"p/q\" string");
    }

    double real(const json& v, const std::string& path) const {
        if (v.is_number()) return v.get<double>();
        if (v.is_string()) return to_double(rational(v, path));
        fail(path, "expected a number");
    }

    long integer(const json& v, const std::string& path) const {
        if (!v.is_number_integer()) fail(path, "expected an integer");
        return v.get<long>();
    }

    bool boolean(const json& v, const std::string& path) const {
        if (!v.is_boolean()) fail(path, "expected true or false");
        return v.get<bool>();
    }

    Envelope envelope(const json& v, const std::string& path) const {
        if (!v.is_array() || v.size() < 2) fail(path, "expected an array of at least two breakpoints");
        std::vector<EnvelopeNode> nodes;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::string p = path + "[" + std::to_string(i) + "]";
            const json& n = v[i];
            EnvelopeNode node;
            if (n.is_array() && n.size() == 2) {
                node.x = rational(n[0], p + "[0]");
                node.value = node.left = node.right = rational(n[1], p + "[1]");
            } else {
                node.x = rational(need(n, "x", p), p + ".x");
                node.value = rational(need(n, "value", p), p + ".value");
                node.left = n.contains("left") ? rational(n["left"], p + ".left") : node.value;
                node.right = n.contains("right") ? rational(n["right"], p + ".right") : node.value;
            }
            nodes.push_back(node);
        }
        try {
            return Envelope(std::move(nodes));
        } catch (const Error& e) {
            throw Error(ErrorKind::ValidationError, source + ": " + path + ": " + e.kind_name() + ": " + e.what());
        }
    }

    IntervalFamily family(const json& v, const std::string& path, Side side,
                          const std::map<std::string, json>& profile_json) const {
        if (!v.is_array()) fail(path, "expected an array of members");
        IntervalFamily fam;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::string p = path + "[" + std::to_string(i) + "]";
            const json& m = v[i];
            FamilyMember member;
            member.id = m.contains("id") ? static_cast<int>(integer(m["id"], p + ".id")) : static_cast<int>(i + 1);
            const json& set = need(m, "set", p);
            if (set.is_array() && set.size() == 2) {
                member.set.a = rational(set[0], p + ".set[0]");
                member.set.b = rational(set[1], p + ".set[1]");
            } else {
                member.set.a = rational(need(set, "a", p + ".set"), p + ".set.a");
                member.set.b = rational(need(set, "b", p + ".set"), p + ".set.b");
                if (set.contains("a_open")) member.set.a_open = boolean(set["a_open"], p + ".set.a_open");
                if (set.contains("b_open")) member.set.b_open = boolean(set["b_open"], p + ".set.b_open");
            }
            const json& prof = need(m, "profile", p);
            if (!prof.is_string()) fail(p + ".profile", "expected a profile name");
            member.profile_name = prof.get<std::string>();
            if (member.profile_name == "identity") {
                member.profile = identity_profile(side);
            } else {
                auto it = profile_json.find(member.profile_name);
                if (it == profile_json.end()) fail(p + ".profile", "unknown profile '" + member.profile_name + "'");
                const std::string pp = "profiles." + member.profile_name;
                const Envelope lower = envelope(need(it->second, "lower", pp), pp + ".lower");
                const Envelope upper =
                    it->second.contains("upper") ? envelope(it->second["upper"], pp + ".upper") : lower;
                try {
                    member.profile = make_profile(lower, upper, side);
                } catch (const Error& e) {
                    throw Error(ErrorKind::ValidationError,
                                source + ": " + pp + ": " + e.kind_name() + ": " + e.what());
                }
            }
            fam.members.push_back(std::move(member));
        }
        return fam;
    }

    DiskSpec disk(const json& v, const std::string& path) const {
        const json& kind = need(v, "kind", path);
        if (!kind.is_string()) fail(path + ".kind", "expected a string");
        const std::string k = kind.get<std::string>();
        PlanePoint c{0.0, 0.0};
        if (v.contains("center")) {
            const json& cj = v["center"];
            if (!cj.is_array() || cj.size() != 2) fail(path + ".center", "expected [x, y]");
            c = {real(cj[0], path + ".center[0]"), real(cj[1], path + ".center[1]")};
        }
        try {
            if (k == "rectangle")
                return DiskSpec::rectangle(c, real(need(v, "half_width", path), path + ".half_width"),
                                           real(need(v, "half_height", path), path + ".half_height"));
            if (k == "ellipse")
                return DiskSpec::ellipse(c, real(need(v, "a", path), path + ".a"), real(need(v, "b", path), path + ".b"));
            if (k == "star-polygon") {
                const json& vs = need(v, "vertices", path);
                if (!vs.is_array()) fail(path + ".vertices", "expected an array of [x, y]");
                std::vector<PlanePoint> pts;
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    const std::string p = path + ".vertices[" + std::to_string(i) + "]";
                    if (!vs[i].is_array() || vs[i].size() != 2) fail(p, "expected [x, y]");
                    pts.push_back({real(vs[i][0], p + "[0]"), real(vs[i][1], p + "[1]")});
                }
                return DiskSpec::star_polygon(c, std::move(pts));
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ParseError) throw;
            throw Error(ErrorKind::ValidationError, source + ": " + path + ": " + e.kind_name() + ": " + e.what());
        }
        fail(path + ".kind", "expected rectangle, ellipse or star-polygon");
    }
};

std::string position(const std::string& text, std::size_t byte) {
    long line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Config parse_config(const std::string& text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, source + ": " + position(text, e.byte) + ": malformed JSON");
    }
    Reader rd{source};
    if (!doc.is_object()) rd.fail("<root>", "expected an object");

    Config cfg;
    if (doc.contains("mode")) {
        if (!doc["mode"].is_string()) rd.fail("mode", "expected \"exact\" or \"float\"");
        try {
            cfg.mode = parse_mode(doc["mode"].get<std::string>());
        } catch (const Error& e) {
            rd.fail("mode", e.what());
        }
    }
    if (doc.contains("max_stage")) {
        cfg.max_stage = rd.integer(doc["max_stage"], "max_stage");
        if (cfg.max_stage < 1) rd.fail("max_stage", "must be at least 1");
    }

    std::map<std::string, json> profile_json;
    if (doc.contains("profiles")) {
        if (!doc["profiles"].is_object()) rd.fail("profiles", "expected an object of named profiles");
        for (const auto& [name, body] : doc["profiles"].items()) profile_json[name] = body;
    }
    cfg.omega = rd.family(rd.need(doc, "omega_family", ""), "omega_family", Side::omega, profile_json);
    cfg.alpha = doc.contains("alpha_family")
                    ? rd.family(doc["alpha_family"], "alpha_family", Side::alpha, profile_json)
                    : IntervalFamily{};
    for (const auto& m : cfg.omega.members) cfg.profiles[m.profile_name] = m.profile;

    try {
        cfg.families = validate_families(cfg.omega, cfg.alpha);
    } catch (const Error& e) {
        throw Error(ErrorKind::ValidationError, source + ": " + e.kind_name() + ": " + e.what());
    }

    if (doc.contains("disk")) cfg.disk = rd.disk(doc["disk"], "disk");
    if (doc.contains("estimation")) {
        const json& est = doc["estimation"];
        if (!est.is_object()) rd.fail("estimation", "expected an object");
        if (est.contains("stage_budget")) cfg.estimation.stage_budget = rd.integer(est["stage_budget"], "estimation.stage_budget");
        if (est.contains("delta_edge")) cfg.estimation.delta_edge = rd.real(est["delta_edge"], "estimation.delta_edge");
        if (est.contains("delta_cauchy")) cfg.estimation.delta_cauchy = rd.real(est["delta_cauchy"], "estimation.delta_cauchy");
        if (est.contains("window")) cfg.estimation.window = rd.integer(est["window"], "estimation.window");
        if (est.contains("max_steps")) cfg.estimation.max_steps = rd.integer(est["max_steps"], "estimation.max_steps");
        if (cfg.estimation.stage_budget < 1) rd.fail("estimation.stage_budget", "must be positive");
        if (!(cfg.estimation.delta_edge > 0) || !(cfg.estimation.delta_cauchy > 0))
            rd.fail("estimation", "thresholds must be positive");
    }
    if (doc.contains("output")) {
        const json& out = doc["output"];
        if (out.contains("dir")) {
            if (!out["dir"].is_string()) rd.fail("output.dir", "expected a string");
            cfg.output_dir = out["dir"].get<std::string>();
        }
    }
    cfg.text = doc.dump();
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

std::string six_points_config_text() {
    return R"({
  "mode": "float",
  "max_stage": 128,
  "profiles": {
    "u3": {"lower": [["-1", "-1"], ["-1/2", "1/2"], ["1/2", "1/2"], ["1", "1"]]},
    "step": {"lower": [
      {"x": "-1", "value": "-1"},
      {"x": "-1/2", "left": "-1/2", "value": "-1/2", "right": "0"},
      {"x": "1/2", "left": "0", "value": "1/2", "right": "1/2"},
      {"x": "1", "value": "1"}
    ]}
  },
  "omega_family": [
    {"id": 1, "set": {"a": "1/3", "b": "1/3"}, "profile": "u3"},
    {"id": 2, "set": {"a": "1/3", "b": "1/2", "a_open": true, "b_open": true}, "profile": "step"},
    {"id": 3, "set": {"a": "1/2", "b": "1/2"}, "profile": "u3"}
  ],
  "alpha_family": [
    {"id": 1, "set": {"a": "1/3", "b": "1/3"}, "profile": "u3"},
    {"id": 2, "set": {"a": "1/3", "b": "1/2", "a_open": true, "b_open": true}, "profile": "step"},
    {"id": 3, "set": {"a": "1/2", "b": "1/2"}, "profile": "u3"}
  ],
  "disk": {"kind": "ellipse", "center": [0, 0], "a": 1, "b": 1},
  "estimation": {"stage_budget": 30, "delta_edge": 0.001, "delta_cauchy": 0.0001, "window": 200, "max_steps": 6000}
}
)";
}

}  // namespace rising
