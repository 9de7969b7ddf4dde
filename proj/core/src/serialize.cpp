#include "rising/serialize.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace rising {

using nlohmann::json;

namespace {

template <class S>
std::string encode(const S& x) {
    return to_string(x);
}

template <class S>
S decode(const json& v) {
    if (!v.is_string()) throw Error(ErrorKind::ParseError, "stored scalar must be a string");
    const std::string s = v.get<std::string>();
    if constexpr (is_exact_v<S>) {
        return parse_rational(s);
    } else {
        double x = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw Error(ErrorKind::ParseError, "stored scalar '" + s + "' is not a number");
        return x;
    }
}

template <class S>
json encode_stage(const StageData<S>& st) {
    json j;
    j["k"] = st.k;
    j["order"] = st.order;
    json bands = json::array();
    for (const auto& b : st.bands)
        bands.push_back({{"kind", b.kind == Band<S>::Kind::anchor ? "anchor" : "gap"},
                         {"lo", encode(b.lo)},
                         {"hi", encode(b.hi)},
                         {"member", b.member}});
    j["bands"] = bands;
    json arcs = json::array();
    for (const auto& a : st.arcs) {
        json rows = json::array();
        for (const auto& row : a.rows) {
            json r = json::array();
            for (const auto& x : row) r.push_back(encode(x));
            rows.push_back(r);
        }
        arcs.push_back({{"base", encode(a.base)}, {"member", a.member}, {"rows", rows}});
    }
    j["arcs"] = arcs;
    j["max_step"] = to_string(st.max_step);
    return j;
}

template <class S>
StageData<S> decode_stage(const json& j) {
    StageData<S> st;
    st.k = j.at("k").get<long>();
    st.order = j.at("order").get<std::vector<std::size_t>>();
    for (const auto& b : j.at("bands")) {
        Band<S> band;
        const std::string kind = b.at("kind").get<std::string>();
        if (kind != "anchor" && kind != "gap") throw Error(ErrorKind::ParseError, "unknown band kind '" + kind + "'");
        band.kind = kind == "anchor" ? Band<S>::Kind::anchor : Band<S>::Kind::gap;
        band.lo = decode<S>(b.at("lo"));
        band.hi = decode<S>(b.at("hi"));
        band.member = b.at("member").get<int>();
        st.bands.push_back(band);
    }
    for (const auto& a : j.at("arcs")) {
        AnchorArcs<S> arc;
        arc.base = decode<S>(a.at("base"));
        arc.member = a.at("member").get<int>();
        for (const auto& row : a.at("rows")) {
            std::vector<S> r;
            for (const auto& x : row) r.push_back(decode<S>(x));
            arc.rows.push_back(std::move(r));
        }
        st.arcs.push_back(std::move(arc));
    }
    st.max_step = std::stod(j.at("max_step").get<std::string>());
    return st;
}

template <class S>
json encode_builder(const RisingBuilder<S>& b) {
    json stages = json::array();
    for (long k = 1; k <= b.stage(); ++k) stages.push_back(encode_stage(b.stage_data(k)));
    return stages;
}

}  // namespace

template <class S>
std::string serialize_map(const SquareMap<S>& map, const Config& config) {
    json doc;
    doc["format"] = "rising-orbits-map";
    doc["version"] = kMapFormatVersion;
    doc["mode"] = is_exact_v<S> ? "exact" : "float";
    doc["stage"] = std::min(map.upper().stage(), map.lower().stage());
    doc["config"] = json::parse(config.text);
    doc["upper"] = encode_builder(map.upper());
    doc["lower"] = encode_builder(map.lower());
    return doc.dump(1) + "\n";
}

template <class S>
SquareMap<S> deserialize_map(const std::string& text, Config* config_out) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("map file is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != "rising-orbits-map")
            throw Error(ErrorKind::ParseError, "not a map file");
        if (doc.at("version").get<int>() != kMapFormatVersion)
            throw Error(ErrorKind::ParseError, "unsupported map format version");
        const std::string mode = doc.at("mode").get<std::string>();
        if (mode != (is_exact_v<S> ? "exact" : "float"))
            throw Error(ErrorKind::ValidationError, "map file was built in " + mode + " mode");
        Config cfg = parse_config(doc.at("config").dump(), "<map config>");
        SquareMap<S> map(cfg.families, cfg.max_stage);
        for (const auto& st : doc.at("upper")) map.upper().install_stage(decode_stage<S>(st));
        for (const auto& st : doc.at("lower")) map.lower().install_stage(decode_stage<S>(st));
        if (config_out) *config_out = std::move(cfg);
        return map;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed map file: ") + e.what());
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    out << contents;
    if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template std::string serialize_map<double>(const SquareMap<double>&, const Config&);
template std::string serialize_map<Rational>(const SquareMap<Rational>&, const Config&);
template SquareMap<double> deserialize_map<double>(const std::string&, Config*);
template SquareMap<Rational> deserialize_map<Rational>(const std::string&, Config*);

}  // namespace rising
