#include "arakelov_cli/scenario.hpp"

#include "arakelov/errors.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace arakelov::cli {

namespace {

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw SchemaError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(where + ": missing field \"" + key + "\"");
    return *it;
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> known, const std::string& where) {
    const std::set<std::string> allowed(known.begin(), known.end());
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) throw SchemaError(where + ": unknown field \"" + it.key() + "\"");
}

std::int64_t positive_int(const Json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) throw SchemaError(where + ": expected a positive integer");
    return v.get<std::int64_t>();
}

std::uint64_t unsigned_int(const Json& v, const std::string& where) {
    if (!v.is_number_unsigned()) throw SchemaError(where + ": expected a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::shared_ptr<const CurveModel> parse_curve(const Json& v) {
    reject_unknown(v, {"genus", "points"}, "curve");
    const Json& genus = field(v, "genus", "curve");
    if (!genus.is_number_integer() || genus.get<std::int64_t>() < 0)
        throw SchemaError("curve.genus: expected a nonnegative integer");
    const Json& points = field(v, "points", "curve");
    if (!points.is_object() || points.empty()) throw SchemaError("curve.points: expected a nonempty object");
    std::map<PointId, std::int64_t> weights;
    for (auto it = points.begin(); it != points.end(); ++it)
        weights[it.key()] = positive_int(it.value(), "curve.points." + it.key());
    return std::make_shared<const CurveModel>(static_cast<int>(genus.get<std::int64_t>()), std::move(weights));
}

NamedDivisor parse_divisor(const Json& v, const std::shared_ptr<const CurveModel>& curve, std::size_t index) {
    const std::string where = "divisors[" + std::to_string(index) + "]";
    reject_unknown(v, {"name", "base_value", "edges"}, where);
    NamedDivisor out;
    const Json& name = field(v, "name", where);
    if (!name.is_string() || name.get<std::string>().empty()) throw SchemaError(where + ".name: expected a string");
    out.name = name.get<std::string>();
    const Rational base = rational_from_json(field(v, "base_value", where), where + ".base_value");
    std::map<PointId, EdgeData> edges;
    if (v.contains("edges")) {
        const Json& e = v["edges"];
        if (!e.is_object()) throw SchemaError(where + ".edges: expected an object");
        for (auto it = e.begin(); it != e.end(); ++it) {
            const std::string ew = where + ".edges." + it.key();
            reject_unknown(it.value(), {"mu", "phi"}, ew);
            EdgeData d;
            d.mu = rational_from_json(field(it.value(), "mu", ew), ew + ".mu");
            if (it.value().contains("phi")) d.phi = plf_from_json(it.value()["phi"], ew + ".phi");
            edges.emplace(it.key(), std::move(d));
        }
    }
    out.divisor = make_metrised(curve, base, std::move(edges));
    return out;
}

}  // namespace

Rational rational_from_json(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (!v.is_string()) throw SchemaError(where + ": expected an integer or a \"p/q\" string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Json extended_to_json(const Extended& x) { return to_string(x); }

Plf plf_from_json(const Json& v, const std::string& where) {
    reject_unknown(v, {"vertices", "final_slope"}, where);
    const Json& verts = field(v, "vertices", where);
    if (!verts.is_array() || verts.empty()) throw SchemaError(where + ".vertices: expected a nonempty array");
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const std::string vw = where + ".vertices[" + std::to_string(i) + "]";
        if (!verts[i].is_array() || verts[i].size() != 2) throw SchemaError(vw + ": expected [t, value]");
        vs.push_back({rational_from_json(verts[i][0], vw), rational_from_json(verts[i][1], vw)});
    }
    const Rational fin = v.contains("final_slope") ? rational_from_json(v["final_slope"], where + ".final_slope")
                                                   : Rational(0);
    return Plf::from_vertices(vs, fin);
}

Json plf_to_json(const Plf& f) {
    Json verts = Json::array();
    for (const Vertex& v : f.vertices()) verts.push_back(Json::array({rational_to_json(v.t), rational_to_json(v.value)}));
    return Json{{"vertices", verts}, {"final_slope", rational_to_json(f.final_slope())}};
}

Json divisor_to_json(const NamedDivisor& d) {
    Json edges = Json::object();
    for (const auto& [x, e] : d.divisor.edges())
        edges[x] = Json{{"mu", rational_to_json(e.mu)}, {"phi", plf_to_json(e.phi)}};
    return Json{{"name", d.name}, {"base_value", rational_to_json(d.divisor.base_value())}, {"edges", edges}};
}

Scenario parse_scenario(const Json& doc) {
    if (!doc.is_object()) throw SchemaError("scenario: expected a JSON object");
    reject_unknown(doc, {"curve", "divisors", "params"}, "scenario");
    Scenario s;
    s.curve = parse_curve(field(doc, "curve", "scenario"));
    if (doc.contains("divisors")) {
        const Json& ds = doc["divisors"];
        if (!ds.is_array()) throw SchemaError("divisors: expected an array");
        std::set<std::string> names;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            s.divisors.push_back(parse_divisor(ds[i], s.curve, i));
            if (!names.insert(s.divisors.back().name).second)
                throw SchemaError("divisors: duplicate name \"" + s.divisors.back().name + "\"");
        }
    }
    if (doc.contains("params")) {
        const Json& p = doc["params"];
        if (!p.is_object()) throw SchemaError("params: expected an object");
        reject_unknown(p, {"n", "seed", "trials", "t_grid"}, "params");
        if (p.contains("n")) {
            if (!p["n"].is_array()) throw SchemaError("params.n: expected an array");
            std::vector<std::int64_t> ns;
            for (const Json& n : p["n"]) ns.push_back(positive_int(n, "params.n"));
            s.n_list = ns;
        }
        if (p.contains("seed")) s.seed = unsigned_int(p["seed"], "params.seed");
        if (p.contains("trials")) s.trials = unsigned_int(p["trials"], "params.trials");
        if (p.contains("t_grid")) {
            if (!p["t_grid"].is_array()) throw SchemaError("params.t_grid: expected an array");
            for (const Json& t : p["t_grid"]) s.t_grid.push_back(rational_from_json(t, "params.t_grid"));
        }
    }
    return s;
}

Scenario load_scenario(const std::string& path, std::string* bytes) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read scenario file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (bytes) *bytes = text;
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    return parse_scenario(doc);
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw InvariantError("sha256 digest failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return out.str();
}

}  // namespace arakelov::cli
