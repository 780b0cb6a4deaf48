#include "arakelov_cli/commands.hpp"

#include "arakelov/errors.hpp"
#include "arakelov/hilbert_samuel.hpp"
#include "arakelov/positivity.hpp"
#include "arakelov/version.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace arakelov::cli {

namespace {

const std::vector<std::int64_t> default_n_list{10, 20, 50, 100, 200};
constexpr std::uint64_t default_trials = 1000;

std::string decimal(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(q));
    return buf;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

const NamedDivisor& first_divisor(const Scenario& s, const char* command) {
    if (s.divisors.empty()) throw SchemaError(std::string(command) + " needs at least one divisor in the scenario");
    return s.divisors.front();
}

Json classify_cmd(const Scenario& s, std::string& csv) {
    first_divisor(s, "classify");
    Json results = Json::array();
    csv = "name,big,pseudo_effective,effective_up_to_rlin,lambda_ess,mu_inf\n";
    for (const NamedDivisor& d : s.divisors) {
        const Classification c = classify(d.divisor);
        const MaximinSolution sol = solve_maximin(d.divisor);
        const Extended mu = mu_inf_total(d.divisor);
        Json witness = Json::object();
        for (const auto& [x, slope] : sol.slopes) witness[x] = rational_to_json(slope);
        results.push_back(Json{{"name", d.name},
                               {"big", c.big},
                               {"pseudo_effective", c.pseudo_effective},
                               {"effective_up_to_rlin", c.effective_up_to_rlin},
                               {"lambda_ess", rational_to_json(sol.value)},
                               {"mu_inf", extended_to_json(mu)},
                               {"degree", rational_to_json(d.divisor.degree())},
                               {"lambda_ess_slopes", witness}});
        csv += d.name + "," + csv_bool(c.big) + "," + csv_bool(c.pseudo_effective) + "," +
               csv_bool(c.effective_up_to_rlin) + "," + to_string(sol.value) + "," + to_string(mu) + "\n";
    }
    return Json{{"divisors", results}};
}

Json pair_cmd(const Scenario& s, std::string& csv) {
    const NamedDivisor& a = first_divisor(s, "pair");
    const NamedDivisor& b = s.divisors.size() > 1 ? s.divisors[1] : a;
    const Rational p = pairing(a.divisor, b.divisor);
    csv = "a,b,pairing,pairing_decimal\n" + a.name + "," + b.name + "," + to_string(p) + "," + decimal(p) + "\n";
    return Json{{"a", a.name}, {"b", b.name}, {"pairing", rational_to_json(p)}, {"pairing_decimal", decimal(p)}};
}

Json volumes_cmd(const Scenario& s, std::string& csv) {
    first_divisor(s, "volumes");
    Json results = Json::array();
    csv = "name,degree,vol_chi,vol\n";
    for (const NamedDivisor& d : s.divisors) {
        const Rational vc = vol_chi(d.divisor), v = vol(d.divisor);
        results.push_back(Json{{"name", d.name},
                               {"degree", rational_to_json(d.divisor.degree())},
                               {"vol_chi", rational_to_json(vc)},
                               {"vol", rational_to_json(v)}});
        csv += d.name + "," + to_string(d.divisor.degree()) + "," + to_string(vc) + "," + to_string(v) + "\n";
    }
    return Json{{"divisors", results}};
}

// Rows (t_lo, t_hi, deg_value): deg_value is the value at t_lo, and the
// profile is affine up to the next row's deg_value at t_hi. A row with
// t_lo = t_hi carries the left limit at a jump.
std::vector<std::array<std::string, 3>> profile_rows(const DistributionProfile& p) {
    std::vector<std::array<std::string, 3>> rows;
    const auto& vs = p.vertices;
    rows.push_back({"-inf", to_string(vs.front().t), to_string(p.degree)});
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        rows.push_back({to_string(vs[i].t), to_string(vs[i + 1].t), to_string(vs[i].value)});
    if (vs.back().value != 0)
        rows.push_back({to_string(vs.back().t), to_string(vs.back().t), to_string(vs.back().value)});
    rows.push_back({to_string(p.lambda_ess), "+inf", "0"});
    return rows;
}

Json dgt_profile_cmd(const Scenario& s, std::string& csv) {
    const NamedDivisor& d = first_divisor(s, "dgt-profile");
    const DistributionProfile p = distribution(d.divisor);
    Json rows = Json::array();
    csv = "t_lo,t_hi,deg_value\n";
    for (const auto& r : profile_rows(p)) {
        rows.push_back(Json{{"t_lo", r[0]}, {"t_hi", r[1]}, {"deg_value", r[2]}});
        csv += r[0] + "," + r[1] + "," + r[2] + "\n";
    }
    Json verts = Json::array();
    for (const Vertex& v : p.vertices) verts.push_back(Json::array({rational_to_json(v.t), rational_to_json(v.value)}));
    Json samples = Json::array();
    for (const Rational& t : s.t_grid)
        samples.push_back(Json{{"t", rational_to_json(t)}, {"deg", rational_to_json(p(t))}});
    return Json{{"name", d.name},
                {"degree", rational_to_json(p.degree)},
                {"lambda_ess", rational_to_json(p.lambda_ess)},
                {"vertices", verts},
                {"rows", rows},
                {"mean", rational_to_json(p.mean())},
                {"samples", samples}};
}

Json hs_converge_cmd(const Scenario& s, const std::vector<std::int64_t>& ns, std::string& csv) {
    const NamedDivisor& d = first_divisor(s, "hs-converge");
    const HSReport r = hs_convergence_run(d.divisor, ns);
    Json rows = Json::array();
    csv = "n,deg,deg_plus,ratio,target,gap\n";
    for (const HSRow& row : r.rows) {
        rows.push_back(Json{{"n", row.n},
                            {"deg", rational_to_json(row.deg)},
                            {"deg_plus", rational_to_json(row.deg_plus)},
                            {"ratio", rational_to_json(row.ratio)},
                            {"ratio_plus", rational_to_json(row.ratio_plus)},
                            {"gap", rational_to_json(row.gap)},
                            {"gap_decimal", decimal(row.gap)}});
        csv += std::to_string(row.n) + "," + to_string(row.deg) + "," + to_string(row.deg_plus) + "," +
               to_string(row.ratio) + "," + to_string(r.target) + "," + to_string(row.gap) + "\n";
    }
    Json out{{"name", d.name},
             {"target", rational_to_json(r.target)},
             {"vol_chi", rational_to_json(r.vol_chi)},
             {"vol", rational_to_json(r.vol)},
             {"rows", rows}};
    out["final_gap"] = r.rows.empty() ? Json() : rational_to_json(r.rows.back().gap);
    return out;
}

Json check_inequalities_cmd(std::uint64_t seed, std::uint64_t trials, std::string& csv) {
    const InequalityReport rep = inequality_suite(seed, trials);
    Json checks = Json::array();
    csv = "check,evaluated,violated\n";
    for (const auto& [name, counts] : rep.checks) {
        checks.push_back(Json{{"check", name}, {"evaluated", counts.first}, {"violated", counts.second}});
        csv += name + "," + std::to_string(counts.first) + "," + std::to_string(counts.second) + "\n";
    }
    Json violations = Json::array();
    for (const Violation& v : rep.violations)
        violations.push_back(Json{{"trial", v.trial}, {"check", v.check}, {"detail", v.detail}});
    return Json{{"seed", rep.seed},
                {"trials", rep.trials},
                {"violation_count", rep.violations.size()},
                {"checks", checks},
                {"violations", violations}};
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"classify",    "pair",       "volumes",
                                                "dgt-profile", "hs-converge", "check-inequalities"};
    return names;
}

std::vector<std::int64_t> parse_n_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v < 1) throw ParseError("--n: \"" + item + "\" is not a positive integer");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("--n: empty list");
    return out;
}

Output run_command(const Options& opts) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), opts.command) == names.end())
        throw ParseError("unknown command \"" + opts.command + "\"");

    Scenario s;
    std::string bytes;
    const bool needs_scenario = opts.command != "check-inequalities";
    if (!opts.scenario_path.empty()) s = load_scenario(opts.scenario_path, &bytes);
    else if (needs_scenario) throw ParseError(opts.command + " needs --scenario");

    Json echo{{"name", opts.command}, {"format", opts.format == Format::json ? "json" : "csv"}};
    Output out;
    Json result;
    if (opts.command == "classify") {
        result = classify_cmd(s, out.csv);
    } else if (opts.command == "pair") {
        result = pair_cmd(s, out.csv);
    } else if (opts.command == "volumes") {
        result = volumes_cmd(s, out.csv);
    } else if (opts.command == "dgt-profile") {
        result = dgt_profile_cmd(s, out.csv);
    } else if (opts.command == "hs-converge") {
        const std::vector<std::int64_t> ns = opts.n_list ? *opts.n_list : s.n_list ? *s.n_list : default_n_list;
        echo["n"] = ns;
        result = hs_converge_cmd(s, ns, out.csv);
    } else {
        const std::uint64_t seed = opts.seed ? *opts.seed : s.seed.value_or(0);
        const std::uint64_t trials = opts.trials ? *opts.trials : s.trials.value_or(default_trials);
        echo["seed"] = seed;
        echo["trials"] = trials;
        result = check_inequalities_cmd(seed, trials, out.csv);
    }
    out.bundle = Json{{"version", version},
                      {"command", echo},
                      {"input_hash", "sha256:" + sha256_hex(bytes)},
                      {"result", result}};
    return out;
}

int exit_code(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ConstructionError*>(&e) ||
        dynamic_cast<const ModelError*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e))
        return 2;
    if (dynamic_cast<const InfeasibleError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
        dynamic_cast<const UnsupportedError*>(&e) || dynamic_cast<const DivergenceError*>(&e))
        return 3;
    return 4;
}

namespace {

const char* error_kind(int code) {
    switch (code) {
        case 2: return "input";
        case 3: return "infeasible";
        default: return "internal";
    }
}

}  // namespace

int run(const Options& opts, std::ostream& out, std::ostream& err) {
    Output res;
    try {
        res = run_command(opts);
    } catch (const std::exception& e) {
        const int code = exit_code(e);
        err << Json{{"error", {{"kind", error_kind(code)}, {"message", e.what()}}}, {"exit_code", code}}.dump(2)
            << "\n";
        return code;
    }
    const bool csv = opts.format == Format::csv;
    const std::string text = csv ? res.csv : res.bundle.dump(2) + "\n";
    if (opts.out_dir.empty()) {
        out << text;
        return 0;
    }
    std::error_code ec;
    std::filesystem::create_directories(opts.out_dir, ec);
    const auto path = std::filesystem::path(opts.out_dir) / (opts.command + (csv ? ".csv" : ".json"));
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << Json{{"error", {{"kind", "input"}, {"message", "cannot write " + path.string()}}}, {"exit_code", 2}}.dump(2)
            << "\n";
        return 2;
    }
    file << text;
    return 0;
}

}  // namespace arakelov::cli
