#include "arakelov/instances.hpp"

#include "arakelov/errors.hpp"

#include <algorithm>
#include <sstream>

namespace arakelov {

InstanceGenerator::InstanceGenerator(std::uint64_t seed, GeneratorParams params) : rng_(seed), params_(params) {}

std::uint64_t InstanceGenerator::uniform(std::uint64_t n) {
    if (n == 0) throw DomainError("uniform(0)");
    return rng_() % n;
}

std::int64_t InstanceGenerator::integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational InstanceGenerator::rational(const Rational& lo, const Rational& hi) {
    const std::int64_t q = integer(1, params_.max_denominator);
    const std::int64_t p_lo = to_int64(ceil_int(lo * q));
    const std::int64_t p_hi = to_int64(floor_int(hi * q));
    if (p_hi < p_lo) return lo;
    return Rational(integer(p_lo, p_hi), q);
}

Rational InstanceGenerator::coefficient() { return rational(-params_.coeff_bound, params_.coeff_bound); }

std::shared_ptr<const CurveModel> InstanceGenerator::curve() {
    const std::int64_t k = integer(1, params_.max_points);
    std::map<PointId, std::int64_t> w;
    for (std::int64_t i = 0; i < k; ++i) w["x" + std::to_string(i)] = integer(1, params_.max_weight);
    return std::make_shared<const CurveModel>(0, std::move(w));
}

std::vector<Rational> InstanceGenerator::breakpoints(int count) {
    std::vector<Rational> out;
    for (int attempt = 0; attempt < 8 * count && static_cast<int>(out.size()) < count; ++attempt) {
        Rational t = rational(0, params_.coeff_bound);
        if (t > 0 && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Plf InstanceGenerator::bounded_part() {
    const auto bps = breakpoints(static_cast<int>(integer(0, params_.max_breakpoints)));
    std::vector<Vertex> vs{{0, 0}};
    for (const Rational& t : bps) vs.push_back({t, coefficient()});
    return Plf::from_vertices(vs, 0);
}

Plf InstanceGenerator::convex_bounded_part(const Rational& steepest) {
    const auto bps = breakpoints(static_cast<int>(integer(0, params_.max_breakpoints)));
    const Rational lo = steepest < 0 ? steepest : Rational(-params_.coeff_bound);
    std::vector<Rational> slopes;
    for (int attempt = 0; attempt < 8 * static_cast<int>(bps.size()) && slopes.size() < bps.size(); ++attempt) {
        Rational s = rational(lo, 0);
        if (s < 0 && std::find(slopes.begin(), slopes.end(), s) == slopes.end()) slopes.push_back(s);
    }
    std::sort(slopes.begin(), slopes.end());
    std::vector<Rational> used(bps.begin(), bps.begin() + static_cast<std::ptrdiff_t>(slopes.size()));
    return Plf::from_slopes(0, std::move(used), std::move(slopes), 0);
}

MetrisedRDivisor InstanceGenerator::metrised(const std::shared_ptr<const CurveModel>& curve) {
    const Rational base = coefficient();
    std::map<PointId, EdgeData> edges;
    for (const auto& kv : curve->points())
        if (uniform(4) != 0) edges.emplace(kv.first, EdgeData{coefficient(), bounded_part()});
    Rational deg = 0;
    for (const auto& [x, e] : edges) deg += e.mu * curve->weight(x);
    if (deg <= 0) {
        const PointId& p = curve->points().begin()->first;
        auto it = edges.emplace(p, EdgeData{0, bounded_part()}).first;
        const Rational extra = -deg + rational(Rational(1, params_.max_denominator), params_.coeff_bound);
        it->second.mu += extra / curve->weight(p);
    }
    return make_metrised(curve, base, std::move(edges));
}

MetrisedRDivisor InstanceGenerator::psh(const std::shared_ptr<const CurveModel>& curve) {
    const Rational base = coefficient();
    std::map<PointId, EdgeData> edges;
    Rational total = 0;  // mu_inf(g - base) for convex edges
    for (const auto& kv : curve->points()) {
        if (uniform(4) == 0) continue;
        EdgeData e{coefficient(), convex_bounded_part()};
        total += (e.mu + e.phi.initial_slope()) * kv.second;
        edges.emplace(kv.first, std::move(e));
    }
    if (total < 0 || edges.empty()) {
        const PointId& p = curve->points().begin()->first;
        auto it = edges.emplace(p, EdgeData{0, Plf()}).first;
        it->second.mu += (std::max(Rational(0), -total) + rational(0, params_.coeff_bound)) / curve->weight(p);
    }
    return make_metrised(curve, base, std::move(edges));
}

MetrisedRDivisor InstanceGenerator::hs_instance(const std::shared_ptr<const CurveModel>& curve) {
    std::map<PointId, EdgeData> edges;
    Rational mu_inf = 0, deg = 0;
    std::int64_t sigma_weight = 0;
    for (const auto& kv : curve->points()) {
        if (uniform(4) == 0) continue;
        EdgeData e{Rational(integer(-params_.coeff_bound, params_.coeff_bound)), convex_bounded_part(-2)};
        mu_inf += (e.mu + e.phi.initial_slope()) * kv.second;
        deg += e.mu * kv.second;
        if (!(e.phi == Plf())) sigma_weight += kv.second;
        edges.emplace(kv.first, std::move(e));
    }
    // The orthogonal-basis formula needs sum_Sigma w (floor(-n a_x) + 1) <= n deg + 1
    // for every n >= 1; mu_inf >= sum_Sigma w - 1 is enough.
    const PointId& p = curve->points().begin()->first;
    const std::int64_t wp = curve->weight(p);
    const Rational need = Rational(sigma_weight - 1) - mu_inf;
    std::int64_t bump = need > 0 ? to_int64(ceil_int(need / wp)) : 0;
    if (deg + bump * wp <= 0) bump += to_int64(ceil_int((1 - deg - bump * wp) / Rational(wp)));
    bump += integer(0, 2);
    if (bump != 0) {
        auto it = edges.emplace(p, EdgeData{0, Plf()}).first;
        it->second.mu += bump;
    }
    return make_metrised(curve, 0, std::move(edges));
}

std::string describe(const MetrisedRDivisor& g) {
    std::ostringstream os;
    os << "base=" << to_string(g.base_value()) << " points={";
    bool first = true;
    for (const auto& [x, w] : g.curve().points()) {
        os << (first ? "" : ",") << x << ":" << w;
        first = false;
    }
    os << "} edges={";
    first = true;
    for (const auto& [x, e] : g.edges()) {
        os << (first ? "" : "; ") << x << ": mu=" << to_string(e.mu) << " phi=[";
        bool fv = true;
        for (const Vertex& v : e.phi.vertices()) {
            os << (fv ? "" : ",") << "(" << to_string(v.t) << "," << to_string(v.value) << ")";
            fv = false;
        }
        os << "]";
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace arakelov
