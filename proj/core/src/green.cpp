#include "arakelov/green.hpp"

#include "arakelov/errors.hpp"

#include <set>

namespace arakelov {

namespace {

void require_same_curve(const MetrisedRDivisor& a, const MetrisedRDivisor& b) {
    if (a.curve_ptr() != b.curve_ptr() && !(a.curve() == b.curve()))
        throw ModelError("metrised divisors live on different curve models");
}

bool trivial(const EdgeData& e) { return e.mu == 0 && e.phi == Plf(); }

std::set<PointId> edge_union(const MetrisedRDivisor& a, const MetrisedRDivisor& b) {
    std::set<PointId> out;
    for (const auto& kv : a.edges()) out.insert(kv.first);
    for (const auto& kv : b.edges()) out.insert(kv.first);
    return out;
}

const EdgeData& zero_edge() {
    static const EdgeData e{0, Plf()};
    return e;
}

const EdgeData& edge_or_zero(const MetrisedRDivisor& g, const PointId& x) {
    const EdgeData* e = g.edge(x);
    return e ? *e : zero_edge();
}

}  // namespace

const EdgeData* MetrisedRDivisor::edge(const PointId& x) const {
    auto it = edges_.find(x);
    return it == edges_.end() ? nullptr : &it->second;
}

Plf MetrisedRDivisor::edge_function(const PointId& x) const {
    const EdgeData* e = edge(x);
    if (!e) return Plf::constant(base_);
    return plf_lin_comb(1, Plf::linear(base_, e->mu), 1, e->phi);
}

RDivisor MetrisedRDivisor::divisor() const {
    RDivisor d;
    for (const auto& [x, e] : edges_) d.set(x, e.mu);
    return d;
}

Rational MetrisedRDivisor::degree() const { return arakelov::degree(divisor(), *curve_); }

bool operator==(const MetrisedRDivisor& a, const MetrisedRDivisor& b) {
    return a.curve() == b.curve() && a.base_ == b.base_ && a.edges_ == b.edges_;
}

MetrisedRDivisor make_metrised(std::shared_ptr<const CurveModel> curve, Rational base_value,
                               std::map<PointId, EdgeData> edges) {
    if (!curve) throw ConstructionError("metrised divisor without a curve model");
    MetrisedRDivisor g;
    g.curve_ = std::move(curve);
    g.base_ = std::move(base_value);
    for (auto& [x, e] : edges) {
        if (!g.curve_->contains(x)) throw ModelError("edge at unknown point " + x);
        if (e.phi.value_at_zero() != 0)
            throw ConstructionError("bounded part at " + x + " has phi(0) = " + to_string(e.phi.value_at_zero()) +
                                    ", expected 0");
        if (e.phi.final_slope() != 0)
            throw ConstructionError("bounded part at " + x + " has final slope " + to_string(e.phi.final_slope()) +
                                    ", expected 0");
        if (!trivial(e)) g.edges_.emplace(x, std::move(e));
    }
    return g;
}

MetrisedRDivisor lin_comb_metrised(const Rational& a, const MetrisedRDivisor& g1, const Rational& b,
                                   const MetrisedRDivisor& g2) {
    require_same_curve(g1, g2);
    std::map<PointId, EdgeData> edges;
    for (const PointId& x : edge_union(g1, g2)) {
        const EdgeData& e1 = edge_or_zero(g1, x);
        const EdgeData& e2 = edge_or_zero(g2, x);
        edges.emplace(x, EdgeData{a * e1.mu + b * e2.mu, plf_lin_comb(a, e1.phi, b, e2.phi)});
    }
    return make_metrised(g1.curve_ptr(), a * g1.base_value() + b * g2.base_value(), std::move(edges));
}

MetrisedRDivisor add_constant(const MetrisedRDivisor& g, const Rational& c) {
    return make_metrised(g.curve_ptr(), g.base_value() + c, g.edges());
}

MetrisedRDivisor scale(const Rational& a, const MetrisedRDivisor& g) { return lin_comb_metrised(a, g, 0, g); }

MetrisedRDivisor principal_metrised(std::shared_ptr<const CurveModel> curve, const SectionDivisor& s) {
    if (degree(s.div, *curve) != 0)
        throw DomainError("principal metrised divisor needs a degree-0 divisor, got degree " +
                          to_string(degree(s.div, *curve)));
    return canonical_metrised(std::move(curve), s.div, 0);
}

MetrisedRDivisor canonical_metrised(std::shared_ptr<const CurveModel> curve, const RDivisor& d,
                                    const Rational& base) {
    std::map<PointId, EdgeData> edges;
    for (const auto& [x, c] : d.coeffs()) edges.emplace(x, EdgeData{c, Plf()});
    return make_metrised(std::move(curve), base, std::move(edges));
}

Extended green_eval(const MetrisedRDivisor& g, const PointId& x, const Extended& t) {
    if (!g.curve().contains(x)) throw ModelError("unknown point " + x);
    const EdgeData& e = edge_or_zero(g, x);
    if (t.is_finite()) {
        if (t.value() < 0) throw DomainError("negative edge parameter");
        return g.base_value() + e.mu * t.value() + e.phi(t.value());
    }
    if (t.is_neg_inf()) throw DomainError("negative edge parameter");
    if (e.mu > 0) return Extended::pos_inf();
    if (e.mu < 0) return Extended::neg_inf();
    return g.base_value() + e.phi.last_value();
}

Rational pairing(const MetrisedRDivisor& g1, const MetrisedRDivisor& g2) {
    require_same_curve(g1, g2);
    Rational total = g2.base_value() * g1.degree() + g1.base_value() * g2.degree();
    for (const auto& [x, e1] : g1.edges()) {
        const EdgeData* e2 = g2.edge(x);
        if (e2) total -= g1.curve().weight(x) * energy(e1.phi, e2->phi);
    }
    return total;
}

Extended mu_inf_point(const MetrisedRDivisor& g, const PointId& x) {
    if (g.edge(x)) return inf_ratio(g.edge_function(x));
    // Constant edge: inf_t base / t.
    return g.base_value() >= 0 ? Extended(0) : Extended::neg_inf();
}

Extended mu_inf_total(const MetrisedRDivisor& g) {
    // Infinitely many constant edges contribute -inf each when base < 0.
    if (g.base_value() < 0) return Extended::neg_inf();
    Extended total(0);
    for (const auto& kv : g.edges())
        total = total + Rational(g.curve().weight(kv.first)) * mu_inf_point(g, kv.first);
    return total;
}

Rational section_log_norm(const MetrisedRDivisor& g, const SectionDivisor& s) {
    if (!g.curve().exact_mode()) throw UnsupportedError("section norms need a genus-0 curve");
    if (degree(s.div, g.curve()) != 0) throw DomainError("section divisor must have degree 0");
    const RDivisor d = g.divisor();
    std::set<PointId> pts;
    for (const auto& kv : s.div.coeffs()) pts.insert(kv.first);
    for (const auto& kv : g.edges()) pts.insert(kv.first);
    Rational best = g.base_value();  // root, and every untouched edge
    for (const PointId& x : pts) {
        const Rational c = s.div.ord(x);
        if (c + d.ord(x) < 0) throw DomainError("section is not in Gamma(D): (s) + D < 0 at " + x);
        best = std::min(best, inf_affine_shift(g.edge_function(x), c).value());
    }
    return best;
}

MetrisedRDivisor convex_envelope_green(const MetrisedRDivisor& g) {
    std::map<PointId, EdgeData> edges;
    for (const auto& [x, e] : g.edges()) {
        const Plf env = lower_convex_envelope(g.edge_function(x));
        edges.emplace(x, EdgeData{e.mu, plf_lin_comb(1, env, -1, Plf::linear(g.base_value(), e.mu))});
    }
    return make_metrised(g.curve_ptr(), g.base_value(), std::move(edges));
}

bool is_convex_green(const MetrisedRDivisor& g) {
    for (const auto& kv : g.edges())
        if (!kv.second.phi.is_convex()) return false;
    return true;
}

bool is_psh(const MetrisedRDivisor& g) {
    if (g.degree() < 0) throw DomainError("is_psh needs deg(D) >= 0 (Gamma(D) is empty)");
    return is_convex_green(g) && mu_inf_total(add_constant(g, -g.base_value())) >= Extended(0);
}

MetrisedRDivisor psh_envelope(const MetrisedRDivisor& g) {
    if (!(mu_inf_total(add_constant(g, -g.base_value())) >= Extended(0)))
        throw DomainError("psh_envelope needs mu_inf(g - g(root)) >= 0; use tilde_eval for the general case");
    return convex_envelope_green(g);
}

Extended height(const MetrisedRDivisor& g, const PointId& x) {
    return g.base_value() + edge_or_zero(g, x).phi.last_value();
}

Rational mu_ess(const MetrisedRDivisor& g) { return g.base_value(); }

Rational phi_min(const MetrisedRDivisor& g) {
    Rational best = g.base_value();
    for (const auto& kv : g.edges()) best = std::min(best, g.base_value() + min_value(kv.second.phi).value());
    return best;
}

Rational phi_max(const MetrisedRDivisor& g) {
    Rational best = g.base_value();
    for (const auto& kv : g.edges()) best = std::max(best, g.base_value() + max_value(kv.second.phi).value());
    return best;
}

Rational phi_sup_distance(const MetrisedRDivisor& g, const MetrisedRDivisor& h) {
    require_same_curve(g, h);
    const Rational shift = g.base_value() - h.base_value();
    Rational best = abs(shift);
    for (const PointId& x : edge_union(g, h)) {
        const Plf diff = plf_lin_comb(1, edge_or_zero(g, x).phi, -1, edge_or_zero(h, x).phi);
        best = std::max(best, sup_abs(plf_lin_comb(1, diff, 1, Plf::constant(shift))).value());
    }
    return best;
}

}  // namespace arakelov
