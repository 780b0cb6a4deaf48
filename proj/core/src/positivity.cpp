#include "arakelov/positivity.hpp"

#include "arakelov/errors.hpp"

#include <algorithm>

namespace arakelov {

namespace {

// Sections are read off degree-0 divisors, which needs Pic^0 (x) R = 0.
void require_genus_zero(const MetrisedRDivisor& g, const char* what) {
    if (!g.curve().exact_mode())
        throw UnsupportedError(std::string(what) + " needs a genus-0 curve (genus " + std::to_string(g.curve().genus()) + ")");
}

void require_nonempty_sections(const MetrisedRDivisor& g) {
    require_genus_zero(g, "the maximin program");
    if (g.degree() < 0)
        throw InfeasibleError("Gamma(D) is empty: deg(D) = " + to_string(g.degree()) + " < 0");
}

}  // namespace

// Why the support suffices: a point y outside S has a constant edge, so
// m_y(c) = base for c >= 0 and -inf for c < 0. Giving y a positive share of
// the degree only forces the other c_x down, and every m_x is nondecreasing.
// Hence off-support points collapse into one slack in the budget row.
MaximinProgram maximin_program(const MetrisedRDivisor& g, const PointId* point, const Rational& t) {
    require_nonempty_sections(g);
    if (point && !g.curve().contains(*point)) throw ModelError("unknown point " + *point);
    if (t < 0) throw DomainError("negative edge parameter");

    MaximinProgram prog;
    for (const auto& kv : g.edges()) prog.support.push_back(kv.first);
    const std::size_t k = prog.support.size();
    const std::size_t nvars = k + 1;
    const std::size_t u = k;

    auto& lp = prog.lp;
    for (std::size_t j = 0; j < k; ++j) {
        const Plf& phi = g.edges().at(prog.support[j]).phi;
        const auto& bp = phi.breakpoints();
        const auto& vals = phi.breakpoint_values();
        // base - u <= base + mu t_i + phi(t_i) + c t_i with y = c + mu:
        //   -u - t_i y <= phi(t_i)
        for (std::size_t i = 0; i < bp.size(); ++i) {
            std::vector<Rational> row(nvars, Rational(0));
            row[j] = -bp[i];
            row[u] = -1;
            lp.a.push_back(std::move(row));
            lp.b.push_back(vals[i]);
        }
    }
    // sum w (y - mu) <= 0
    std::vector<Rational> budget(nvars, Rational(0));
    for (std::size_t j = 0; j < k; ++j) budget[j] = g.curve().weight(prog.support[j]);
    lp.a.push_back(std::move(budget));
    lp.b.push_back(g.degree());

    lp.c.assign(nvars, Rational(0));
    lp.c[u] = -1;
    prog.objective_offset = g.base_value();
    if (point) {
        auto it = std::find(prog.support.begin(), prog.support.end(), *point);
        if (it != prog.support.end()) {
            const std::size_t j = static_cast<std::size_t>(it - prog.support.begin());
            lp.c[j] = -t;
            prog.objective_offset += g.edges().at(*point).mu * t;
        }
    }
    return prog;
}

MaximinSolution solve_maximin(const MetrisedRDivisor& g, const PointId* point, const Rational& t) {
    const MaximinProgram prog = maximin_program(g, point, t);
    const LpResult res = solve_lp(prog.lp);
    if (res.status != LpStatus::optimal)
        throw InvariantError("maximin LP not optimal although deg(D) >= 0");
    MaximinSolution sol;
    sol.value = res.value + prog.objective_offset;
    for (std::size_t j = 0; j < prog.support.size(); ++j) {
        const PointId& x = prog.support[j];
        sol.slopes[x] = res.x[j] - g.edges().at(x).mu;
    }
    return sol;
}

Rational lambda_ess(const MetrisedRDivisor& g) { return solve_maximin(g).value; }

Rational tilde_eval(const MetrisedRDivisor& g, const PointId& x, const Rational& t) {
    return solve_maximin(g, &x, t).value;
}

Classification classify(const MetrisedRDivisor& g) {
    require_genus_zero(g, "classify");
    Classification c;
    const Rational deg = g.degree();
    c.big = deg > 0 && lambda_ess(g) > 0;
    const Extended mu = mu_inf_total(g);
    c.pseudo_effective = mu >= Extended(0);
    if (g.base_value() >= 0) {
        // All but finitely many mu_inf,x vanish; the divisor they form is
        // principal iff its degree is 0.
        RDivisor m;
        for (const auto& kv : g.edges()) m.set(kv.first, mu_inf_point(g, kv.first).value());
        c.effective_up_to_rlin = mu > Extended(0) || is_principal(m, g.curve());
    }
    return c;
}

Extended ThresholdFunction::psi_at(const Rational& a) const {
    const Rational s = a + mu;
    if (s < 0) return Extended::neg_inf();
    return psi(s);
}

Extended ThresholdFunction::a_at(const Rational& t) const {
    if (t > base) return Extended::pos_inf();
    return excess(base - t) - mu;
}

ThresholdFunction threshold_function(const MetrisedRDivisor& g, const PointId& x) {
    ThresholdFunction th;
    th.point = x;
    th.base = g.base_value();
    const EdgeData* e = g.edge(x);
    th.mu = e ? e->mu : Rational(0);
    const Plf phi = e ? e->phi : Plf();
    // psi(s) = base + min over vertices (phi_i + s t_i); the tail has
    // slope s >= 0 so vertices suffice.
    th.psi = Plf::constant(th.base);
    // excess(u) = max(0, max_i (-phi_i - u) / t_i): the least s with
    // base + phi_i + s t_i >= base - u for every vertex.
    th.excess = Plf();
    const auto& bp = phi.breakpoints();
    const auto& vals = phi.breakpoint_values();
    for (std::size_t i = 0; i < bp.size(); ++i) {
        th.psi = pointwise_min(th.psi, Plf::linear(th.base + vals[i], bp[i]));
        th.excess = pointwise_max(th.excess, Plf::linear(-vals[i] / bp[i], Rational(-1) / bp[i]));
    }
    return th;
}

namespace {

// deg(D) - sum_x w excess_x(u), u = base - t: nondecreasing and concave in u.
Plf profile_in_shift(const MetrisedRDivisor& g) {
    require_genus_zero(g, "the degree profile");
    Plf f = Plf::constant(g.degree());
    for (const auto& kv : g.edges()) {
        const ThresholdFunction th = threshold_function(g, kv.first);
        f = plf_lin_comb(1, f, -Rational(g.curve().weight(kv.first)), th.excess);
    }
    return f;
}

// inf{u >= 0 : f(u) > 0} for f nondecreasing with positive tail.
Rational first_positive(const Plf& f) {
    if (f.value_at_zero() > 0) return 0;
    const std::vector<Vertex> vs = f.vertices();
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (vs[i + 1].value > 0) {
            const Rational slope = (vs[i + 1].value - vs[i].value) / (vs[i + 1].t - vs[i].t);
            return vs[i].t - vs[i].value / slope;
        }
    }
    if (f.final_slope() > 0) return vs.back().t - vs.back().value / f.final_slope();
    throw InvariantError("degree profile never becomes positive");
}

void require_positive_degree(const MetrisedRDivisor& g, const char* what) {
    if (g.degree() <= 0) throw DomainError(std::string(what) + " needs deg(D) > 0");
}

}  // namespace

DistributionProfile distribution(const MetrisedRDivisor& g) {
    require_positive_degree(g, "distribution");
    const Plf f = profile_in_shift(g);
    const Rational u0 = first_positive(f);
    DistributionProfile p;
    p.degree = g.degree();
    p.lambda_ess = g.base_value() - u0;
    std::vector<Vertex> in_shift{{u0, f(u0)}};
    const auto& bp = f.breakpoints();
    const auto& vals = f.breakpoint_values();
    for (std::size_t i = 0; i < bp.size(); ++i)
        if (bp[i] > u0) in_shift.push_back({bp[i], vals[i]});
    for (auto it = in_shift.rbegin(); it != in_shift.rend(); ++it)
        p.vertices.push_back({g.base_value() - it->t, it->value});
    return p;
}

Rational DistributionProfile::operator()(const Rational& t) const {
    if (t >= lambda_ess) return 0;
    if (t <= vertices.front().t) return degree;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const Vertex& a = vertices[i];
        const Vertex& b = vertices[i + 1];
        if (t <= b.t) return a.value + (b.value - a.value) * (t - a.t) / (b.t - a.t);
    }
    throw InvariantError("profile evaluation fell off the vertex list");
}

Extended DistributionProfile::quantile(const Rational& u) const {
    if (u < 0) throw DomainError("quantile argument must be >= 0");
    if (u >= degree) return Extended::neg_inf();
    if (u < vertices.back().value) return lambda_ess;
    // Strictly decreasing between the first and last vertex.
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const Vertex& a = vertices[i];
        const Vertex& b = vertices[i + 1];
        if (a.value > u && u >= b.value) return a.t + (u - a.value) * (b.t - a.t) / (b.value - a.value);
    }
    throw InvariantError("quantile inversion failed");
}

namespace {

// Integral of the affine interpolation between a and b over [lo, hi] ∩ [a.t, b.t].
Rational clipped_segment(const Vertex& a, const Vertex& b, const Rational& lo, const Rational& hi) {
    const Rational l = std::max(lo, a.t);
    const Rational h = std::min(hi, b.t);
    if (h <= l) return 0;
    auto at = [&](const Rational& t) { return a.value + (b.value - a.value) * (t - a.t) / (b.t - a.t); };
    return (at(l) + at(h)) * (h - l) / 2;
}

}  // namespace

Rational DistributionProfile::positive_integral() const {
    Rational total = 0;
    if (vertices.front().t > 0) total += degree * vertices.front().t;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        total += clipped_segment(vertices[i], vertices[i + 1], 0, std::max(Rational(0), lambda_ess));
    return total;
}

Rational DistributionProfile::negative_deficit() const {
    Rational total = 0;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const Vertex& a = vertices[i];
        const Vertex& b = vertices[i + 1];
        const Rational hi = std::min(Rational(0), b.t);
        if (hi <= a.t) continue;
        total += degree * (hi - a.t) - clipped_segment(a, b, a.t, hi);
    }
    if (lambda_ess < 0) total += degree * (-lambda_ess);
    return total;
}

Rational DistributionProfile::mean() const { return (positive_integral() - negative_deficit()) / degree; }

Rational deg_Dgt(const MetrisedRDivisor& g, const Rational& t) {
    require_positive_degree(g, "deg_Dgt");
    if (t >= g.base_value())
        throw DomainError("deg_Dgt needs t < g(root) = " + to_string(g.base_value()));
    return distribution(g)(t);
}

Rational lambda_ess_threshold(const MetrisedRDivisor& g) {
    require_positive_degree(g, "threshold inversion");
    return g.base_value() - first_positive(profile_in_shift(g));
}

Rational vol_chi(const MetrisedRDivisor& g) {
    if (g.degree() <= 0) return 0;
    const DistributionProfile p = distribution(g);
    return 2 * (p.positive_integral() - p.negative_deficit());
}

Rational vol(const MetrisedRDivisor& g) {
    if (g.degree() <= 0) return 0;
    return 2 * distribution(g).positive_integral();
}

}  // namespace arakelov
