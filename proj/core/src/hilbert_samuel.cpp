#include "arakelov/hilbert_samuel.hpp"

#include "arakelov/errors.hpp"
#include "arakelov/positivity.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace arakelov {

namespace {

void require_harness(const MetrisedRDivisor& g, std::int64_t n) {
    if (!g.curve().exact_mode()) throw UnsupportedError("Hilbert-Samuel harness needs a genus-0 curve");
    if (!g.divisor().is_integral()) throw UnsupportedError("Hilbert-Samuel harness needs an integral divisor D");
    if (n < 1) throw DomainError("n must be a positive integer");
}

std::int64_t h0_multiple(const MetrisedRDivisor& g, std::int64_t n) {
    return h0_dim(Rational(n) * g.divisor(), g.curve());
}

}  // namespace

std::int64_t FiltrationProfile::operator()(const Rational& t) const {
    for (const auto& [theta, d] : steps)
        if (t <= theta) return d;
    return 0;
}

// A section with divisor c (so ord_x(s) = c_x + n mu_x =: j_x >= 0 as a
// section of nD) has -ln||s||_{ng} = min(n base, min_x n psi_x(j_x / n)), and
// n psi_x(j/n) >= t iff n base + n phi_i + j t_i >= t at every breakpoint.
// The constraints at distinct points are independent in genus 0, so the
// filtration piece is H0(nD - sum_x k_x(t) x).
std::int64_t filtration_dim(const MetrisedRDivisor& g, std::int64_t n, const Rational& t) {
    require_harness(g, n);
    const Rational nb = n * g.base_value();
    if (t > nb) return 0;
    const std::int64_t h0 = h0_multiple(g, n);
    std::int64_t removed = 0;
    for (const auto& [x, e] : g.edges()) {
        Integer k = 0;
        const auto& bp = e.phi.breakpoints();
        const auto& vals = e.phi.breakpoint_values();
        for (std::size_t i = 0; i < bp.size(); ++i) k = std::max(k, ceil_int((t - nb - n * vals[i]) / bp[i]));
        removed += to_int64(k) * g.curve().weight(x);
    }
    return std::max<std::int64_t>(0, h0 - removed);
}

FiltrationProfile filtration_profile(const MetrisedRDivisor& g, std::int64_t n) {
    require_harness(g, n);
    FiltrationProfile prof;
    prof.n = n;
    prof.h0 = h0_multiple(g, n);
    const Rational nb = n * g.base_value();

    // The j-th order of vanishing at x is lost once t exceeds
    // tau_{x,j} = n psi_x((j-1)/n).
    std::map<Rational, std::int64_t> events;
    for (const auto& [x, e] : g.edges()) {
        const auto& bp = e.phi.breakpoints();
        const auto& vals = e.phi.breakpoint_values();
        if (bp.empty()) continue;
        const std::int64_t w = g.curve().weight(x);
        for (std::int64_t j = 0;; ++j) {
            Rational tau = nb;
            for (std::size_t i = 0; i < bp.size(); ++i) tau = std::min(tau, nb + n * vals[i] + j * bp[i]);
            if (tau >= nb) break;
            events[tau] += w;
        }
    }
    std::int64_t d = prof.h0;
    for (const auto& [tau, w] : events) {
        if (d == 0) break;
        prof.steps.emplace_back(tau, d);
        d = std::max<std::int64_t>(0, d - w);
    }
    if (d > 0) prof.steps.emplace_back(nb, d);
    return prof;
}

namespace {

// Sum of the successive minima: each drop of the dimension at threshold theta
// contributes theta once per lost dimension.
Rational successive_minima_sum(const FiltrationProfile& p, bool positive_part) {
    Rational total = 0;
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
        const std::int64_t next = k + 1 < p.steps.size() ? p.steps[k + 1].second : 0;
        const Rational& theta = p.steps[k].first;
        if (positive_part && theta <= 0) continue;
        total += theta * (p.steps[k].second - next);
    }
    return total;
}

}  // namespace

Rational arakelov_deg(const MetrisedRDivisor& g, std::int64_t n) {
    return successive_minima_sum(filtration_profile(g, n), false);
}

Rational arakelov_deg_plus(const MetrisedRDivisor& g, std::int64_t n) {
    return successive_minima_sum(filtration_profile(g, n), true);
}

Rational phi_star_sum(const MetrisedRDivisor& g, std::int64_t n) {
    require_harness(g, n);
    if (g.base_value() != 0) {
        // ||.||_{n(g + c)} = e^{-nc} ||.||_{ng}
        const Rational b = g.base_value();
        return phi_star_sum(add_constant(g, -b), n) + n * b * h0_multiple(g, n);
    }
    if (!is_convex_green(g)) throw DomainError("Assumption failed: edges of g must be convex");
    if (!(mu_inf_total(g) >= Extended(0))) throw DomainError("Assumption failed: mu_inf(g - g(root)) >= 0");

    Rational total = 0;
    Integer used = 0;  // sum over Sigma of w (a_{x,n} + 1)
    for (const auto& [x, e] : g.edges()) {
        if (e.phi == Plf()) continue;
        const std::int64_t w = g.curve().weight(x);
        const std::int64_t top = to_int64(floor_int(-n * e.phi.initial_slope()));
        const Plf star = legendre_star(e.phi);
        Rational sum = 0;
        for (std::int64_t i = 0; i <= top; ++i) sum += n * star(Rational(i, n));
        total += w * sum;
        used += Integer(w) * (top + 1);
    }
    // 2(genus - 1) + sum (a_{x,n} + 1) w(x) < n deg(D)
    if (Rational(used - 2) >= n * g.degree())
        throw DomainError("Assumption failed for n = " + std::to_string(n) +
                          ": sum (a_{x,n} + 1) w(x) - 2 >= n deg(D)");
    return total;
}

HSReport hs_convergence_run(const MetrisedRDivisor& g, const std::vector<std::int64_t>& n_list) {
    require_harness(g, 1);
    if (g.degree() <= 0) throw DomainError("hs_convergence_run needs deg(D) > 0");
    if (!is_psh(g)) throw DomainError("hs_convergence_run needs a psh metrised divisor");
    HSReport rep;
    rep.target = pairing(g, g);
    rep.vol_chi = vol_chi(g);
    rep.vol = vol(g);
    for (std::int64_t n : n_list) {
        HSRow row;
        row.n = n;
        const FiltrationProfile prof = filtration_profile(g, n);
        row.deg = successive_minima_sum(prof, false);
        row.deg_plus = successive_minima_sum(prof, true);
        const Rational half_sq = Rational(n * n, 2);
        row.ratio = row.deg / half_sq;
        row.ratio_plus = row.deg_plus / half_sq;
        row.gap = abs(row.ratio - rep.target);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

InequalityReport inequality_suite(std::uint64_t seed, std::uint64_t trials, const GeneratorParams& params) {
    InequalityReport rep;
    rep.seed = seed;
    rep.trials = trials;
    const std::vector<std::string> names = {
        "lambda_ess_superadditivity", "dgt_superadditivity",  "vol_chi_deg_superadditivity",
        "hodge_index",                "cauchy_schwarz",       "translation_identity",
        "scaling_identity",           "lipschitz_bound",      "sandwich_bound"};
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> counts;
    for (const auto& n : names) counts[n] = {0, 0};

    InstanceGenerator gen(seed, params);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const auto curve = gen.curve();
        const MetrisedRDivisor g1 = gen.metrised(curve);
        const MetrisedRDivisor g2 = gen.metrised(curve);
        const MetrisedRDivisor sum = lin_comb_metrised(1, g1, 1, g2);
        const Rational d1 = g1.degree(), d2 = g2.degree();

        auto check = [&](const std::string& name, bool ok, const std::function<std::string()>& detail) {
            auto& c = counts[name];
            ++c.first;
            if (!ok) {
                ++c.second;
                rep.violations.push_back(
                    {trial, name, detail() + " | G1: " + describe(g1) + " | G2: " + describe(g2)});
            }
        };

        const Rational l1 = lambda_ess(g1), l2 = lambda_ess(g2), ls = lambda_ess(sum);
        check("lambda_ess_superadditivity", ls >= l1 + l2, [&] {
            return "lambda(G1+G2)=" + to_string(ls) + " < " + to_string(l1) + " + " + to_string(l2);
        });

        const DistributionProfile p1 = distribution(g1), p2 = distribution(g2), ps = distribution(sum);
        // Below lambda_ess both section sets are nonempty, which the product
        // argument needs.
        const Rational t1 = l1 - gen.rational(Rational(1, params.max_denominator), 2 * params.coeff_bound);
        const Rational t2 = l2 - gen.rational(Rational(1, params.max_denominator), 2 * params.coeff_bound);
        check("dgt_superadditivity", ps(t1 + t2) >= p1(t1) + p2(t2), [&] {
            return "t1=" + to_string(t1) + " t2=" + to_string(t2) + " deg D_{g,t}: " + to_string(ps(t1 + t2)) +
                   " < " + to_string(p1(t1)) + " + " + to_string(p2(t2));
        });

        const Rational v1 = 2 * (p1.positive_integral() - p1.negative_deficit());
        const Rational v2 = 2 * (p2.positive_integral() - p2.negative_deficit());
        const Rational vs = 2 * (ps.positive_integral() - ps.negative_deficit());
        check("vol_chi_deg_superadditivity", vs / (d1 + d2) >= v1 / d1 + v2 / d2, [&] {
            return "vol_chi: " + to_string(vs) + ", " + to_string(v1) + ", " + to_string(v2);
        });

        const Rational p11 = pairing(g1, g1), p22 = pairing(g2, g2), p12 = pairing(g1, g2);
        const Rational pss = pairing(sum, sum);
        check("hodge_index", pss / (d1 + d2) >= p11 / d1 + p22 / d2, [&] {
            return "pairings: (S.S)=" + to_string(pss) + " (1.1)=" + to_string(p11) + " (2.2)=" + to_string(p22);
        });
        {
            // Lift the root values until both self-pairings are nonnegative:
            // (G + c)^2 = G^2 + 2 c deg(D).
            const Rational c1 = p11 < 0 ? ceil(-p11 / (2 * d1)) : Rational(0);
            const Rational c2 = p22 < 0 ? ceil(-p22 / (2 * d2)) : Rational(0);
            const MetrisedRDivisor h1 = add_constant(g1, c1), h2 = add_constant(g2, c2);
            const Rational q11 = pairing(h1, h1), q22 = pairing(h2, h2), q12 = pairing(h1, h2);
            check("cauchy_schwarz", q12 >= 0 && q12 * q12 >= q11 * q22, [&] {
                return "(1.2)=" + to_string(q12) + " (1.1)=" + to_string(q11) + " (2.2)=" + to_string(q22);
            });
        }

        const Rational c = gen.coefficient();
        const MetrisedRDivisor shifted = add_constant(g1, c);
        const Rational vshift = vol_chi(shifted), lshift = lambda_ess(shifted);
        check("translation_identity", vshift == v1 + 2 * c * d1 && lshift == l1 + c, [&] {
            return "c=" + to_string(c) + " vol_chi(G1+c)=" + to_string(vshift) + " lambda(G1+c)=" + to_string(lshift);
        });

        const Rational a = gen.rational(Rational(1, params.max_denominator), params.coeff_bound);
        const Rational vscaled = vol_chi(scale(a, g1));
        check("scaling_identity", vscaled == a * a * v1,
              [&] { return "a=" + to_string(a) + " vol_chi(aG1)=" + to_string(vscaled); });

        std::map<PointId, EdgeData> edges;
        for (const auto& [x, e] : g1.edges()) edges.emplace(x, EdgeData{e.mu, gen.bounded_part()});
        const MetrisedRDivisor other = make_metrised(curve, gen.coefficient(), std::move(edges));
        const Rational vother = vol_chi(other);
        const Rational bound = 2 * phi_sup_distance(g1, other) * d1;
        check("lipschitz_bound", abs(v1 - vother) <= bound, [&] {
            return "vol_chi " + to_string(v1) + " vs " + to_string(vother) + " bound " + to_string(bound) +
                   " | G1': " + describe(other);
        });

        const Rational lo = 2 * d1 * phi_min(g1), hi = 2 * d1 * phi_max(g1);
        check("sandwich_bound", lo <= v1 && v1 <= hi, [&] {
            return to_string(lo) + " <= " + to_string(v1) + " <= " + to_string(hi);
        });
    }
    for (const auto& n : names) rep.checks.emplace_back(n, counts[n]);
    return rep;
}

}  // namespace arakelov
