#pragma once

#include "arakelov/green.hpp"
#include "arakelov/simplex.hpp"

#include <map>
#include <vector>

namespace arakelov {

// sup over principal shifts c (degree 0, c_x >= -ord_x(D)) of
//   -c_x0 t0 + min_y inf_t (g_y(t) + c_y t)
// as an LP. Off-support points only ever absorb a nonnegative share of the
// degree budget, so the equality sum w c = 0 becomes sum_{x in S} w c_x <= 0.
struct MaximinProgram {
    std::vector<PointId> support;  // variable order
    LinearProgram lp;              // variables: y_x = c_x + mu_x (x in support), then u = base - z
    Rational objective_offset;     // optimum of the maximin = lp value + offset
};

struct MaximinSolution {
    Rational value;
    std::map<PointId, Rational> slopes;  // optimal c_x on the support
};

MaximinProgram maximin_program(const MetrisedRDivisor& g, const PointId* point = nullptr,
                               const Rational& t = 0);
MaximinSolution solve_maximin(const MetrisedRDivisor& g, const PointId* point = nullptr,
                              const Rational& t = 0);

Rational lambda_ess(const MetrisedRDivisor& g);
Rational tilde_eval(const MetrisedRDivisor& g, const PointId& x, const Rational& t);

struct Classification {
    bool big = false;
    bool pseudo_effective = false;
    bool effective_up_to_rlin = false;
    friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const MetrisedRDivisor& g);

// Per-point threshold data. With s = a + mu_x >= 0:
//   psi(s)    = inf_t ((s - mu_x) t + g_x(t))        concave, increasing, <= base
//   excess(u) = a_x(base - u) + mu_x                  convex, decreasing to 0
// where a_x(t) = min{a >= -mu_x : psi_x(a) >= t} for t <= base, +inf above.
struct ThresholdFunction {
    PointId point;
    Rational mu;
    Rational base;
    Plf psi;
    Plf excess;

    Extended psi_at(const Rational& a) const;
    Extended a_at(const Rational& t) const;
};

ThresholdFunction threshold_function(const MetrisedRDivisor& g, const PointId& x);

// t -> deg(D_{g,t}) as a piecewise-linear profile. The value is deg(D) for
// t <= vertices.front().t, affine between consecutive vertices, and 0 for
// t >= lambda_ess. The last vertex sits at lambda_ess and carries the left
// limit there.
struct DistributionProfile {
    Rational degree;
    Rational lambda_ess;
    std::vector<Vertex> vertices;

    Rational operator()(const Rational& t) const;
    // G(u) = sup{t : deg(D_{g,t}) > u}; -inf for u >= deg(D).
    Extended quantile(const Rational& u) const;
    // int_0^inf deg(D_{g,t}) dt
    Rational positive_integral() const;
    // int_{-inf}^0 (deg(D) - deg(D_{g,t})) dt
    Rational negative_deficit() const;
    // int t dP for the normalized measure P(]t, inf[) = deg(D_{g,t}) / deg(D)
    Rational mean() const;
};

DistributionProfile distribution(const MetrisedRDivisor& g);
Rational deg_Dgt(const MetrisedRDivisor& g, const Rational& t);
// sup{t : deg(D_{g,t}) > 0} from the threshold functions alone.
Rational lambda_ess_threshold(const MetrisedRDivisor& g);
Rational vol_chi(const MetrisedRDivisor& g);
Rational vol(const MetrisedRDivisor& g);

}  // namespace arakelov
