#pragma once

#include "arakelov/curve.hpp"
#include "arakelov/plf.hpp"

#include <map>
#include <memory>

namespace arakelov {

// Restriction of g to the edge [root, x]: base + mu t + phi(t), with phi(0) = 0
// and phi flat at infinity.
struct EdgeData {
    Rational mu;
    Plf phi;
    friend bool operator==(const EdgeData&, const EdgeData&) = default;
};

// A pair (D, g) on the tree of a curve: the value of g at the root plus the
// edges where g is not constant. D is recovered from the edge slopes.
class MetrisedRDivisor {
public:
    MetrisedRDivisor() = default;

    const CurveModel& curve() const { return *curve_; }
    const std::shared_ptr<const CurveModel>& curve_ptr() const { return curve_; }
    const Rational& base_value() const { return base_; }
    const std::map<PointId, EdgeData>& edges() const { return edges_; }

    // nullptr when the edge is trivial.
    const EdgeData* edge(const PointId& x) const;
    // Full edge function base + mu t + phi(t); constant base off the edges.
    Plf edge_function(const PointId& x) const;
    RDivisor divisor() const;
    Rational degree() const;

    friend bool operator==(const MetrisedRDivisor& a, const MetrisedRDivisor& b);

private:
    friend MetrisedRDivisor make_metrised(std::shared_ptr<const CurveModel>, Rational,
                                          std::map<PointId, EdgeData>);
    std::shared_ptr<const CurveModel> curve_ = std::make_shared<CurveModel>();
    Rational base_ = 0;
    std::map<PointId, EdgeData> edges_;
};

// Principal divisor (s) of a rational section.
struct SectionDivisor {
    RDivisor div;
};

MetrisedRDivisor make_metrised(std::shared_ptr<const CurveModel> curve, Rational base_value,
                               std::map<PointId, EdgeData> edges);
MetrisedRDivisor lin_comb_metrised(const Rational& a, const MetrisedRDivisor& g1, const Rational& b,
                                   const MetrisedRDivisor& g2);
MetrisedRDivisor add_constant(const MetrisedRDivisor& g, const Rational& c);
MetrisedRDivisor scale(const Rational& a, const MetrisedRDivisor& g);
MetrisedRDivisor principal_metrised(std::shared_ptr<const CurveModel> curve, const SectionDivisor& s);
// (D, g_D): the canonical Green function of D shifted by base.
MetrisedRDivisor canonical_metrised(std::shared_ptr<const CurveModel> curve, const RDivisor& d,
                                    const Rational& base = 0);

Extended green_eval(const MetrisedRDivisor& g, const PointId& x, const Extended& t);
Rational pairing(const MetrisedRDivisor& g1, const MetrisedRDivisor& g2);

Extended mu_inf_point(const MetrisedRDivisor& g, const PointId& x);
Extended mu_inf_total(const MetrisedRDivisor& g);

// -ln ||s||_g. Throws DomainError unless (s) + D >= 0 and deg (s) = 0.
Rational section_log_norm(const MetrisedRDivisor& g, const SectionDivisor& s);

MetrisedRDivisor convex_envelope_green(const MetrisedRDivisor& g);
bool is_convex_green(const MetrisedRDivisor& g);
bool is_psh(const MetrisedRDivisor& g);
MetrisedRDivisor psh_envelope(const MetrisedRDivisor& g);

Extended height(const MetrisedRDivisor& g, const PointId& x);
Rational mu_ess(const MetrisedRDivisor& g);

// Extremes of phi_g = g - g_can over the whole tree (root and leaves included).
Rational phi_min(const MetrisedRDivisor& g);
Rational phi_max(const MetrisedRDivisor& g);
// sup over the tree of |phi_g - phi_h|.
Rational phi_sup_distance(const MetrisedRDivisor& g, const MetrisedRDivisor& h);

}  // namespace arakelov
