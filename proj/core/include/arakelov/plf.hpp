#pragma once

#include "arakelov/rational.hpp"

#include <vector>

namespace arakelov {

struct Vertex {
    Rational t;
    Rational value;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Continuous piecewise-linear function on [0, +inf) with finitely many
// breakpoints and an affine tail. Always kept in normal form: breakpoints are
// strictly increasing and positive, adjacent slopes differ, so two equal
// functions have equal representations.
//
// segment_slopes()[0] is the slope on (0, t_1), segment_slopes()[i] the slope
// on (t_i, t_{i+1}); final_slope() is the slope on (t_m, +inf).
class Plf {
public:
    Plf();  // the zero function

    static Plf constant(const Rational& v);
    static Plf linear(const Rational& v0, const Rational& slope);
    static Plf from_slopes(const Rational& v0, std::vector<Rational> breakpoints,
                           std::vector<Rational> slopes, const Rational& final_slope);
    // vertices[0].t must be 0; abscissae strictly increasing.
    static Plf from_vertices(const std::vector<Vertex>& vertices, const Rational& final_slope);

    const Rational& value_at_zero() const { return v0_; }
    const std::vector<Rational>& breakpoints() const { return bp_; }
    const std::vector<Rational>& segment_slopes() const { return slopes_; }
    const Rational& final_slope() const { return final_; }
    // Values at the breakpoints, same indexing as breakpoints().
    const std::vector<Rational>& breakpoint_values() const { return vals_; }

    // (0, f(0)) followed by every breakpoint.
    std::vector<Vertex> vertices() const;
    // Value at the last vertex (f(+inf) when the tail is flat).
    const Rational& last_value() const { return vals_.empty() ? v0_ : vals_.back(); }

    // Finite evaluation, t >= 0.
    Rational operator()(const Rational& t) const;
    // Slope of f on (t, t + eps).
    const Rational& slope_right_of(const Rational& t) const;
    const Rational& initial_slope() const { return slopes_.empty() ? final_ : slopes_.front(); }

    bool is_convex() const;
    bool is_bounded() const { return final_ == 0; }

    friend bool operator==(const Plf&, const Plf&) = default;

private:
    void normalize();

    Rational v0_ = 0;
    std::vector<Rational> bp_;
    std::vector<Rational> slopes_;
    Rational final_ = 0;
    std::vector<Rational> vals_;
};

// Right-continuous derivative seen as a measure: point masses at the slope
// jumps plus the slope on (0, t_1).
struct DerivativeMeasure {
    std::vector<Vertex> atoms;  // (location, mass)
    Rational initial_slope;
};

Extended plf_eval(const Plf& f, const Extended& t);
Plf plf_lin_comb(const Rational& a, const Plf& f, const Rational& b, const Plf& g);
Plf pointwise_min(const Plf& f, const Plf& g);
Plf pointwise_max(const Plf& f, const Plf& g);

// int_0^inf f' g'. Throws DivergenceError when both tails are sloped.
Rational energy(const Plf& f, const Plf& g);

Plf lower_convex_envelope(const Plf& f);

// lambda -> inf_x (x lambda + f(x) - f(0)) on [0, +inf). f convex with flat tail.
Plf legendre_star(const Plf& f);

// inf_{t >= 0} (f(t) + c t).
Extended inf_affine_shift(const Plf& f, const Rational& c);

// inf_{t > 0} f(t) / t.
Extended inf_ratio(const Plf& f);

DerivativeMeasure derivative_measure(const Plf& f);

// int_{]0, +inf]} phi d(psi'). psi convex, both tails flat.
Rational stieltjes_vs_derivative(const Plf& phi, const Plf& psi);

// int_a^b f, 0 <= a <= b finite.
Rational integral(const Plf& f, const Rational& a, const Rational& b);
// int_0^inf f. Needs a flat tail at level 0.
Rational integral_to_infinity(const Plf& f);

// Extremes over [0, +inf].
Extended min_value(const Plf& f);
Extended max_value(const Plf& f);
Extended sup_abs(const Plf& f);

}  // namespace arakelov
