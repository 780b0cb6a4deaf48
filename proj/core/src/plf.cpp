#include "arakelov/plf.hpp"

#include "arakelov/errors.hpp"

#include <algorithm>

namespace arakelov {

Plf::Plf() = default;

Plf Plf::constant(const Rational& v) {
    Plf f;
    f.v0_ = v;
    return f;
}

Plf Plf::linear(const Rational& v0, const Rational& slope) {
    Plf f;
    f.v0_ = v0;
    f.final_ = slope;
    return f;
}

Plf Plf::from_slopes(const Rational& v0, std::vector<Rational> breakpoints, std::vector<Rational> slopes,
                     const Rational& final_slope) {
    if (breakpoints.size() != slopes.size())
        throw ConstructionError("PLF needs one segment slope per breakpoint");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (breakpoints[i] <= 0 || (i > 0 && breakpoints[i] <= breakpoints[i - 1]))
            throw ConstructionError("PLF breakpoints must be positive and strictly increasing");
    }
    Plf f;
    f.v0_ = v0;
    f.bp_ = std::move(breakpoints);
    f.slopes_ = std::move(slopes);
    f.final_ = final_slope;
    f.normalize();
    return f;
}

Plf Plf::from_vertices(const std::vector<Vertex>& vertices, const Rational& final_slope) {
    if (vertices.empty() || vertices.front().t != 0)
        throw ConstructionError("PLF vertex list must start at t = 0");
    std::vector<Rational> bp, slopes;
    bp.reserve(vertices.size() - 1);
    slopes.reserve(vertices.size() - 1);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const Rational dt = vertices[i].t - vertices[i - 1].t;
        if (dt <= 0) throw ConstructionError("PLF vertex abscissae must be strictly increasing");
        bp.push_back(vertices[i].t);
        slopes.push_back((vertices[i].value - vertices[i - 1].value) / dt);
    }
    return from_slopes(vertices.front().value, std::move(bp), std::move(slopes), final_slope);
}

void Plf::normalize() {
    // Drop every breakpoint whose two neighbouring slopes agree. slopes_[i] is
    // the slope of the segment ending at bp_[i], so the kept pairs still
    // describe the same function.
    std::vector<Rational> bp, slopes;
    for (std::size_t i = 0; i < bp_.size(); ++i) {
        const Rational& next = i + 1 < bp_.size() ? slopes_[i + 1] : final_;
        if (slopes_[i] == next) continue;
        bp.push_back(bp_[i]);
        slopes.push_back(slopes_[i]);
    }
    bp_ = std::move(bp);
    slopes_ = std::move(slopes);
    vals_.clear();
    vals_.reserve(bp_.size());
    Rational prev_t = 0, prev_v = v0_;
    for (std::size_t i = 0; i < bp_.size(); ++i) {
        prev_v += slopes_[i] * (bp_[i] - prev_t);
        prev_t = bp_[i];
        vals_.push_back(prev_v);
    }
}

std::vector<Vertex> Plf::vertices() const {
    std::vector<Vertex> out;
    out.reserve(bp_.size() + 1);
    out.push_back({0, v0_});
    for (std::size_t i = 0; i < bp_.size(); ++i) out.push_back({bp_[i], vals_[i]});
    return out;
}

Rational Plf::operator()(const Rational& t) const {
    if (t < 0) throw DomainError("PLF evaluated at negative t = " + to_string(t));
    // Index of the first breakpoint >= t.
    auto it = std::lower_bound(bp_.begin(), bp_.end(), t);
    const std::size_t k = static_cast<std::size_t>(it - bp_.begin());
    if (k < bp_.size() && bp_[k] == t) return vals_[k];
    if (k == bp_.size()) {
        if (bp_.empty()) return v0_ + final_ * t;
        return vals_.back() + final_ * (t - bp_.back());
    }
    const Rational& t0 = k == 0 ? Rational(0) : bp_[k - 1];
    const Rational& v0 = k == 0 ? v0_ : vals_[k - 1];
    return v0 + slopes_[k] * (t - t0);
}

const Rational& Plf::slope_right_of(const Rational& t) const {
    auto it = std::upper_bound(bp_.begin(), bp_.end(), t);
    const std::size_t k = static_cast<std::size_t>(it - bp_.begin());
    return k < slopes_.size() ? slopes_[k] : final_;
}

bool Plf::is_convex() const {
    for (std::size_t i = 0; i < slopes_.size(); ++i) {
        const Rational& next = i + 1 < slopes_.size() ? slopes_[i + 1] : final_;
        if (next < slopes_[i]) return false;
    }
    return true;
}

Extended plf_eval(const Plf& f, const Extended& t) {
    if (t.is_neg_inf() || (t.is_finite() && t.value() < 0)) throw DomainError("PLF evaluated at negative t");
    if (t.is_finite()) return f(t.value());
    if (f.final_slope() > 0) return Extended::pos_inf();
    if (f.final_slope() < 0) return Extended::neg_inf();
    return f.last_value();
}

namespace {

std::vector<Rational> merged_breakpoints(const Plf& f, const Plf& g) {
    std::vector<Rational> out;
    out.reserve(f.breakpoints().size() + g.breakpoints().size());
    std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
               std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Plf plf_lin_comb(const Rational& a, const Plf& f, const Rational& b, const Plf& g) {
    std::vector<Vertex> vs;
    vs.push_back({0, a * f.value_at_zero() + b * g.value_at_zero()});
    for (const Rational& t : merged_breakpoints(f, g)) vs.push_back({t, a * f(t) + b * g(t)});
    return Plf::from_vertices(vs, a * f.final_slope() + b * g.final_slope());
}

namespace {

// Pointwise min (take_min) or max of two PLFs. Between consecutive abscissae
// of the merged grid, augmented by the crossing points of f - g, one of the
// two functions dominates, so the result is affine there.
Plf pointwise_extreme(const Plf& f, const Plf& g, bool take_min) {
    std::vector<Rational> grid{0};
    for (const Rational& t : merged_breakpoints(f, g)) grid.push_back(t);

    std::vector<Rational> pts;
    pts.reserve(grid.size() * 2);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        pts.push_back(grid[i]);
        const Rational h0 = f(grid[i]) - g(grid[i]);
        if (i + 1 < grid.size()) {
            const Rational h1 = f(grid[i + 1]) - g(grid[i + 1]);
            if ((h0 < 0 && h1 > 0) || (h0 > 0 && h1 < 0))
                pts.push_back(grid[i] + (grid[i + 1] - grid[i]) * h0 / (h0 - h1));
        } else {
            const Rational hs = f.final_slope() - g.final_slope();
            if ((h0 > 0 && hs < 0) || (h0 < 0 && hs > 0)) pts.push_back(grid[i] - h0 / hs);
        }
    }

    std::vector<Vertex> vs;
    vs.reserve(pts.size());
    for (const Rational& t : pts) {
        Rational fv = f(t), gv = g(t);
        vs.push_back({t, (take_min ? fv < gv : fv > gv) ? fv : gv});
    }
    // Tail: whichever function is extreme beyond the last point.
    const Rational& last = pts.back();
    const Rational h = f(last) - g(last);
    const Rational hs = f.final_slope() - g.final_slope();
    const int sign = hs != 0 ? (hs > 0 ? 1 : -1) : (h > 0 ? 1 : (h < 0 ? -1 : 0));
    Rational tail;
    if (take_min)
        tail = sign <= 0 ? f.final_slope() : g.final_slope();
    else
        tail = sign >= 0 ? f.final_slope() : g.final_slope();
    return Plf::from_vertices(vs, tail);
}

}  // namespace

Plf pointwise_min(const Plf& f, const Plf& g) { return pointwise_extreme(f, g, true); }
Plf pointwise_max(const Plf& f, const Plf& g) { return pointwise_extreme(f, g, false); }

Rational energy(const Plf& f, const Plf& g) {
    if (f.final_slope() != 0 && g.final_slope() != 0)
        throw DivergenceError("energy integral diverges: both final slopes are nonzero");
    Rational total = 0;
    Rational prev = 0;
    for (const Rational& t : merged_breakpoints(f, g)) {
        total += f.slope_right_of(prev) * g.slope_right_of(prev) * (t - prev);
        prev = t;
    }
    return total;
}

Plf lower_convex_envelope(const Plf& f) {
    // Lower hull of the vertices (Andrew's monotone chain), then trim the
    // end so that no hull slope exceeds the asymptotic direction.
    const std::vector<Vertex> vs = f.vertices();
    std::vector<Vertex> hull;
    hull.reserve(vs.size());
    auto slope = [](const Vertex& a, const Vertex& b) { return (b.value - a.value) / (b.t - a.t); };
    for (const Vertex& p : vs) {
        while (hull.size() >= 2 && slope(hull[hull.size() - 2], hull.back()) >= slope(hull.back(), p))
            hull.pop_back();
        hull.push_back(p);
    }
    while (hull.size() >= 2 && slope(hull[hull.size() - 2], hull.back()) >= f.final_slope()) hull.pop_back();
    return Plf::from_vertices(hull, f.final_slope());
}

Plf legendre_star(const Plf& f) {
    if (!f.is_convex()) throw DomainError("legendre_star needs a convex PLF");
    if (f.final_slope() != 0) throw DomainError("legendre_star needs final slope 0");
    // phi* is the lower envelope of the lines lambda -> x lambda + f(x) - f(0)
    // over the vertices x; its kinks sit at lambda = -slope.
    const std::vector<Vertex> vs = f.vertices();
    std::vector<Rational> lambdas{0};
    for (auto it = f.segment_slopes().rbegin(); it != f.segment_slopes().rend(); ++it) lambdas.push_back(-*it);
    std::vector<Vertex> out;
    out.reserve(lambdas.size());
    for (const Rational& l : lambdas) {
        Rational best = vs.front().t * l + vs.front().value;
        for (const Vertex& v : vs) best = std::min(best, v.t * l + v.value);
        out.push_back({l, best - f.value_at_zero()});
    }
    return Plf::from_vertices(out, 0);
}

Extended inf_affine_shift(const Plf& f, const Rational& c) {
    if (c + f.final_slope() < 0) return Extended::neg_inf();
    // f + c t is affine between vertices with a nondecreasing tail, so the
    // infimum is attained at a vertex.
    Rational best = f.value_at_zero();
    const auto& bp = f.breakpoints();
    const auto& vals = f.breakpoint_values();
    for (std::size_t i = 0; i < bp.size(); ++i) best = std::min(best, vals[i] + c * bp[i]);
    return best;
}

Extended inf_ratio(const Plf& f) {
    if (f.value_at_zero() < 0) return Extended::neg_inf();
    // On a segment f(t)/t = (v - s t0)/t + s is monotone, so only the segment
    // ends matter: breakpoints, the limit at +inf (final slope) and, when
    // f(0) = 0, the limit at 0+ (initial slope). For f(0) > 0 the ratio blows
    // up at 0+.
    Rational best = f.final_slope();
    const auto& bp = f.breakpoints();
    const auto& vals = f.breakpoint_values();
    for (std::size_t i = 0; i < bp.size(); ++i) best = std::min(best, vals[i] / bp[i]);
    if (f.value_at_zero() == 0) best = std::min(best, f.initial_slope());
    return best;
}

DerivativeMeasure derivative_measure(const Plf& f) {
    DerivativeMeasure m;
    m.initial_slope = f.initial_slope();
    const auto& bp = f.breakpoints();
    const auto& s = f.segment_slopes();
    for (std::size_t i = 0; i < bp.size(); ++i) {
        const Rational& after = i + 1 < s.size() ? s[i + 1] : f.final_slope();
        m.atoms.push_back({bp[i], after - s[i]});
    }
    return m;
}

Rational stieltjes_vs_derivative(const Plf& phi, const Plf& psi) {
    if (!psi.is_convex()) throw DomainError("stieltjes_vs_derivative needs convex psi");
    if (psi.final_slope() != 0 || phi.final_slope() != 0)
        throw DomainError("stieltjes_vs_derivative needs flat tails");
    Rational total = 0;
    for (const Vertex& a : derivative_measure(psi).atoms) total += phi(a.t) * a.value;
    return total;
}

Rational integral(const Plf& f, const Rational& a, const Rational& b) {
    if (a < 0 || b < a) throw DomainError("integral needs 0 <= a <= b");
    std::vector<Rational> pts{a};
    for (const Rational& t : f.breakpoints())
        if (t > a && t < b) pts.push_back(t);
    pts.push_back(b);
    Rational total = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) total += (f(pts[i - 1]) + f(pts[i])) * (pts[i] - pts[i - 1]) / 2;
    return total;
}

Rational integral_to_infinity(const Plf& f) {
    if (f.final_slope() != 0 || f.last_value() != 0)
        throw DivergenceError("integral over [0, +inf) diverges: tail is not identically 0");
    if (f.breakpoints().empty()) return 0;
    return integral(f, 0, f.breakpoints().back());
}

Extended min_value(const Plf& f) {
    if (f.final_slope() < 0) return Extended::neg_inf();
    Rational best = f.value_at_zero();
    for (const Rational& v : f.breakpoint_values()) best = std::min(best, v);
    return best;
}

Extended max_value(const Plf& f) {
    if (f.final_slope() > 0) return Extended::pos_inf();
    Rational best = f.value_at_zero();
    for (const Rational& v : f.breakpoint_values()) best = std::max(best, v);
    return best;
}

Extended sup_abs(const Plf& f) {
    if (f.final_slope() != 0) return Extended::pos_inf();
    Rational best = abs(f.value_at_zero());
    for (const Rational& v : f.breakpoint_values()) best = std::max(best, Rational(abs(v)));
    return best;
}

}  // namespace arakelov
