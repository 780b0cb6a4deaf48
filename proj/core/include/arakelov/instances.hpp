#pragma once

#include "arakelov/green.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>

namespace arakelov {

struct GeneratorParams {
    int max_points = 6;
    int max_breakpoints = 4;
    int coeff_bound = 10;
    int max_denominator = 8;
    int max_weight = 3;
};

// Seeded random instances. Uses only the raw mt19937_64 stream (no
// std::*_distribution) so sequences agree across standard libraries.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed, GeneratorParams params = GeneratorParams{});

    std::uint64_t uniform(std::uint64_t n);  // in [0, n)
    std::int64_t integer(std::int64_t lo, std::int64_t hi);
    // p/q with 1 <= q <= max_denominator, value in [lo, hi].
    Rational rational(const Rational& lo, const Rational& hi);
    Rational coefficient();  // in [-coeff_bound, coeff_bound]

    std::shared_ptr<const CurveModel> curve();
    std::vector<Rational> breakpoints(int count);
    // phi(0) = 0, flat tail, arbitrary shape.
    Plf bounded_part();
    // phi(0) = 0, flat tail, convex: strictly increasing negative slopes.
    Plf convex_bounded_part(const Rational& steepest = 0);

    // Random (D, g) with deg(D) > 0.
    MetrisedRDivisor metrised(const std::shared_ptr<const CurveModel>& curve);
    // Convex edges with mu_inf(g - g(root)) >= 0.
    MetrisedRDivisor psh(const std::shared_ptr<const CurveModel>& curve);
    // Convex, base 0, integral D, and mu_inf(g) large enough that the
    // orthogonal-basis formula applies for every n >= 1.
    MetrisedRDivisor hs_instance(const std::shared_ptr<const CurveModel>& curve);

    const GeneratorParams& params() const { return params_; }

private:
    std::mt19937_64 rng_;
    GeneratorParams params_;
};

// Compact human-readable rendering used in counterexample reports.
std::string describe(const MetrisedRDivisor& g);

}  // namespace arakelov
