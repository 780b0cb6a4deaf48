#pragma once

#include "arakelov/green.hpp"
#include "arakelov/instances.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace arakelov {

// t -> dim{s in H0(nD) : ||s||_{ng} <= e^{-t}} as a list of steps
// (threshold, dim): the dimension is steps[0].second for t <= steps[0].first,
// steps[k].second for steps[k-1].first < t <= steps[k].first, and 0 beyond
// the last threshold.
struct FiltrationProfile {
    std::int64_t n = 0;
    std::int64_t h0 = 0;
    std::vector<std::pair<Rational, std::int64_t>> steps;

    std::int64_t operator()(const Rational& t) const;
};

std::int64_t filtration_dim(const MetrisedRDivisor& g, std::int64_t n, const Rational& t);
FiltrationProfile filtration_profile(const MetrisedRDivisor& g, std::int64_t n);
Rational arakelov_deg(const MetrisedRDivisor& g, std::int64_t n);
Rational arakelov_deg_plus(const MetrisedRDivisor& g, std::int64_t n);
// Orthogonal-basis route: sum_x w(x) sum_{i=0}^{floor(-n a_x)} n phi_x*(i/n).
Rational phi_star_sum(const MetrisedRDivisor& g, std::int64_t n);

struct HSRow {
    std::int64_t n = 0;
    Rational deg;
    Rational deg_plus;
    Rational ratio;       // deg / (n^2/2)
    Rational ratio_plus;  // deg_plus / (n^2/2)
    Rational gap;         // |ratio - target|
};

struct HSReport {
    Rational target;  // pairing(G, G)
    Rational vol_chi;
    Rational vol;
    std::vector<HSRow> rows;
};

HSReport hs_convergence_run(const MetrisedRDivisor& g, const std::vector<std::int64_t>& n_list);

struct Violation {
    std::uint64_t trial = 0;
    std::string check;
    std::string detail;
};

struct InequalityReport {
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    // check name -> (evaluated, violated)
    std::vector<std::pair<std::string, std::pair<std::uint64_t, std::uint64_t>>> checks;
    std::vector<Violation> violations;
};

InequalityReport inequality_suite(std::uint64_t seed, std::uint64_t trials,
                                  const GeneratorParams& params = GeneratorParams{});

}  // namespace arakelov
