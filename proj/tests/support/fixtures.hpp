#pragma once

#include "arakelov/green.hpp"

#include <memory>

namespace fixtures {

using arakelov::MetrisedRDivisor;
using arakelov::Plf;
using arakelov::Rational;

inline Rational q(const char* s) { return arakelov::parse_rational(s); }

// min(t, cap)
Plf min_t(const Rational& cap);

// Points p0 and pinf, both of weight 1, genus 0.
std::shared_ptr<const arakelov::CurveModel> two_point_curve();

// base 0; pinf: mu = 1, phi = 0; p0: mu = 0, phi = -(1/2) min(t, 1).
MetrisedRDivisor w1();
// W1 with phi_{p0} multiplied by k.
MetrisedRDivisor w1_scaled_phi(const Rational& k);

}  // namespace fixtures
