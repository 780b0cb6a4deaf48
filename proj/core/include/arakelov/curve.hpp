#pragma once

#include "arakelov/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arakelov {

using PointId = std::string;

// A curve known only through its genus and the residue degrees of finitely
// many closed points. Exact dimension counts and principality are available
// only in genus 0.
class CurveModel {
public:
    CurveModel() = default;
    CurveModel(int genus, std::map<PointId, std::int64_t> weights);

    int genus() const { return genus_; }
    bool exact_mode() const { return genus_ == 0; }
    const std::map<PointId, std::int64_t>& points() const { return weights_; }
    bool contains(const PointId& x) const { return weights_.count(x) != 0; }
    // Throws ModelError for unknown points.
    std::int64_t weight(const PointId& x) const;

    friend bool operator==(const CurveModel&, const CurveModel&) = default;

private:
    int genus_ = 0;
    std::map<PointId, std::int64_t> weights_;
};

// Finitely supported map from points to rational coefficients. Zero
// coefficients are never stored.
class RDivisor {
public:
    RDivisor() = default;
    RDivisor(std::initializer_list<std::pair<const PointId, Rational>> init);

    const std::map<PointId, Rational>& coeffs() const { return coeffs_; }
    Rational ord(const PointId& x) const;
    void set(const PointId& x, const Rational& c);
    bool is_zero() const { return coeffs_.empty(); }
    bool is_integral() const;
    std::vector<PointId> support() const;

    RDivisor& operator+=(const RDivisor& other);
    friend RDivisor operator+(RDivisor a, const RDivisor& b) { return a += b; }
    friend RDivisor operator-(RDivisor a, const RDivisor& b);
    friend RDivisor operator*(const Rational& s, const RDivisor& d);
    friend bool operator==(const RDivisor&, const RDivisor&) = default;

    // Componentwise a >= b.
    friend bool dominates(const RDivisor& a, const RDivisor& b);

private:
    std::map<PointId, Rational> coeffs_;
};

Rational degree(const RDivisor& d, const CurveModel& c);
std::pair<RDivisor, RDivisor> floor_ceil(const RDivisor& d);
std::int64_t h0_dim(const RDivisor& d, const CurveModel& c);
// lim h0(nD)/n, available in every genus.
Rational asymptotic_h0_rate(const RDivisor& d, const CurveModel& c);
bool is_principal(const RDivisor& d, const CurveModel& c);
RDivisor sup_divisors(const std::vector<RDivisor>& ds);
// sum of weights over the support
std::int64_t support_weight(const RDivisor& d, const CurveModel& c);

}  // namespace arakelov
