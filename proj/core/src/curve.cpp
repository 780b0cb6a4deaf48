#include "arakelov/curve.hpp"

#include "arakelov/errors.hpp"

#include <algorithm>

namespace arakelov {

CurveModel::CurveModel(int genus, std::map<PointId, std::int64_t> weights)
    : genus_(genus), weights_(std::move(weights)) {
    if (genus < 0) throw ConstructionError("negative genus");
    for (const auto& [x, w] : weights_)
        if (w <= 0) throw ConstructionError("point " + x + " has non-positive weight");
}

std::int64_t CurveModel::weight(const PointId& x) const {
    auto it = weights_.find(x);
    if (it == weights_.end()) throw ModelError("unknown point " + x);
    return it->second;
}

RDivisor::RDivisor(std::initializer_list<std::pair<const PointId, Rational>> init) {
    for (const auto& [x, c] : init) set(x, ord(x) + c);
}

Rational RDivisor::ord(const PointId& x) const {
    auto it = coeffs_.find(x);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void RDivisor::set(const PointId& x, const Rational& c) {
    if (c == 0)
        coeffs_.erase(x);
    else
        coeffs_[x] = c;
}

bool RDivisor::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return is_integer(kv.second); });
}

std::vector<PointId> RDivisor::support() const {
    std::vector<PointId> out;
    for (const auto& kv : coeffs_) out.push_back(kv.first);
    return out;
}

RDivisor& RDivisor::operator+=(const RDivisor& other) {
    for (const auto& [x, c] : other.coeffs_) set(x, ord(x) + c);
    return *this;
}

RDivisor operator-(RDivisor a, const RDivisor& b) {
    for (const auto& [x, c] : b.coeffs_) a.set(x, a.ord(x) - c);
    return a;
}

RDivisor operator*(const Rational& s, const RDivisor& d) {
    RDivisor out;
    for (const auto& [x, c] : d.coeffs_) out.set(x, s * c);
    return out;
}

bool dominates(const RDivisor& a, const RDivisor& b) {
    for (const auto& [x, c] : a.coeffs_)
        if (c < b.ord(x)) return false;
    for (const auto& [x, c] : b.coeffs_)
        if (a.ord(x) < c) return false;
    return true;
}

Rational degree(const RDivisor& d, const CurveModel& c) {
    Rational total = 0;
    for (const auto& [x, coeff] : d.coeffs()) total += coeff * c.weight(x);
    return total;
}

std::pair<RDivisor, RDivisor> floor_ceil(const RDivisor& d) {
    RDivisor lo, hi;
    for (const auto& [x, c] : d.coeffs()) {
        lo.set(x, floor(c));
        hi.set(x, ceil(c));
    }
    return {lo, hi};
}

std::int64_t h0_dim(const RDivisor& d, const CurveModel& c) {
    if (!c.exact_mode())
        throw UnsupportedError("h0_dim is exact only in genus 0 (genus " + std::to_string(c.genus()) + ")");
    // Riemann-Roch on the projective line: h0 = deg + 1 whenever deg >= -1.
    const Rational deg_floor = degree(floor_ceil(d).first, c);
    if (deg_floor < 0) return 0;
    return to_int64(floor_int(deg_floor)) + 1;
}

Rational asymptotic_h0_rate(const RDivisor& d, const CurveModel& c) {
    const Rational deg = degree(d, c);
    return deg > 0 ? deg : Rational(0);
}

bool is_principal(const RDivisor& d, const CurveModel& c) {
    if (!c.exact_mode()) throw UnsupportedError("principality test needs genus 0");
    return degree(d, c) == 0;
}

RDivisor sup_divisors(const std::vector<RDivisor>& ds) {
    if (ds.empty()) throw DomainError("sup of an empty family of divisors");
    std::map<PointId, Rational> best;
    std::map<PointId, std::size_t> seen;
    for (const RDivisor& d : ds)
        for (const auto& [x, c] : d.coeffs()) {
            auto [it, fresh] = best.emplace(x, c);
            if (!fresh && c > it->second) it->second = c;
            ++seen[x];
        }
    RDivisor out;
    for (const auto& [x, c] : best) {
        // A divisor not mentioning x has coefficient 0 there.
        out.set(x, seen[x] < ds.size() ? std::max(c, Rational(0)) : c);
    }
    return out;
}

std::int64_t support_weight(const RDivisor& d, const CurveModel& c) {
    std::int64_t total = 0;
    for (const auto& kv : d.coeffs()) total += c.weight(kv.first);
    return total;
}

}  // namespace arakelov
