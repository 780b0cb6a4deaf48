#include "arakelov/rational.hpp"

#include "arakelov/errors.hpp"

#include <gmp.h>

#include <limits>
#include <ostream>

namespace arakelov {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    const Integer n{std::string(num)};
    const Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Rational q(n, d);
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
    // gmp prints "p/q" in lowest terms and plain "p" for integers.
    return q.str();
}

Integer floor_int(const Rational& q) {
    Integer r;
    Integer n = boost::multiprecision::numerator(q);
    Integer d = boost::multiprecision::denominator(q);
    mpz_fdiv_q(r.backend().data(), n.backend().data(), d.backend().data());
    return r;
}

Integer ceil_int(const Rational& q) {
    Integer r;
    Integer n = boost::multiprecision::numerator(q);
    Integer d = boost::multiprecision::denominator(q);
    mpz_cdiv_q(r.backend().data(), n.backend().data(), d.backend().data());
    return r;
}

Rational floor(const Rational& q) { return Rational(floor_int(q)); }
Rational ceil(const Rational& q) { return Rational(ceil_int(q)); }

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::int64_t to_int64(const Integer& z) {
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        throw DomainError("integer " + z.str() + " does not fit in 64 bits");
    return z.convert_to<std::int64_t>();
}

const Rational& Extended::value() const {
    if (kind_ != Kind::finite) throw DomainError("value() on infinite extended rational");
    return value_;
}

bool operator==(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Extended::Kind::finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ != Extended::Kind::finite) return std::strong_ordering::equal;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Extended operator+(const Extended& a, const Extended& b) {
    if (a.is_finite() && b.is_finite()) return Extended(a.value_ + b.value_);
    if ((a.is_neg_inf() && b.is_pos_inf()) || (a.is_pos_inf() && b.is_neg_inf()))
        throw DomainError("undefined sum -inf + +inf");
    return a.is_finite() ? b : a;
}

Extended operator*(const Rational& s, const Extended& a) {
    if (s < 0) throw DomainError("extended scaling by a negative factor");
    if (a.is_finite()) return Extended(s * a.value_);
    if (s == 0) return Extended(0);
    return a;
}

std::string to_string(const Extended& x) {
    switch (x.kind()) {
        case Extended::Kind::neg_inf: return "-inf";
        case Extended::Kind::pos_inf: return "+inf";
        default: return to_string(x.value());
    }
}

std::ostream& operator<<(std::ostream& os, const Extended& x) { return os << to_string(x); }

}  // namespace arakelov
