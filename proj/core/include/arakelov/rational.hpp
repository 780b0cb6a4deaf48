#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace arakelov {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// Parses "p", "-p" or "p/q". Throws ParseError on anything else, including q = 0.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer floor_int(const Rational& q);
Integer ceil_int(const Rational& q);
Rational floor(const Rational& q);
Rational ceil(const Rational& q);
bool is_integer(const Rational& q);
double to_double(const Rational& q);
std::int64_t to_int64(const Integer& z);

// Rational extended by -inf and +inf. Arithmetic is limited to what the
// library needs: comparison, addition with a finite value, scaling by a
// nonnegative finite value, and printing.
class Extended {
public:
    enum class Kind { neg_inf, finite, pos_inf };

    Extended() = default;
    Extended(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}
    Extended(int v) : kind_(Kind::finite), value_(v) {}

    static Extended neg_inf() { return Extended(Kind::neg_inf); }
    static Extended pos_inf() { return Extended(Kind::pos_inf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
    bool is_pos_inf() const { return kind_ == Kind::pos_inf; }

    // Throws DomainError when not finite.
    const Rational& value() const;

    friend bool operator==(const Extended& a, const Extended& b);
    friend std::strong_ordering operator<=>(const Extended& a, const Extended& b);

    friend Extended operator+(const Extended& a, const Extended& b);
    friend Extended operator*(const Rational& s, const Extended& a);

private:
    explicit Extended(Kind k) : kind_(k) {}
    Kind kind_ = Kind::finite;
    Rational value_ = 0;
};

std::string to_string(const Extended& x);
std::ostream& operator<<(std::ostream& os, const Extended& x);

}  // namespace arakelov
