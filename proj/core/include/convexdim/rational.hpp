#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace convexdim {

/// Exact rational number in canonical form (gcd(|num|, den) = 1, den > 0).
///
/// Thin value wrapper around GMP's mpq_class; every operation returns a
/// canonical value so equality is structural.
class Rational {
  public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);

    /// Parses "p/q", "-p/q" or an integer string. Throws InputError.
    static Rational parse(std::string_view text);

    /// Canonical text: "p" when the denominator is 1, "p/q" otherwise.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    [[nodiscard]] const mpq_class& raw() const { return value_; }

  private:
    explicit Rational(mpq_class v);
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace convexdim
