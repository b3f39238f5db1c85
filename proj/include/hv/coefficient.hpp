#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace hv {

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator; zero is 0/1.
class Coefficient {
 public:
  Coefficient() = default;

  template <std::integral T>
  Coefficient(T n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Coefficient(const mpz_class& num, const mpz_class& den);
  explicit Coefficient(const mpq_class& q);

  /// Parses "n" or "n/d" with optional leading sign and arbitrary-length digits.
  static Coefficient parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Coefficient inv() const;
  Coefficient abs() const { return Coefficient(mpq_class(::abs(q_))); }

  std::string to_string() const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  friend Coefficient operator-(const Coefficient& a) { return Coefficient(mpq_class(-a.q_)); }

  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  mpq_class q_;
};

Coefficient add(const Coefficient& a, const Coefficient& b);
Coefficient mul(const Coefficient& a, const Coefficient& b);
Coefficient neg(const Coefficient& a);
/// Throws DivisionByZero on a zero argument.
Coefficient inv(const Coefficient& a);

}  // namespace hv
