#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace wsq {

/// Laurent polynomial in q with integer coefficients. Sparse; zero
/// coefficients are never stored, so equality is structural.
class Laurent {
 public:
  using Coeff = std::int64_t;

  Laurent() = default;
  Laurent(Coeff constant);  // NOLINT: implicit from integers is intended
  static Laurent monomial(Coeff coeff, int exponent);
  static Laurent q_power(int exponent) { return monomial(1, exponent); }
  /// q - q^-1, the cross-term factor of the quantum matrix relations.
  static Laurent q_minus_q_inverse();

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Coeff>& terms() const { return terms_; }
  Coeff coefficient(int exponent) const;
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  /// Multiplication by q^e.
  Laurent shifted(int e) const;
  /// Value at q = 1.
  Coeff at_one() const;
  /// If *this == q^c * other for a single integer c, return c.
  std::optional<int> ratio_exponent(const Laurent& other) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Descending powers, e.g. "q^2 - 1 + q^-2", "-3*q", "0".
  std::string to_string() const;

 private:
  void add_term(int exponent, Coeff coeff);
  std::map<int, Coeff> terms_;
};

}  // namespace wsq
