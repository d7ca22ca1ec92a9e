#include "wsq/laurent.hpp"

#include <cstdlib>

#include "wsq/errors.hpp"

namespace wsq {

namespace {

Laurent::Coeff checked_add(Laurent::Coeff a, Laurent::Coeff b) {
  Laurent::Coeff out = 0;
  ensure(!__builtin_add_overflow(a, b, &out), "Laurent coefficient overflow");
  return out;
}

Laurent::Coeff checked_mul(Laurent::Coeff a, Laurent::Coeff b) {
  Laurent::Coeff out = 0;
  ensure(!__builtin_mul_overflow(a, b, &out), "Laurent coefficient overflow");
  return out;
}

}  // namespace

Laurent::Laurent(Coeff constant) { add_term(0, constant); }

Laurent Laurent::monomial(Coeff coeff, int exponent) {
  Laurent out;
  out.add_term(exponent, coeff);
  return out;
}

Laurent Laurent::q_minus_q_inverse() { return monomial(1, 1) - monomial(1, -1); }

void Laurent::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

Laurent::Coeff Laurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

Laurent Laurent::shifted(int e) const {
  Laurent out;
  for (const auto& [x, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), x + e, c);
  return out;
}

Laurent::Coeff Laurent::at_one() const {
  Coeff total = 0;
  for (const auto& [x, c] : terms_) total = checked_add(total, c);
  return total;
}

std::optional<int> Laurent::ratio_exponent(const Laurent& other) const {
  if (is_zero() || other.is_zero()) {
    if (is_zero() && other.is_zero()) return 0;
    return std::nullopt;
  }
  const int c = min_exponent() - other.min_exponent();
  if (other.shifted(c) == *this) return c;
  return std::nullopt;
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& [x, c] : out.terms_) c = -c;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [xa, ca] : a.terms_)
    for (const auto& [xb, cb] : b.terms_) out.add_term(xa + xb, checked_mul(ca, cb));
  return out;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [x, c] = *it;
    const Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (x == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += x == 1 ? std::string("q") : "q^" + std::to_string(x);
  }
  return out;
}

}  // namespace wsq
