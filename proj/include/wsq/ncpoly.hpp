#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wsq/laurent.hpp"

namespace wsq {

/// Generator x_{row,col} of the quantum matrix algebra C_q[Mat_{k x m}].
struct Generator {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// A word in the generators. Normal-form words are sorted non-decreasingly
/// by (row, col).
using Word = std::vector<Generator>;

/// Noncommutative polynomial over Z[q, q^-1] in the generators of
/// C_q[Mat_{k x m}], always stored in normal form.
class NCPoly {
 public:
  NCPoly(int k, int m);

  static NCPoly generator(int k, int m, int row, int col);
  static NCPoly scalar(int k, int m, const Laurent& c);

  int rows() const { return k_; }
  int cols() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Laurent>& terms() const { return terms_; }

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly scaled(const Laurent& c) const;

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  /// Specialization q -> 1, read as a commutative polynomial (keys are the
  /// sorted generator multisets).
  std::map<Word, std::int64_t> at_q_one() const;

  /// "(1) * x[1,1] x[2,2] + (-q^-1) * x[1,2] x[2,1]"; "0" for zero.
  std::string to_string() const;

  /// Adds coeff * word for a word already in normal form.
  void add_normal_term(const Word& word, const Laurent& coeff);

 private:
  int k_;
  int m_;
  std::map<Word, Laurent> terms_;
};

bool is_normal(const Word& word);

/// Normal form of coeff * word under the quantum matrix relations, rewriting
/// the leftmost out-of-order adjacent pair first.
NCPoly normalize(int k, int m, const Word& word, const Laurent& coeff = 1);

/// Same result, but each rewrite picks a uniformly random out-of-order pair.
/// Used to check that the rewriting system is confluent.
NCPoly normalize_randomized(int k, int m, const Word& word, const Laurent& coeff,
                            std::mt19937_64& rng);

}  // namespace wsq
