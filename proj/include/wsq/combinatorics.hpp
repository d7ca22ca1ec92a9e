#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsq/ksubset.hpp"

namespace wsq {

/// I < J elementwise: every element of I is below every element of J.
/// Vacuously true when either side is empty.
bool precedes(const KSubset& lhs, const KSubset& rhs);

/// The split of the smaller-side difference around the larger-side one:
/// for the orientation (I, J) with |I| >= |J|, lower = {x in J-I : x < min(I-J)}
/// and upper = {x in J-I : x > max(I-J)}.
struct SeparatingPartition {
  KSubset lower;
  KSubset upper;
};

/// Canonical partition for the orientation where `first` plays the role of the
/// set whose difference sits in the middle. Empty optional when |first| < |second|
/// or when lower and upper do not exhaust second - first.
std::optional<SeparatingPartition> separating_partition(const KSubset& first,
                                                        const KSubset& second);

/// Weak separation evaluated through the canonical partition.
bool weakly_separated(const KSubset& a, const KSubset& b);

/// Weak separation evaluated through the forbidden-pattern criteria
/// (no a<b<c interleaving for unequal sizes, no a<b<c<d crossing for equal
/// sizes). Independent second route; must agree with weakly_separated.
bool weakly_separated_by_patterns(const KSubset& a, const KSubset& b);

/// Row/column index pair of a quantum minor of a k x m quantum matrix.
struct MinorIndex {
  KSubset rows;  // within [1..k]
  KSubset cols;  // within [1..m]

  static MinorIndex make(int k, int m, const std::vector<int>& rows,
                         const std::vector<int>& cols);
  static MinorIndex make(const KSubset& rows, const KSubset& cols);

  int k() const { return rows.n(); }
  int m() const { return cols.n(); }
  int size() const { return rows.size(); }

  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
  friend auto operator<=>(const MinorIndex&, const MinorIndex&) = default;
};

/// All minors of a k x m matrix (every l >= 1), ordered by (l, rows, cols).
std::vector<MinorIndex> all_minors(int k, int m);

/// S(A,B) = {b+k : b in B} u ([1..k] - w0(A)), a k-subset of [1..k+m].
KSubset stieffel_subset(const MinorIndex& mi);

/// Commutation exponent c of two quantum Pluecker coordinates,
/// Delta^J Delta^I = q^c Delta^I Delta^J; empty when not weakly separated.
std::optional<int> plucker_exponent(const KSubset& i, const KSubset& j);

/// Commutation exponent c(Delta_{A,B} | Delta_{C,D}) predicted from the
/// Stieffel subsets; empty when they are not weakly separated.
std::optional<int> minor_exponent(const MinorIndex& p, const MinorIndex& r);

/// Element of the dihedral group D_n acting on [1..n], stored as the affine map
/// x-1 -> shift + (reflected ? -(x-1) : (x-1))  (mod n).
class DihedralElement {
 public:
  DihedralElement() = default;
  DihedralElement(int n, int shift, bool reflected);

  static DihedralElement identity(int n) { return {n, 0, false}; }
  /// rho_n : i -> i+1, n -> 1.
  static DihedralElement rotation(int n) { return {n, 1, false}; }
  /// sigma_n : 1 -> 2, 2 -> 1, 3 -> n, 4 -> n-1, ...
  static DihedralElement reflection(int n) { return {n, 1, true}; }
  /// All 2n elements, rotations first.
  static std::vector<DihedralElement> all(int n);

  int n() const { return n_; }
  int shift() const { return shift_; }
  bool reflected() const { return reflected_; }

  int apply(int index) const;
  KSubset apply(const KSubset& s) const;

  DihedralElement inverse() const;
  /// (g * h)(x) = g(h(x)).
  DihedralElement operator*(const DihedralElement& other) const;

  std::string to_string() const;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;

 private:
  int n_ = 1;
  int shift_ = 0;
  bool reflected_ = false;
};

/// Smallest cardinality of a cyclic interval of [1..n] containing the subset.
int diameter(const KSubset& s);
/// True when the subset is a cyclic interval.
bool is_boundary(const KSubset& s);

}  // namespace wsq
