#include "wsq/combinatorics.hpp"

#include "wsq/errors.hpp"

namespace wsq {

bool precedes(const KSubset& lhs, const KSubset& rhs) {
  if (lhs.empty() || rhs.empty()) return true;
  return lhs.max() < rhs.min();
}

std::optional<SeparatingPartition> separating_partition(const KSubset& first,
                                                        const KSubset& second) {
  require(first.n() == second.n(), "subsets live in different ground sets");
  if (first.size() < second.size()) return std::nullopt;
  const KSubset middle = first - second;
  const KSubset outer = second - first;
  if (middle.empty()) {
    // |first| >= |second| and first is inside second: the sets coincide.
    return SeparatingPartition{outer, KSubset::empty_set(first.n())};
  }
  const int n = first.n();
  const KSubset lower = outer & KSubset::interval(n, 1, middle.min() - 1);
  const KSubset upper = outer & KSubset::interval(n, middle.max() + 1, n);
  if ((lower | upper) != outer) return std::nullopt;
  return SeparatingPartition{lower, upper};
}

bool weakly_separated(const KSubset& a, const KSubset& b) {
  require(a.n() == b.n(), "subsets live in different ground sets");
  if (a.size() >= b.size() && separating_partition(a, b)) return true;
  if (b.size() >= a.size() && separating_partition(b, a)) return true;
  return false;
}

namespace {

// Does the ascending sequence of symmetric-difference elements, each tagged by
// which side it came from, contain `pattern` as a subsequence?
bool has_interleaving(const KSubset& a, const KSubset& b,
                      std::initializer_list<bool> pattern) {
  const KSubset only_a = a - b;
  const KSubset only_b = b - a;
  auto want = pattern.begin();
  for (int x = 1; x <= a.n() && want != pattern.end(); ++x) {
    const bool in_a = only_a.contains(x);
    const bool in_b = only_b.contains(x);
    if (!in_a && !in_b) continue;
    if (in_a == *want) ++want;
  }
  return want == pattern.end();
}

}  // namespace

bool weakly_separated_by_patterns(const KSubset& a, const KSubset& b) {
  require(a.n() == b.n(), "subsets live in different ground sets");
  if (a.size() == b.size()) {
    return !has_interleaving(a, b, {true, false, true, false}) &&
           !has_interleaving(a, b, {false, true, false, true});
  }
  // Pattern: large, small, large. Tag true = element of the smaller set.
  const bool a_small = a.size() < b.size();
  return !has_interleaving(a, b, {!a_small, a_small, !a_small});
}

MinorIndex MinorIndex::make(int k, int m, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
  return make(KSubset::from_indices(k, rows), KSubset::from_indices(m, cols));
}

MinorIndex MinorIndex::make(const KSubset& rows, const KSubset& cols) {
  require(rows.size() >= 1, "minor must be non-empty");
  require(rows.size() == cols.size(), "minor row and column sets differ in size");
  return MinorIndex{rows, cols};
}

std::vector<MinorIndex> all_minors(int k, int m) {
  std::vector<MinorIndex> out;
  for (int l = 1; l <= std::min(k, m); ++l)
    for (const auto& r : all_k_subsets(k, l))
      for (const auto& c : all_k_subsets(m, l)) out.push_back(MinorIndex{r, c});
  return out;
}

KSubset stieffel_subset(const MinorIndex& mi) {
  const int k = mi.k();
  const int m = mi.m();
  const int n = k + m;
  Mask out = 0;
  for (int b : mi.cols.indices()) out |= Mask{1} << (b + k - 1);
  for (int i = 1; i <= k; ++i) {
    // i is removed when i = w0(a) = k+1-a for some row a.
    if (!mi.rows.contains(k + 1 - i)) out |= Mask{1} << (i - 1);
  }
  return KSubset::from_mask(n, out);
}

std::optional<int> plucker_exponent(const KSubset& i, const KSubset& j) {
  require(i.n() == j.n(), "subsets live in different ground sets");
  require(i.size() == j.size(), "Pluecker coordinates must have equal size");
  if (auto p = separating_partition(i, j)) return p->upper.size() - p->lower.size();
  if (auto p = separating_partition(j, i)) return p->lower.size() - p->upper.size();
  return std::nullopt;
}

std::optional<int> minor_exponent(const MinorIndex& p, const MinorIndex& r) {
  require(p.k() == r.k() && p.m() == r.m(), "minors of different matrix shapes");
  const KSubset si = stieffel_subset(p);
  const KSubset sj = stieffel_subset(r);
  const int size_shift = p.size() - r.size();
  if (auto part = separating_partition(si, sj))
    return part->upper.size() - part->lower.size() + size_shift;
  if (auto part = separating_partition(sj, si))
    return -(part->upper.size() - part->lower.size() - size_shift);
  return std::nullopt;
}

namespace {

int mod(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

DihedralElement::DihedralElement(int n, int shift, bool reflected)
    : n_(n), shift_(0), reflected_(reflected) {
  require(n >= 1, "dihedral group needs n >= 1");
  shift_ = mod(shift, n);
}

std::vector<DihedralElement> DihedralElement::all(int n) {
  std::vector<DihedralElement> out;
  for (int refl = 0; refl < 2; ++refl)
    for (int r = 0; r < n; ++r) out.emplace_back(n, r, refl == 1);
  return out;
}

int DihedralElement::apply(int index) const {
  require(index >= 1 && index <= n_, "index outside [1..n]");
  const int y = index - 1;
  return mod(shift_ + (reflected_ ? -y : y), n_) + 1;
}

KSubset DihedralElement::apply(const KSubset& s) const {
  require(s.n() == n_, "dihedral element and subset over different n");
  Mask out = 0;
  for (int i : s.indices()) out |= Mask{1} << (apply(i) - 1);
  return KSubset::from_mask(n_, out);
}

DihedralElement DihedralElement::inverse() const {
  return {n_, reflected_ ? shift_ : -shift_, reflected_};
}

DihedralElement DihedralElement::operator*(const DihedralElement& other) const {
  require(n_ == other.n_, "composing dihedral elements of different n");
  return {n_, shift_ + (reflected_ ? -other.shift_ : other.shift_),
          reflected_ != other.reflected_};
}

std::string DihedralElement::to_string() const {
  // (a, reflected) = rho^(a-1) sigma ; (a, rotation) = rho^a.
  if (!reflected_) return "rho^" + std::to_string(shift_);
  return "rho^" + std::to_string(mod(shift_ - 1, n_)) + "*sigma";
}

int diameter(const KSubset& s) {
  require(!s.empty(), "diameter of the empty set");
  const auto idx = s.indices();
  const int n = s.n();
  int widest_gap = idx.front() + n - idx.back();
  for (std::size_t p = 1; p < idx.size(); ++p)
    widest_gap = std::max(widest_gap, idx[p] - idx[p - 1]);
  return n - widest_gap + 1;
}

bool is_boundary(const KSubset& s) { return diameter(s) == s.size(); }

}  // namespace wsq
