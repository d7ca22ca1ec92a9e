#include "wsq/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "wsq/errors.hpp"

namespace wsq {

namespace {

// (-q)^e as a Laurent monomial.
Laurent minus_q_power(int e) { return Laurent::monomial(e % 2 == 0 ? 1 : -1, e); }

int inv(int i, const KSubset& x) {
  int count = 0;
  for (int v : x.indices())
    if (i > v) ++count;
  return count;
}

// Sum over permutations of (-q)^(-len) * f(row_r, col_sigma(r)) products,
// where f maps a generator position to a polynomial.
template <typename Image>
NCPoly expand_minor(const MinorIndex& mi, int k, int m, Image image) {
  const auto rows = mi.rows.indices();
  const auto cols = mi.cols.indices();
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  NCPoly out(k, m);
  do {
    NCPoly term = NCPoly::scalar(k, m, minus_q_power(-inversion_count(perm)));
    for (std::size_t r = 0; r < rows.size(); ++r)
      term = term * image(rows[r], cols[static_cast<std::size_t>(perm[r])]);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

int inversion_count(const std::vector<int>& perm) {
  int count = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++count;
  return count;
}

NCPoly quantum_minor(const MinorIndex& mi) {
  const int k = mi.k();
  const int m = mi.m();
  // Defining monomials are ordered by row, hence already normal.
  const auto rows = mi.rows.indices();
  const auto cols = mi.cols.indices();
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  NCPoly out(k, m);
  do {
    Word w;
    for (std::size_t r = 0; r < rows.size(); ++r)
      w.push_back(Generator{rows[r], cols[static_cast<std::size_t>(perm[r])]});
    out.add_normal_term(w, minus_q_power(-inversion_count(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::optional<int> quasi_commutation_exponent(const NCPoly& p, const NCPoly& r) {
  require(!p.is_zero() && !r.is_zero(), "quasi-commutation of a zero element");
  const NCPoly rp = r * p;
  const NCPoly pr = p * r;
  if (rp.terms().size() != pr.terms().size()) return std::nullopt;
  std::optional<int> c;
  auto it = pr.terms().begin();
  for (const auto& [w, coeff] : rp.terms()) {
    if (it->first != w) return std::nullopt;
    auto e = coeff.ratio_exponent(it->second);
    if (!e || (c && *c != *e)) return std::nullopt;
    c = e;
    ++it;
  }
  return c;
}

NCPoly plucker_realize(const KSubset& columns, int k) {
  require(columns.size() == k, "Pluecker coordinate needs a " + std::to_string(k) +
                                   "-subset, got {" + columns.to_string() + "}");
  return quantum_minor(MinorIndex::make(KSubset::interval(k, 1, k), columns));
}

bool verify_qplucker_relation(const KSubset& big, const KSubset& small, int k) {
  require(big.size() == k + 1, "first index set must have k+1 elements");
  require(small.size() == k - 1, "second index set must have k-1 elements");
  require(big.n() == small.n(), "index sets over different ground sets");
  const int n = big.n();
  NCPoly sum(k, n);
  for (int i : (big - small).indices()) {
    const Laurent coeff = minus_q_power(inv(i, big) - inv(i, small));
    sum += (plucker_realize(big.without(i), k) * plucker_realize(small.with(i), k))
               .scaled(coeff);
  }
  return sum.is_zero();
}

bool verify_quantum_short_plucker(const KSubset& base, int i, int s, int j, int t, int k) {
  require(base.size() == k - 2, "base set must have k-2 elements");
  require(i < s && s < j && j < t, "need i < s < j < t");
  for (int x : {i, s, j, t}) require(!base.contains(x), "quadruple meets the base set");
  auto d = [&](int a, int b) { return plucker_realize(base.with(a).with(b), k); };
  const NCPoly lhs = d(i, j) * d(s, t);
  const NCPoly rhs = (d(i, s) * d(j, t)).scaled(Laurent::q_power(1)) +
                     (d(i, t) * d(s, j)).scaled(Laurent::q_power(-1));
  return lhs == rhs;
}

NCPoly embedding_image(int k, int m, int row, int col) {
  const auto mi = MinorIndex::make(k, m, {row}, {col});
  return plucker_realize(stieffel_subset(mi), k);
}

EmbeddingReport verify_embedding(const MinorIndex& mi, int max_ground) {
  const int k = mi.k();
  const int m = mi.m();
  require(k + m <= max_ground, "embedding check limited to k+m <= " +
                                   std::to_string(max_ground));
  const int n = k + m;
  std::map<Generator, NCPoly> images;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= m; ++j) images.emplace(Generator{i, j}, embedding_image(k, m, i, j));
  auto phi = [&](int i, int j) -> const NCPoly& { return images.at(Generator{i, j}); };

  EmbeddingReport report;
  report.relations_hold = true;
  const Laurent cross = Laurent::q_minus_q_inverse();
  for (const auto& [lo, img_lo] : images) {
    for (const auto& [hi, img_hi] : images) {
      if (!(lo < hi)) continue;
      const NCPoly lhs = img_hi * img_lo;
      NCPoly rhs = img_lo * img_hi;
      if (hi.row == lo.row || hi.col == lo.col) {
        rhs = rhs.scaled(Laurent::q_power(1));
      } else if (hi.col > lo.col) {
        rhs += (phi(lo.row, hi.col) * phi(hi.row, lo.col)).scaled(cross);
      }
      if (lhs != rhs) {
        report.relations_hold = false;
        report.detail = "relation fails for x[" + std::to_string(hi.row) + "," +
                        std::to_string(hi.col) + "] x[" + std::to_string(lo.row) + "," +
                        std::to_string(lo.col) + "]";
      }
    }
  }

  const NCPoly image = expand_minor(mi, k, n, phi);
  const int l = mi.size();
  const NCPoly delta = plucker_realize(KSubset::interval(n, 1, k), k);
  NCPoly expected = NCPoly::scalar(k, n, Laurent::q_power(l * (l - 1) / 2));
  for (int p = 0; p < l - 1; ++p) expected = expected * delta;
  expected = expected * plucker_realize(stieffel_subset(mi), k);
  report.minor_matches = image == expected;
  if (!report.minor_matches && report.detail.empty())
    report.detail = "minor image differs from q^C(l,2) Delta^(l-1) Delta^S";
  return report;
}

}  // namespace wsq
