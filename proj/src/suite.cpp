#include "wsq/suite.hpp"

#include "wsq/errors.hpp"
#include "wsq/oracle.hpp"

namespace wsq {

namespace {

constexpr std::size_t kMaxReported = 10;

void record(CheckResult& r, bool ok, const std::string& what) {
  ++r.total;
  if (ok) ++r.passed;
  else if (r.failures.size() < kMaxReported) r.failures.push_back(what);
}

std::string show(const std::optional<int>& c) { return c ? std::to_string(*c) : "none"; }

std::string show(const MinorIndex& mi) {
  return "(" + mi.rows.to_string() + "|" + mi.cols.to_string() + ")";
}

CheckResult minor_pairs(int k, int m, bool mixed_sizes_only) {
  CheckResult r{"minor exponents k=" + std::to_string(k) + " m=" + std::to_string(m) +
                    (mixed_sizes_only ? " (1x1 vs 2x2)" : ""),
                0, 0, {}};
  const auto minors = all_minors(k, m);
  std::vector<NCPoly> polys;
  for (const auto& mi : minors) polys.push_back(quantum_minor(mi));
  for (std::size_t a = 0; a < minors.size(); ++a) {
    for (std::size_t b = 0; b < minors.size(); ++b) {
      const int sa = minors[a].size();
      const int sb = minors[b].size();
      if (mixed_sizes_only && !((sa == 1 && sb == 2) || (sa == 2 && sb == 1))) continue;
      const auto predicted = minor_exponent(minors[a], minors[b]);
      const auto observed = quasi_commutation_exponent(polys[a], polys[b]);
      record(r, predicted == observed,
             show(minors[a]) + " " + show(minors[b]) + ": formula " + show(predicted) +
                 ", oracle " + show(observed));
    }
  }
  return r;
}

CheckResult plucker_pairs(int k, int n) {
  CheckResult r{"pluecker exponents k=" + std::to_string(k) + " n=" + std::to_string(n), 0, 0, {}};
  const auto subsets = all_k_subsets(n, k);
  std::vector<NCPoly> polys;
  for (const auto& s : subsets) polys.push_back(plucker_realize(s, k));
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = 0; b < subsets.size(); ++b) {
      const auto predicted = plucker_exponent(subsets[a], subsets[b]);
      const auto observed = quasi_commutation_exponent(polys[a], polys[b]);
      record(r, predicted == observed,
             subsets[a].to_string() + " " + subsets[b].to_string() + ": formula " +
                 show(predicted) + ", oracle " + show(observed));
    }
  }
  return r;
}

CheckResult qplucker_relations(int k, int n) {
  CheckResult r{"quantum pluecker relations k=" + std::to_string(k) + " n=" + std::to_string(n),
                0, 0, {}};
  for (const auto& big : all_k_subsets(n, k + 1))
    for (const auto& small : all_k_subsets(n, k - 1))
      record(r, verify_qplucker_relation(big, small, k), big.to_string() + " / " + small.to_string());
  return r;
}

CheckResult short_plucker(int k, int n) {
  CheckResult r{"quantum short pluecker k=" + std::to_string(k) + " n=" + std::to_string(n), 0, 0,
                {}};
  for (const auto& base : all_k_subsets(n, k - 2)) {
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x)
      if (!base.contains(x)) rest.push_back(x);
    for (const auto& quad : all_k_subsets(static_cast<int>(rest.size()), 4)) {
      const auto q = quad.indices();
      const int i = rest[static_cast<std::size_t>(q[0] - 1)];
      const int s = rest[static_cast<std::size_t>(q[1] - 1)];
      const int j = rest[static_cast<std::size_t>(q[2] - 1)];
      const int t = rest[static_cast<std::size_t>(q[3] - 1)];
      record(r, verify_quantum_short_plucker(base, i, s, j, t, k),
             "P=" + base.to_string() + " i,s,j,t=" + std::to_string(i) + "," + std::to_string(s) +
                 "," + std::to_string(j) + "," + std::to_string(t));
    }
  }
  return r;
}

CheckResult embeddings(int k, int m) {
  CheckResult r{"embedding k=" + std::to_string(k) + " m=" + std::to_string(m), 0, 0, {}};
  for (const auto& mi : all_minors(k, m)) {
    const auto rep = verify_embedding(mi);
    record(r, rep.ok(), show(mi) + ": " + rep.detail);
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_oracle_suite(std::string_view suite) {
  require(suite == "small", "unknown oracle suite '" + std::string(suite) + "' (known: small)");
  std::vector<CheckResult> out;
  out.push_back(minor_pairs(2, 2, false));
  out.push_back(minor_pairs(2, 3, true));
  for (int n : {4, 5}) out.push_back(plucker_pairs(2, n));
  for (int n : {4, 5}) out.push_back(qplucker_relations(2, n));
  for (int n : {4, 5}) out.push_back(short_plucker(2, n));
  out.push_back(embeddings(2, 2));
  return out;
}

}  // namespace wsq
