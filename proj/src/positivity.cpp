#include "wsq/positivity.hpp"

#include <cmath>
#include <deque>

#include "wsq/errors.hpp"

namespace wsq {

namespace {

bool is_zero(const Rational& x) { return sgn(x) == 0; }
bool is_zero(double x) { return x == 0.0; }
bool is_positive(const Rational& x) { return sgn(x) > 0; }
bool is_positive(double x) { return x > 0.0; }
std::string show(const Rational& x) { return x.get_str(); }
std::string show(double x) { return std::to_string(x); }

// Gaussian elimination with row pivoting on the chosen columns. Exact for
// rationals; partial pivoting keeps the double path well behaved.
template <typename Scalar>
Scalar determinant(const GrassmannPoint<Scalar>& p, const KSubset& cols) {
  require(cols.n() == p.n && cols.size() == p.k, "columns must form a k-subset of [1..n]");
  const auto idx = cols.indices();
  const auto k = static_cast<std::size_t>(p.k);
  std::vector<std::vector<Scalar>> a(k, std::vector<Scalar>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) a[r][c] = p.rows[r][static_cast<std::size_t>(idx[c] - 1)];
  Scalar det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < k; ++r) {
      if constexpr (std::is_same_v<Scalar, double>) {
        if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
      } else {
        if (is_zero(a[pivot][c]) && !is_zero(a[r][c])) pivot = r;
      }
    }
    if (is_zero(a[pivot][c])) return Scalar(0);
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      const Scalar f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

template <typename Scalar>
bool agree(const Scalar& a, const Scalar& b, double tol) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
  } else {
    (void)tol;
    return a == b;
  }
}

template <typename Scalar>
Propagation<Scalar> propagate_impl(const WSCollection& c, const PluckerVector<Scalar>& vals,
                                   const FlipGraph* graph, double tol) {
  require(c.k() == 2 || c.k() == 3,
          "propagation is only supported for k = 2 and k = 3 (k = " + std::to_string(c.k()) + ")");
  require(is_maximal(c), "propagation needs a maximal weakly separated collection");
  for (const auto& s : c.sets()) {
    const auto it = vals.find(s);
    require(it != vals.end(), "no value given for " + s.to_string());
    require(is_positive(it->second),
            "value for " + s.to_string() + " is not positive: " + show(it->second));
  }
  for (const auto& [s, v] : vals)
    require(c.contains(s), "value given for " + s.to_string() + " which is not in the collection");

  FlipGraph local;
  if (graph == nullptr) {
    local = build_flip_graph(c);
    graph = &local;
  }
  const auto start = graph->index_of(c);
  require(start.has_value(), "collection is not a node of the supplied move graph");

  Propagation<Scalar> out;
  out.values = vals;
  std::vector<bool> seen(graph->nodes.size(), false);
  std::deque<std::size_t> queue{*start};
  seen[*start] = true;
  while (!queue.empty() && out.ok()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& [v, mv] : graph->edges[u]) {
      // Delta^{Pij} Delta^{Pst} = Delta^{Pis} Delta^{Pjt} + Delta^{Pit} Delta^{Psj}
      const KSubset& p = mv.base;
      const Scalar& is = out.values.at(p.with(mv.i).with(mv.s));
      const Scalar& jt = out.values.at(p.with(mv.j).with(mv.t));
      const Scalar& it = out.values.at(p.with(mv.i).with(mv.t));
      const Scalar& sj = out.values.at(p.with(mv.s).with(mv.j));
      const KSubset gone = mv.removed();
      const KSubset fresh = mv.added();
      const Scalar& denom = out.values.at(gone);
      if (is_zero(denom)) {
        out.failure = "division by zero at " + gone.to_string() + " during " + mv.to_string();
        break;
      }
      const Scalar value = (is * jt + it * sj) / denom;
      const auto known = out.values.find(fresh);
      if (known == out.values.end()) {
        out.values.emplace(fresh, value);
      } else {
        ++out.rederivations;
        if (!agree(known->second, value, tol)) {
          out.failure = "inconsistent values for " + fresh.to_string() + ": " +
                        show(known->second) + " vs " + show(value) + " via " + mv.to_string();
          break;
        }
      }
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return out;
}

}  // namespace

GrassmannPoint<Rational> vandermonde_point(const std::vector<Rational>& nodes, int k) {
  const int n = static_cast<int>(nodes.size());
  require(k >= 1 && k <= n, "vandermonde_point needs 1 <= k <= n");
  require(n <= kMaxGround, "too many nodes");
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    require(sgn(nodes[j]) > 0, "nodes must be positive");
    require(j == 0 || nodes[j - 1] < nodes[j], "nodes must be distinct and increasing");
  }
  GrassmannPoint<Rational> p{k, n, {}};
  Rational one(1);
  p.rows.assign(static_cast<std::size_t>(k), std::vector<Rational>(nodes.size()));
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    Rational power = one;
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
      p.rows[i][j] = power;
      power *= nodes[j];
    }
  }
  return p;
}

Rational plucker_coordinate(const GrassmannPoint<Rational>& p, const KSubset& cols) {
  return determinant(p, cols);
}

double plucker_coordinate(const GrassmannPoint<double>& p, const KSubset& cols) {
  return determinant(p, cols);
}

GrassmannPoint<double> to_double(const GrassmannPoint<Rational>& p) {
  GrassmannPoint<double> out{p.k, p.n, {}};
  for (const auto& row : p.rows) {
    auto& r = out.rows.emplace_back();
    for (const auto& x : row) r.push_back(x.get_d());
  }
  return out;
}

template <typename Scalar>
PluckerVector<Scalar> all_pluckers(const GrassmannPoint<Scalar>& p) {
  PluckerVector<Scalar> out;
  for (const auto& s : all_k_subsets(p.n, p.k)) out.emplace(s, plucker_coordinate(p, s));
  return out;
}

template PluckerVector<Rational> all_pluckers(const GrassmannPoint<Rational>&);
template PluckerVector<double> all_pluckers(const GrassmannPoint<double>&);

Propagation<Rational> propagate(const WSCollection& c, const PluckerVector<Rational>& vals,
                                const FlipGraph* graph) {
  return propagate_impl(c, vals, graph, 0.0);
}

Propagation<double> propagate(const WSCollection& c, const PluckerVector<double>& vals,
                              const FlipGraph* graph, double relative_tolerance) {
  require(relative_tolerance >= 0.0, "tolerance must be non-negative");
  return propagate_impl(c, vals, graph, relative_tolerance);
}

PositivityResult positivity_test(const WSCollection& c, const PluckerVector<Rational>& vals,
                                 const FlipGraph* graph) {
  auto prop = propagate(c, vals, graph);
  PositivityResult out;
  out.values = std::move(prop.values);
  if (!prop.ok()) {
    out.witness = *prop.failure;
    return out;
  }
  const auto expected = static_cast<std::size_t>(all_k_subsets(c.n(), c.k()).size());
  if (out.values.size() != expected) {
    out.witness = "only " + std::to_string(out.values.size()) + " of " +
                  std::to_string(expected) + " coordinates were reached";
    return out;
  }
  for (const auto& [s, v] : out.values) {
    if (sgn(v) <= 0) {
      out.witness = "coordinate " + s.to_string() + " = " + v.get_str() + " is not positive";
      return out;
    }
  }
  out.verdict = Verdict::Positive;
  return out;
}

}  // namespace wsq
