#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsq/collection.hpp"

namespace wsq {

using Rational = mpq_class;

/// k x n matrix whose row span is a point of the Grassmannian G(k,n).
template <typename Scalar>
struct GrassmannPoint {
  int k = 0;
  int n = 0;
  std::vector<std::vector<Scalar>> rows;
};

/// Rows (x_1^(i-1), ..., x_n^(i-1)) for i = 1..k; every maximal minor is a
/// Vandermonde determinant, positive for 0 < x_1 < ... < x_n.
GrassmannPoint<Rational> vandermonde_point(const std::vector<Rational>& nodes, int k);

/// Maximal minor on the columns of `cols`.
Rational plucker_coordinate(const GrassmannPoint<Rational>& p, const KSubset& cols);
double plucker_coordinate(const GrassmannPoint<double>& p, const KSubset& cols);

GrassmannPoint<double> to_double(const GrassmannPoint<Rational>& p);

template <typename Scalar>
using PluckerVector = std::map<KSubset, Scalar>;

/// All C(n,k) Pluecker coordinates of a point.
template <typename Scalar>
PluckerVector<Scalar> all_pluckers(const GrassmannPoint<Scalar>& p);

template <typename Scalar>
struct Propagation {
  PluckerVector<Scalar> values;  // every coordinate reached, including the input
  std::size_t rederivations = 0; // values recomputed along a second path and compared
  std::optional<std::string> failure;
  bool ok() const { return !failure.has_value(); }
};

/// Extends values given on a maximal collection (k in {2,3}) to every
/// Pluecker coordinate by walking the move graph and using
/// Delta^{Pij} Delta^{Pst} = Delta^{Pis} Delta^{Pjt} + Delta^{Pit} Delta^{Psj}.
/// Values derived twice must agree exactly.
/// `graph`, when given, must be the move graph containing c.
Propagation<Rational> propagate(const WSCollection& c, const PluckerVector<Rational>& vals,
                                const FlipGraph* graph = nullptr);

/// Floating-point propagation; re-derived values must agree within
/// `relative_tolerance`.
Propagation<double> propagate(const WSCollection& c, const PluckerVector<double>& vals,
                              const FlipGraph* graph = nullptr,
                              double relative_tolerance = 1e-9);

enum class Verdict { Positive, NotDetermined };

struct PositivityResult {
  Verdict verdict = Verdict::NotDetermined;
  PluckerVector<Rational> values;
  std::string witness;  // why the verdict is not POSITIVE
};

/// POSITIVE when propagation succeeds and every reconstructed coordinate is
/// positive.
PositivityResult positivity_test(const WSCollection& c, const PluckerVector<Rational>& vals,
                                 const FlipGraph* graph = nullptr);

}  // namespace wsq
