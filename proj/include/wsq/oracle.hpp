#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsq/combinatorics.hpp"
#include "wsq/ncpoly.hpp"

namespace wsq {

/// Number of inversions of a permutation given as a sequence.
int inversion_count(const std::vector<int>& perm);

/// Delta_{A,B} = sum over sigma of (-q)^(-len(sigma)) x_{a1,b_sigma(1)} ... x_{al,b_sigma(l)}.
NCPoly quantum_minor(const MinorIndex& mi);

/// c with R*P = q^c P*R, or empty if the two products are not proportional
/// by a power of q.
std::optional<int> quasi_commutation_exponent(const NCPoly& p, const NCPoly& r);

/// Quantum Pluecker coordinate Delta^K realized as the maximal quantum minor
/// on rows [1..k] and columns K of a k x n quantum matrix.
NCPoly plucker_realize(const KSubset& columns, int k);

/// Checks sum_{i in I-J} (-q)^(inv(i,I)-inv(i,J)) Delta^{I-i} Delta^{J+i} == 0
/// for a (k+1)-subset I and a (k-1)-subset J of [1..n].
bool verify_qplucker_relation(const KSubset& big, const KSubset& small, int k);

/// Checks Delta^{Pij} Delta^{Pst} == q Delta^{Pis} Delta^{Pjt} + q^-1 Delta^{Pit} Delta^{Psj}
/// for i < s < j < t outside the (k-2)-subset P.
bool verify_quantum_short_plucker(const KSubset& base, int i, int s, int j, int t, int k);

struct EmbeddingReport {
  bool relations_hold = false;  // images of generators satisfy the FRT relations
  bool minor_matches = false;   // phi(Delta_{I,J}) == q^C(l,2) Delta^(l-1) Delta^{S(I,J)}
  std::string detail;
  bool ok() const { return relations_hold && minor_matches; }
};

/// Image of x_{i,j} under x_{i,j} -> Delta^{S({i},{j})} in C_q[Mat_{k x (k+m)}].
NCPoly embedding_image(int k, int m, int row, int col);

/// Symbolic check of the Stieffel-Pluecker embedding for one minor.
EmbeddingReport verify_embedding(const MinorIndex& mi, int max_ground = 8);

}  // namespace wsq
