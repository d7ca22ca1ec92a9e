#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wsq/combinatorics.hpp"
#include "wsq/ksubset.hpp"

namespace wsq {

/// A set of k-subsets of [1..n], kept sorted and deduplicated so equality and
/// hashing are structural.
class WSCollection {
 public:
  WSCollection(int k, int n, std::vector<KSubset> sets = {});

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<KSubset>& sets() const { return sets_; }
  bool contains(const KSubset& s) const;

  WSCollection with(const KSubset& s) const;
  WSCollection without(const KSubset& s) const;
  WSCollection translated(const DihedralElement& g) const;
  /// The sets that are not cyclic intervals.
  std::vector<KSubset> non_boundary() const;

  friend bool operator==(const WSCollection&, const WSCollection&) = default;
  friend std::strong_ordering operator<=>(const WSCollection& a, const WSCollection& b);

 private:
  int k_;
  int n_;
  std::vector<KSubset> sets_;
};

struct WSCollectionHash {
  std::size_t operator()(const WSCollection& c) const noexcept;
};

/// k(n-k)+1.
int full_size(int k, int n);

struct ValidationReport {
  std::vector<std::pair<KSubset, KSubset>> crossing_pairs;
  bool ok() const { return crossing_pairs.empty(); }
  std::string to_string() const;
};

/// Lists every pair of members that fails weak separation.
ValidationReport validate(const WSCollection& c);

/// Pairwise weakly separated and no further k-subset can be added.
bool is_maximal(const WSCollection& c);

/// Greedy completion adding k-subsets in lexicographic order.
WSCollection complete_to_maximal(const WSCollection& c);
/// Greedy completion adding candidates in the given order, then in lex order.
WSCollection complete_to_maximal(const WSCollection& c, std::span<const KSubset> order);
/// Greedy completion over a uniformly shuffled candidate order.
WSCollection random_maximal(int k, int n, std::mt19937_64& rng);

/// The base collection A_n: the boundary k-subsets together with
/// [1..i] u [j..k+j-i-1] for 1 <= i < k and i+1 < j <= n+i-k.
WSCollection base_collection(int k, int n);

/// A (2,4)-move: for a (k-2)-subset `base` and i < s < j < t outside it, the
/// exchange of base+{i,j} with base+{s,t} when the four sides base+{i,s},
/// base+{s,j}, base+{j,t}, base+{i,t} are present.
struct MoveSpec {
  KSubset base;
  int i = 0;
  int s = 0;
  int j = 0;
  int t = 0;
  bool removes_ij = true;

  KSubset diagonal_ij() const { return base.with(i).with(j); }
  KSubset diagonal_st() const { return base.with(s).with(t); }
  KSubset removed() const { return removes_ij ? diagonal_ij() : diagonal_st(); }
  KSubset added() const { return removes_ij ? diagonal_st() : diagonal_ij(); }
  std::array<KSubset, 4> sides() const;
  MoveSpec reversed() const;
  MoveSpec translated(const DihedralElement& g) const;
  /// Same move viewed over a larger ground set [1..n].
  MoveSpec regrounded(int n) const;
  std::string to_string() const;

  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

/// Every move available in c, ordered by (removed set, added set).
std::vector<MoveSpec> find_moves(const WSCollection& c);

/// Applies a move; throws PreconditionError if sides or the removed diagonal
/// are missing from c (or the added diagonal is already there).
WSCollection apply_move(const WSCollection& c, const MoveSpec& mv);

/// The connected component of `seed` in the move graph, with its edges.
struct FlipGraph {
  std::vector<WSCollection> nodes;  // canonical (sorted) order
  std::vector<std::vector<std::pair<std::size_t, MoveSpec>>> edges;

  std::optional<std::size_t> index_of(const WSCollection& c) const;
  bool connected() const;
};

/// BFS closure under moves. `jobs` worker threads expand each frontier; the
/// result is identical for every value of `jobs`.
FlipGraph build_flip_graph(const WSCollection& seed, int jobs = 1);

/// Vertex set of build_flip_graph, canonically sorted.
std::vector<WSCollection> enumerate_component(const WSCollection& seed, int jobs = 1);

/// Partition into D_n orbits; each orbit sorted, orbits ordered by their
/// smallest member.
std::vector<std::vector<WSCollection>> dihedral_orbits(const std::vector<WSCollection>& cs);

/// Number of non-boundary members containing n.
int height(const WSCollection& c);

/// A certified walk of (2,4)-moves from a maximal collection to
/// base_collection(k, n).
struct BaseReduction {
  /// Dihedral element g with g*c containing {1,n-2,n-1} that the k=3
  /// construction starts from (identity for k = 2).
  DihedralElement witness;
  /// Moves applied to c itself, in order; the last one lands on A_n.
  std::vector<MoveSpec> moves;
};

/// k = 2: triangulation flips towards the fan at vertex 1.
/// k = 3: dihedral normalization, height reduction through pinch points,
/// recursion on n-1, and the explicit rho/sigma walks that bring a dihedral
/// translate of A_n back to A_n.
BaseReduction reduce_to_base(const WSCollection& c);

/// Moves transforming g*A_n into A_n (k = 3).
std::vector<MoveSpec> translate_back_to_base(const DihedralElement& g);

/// Replays moves from c, validating every intermediate collection; returns
/// the final collection or throws InvariantError.
WSCollection replay_moves(const WSCollection& c, std::span<const MoveSpec> moves,
                          bool check_maximal = false);

/// The pinch point of a k = 3 collection containing {1,n-2,n-1}: the unique b
/// with {1,b,n-1} and {1,b,n} both present.
int pinch_point(const WSCollection& c);

}  // namespace wsq
