#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wsq/collection.hpp"
#include "wsq/combinatorics.hpp"

namespace wsq {

/// Simple reflection of S_m (black, index 1..m-1) or of S_k (red, 1..k-1).
struct Letter {
  bool red = false;
  int index = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A shuffle of a word in the black letters with a word in the red letters,
/// read as an element of S_k x S_m.
struct ReducedWord {
  int k = 1;
  int m = 1;
  std::vector<Letter> letters;

  /// Whitespace separated tokens, red letters suffixed with "r": "2 1r 1 2 3 2r".
  static ReducedWord parse(int k, int m, std::string_view text);
  std::string to_string() const;
};

/// Both color subwords are reduced words for the longest elements.
bool validate_word(const ReducedWord& w);
/// Valid, and the black subword uses indices k+1..m-1 exactly C(m-k,2) times.
bool is_optimal(const ReducedWord& w);

/// A chamber of the double wiring arrangement in one of the first k strips.
struct Chamber {
  int level = 1;
  int start = 0;  // gap before letter `start`
  int end = 0;    // gap before letter `end` (== length at the right end)
  KSubset red;    // I(C), red wire labels in slots 1..level, ground [1..k]
  KSubset black;  // J(C), black wire labels in slots 1..level, ground [1..m]
};

/// Chambers of levels 1..k ordered by (level, start). Black wires carry labels
/// 1..m bottom-up at the left end, red wires 1..k bottom-up at the right end.
std::vector<Chamber> chambers(const ReducedWord& w);

/// {S(I(C), J(C))} u {[1..k]}, a member of W(k, k+m) of size km+1.
WSCollection word_collection(const ReducedWord& w);

/// Either (A-I < I-A and J-B < B-J) or (I-A < A-I and B-J < J-B).
bool chamber_minors_compatible(const MinorIndex& p, const MinorIndex& r);

/// All reduced words of the longest element of S_m, in lexicographic order.
std::vector<std::vector<int>> longest_element_words(int m);

/// Calls `visit` on every reduced shuffle for (w0^(k), w0^(m)); optionally only
/// the optimal ones.
void for_each_reduced_shuffle(int k, int m, bool optimal_only,
                              const std::function<void(const ReducedWord&)>& visit);

/// D_n closure of all word collections for (k, m), canonically sorted.
std::vector<WSCollection> wiring_collections_up_to_dihedral(int k, int m);

/// k = 2 criterion: some external edge e such that no chord of c separates e
/// from another external edge while avoiding both.
bool is_wiring_parametrizable(const WSCollection& c);

}  // namespace wsq
