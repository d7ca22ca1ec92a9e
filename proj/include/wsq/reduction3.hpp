#pragma once

#include <set>
#include <vector>

#include "wsq/collection.hpp"

namespace wsq {

// Recursive structure of W(3,n): a collection containing {1,n-2,n-1} is
// determined by its projection to [1..n-1] together with its pinch point.

/// I' = I - {n} + {n-1} if n in I and n-1 not in I; dropped if both are in I;
/// I otherwise. The result lives in W(3,n-1) and has three fewer members.
WSCollection project(const WSCollection& c);

/// Indices b in [2..top-1] with {1,b,top} in c such that
/// {1,b} - {s,t} < {s,t} - {1,b} for every {s,t,top} in c with 1 < s < t,
/// where top = c.n().
std::set<int> f_set(const WSCollection& c);

/// Lift of (B, b) to W(3, B.n()+1): I_b = I - {n-1} + {n} when n-1 is in I and
/// I - {1,b,n-1} < {1,b} - I, plus {1,b,n-1}, {1,n-1,n}, {n-2,n-1,n}.
WSCollection lift(const WSCollection& b_collection, int b);

/// All of W(3,n), built from W(3,4) by lifting every (B, b) and closing under
/// the dihedral group at each size.
std::vector<WSCollection> generate_w3(int n);

}  // namespace wsq
