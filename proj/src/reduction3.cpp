#include "wsq/reduction3.hpp"

#include "wsq/errors.hpp"

namespace wsq {

namespace {

void require_full_k3(const WSCollection& c) {
  require(c.k() == 3, "expected a collection of 3-subsets");
  require(c.n() >= 4, "expected n >= 4");
  require(static_cast<int>(c.size()) == full_size(3, c.n()) && validate(c).ok(),
          "expected a maximal weakly separated collection");
}

}  // namespace

WSCollection project(const WSCollection& c) {
  require_full_k3(c);
  const int n = c.n();
  require(c.contains(KSubset(n, {1, n - 2, n - 1})), "collection lacks {1,n-2,n-1}");
  std::vector<KSubset> sets;
  for (const auto& s : c.sets()) {
    KSubset img = s;
    if (s.contains(n)) {
      if (s.contains(n - 1)) continue;
      img = s.without(n).with(n - 1);
    }
    sets.push_back(KSubset::from_mask(n - 1, img.mask()));
  }
  WSCollection out(3, n - 1, std::move(sets));
  ensure(out.size() + 3 == c.size(), "projection did not lose exactly three members");
  return out;
}

std::set<int> f_set(const WSCollection& c) {
  require_full_k3(c);
  const int top = c.n();
  std::vector<KSubset> through_top;
  for (const auto& s : c.sets())
    if (s.contains(top) && !s.contains(1)) through_top.push_back(s.without(top));
  std::set<int> out;
  for (int b = 2; b <= top - 1; ++b) {
    if (!c.contains(KSubset(top, {1, b, top}))) continue;
    const KSubset one_b(top, {1, b});
    bool ok = true;
    for (const auto& st : through_top) {
      if (!precedes(one_b - st, st - one_b)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(b);
  }
  return out;
}

WSCollection lift(const WSCollection& b_collection, int b) {
  const auto allowed = f_set(b_collection);
  require(allowed.count(b) != 0, "index " + std::to_string(b) + " is not in F");
  const int n = b_collection.n() + 1;
  const KSubset pinch(n, {1, b, n - 1});
  const KSubset one_b(n, {1, b});
  std::vector<KSubset> sets;
  for (const auto& small : b_collection.sets()) {
    KSubset s = KSubset::from_mask(n, small.mask());
    if (s.contains(n - 1) && precedes(s - pinch, one_b - s)) s = s.without(n - 1).with(n);
    sets.push_back(s);
  }
  sets.push_back(pinch);
  sets.push_back(KSubset(n, {1, n - 1, n}));
  sets.push_back(KSubset(n, {n - 2, n - 1, n}));
  WSCollection out(3, n, std::move(sets));
  ensure(out.size() == b_collection.size() + 3, "lift did not add exactly three members");
  const auto report = validate(out);
  ensure(report.ok(), "lift is not weakly separated: " + report.to_string());
  return out;
}

std::vector<WSCollection> generate_w3(int n) {
  require(n >= 3, "generate_w3 needs n >= 3");
  if (n == 3) return {base_collection(3, 3)};
  std::set<WSCollection> level{base_collection(3, 4)};
  for (int size = 5; size <= n; ++size) {
    std::set<WSCollection> next;
    const auto group = DihedralElement::all(size);
    for (const auto& b_coll : level) {
      for (int b : f_set(b_coll)) {
        const auto lifted = lift(b_coll, b);
        if (next.count(lifted)) continue;
        for (const auto& g : group) next.insert(lifted.translated(g));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace wsq
