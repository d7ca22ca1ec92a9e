#include "wsq/collection.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "wsq/errors.hpp"

namespace wsq {

// ---------------------------------------------------------------------------
// WSCollection

WSCollection::WSCollection(int k, int n, std::vector<KSubset> sets)
    : k_(k), n_(n), sets_(std::move(sets)) {
  require(n >= 1 && n <= kMaxGround, "ground set size out of range");
  require(k >= 0 && k <= n, "k must lie in [0..n]");
  for (const auto& s : sets_) {
    require(s.n() == n, "member {" + s.to_string() + "} is not a subset of [1.." +
                            std::to_string(n) + "]");
    require(s.size() == k, "member {" + s.to_string() + "} does not have " +
                               std::to_string(k) + " elements");
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool WSCollection::contains(const KSubset& s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

WSCollection WSCollection::with(const KSubset& s) const {
  auto sets = sets_;
  sets.push_back(s);
  return WSCollection(k_, n_, std::move(sets));
}

WSCollection WSCollection::without(const KSubset& s) const {
  auto sets = sets_;
  sets.erase(std::remove(sets.begin(), sets.end(), s), sets.end());
  return WSCollection(k_, n_, std::move(sets));
}

WSCollection WSCollection::translated(const DihedralElement& g) const {
  require(g.n() == n_, "dihedral element over a different n");
  std::vector<KSubset> sets;
  sets.reserve(sets_.size());
  for (const auto& s : sets_) sets.push_back(g.apply(s));
  return WSCollection(k_, n_, std::move(sets));
}

std::vector<KSubset> WSCollection::non_boundary() const {
  std::vector<KSubset> out;
  for (const auto& s : sets_)
    if (!is_boundary(s)) out.push_back(s);
  return out;
}

std::strong_ordering operator<=>(const WSCollection& a, const WSCollection& b) {
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.sets_.begin(), a.sets_.end(),
                                                b.sets_.begin(), b.sets_.end());
}

std::size_t WSCollectionHash::operator()(const WSCollection& c) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(c.n() * 131 + c.k());
  for (const auto& s : c.sets()) {
    h ^= s.mask();
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

int full_size(int k, int n) { return k * (n - k) + 1; }

// ---------------------------------------------------------------------------
// Validation and completion

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::string out = "not weakly separated:";
  for (const auto& [a, b] : crossing_pairs)
    out += " {" + a.to_string() + "}|{" + b.to_string() + "}";
  return out;
}

ValidationReport validate(const WSCollection& c) {
  ValidationReport report;
  const auto& sets = c.sets();
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      if (!weakly_separated(sets[a], sets[b])) report.crossing_pairs.emplace_back(sets[a], sets[b]);
  return report;
}

namespace {

bool separated_from_all(const KSubset& candidate, const std::vector<KSubset>& sets) {
  return std::all_of(sets.begin(), sets.end(),
                     [&](const KSubset& s) { return weakly_separated(candidate, s); });
}

}  // namespace

bool is_maximal(const WSCollection& c) {
  if (!validate(c).ok()) return false;
  for (const auto& cand : all_k_subsets(c.n(), c.k()))
    if (!c.contains(cand) && separated_from_all(cand, c.sets())) return false;
  return true;
}

WSCollection complete_to_maximal(const WSCollection& c, std::span<const KSubset> order) {
  const auto report = validate(c);
  require(report.ok(), "cannot complete: " + report.to_string());
  std::vector<KSubset> sets = c.sets();
  auto consider = [&](const KSubset& cand) {
    require(cand.n() == c.n() && cand.size() == c.k(), "candidate has wrong shape");
    if (std::find(sets.begin(), sets.end(), cand) != sets.end()) return;
    if (separated_from_all(cand, sets)) sets.push_back(cand);
  };
  for (const auto& cand : order) consider(cand);
  for (const auto& cand : all_k_subsets(c.n(), c.k())) consider(cand);
  return WSCollection(c.k(), c.n(), std::move(sets));
}

WSCollection complete_to_maximal(const WSCollection& c) {
  return complete_to_maximal(c, std::span<const KSubset>{});
}

WSCollection random_maximal(int k, int n, std::mt19937_64& rng) {
  auto order = all_k_subsets(n, k);
  std::shuffle(order.begin(), order.end(), rng);
  return complete_to_maximal(WSCollection(k, n), order);
}

WSCollection base_collection(int k, int n) {
  require(k >= 1 && k < n, "base collection needs 1 <= k < n");
  std::vector<KSubset> sets;
  for (int p = 0; p < n; ++p) {
    Mask m = 0;
    for (int d = 0; d < k; ++d) m |= Mask{1} << ((p + d) % n);
    sets.push_back(KSubset::from_mask(n, m));
  }
  for (int i = 1; i < k; ++i)
    for (int j = i + 2; j <= n + i - k; ++j)
      sets.push_back(KSubset::interval(n, 1, i) | KSubset::interval(n, j, k + j - i - 1));
  return WSCollection(k, n, std::move(sets));
}

// ---------------------------------------------------------------------------
// Moves

std::array<KSubset, 4> MoveSpec::sides() const {
  return {base.with(i).with(s), base.with(s).with(j), base.with(j).with(t),
          base.with(i).with(t)};
}

MoveSpec MoveSpec::reversed() const {
  MoveSpec out = *this;
  out.removes_ij = !removes_ij;
  return out;
}

MoveSpec MoveSpec::translated(const DihedralElement& g) const {
  std::array<int, 4> img{g.apply(i), g.apply(s), g.apply(j), g.apply(t)};
  std::array<int, 4> sorted = img;
  std::sort(sorted.begin(), sorted.end());
  MoveSpec out;
  out.base = g.apply(base);
  out.i = sorted[0];
  out.s = sorted[1];
  out.j = sorted[2];
  out.t = sorted[3];
  // The removed diagonal maps to one of the two crossing chords of the image.
  const int r0 = removes_ij ? img[0] : img[1];
  out.removes_ij = r0 == out.i || r0 == out.j;
  return out;
}

MoveSpec MoveSpec::regrounded(int n) const {
  MoveSpec out = *this;
  out.base = KSubset::from_mask(n, base.mask());
  return out;
}

std::string MoveSpec::to_string() const {
  return "{" + removed().to_string() + "} -> {" + added().to_string() + "}";
}

std::vector<MoveSpec> find_moves(const WSCollection& c) {
  std::unordered_set<Mask> present;
  for (const auto& s : c.sets()) present.insert(s.mask());
  auto has = [&](const KSubset& s) { return present.count(s.mask()) != 0; };
  auto sides_present = [&](const MoveSpec& mv) {
    const auto sides = mv.sides();
    return std::all_of(sides.begin(), sides.end(), has);
  };

  const int n = c.n();
  std::vector<MoveSpec> out;
  for (const auto& d : c.sets()) {
    const auto idx = d.indices();
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const int x = idx[a];
        const int y = idx[b];
        const KSubset base = d.without(x).without(y);
        // d = base + {i, j}: need i < s < j < t.
        for (int s = x + 1; s < y; ++s) {
          if (base.contains(s)) continue;
          for (int t = y + 1; t <= n; ++t) {
            if (base.contains(t)) continue;
            MoveSpec mv{base, x, s, y, t, true};
            if (!has(mv.added()) && sides_present(mv)) out.push_back(mv);
          }
        }
        // d = base + {s, t}: need i < s < j < t.
        for (int i = 1; i < x; ++i) {
          if (base.contains(i)) continue;
          for (int j = x + 1; j < y; ++j) {
            if (base.contains(j)) continue;
            MoveSpec mv{base, i, x, j, y, false};
            if (!has(mv.added()) && sides_present(mv)) out.push_back(mv);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MoveSpec& l, const MoveSpec& r) {
    if (l.removed() != r.removed()) return l.removed() < r.removed();
    return l.added() < r.added();
  });
  return out;
}

WSCollection apply_move(const WSCollection& c, const MoveSpec& mv) {
  require(mv.base.n() == c.n() && mv.base.size() == c.k() - 2, "move has wrong shape");
  require(mv.i < mv.s && mv.s < mv.j && mv.j < mv.t, "move needs i < s < j < t");
  for (const auto& side : mv.sides())
    require(c.contains(side), "move " + mv.to_string() + ": side {" + side.to_string() +
                                  "} missing");
  require(c.contains(mv.removed()),
          "move " + mv.to_string() + ": removed diagonal missing");
  require(!c.contains(mv.added()), "move " + mv.to_string() + ": added diagonal present");
  auto sets = c.sets();
  std::replace(sets.begin(), sets.end(), mv.removed(), mv.added());
  return WSCollection(c.k(), c.n(), std::move(sets));
}

// ---------------------------------------------------------------------------
// Move graph

std::optional<std::size_t> FlipGraph::index_of(const WSCollection& c) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
  if (it == nodes.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

bool FlipGraph::connected() const {
  if (nodes.empty()) return true;
  std::vector<bool> seen(nodes.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& [w, mv] : edges[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == nodes.size();
}

namespace {

struct Expansion {
  std::vector<std::pair<WSCollection, MoveSpec>> neighbours;
};

Expansion expand(const WSCollection& c) {
  Expansion e;
  for (const auto& mv : find_moves(c)) e.neighbours.emplace_back(apply_move(c, mv), mv);
  return e;
}

}  // namespace

FlipGraph build_flip_graph(const WSCollection& seed, int jobs) {
  require(jobs >= 1, "jobs must be positive");
  std::unordered_map<WSCollection, std::size_t, WSCollectionHash> discovered;
  std::vector<WSCollection> order{seed};
  std::vector<Expansion> expansions;
  discovered.emplace(seed, 0);
  std::size_t frontier_begin = 0;
  while (frontier_begin < order.size()) {
    const std::size_t frontier_end = order.size();
    const std::size_t count = frontier_end - frontier_begin;
    std::vector<Expansion> level(count);
    if (jobs == 1 || count < 2) {
      for (std::size_t p = 0; p < count; ++p) level[p] = expand(order[frontier_begin + p]);
    } else {
      std::vector<std::thread> workers;
      const auto nworkers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
      for (std::size_t w = 0; w < nworkers; ++w) {
        workers.emplace_back([&, w] {
          for (std::size_t p = w; p < count; p += nworkers)
            level[p] = expand(order[frontier_begin + p]);
        });
      }
      for (auto& t : workers) t.join();
    }
    // Merge in frontier order so the discovery order does not depend on jobs.
    for (auto& e : level) {
      for (const auto& [nb, mv] : e.neighbours) {
        if (discovered.emplace(nb, order.size()).second) order.push_back(nb);
      }
      expansions.push_back(std::move(e));
    }
    frontier_begin = frontier_end;
  }

  FlipGraph g;
  std::vector<std::size_t> rank(order.size());
  std::vector<std::size_t> perm(order.size());
  for (std::size_t p = 0; p < perm.size(); ++p) perm[p] = p;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return order[a] < order[b]; });
  for (std::size_t r = 0; r < perm.size(); ++r) rank[perm[r]] = r;
  g.nodes.reserve(order.size());
  for (auto p : perm) g.nodes.push_back(order[p]);
  g.edges.resize(order.size());
  for (std::size_t p = 0; p < order.size(); ++p)
    for (const auto& [nb, mv] : expansions[p].neighbours)
      g.edges[rank[p]].emplace_back(rank[discovered.at(nb)], mv);
  return g;
}

std::vector<WSCollection> enumerate_component(const WSCollection& seed, int jobs) {
  return build_flip_graph(seed, jobs).nodes;
}

std::vector<std::vector<WSCollection>> dihedral_orbits(const std::vector<WSCollection>& cs) {
  std::vector<WSCollection> sorted = cs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<bool> assigned(sorted.size(), false);
  std::vector<std::vector<WSCollection>> orbits;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    if (assigned[a]) continue;
    const auto& c = sorted[a];
    if (!sorted.empty()) require(c.n() == sorted.front().n() && c.k() == sorted.front().k(),
                                 "collections with different (k, n)");
    std::vector<WSCollection> orbit;
    for (const auto& g : DihedralElement::all(c.n())) {
      const auto img = c.translated(g);
      auto it = std::lower_bound(sorted.begin(), sorted.end(), img);
      if (it == sorted.end() || *it != img) continue;
      const auto idx = static_cast<std::size_t>(it - sorted.begin());
      if (assigned[idx]) continue;
      assigned[idx] = true;
      orbit.push_back(img);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

int height(const WSCollection& c) {
  int h = 0;
  for (const auto& s : c.sets())
    if (s.contains(c.n()) && !is_boundary(s)) ++h;
  return h;
}

// ---------------------------------------------------------------------------
// Reduction to the base collection

int pinch_point(const WSCollection& c) {
  require(c.k() == 3, "pinch point is defined for k = 3");
  const int n = c.n();
  require(n >= 4, "pinch point needs n >= 4");
  require(c.contains(KSubset(n, {1, n - 2, n - 1})),
          "collection lacks {1,n-2,n-1}");
  int b = 0;
  for (int x = 2; x <= n - 2; ++x)
    if (c.contains(KSubset(n, {1, x, n}))) b = x;
  ensure(b != 0, "no {1,b,n} with 1 < b < n-1 present");
  ensure(c.contains(KSubset(n, {1, b, n - 1})),
         "largest b with {1,b,n} present lacks {1,b,n-1}");
  for (int x = 2; x <= n - 2; ++x)
    ensure(x == b || !(c.contains(KSubset(n, {1, x, n})) &&
                       c.contains(KSubset(n, {1, x, n - 1}))),
           "pinch point is not unique");
  return b;
}

namespace {

std::vector<MoveSpec> translate_moves(const std::vector<MoveSpec>& moves,
                                      const DihedralElement& g) {
  std::vector<MoveSpec> out;
  out.reserve(moves.size());
  for (const auto& mv : moves) out.push_back(mv.translated(g));
  return out;
}

void append_regrounded(std::vector<MoveSpec>& out, const std::vector<MoveSpec>& moves, int n) {
  for (const auto& mv : moves) out.push_back(mv.regrounded(n));
}

// Members avoiding n, viewed inside [1..n-1].
WSCollection drop_top(const WSCollection& c) {
  std::vector<KSubset> sets;
  for (const auto& s : c.sets())
    if (!s.contains(c.n())) sets.push_back(KSubset::from_mask(c.n() - 1, s.mask()));
  return WSCollection(c.k(), c.n() - 1, std::move(sets));
}

// Checks that c = (A translate over [1..n-1]) plus the three sets through n
// that every height-0 collection carries.
void ensure_stacked(const WSCollection& c, const WSCollection& lower) {
  const int n = c.n();
  for (const auto& top : {KSubset(n, {1, 2, n}), KSubset(n, {1, n - 1, n}),
                          KSubset(n, {n - 2, n - 1, n})})
    ensure(c.contains(top), "expected {" + top.to_string() + "} after the walk");
  ensure(drop_top(c) == lower && c.size() == lower.size() + 3,
         "walk did not reach the expected stacked collection");
}

std::vector<MoveSpec> generator_walk(bool is_rotation, int n) {
  const WSCollection base = base_collection(3, n);
  const DihedralElement gen =
      is_rotation ? DihedralElement::rotation(n) : DihedralElement::reflection(n);
  WSCollection cur = base.translated(gen);
  if (n <= 4) {
    ensure(cur == base, "D_4 should fix the unique collection in W(3,4)");
    return {};
  }
  std::vector<MoveSpec> moves;
  if (is_rotation) {
    // {2,3,n} -> {1,2,n-1}, then {2,n-1,n} -> {1,n-2,n-1}.
    moves.push_back(MoveSpec{KSubset(n, {2}), 1, 3, n - 1, n, false});
    moves.push_back(MoveSpec{KSubset(n, {n - 1}), 1, 2, n - 2, n, false});
  } else {
    // {2,n-1,n} -> {1,n-2,n-1}.
    moves.push_back(MoveSpec{KSubset(n, {n - 1}), 1, 2, n - 2, n, false});
  }
  for (const auto& mv : moves) cur = apply_move(cur, mv);
  const DihedralElement lower_gen =
      is_rotation ? DihedralElement::rotation(n - 1) : DihedralElement::reflection(n - 1);
  ensure_stacked(cur, base_collection(3, n - 1).translated(lower_gen));
  append_regrounded(moves, generator_walk(is_rotation, n - 1), n);
  return moves;
}

std::vector<MoveSpec> reduce_triangulation(const WSCollection& c) {
  const int n = c.n();
  WSCollection cur = c;
  std::vector<MoveSpec> moves;
  const KSubset none = KSubset::empty_set(n);
  while (true) {
    std::vector<int> nbrs;
    for (int x = 2; x <= n; ++x)
      if (cur.contains(KSubset(n, {1, x}))) nbrs.push_back(x);
    std::optional<MoveSpec> next;
    for (std::size_t p = 0; p + 1 < nbrs.size() && !next; ++p) {
      const int a = nbrs[p];
      const int b = nbrs[p + 1];
      if (b - a < 2) continue;
      ensure(cur.contains(KSubset(n, {a, b})), "fan neighbours do not span a triangle");
      for (int apex = a + 1; apex < b; ++apex) {
        if (cur.contains(KSubset(n, {a, apex})) && cur.contains(KSubset(n, {apex, b}))) {
          next = MoveSpec{none, 1, a, apex, b, false};
          break;
        }
      }
      ensure(next.has_value(), "chord without an opposite triangle");
    }
    if (!next) break;
    cur = apply_move(cur, *next);
    moves.push_back(*next);
  }
  ensure(cur == base_collection(2, n), "flip walk did not end at the fan");
  return moves;
}

// Lowers the height of a collection containing {1,n-2,n-1} to zero.
std::vector<MoveSpec> reduce_height(WSCollection& cur) {
  const int n = cur.n();
  std::vector<MoveSpec> moves;
  while (height(cur) > 0) {
    const int before = height(cur);
    const int b = pinch_point(cur);
    ensure(b > 2, "positive height with pinch point 2");
    int a = 0;
    for (int x = 2; x < b; ++x)
      if (cur.contains(KSubset(n, {1, x, n}))) a = x;
    ensure(a != 0 && cur.contains(KSubset(n, {1, a, b})),
           "no a < b with {1,a,b} and {1,a,n} present");
    // Replace {1,b,n} with {1,a,n-1}.
    const MoveSpec mv{KSubset(n, {1}), a, b, n - 1, n, false};
    cur = apply_move(cur, mv);
    moves.push_back(mv);
    ensure(height(cur) == before - 1, "height did not drop by one");
    ensure(cur.contains(KSubset(n, {1, n - 2, n - 1})), "lost {1,n-2,n-1}");
  }
  return moves;
}

std::vector<MoveSpec> reduce_k3(const WSCollection& c, DihedralElement* witness_out) {
  const int n = c.n();
  if (witness_out) *witness_out = DihedralElement::identity(n);
  if (n <= 4) {
    ensure(c == base_collection(3, n), "W(3,n) for n <= 4 has a single collection");
    return {};
  }
  const KSubset anchor(n, {1, n - 2, n - 1});
  std::optional<DihedralElement> g;
  for (const auto& h : DihedralElement::all(n)) {
    if (c.translated(h).contains(anchor)) {
      g = h;
      break;
    }
  }
  ensure(g.has_value(), "no dihedral translate contains {1,n-2,n-1}");
  if (witness_out) *witness_out = *g;

  WSCollection cur = c.translated(*g);
  std::vector<MoveSpec> path = reduce_height(cur);
  append_regrounded(path, reduce_k3(drop_top(cur), nullptr), n);

  // path walks g*c to A_n; conjugate back so it walks c to g^-1 * A_n.
  const DihedralElement back = g->inverse();
  std::vector<MoveSpec> out = translate_moves(path, back);
  const auto tail = translate_back_to_base(back);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

std::vector<MoveSpec> translate_back_to_base(const DihedralElement& g) {
  const int n = g.n();
  // g = rho^a, or rho^(a-1) sigma when reflected.
  std::vector<bool> word;  // true = rho, false = sigma; product left to right
  if (!g.reflected()) {
    word.assign(static_cast<std::size_t>(g.shift()), true);
  } else {
    const int r = (g.shift() + n - 1) % n;
    word.assign(static_cast<std::size_t>(r), true);
    word.push_back(false);
  }
  // path(g1 g2 ... gL) = g1 * path(g2 ... gL) followed by path(g1).
  std::vector<MoveSpec> path;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const DihedralElement gen =
        *it ? DihedralElement::rotation(n) : DihedralElement::reflection(n);
    path = translate_moves(path, gen);
    const auto walk = generator_walk(*it, n);
    path.insert(path.end(), walk.begin(), walk.end());
  }
  return path;
}

BaseReduction reduce_to_base(const WSCollection& c) {
  require(c.k() == 2 || c.k() == 3, "reduction to the base collection needs k in {2,3}");
  require(is_maximal(c), "reduction needs a maximal weakly separated collection");
  BaseReduction out{DihedralElement::identity(c.n()), {}};
  if (c.k() == 2) {
    out.moves = reduce_triangulation(c);
  } else {
    out.moves = reduce_k3(c, &out.witness);
  }
  return out;
}

WSCollection replay_moves(const WSCollection& c, std::span<const MoveSpec> moves,
                          bool check_maximal) {
  WSCollection cur = c;
  for (const auto& mv : moves) {
    try {
      cur = apply_move(cur, mv);
    } catch (const PreconditionError& e) {
      throw InvariantError(std::string("replay failed: ") + e.what());
    }
    const auto report = validate(cur);
    ensure(report.ok(), "intermediate collection invalid: " + report.to_string());
    ensure(cur.size() == c.size(), "intermediate collection changed size");
    if (check_maximal) ensure(is_maximal(cur), "intermediate collection not maximal");
  }
  return cur;
}

}  // namespace wsq
