#include "wsq/wiring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wsq/errors.hpp"

namespace wsq {

namespace {

int choose2(int x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// Applies the letters of one color to the identity and reports whether every
// step adds an inversion and the result is the longest element.
bool reduces_to_longest(const std::vector<int>& indices, int size) {
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 1);
  for (int i : indices) {
    if (i < 1 || i >= size) return false;
    auto& lo = perm[static_cast<std::size_t>(i - 1)];
    auto& hi = perm[static_cast<std::size_t>(i)];
    if (lo > hi) return false;
    std::swap(lo, hi);
  }
  return static_cast<int>(indices.size()) == choose2(size);
}

std::vector<int> color_indices(const ReducedWord& w, bool red) {
  std::vector<int> out;
  for (const auto& l : w.letters)
    if (l.red == red) out.push_back(l.index);
  return out;
}

KSubset bottom_labels(const std::vector<int>& slots, int level, int ground) {
  Mask m = 0;
  for (int p = 0; p < level; ++p) m |= Mask{1} << (slots[static_cast<std::size_t>(p)] - 1);
  return KSubset::from_mask(ground, m);
}

}  // namespace

ReducedWord ReducedWord::parse(int k, int m, std::string_view text) {
  ReducedWord w{k, m, {}};
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    Letter l;
    if (!tok.empty() && (tok.back() == 'r' || tok.back() == 'R')) {
      l.red = true;
      tok.pop_back();
    }
    try {
      std::size_t used = 0;
      l.index = std::stoi(tok, &used);
      require(used == tok.size(), "bad letter '" + tok + "'");
    } catch (const std::logic_error&) {
      throw PreconditionError("bad letter '" + tok + "' in word");
    }
    require(l.index >= 1 && l.index < (l.red ? k : m),
            "letter " + tok + (l.red ? "r" : "") + " out of range");
    w.letters.push_back(l);
  }
  return w;
}

std::string ReducedWord::to_string() const {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.index);
    if (l.red) out += 'r';
  }
  return out;
}

bool validate_word(const ReducedWord& w) {
  if (w.k < 1 || w.m < 1) return false;
  return reduces_to_longest(color_indices(w, false), w.m) &&
         reduces_to_longest(color_indices(w, true), w.k);
}

bool is_optimal(const ReducedWord& w) {
  if (!validate_word(w)) return false;
  int high = 0;
  for (const auto& l : w.letters)
    if (!l.red && l.index >= w.k + 1) ++high;
  return high == choose2(w.m - w.k);
}

std::vector<Chamber> chambers(const ReducedWord& w) {
  require(validate_word(w), "not a reduced word for the longest element: " + w.to_string());
  require(w.k <= w.m, "double wiring arrangements need k <= m");
  const int k = w.k;
  const int m = w.m;
  std::vector<int> black(static_cast<std::size_t>(m));
  std::iota(black.begin(), black.end(), 1);
  // Red labels are fixed at the right end; undo the red letters to get the left end.
  std::vector<int> red(static_cast<std::size_t>(k));
  std::iota(red.begin(), red.end(), 1);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    if (it->red) std::swap(red[static_cast<std::size_t>(it->index - 1)],
                           red[static_cast<std::size_t>(it->index)]);

  std::vector<Chamber> out;
  std::vector<int> start(static_cast<std::size_t>(k + 1), 0);
  auto emit = [&](int level, int end) {
    out.push_back(Chamber{level, start[static_cast<std::size_t>(level)], end,
                          bottom_labels(red, level, k), bottom_labels(black, level, m)});
  };
  const int length = static_cast<int>(w.letters.size());
  for (int pos = 0; pos < length; ++pos) {
    const Letter& l = w.letters[static_cast<std::size_t>(pos)];
    if (l.index <= k) {
      emit(l.index, pos);
      start[static_cast<std::size_t>(l.index)] = pos + 1;
    }
    auto& slots = l.red ? red : black;
    std::swap(slots[static_cast<std::size_t>(l.index - 1)],
              slots[static_cast<std::size_t>(l.index)]);
  }
  for (int level = 1; level <= k; ++level) emit(level, length);
  std::stable_sort(out.begin(), out.end(), [](const Chamber& a, const Chamber& b) {
    return a.level != b.level ? a.level < b.level : a.start < b.start;
  });
  return out;
}

WSCollection word_collection(const ReducedWord& w) {
  require(is_optimal(w), "word collection needs an optimal reduced word: " + w.to_string());
  const int n = w.k + w.m;
  std::vector<KSubset> sets{KSubset::interval(n, 1, w.k)};
  for (const auto& ch : chambers(w))
    sets.push_back(stieffel_subset(MinorIndex::make(ch.red, ch.black)));
  WSCollection out(w.k, n, std::move(sets));
  ensure(static_cast<int>(out.size()) == w.k * w.m + 1,
         "word collection has " + std::to_string(out.size()) + " members, expected km+1");
  return out;
}

bool chamber_minors_compatible(const MinorIndex& p, const MinorIndex& r) {
  const auto& a = p.rows;
  const auto& b = p.cols;
  const auto& i = r.rows;
  const auto& j = r.cols;
  return (precedes(a - i, i - a) && precedes(j - b, b - j)) ||
         (precedes(i - a, a - i) && precedes(b - j, j - b));
}

std::vector<std::vector<int>> longest_element_words(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> word;
  const int target = choose2(m);
  std::function<void()> dfs = [&] {
    if (static_cast<int>(word.size()) == target) {
      out.push_back(word);
      return;
    }
    for (int i = 1; i < m; ++i) {
      auto& lo = perm[static_cast<std::size_t>(i - 1)];
      auto& hi = perm[static_cast<std::size_t>(i)];
      if (lo > hi) continue;
      std::swap(lo, hi);
      word.push_back(i);
      dfs();
      word.pop_back();
      std::swap(lo, hi);
    }
  };
  dfs();
  return out;
}

void for_each_reduced_shuffle(int k, int m, bool optimal_only,
                              const std::function<void(const ReducedWord&)>& visit) {
  const auto black_words = longest_element_words(m);
  const auto red_words = longest_element_words(k);
  for (const auto& bw : black_words) {
    if (optimal_only) {
      const auto high = std::count_if(bw.begin(), bw.end(), [k](int i) { return i >= k + 1; });
      if (high != choose2(m - k)) continue;
    }
    for (const auto& rw : red_words) {
      const std::size_t total = bw.size() + rw.size();
      // Choose which positions carry red letters: iterate over bitmasks of
      // popcount |rw| in increasing order.
      std::vector<bool> is_red(total, false);
      std::fill(is_red.end() - static_cast<std::ptrdiff_t>(rw.size()), is_red.end(), true);
      do {
        ReducedWord w{k, m, {}};
        std::size_t bi = 0;
        std::size_t ri = 0;
        for (std::size_t p = 0; p < total; ++p) {
          if (is_red[p]) w.letters.push_back(Letter{true, rw[ri++]});
          else w.letters.push_back(Letter{false, bw[bi++]});
        }
        visit(w);
      } while (std::next_permutation(is_red.begin(), is_red.end()));
    }
  }
}

std::vector<WSCollection> wiring_collections_up_to_dihedral(int k, int m) {
  std::set<WSCollection> found;
  const int n = k + m;
  const auto group = DihedralElement::all(n);
  for_each_reduced_shuffle(k, m, true, [&](const ReducedWord& w) {
    const auto c = word_collection(w);
    if (found.count(c)) return;
    for (const auto& g : group) found.insert(c.translated(g));
  });
  return {found.begin(), found.end()};
}

bool is_wiring_parametrizable(const WSCollection& c) {
  require(c.k() == 2, "wiring parametrizability criterion is for k = 2");
  const int n = c.n();
  std::vector<std::pair<int, int>> chords;
  for (const auto& s : c.non_boundary()) chords.emplace_back(s.min(), s.max());
  // Side of vertex p relative to chord (x, y): 1 strictly inside (x, y),
  // 0 outside, -1 on the chord.
  auto edge_side = [](int p, int x, int y) -> int {
    if (p == x || p == y) return -1;
    return (p > x && p < y) ? 1 : 0;
  };
  auto separates = [&](int e, int f, const std::pair<int, int>& ch) {
    const int e2 = e % n + 1;
    const int f2 = f % n + 1;
    const int se1 = edge_side(e, ch.first, ch.second);
    const int se2 = edge_side(e2, ch.first, ch.second);
    const int sf1 = edge_side(f, ch.first, ch.second);
    const int sf2 = edge_side(f2, ch.first, ch.second);
    if (se1 < 0 || se2 < 0 || sf1 < 0 || sf2 < 0) return false;  // shares a vertex
    return se1 != sf1;
  };
  for (int e = 1; e <= n; ++e) {
    bool witness = true;
    for (int f = 1; f <= n && witness; ++f) {
      if (f == e) continue;
      for (const auto& ch : chords) {
        if (separates(e, f, ch)) {
          witness = false;
          break;
        }
      }
    }
    if (witness) return true;
  }
  return false;
}

}  // namespace wsq
