#include "wsq/ncpoly.hpp"

#include "wsq/errors.hpp"

namespace wsq {

namespace {

void check_word(int k, int m, const Word& word) {
  for (const auto& g : word)
    require(g.row >= 1 && g.row <= k && g.col >= 1 && g.col <= m,
            "generator x[" + std::to_string(g.row) + "," + std::to_string(g.col) +
                "] outside a " + std::to_string(k) + "x" + std::to_string(m) +
                " quantum matrix");
}

// Rewrites until every word is in normal form. `pick` chooses which of the
// out-of-order positions (given in increasing order) to rewrite.
template <typename Pick>
NCPoly rewrite_all(int k, int m, const Word& word, const Laurent& coeff, Pick pick) {
  check_word(k, m, word);
  NCPoly out(k, m);
  if (coeff.is_zero()) return out;
  std::map<Word, Laurent> pending;
  pending.emplace(word, coeff);
  const Laurent cross = Laurent::q_minus_q_inverse();
  std::vector<std::size_t> descents;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word w = std::move(node.key());
    const Laurent c = std::move(node.mapped());
    descents.clear();
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p + 1] < w[p]) descents.push_back(p);
    if (descents.empty()) {
      out.add_normal_term(w, c);
      continue;
    }
    const std::size_t p = pick(descents);
    const Generator hi = w[p];      // x_{s,t}
    const Generator lo = w[p + 1];  // x_{i,j}
    auto push = [&pending](Word key, const Laurent& value) {
      auto [it, inserted] = pending.try_emplace(std::move(key), value);
      if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) pending.erase(it);
      }
    };
    Word swapped = w;
    swapped[p] = lo;
    swapped[p + 1] = hi;
    if (hi.row == lo.row || hi.col == lo.col) {
      push(std::move(swapped), c.shifted(1));
    } else if (hi.col < lo.col) {
      push(std::move(swapped), c);
    } else {
      Word crossed = w;
      crossed[p] = Generator{lo.row, hi.col};
      crossed[p + 1] = Generator{hi.row, lo.col};
      push(std::move(swapped), c);
      push(std::move(crossed), c * cross);
    }
  }
  return out;
}

}  // namespace

bool is_normal(const Word& word) {
  for (std::size_t p = 0; p + 1 < word.size(); ++p)
    if (word[p + 1] < word[p]) return false;
  return true;
}

NCPoly::NCPoly(int k, int m) : k_(k), m_(m) {
  require(k >= 1 && m >= 1, "quantum matrix dimensions must be positive");
}

NCPoly NCPoly::generator(int k, int m, int row, int col) {
  NCPoly out(k, m);
  Word w{Generator{row, col}};
  check_word(k, m, w);
  out.terms_.emplace(std::move(w), Laurent(1));
  return out;
}

NCPoly NCPoly::scalar(int k, int m, const Laurent& c) {
  NCPoly out(k, m);
  out.add_normal_term({}, c);
  return out;
}

void NCPoly::add_normal_term(const Word& word, const Laurent& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  require(k_ == o.k_ && m_ == o.m_, "adding polynomials of different shapes");
  for (const auto& [w, c] : o.terms_) add_normal_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  require(k_ == o.k_ && m_ == o.m_, "subtracting polynomials of different shapes");
  for (const auto& [w, c] : o.terms_) add_normal_term(w, -c);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  require(a.k_ == b.k_ && a.m_ == b.m_, "multiplying polynomials of different shapes");
  NCPoly out(a.k_, a.m_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out += normalize(a.k_, a.m_, w, ca * cb);
    }
  }
  return out;
}

NCPoly NCPoly::scaled(const Laurent& c) const {
  NCPoly out(k_, m_);
  for (const auto& [w, x] : terms_) out.add_normal_term(w, x * c);
  return out;
}

std::map<Word, std::int64_t> NCPoly::at_q_one() const {
  std::map<Word, std::int64_t> out;
  for (const auto& [w, c] : terms_) {
    const auto v = c.at_one();
    if (v == 0) continue;
    auto& slot = out[w];
    slot += v;
    if (slot == 0) out.erase(w);
  }
  return out;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (w.empty()) continue;
    out += " *";
    for (const auto& g : w)
      out += " x[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
  }
  return out;
}

NCPoly normalize(int k, int m, const Word& word, const Laurent& coeff) {
  return rewrite_all(k, m, word, coeff,
                     [](const std::vector<std::size_t>& d) { return d.front(); });
}

NCPoly normalize_randomized(int k, int m, const Word& word, const Laurent& coeff,
                            std::mt19937_64& rng) {
  return rewrite_all(k, m, word, coeff, [&rng](const std::vector<std::size_t>& d) {
    std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
    return d[pick(rng)];
  });
}

}  // namespace wsq
