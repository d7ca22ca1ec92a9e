#include "wsq/ksubset.hpp"

#include <charconv>

#include "wsq/errors.hpp"

namespace wsq {

namespace {

void check_ground(int n) {
  require(n >= 0 && n <= kMaxGround,
          "ground set size " + std::to_string(n) + " outside [0.." +
              std::to_string(kMaxGround) + "]");
}

}  // namespace

KSubset::KSubset(int n, std::initializer_list<int> indices)
    : KSubset(from_indices(n, std::span<const int>(indices.begin(), indices.size()))) {}

KSubset KSubset::from_indices(int n, std::span<const int> indices) {
  check_ground(n);
  Mask m = 0;
  for (int i : indices) {
    require(i >= 1 && i <= n,
            "index " + std::to_string(i) + " outside [1.." + std::to_string(n) + "]");
    const Mask bit = Mask{1} << (i - 1);
    require((m & bit) == 0, "duplicate index " + std::to_string(i));
    m |= bit;
  }
  return KSubset(n, m);
}

KSubset KSubset::from_mask(int n, Mask mask) {
  check_ground(n);
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  require((mask & ~full) == 0, "mask has bits outside [1..n]");
  return KSubset(n, mask);
}

KSubset KSubset::interval(int n, int lo, int hi) {
  check_ground(n);
  if (lo > hi) return KSubset(n, 0);
  require(lo >= 1 && hi <= n, "interval outside ground set");
  Mask m = 0;
  for (int i = lo; i <= hi; ++i) m |= Mask{1} << (i - 1);
  return KSubset(n, m);
}

KSubset KSubset::parse(int n, std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    int value = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    require(ec == std::errc{} && ptr != first,
            "cannot parse subset '" + std::string(text) + "'");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos < text.size()) {
      require(text[pos] == ',', "cannot parse subset '" + std::string(text) + "'");
      ++pos;
    }
  }
  return from_indices(n, out);
}

std::vector<int> KSubset::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string KSubset::to_string() const {
  std::string out;
  for (int i : indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

KSubset KSubset::with(int i) const {
  require(i >= 1 && i <= n_, "index outside ground set");
  return KSubset(n_, mask_ | (Mask{1} << (i - 1)));
}

KSubset KSubset::without(int i) const {
  require(i >= 1 && i <= n_, "index outside ground set");
  return KSubset(n_, mask_ & ~(Mask{1} << (i - 1)));
}

void KSubset::check_same_ground(const KSubset& other) const {
  require(n_ == other.n_, "subsets live in different ground sets [1.." +
                              std::to_string(n_) + "] and [1.." +
                              std::to_string(other.n_) + "]");
}

KSubset KSubset::operator|(const KSubset& other) const {
  check_same_ground(other);
  return KSubset(n_, mask_ | other.mask_);
}

KSubset KSubset::operator&(const KSubset& other) const {
  check_same_ground(other);
  return KSubset(n_, mask_ & other.mask_);
}

KSubset KSubset::operator-(const KSubset& other) const {
  check_same_ground(other);
  return KSubset(n_, mask_ & ~other.mask_);
}

std::strong_ordering lex_compare(Mask a, Mask b) {
  if (a == b) return std::strong_ordering::equal;
  const Mask diff = a ^ b;
  const Mask low = diff & (~diff + 1);
  const Mask above = ~((low << 1) - 1);
  // The set owning the lowest differing index is smaller unless the other
  // set has nothing left past that point (it is then a proper prefix).
  if ((a & low) != 0) {
    return (b & above) != 0 ? std::strong_ordering::less
                            : std::strong_ordering::greater;
  }
  return (a & above) != 0 ? std::strong_ordering::greater
                          : std::strong_ordering::less;
}

std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return lex_compare(a.mask_, b.mask_);
}

std::vector<KSubset> all_k_subsets(int n, int k) {
  require(n >= 0 && n <= kMaxGround, "ground set too large");
  std::vector<KSubset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(KSubset::from_indices(n, idx));
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - k + p + 1) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q)
      idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

}  // namespace wsq
