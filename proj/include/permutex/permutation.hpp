#pragma once

// Subpermutations of infinite words: rank windows, ascent/descent forms,
// the one-sided restrictions, and complements.

#include <charconv>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permutex/word.hpp"

namespace permutex {

struct Origin {
  std::string word;
  std::size_t start = 0;
  friend bool operator==(const Origin&, const Origin&) = default;
};

// Ranks forming a permutation of {1..n}. Equality and ordering compare the
// ranks only; the origin records which window produced them.
class Subpermutation {
 public:
  explicit Subpermutation(std::vector<int> ranks,
                          std::optional<Origin> origin = std::nullopt)
      : ranks_(std::move(ranks)), origin_(std::move(origin)) {
    if (!is_permutation_1n(ranks_))
      throw std::invalid_argument("ranks are not a permutation of 1..n: " +
                                  text_of(ranks_));
  }

  std::size_t length() const { return ranks_.size(); }
  int operator[](std::size_t i) const { return ranks_[i]; }
  const std::vector<int>& ranks() const { return ranks_; }
  const std::optional<Origin>& origin() const { return origin_; }

  // "[2 3 5 4 1]"
  std::string text() const { return text_of(ranks_); }
  static Subpermutation parse(std::string_view s);

  friend bool operator==(const Subpermutation& a, const Subpermutation& b) {
    return a.ranks_ == b.ranks_;
  }
  friend bool operator<(const Subpermutation& a, const Subpermutation& b) {
    return a.ranks_ < b.ranks_;
  }

 private:
  static std::string text_of(const std::vector<int>& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(r[i]);
    }
    return s + "]";
  }
  static bool is_permutation_1n(const std::vector<int>& r) {
    if (r.empty()) return false;
    std::vector<bool> seen(r.size(), false);
    for (int v : r) {
      if (v < 1 || v > static_cast<int>(r.size()) || seen[v - 1]) return false;
      seen[v - 1] = true;
    }
    return true;
  }

  std::vector<int> ranks_;
  std::optional<Origin> origin_;
};

inline Subpermutation Subpermutation::parse(std::string_view s) {
  const auto bad = [&] {
    return std::invalid_argument("bad permutation text '" + std::string(s) +
                                 "', expected like [2 3 5 4 1]");
  };
  std::size_t lo = s.find_first_not_of(" \t");
  std::size_t hi = s.find_last_not_of(" \t");
  if (lo == std::string_view::npos || s[lo] != '[' || s[hi] != ']') throw bad();
  std::vector<int> ranks;
  std::size_t pos = lo + 1;
  while (pos < hi) {
    if (s[pos] == ' ') {
      ++pos;
      continue;
    }
    int v = 0;
    const auto [end, ec] = std::from_chars(s.data() + pos, s.data() + hi, v);
    if (ec != std::errc()) throw bad();
    ranks.push_back(v);
    pos = static_cast<std::size_t>(end - s.data());
  }
  return Subpermutation(std::move(ranks));
}

// Comparison depth that always suffices for windows of an overlap-free word.
// Callers working with other words pass their own budget.
inline std::size_t default_max_depth(std::size_t n) { return 4 * n + 4; }

namespace detail {

// Ranks of the n shifts at a..a+n-1 over already materialized letters.
// Callers must extend w through a+n-1+max_depth first (or accept
// UnresolvedComparison when a finite word falls short).
inline std::vector<int> window_ranks(const WordPrefix& w, std::size_t a,
                                     std::size_t n, std::size_t max_depth) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return compare_materialized(w, a + i, a + j, max_depth) == Order::Less;
  });
  std::vector<int> ranks(n);
  for (std::size_t r = 0; r < n; ++r)
    ranks[order[r]] = static_cast<int>(r) + 1;
  return ranks;
}

}  // namespace detail

// The permutation induced by the n shifts starting at a..a+n-1, as ranks.
// max_depth 0 selects the overlap-free default.
inline Subpermutation subpermutation(WordPrefix& w, std::size_t a, std::size_t n,
                                     std::size_t max_depth = 0) {
  if (n == 0) throw std::invalid_argument("subpermutation needs n >= 1");
  if (max_depth == 0) max_depth = default_max_depth(n);
  w.extend(a + n - 1 + max_depth);
  return Subpermutation(detail::window_ranks(w, a, n, max_depth),
                        Origin{w.id(), a});
}

using Form = Bits;

// Ascent/descent word: letter i is 0 iff p_i < p_{i+1}. For a window of a
// word this equals the factor underlying the window.
inline Form form_of(const Subpermutation& p) {
  if (p.length() < 2) throw std::invalid_argument("form_of needs length >= 2");
  Form u(p.length() - 1);
  for (std::size_t i = 0; i + 1 < p.length(); ++i)
    u[i] = p[i] < p[i + 1] ? 0 : 1;
  return u;
}

// Drop the last entry and close the rank gap. The origin window keeps its
// start and shrinks by one.
inline Subpermutation restrict_left(const Subpermutation& p) {
  if (p.length() < 2) throw std::invalid_argument("restrict_left needs length >= 2");
  const int last = p[p.length() - 1];
  std::vector<int> r(p.length() - 1);
  for (std::size_t i = 0; i + 1 < p.length(); ++i)
    r[i] = p[i] - (last < p[i] ? 1 : 0);
  return Subpermutation(std::move(r), p.origin());
}

// Drop the first entry and close the rank gap. The origin window advances
// one position.
inline Subpermutation restrict_right(const Subpermutation& p) {
  if (p.length() < 2) throw std::invalid_argument("restrict_right needs length >= 2");
  const int first = p[0];
  std::vector<int> r(p.length() - 1);
  for (std::size_t i = 0; i + 1 < p.length(); ++i)
    r[i] = p[i + 1] - (first < p[i + 1] ? 1 : 0);
  std::optional<Origin> o = p.origin();
  if (o) ++o->start;
  return Subpermutation(std::move(r), std::move(o));
}

// Drop both ends. Equal to restrict_left then restrict_right in either order.
inline Subpermutation restrict_middle(const Subpermutation& p) {
  if (p.length() < 3) throw std::invalid_argument("restrict_middle needs length >= 3");
  return restrict_right(restrict_left(p));
}

// n + 1 - p_i. Flips every ascent to a descent and back; the origin is
// dropped because the complement generally comes from no window of the word.
inline Subpermutation complement_perm(const Subpermutation& p) {
  const int n = static_cast<int>(p.length());
  std::vector<int> r(p.length());
  for (std::size_t i = 0; i < p.length(); ++i) r[i] = n + 1 - p[i];
  return Subpermutation(std::move(r));
}

}  // namespace permutex
