#pragma once

// Lazily extendable prefixes of infinite binary words, plus factor
// enumeration, the overlap test, and lexicographic shift comparison.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "permutex/errors.hpp"
#include "permutex/morphism.hpp"

namespace permutex {

enum class Order { Less, Greater };

// A materialized prefix together with the generator that can grow it.
// Extension appends only, never rewriting letters already produced, so two
// copies grown to the same length hold the same letters.
class WordPrefix {
 public:
  // grower(letters, target) must append until letters.size() >= target.
  using Grower = std::function<void(Bits&, std::size_t)>;

  WordPrefix(std::string id, Bits letters)
      : id_(std::move(id)), letters_(std::move(letters)) {}

  WordPrefix(std::string id, Bits letters, Grower grow)
      : id_(std::move(id)), letters_(std::move(letters)), grow_(std::move(grow)) {}

  const std::string& id() const { return id_; }
  std::size_t size() const { return letters_.size(); }
  bool extendable() const { return static_cast<bool>(grow_); }
  const Bits& letters() const { return letters_; }

  // Materialize at least min_len letters, at least doubling per call so a
  // run of growing requests costs amortized linear time. Finite words clamp.
  void extend(std::size_t min_len) {
    if (min_len <= letters_.size() || !grow_) return;
    grow_(letters_, std::max(min_len, 2 * letters_.size()));
  }

  // Unchecked read of an already materialized letter.
  std::uint8_t operator[](std::size_t i) const { return letters_[i]; }

  std::uint8_t fetch(std::size_t i) {
    extend(i + 1);
    if (i >= letters_.size())
      throw std::out_of_range("index " + std::to_string(i) +
                              " beyond the finite word " + id_);
    return letters_[i];
  }

  Bits prefix(std::size_t n) {
    extend(n);
    if (n > letters_.size())
      throw std::out_of_range("prefix of length " + std::to_string(n) +
                              " beyond the finite word " + id_);
    return Bits(letters_.begin(), letters_.begin() + static_cast<long>(n));
  }

 private:
  std::string id_;
  Bits letters_;
  Grower grow_;
};

// Prefix of the one-sided fixed point of m starting from seed. The morphism
// must be prolongable on the seed letter.
inline WordPrefix iterate_fixed_point(const Morphism& m, std::uint8_t seed,
                                      std::size_t min_len, std::string id = "") {
  seed &= 1;
  if (!m.prolongable_on(seed))
    throw NotProlongable("morphism " + m.literal() + " is not prolongable on " +
                         std::to_string(int(seed)));
  if (id.empty()) id = m.literal() + "@" + (seed ? "1" : "0");
  // Reapplying m to a prefix of the fixed point extends that prefix, so the
  // grower can iterate on whatever is materialized.
  auto grow = [m](Bits& letters, std::size_t target) {
    while (letters.size() < target) letters = apply_morphism(m, letters);
  };
  WordPrefix w(std::move(id), Bits{seed}, std::move(grow));
  w.extend(min_len);
  return w;
}

inline WordPrefix thue_morse_word(std::size_t min_len = 64) {
  return iterate_fixed_point(Morphism::thue_morse(), 0, min_len, "thue-morse");
}

inline WordPrefix fibonacci_word(std::size_t min_len = 64) {
  return iterate_fixed_point(Morphism::fibonacci(), 0, min_len, "fibonacci");
}

// Letter-by-letter image of base under m, itself extendable whenever base
// is. The image of base's prefix of length k has length sum of the k image
// lengths, so growth consumes base letters one at a time.
inline WordPrefix apply_morphism(const Morphism& m, const WordPrefix& base,
                                 std::string id = "") {
  if (id.empty()) id = m.literal() + "@" + base.id();
  Bits out = apply_morphism(m, base.letters());
  if (!base.extendable()) return WordPrefix(std::move(id), std::move(out));
  WordPrefix src = base;
  std::size_t consumed = base.size();
  auto grow = [m, src = std::move(src), consumed](Bits& letters,
                                                  std::size_t target) mutable {
    while (letters.size() < target) {
      const Bits& im = m.image(src.fetch(consumed));
      letters.insert(letters.end(), im.begin(), im.end());
      ++consumed;
    }
  };
  return WordPrefix(std::move(id), std::move(out), std::move(grow));
}

namespace detail {

// Comparison over already materialized letters only; shared by the mutating
// shift_compare and the read-only window ranking used by parallel scans.
inline Order compare_materialized(const WordPrefix& w, std::size_t a,
                                  std::size_t b, std::size_t max_depth) {
  for (std::size_t c = 0; c < max_depth; ++c) {
    const std::size_t ia = a + c, ib = b + c;
    if (ia >= w.size() || ib >= w.size())
      throw UnresolvedComparison("shifts " + std::to_string(a) + " and " +
                                 std::to_string(b) + " of " + w.id() +
                                 " undecided, word exhausted at offset " +
                                 std::to_string(c));
    if (w[ia] != w[ib]) return w[ia] < w[ib] ? Order::Less : Order::Greater;
  }
  throw UnresolvedComparison("shifts " + std::to_string(a) + " and " +
                             std::to_string(b) + " of " + w.id() +
                             " agree through depth " + std::to_string(max_depth));
}

}  // namespace detail

// Lexicographic order of the shifts starting at a and b, decided by the
// first differing letter within max_depth. For an aperiodic word every pair
// of distinct shifts differs eventually; an exhausted budget (or a finite
// word running out) raises UnresolvedComparison rather than guessing.
inline Order shift_compare(WordPrefix& w, std::size_t a, std::size_t b,
                           std::size_t max_depth) {
  if (a == b) throw std::invalid_argument("shift_compare needs distinct positions");
  w.extend(std::max(a, b) + max_depth);
  return detail::compare_materialized(w, a, b, max_depth);
}

// Distinct factors of length n occurring in the first scan_len letters.
inline std::set<Bits> factors(WordPrefix& w, std::size_t n, std::size_t scan_len) {
  if (n == 0 || scan_len < n)
    throw std::invalid_argument("factors needs 1 <= n <= scan_len");
  w.extend(scan_len);
  scan_len = std::min(scan_len, w.size());
  std::set<Bits> out;
  for (std::size_t i = 0; i + n <= scan_len; ++i)
    out.emplace(w.letters().begin() + static_cast<long>(i),
                w.letters().begin() + static_cast<long>(i + n));
  return out;
}

// True iff u avoids factors of the form vuvuv with v nonempty, equivalently
// has no window of length 2p + 1 with period p. Direct scan over (p, start).
inline bool is_overlap_free(const Bits& u) {
  for (std::size_t p = 1; 2 * p + 1 <= u.size(); ++p)
    for (std::size_t i = 0; i + 2 * p < u.size(); ++i) {
      bool repeats = true;
      for (std::size_t j = i; j <= i + p && repeats; ++j)
        repeats = u[j] == u[j + p];
      if (repeats) return false;
    }
  return true;
}

}  // namespace permutex
