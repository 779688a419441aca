#pragma once

// The Thue-Morse morphism's action on subpermutations: the closed-form
// image of a window under doubling, the maps phi, phi_L, phi_R, phi_M, and
// empirical scans of the two ordering statements the closed form rests on.

#include <string>
#include <utility>
#include <vector>

#include "permutex/permutation.hpp"
#include "permutex/report.hpp"

namespace permutex {

// Image of a window permutation of length n+1 with underlying factor u of
// length n, under doubling of the window. Entries at even output positions
// are p_i + |u|_1; odd positions split into four cases on (p_i vs p_{i+1})
// and (p_i vs p_n). Windows of an actual word always produce a permutation
// of {1..2n+1}; consistent (p, u) pairs realized by no word may not, and
// those are rejected rather than returned malformed.
inline Subpermutation forward_image(const Subpermutation& p, const Form& u) {
  const std::size_t n = u.size();
  if (n == 0 || p.length() != n + 1)
    throw std::invalid_argument("forward_image needs |p| = |u| + 1 >= 2");
  for (std::size_t i = 0; i < n; ++i)
    if ((u[i] == 0) != (p[i] < p[i + 1]))
      throw InconsistentForm("form " + to_string(u) + " disagrees with " +
                             p.text() + " at position " + std::to_string(i));
  int ones = 0;
  for (auto b : u) ones += b;
  const int shift = static_cast<int>(n);
  const int last = p[n];
  std::vector<int> r(2 * n + 1);
  for (std::size_t i = 0; i <= n; ++i) r[2 * i] = p[i] + ones;
  for (std::size_t i = 0; i < n; ++i) {
    const bool ascent = p[i] < p[i + 1];
    const bool below_last = p[i] < last;
    r[2 * i + 1] = p[i] + ones +
                   (ascent ? (below_last ? shift + 1 : shift)
                           : (below_last ? -shift : -(shift + 1)));
  }
  std::vector<bool> seen(r.size(), false);
  for (int v : r) {
    if (v < 1 || v > static_cast<int>(r.size()) || seen[v - 1])
      throw std::domain_error("image of " + p.text() + " with form " +
                              to_string(u) +
                              " is not a permutation, the pair is realized by "
                              "no word window");
    seen[v - 1] = true;
  }
  std::optional<Origin> o = p.origin();
  if (o) o->start *= 2;
  return Subpermutation(std::move(r), std::move(o));
}

// Doubling image computed from the ranks alone. A window's form equals its
// underlying factor, so no word access is needed.
inline Subpermutation phi(const Subpermutation& p) {
  return forward_image(p, form_of(p));
}

// The three restrictions of phi to odd window lengths. phi keeps the doubled
// start, phi_L trims the far end, phi_R and phi_M start one position later.
inline Subpermutation phi_L(const Subpermutation& p) { return restrict_left(phi(p)); }

inline Subpermutation phi_R(const Subpermutation& p) { return restrict_right(phi(p)); }

inline Subpermutation phi_M(const Subpermutation& p) {
  if (p.length() < 3) throw std::invalid_argument("phi_M needs length >= 3");
  return restrict_middle(phi(p));
}

// Scan of the index action of a uniform length-2 morphism: shifts a, b and
// their images 2a, 2b compare the same way. Pairs a < b <= scan are checked
// once, antisymmetry covers the rest.
inline VerifyReport verify_order_preservation(WordPrefix& w, const Morphism& m,
                                              std::size_t scan,
                                              std::size_t max_depth) {
  if (!m.uniform_length(2))
    throw UnsupportedMorphism(
        "order preservation concerns uniform length-2 morphisms, got " +
        m.literal());
  VerifyReport rep{"order-preservation", 0, {}};
  for (std::size_t a = 0; a < scan; ++a)
    for (std::size_t b = a + 1; b <= scan; ++b) {
      ++rep.scanned;
      const Order plain = shift_compare(w, a, b, max_depth);
      const Order doubled = shift_compare(w, 2 * a, 2 * b, max_depth);
      if (plain != doubled)
        rep.violations.push_back("order of shifts " + std::to_string(a) + ", " +
                                 std::to_string(b) + " flips under doubling");
    }
  return rep;
}

// Scan of the interleaving pattern: whenever w_i = 0 and w_j = 1 with
// i, j <= scan, the doubled window of length 2*scan+2 ranks the four
// positions as rank(2j+1) < rank(2i) < rank(2j) < rank(2i+1).
inline VerifyReport verify_interleaving(WordPrefix& w, std::size_t scan,
                                        std::size_t max_depth = 0) {
  VerifyReport rep{"interleaving", 0, {}};
  const Subpermutation P = subpermutation(w, 0, 2 * scan + 2, max_depth);
  for (std::size_t i = 0; i <= scan; ++i) {
    if (w.fetch(i) != 0) continue;
    for (std::size_t j = 0; j <= scan; ++j) {
      if (w.fetch(j) != 1) continue;
      ++rep.scanned;
      const bool ok = P[2 * j + 1] < P[2 * i] && P[2 * i] < P[2 * j] &&
                      P[2 * j] < P[2 * i + 1];
      if (!ok)
        rep.violations.push_back("positions i=" + std::to_string(i) +
                                 " j=" + std::to_string(j) +
                                 " break the interleaving pattern");
    }
  }
  return rep;
}

}  // namespace permutex
