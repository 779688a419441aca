#pragma once

// Type-k structure of subpermutations, complementary pair classification,
// the same-form census, and the image-type checks for phi and its
// restrictions.

#include <bit>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "permutex/report.hpp"
#include "permutex/tm_action.hpp"

namespace permutex {

// Epsilon such that p_i = p_{(len-k)+i} + eps for all i < k, if one exists.
// Requires 1 <= k and 2k <= length so the two blocks do not overlap.
inline std::optional<int> detect_type_k(const Subpermutation& p, std::size_t k) {
  if (k < 1 || 2 * k > p.length())
    throw std::invalid_argument("detect_type_k needs 1 <= k and 2k <= length");
  const std::size_t off = p.length() - k;
  const int eps = p[0] - p[off];
  if (eps != 1 && eps != -1) return std::nullopt;
  for (std::size_t i = 1; i < k; ++i)
    if (p[i] - p[off + i] != eps) return std::nullopt;
  return eps;
}

enum class PairKind { Identical, ComplementaryPair, UnrelatedSameForm, DifferentForm };

struct PairClass {
  PairKind kind = PairKind::Identical;
  std::size_t k = 0;  // set for ComplementaryPair
  int eps = 0;        // epsilon of the first argument's leading block
};

// How p and q of equal length relate. A complementary pair swaps its
// length-k end blocks around a shared middle, with the leading block offset
// by eps; the positions where p and q differ determine k, so at most one k
// can match and the scan over k is exact.
inline PairClass classify_pair(const Subpermutation& p, const Subpermutation& q) {
  if (p.length() != q.length())
    throw std::invalid_argument("classify_pair needs equal lengths");
  if (p == q) return {PairKind::Identical, 0, 0};
  if (form_of(p) != form_of(q)) return {PairKind::DifferentForm, 0, 0};
  const std::size_t len = p.length();
  for (std::size_t k = 1; 2 * k <= len; ++k) {
    const auto eps = detect_type_k(p, k);
    if (!eps) continue;
    bool match = true;
    for (std::size_t i = 0; i < k && match; ++i)
      match = p[i] == q[len - k + i] && q[i] == p[len - k + i];
    for (std::size_t i = k; i + k < len && match; ++i) match = p[i] == q[i];
    if (match) return {PairKind::ComplementaryPair, k, *eps};
  }
  return {PairKind::UnrelatedSameForm, 0, 0};
}

namespace detail {

// Pair type forced at window span m, from the split m = 2^r + c with
// 0 <= c < 2^r: type c + 1 when c < 2^{r-1} + 1, otherwise no doubled forms
// occur at all. Defined for every m >= 2; spans 0 and 1 have no room for
// disjoint blocks, reported as absent.
inline std::optional<std::size_t> pair_type_for_span(std::size_t m) {
  if (m < 2) return std::nullopt;
  const std::size_t r = static_cast<std::size_t>(std::bit_width(m)) - 1;
  const std::size_t c = m - (std::size_t{1} << r);
  if (c < (std::size_t{1} << (r - 1)) + 1) return c + 1;
  return std::nullopt;
}

}  // namespace detail

// Pair type forced at window span m (permutations of length m + 1). The
// statement is proved for m > 4; smaller spans go through the census, which
// checks the same arithmetic empirically.
inline std::optional<std::size_t> predicted_pair_type(std::size_t m) {
  if (m <= 4)
    throw DomainTooSmall("pair type prediction is stated for spans above 4, got " +
                         std::to_string(m));
  return detail::pair_type_for_span(m);
}

struct FormGroup {
  Form form;
  std::vector<Subpermutation> members;  // larger first rank listed first
  std::optional<PairClass> pair;        // present iff two members
};

struct Census {
  std::size_t n = 0;
  std::vector<FormGroup> groups;  // form-lexicographic order
  std::size_t doubled = 0;
  std::optional<std::size_t> predicted_k;  // arithmetic prediction at span n-1
  bool span_in_stated_domain = false;      // span above 4
};

// Group the permutations of one length by form and check the classification
// facts: no form carries more than two, and every doubled form carries a
// complementary pair of the predicted type. Breaches throw CensusViolation;
// they mean a bug, not a reportable result.
inline Census same_form_census(std::size_t n,
                               const std::vector<Subpermutation>& perms) {
  if (n == 0) throw std::invalid_argument("same_form_census needs n >= 1");
  Census out;
  out.n = n;
  out.predicted_k = detail::pair_type_for_span(n - 1);
  out.span_in_stated_domain = n - 1 > 4;
  std::map<Form, std::vector<Subpermutation>> by_form;
  for (const auto& p : perms) {
    if (p.length() != n)
      throw std::invalid_argument("census given a permutation of length " +
                                  std::to_string(p.length()) + ", expected " +
                                  std::to_string(n));
    by_form[n >= 2 ? form_of(p) : Form{}].push_back(p);
  }
  for (auto& [form, members] : by_form) {
    if (members.size() > 2)
      throw CensusViolation("form " + to_string(form) + " carries " +
                                std::to_string(members.size()) + " permutations",
                            to_string(form));
    std::sort(members.begin(), members.end(),
              [](const Subpermutation& a, const Subpermutation& b) {
                return a[0] > b[0];
              });
    FormGroup g{form, std::move(members), std::nullopt};
    if (g.members.size() == 2) {
      const PairClass pc = classify_pair(g.members[0], g.members[1]);
      if (pc.kind != PairKind::ComplementaryPair)
        throw CensusViolation("form " + to_string(form) +
                                  " carries two permutations that are not a "
                                  "complementary pair",
                              to_string(form));
      if (!out.predicted_k || pc.k != *out.predicted_k)
        throw CensusViolation(
            "form " + to_string(form) + " pair has type " + std::to_string(pc.k) +
                ", prediction at this length says " +
                (out.predicted_k ? std::to_string(*out.predicted_k) : "none"),
            to_string(form));
      g.pair = pc;
      ++out.doubled;
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

inline std::size_t count_doubled_forms(std::size_t n,
                                       const std::vector<Subpermutation>& perms) {
  return same_form_census(n, perms).doubled;
}

// Apply phi and its restrictions to type-k complementary pairs and check the
// image types: phi gives 2k-1, phi_L and phi_R give 2k-2, phi_M gives 2k-3.
// A type of 0 or below means the two images coincide.
inline VerifyReport verify_image_of_type_k(
    const std::vector<std::pair<Subpermutation, Subpermutation>>& pairs,
    std::size_t k) {
  VerifyReport rep{"image-of-type-k", 0, {}};
  const auto check = [&rep](const Subpermutation& a, const Subpermutation& b,
                            long long expected, const char* map) {
    const PairClass got = classify_pair(a, b);
    if (expected <= 0) {
      if (got.kind != PairKind::Identical)
        rep.violations.push_back(std::string(map) +
                                 " images should coincide, got distinct " +
                                 a.text() + " and " + b.text());
      return;
    }
    if (got.kind != PairKind::ComplementaryPair ||
        got.k != static_cast<std::size_t>(expected))
      rep.violations.push_back(std::string(map) + " images " + a.text() +
                               " and " + b.text() +
                               " are not a complementary pair of type " +
                               std::to_string(expected));
  };
  for (const auto& [p, q] : pairs) {
    ++rep.scanned;
    const PairClass in = classify_pair(p, q);
    if (in.kind != PairKind::ComplementaryPair || in.k != k) {
      rep.violations.push_back("input pair " + p.text() + ", " + q.text() +
                               " is not a complementary pair of type " +
                               std::to_string(k));
      continue;
    }
    const long long kk = static_cast<long long>(k);
    check(phi(p), phi(q), 2 * kk - 1, "phi");
    check(phi_L(p), phi_L(q), 2 * kk - 2, "phi_L");
    check(phi_R(p), phi_R(q), 2 * kk - 2, "phi_R");
    if (p.length() >= 3) check(phi_M(p), phi_M(q), 2 * kk - 3, "phi_M");
  }
  return rep;
}

}  // namespace permutex
