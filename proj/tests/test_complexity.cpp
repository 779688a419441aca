#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "permutex/complexity.hpp"

#include "golden_appendix.hpp"

using namespace permutex;

namespace {

// Closed-form values recomputed by hand from n = 2^a + b.
const std::map<std::size_t, long long> kTau{
    {2, 2},   {3, 6},   {4, 8},   {5, 14},  {6, 16},  {7, 18},
    {8, 20},  {9, 30},  {10, 32}, {13, 38}, {15, 42}, {16, 44},
    {17, 62}, {20, 68}, {32, 92}, {33, 126}};

}  // namespace

TEST_CASE("enumeration at length 5 reproduces the reference set", "[complexity]") {
  WordPrefix T = thue_morse_word();
  const PermSet ps = enumerate_perms(T, 5);
  CHECK(ps.n == 5);
  CHECK(ps.word_id == "thue-morse");
  CHECK(ps.size() == 14);
  CHECK(ps.stabilized);
  CHECK(ps.scan_len >= 320);

  std::set<std::vector<int>> got;
  for (const auto& e : ps.entries) got.insert(e.perm.ranks());
  std::set<std::vector<int>> want;
  for (const auto& entry : golden::appendix().at(5))
    for (const auto& p : entry.perms) want.insert(p);
  CHECK(got == want);
}

TEST_CASE("entries are sorted and carry their first witness", "[complexity]") {
  WordPrefix T = thue_morse_word();
  const PermSet ps = enumerate_perms(T, 6);
  for (std::size_t i = 1; i < ps.entries.size(); ++i)
    CHECK(ps.entries[i - 1].perm < ps.entries[i].perm);
  for (const auto& e : ps.entries) {
    REQUIRE(e.perm.origin().has_value());
    CHECK(e.perm.origin()->start == e.first_start);
    CHECK(subpermutation(T, e.first_start, 6) == e.perm);
    CHECK((e.first_start % 2 == 0 ? e.even : e.odd));
    // No earlier window realizes the same ranks.
    for (std::size_t a = 0; a < e.first_start; ++a)
      CHECK_FALSE(subpermutation(T, a, 6) == e.perm);
    CHECK(ps.contains(e.perm));
  }
  CHECK_FALSE(ps.contains(Subpermutation({1, 2, 3, 4, 5, 6})));
}

TEST_CASE("parity split is exact from length 6 on", "[complexity]") {
  WordPrefix T = thue_morse_word();
  for (std::size_t n = 2; n <= 12; ++n) {
    const PermSet ps = enumerate_perms(T, n);
    CHECK(ps.even_count() + ps.odd_count() == ps.size() + ps.parity_overlap());
    if (n >= 6) {
      CHECK(ps.parity_overlap() == 0);
      CHECK(ps.even_count() + ps.odd_count() == ps.size());
    }
  }
  const PermSet six = enumerate_perms(T, 6);
  CHECK(six.even_count() == 8);
  CHECK(six.odd_count() == 8);
  CHECK(six.parity_members(true).size() == 8);
  CHECK(six.parity_members(false).size() == 8);
}

TEST_CASE("stabilized scans are insensitive to a larger start", "[complexity]") {
  WordPrefix T = thue_morse_word();
  for (std::size_t n = 2; n <= 10; ++n) {
    const PermSet a = enumerate_perms(T, n);
    const PermSet b = enumerate_perms(T, n, {.initial_scan = 256 * n});
    CHECK(a.members() == b.members());
  }
}

TEST_CASE("the scan cap aborts with NonStabilized", "[complexity]") {
  WordPrefix T = thue_morse_word();
  CHECK_THROWS_AS(
      enumerate_perms(T, 12, {.initial_scan = 64, .max_scan = 100}),
      NonStabilized);
  CHECK_THROWS_AS(enumerate_perms(T, 12, {.max_scan = 500}), NonStabilized);
}

TEST_CASE("parallel scanning returns the sequential result", "[complexity]") {
  WordPrefix T = thue_morse_word();
  for (std::size_t n : {5u, 9u}) {
    const PermSet seq = enumerate_perms(T, n);
    const PermSet par = enumerate_perms(T, n, {.jobs = 4});
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      CHECK(seq.entries[i].perm == par.entries[i].perm);
      CHECK(seq.entries[i].first_start == par.entries[i].first_start);
      CHECK(seq.entries[i].even == par.entries[i].even);
      CHECK(seq.entries[i].odd == par.entries[i].odd);
    }
  }
}

TEST_CASE("the three tau computations agree", "[complexity]") {
  for (const auto& [n, v] : kTau) {
    CHECK(tau_closed_form(n) == v);
    CHECK(tau_recursive(n) == v);
  }
  for (std::size_t n = 2; n <= 200; ++n)
    CHECK(tau_recursive(n) == tau_closed_form(n));
  WordPrefix T = thue_morse_word();
  for (std::size_t n = 2; n <= 12; ++n)
    CHECK(static_cast<long long>(enumerate_perms(T, n).size()) ==
          tau_closed_form(n));
  CHECK_THROWS_AS(tau_closed_form(1), DomainTooSmall);
  CHECK_THROWS_AS(tau_recursive(0), DomainTooSmall);
}

TEST_CASE("factor counts stabilize to the known values", "[complexity]") {
  WordPrefix T = thue_morse_word();
  const std::size_t expected[] = {2, 4, 6, 10, 12};
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(count_factors_stabilized(T, n) == expected[n - 1]);
  CHECK_THROWS_AS(count_factors_stabilized(T, 3, 8, 12), NonStabilized);
}

TEST_CASE("factor counts sandwich the permutation counts", "[complexity]") {
  WordPrefix T = thue_morse_word();
  for (std::size_t n = 2; n <= 12; ++n) {
    const std::size_t tau = enumerate_perms(T, n).size();
    CHECK(count_factors_stabilized(T, n - 1) <= tau);
    CHECK(tau <= count_factors_stabilized(T, 2 * n - 1));
  }
}

TEST_CASE("complexity_report assembles the full row", "[complexity]") {
  WordPrefix T = thue_morse_word();
  const ComplexityReport r = complexity_report(T, 6);
  CHECK(r.n == 6);
  CHECK(r.tau_brute == 16);
  CHECK(r.tau_recursive == 16);
  CHECK(r.tau_closed == 16);
  CHECK(r.even_count == 8);
  CHECK(r.odd_count == 8);
  CHECK(r.rho_prev == 12);
  CHECK(r.bounds_ok);
  CHECK(r.stabilized);
  CHECK(r.parity_overlap == 0);
  CHECK(r.closed_in_stated_domain);
  CHECK_FALSE(complexity_report(T, 5).closed_in_stated_domain);
  CHECK_THROWS_AS(complexity_report(T, 1), DomainTooSmall);
}

TEST_CASE("double-window upper bounds hold", "[complexity]") {
  WordPrefix T = thue_morse_word();
  for (std::size_t n = 2; n <= 10; ++n) {
    const VerifyReport rep = upper_bound_check(T, n);
    CHECK(rep.scanned == 2);
    CHECK(rep.ok());
  }
}

TEST_CASE("the doubled word separates at length 5", "[complexity]") {
  WordPrefix T = thue_morse_word();
  WordPrefix D = apply_morphism(Morphism::doubling(), T);
  CHECK(enumerate_perms(T, 5).size() == 14);
  CHECK(enumerate_perms(D, 5).size() == 16);
}
