#pragma once

// Enumeration of the permutations a word realizes at one window length,
// with parity bookkeeping and stabilized doubling scans, plus the three
// tau computations and the combined complexity report.

#include <bit>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>
#include <vector>

#include "permutex/permutation.hpp"
#include "permutex/report.hpp"

namespace permutex {

struct EnumerateOptions {
  std::size_t initial_scan = 0;  // 0 means 64 * n
  std::size_t max_scan = 0;      // 0 means PERMUTEX_MAX_SCAN or 1 << 20
  std::size_t max_depth = 0;     // 0 means the overlap-free default for n
  unsigned jobs = 1;
};

struct PermSetEntry {
  Subpermutation perm;  // origin set to the first witnessing window
  std::size_t first_start = 0;
  bool even = false;  // witnessed from an even start
  bool odd = false;
};

struct PermSet {
  std::size_t n = 0;
  std::string word_id;
  std::vector<PermSetEntry> entries;  // ordered by ranks
  std::size_t scan_len = 0;
  bool stabilized = false;

  std::size_t size() const { return entries.size(); }

  std::size_t even_count() const {
    std::size_t c = 0;
    for (const auto& e : entries) c += e.even;
    return c;
  }
  std::size_t odd_count() const {
    std::size_t c = 0;
    for (const auto& e : entries) c += e.odd;
    return c;
  }
  // Entries witnessed from both parities. Empty from length 6 on.
  std::size_t parity_overlap() const {
    std::size_t c = 0;
    for (const auto& e : entries) c += e.even && e.odd;
    return c;
  }

  std::vector<Subpermutation> members() const {
    std::vector<Subpermutation> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.perm);
    return out;
  }
  std::vector<Subpermutation> parity_members(bool even_side) const {
    std::vector<Subpermutation> out;
    for (const auto& e : entries)
      if (even_side ? e.even : e.odd) out.push_back(e.perm);
    return out;
  }

  bool contains(const Subpermutation& p) const {
    const auto it = std::lower_bound(
        entries.begin(), entries.end(), p,
        [](const PermSetEntry& e, const Subpermutation& v) { return e.perm < v; });
    return it != entries.end() && it->perm == p;
  }
};

inline std::size_t default_max_scan() {
  if (const char* cap = std::getenv("PERMUTEX_MAX_SCAN")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(cap, &end, 10);
    if (end != cap && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 20;
}

namespace detail {

struct Witness {
  std::size_t first_start = 0;
  bool even = false;
  bool odd = false;
};

using WitnessMap = std::map<std::vector<int>, Witness>;

inline void scan_windows(const WordPrefix& w, std::size_t n, std::size_t begin,
                         std::size_t end, std::size_t max_depth,
                         WitnessMap& into) {
  for (std::size_t a = begin; a < end; ++a) {
    auto ranks = window_ranks(w, a, n, max_depth);
    auto [it, fresh] = into.try_emplace(std::move(ranks), Witness{a, false, false});
    if (!fresh && a < it->second.first_start) it->second.first_start = a;
    (a % 2 == 0 ? it->second.even : it->second.odd) = true;
  }
}

// All windows of length n starting inside the first scan letters. The word
// is extended once up front; worker threads then only read.
inline WitnessMap scan_prefix(WordPrefix& w, std::size_t n, std::size_t scan,
                              std::size_t max_depth, unsigned jobs) {
  const std::size_t windows = scan - n + 1;
  w.extend(scan + max_depth);
  if (jobs <= 1 || windows < 2 * jobs) {
    WitnessMap m;
    scan_windows(w, n, 0, windows, max_depth, m);
    return m;
  }
  std::vector<WitnessMap> parts(jobs);
  std::vector<std::exception_ptr> fails(jobs);
  std::vector<std::thread> threads;
  const std::size_t chunk = (windows + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::size_t begin = std::min<std::size_t>(j * chunk, windows);
    const std::size_t end = std::min<std::size_t>(begin + chunk, windows);
    threads.emplace_back([&, j, begin, end] {
      try {
        scan_windows(w, n, begin, end, max_depth, parts[j]);
      } catch (...) {
        fails[j] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& f : fails)
    if (f) std::rethrow_exception(f);
  for (unsigned j = 1; j < jobs; ++j)
    for (auto& [ranks, wit] : parts[j]) {
      auto [it, fresh] = parts[0].try_emplace(ranks, wit);
      if (!fresh) {
        it->second.first_start = std::min(it->second.first_start, wit.first_start);
        it->second.even = it->second.even || wit.even;
        it->second.odd = it->second.odd || wit.odd;
      }
    }
  return parts[0];
}

inline bool same_keys(const WitnessMap& a, const WitnessMap& b) {
  if (a.size() != b.size()) return false;
  auto ai = a.begin();
  for (auto bi = b.begin(); bi != b.end(); ++ai, ++bi)
    if (ai->first != bi->first) return false;
  return true;
}

}  // namespace detail

// Permutations realized at window length n within a stabilized scan: the
// scanned prefix doubles until a doubling adds no new permutation, throwing
// NonStabilized when the cap would be crossed first.
inline PermSet enumerate_perms(WordPrefix& w, std::size_t n,
                               EnumerateOptions opts = {}) {
  if (n == 0) throw std::invalid_argument("enumerate_perms needs n >= 1");
  const std::size_t depth = opts.max_depth ? opts.max_depth : default_max_depth(n);
  const std::size_t cap = opts.max_scan ? opts.max_scan : default_max_scan();
  const unsigned jobs = opts.jobs ? opts.jobs : 1;
  std::size_t scan = opts.initial_scan ? opts.initial_scan : 64 * n;
  if (scan < n) scan = n;
  if (scan > cap)
    throw NonStabilized("initial scan " + std::to_string(scan) + " for n=" +
                        std::to_string(n) + " already exceeds the cap " +
                        std::to_string(cap));
  auto current = detail::scan_prefix(w, n, scan, depth, jobs);
  while (true) {
    if (2 * scan > cap)
      throw NonStabilized("scan of " + w.id() + " at n=" + std::to_string(n) +
                          " hit the cap " + std::to_string(cap) +
                          " before stabilizing");
    auto next = detail::scan_prefix(w, n, 2 * scan, depth, jobs);
    scan *= 2;
    const bool stable = detail::same_keys(current, next);
    current = std::move(next);
    if (stable) break;
  }
  PermSet out;
  out.n = n;
  out.word_id = w.id();
  out.scan_len = scan;
  out.stabilized = true;
  out.entries.reserve(current.size());
  for (auto& [ranks, wit] : current)
    out.entries.push_back({Subpermutation(ranks, Origin{w.id(), wit.first_start}),
                           wit.first_start, wit.even, wit.odd});
  return out;
}

// 2(2^{a+1} + b - 2) where n = 2^a + b with 0 < b <= 2^a.
inline long long tau_closed_form(std::size_t n) {
  if (n < 2) throw DomainTooSmall("tau closed form needs n >= 2");
  const std::size_t a = static_cast<std::size_t>(std::bit_width(n - 1)) - 1;
  const long long b = static_cast<long long>(n) - (1ll << a);
  return 2 * ((1ll << (a + 1)) + b - 2);
}

namespace detail {

inline long long tau_rec(std::size_t n, std::map<std::size_t, long long>& memo) {
  static constexpr long long kBase[] = {2, 6, 8, 14, 16, 18, 20, 30};  // n = 2..9
  if (n <= 9) return kBase[n - 2];
  const auto hit = memo.find(n);
  if (hit != memo.end()) return hit->second;
  long long v;
  if (n % 2 == 0) {
    const std::size_t s = n / 2;
    v = 2 * tau_rec(s + 1, memo);
    if (std::has_single_bit(n)) v -= static_cast<long long>(n);  // n = 2^r
  } else {
    const std::size_t s = (n - 1) / 2;
    v = tau_rec(s + 1, memo) + tau_rec(s + 2, memo);
    if (std::has_single_bit(n + 1))  // n = 2^r - 1
      v -= static_cast<long long>((n + 1) / 2);
  }
  memo.emplace(n, v);
  return v;
}

}  // namespace detail

// Halving recursion anchored at the enumerated values for n <= 9, with the
// correction terms firing when the argument is 2^r or 2^r - 1.
inline long long tau_recursive(std::size_t n) {
  if (n < 2) throw DomainTooSmall("tau recursion needs n >= 2");
  std::map<std::size_t, long long> memo;
  return detail::tau_rec(n, memo);
}

// Distinct factors of length n, scan doubling until the count stabilizes.
inline std::size_t count_factors_stabilized(WordPrefix& w, std::size_t n,
                                            std::size_t initial_scan = 0,
                                            std::size_t max_scan = 0) {
  if (n == 0) throw std::invalid_argument("count_factors_stabilized needs n >= 1");
  const std::size_t cap = max_scan ? max_scan : default_max_scan();
  std::size_t scan = initial_scan ? initial_scan : 64 * n;
  if (scan < n) scan = n;
  if (scan > cap)
    throw NonStabilized("initial factor scan " + std::to_string(scan) +
                        " already exceeds the cap " + std::to_string(cap));
  auto current = factors(w, n, scan);
  while (true) {
    if (2 * scan > cap)
      throw NonStabilized("factor scan of " + w.id() + " at n=" +
                          std::to_string(n) + " hit the cap " +
                          std::to_string(cap) + " before stabilizing");
    auto next = factors(w, n, 2 * scan);
    scan *= 2;
    if (next == current) return next.size();
    current = std::move(next);
  }
}

struct ComplexityReport {
  std::size_t n = 0;
  long long tau_brute = 0;
  long long tau_recursive = 0;
  long long tau_closed = 0;
  std::size_t even_count = 0;
  std::size_t odd_count = 0;
  std::size_t rho_prev = 0;          // factor count at length n - 1
  std::size_t rho_2n_minus_1 = 0;    // factor count at length 2n - 1
  bool bounds_ok = false;            // rho_prev <= tau <= rho_2n_minus_1
  bool stabilized = false;
  std::size_t scan_len = 0;
  std::size_t parity_overlap = 0;    // zero from n = 6 on
  bool closed_in_stated_domain = false;  // the closed form is proved for n >= 6
};

inline ComplexityReport complexity_report(WordPrefix& w, std::size_t n,
                                          EnumerateOptions opts = {}) {
  if (n < 2) throw DomainTooSmall("complexity report needs n >= 2");
  const PermSet ps = enumerate_perms(w, n, opts);
  ComplexityReport r;
  r.n = n;
  r.tau_brute = static_cast<long long>(ps.size());
  r.tau_recursive = tau_recursive(n);
  r.tau_closed = tau_closed_form(n);
  r.even_count = ps.even_count();
  r.odd_count = ps.odd_count();
  r.rho_prev = count_factors_stabilized(w, n - 1, 0, opts.max_scan);
  r.rho_2n_minus_1 = count_factors_stabilized(w, 2 * n - 1, 0, opts.max_scan);
  r.bounds_ok = static_cast<long long>(r.rho_prev) <= r.tau_brute &&
                r.tau_brute <= static_cast<long long>(r.rho_2n_minus_1);
  r.stabilized = ps.stabilized;
  r.scan_len = ps.scan_len;
  r.parity_overlap = ps.parity_overlap();
  r.closed_in_stated_domain = n >= 6;
  return r;
}

// Brute check of the double-window bounds tau(2n) <= 2 tau(n+1) and
// tau(2n+1) <= tau(n+1) + tau(n+2).
inline VerifyReport upper_bound_check(WordPrefix& w, std::size_t n,
                                      EnumerateOptions opts = {}) {
  if (n < 2) throw DomainTooSmall("upper bound check needs n >= 2");
  VerifyReport rep{"double-window-upper-bounds", 0, {}};
  const auto tau_of = [&](std::size_t m) {
    EnumerateOptions o = opts;
    o.initial_scan = 0;
    o.max_depth = 0;
    return static_cast<long long>(enumerate_perms(w, m, o).size());
  };
  const long long tn1 = tau_of(n + 1), tn2 = tau_of(n + 2);
  const long long t2n = tau_of(2 * n), t2n1 = tau_of(2 * n + 1);
  ++rep.scanned;
  if (t2n > 2 * tn1)
    rep.violations.push_back("tau(" + std::to_string(2 * n) + ") = " +
                             std::to_string(t2n) + " exceeds 2 tau(" +
                             std::to_string(n + 1) + ") = " +
                             std::to_string(2 * tn1));
  ++rep.scanned;
  if (t2n1 > tn1 + tn2)
    rep.violations.push_back("tau(" + std::to_string(2 * n + 1) + ") = " +
                             std::to_string(t2n1) + " exceeds tau(" +
                             std::to_string(n + 1) + ") + tau(" +
                             std::to_string(n + 2) + ") = " +
                             std::to_string(tn1 + tn2));
  return rep;
}

}  // namespace permutex
