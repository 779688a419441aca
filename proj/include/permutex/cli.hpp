#pragma once

// Batch command line front end. run() parses the argument vector, writes to
// the supplied streams, and returns the process exit code, so tests can
// drive it without spawning processes.

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "permutex/serialize.hpp"

namespace permutex::cli {

inline constexpr int kOk = 0;           // success
inline constexpr int kViolation = 1;    // domain error or verification violation
inline constexpr int kUsage = 2;        // bad options
inline constexpr int kResourceCap = 3;  // scan or depth budget exhausted

namespace detail {

struct WordChoice {
  WordPrefix word;
  Morphism morphism;
};

// --word accepts the two named words or a morphism literal iterated from
// --seed. Literal syntax errors surface as invalid_argument, prolongability
// as NotProlongable.
inline WordChoice make_word(const std::string& sel, unsigned seed) {
  if (sel == "thue-morse")
    return {thue_morse_word(), Morphism::thue_morse()};
  if (sel == "fibonacci")
    return {fibonacci_word(), Morphism::fibonacci()};
  const Morphism m = Morphism::parse(sel);
  return {iterate_fixed_point(m, static_cast<std::uint8_t>(seed & 1), 64), m};
}

inline nlohmann::json load_config(const std::string& path) {
  if (path.empty()) return nlohmann::json::object();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config file " + path + ": " + e.what());
  }
}

// Flags win over config values, config values win over defaults. Keys that
// are not options of the parsed subcommand are left alone.
template <class T>
void merge(const nlohmann::json& cfg, const char* key, const CLI::Option* opt,
           T& var) {
  if (!opt || opt->count() > 0) return;
  if (!cfg.contains(key)) return;
  try {
    var = cfg.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("config key '" + std::string(key) +
                                "' has the wrong type");
  }
}

inline void print_report_text(const VerifyReport& r, std::ostream& out) {
  out << r.statement << ": scanned " << r.scanned << ", violations "
      << r.violations.size() << "\n";
  const std::size_t shown = std::min<std::size_t>(r.violations.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) out << "  " << r.violations[i] << "\n";
  if (shown < r.violations.size())
    out << "  ... " << (r.violations.size() - shown) << " more\n";
}

inline int emit_reports(const std::vector<VerifyReport>& reports,
                        const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(r, out);
  }
  for (const auto& r : reports)
    if (!r.ok()) return kViolation;
  return kOk;
}

// The seven scan suites. Suites indexed by window length honor max_n, the
// two scan suites honor scan; zeros select per-suite defaults.

inline VerifyReport suite_order_preservation(WordChoice& wc, std::size_t scan,
                                             std::size_t depth) {
  return verify_order_preservation(wc.word, wc.morphism, scan ? scan : 100,
                                   depth ? depth : 256);
}

inline VerifyReport suite_interleaving(WordChoice& wc, std::size_t scan,
                                       std::size_t depth) {
  return verify_interleaving(wc.word, scan ? scan : 60, depth);
}

inline VerifyReport suite_forward_image(WordChoice& wc, std::size_t max_n,
                                        std::size_t depth) {
  if (!max_n) max_n = 16;
  VerifyReport rep{"forward-image", 0, {}};
  for (std::size_t span = 1; span <= max_n; ++span)
    for (std::size_t a = 0; a <= 200; ++a) {
      ++rep.scanned;
      const Subpermutation p = subpermutation(wc.word, a, span + 1, depth);
      try {
        if (phi(p) != subpermutation(wc.word, 2 * a, 2 * span + 1, depth))
          rep.violations.push_back("window a=" + std::to_string(a) +
                                   " span=" + std::to_string(span) +
                                   " image differs from the doubled window");
      } catch (const InconsistentForm& e) {
        rep.violations.push_back(e.what());
      } catch (const std::domain_error& e) {
        rep.violations.push_back(e.what());
      }
    }
  return rep;
}

inline VerifyReport suite_same_form(WordChoice& wc, std::size_t max_n,
                                    const EnumerateOptions& eo) {
  const std::size_t cap = max_n ? max_n : 16;
  VerifyReport rep{"same-form", 0, {}};
  for (std::size_t n = 2; n <= cap; ++n) {
    const PermSet ps = enumerate_perms(wc.word, n, eo);
    try {
      rep.scanned += same_form_census(n, ps.members()).groups.size();
    } catch (const CensusViolation& e) {
      ++rep.scanned;
      rep.violations.push_back("n=" + std::to_string(n) + ": " + e.what());
    }
  }
  return rep;
}

inline VerifyReport suite_type1_counts(WordChoice& wc, std::size_t max_n,
                                       const EnumerateOptions& eo) {
  const std::size_t cap = max_n ? max_n : 17;
  VerifyReport rep{"type1-counts", 0, {}};
  for (std::size_t r = 2; (std::size_t{1} << r) <= cap; ++r)
    for (std::size_t fl = std::size_t{1} << r;
         fl <= std::min(cap, (std::size_t{1} << r) + 1); ++fl) {
      ++rep.scanned;
      const PermSet ps = enumerate_perms(wc.word, fl + 1, eo);
      const std::size_t doubled = count_doubled_forms(fl + 1, ps.members());
      if (doubled != std::size_t{1} << r)
        rep.violations.push_back("factor length " + std::to_string(fl) +
                                 " has " + std::to_string(doubled) +
                                 " doubled forms, expected " +
                                 std::to_string(std::size_t{1} << r));
    }
  return rep;
}

inline VerifyReport suite_complexity_agreement(WordChoice& wc, std::size_t max_n,
                                               const EnumerateOptions& eo) {
  const std::size_t cap = max_n ? max_n : 20;
  VerifyReport rep{"complexity-agreement", 0, {}};
  for (std::size_t n = 6; n <= cap; ++n) {
    ++rep.scanned;
    const ComplexityReport r = complexity_report(wc.word, n, eo);
    if (r.tau_brute != r.tau_recursive || r.tau_brute != r.tau_closed)
      rep.violations.push_back("n=" + std::to_string(n) + ": enumerated " +
                               std::to_string(r.tau_brute) + ", recursive " +
                               std::to_string(r.tau_recursive) + ", closed " +
                               std::to_string(r.tau_closed));
    if (!r.bounds_ok)
      rep.violations.push_back("n=" + std::to_string(n) +
                               ": factor count bounds violated");
  }
  return rep;
}

inline VerifyReport suite_complement_closure(WordChoice& wc, std::size_t max_n,
                                             const EnumerateOptions& eo) {
  const std::size_t cap = max_n ? max_n : 10;
  VerifyReport rep{"complement-closure", 0, {}};
  for (std::size_t n = 1; n <= cap; ++n) {
    const PermSet ps = enumerate_perms(wc.word, n, eo);
    for (const auto& e : ps.entries) {
      ++rep.scanned;
      if (!ps.contains(complement_perm(e.perm)))
        rep.violations.push_back("complement of " + e.perm.text() +
                                 " missing at n=" + std::to_string(n));
    }
  }
  return rep;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"subpermutations of aperiodic binary words"};
  app.require_subcommand(1);

  struct {
    std::string word = "thue-morse";
    unsigned seed = 0;
    std::size_t length = 0;
    std::size_t n = 0;
    std::size_t from = 0;
    std::size_t to = 0;
    std::string format = "text";
    std::size_t scan = 0;
    std::size_t max_depth = 0;
    unsigned jobs = 1;
    std::string config;
    std::string suite = "all";
    std::size_t max_n = 0;
  } o;

  // Option handles per subcommand, keyed by config name, so the config
  // merge consults the options of whichever subcommand actually parsed.
  std::map<const CLI::App*, std::map<std::string, CLI::Option*>> handles;

  const auto add_word = [&](CLI::App* sub) {
    handles[sub]["word"] =
        sub->add_option("--word", o.word,
                        "thue-morse, fibonacci, or a morphism literal like "
                        "0>01,1>10");
    handles[sub]["seed"] =
        sub->add_option("--seed", o.seed, "seed letter for a morphism literal");
  };
  const auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", o.config,
                    "JSON file supplying defaults for unset flags");
  };
  const auto add_format = [&](CLI::App* sub, const char* help) {
    handles[sub]["format"] = sub->add_option("--format", o.format, help);
  };
  const auto add_scan_controls = [&](CLI::App* sub) {
    handles[sub]["scan"] =
        sub->add_option("--scan", o.scan, "initial scan length");
    handles[sub]["max-depth"] = sub->add_option("--max-depth", o.max_depth,
                                                "comparison depth budget");
    handles[sub]["jobs"] =
        sub->add_option("--jobs", o.jobs, "worker threads for scanning");
  };

  CLI::App* generate = app.add_subcommand("generate", "print a word prefix");
  add_word(generate);
  add_config(generate);
  handles[generate]["length"] =
      generate->add_option("--length", o.length, "prefix length");

  CLI::App* perms = app.add_subcommand(
      "perms", "list the permutations at one window length, grouped by form");
  add_word(perms);
  add_config(perms);
  handles[perms]["n"] = perms->add_option("--n", o.n, "window length");
  add_format(perms, "text or json");
  add_scan_controls(perms);

  CLI::App* complexity = app.add_subcommand(
      "complexity", "permutation complexity for a range of window lengths");
  add_word(complexity);
  add_config(complexity);
  handles[complexity]["n"] =
      complexity->add_option("--n", o.n, "single window length");
  handles[complexity]["from"] =
      complexity->add_option("--from", o.from, "first window length");
  handles[complexity]["to"] =
      complexity->add_option("--to", o.to, "last window length");
  add_format(complexity, "text, json, or csv");
  add_scan_controls(complexity);

  CLI::App* verify = app.add_subcommand(
      "verify", "run empirical checks of the structural statements");
  add_word(verify);
  add_config(verify);
  handles[verify]["suite"] = verify->add_option(
      "--suite", o.suite,
      "order-preservation, interleaving, forward-image, same-form, "
      "type1-counts, complexity-agreement, complement-closure, or all");
  handles[verify]["max-n"] = verify->add_option(
      "--max-n", o.max_n, "largest window length for length-based suites");
  add_format(verify, "text or json");
  add_scan_controls(verify);

  CLI::App* appendix = app.add_subcommand(
      "appendix", "full table of permutations for lengths 2 through 9");
  add_config(appendix);
  add_format(appendix, "text or json");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("permutex");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const CLI::App* active = app.get_subcommands().front();
  const auto opt = [&](const char* key) -> const CLI::Option* {
    const auto sub = handles.find(active);
    if (sub == handles.end()) return nullptr;
    const auto it = sub->second.find(key);
    return it == sub->second.end() ? nullptr : it->second;
  };

  try {
    const nlohmann::json cfg = detail::load_config(o.config);
    detail::merge(cfg, "word", opt("word"), o.word);
    detail::merge(cfg, "seed", opt("seed"), o.seed);
    detail::merge(cfg, "length", opt("length"), o.length);
    detail::merge(cfg, "n", opt("n"), o.n);
    detail::merge(cfg, "from", opt("from"), o.from);
    detail::merge(cfg, "to", opt("to"), o.to);
    detail::merge(cfg, "format", opt("format"), o.format);
    detail::merge(cfg, "scan", opt("scan"), o.scan);
    detail::merge(cfg, "max-depth", opt("max-depth"), o.max_depth);
    detail::merge(cfg, "jobs", opt("jobs"), o.jobs);
    detail::merge(cfg, "suite", opt("suite"), o.suite);
    detail::merge(cfg, "max-n", opt("max-n"), o.max_n);

    const EnumerateOptions eo{o.scan, 0, o.max_depth, o.jobs};

    if (generate->parsed()) {
      if (o.length == 0) {
        err << "generate: --length is required\n";
        return kUsage;
      }
      detail::WordChoice wc = detail::make_word(o.word, o.seed);
      out << to_string(wc.word.prefix(o.length)) << "\n";
      return kOk;
    }

    if (perms->parsed()) {
      if (o.n == 0) {
        err << "perms: --n is required\n";
        return kUsage;
      }
      if (o.format != "text" && o.format != "json") {
        err << "perms: unknown format '" << o.format << "'\n";
        return kUsage;
      }
      detail::WordChoice wc = detail::make_word(o.word, o.seed);
      const PermSet ps = enumerate_perms(wc.word, o.n, eo);
      const Census census = same_form_census(o.n, ps.members());
      if (o.format == "json")
        out << to_json(census).dump(2) << "\n";
      else
        out << census_lines(census);
      return kOk;
    }

    if (complexity->parsed()) {
      std::size_t from = o.from, to = o.to;
      if (o.n != 0) from = to = o.n;
      if (from < 2 || to < from) {
        err << "complexity: needs --n or --from/--to with 2 <= from <= to\n";
        return kUsage;
      }
      if (o.format != "text" && o.format != "json" && o.format != "csv") {
        err << "complexity: unknown format '" << o.format << "'\n";
        return kUsage;
      }
      detail::WordChoice wc = detail::make_word(o.word, o.seed);
      std::vector<ComplexityReport> rows;
      rows.reserve(to - from + 1);
      for (std::size_t n = from; n <= to; ++n)
        rows.push_back(complexity_report(wc.word, n, eo));
      if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        out << arr.dump(2) << "\n";
      } else if (o.format == "csv") {
        out << csv_header() << "\n";
        for (const auto& r : rows) out << csv_row(r) << "\n";
      } else {
        for (const auto& r : rows) out << text_line(r) << "\n";
      }
      return kOk;
    }

    if (verify->parsed()) {
      if (o.format != "text" && o.format != "json") {
        err << "verify: unknown format '" << o.format << "'\n";
        return kUsage;
      }
      static const std::vector<std::string> kSuites{
          "order-preservation",   "interleaving",
          "forward-image",        "same-form",
          "type1-counts",         "complexity-agreement",
          "complement-closure"};
      std::vector<std::string> selected;
      if (o.suite == "all")
        selected = kSuites;
      else if (std::find(kSuites.begin(), kSuites.end(), o.suite) !=
               kSuites.end())
        selected = {o.suite};
      else {
        err << "verify: unknown suite '" << o.suite << "'\n";
        return kUsage;
      }
      detail::WordChoice wc = detail::make_word(o.word, o.seed);
      std::vector<VerifyReport> reports;
      for (const auto& s : selected) {
        if (s == "order-preservation")
          reports.push_back(
              detail::suite_order_preservation(wc, o.scan, o.max_depth));
        else if (s == "interleaving")
          reports.push_back(
              detail::suite_interleaving(wc, o.scan, o.max_depth));
        else if (s == "forward-image")
          reports.push_back(
              detail::suite_forward_image(wc, o.max_n, o.max_depth));
        else if (s == "same-form")
          reports.push_back(detail::suite_same_form(wc, o.max_n, eo));
        else if (s == "type1-counts")
          reports.push_back(detail::suite_type1_counts(wc, o.max_n, eo));
        else if (s == "complexity-agreement")
          reports.push_back(
              detail::suite_complexity_agreement(wc, o.max_n, eo));
        else
          reports.push_back(
              detail::suite_complement_closure(wc, o.max_n, eo));
      }
      return detail::emit_reports(reports, o.format, out);
    }

    // appendix
    if (o.format != "text" && o.format != "json") {
      err << "appendix: unknown format '" << o.format << "'\n";
      return kUsage;
    }
    detail::WordChoice wc = detail::make_word("thue-morse", 0);
    if (o.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t n = 2; n <= 9; ++n)
        arr.push_back(to_json(
            same_form_census(n, enumerate_perms(wc.word, n).members())));
      out << arr.dump(2) << "\n";
    } else {
      for (std::size_t n = 2; n <= 9; ++n) {
        const PermSet ps = enumerate_perms(wc.word, n);
        out << "length " << n << "\n"
            << census_lines(same_form_census(n, ps.members()));
        if (n < 9) out << "\n";
      }
    }
    return kOk;
  } catch (const NonStabilized& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const UnresolvedComparison& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kViolation;
  }
}

}  // namespace permutex::cli
