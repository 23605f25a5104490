#pragma once

// Command-line front end. `run` is kept separate from main() so the test
// suite can drive it in-process and compare transcripts.
//
// Exit codes: 0 success / true, 1 predicate false or verification failed,
// 2 invalid input, 3 size guard exceeded.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "parking/json.hpp"
#include "parking/parking.hpp"

namespace parking::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kInvalid = 2, kGuard = 3 };

namespace detail {

inline PrefWord word_with_own_bound(const std::string& literal) {
  auto v = parse_word(literal);
  const Value bound = *std::max_element(v.begin(), v.end());
  return PrefWord(std::move(v), bound);
}

inline PrefWord word_in_prime_domain(const std::string& literal) {
  auto v = parse_word(literal);
  const auto n = static_cast<Value>(v.size());
  if (n < 2) throw domain_error("word must have at least two entries");
  return PrefWord(std::move(v), n - 1);
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parking functions, prime parking functions and the Shi arrangement", "parking"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  unsigned threads = 1;
  Value max_n = 0;
  app.add_flag("--json", as_json, "Emit JSON records instead of text");
  app.add_option("--threads", threads, "Worker threads for exhaustive scans")->check(CLI::Range(1u, 256u));
  app.add_option("--max-n", max_n, "Raise the size guard of exhaustive oracles");

  std::string word;
  bool prime = false;
  Value k = 0;
  Value n = 0;
  std::string street = "standard";
  std::string what;
  std::optional<std::uint64_t> seed;
  std::size_t count = 1;

  auto* check = app.add_subcommand("check", "Test the parking-function predicates");
  check->add_option("--word", word, "Word literal")->required();
  check->add_flag("--prime", prime, "Test primality instead");

  auto* decomp = app.add_subcommand("decompose", "Split a word in [n-1]^n into shift k and prime word b");
  decomp->add_option("--word", word)->required();

  auto* recomp = app.add_subcommand("recompose", "Shift a prime word b by k back to a");
  recomp->add_option("--word", word)->required();
  recomp->add_option("--k", k)->required();

  auto* sim = app.add_subcommand("simulate", "Park the cars of a word on a street");
  sim->add_option("--word", word)->required();
  sim->add_option("--street", street)->check(CLI::IsMember({"standard", "prime", "rotated"}));
  auto* sim_k = sim->add_option("--k", k, "Rotation for --street rotated");

  auto* strip = app.add_subcommand("strip", "Remove the first 1 from a word");
  strip->add_option("--word", word)->required();

  auto* cnt = app.add_subcommand("count", "Count (prime) parking functions by exhaustive scan");
  cnt->add_option("--n", n)->required();
  cnt->add_flag("--prime", prime);

  auto* ver = app.add_subcommand("verify", "Run an exhaustive verification");
  ver->add_option("--n", n)->required();
  ver->add_option("--what", what)
      ->required()
      ->check(CLI::IsMember({"bijection", "proposition", "pak-stanley"}));

  auto* smp = app.add_subcommand("sample", "Draw uniform prime parking functions");
  smp->add_option("--n", n)->required();
  smp->add_option("--seed", seed);
  smp->add_option("--count", count)->check(CLI::PositiveNumber);

  auto* shi = app.add_subcommand("shi", "List the regions of the Shi arrangement");
  shi->add_option("--n", n)->required();

  std::vector<const char*> argv{"parking"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  const EnumerationOptions opts{threads, max_n};
  using nlohmann::json;

  try {
    if (check->parsed()) {
      const auto w = PrefWord::square(parse_word(word));
      const bool result = prime ? is_prime_parking_function(w) : is_parking_function(w);
      if (as_json) out << json{{"word", w}, {"prime", prime}, {"result", result}}.dump() << "\n";
      else out << detail::bool_text(result) << "\n";
      return result ? kOk : kFalse;
    }

    if (decomp->parsed()) {
      const auto d = decompose(detail::word_in_prime_domain(word));
      if (as_json) out << json(d).dump() << "\n";
      else out << "k=" << d.k << " b=" << d.b << "\n";
      return kOk;
    }

    if (recomp->parsed()) {
      const auto a = recompose(detail::word_in_prime_domain(word), k);
      if (as_json) out << json{{"a", a}}.dump() << "\n";
      else out << "a=" << a << "\n";
      return kOk;
    }

    if (sim->parsed()) {
      const auto w = detail::word_with_own_bound(word);
      if (street != "rotated" && sim_k->count() > 0)
        throw invalid_input("--k only applies to --street rotated");
      if (street == "rotated" && sim_k->count() == 0)
        throw invalid_input("--street rotated needs --k");
      const auto labels = street == "standard" ? standard_street(w.n())
                          : street == "prime"  ? prime_street(w.n())
                                               : rotated_street(w.n(), k);
      const auto outcome = simulate(w, labels);
      if (as_json) {
        json j = outcome;
        j["labels"] = std::vector<Value>(labels.labels().begin(), labels.labels().end());
        out << j.dump() << "\n";
      } else if (outcome.success) {
        out << render_street(outcome, labels);
      } else {
        out << "failed_car=" << *outcome.failed_car << "\n";
      }
      return outcome.success ? kOk : kFalse;
    }

    if (strip->parsed()) {
      const auto s = strip_first_one(detail::word_with_own_bound(word));
      if (as_json) out << json{{"word", s}}.dump() << "\n";
      else out << s << "\n";
      return kOk;
    }

    if (cnt->parsed()) {
      const auto r = prime ? count_prime_parking_functions(n, opts) : count_parking_functions(n, opts);
      if (as_json) out << json(r).dump() << "\n";
      else out << "matching=" << r.matching << " formula=" << r.formula_value
               << " agrees=" << detail::bool_text(r.agrees) << "\n";
      return r.agrees ? kOk : kFalse;
    }

    if (ver->parsed()) {
      const auto v = what == "bijection"     ? verify_bijection(n, opts)
                     : what == "proposition" ? verify_proposition(n, opts)
                                             : verify_pak_stanley(n, opts);
      if (as_json) {
        json j = v;
        j["n"] = n;
        j["what"] = what;
        out << j.dump() << "\n";
      } else {
        out << "holds=" << detail::bool_text(v.holds) << " checked=" << v.words_checked;
        if (!v.holds) out << " counterexample=\"" << v.counterexample << "\"";
        out << "\n";
      }
      return v.holds ? kOk : kFalse;
    }

    if (smp->parsed()) {
      if (!seed && as_json) throw invalid_input("--json output requires an explicit --seed");
      const std::uint64_t s =
          seed ? *seed
               : static_cast<std::uint64_t>(std::chrono::system_clock::now().time_since_epoch().count());
      const auto words = sample_primes(n, s, count);
      if (as_json) {
        out << json{{"n", n}, {"seed", s}, {"samples", words}}.dump() << "\n";
      } else {
        for (const auto& w : words) out << w << "\n";
      }
      return kOk;
    }

    if (shi->parsed()) {
      const auto regions = enumerate_regions(n, opts);
      if (as_json) {
        out << json(regions).dump() << "\n";
      } else {
        for (const auto& r : regions) {
          out << r.sign_vector << " label=" << format_word(r.label)
              << " bounded=" << detail::bool_text(r.bounded) << " depth=" << r.bfs_depth << "\n";
        }
      }
      return kOk;
    }
  } catch (const guard_error& e) {
    err << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace parking::cli
