#pragma once

// nlohmann::json records for the report types. Field names are stable and
// shared with the command-line tool's --json output.

#include <nlohmann/json.hpp>

#include "parking/cycle_lemma.hpp"
#include "parking/enumeration.hpp"
#include "parking/shi_arrangement.hpp"
#include "parking/street.hpp"
#include "parking/word.hpp"

namespace parking {

inline void to_json(nlohmann::json& j, const PrefWord& w) {
  j = std::vector<Value>(w.begin(), w.end());
}

inline void to_json(nlohmann::json& j, const CountReport& r) {
  j = {{"n", r.n},
       {"total_words", r.total_words},
       {"matching", r.matching},
       {"formula_value", r.formula_value},
       {"agrees", r.agrees},
       {"elapsed", r.elapsed_seconds}};
}

inline void to_json(nlohmann::json& j, const Verdict& v) {
  j = {{"holds", v.holds}, {"words_checked", v.words_checked}};
  if (!v.holds) j["counterexample"] = v.counterexample;
}

inline void to_json(nlohmann::json& j, const Decomposition& d) {
  j = {{"k", d.k}, {"b", d.b}};
}

inline void to_json(nlohmann::json& j, const ParkOutcome& o) {
  j = {{"success", o.success}};
  if (o.success) j["assignment"] = o.assignment;
  else j["failed_car"] = *o.failed_car;
}

inline void to_json(nlohmann::json& j, const Region& r) {
  j = {{"signs", r.sign_vector.str()},
       {"label", r.label},
       {"bounded", r.bounded},
       {"depth", r.bfs_depth}};
}

}  // namespace parking
