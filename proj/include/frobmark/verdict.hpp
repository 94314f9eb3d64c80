#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace frobmark {

/// Outcome of a verification run. `witness` names the first failing input.
struct Verdict {
  std::string check;
  bool pass = true;
  std::string mode;  // "exhaustive", "sampled", "symbolic", "eval", "exact"
  std::uint64_t checked = 0;
  std::string witness;
  nlohmann::json details = nlohmann::json::object();

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
};

void to_json(nlohmann::json& j, const Verdict& v);

/// How tuple-indexed checks cover G^k: every tuple while |G|^k is within
/// `exhaustive_limit`, otherwise `samples` tuples from a generator seeded by `seed`.
struct CoverageOptions {
  std::uint64_t exhaustive_limit = 1'000'000;
  std::uint64_t samples = 20'000;
  std::uint64_t seed = 1;
};

}  // namespace frobmark
