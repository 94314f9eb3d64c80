#include "frobmark/verdict.hpp"

namespace frobmark {

void to_json(nlohmann::json& j, const Verdict& v) {
  j = nlohmann::json{{"check", v.check}, {"pass", v.pass}, {"mode", v.mode}, {"checked", v.checked}};
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (!v.details.empty()) j["details"] = v.details;
}

}  // namespace frobmark
