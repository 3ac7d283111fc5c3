#include "dahakit/report.hpp"

#include <json.hpp>

namespace daha {

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["pass"] = allPass();
  j["seconds"] = seconds;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.witness.empty()) e["witness"] = c.witness;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j.dump(2);
}

std::string Report::text() const {
  std::string out = "[" + suite + "]\n";
  for (const auto& c : checks) {
    out += (c.pass ? "  ok   " : "  FAIL ") + c.name;
    if (!c.pass && !c.witness.empty()) out += "  (" + c.witness + ")";
    out += "\n";
  }
  return out;
}

}  // namespace daha
