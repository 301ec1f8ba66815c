#include "grass/report.hpp"

namespace grass {

void Report::record(nlohmann::json detail) {
  if (detail.is_object() && detail.contains("pass") && !detail["pass"].get<bool>()) pass = false;
  details.push_back(std::move(detail));
}

void Report::fail(nlohmann::json detail) {
  pass = false;
  if (detail.is_object()) detail["pass"] = false;
  details.push_back(std::move(detail));
}

nlohmann::json Report::to_json() const {
  return {{"check", check}, {"k", context.k()}, {"n", context.n()}, {"pass", pass}, {"details", details}};
}

}  // namespace grass
