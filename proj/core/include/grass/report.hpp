#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "grass/context.hpp"

namespace grass {

/// Outcome of one structural check on one Grassmannian.
struct Report {
  Report(std::string check_name, const RingContext& ctx) : check(std::move(check_name)), context(ctx) {}

  std::string check;
  RingContext context;
  bool pass = true;
  nlohmann::json details = nlohmann::json::array();

  /// Appends a detail record; a record with "pass": false fails the report.
  void record(nlohmann::json detail);
  void fail(nlohmann::json detail);

  /// {"check": ..., "k": ..., "n": ..., "pass": ..., "details": [...]}
  nlohmann::json to_json() const;
};

}  // namespace grass
