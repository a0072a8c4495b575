#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mixed_milnor/report.hpp"

namespace mixed_milnor {

struct Request {
  std::string command;
  std::string poly;                // polynomial text, or
  std::string corpus;              // corpus name with params
  std::vector<int> params;
  std::string poly2, corpus2;      // second operand for join
  std::vector<int> params2;
  std::uint64_t seed = 0;
  int budget = 64;
  std::optional<double> radius;    // tame: probe radius; transversality: sphere radius
  double epsilon = 0.1;
  double delta = 1e-3;
  std::optional<double> r0;        // stable radius for rho_0
  int samples = 0;                 // 0: command default
  std::string I;                   // "1,3" (1-based)
  std::string arc;
  std::string point;               // "1, 0" or "(1/2+i), 0.25"
  std::vector<int> a, b;           // pullback spec
  bool strict = false;
};

struct Outcome {
  Json report;
  int exit_code = 0;
};

// Runs one request. Errors come back as {"error": {...}} with exit code 1.
Outcome execute(const Request& req);

Request request_from_json(const Json& j);

// Entry point behind the mixed-milnor binary.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mixed_milnor
