#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace multlab::cli {

using json = nlohmann::json;

struct InstanceOutcome {
  double residual = 0.0;
  bool passed = true;
  json instance;  // inputs, reported in full on failure
};

struct Property {
  std::string name;
  std::string description;
  double tolerance = 0.0;
  int default_count = 0;
  // Draws instance `index` from its own stream of the seed.
  std::function<InstanceOutcome(std::uint64_t seed, int index)> run;
};

const std::vector<Property>& registry();
// Throws UnknownProperty.
const Property& find_property(const std::string& name);

struct VerifyOptions {
  std::uint64_t seed = 1;
  int count = -1;    // < 0: the property's default
  int threads = 0;   // <= 0: hardware concurrency, capped by MULTLAB_THREADS
};

// {"property","seed","count","tolerance","failures":[...],"failure_count",
//  "max_residual","passed","timing":{"wall_seconds"}}. Everything except
// "timing" is a pure function of the property, seed and count.
json verify(const Property& property, const VerifyOptions& options);

int thread_budget(int requested);

}  // namespace multlab::cli
