// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace srm {

struct SuiteCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // counterexample or measured values
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool passed() const;
  // Detail of the first failing check, empty when everything passed.
  std::string first_counterexample() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int t_prime = 4;  // adversarial
  int graphs = 50;  // oracles
};

// oracles, spectral-bounds, adversarial, sis-threshold, pruning-bounds.
const std::vector<std::string>& suite_names();

// Throws ValidationError for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace srm
