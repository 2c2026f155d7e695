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

#include <iosfwd>
#include <string>

#include "srm/graph.hpp"
#include "srm/plan.hpp"

namespace srm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kUsageError = 2;

// Entry point of the srm tool. Everything the tool prints goes to out/err,
// so tests can drive it in-process.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

// Plan as CSV: step,item,cost,cumulative_cost,fraction_removed,lambda1.
// Row 0 is the input graph. Numbers use 12 significant digits; items use
// original node ids. The plan must carry a trajectory.
std::string plan_csv(const Graph& g, const RemovalPlan& plan);

// %.12g
std::string format_number(double x);

}  // namespace srm::cli
