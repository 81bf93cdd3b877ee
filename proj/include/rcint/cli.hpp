// Copyright 2026 The rcint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. Each command writes results to `out` (or to the
// configured file) and diagnostics to `err`, and returns the process exit
// code: 0 success, 2 invalid input, 1 I/O failure.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rcint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitInvalid = 2;

enum class Mode { Exact, Float };
enum class Format { Csv, Json };

enum class IntegralKind {
  Rci,
  RciMobius,
  Rsi,
  ShilkretRobust,
  Choquet,
  Sugeno,
  Shilkret,
  Bipolar,
  Level,
  Concave,
  MPoint,
};

std::optional<IntegralKind> parse_kind(std::string_view name);
std::string_view to_string(IntegralKind kind);
std::optional<Mode> parse_mode(std::string_view name);

/// RCINT_MODE if set to exact|float, otherwise float.
Mode default_mode();

struct RunConfig {
  IntegralKind kind = IntegralKind::Rci;
  std::string capacity;
  std::string alts;
  Mode mode = Mode::Float;
  Format format = Format::Csv;
  std::string out;  // empty: standard output
  int samples = 0;  // > 0 adds a midpoint-rule column (rci only)
};

struct CheckConfig {
  std::string capacity;
  Mode mode = Mode::Float;
};

struct MobiusConfig {
  std::string capacity;
  Mode mode = Mode::Float;
  std::string out;
};

struct SeparableConfig {
  std::string alpha;
  std::string lower;
  std::string upper;
  Mode mode = Mode::Exact;
  std::string out;
};

/// `id,value` per alternative, input order.
int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// `rank,id,value,tied`, best first; equal values share a rank.
int cmd_rank(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Writes the Möbius table as capacity JSON with "mobius": true.
int cmd_mobius(const MobiusConfig& cfg, std::ostream& out, std::ostream& err);
/// Validates any supported capacity file; names the first violation.
int cmd_check(const CheckConfig& cfg, std::ostream& out, std::ostream& err);
/// μ(A,B) = α·ν̲(A) + (1-α)·ν̄(B) from two set-capacity files.
int cmd_gen_separable(const SeparableConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses arguments (program name first) and dispatches to a command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcint::cli
