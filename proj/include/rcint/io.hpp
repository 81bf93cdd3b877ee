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

// File formats: JSON capacity tables and CSV alternatives.
//
// Interval capacity:  {"n", "top", "labels", "entries": [{"A": [...], "B": [...], "v"}]}
//                     optional "mobius": true marks a Möbius table (unvalidated)
// Set capacity:       same, entries carry only "A"
// Bipolar capacity:   entries carry "A+", "B+", "A-", "B-"
// m-point capacity:   {"n", "m", "top", "labels", "entries": [{"chain": [[...], ...], "v"}]}
// Level-dependent:    {"n", "top", "labels", "lower": num|null,
//                      "pieces": [{"t_upper": num|null, "capacity": {"entries": [...]}}]}
//
// Numbers may be JSON numbers or strings ("3/10", "0.3"). Dense tables must
// list every element exactly once.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rcint/capacity.hpp"
#include "rcint/extensions.hpp"
#include "rcint/interval.hpp"
#include "rcint/mobius.hpp"

namespace rcint::io {

using Json = nlohmann::json;

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

template <Scalar T>
T read_scalar(const Json& value, std::string_view where);
template <Scalar T>
Json write_scalar(const T& value);

/// "labels" if present (length n, distinct), otherwise "1".."n".
Labels read_labels(const Json& doc, int n);
CriterionSet read_set(const Json& list, const Labels& labels, std::string_view where);
Json write_set(const CriterionSet& s, const Labels& labels);

/// True if the entries carry only "A" (a capacity on 2^N).
bool is_set_capacity_json(const Json& doc);
bool is_mobius_json(const Json& doc);

template <Scalar T>
struct QTableDocument {
  Labels labels;
  T top;
  QTable<T> table;
  bool mobius = false;
};

template <Scalar T>
QTableDocument<T> parse_q_table(const Json& doc);
/// Validated interval capacity; errors name the offending pair by label.
template <Scalar T>
IntervalCapacity<T> to_capacity(const QTableDocument<T>& doc);
template <Scalar T>
Json q_table_to_json(const Labels& labels, const T& top, std::span<const T> values, bool mobius);

template <Scalar T>
struct SetCapacityDocument {
  Labels labels;
  Capacity<T> capacity;
};
template <Scalar T>
SetCapacityDocument<T> parse_set_capacity(const Json& doc);
template <Scalar T>
Json set_capacity_to_json(const Labels& labels, const Capacity<T>& nu);

template <Scalar T>
struct BipolarDocument {
  Labels labels;
  BipolarIntervalCapacity<T> capacity;
};
template <Scalar T>
BipolarDocument<T> parse_bipolar(const Json& doc);

template <Scalar T>
struct LevelDocument {
  Labels labels;
  LevelDependentCapacity<T> capacity;
};
template <Scalar T>
LevelDocument<T> parse_level(const Json& doc);

template <Scalar T>
struct MPointDocument {
  Labels labels;
  MPointCapacity<T> capacity;
};
template <Scalar T>
MPointDocument<T> parse_mpoint_capacity(const Json& doc);

template <Scalar T>
struct Alternative {
  std::string id;
  IntervalVector<T> x;
};

/// Header `id,<label>_lo,<label>_hi,...` in any criterion order; columns are
/// matched to `labels` by name. `source` prefixes error messages.
template <Scalar T>
std::vector<Alternative<T>> read_alternatives_csv(std::istream& in, const Labels& labels,
                                                  std::string_view source);
template <Scalar T>
std::vector<Alternative<T>> read_alternatives_file(const std::filesystem::path& path, const Labels& labels);

template <Scalar T>
struct MPointAlternative {
  std::string id;
  MPointVector<T> x;
};

/// Header `id,<label>_1,...,<label>_m,...`.
template <Scalar T>
std::vector<MPointAlternative<T>> read_mpoint_csv(std::istream& in, const Labels& labels, int m,
                                                  std::string_view source);
template <Scalar T>
std::vector<MPointAlternative<T>> read_mpoint_file(const std::filesystem::path& path, const Labels& labels,
                                                   int m);

}  // namespace rcint::io
