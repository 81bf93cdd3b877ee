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

#include "rcint/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace rcint::io {

namespace {

std::string at(std::string_view where, std::string_view what) {
  return std::string(where) + ": " + std::string(what);
}

const Json& require(const Json& doc, const char* key, std::string_view where) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::Parse, at(where, std::string("missing \"") + key + "\""));
  }
  return doc.at(key);
}

int read_n(const Json& doc) {
  if (doc.contains("n")) {
    const Json& n = doc.at("n");
    if (!n.is_number_integer()) throw Error(ErrorCode::Parse, "\"n\" must be an integer");
    const int value = n.get<int>();
    check_criteria_count(value);
    return value;
  }
  if (doc.contains("labels") && doc.at("labels").is_array()) {
    const int value = static_cast<int>(doc.at("labels").size());
    check_criteria_count(value);
    return value;
  }
  throw Error(ErrorCode::Parse, "missing \"n\"");
}

template <Scalar T>
T read_top(const Json& doc) {
  if (!doc.contains("top")) return T(1);
  return read_scalar<T>(doc.at("top"), "top");
}

const Json& entries_of(const Json& doc, std::string_view where) {
  const Json& entries = require(doc, "entries", where);
  if (!entries.is_array()) throw Error(ErrorCode::Parse, at(where, "\"entries\" must be an array"));
  return entries;
}

/// Dense values from entries whose codes are computed by `code_of`; every
/// code in [0, size) must appear exactly once.
template <Scalar T, class CodeOf, class Describe>
std::vector<T> dense_values(const Json& entries, std::uint64_t size, std::string_view where, CodeOf code_of,
                            Describe describe) {
  std::vector<std::optional<T>> seen(size);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string here = std::string(where) + ".entries[" + std::to_string(k) + "]";
    const Json& entry = entries[k];
    const std::uint64_t code = code_of(entry, here);
    if (seen[code]) throw Error(ErrorCode::Parse, at(here, "duplicate entry for " + describe(code)));
    seen[code] = read_scalar<T>(require(entry, "v", here), here + ".v");
  }
  std::vector<T> values;
  values.reserve(size);
  for (std::uint64_t code = 0; code < size; ++code) {
    if (!seen[code]) throw Error(ErrorCode::Parse, at(where, "no entry for " + describe(code)));
    values.push_back(std::move(*seen[code]));
  }
  return values;
}

template <Scalar T>
std::vector<T> q_values(const Json& doc, int n, const Labels& labels, std::string_view where) {
  const auto describe = [&](std::uint64_t code) {
    return format_qpair(q_from_index(QIndex{static_cast<std::uint32_t>(code)}, n), labels);
  };
  const auto code_of = [&](const Json& entry, const std::string& here) -> std::uint64_t {
    const CriterionSet a = read_set(require(entry, "A", here), labels, here + ".A");
    const CriterionSet b = read_set(require(entry, "B", here), labels, here + ".B");
    if (!a.is_subset_of(b)) throw Error(ErrorCode::NotNested, at(here, "A is not contained in B"));
    return detail::q_code(n, a.bits(), b.bits());
  };
  return dense_values<T>(entries_of(doc, where), q_lattice(n).size(), where, code_of, describe);
}

// ---------------------------------------------------------------------------
// CSV

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_row(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> cells;
};

/// Non-blank, non-comment rows; the first is the header.
std::vector<CsvRow> read_rows(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    rows.push_back({number, split_row(content)});
  }
  return rows;
}

std::string where_line(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

/// Maps every non-id column to (criterion, slot) by splitting the name at
/// its last underscore; `slot_of` turns the suffix into a slot index.
template <class SlotOf>
std::vector<std::pair<int, int>> header_layout(const CsvRow& header, const Labels& labels, int slots,
                                               std::string_view source, SlotOf slot_of) {
  const std::string here = where_line(source, header.line);
  if (header.cells.empty() || header.cells.front() != "id") {
    throw Error(ErrorCode::Parse, at(here, "first column must be \"id\""));
  }
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> layout;
  std::vector<int> filled(labels.size() * static_cast<std::size_t>(slots), 0);
  for (std::size_t c = 1; c < header.cells.size(); ++c) {
    const std::string& name = header.cells[c];
    const auto underscore = name.rfind('_');
    const auto label = underscore == std::string::npos ? name : name.substr(0, underscore);
    const auto found = index.find(label);
    const int slot = underscore == std::string::npos ? -1 : slot_of(name.substr(underscore + 1));
    if (found == index.end() || slot < 0 || slot >= slots) {
      throw Error(ErrorCode::Parse, at(here, "unknown column \"" + name + "\""));
    }
    auto& mark = filled[static_cast<std::size_t>(found->second * slots + slot)];
    if (mark++ > 0) throw Error(ErrorCode::Parse, at(here, "duplicate column \"" + name + "\""));
    layout.emplace_back(found->second, slot);
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (int s = 0; s < slots; ++s) {
      if (filled[i * static_cast<std::size_t>(slots) + static_cast<std::size_t>(s)] == 0) {
        throw Error(ErrorCode::Parse, at(here, "no column for criterion \"" + labels[i] + "\""));
      }
    }
  }
  return layout;
}

/// values[criterion][slot] for one data row.
template <Scalar T>
std::vector<std::vector<T>> row_values(const CsvRow& row, const std::vector<std::pair<int, int>>& layout,
                                       std::size_t n, int slots, const std::string& here) {
  if (row.cells.size() != layout.size() + 1) {
    throw Error(ErrorCode::Parse, at(here, "expected " + std::to_string(layout.size() + 1) + " cells, found " +
                                               std::to_string(row.cells.size())));
  }
  std::vector<std::vector<T>> values(n, std::vector<T>(static_cast<std::size_t>(slots)));
  for (std::size_t c = 0; c < layout.size(); ++c) {
    const auto [criterion, slot] = layout[c];
    try {
      values[static_cast<std::size_t>(criterion)][static_cast<std::size_t>(slot)] =
          parse_scalar<T>(row.cells[c + 1]);
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, at(here, e.message()));
    }
  }
  return values;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return in;
}

}  // namespace

// ---------------------------------------------------------------------------

Json read_json_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

template <Scalar T>
T read_scalar(const Json& value, std::string_view where) {
  if (value.is_string()) {
    try {
      return parse_scalar<T>(value.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, at(where, e.message()));
    }
  }
  if (value.is_number_integer()) {
    if constexpr (kIsExact<T>) {
      return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>()) : Rational(value.get<std::int64_t>());
    } else {
      return value.get<double>();
    }
  }
  if (value.is_number_float()) return scalar_from_double<T>(value.get<double>());
  throw Error(ErrorCode::Parse, at(where, "expected a number"));
}

template <Scalar T>
Json write_scalar(const T& value) {
  if constexpr (kIsExact<T>) {
    if (boost::multiprecision::denominator(value) == 1 && boost::multiprecision::abs(value) < Rational(1LL << 53)) {
      return Json(boost::multiprecision::numerator(value).template convert_to<long long>());
    }
    return Json(format_scalar(value));
  } else {
    return Json(value);
  }
}

Labels read_labels(const Json& doc, int n) {
  if (!doc.contains("labels")) return default_labels(n);
  const Json& list = doc.at("labels");
  if (!list.is_array() || static_cast<int>(list.size()) != n) {
    throw Error(ErrorCode::Parse, "\"labels\" must list " + std::to_string(n) + " names");
  }
  Labels labels;
  for (const auto& item : list) {
    if (!item.is_string()) throw Error(ErrorCode::Parse, "labels must be strings");
    const auto name = item.get<std::string>();
    if (name.empty() || name.find_first_of(",{};") != std::string::npos) {
      throw Error(ErrorCode::Parse, "label \"" + name + "\" is empty or contains , { } ;");
    }
    if (std::find(labels.begin(), labels.end(), name) != labels.end()) {
      throw Error(ErrorCode::Parse, "duplicate label \"" + name + "\"");
    }
    labels.push_back(name);
  }
  return labels;
}

CriterionSet read_set(const Json& list, const Labels& labels, std::string_view where) {
  if (!list.is_array()) throw Error(ErrorCode::Parse, at(where, "expected a list of labels"));
  const int n = static_cast<int>(labels.size());
  CriterionSet s = CriterionSet::empty(n);
  for (const auto& item : list) {
    if (!item.is_string()) throw Error(ErrorCode::Parse, at(where, "labels must be strings"));
    const auto name = item.get<std::string>();
    const auto found = std::find(labels.begin(), labels.end(), name);
    if (found == labels.end()) throw Error(ErrorCode::Parse, at(where, "unknown label \"" + name + "\""));
    s = s.with(static_cast<int>(found - labels.begin()));
  }
  return s;
}

Json write_set(const CriterionSet& s, const Labels& labels) {
  Json out = Json::array();
  for (int i : s.members()) out.push_back(labels[static_cast<std::size_t>(i)]);
  return out;
}

bool is_set_capacity_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("entries") || !doc.at("entries").is_array()) return false;
  const Json& entries = doc.at("entries");
  return !entries.empty() && entries.front().is_object() && entries.front().contains("A") &&
         !entries.front().contains("B");
}

bool is_mobius_json(const Json& doc) {
  return doc.is_object() && doc.contains("mobius") && doc.at("mobius").is_boolean() && doc.at("mobius").get<bool>();
}

template <Scalar T>
QTableDocument<T> parse_q_table(const Json& doc) {
  const int n = read_n(doc);
  Labels labels = read_labels(doc, n);
  T top = read_top<T>(doc);
  QTable<T> table(n, q_values<T>(doc, n, labels, "capacity"));
  return {std::move(labels), std::move(top), std::move(table), is_mobius_json(doc)};
}

template <Scalar T>
IntervalCapacity<T> to_capacity(const QTableDocument<T>& doc) {
  detail::throw_first(validate_interval_capacity<T>(doc.table.n, doc.top, doc.table.values, doc.labels));
  return IntervalCapacity<T>(doc.table.n, doc.top, doc.table.values);
}

template <Scalar T>
Json q_table_to_json(const Labels& labels, const T& top, std::span<const T> values, bool mobius) {
  const int n = static_cast<int>(labels.size());
  Json doc{{"n", n}, {"top", write_scalar(top)}, {"labels", labels}};
  if (mobius) doc["mobius"] = true;
  Json entries = Json::array();
  const auto pairs = enumerate_q(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    entries.push_back({{"A", write_set(pairs[k].sure(), labels)},
                       {"B", write_set(pairs[k].possible(), labels)},
                       {"v", write_scalar(values[k])}});
  }
  doc["entries"] = std::move(entries);
  return doc;
}

template <Scalar T>
SetCapacityDocument<T> parse_set_capacity(const Json& doc) {
  const int n = read_n(doc);
  Labels labels = read_labels(doc, n);
  const T top = read_top<T>(doc);
  const auto describe = [&](std::uint64_t bits) {
    return format_set(CriterionSet::from_bits(n, static_cast<CriterionSet::Bits>(bits)), labels);
  };
  const auto code_of = [&](const Json& entry, const std::string& here) -> std::uint64_t {
    return read_set(require(entry, "A", here), labels, here + ".A").bits();
  };
  auto values = dense_values<T>(entries_of(doc, "capacity"), std::uint64_t{1} << n, "capacity", code_of, describe);
  detail::throw_first(validate_capacity<T>(n, top, values, labels));
  return {std::move(labels), Capacity<T>(n, top, std::move(values))};
}

template <Scalar T>
Json set_capacity_to_json(const Labels& labels, const Capacity<T>& nu) {
  const int n = nu.n();
  Json doc{{"n", n}, {"top", write_scalar(nu.top())}, {"labels", labels}};
  Json entries = Json::array();
  for (CriterionSet::Bits bits = 0; bits < (CriterionSet::Bits{1} << n); ++bits) {
    entries.push_back({{"A", write_set(CriterionSet::from_bits(n, bits), labels)}, {"v", write_scalar(nu.at_bits(bits))}});
  }
  doc["entries"] = std::move(entries);
  return doc;
}

template <Scalar T>
BipolarDocument<T> parse_bipolar(const Json& doc) {
  const int n = read_n(doc);
  if (n > kMaxBipolarCriteria) {
    throw Error(ErrorCode::TooManyCriteria, "bipolar capacities support at most " +
                                                std::to_string(kMaxBipolarCriteria) + " criteria");
  }
  Labels labels = read_labels(doc, n);
  const T top = read_top<T>(doc);
  const auto describe = [&](std::uint64_t code) { return format_quad(BipolarQuad::from_code(code, n), labels); };
  const auto code_of = [&](const Json& entry, const std::string& here) -> std::uint64_t {
    const auto set = [&](const char* key) { return read_set(require(entry, key, here), labels, here + "." + key); };
    try {
      return BipolarQuad::make(set("A+"), set("B+"), set("A-"), set("B-")).code();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotNested) throw;
      throw Error(ErrorCode::NotNested, at(here, e.message()));
    }
  };
  auto values = dense_values<T>(entries_of(doc, "capacity"), bipolar_lattice(n).size(), "capacity", code_of, describe);
  detail::throw_first(validate_bipolar_capacity<T>(n, top, values, labels));
  return {std::move(labels), BipolarIntervalCapacity<T>(n, top, std::move(values))};
}

template <Scalar T>
LevelDocument<T> parse_level(const Json& doc) {
  const int n = read_n(doc);
  Labels labels = read_labels(doc, n);
  const T top = read_top<T>(doc);
  std::optional<T> lower;
  if (doc.contains("lower") && !doc.at("lower").is_null()) lower = read_scalar<T>(doc.at("lower"), "lower");
  const Json& pieces = require(doc, "pieces", "level capacity");
  if (!pieces.is_array()) throw Error(ErrorCode::Parse, "\"pieces\" must be an array");
  std::vector<LevelPiece<T>> out;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const std::string here = "pieces[" + std::to_string(j) + "]";
    const Json& piece = pieces[j];
    std::optional<T> upper;
    if (piece.contains("t_upper") && !piece.at("t_upper").is_null()) {
      upper = read_scalar<T>(piece.at("t_upper"), here + ".t_upper");
    }
    const Json& table = require(piece, "capacity", here);
    QTableDocument<T> inner{labels, top, QTable<T>(n, q_values<T>(table, n, labels, here)), false};
    out.push_back({std::move(upper), to_capacity(inner)});
  }
  return {std::move(labels), LevelDependentCapacity<T>(std::move(lower), std::move(out))};
}

template <Scalar T>
MPointDocument<T> parse_mpoint_capacity(const Json& doc) {
  const int n = read_n(doc);
  const Json& m_json = require(doc, "m", "m-point capacity");
  if (!m_json.is_number_integer() || m_json.get<int>() < 1) throw Error(ErrorCode::Parse, "\"m\" must be a positive integer");
  const int m = m_json.get<int>();
  Labels labels = read_labels(doc, n);
  const T top = read_top<T>(doc);
  const ChainProduct lattice(n, m + 1);
  const auto describe = [&](std::uint64_t code) {
    std::string out = "(";
    const auto chain = mpoint_chain(code, n, m);
    for (std::size_t j = 0; j < chain.size(); ++j) out += (j > 0 ? "," : "") + format_set(chain[j], labels);
    return out + ")";
  };
  const auto code_of = [&](const Json& entry, const std::string& here) -> std::uint64_t {
    const Json& list = require(entry, "chain", here);
    if (!list.is_array() || static_cast<int>(list.size()) != m) {
      throw Error(ErrorCode::Parse, at(here, "\"chain\" must list " + std::to_string(m) + " sets"));
    }
    std::vector<CriterionSet> chain;
    for (std::size_t j = 0; j < list.size(); ++j) {
      chain.push_back(read_set(list[j], labels, here + ".chain[" + std::to_string(j) + "]"));
    }
    try {
      return mpoint_code(chain);
    } catch (const Error& e) {
      throw Error(e.code(), at(here, e.message()));
    }
  };
  auto values = dense_values<T>(entries_of(doc, "capacity"), lattice.size(), "capacity", code_of, describe);
  return {std::move(labels), MPointCapacity<T>(n, m, top, std::move(values))};
}

template <Scalar T>
std::vector<Alternative<T>> read_alternatives_csv(std::istream& in, const Labels& labels, std::string_view source) {
  const auto rows = read_rows(in);
  if (rows.empty()) throw Error(ErrorCode::Parse, std::string(source) + ": empty file");
  const auto slot_of = [](const std::string& suffix) { return suffix == "lo" ? 0 : suffix == "hi" ? 1 : -1; };
  const auto layout = header_layout(rows.front(), labels, 2, source, slot_of);
  std::vector<Alternative<T>> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string here = where_line(source, rows[r].line);
    const auto values = row_values<T>(rows[r], layout, labels.size(), 2, here);
    std::vector<Interval<T>> items;
    for (std::size_t i = 0; i < values.size(); ++i) {
      try {
        items.push_back(Interval<T>::make(values[i][0], values[i][1]));
      } catch (const Error& e) {
        throw Error(e.code(), at(here, "criterion \"" + labels[i] + "\": " + e.message()));
      }
    }
    out.push_back({rows[r].cells.front(), IntervalVector<T>(std::move(items))});
  }
  return out;
}

template <Scalar T>
std::vector<Alternative<T>> read_alternatives_file(const std::filesystem::path& path, const Labels& labels) {
  auto in = open_input(path);
  return read_alternatives_csv<T>(in, labels, path.string());
}

template <Scalar T>
std::vector<MPointAlternative<T>> read_mpoint_csv(std::istream& in, const Labels& labels, int m,
                                                  std::string_view source) {
  const auto rows = read_rows(in);
  if (rows.empty()) throw Error(ErrorCode::Parse, std::string(source) + ": empty file");
  const auto slot_of = [m](const std::string& suffix) {
    int slot = 0;
    const auto [ptr, ec] = std::from_chars(suffix.data(), suffix.data() + suffix.size(), slot);
    if (ec != std::errc{} || ptr != suffix.data() + suffix.size() || slot < 1 || slot > m) return -1;
    return slot - 1;
  };
  const auto layout = header_layout(rows.front(), labels, m, source, slot_of);
  std::vector<MPointAlternative<T>> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string here = where_line(source, rows[r].line);
    auto values = row_values<T>(rows[r], layout, labels.size(), m, here);
    try {
      out.push_back({rows[r].cells.front(), MPointVector<T>(std::move(values))});
    } catch (const Error& e) {
      throw Error(e.code(), at(here, e.message()));
    }
  }
  return out;
}

template <Scalar T>
std::vector<MPointAlternative<T>> read_mpoint_file(const std::filesystem::path& path, const Labels& labels, int m) {
  auto in = open_input(path);
  return read_mpoint_csv<T>(in, labels, m, path.string());
}

#define RCINT_IO_INSTANTIATE(T)                                                                               \
  template T read_scalar<T>(const Json&, std::string_view);                                                   \
  template Json write_scalar<T>(const T&);                                                                    \
  template QTableDocument<T> parse_q_table<T>(const Json&);                                                   \
  template IntervalCapacity<T> to_capacity<T>(const QTableDocument<T>&);                                      \
  template Json q_table_to_json<T>(const Labels&, const T&, std::span<const T>, bool);                         \
  template SetCapacityDocument<T> parse_set_capacity<T>(const Json&);                                         \
  template Json set_capacity_to_json<T>(const Labels&, const Capacity<T>&);                                   \
  template BipolarDocument<T> parse_bipolar<T>(const Json&);                                                  \
  template LevelDocument<T> parse_level<T>(const Json&);                                                      \
  template MPointDocument<T> parse_mpoint_capacity<T>(const Json&);                                           \
  template std::vector<Alternative<T>> read_alternatives_csv<T>(std::istream&, const Labels&, std::string_view); \
  template std::vector<Alternative<T>> read_alternatives_file<T>(const std::filesystem::path&, const Labels&);  \
  template std::vector<MPointAlternative<T>> read_mpoint_csv<T>(std::istream&, const Labels&, int,            \
                                                                std::string_view);                            \
  template std::vector<MPointAlternative<T>> read_mpoint_file<T>(const std::filesystem::path&, const Labels&, int);

RCINT_IO_INSTANTIATE(double)
RCINT_IO_INSTANTIATE(Rational)

#undef RCINT_IO_INSTANTIATE

}  // namespace rcint::io
