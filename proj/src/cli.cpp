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

#include "rcint/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rcint/extensions.hpp"
#include "rcint/integrals.hpp"
#include "rcint/io.hpp"

namespace rcint::cli {

namespace {

using io::Json;

constexpr std::pair<IntegralKind, std::string_view> kKindNames[] = {
    {IntegralKind::Rci, "rci"},          {IntegralKind::RciMobius, "rci-mobius"},
    {IntegralKind::Rsi, "rsi"},          {IntegralKind::ShilkretRobust, "shilkret-r"},
    {IntegralKind::Choquet, "choquet"},  {IntegralKind::Sugeno, "sugeno"},
    {IntegralKind::Shilkret, "shilkret"}, {IntegralKind::Bipolar, "bipolar"},
    {IntegralKind::Level, "level"},      {IntegralKind::Concave, "concave"},
    {IntegralKind::MPoint, "mpoint"},
};

/// Runs `body`, prefixing any library error with `context`.
template <class F>
auto in_context(const std::string& context, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw Error(e.code(), context + ": " + e.message());
  }
}

int report(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Io ? kExitIo : kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_text_file(path, text);
  }
}

template <Scalar T>
std::string text_of(const T& v) {
  return format_scalar(v);
}

template <Scalar T>
bool same_value(const T& a, const T& b) {
  return nearly_equal(a, b, kDefaultTolerance);
}

// ---------------------------------------------------------------------------
// Evaluation

template <Scalar T>
struct Scored {
  std::string id;
  T value;
  std::optional<T> midpoint;
  Json certificate;  // concave only
};

template <Scalar T>
IntervalCapacity<T> load_interval_capacity(const std::string& path, Labels* labels = nullptr) {
  return in_context(path, [&] {
    const auto doc = io::parse_q_table<T>(io::read_json_file(path));
    if (doc.mobius) throw Error(ErrorCode::InvalidArgument, "expected a capacity, found a Möbius table");
    if (labels != nullptr) *labels = doc.labels;
    return io::to_capacity(doc);
  });
}

template <Scalar T>
std::vector<io::Alternative<T>> load_alternatives(const std::string& path, const Labels& labels) {
  return io::read_alternatives_file<T>(path, labels);
}

template <Scalar T>
std::vector<T> points_of(const io::Alternative<T>& alt) {
  if (!alt.x.is_degenerate()) {
    throw Error(ErrorCode::InvalidArgument,
                "alternative \"" + alt.id + "\" has a proper interval; classical integrals need lo = hi");
  }
  return alt.x.lower();
}

template <Scalar T>
Json certificate_json(const Decomposition<T>& dec, const Labels& labels) {
  Json terms = Json::array();
  for (const auto& term : dec.terms) {
    terms.push_back({{"A", io::write_set(term.pair.sure(), labels)},
                     {"B", io::write_set(term.pair.possible(), labels)},
                     {"weight", io::write_scalar(term.weight)}});
  }
  return terms;
}

template <Scalar T>
std::vector<Scored<T>> evaluate(const RunConfig& cfg) {
  if (cfg.capacity.empty()) throw Error(ErrorCode::InvalidArgument, "--capacity is required");
  if (cfg.alts.empty()) throw Error(ErrorCode::InvalidArgument, "--alts is required");
  if (cfg.samples > 0 && cfg.kind != IntegralKind::Rci) {
    throw Error(ErrorCode::InvalidArgument, "--samples applies to --integral rci only");
  }
  std::vector<Scored<T>> out;
  const auto each = [&](const auto& alts, auto&& score) {
    for (const auto& alt : alts) {
      out.push_back(in_context("alternative \"" + alt.id + "\"", [&] { return score(alt); }));
    }
  };
  const auto plain = [](const std::string& id, T v) { return Scored<T>{id, std::move(v), std::nullopt, nullptr}; };

  switch (cfg.kind) {
    case IntegralKind::Rci:
    case IntegralKind::Rsi:
    case IntegralKind::ShilkretRobust:
    case IntegralKind::Concave: {
      Labels labels;
      const auto mu = load_interval_capacity<T>(cfg.capacity, &labels);
      each(load_alternatives<T>(cfg.alts, labels), [&](const io::Alternative<T>& alt) {
        switch (cfg.kind) {
          case IntegralKind::Rci: {
            auto row = plain(alt.id, rci(alt.x, mu));
            if (cfg.samples > 0) row.midpoint = rci_midpoint(alt.x, mu, cfg.samples);
            return row;
          }
          case IntegralKind::Rsi:
            return plain(alt.id, rsi(alt.x, mu));
          case IntegralKind::ShilkretRobust:
            return plain(alt.id, robust_shilkret(alt.x, mu));
          default: {
            auto result = concave_robust(alt.x, mu);
            return Scored<T>{alt.id, result.value, std::nullopt, certificate_json(result.certificate, labels)};
          }
        }
      });
      break;
    }
    case IntegralKind::RciMobius: {
      const auto json = in_context(cfg.capacity, [&] { return io::read_json_file(cfg.capacity); });
      const auto doc = in_context(cfg.capacity, [&] { return io::parse_q_table<T>(json); });
      MobiusRepresentation<T> m{doc.table, doc.top};
      if (!doc.mobius) m = mobius(in_context(cfg.capacity, [&] { return io::to_capacity(doc); }));
      each(load_alternatives<T>(cfg.alts, doc.labels),
           [&](const io::Alternative<T>& alt) { return plain(alt.id, rci_mobius(alt.x, m)); });
      break;
    }
    case IntegralKind::Choquet:
    case IntegralKind::Sugeno:
    case IntegralKind::Shilkret: {
      const auto json = in_context(cfg.capacity, [&] { return io::read_json_file(cfg.capacity); });
      Labels labels;
      const Capacity<T> nu = in_context(cfg.capacity, [&] {
        if (io::is_set_capacity_json(json)) {
          auto doc = io::parse_set_capacity<T>(json);
          labels = doc.labels;
          return doc.capacity;
        }
        auto doc = io::parse_q_table<T>(json);
        labels = doc.labels;
        return diagonal_capacity(io::to_capacity(doc));
      });
      each(load_alternatives<T>(cfg.alts, labels), [&](const io::Alternative<T>& alt) {
        const auto x = points_of(alt);
        if (cfg.kind == IntegralKind::Choquet) return plain(alt.id, choquet<T>(x, nu));
        if (cfg.kind == IntegralKind::Sugeno) return plain(alt.id, sugeno<T>(x, nu));
        return plain(alt.id, shilkret<T>(x, nu));
      });
      break;
    }
    case IntegralKind::Bipolar: {
      const auto doc = in_context(cfg.capacity, [&] { return io::parse_bipolar<T>(io::read_json_file(cfg.capacity)); });
      each(load_alternatives<T>(cfg.alts, doc.labels),
           [&](const io::Alternative<T>& alt) { return plain(alt.id, bipolar_rci(alt.x, doc.capacity)); });
      break;
    }
    case IntegralKind::Level: {
      const auto doc = in_context(cfg.capacity, [&] { return io::parse_level<T>(io::read_json_file(cfg.capacity)); });
      each(load_alternatives<T>(cfg.alts, doc.labels),
           [&](const io::Alternative<T>& alt) { return plain(alt.id, rci_level_dependent(alt.x, doc.capacity)); });
      break;
    }
    case IntegralKind::MPoint: {
      const auto doc =
          in_context(cfg.capacity, [&] { return io::parse_mpoint_capacity<T>(io::read_json_file(cfg.capacity)); });
      each(io::read_mpoint_file<T>(cfg.alts, doc.labels, doc.capacity.m()),
           [&](const io::MPointAlternative<T>& alt) { return plain(alt.id, mpoint_rci(alt.x, doc.capacity)); });
      break;
    }
  }
  return out;
}

template <Scalar T>
Json scored_json(const Scored<T>& row) {
  Json item{{"id", row.id}, {"value", io::write_scalar(row.value)}};
  if (row.midpoint) item["midpoint"] = io::write_scalar(*row.midpoint);
  if (!row.certificate.is_null()) item["certificate"] = row.certificate;
  return item;
}

template <Scalar T>
int eval_impl(const RunConfig& cfg, std::ostream& out) {
  const auto rows = evaluate<T>(cfg);
  std::ostringstream text;
  if (cfg.format == Format::Json) {
    Json list = Json::array();
    for (const auto& row : rows) list.push_back(scored_json(row));
    text << list.dump(2) << "\n";
  } else {
    const bool midpoint = cfg.samples > 0;
    text << "id,value" << (midpoint ? ",midpoint" : "") << "\n";
    for (const auto& row : rows) {
      text << row.id << "," << text_of(row.value);
      if (midpoint) text << "," << text_of(*row.midpoint);
      text << "\n";
    }
  }
  emit(text.str(), cfg.out, out);
  return kExitOk;
}

template <Scalar T>
int rank_impl(const RunConfig& cfg, std::ostream& out) {
  auto rows = evaluate<T>(cfg);
  std::stable_sort(rows.begin(), rows.end(), [](const Scored<T>& a, const Scored<T>& b) {
    return a.value > b.value && !same_value(a.value, b.value);
  });
  // Tie groups: runs whose values match the run's first value.
  std::vector<std::size_t> rank(rows.size());
  std::vector<bool> tied(rows.size(), false);
  for (std::size_t start = 0; start < rows.size();) {
    std::size_t end = start + 1;
    while (end < rows.size() && same_value(rows[start].value, rows[end].value)) ++end;
    for (std::size_t k = start; k < end; ++k) {
      rank[k] = start + 1;
      tied[k] = end - start > 1;
    }
    start = end;
  }
  std::ostringstream text;
  if (cfg.format == Format::Json) {
    Json list = Json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Json item = scored_json(rows[k]);
      item["rank"] = rank[k];
      item["tied"] = static_cast<bool>(tied[k]);
      list.push_back(std::move(item));
    }
    text << list.dump(2) << "\n";
  } else {
    text << "rank,id,value,tied\n";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      text << rank[k] << "," << rows[k].id << "," << text_of(rows[k].value) << "," << (tied[k] ? "yes" : "no")
           << "\n";
    }
  }
  emit(text.str(), cfg.out, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Transforms and validators

template <Scalar T>
int mobius_impl(const MobiusConfig& cfg, std::ostream& out) {
  if (cfg.capacity.empty()) throw Error(ErrorCode::InvalidArgument, "--capacity is required");
  Labels labels;
  const auto mu = load_interval_capacity<T>(cfg.capacity, &labels);
  const auto m = mobius(mu);
  emit(io::q_table_to_json<T>(labels, m.top, m.table.values, true).dump(2) + "\n", cfg.out, out);
  return kExitOk;
}

template <Scalar T>
int check_impl(const CheckConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.capacity.empty()) throw Error(ErrorCode::InvalidArgument, "--capacity is required");
  const auto json = in_context(cfg.capacity, [&] { return io::read_json_file(cfg.capacity); });
  const auto& path = cfg.capacity;
  if (json.is_object() && json.contains("pieces")) {
    const auto doc = in_context(path, [&] { return io::parse_level<T>(json); });
    out << "ok: level-dependent capacity, n=" << doc.capacity.n() << ", " << doc.capacity.pieces().size()
        << " pieces\n";
    return kExitOk;
  }
  if (json.is_object() && json.contains("m")) {
    const auto doc = in_context(path, [&] { return io::parse_mpoint_capacity<T>(json); });
    out << "ok: m-point capacity, n=" << doc.capacity.n() << ", m=" << doc.capacity.m() << "\n";
    return kExitOk;
  }
  const bool bipolar = json.is_object() && json.contains("entries") && json.at("entries").is_array() &&
                       !json.at("entries").empty() && json.at("entries").front().contains("A+");
  if (bipolar) {
    const auto doc = in_context(path, [&] { return io::parse_bipolar<T>(json); });
    out << "ok: bipolar capacity, n=" << doc.capacity.n() << "\n";
    return kExitOk;
  }
  if (io::is_set_capacity_json(json)) {
    const auto doc = in_context(path, [&] { return io::parse_set_capacity<T>(json); });
    out << "ok: capacity on subsets, n=" << doc.capacity.n() << "\n";
    return kExitOk;
  }
  const auto doc = in_context(path, [&] { return io::parse_q_table<T>(json); });
  if (doc.mobius) {
    const MobiusRepresentation<T> m{doc.table, doc.top};
    const auto result = check_interval_capacity_mobius(m, doc.labels);
    if (!result.ok) {
      for (const auto& v : result.violations) err << path << ": condition " << v.condition << ": " << v.message << "\n";
      return kExitInvalid;
    }
    out << "ok: Möbius table of an interval capacity, n=" << doc.table.n << "\n";
    return kExitOk;
  }
  const auto mu = in_context(path, [&] { return io::to_capacity(doc); });
  out << "ok: interval capacity, n=" << mu.n() << "\n";
  out << "separable: " << (is_separable(mu) ? "yes" : "no") << "\n";
  return kExitOk;
}

template <Scalar T>
int separable_impl(const SeparableConfig& cfg, std::ostream& out) {
  if (cfg.lower.empty() || cfg.upper.empty()) throw Error(ErrorCode::InvalidArgument, "--lower and --upper are required");
  const T alpha = in_context("--alpha", [&] { return parse_scalar<T>(cfg.alpha); });
  const auto lower = in_context(cfg.lower, [&] { return io::parse_set_capacity<T>(io::read_json_file(cfg.lower)); });
  const auto upper = in_context(cfg.upper, [&] { return io::parse_set_capacity<T>(io::read_json_file(cfg.upper)); });
  if (lower.labels != upper.labels) throw Error(ErrorCode::SizeMismatch, "lower and upper capacities use different labels");
  const auto mu = separable_from(SeparableDecomposition<T>(alpha, lower.capacity, upper.capacity));
  emit(io::q_table_to_json<T>(lower.labels, mu.top(), mu.values(), false).dump(2) + "\n", cfg.out, out);
  return kExitOk;
}

}  // namespace

std::optional<IntegralKind> parse_kind(std::string_view name) {
  for (const auto& [kind, text] : kKindNames) {
    if (text == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(IntegralKind kind) {
  for (const auto& [k, text] : kKindNames) {
    if (k == kind) return text;
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "exact") return Mode::Exact;
  if (name == "float") return Mode::Float;
  return std::nullopt;
}

Mode default_mode() {
  const char* env = std::getenv("RCINT_MODE");
  if (env == nullptr) return Mode::Float;
  return parse_mode(env).value_or(Mode::Float);
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return report(err, [&] { return cfg.mode == Mode::Exact ? eval_impl<Rational>(cfg, out) : eval_impl<double>(cfg, out); });
}

int cmd_rank(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return report(err, [&] { return cfg.mode == Mode::Exact ? rank_impl<Rational>(cfg, out) : rank_impl<double>(cfg, out); });
}

int cmd_mobius(const MobiusConfig& cfg, std::ostream& out, std::ostream& err) {
  return report(err, [&] { return cfg.mode == Mode::Exact ? mobius_impl<Rational>(cfg, out) : mobius_impl<double>(cfg, out); });
}

int cmd_check(const CheckConfig& cfg, std::ostream& out, std::ostream& err) {
  return report(err, [&] {
    return cfg.mode == Mode::Exact ? check_impl<Rational>(cfg, out, err) : check_impl<double>(cfg, out, err);
  });
}

int cmd_gen_separable(const SeparableConfig& cfg, std::ostream& out, std::ostream& err) {
  return report(err, [&] {
    return cfg.mode == Mode::Exact ? separable_impl<Rational>(cfg, out) : separable_impl<double>(cfg, out);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust non-additive integrals over interval-valued evaluations", "rcint"};
  app.require_subcommand(1);

  const auto mode_check = CLI::IsMember({"exact", "float"});
  std::string mode = default_mode() == Mode::Exact ? "exact" : "float";
  std::string format = "csv";
  std::string kind = "rci";
  RunConfig run_cfg;
  CheckConfig check_cfg;
  MobiusConfig mobius_cfg;
  SeparableConfig sep_cfg;

  std::vector<std::string> kind_names;
  for (const auto& [k, text] : kKindNames) kind_names.emplace_back(text);

  const auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("--integral", kind, "Integral to evaluate")->check(CLI::IsMember(kind_names));
    sub->add_option("--capacity", run_cfg.capacity, "Capacity JSON")->required();
    sub->add_option("--alts", run_cfg.alts, "Alternatives CSV")->required();
    sub->add_option("--mode", mode, "exact or float (default: RCINT_MODE, else float)")->check(mode_check);
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", run_cfg.out, "Output file (default: stdout)");
    sub->add_option("--samples", run_cfg.samples, "Midpoint-rule cells for a diagnostic column (rci)")
        ->check(CLI::NonNegativeNumber);
  };
  auto* eval = app.add_subcommand("eval", "Score each alternative");
  add_run_options(eval);
  auto* rank = app.add_subcommand("rank", "Rank alternatives, best first, ties grouped");
  add_run_options(rank);

  auto* mob = app.add_subcommand("mobius", "Write the Möbius table of an interval capacity");
  mob->add_option("--capacity", mobius_cfg.capacity, "Capacity JSON")->required();
  mob->add_option("--mode", mode, "exact or float")->check(mode_check);
  mob->add_option("--out", mobius_cfg.out, "Output file (default: stdout)");

  auto* check = app.add_subcommand("check", "Validate a capacity or Möbius table");
  check->add_option("--capacity", check_cfg.capacity, "Capacity JSON")->required();
  check->add_option("--mode", mode, "exact or float")->check(mode_check);

  auto* sep = app.add_subcommand("gen-separable", "Build α·ν̲(A) + (1-α)·ν̄(B)");
  sep->add_option("--alpha", sep_cfg.alpha, "Weight of the sure coalition, in [0,1]")->required();
  sep->add_option("--lower", sep_cfg.lower, "Set-capacity JSON for ν̲")->required();
  sep->add_option("--upper", sep_cfg.upper, "Set-capacity JSON for ν̄")->required();
  std::string sep_mode = "exact";  // generated files are meant to be reused
  sep->add_option("--mode", sep_mode, "exact (default) or float")->check(mode_check);
  sep->add_option("--out", sep_cfg.out, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const Mode chosen = *parse_mode(mode);
  if (*eval || *rank) {
    run_cfg.kind = *parse_kind(kind);
    run_cfg.mode = chosen;
    run_cfg.format = format == "json" ? Format::Json : Format::Csv;
    return *eval ? cmd_eval(run_cfg, out, err) : cmd_rank(run_cfg, out, err);
  }
  if (*mob) {
    mobius_cfg.mode = chosen;
    return cmd_mobius(mobius_cfg, out, err);
  }
  if (*check) {
    check_cfg.mode = chosen;
    return cmd_check(check_cfg, out, err);
  }
  sep_cfg.mode = *parse_mode(sep_mode);
  return cmd_gen_separable(sep_cfg, out, err);
}

}  // namespace rcint::cli
