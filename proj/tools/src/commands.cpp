#include "whanoi_cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <whanoi/errors.hpp>
#include <whanoi/model_json.hpp>
#include <whanoi/oracle.hpp>
#include <whanoi/sequences.hpp>

namespace whanoi::cli {

namespace {

using nlohmann::json;

constexpr Caps kDefaultCaps{};

std::optional<std::size_t> env_size(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size()) {
    throw std::invalid_argument(std::string(name) + " must be a nonnegative integer, got '" + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

void require_cap(std::size_t n, std::size_t cap, const char* what, const char* knob) {
  if (n > cap) {
    throw CapExceededError(std::string(what) + " limited to n <= " + std::to_string(cap) + ", got " +
                           std::to_string(n) + " (raise with " + knob + ")");
  }
}

std::string vector_text(const CostVector& v) {
  return "(" + v[0].to_string() + "," + v[1].to_string() + "," + v[2].to_string() + ")";
}

json vector_json(const CostVector& v) {
  return json::array({v[0].to_string(), v[1].to_string(), v[2].to_string()});
}

json branch_row_json(const std::array<engine::Branch, 3>& row) {
  json out = json::array();
  for (auto b : row) out.push_back(std::string(engine::branch_name(b)));
  return out;
}

json size_list(const std::vector<std::size_t>& values) {
  json out = json::array();
  for (auto v : values) out.push_back(v);
  return out;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Left-aligned columns separated by two spaces.
void emit_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void emit_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
}

void emit_rows(std::ostream& out, Format format, const std::vector<std::vector<std::string>>& rows) {
  if (format == Format::Csv) {
    emit_csv(out, rows);
  } else {
    emit_table(out, rows);
  }
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string levels_text(const std::vector<std::size_t>& levels) {
  if (levels.empty()) return "none";
  std::vector<std::string> parts;
  for (auto l : levels) parts.push_back(std::to_string(l));
  return join(parts, ",");
}

// First level below n whose trace uses the two-LDM branch, if any.
std::optional<std::size_t> first_two_ldm(const engine::BranchTrace& trace, std::size_t n) {
  for (std::size_t level = 0; level < n; ++level) {
    for (Peg k : kPegs) {
      if (trace.at(level, k) == engine::Branch::TwoLdm) return level;
    }
  }
  return std::nullopt;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, csv or json)");
}

Caps Caps::from_env() {
  Caps caps;
  if (auto v = env_size("WHANOI_MAX_N")) caps.max_n = *v;
  if (auto v = env_size("WHANOI_ORACLE_CAP")) caps.oracle = *v;
  if (auto v = env_size("WHANOI_PLAN_CAP")) caps.plan = *v;
  return caps;
}

void Caps::warn_raised(std::ostream& err) const {
  if (max_n > kDefaultCaps.max_n) {
    err << "warning: DP/closed-form cap raised to n=" << max_n << "; cost grows with big-integer size\n";
  }
  if (oracle > kDefaultCaps.oracle) {
    err << "warning: graph-search cap raised to n=" << oracle << "; memory and time grow as 3^n\n";
  }
  if (plan > kDefaultCaps.plan) {
    err << "warning: plan cap raised to n=" << plan << "; plans can hold up to 3^n - 1 moves\n";
  }
}

std::string read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  const std::string path = !arg.empty() && arg[0] == '@' ? arg.substr(1) : arg;
  std::ifstream in(path);
  if (!in) throw models::SpecError("$", "cannot read JSON file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

models::ModelSpec load_model(const std::string& arg) { return models::parse_model(read_json_arg(arg)); }

int cmd_solve(Io& io, const models::ModelSpec& model, std::size_t n, Format format) {
  require_cap(n, io.caps.max_n, "solve", "--max-n or WHANOI_MAX_N");
  const engine::DpResult result = engine::dp_solve(models::lower(model), n);

  if (format == Format::Json) {
    json rows = json::array();
    for (std::size_t k = 0; k <= n; ++k) {
      rows.push_back(json{{"n", k},
                          {"d", vector_json(result.levels[k])},
                          {"branch", k == 0 ? json(nullptr) : branch_row_json(result.trace.rows()[k - 1])}});
    }
    emit_json(io.out, json{{"model", models::model_to_json(model)}, {"n", n}, {"rows", std::move(rows)}});
    return kOk;
  }

  std::vector<std::vector<std::string>> rows{{"n", "d0", "d1", "d2", "branch0", "branch1", "branch2"}};
  for (std::size_t k = 0; k <= n; ++k) {
    const CostVector& d = result.levels[k];
    std::vector<std::string> row{std::to_string(k), d[0].to_string(), d[1].to_string(), d[2].to_string()};
    for (Peg p : kPegs) {
      row.push_back(k == 0 ? (format == Format::Csv ? "" : "-")
                           : std::string(engine::branch_name(result.trace.at(k - 1, p))));
    }
    rows.push_back(std::move(row));
  }
  emit_rows(io.out, format, rows);
  return kOk;
}

int cmd_verify(Io& io, const models::ModelSpec& model, std::size_t n_max, Format format) {
  require_cap(n_max, io.caps.oracle, "verify", "--oracle-cap or WHANOI_ORACLE_CAP");
  const WeightTable weights = models::lower(model);
  const engine::DpResult dp = engine::dp_solve(weights, n_max);

  std::optional<std::size_t> m;
  if (const auto* cn = std::get_if<models::ConstantNonuniform>(&model)) {
    m = models::threshold_index(cn->w.value());
  }

  std::vector<std::size_t> mismatches;
  json rows = json::array();
  std::vector<std::vector<std::string>> table{{"n", "dp", "oracle", "closed", "status"}};
  for (std::size_t n = 0; n <= n_max; ++n) {
    const CostVector& d = dp.levels[n];
    const CostVector oracle = oracle::oracle_cost_vector(weights, n, io.caps.oracle);
    bool agree = d == oracle;

    std::optional<CostVector> closed;
    std::string note;
    try {
      if (auto cf = models::closed_form(model, n)) {
        const auto two = cf->conditional ? first_two_ldm(dp.trace, n) : std::nullopt;
        if (two) {
          note = "two-LDM branch at level " + std::to_string(*two);
        } else {
          closed = cf->value;
        }
      } else {
        note = "no closed form";
      }
    } catch (const std::domain_error& e) {
      note = e.what();
    }
    if (closed) agree = agree && *closed == d;
    if (!agree) mismatches.push_back(n);

    rows.push_back(json{{"n", n},
                        {"dp", vector_json(d)},
                        {"oracle", vector_json(oracle)},
                        {"closed", closed ? vector_json(*closed) : json(nullptr)},
                        {"note", note},
                        {"agree", agree}});
    table.push_back({std::to_string(n), vector_text(d), vector_text(oracle),
                     closed ? vector_text(*closed) : "n/a (" + note + ")", agree ? "agree" : "MISMATCH"});
  }

  std::string summary = mismatches.empty() ? "all agree" : "mismatch at n=" + levels_text(mismatches);
  if (m) summary += "; m=" + std::to_string(*m);

  if (format == Format::Json) {
    json doc{{"model", models::model_to_json(model)},
             {"n_max", n_max},
             {"rows", std::move(rows)},
             {"all_agree", mismatches.empty()}};
    if (m) doc["m"] = *m;
    emit_json(io.out, doc);
  } else {
    emit_rows(io.out, format, table);
    if (format == Format::Text) io.out << summary << '\n';
  }
  if (!mismatches.empty()) io.err << summary << '\n';
  return mismatches.empty() ? kOk : kMismatch;
}

int cmd_phase(Io& io, const Cost& w, std::size_t n_max, Format format) {
  require_cap(n_max, io.caps.max_n, "phase", "--max-n or WHANOI_MAX_N");
  if (w.is_infinite()) throw std::invalid_argument("phase needs a finite w");
  const models::ModelSpec model = models::ConstantNonuniform{w};
  const engine::PhaseReport report = engine::detect_phase(models::lower(model), n_max);
  const std::size_t m = models::threshold_index(w.value());

  if (format == Format::Json) {
    json trace = json::array();
    for (const auto& row : report.trace.rows()) trace.push_back(branch_row_json(row));
    json pegs = json::array();
    for (const auto& p : report.pegs) {
      pegs.push_back(json{{"transitions", size_list(p.transitions)}, {"ties", size_list(p.ties)}});
    }
    emit_json(io.out, json{{"w", w.to_string()}, {"m", m}, {"n_max", n_max}, {"trace", std::move(trace)},
                           {"pegs", std::move(pegs)}});
    return kOk;
  }

  std::vector<std::vector<std::string>> rows{{"level", "branch0", "branch1", "branch2"}};
  for (std::size_t level = 0; level < report.trace.levels(); ++level) {
    std::vector<std::string> row{std::to_string(level)};
    for (Peg p : kPegs) row.emplace_back(engine::branch_name(report.trace.at(level, p)));
    rows.push_back(std::move(row));
  }
  if (format == Format::Text) io.out << "w=" << w << " m=" << m << '\n';
  emit_rows(io.out, format, rows);
  if (format == Format::Text) {
    for (Peg p : kPegs) {
      const auto& phase = report.pegs[p.index()];
      io.out << "idle " << p.index() << ": transitions at " << levels_text(phase.transitions) << "; ties at "
             << levels_text(phase.ties) << '\n';
    }
  }
  return kOk;
}

int cmd_plan(Io& io, const models::ModelSpec& model, std::size_t n, Peg from, Peg to, engine::TiePolicy ties,
             bool stream, Format format) {
  if (from == to) throw std::invalid_argument("--from and --to must differ");
  const WeightTable weights = models::lower(model);
  const Peg idle{idle_peg(from, to)};

  if (stream) {
    require_cap(n, io.caps.max_n, "plan --stream", "--max-n or WHANOI_MAX_N");
    if (format == Format::Json) throw std::invalid_argument("--stream supports text and csv output only");
    engine::PlanStream moves = engine::stream_plan(weights, n, from, to, ties);
    if (format == Format::Csv) io.out << "step,disc,from,to,cost\n";
    Cost total;
    Integer steps = 0;
    while (auto mv = moves.next()) {
      const Cost c = weights.at(mv->disc - 1, Peg{idle_peg(mv->from, mv->to)});
      total += c;
      ++steps;
      if (format == Format::Csv) {
        io.out << steps << ',' << mv->disc << ',' << mv->from.index() << ',' << mv->to.index() << ',' << c << '\n';
      } else {
        io.out << "disc " << mv->disc << ": " << mv->from.index() << " -> " << mv->to.index() << '\n';
      }
    }
    if (format == Format::Text) io.out << "moves=" << steps << " cost=" << total << '\n';
    return kOk;
  }

  require_cap(n, io.caps.plan, "plan", "--plan-cap or WHANOI_PLAN_CAP");
  const MovePlan plan = engine::reconstruct_plan(weights, n, from, to, ties, io.caps.plan);
  const engine::PlanCost replay = engine::plan_cost(weights, plan, State::perfect(n, from));
  const Cost expected = engine::dp_solve(weights, n).final()[idle];
  if (replay.total != expected || replay.final_state != State::perfect(n, to)) {
    io.err << "internal error: plan replay cost " << replay.total << " differs from optimum " << expected << '\n';
    return kMismatch;
  }

  if (format == Format::Json) {
    json moves = json::array();
    for (const auto& mv : plan.moves) {
      moves.push_back(json{{"disc", mv.disc}, {"from", mv.from.index()}, {"to", mv.to.index()}});
    }
    emit_json(io.out, json{{"n", n},
                           {"from", from.index()},
                           {"to", to.index()},
                           {"cost", replay.total.to_string()},
                           {"moves", std::move(moves)}});
    return kOk;
  }
  if (format == Format::Csv) {
    io.out << "step,disc,from,to,cost\n";
    for (std::size_t i = 0; i < plan.size(); ++i) {
      const Move& mv = plan.moves[i];
      io.out << i + 1 << ',' << mv.disc << ',' << mv.from.index() << ',' << mv.to.index() << ','
             << weights.at(mv.disc - 1, Peg{idle_peg(mv.from, mv.to)}) << '\n';
    }
    return kOk;
  }
  for (const auto& mv : plan.moves) {
    io.out << "disc " << mv.disc << ": " << mv.from.index() << " -> " << mv.to.index() << '\n';
  }
  io.out << "moves=" << plan.size() << " cost=" << replay.total << '\n';
  return kOk;
}

int cmd_seq(Io& io, const std::string& name, std::size_t count, Format format) {
  const Sequence seq = parse_sequence(name);
  if (count > 0) require_cap(count - 1, io.caps.max_n, "seq", "--max-n or WHANOI_MAX_N");
  std::vector<std::string> values;
  for (std::size_t n = 0; n < count; ++n) values.push_back(seq_eval(seq, static_cast<long>(n)).get_str());

  if (format == Format::Json) {
    emit_json(io.out, json{{"name", std::string(sequence_name(seq))}, {"values", values}});
  } else if (format == Format::Csv) {
    io.out << "n,value\n";
    for (std::size_t n = 0; n < count; ++n) io.out << n << ',' << values[n] << '\n';
  } else {
    io.out << join(values, ",") << '\n';
  }
  return kOk;
}

int cmd_transform(Io& io, const std::string& spec_json, std::size_t count, Format format) {
  json j;
  try {
    j = json::parse(spec_json);
  } catch (const json::parse_error& e) {
    throw models::SpecError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw models::SpecError("$", "expected an object");
  Rational t0 = 0;
  if (const auto it = j.find("t0"); it != j.end()) {
    const Cost c = models::cost_from_json(*it, "$.t0");
    if (c.is_infinite()) throw models::SpecError("$.t0", "must be finite");
    t0 = c.value();
    j.erase("t0");
  }
  models::SeqSpec spec;
  if (const auto it = j.find("name"); it != j.end()) {
    if (j.size() != 1 || !it->is_string()) {
      throw models::SpecError("$.name", "expected only a disc-sequence name (plus optional t0)");
    }
    try {
      spec = models::disc_sequence_spec(models::parse_disc_sequence(it->get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw models::SpecError("$.name", e.what());
    }
  } else {
    spec = models::seq_spec_from_json(j);
  }
  if (count == 0) throw std::invalid_argument("--count must be at least 1");
  require_cap(count - 1, io.caps.max_n, "transform", "--max-n or WHANOI_MAX_N");

  const models::TransformResult result = models::seq_transform(spec, t0, count - 1);
  std::vector<std::string> values;
  for (const auto& v : result.values) values.push_back(rational_to_string(v));

  if (format == Format::Json) {
    json tau = json::array();
    for (const auto& t : result.tau) tau.push_back(rational_to_string(t));
    emit_json(io.out, json{{"spec", models::seq_spec_to_json(spec)},
                           {"t0", rational_to_string(t0)},
                           {"values", values},
                           {"tau", std::move(tau)},
                           {"b", rational_to_string(result.constant)},
                           {"recurrence", result.recurrence()}});
  } else if (format == Format::Csv) {
    io.out << "n,t\n";
    for (std::size_t n = 0; n < values.size(); ++n) io.out << n << ',' << values[n] << '\n';
  } else {
    io.out << "values: " << join(values, ",") << '\n' << "recurrence: " << result.recurrence() << '\n';
  }
  return kOk;
}

int cmd_count(Io& io, const models::ModelSpec& model, std::size_t n, Peg from, Peg to, Format format) {
  require_cap(n, io.caps.oracle, "count", "--oracle-cap or WHANOI_ORACLE_CAP");
  const oracle::PathCount result = oracle::count_shortest_paths(models::lower(model), n, State::perfect(n, from),
                                                                State::perfect(n, to), io.caps.oracle);
  const std::string count = result.unbounded ? "unbounded" : result.count.get_str();
  if (format == Format::Json) {
    emit_json(io.out, json{{"n", n},
                           {"from", from.index()},
                           {"to", to.index()},
                           {"count", result.unbounded ? json(nullptr) : json(count)},
                           {"unbounded", result.unbounded}});
  } else if (format == Format::Csv) {
    io.out << "n,from,to,count\n" << n << ',' << from.index() << ',' << to.index() << ',' << count << '\n';
  } else {
    io.out << count << '\n';
  }
  return kOk;
}

int cmd_export_graph(Io& io, const models::ModelSpec& model, std::size_t n) {
  require_cap(n, io.caps.oracle, "export-graph", "--oracle-cap or WHANOI_ORACLE_CAP");
  oracle::export_edges_csv(io.out, models::lower(model), n, io.caps.oracle);
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal transfer costs for the weighted Tower of Hanoi"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "whanoi 1.0.0");

  std::optional<std::size_t> max_n;
  std::optional<std::size_t> oracle_cap;
  std::optional<std::size_t> plan_cap;
  app.add_option("--max-n", max_n, "Largest n for DP and closed forms (default 64)");
  app.add_option("--oracle-cap", oracle_cap, "Largest n for graph search (default 10)");
  app.add_option("--plan-cap", plan_cap, "Largest n for materialized plans (default 20)");

  std::string model_arg;
  std::size_t n = 0;
  std::string format_name = "text";
  int from = 0;
  int to = 2;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", model_arg, "Model JSON, inline or a file path (optionally @path)")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
  };
  auto add_pegs = [&](CLI::App* sub) {
    sub->add_option("--from", from, "Source peg")->check(CLI::Range(0, 2))->capture_default_str();
    sub->add_option("--to", to, "Target peg")->check(CLI::Range(0, 2))->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "Minimal costs d_0..d_n with the branch trace");
  add_model(solve);
  solve->add_option("-n", n, "Tower size")->required();
  add_format(solve);

  std::size_t n_max = 0;
  CLI::App* verify = app.add_subcommand("verify", "Compare DP, graph search and closed form for n <= nmax");
  add_model(verify);
  verify->add_option("--nmax", n_max, "Largest tower size")->required();
  add_format(verify);

  std::string w_arg;
  CLI::App* phase = app.add_subcommand("phase", "Branch phases for constant weights (1, w, 1)");
  phase->add_option("--w", w_arg, "Middle weight, e.g. 7 or 5/2")->required();
  phase->add_option("--nmax", n_max, "Largest tower size")->required();
  add_format(phase);

  std::string tie_name = "one";
  bool stream = false;
  CLI::App* plan = app.add_subcommand("plan", "An optimal move sequence");
  add_model(plan);
  plan->add_option("-n", n, "Tower size")->required();
  add_pegs(plan);
  plan->add_option("--tie", tie_name, "Branch taken on ties")
      ->check(CLI::IsMember({"one", "two"}))
      ->capture_default_str();
  plan->add_flag("--stream", stream, "Emit moves lazily instead of materializing the plan");
  add_format(plan);

  std::string seq_name;
  std::size_t count = 0;
  CLI::App* seq = app.add_subcommand("seq", "Values of a named integer sequence from index 0");
  seq->add_option("--name", seq_name, "Sequence name")->required();
  seq->add_option("--count", count, "Number of values")->required();
  add_format(seq);

  std::string spec_arg;
  CLI::App* transform = app.add_subcommand("transform", "Minimal costs for disc costs given by a recurrence");
  transform->add_option("--spec", spec_arg, "Recurrence JSON, inline or a file path")->required();
  transform->add_option("--count", count, "Number of values t_0, t_1, ...")->required();
  add_format(transform);

  CLI::App* count_cmd = app.add_subcommand("count", "Number of optimal move sequences (graph search)");
  add_model(count_cmd);
  count_cmd->add_option("-n", n, "Tower size")->required();
  add_pegs(count_cmd);
  add_format(count_cmd);

  CLI::App* export_graph = app.add_subcommand("export-graph", "Hanoi graph edge list as CSV");
  add_model(export_graph);
  export_graph->add_option("-n", n, "Tower size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    Caps caps = Caps::from_env();
    if (max_n) caps.max_n = *max_n;
    if (oracle_cap) caps.oracle = *oracle_cap;
    if (plan_cap) caps.plan = *plan_cap;
    caps.warn_raised(err);
    Io io{out, err, caps};
    const Format format = parse_format(format_name);

    if (*solve) return cmd_solve(io, load_model(model_arg), n, format);
    if (*verify) return cmd_verify(io, load_model(model_arg), n_max, format);
    if (*phase) return cmd_phase(io, Cost::parse(w_arg), n_max, format);
    if (*plan) {
      const auto ties = tie_name == "two" ? engine::TiePolicy::TwoLdm : engine::TiePolicy::OneLdm;
      return cmd_plan(io, load_model(model_arg), n, Peg{from}, Peg{to}, ties, stream, format);
    }
    if (*seq) return cmd_seq(io, seq_name, count, format);
    if (*transform) return cmd_transform(io, read_json_arg(spec_arg), count, format);
    if (*count_cmd) return cmd_count(io, load_model(model_arg), n, Peg{from}, Peg{to}, format);
    if (*export_graph) return cmd_export_graph(io, load_model(model_arg), n);
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const UnsolvableError& e) {
    err << "error: " << e.what() << '\n';
    return kUnsolvable;
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << '\n';
    return kUnsolvable;
  } catch (const models::SpecError& e) {
    err << "error: invalid model: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  err << "error: no subcommand\n";
  return kBadInput;
}

}  // namespace whanoi::cli
