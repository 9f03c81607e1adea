#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include <whanoi/cost.hpp>
#include <whanoi/engine.hpp>
#include <whanoi/models.hpp>
#include <whanoi/peg.hpp>

namespace whanoi::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kMismatch = 1,
  kBadInput = 2,
  kUnsolvable = 3,
  kCapExceeded = 4,
};

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name);

struct Caps {
  std::size_t max_n = 64;
  std::size_t oracle = 10;
  std::size_t plan = 20;

  /// Defaults overridden by WHANOI_MAX_N, WHANOI_ORACLE_CAP and WHANOI_PLAN_CAP.
  static Caps from_env();
  /// Writes a resource warning to `err` for every cap raised above its default.
  void warn_raised(std::ostream& err) const;
};

/// Streams for data (out) and diagnostics (err), plus the active caps.
struct Io {
  std::ostream& out;
  std::ostream& err;
  Caps caps;
};

/// Reads a JSON argument: inline text if it starts with '{', otherwise a file
/// path (an optional leading '@' is stripped).
std::string read_json_arg(const std::string& arg);

models::ModelSpec load_model(const std::string& arg);

int cmd_solve(Io& io, const models::ModelSpec& model, std::size_t n, Format format);
int cmd_verify(Io& io, const models::ModelSpec& model, std::size_t n_max, Format format);
int cmd_phase(Io& io, const Cost& w, std::size_t n_max, Format format);
int cmd_plan(Io& io, const models::ModelSpec& model, std::size_t n, Peg from, Peg to, engine::TiePolicy ties,
             bool stream, Format format);
int cmd_seq(Io& io, const std::string& name, std::size_t count, Format format);
/// `spec_json` is a recurrence object {"a", "b", "seeds"} or {"name": <disc
/// sequence>}, optionally with "t0". Prints t_0 .. t_{count-1}.
int cmd_transform(Io& io, const std::string& spec_json, std::size_t count, Format format);
int cmd_count(Io& io, const models::ModelSpec& model, std::size_t n, Peg from, Peg to, Format format);
int cmd_export_graph(Io& io, const models::ModelSpec& model, std::size_t n);

/// Parses argv and dispatches; maps library exceptions to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace whanoi::cli
