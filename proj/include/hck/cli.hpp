#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

// The `hck` command line: one subcommand per module operation, text or JSON
// reports, and an exit code per verdict.
namespace hck::cli {

using Json = nlohmann::json;

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);
Status parse_status(const std::string& s);
/// 0 pass, 1 fail, 2 inconclusive.
int exit_code(Status s);
/// Exit code for usage and input errors.
inline constexpr int kUsageError = 3;

struct Finding {
  std::string operation;      // "whitehead.gamma"
  std::string inputs_digest;  // "fnv1a64:<16 hex digits>"
  Status verdict = Status::Pass;
  std::string summary;
  Json result;   // operation-specific value
  Json witness;  // null for passes; always set otherwise
  bool operator==(const Finding&) const = default;
};

struct Report {
  Status status = Status::Pass;
  std::vector<Finding> findings;

  /// Appends and folds the verdict in: any fail wins, then inconclusive.
  void add(Finding f);
  bool operator==(const Report&) const = default;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);
std::string render_text(const Report& r);

std::uint64_t fnv1a64(std::string_view bytes);

/// Runs `hck` on the arguments (program name excluded). The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hck::cli
