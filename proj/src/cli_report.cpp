#include <cstdio>
#include <sstream>

#include "cli_internal.hpp"

namespace hck::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "inconclusive") return Status::Inconclusive;
  throw InvalidInput("unknown status '" + s + "'");
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Inconclusive: return 2;
  }
  return kUsageError;
}

void Report::add(Finding f) {
  if (f.verdict == Status::Fail) status = Status::Fail;
  else if (f.verdict == Status::Inconclusive && status == Status::Pass) status = Status::Inconclusive;
  findings.push_back(std::move(f));
}

Json to_json(const Report& r) {
  Json fs = Json::array();
  for (const auto& f : r.findings)
    fs.push_back({{"operation", f.operation},
                  {"inputs_digest", f.inputs_digest},
                  {"verdict", to_string(f.verdict)},
                  {"summary", f.summary},
                  {"result", f.result},
                  {"witness", f.witness}});
  return {{"status", to_string(r.status)}, {"findings", fs}};
}

Report report_from_json(const Json& j) {
  try {
    Report r;
    for (const auto& f : j.at("findings"))
      r.findings.push_back({f.at("operation").get<std::string>(), f.at("inputs_digest").get<std::string>(),
                            parse_status(f.at("verdict").get<std::string>()), f.at("summary").get<std::string>(),
                            f.at("result"), f.at("witness")});
    r.status = parse_status(j.at("status").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const auto& f : r.findings) {
    out << f.operation << ": " << to_string(f.verdict);
    if (!f.summary.empty()) out << "  " << f.summary;
    out << '\n';
    if (!f.witness.is_null()) out << "  witness: " << f.witness.dump() << '\n';
    out << "  inputs: " << f.inputs_digest << '\n';
  }
  out << "status: " << to_string(r.status) << '\n';
  return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace detail {

void Inputs::add(const std::string& label, const std::string& bytes) {
  bytes_ += label;
  bytes_ += '\0';
  bytes_ += std::to_string(bytes.size());
  bytes_ += '\0';
  bytes_ += bytes;
}

std::string Inputs::digest() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes_)));
  return std::string("fnv1a64:") + buf;
}

Finding finding(const Inputs& in, std::string operation, Status verdict, std::string summary, Json result,
                Json witness) {
  if (verdict != Status::Pass && witness.is_null()) witness = {{"reason", summary}};
  return {std::move(operation), in.digest(), verdict, std::move(summary), std::move(result), std::move(witness)};
}

Report single(Finding f) {
  Report r;
  r.add(std::move(f));
  return r;
}

namespace {

CLI::Validator integer_at_least(long long low, const std::string& what) {
  return CLI::Validator(
      [low, what](std::string& text) -> std::string {
        try {
          std::size_t used = 0;
          const long long v = std::stoll(text, &used);
          if (used == text.size() && v >= low) return {};
        } catch (const std::exception&) {
        }
        return "must be " + what + ", got '" + text + "'";
      },
      "INT");
}

}  // namespace

CLI::Validator positive() { return integer_at_least(1, "a positive integer"); }
CLI::Validator non_negative() { return integer_at_least(0, "a non-negative integer"); }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      auto b = cur.find_first_not_of(" \t"), e = cur.find_last_not_of(" \t");
      if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

std::string plural(std::size_t n, const std::string& one, const std::string& many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

}  // namespace detail

}  // namespace hck::cli
