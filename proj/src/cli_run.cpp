#include <algorithm>
#include <ostream>

#include "cli_internal.hpp"
#include "hck/parallel.hpp"

namespace hck::cli {

namespace {

struct ThreadScope {
  explicit ThreadScope(int jobs) { par::set_threads(jobs); }
  ~ThreadScope() { par::set_threads(0); }
};

void emit(const Report& r, bool json, std::ostream& out) {
  if (json) out << to_json(r).dump(2) << '\n';
  else out << render_text(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computational checks for finitely presented higher-categorical structures", "hck"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  int jobs = 0;
  app.add_flag("--json", json, "Write the report as JSON");
  app.add_option("--jobs", jobs, "Worker threads for parallel kernels (0 = all cores)")
      ->check(detail::non_negative())
      ->capture_default_str();

  detail::Session session;
  detail::add_fpcat(app, session);
  detail::add_simplicial(app, session);
  detail::add_bicat(app, session);
  detail::add_alg(app, session);
  detail::add_bordism(app, session);
  detail::add_whitehead(app, session);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    const auto rest = app.remaining(true);
    if (!rest.empty() && e.get_name() == "RequiredError")
      err << "usage error: unexpected argument '" << rest.front() << "'\n";
    else
      err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  if (!session.action) {
    err << "usage error: no operation selected\n";
    return kUsageError;
  }

  ThreadScope threads(jobs);
  try {
    const Report r = session.action();
    emit(r, json, out);
    return exit_code(r.status);
  } catch (const Error& e) {
    err << "input error: " << e.what() << '\n';
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace hck::cli
