#include "cli_internal.hpp"

namespace hck::cli::detail {

namespace {

using namespace hck::bicat;

Json violations(const ValidationReport& rep) {
  Json w = Json::array();
  for (const auto& v : rep.violations) w.push_back({{"kind", v.kind}, {"detail", v.detail}});
  return w;
}

int named(const std::string& flag, const std::string& name, int index) {
  if (index < 0) throw InvalidInput(flag + ": unknown cell '" + name + "'");
  return index;
}

Json datum_json(const FinBicategory& b, const DualityDatum& d) {
  return {{"f", b.cells1[static_cast<std::size_t>(d.f)].name},
          {"g", b.cells1[static_cast<std::size_t>(d.g)].name},
          {"ev", b.cells2[static_cast<std::size_t>(d.ev)].name},
          {"coev", b.cells2[static_cast<std::size_t>(d.coev)].name}};
}

Json summary_json(const FinBicategory& b) {
  return {{"objects", b.objects.size()}, {"cells1", b.n1()}, {"cells2", b.n2()}};
}

std::string shape(const FinBicategory& b) {
  return plural(b.objects.size(), "object", "objects") + ", " + plural(b.n1(), "1-cell", "1-cells") + ", " +
         plural(b.n2(), "2-cell", "2-cells");
}

struct BicatOpts {
  std::string bicat;
};
struct ZigzagOpts {
  std::string bicat, f, g, ev, coev;
};
struct DualsOpts {
  std::string bicat, f;
  bool left = false, serial = false;
  std::size_t budget = 50'000'000;
};
struct FOpts {
  std::string bicat, f;
};
struct DeloopOpts {
  std::string monoid;
  bool full = false;
};
struct EhOpts {
  int n = 0;
  std::string ops;
  bool serial = false;
};
struct NoOpts {};

void bicat_option(CLI::App& a, std::string& target) {
  a.add_option("--bicat", target, "Bicategory JSON, or " + stock_help("bicategory"))->required();
}

}  // namespace

void add_bicat(CLI::App& root, Session& s) {
  auto* top = root.add_subcommand("bicat", "Finite bicategories, duals and Eckmann-Hilton");
  top->require_subcommand(1);

  leaf<BicatOpts>(
      *top, s, "validate", "Check every bicategory axiom",
      [](CLI::App& a, BicatOpts& o) { bicat_option(a, o.bicat); },
      [](const BicatOpts& o) {
        Inputs in;
        const auto b = load_bicategory(in, "--bicat", o.bicat);
        const auto rep = validate_bicategory(b);
        if (rep.ok()) return single(finding(in, "bicat.validate", Status::Pass, "valid: " + shape(b), summary_json(b)));
        return single(finding(in, "bicat.validate", Status::Fail, plural(rep.violations.size(), "violation", "violations"),
                              summary_json(b), violations(rep)));
      });

  leaf<ZigzagOpts>(
      *top, s, "zigzag", "Check the zigzag identities of a duality datum",
      [](CLI::App& a, ZigzagOpts& o) {
        bicat_option(a, o.bicat);
        a.add_option("--f", o.f, "1-cell f : a -> b")->required();
        a.add_option("--g", o.g, "1-cell g : b -> a")->required();
        a.add_option("--ev", o.ev, "2-cell ev : f∘g => 1_b")->required();
        a.add_option("--coev", o.coev, "2-cell coev : 1_a => g∘f")->required();
      },
      [](const ZigzagOpts& o) {
        Inputs in;
        const auto b = load_bicategory(in, "--bicat", o.bicat);
        for (const auto* x : {&o.f, &o.g, &o.ev, &o.coev}) in.add("cell", *x);
        const DualityDatum d{named("--f", o.f, b.cell1(o.f)), named("--g", o.g, b.cell1(o.g)),
                             named("--ev", o.ev, b.cell2(o.ev)), named("--coev", o.coev, b.cell2(o.coev))};
        if (check_zigzag(b, d)) return single(finding(in, "bicat.zigzag", Status::Pass, "zigzag identities hold"));
        return single(finding(in, "bicat.zigzag", Status::Fail, "zigzag identities fail", nullptr,
                              {{"reason", "a snake composite is not an identity or the cells are mistyped"},
                               {"datum", datum_json(b, d)}}));
      });

  leaf<DualsOpts>(
      *top, s, "duals", "All duality data for a 1-cell",
      [](CLI::App& a, DualsOpts& o) {
        bicat_option(a, o.bicat);
        a.add_option("--f", o.f, "1-cell")->required();
        a.add_flag("--left", o.left, "Search for data exhibiting f as a right dual");
        a.add_flag("--serial", o.serial, "Use the serial reference kernel");
        a.add_option("--budget", o.budget, "Largest number of candidates tried")
            ->check(positive())
            ->capture_default_str();
      },
      [](const DualsOpts& o) {
        Inputs in;
        const auto b = load_bicategory(in, "--bicat", o.bicat);
        in.add("--f", o.f);
        in.add_value("--left", o.left);
        in.add_value("--budget", o.budget);
        const int f = named("--f", o.f, b.cell1(o.f));
        try {
          const auto ds = o.left ? find_left_duals(b, f, o.budget)
                                 : (o.serial ? find_right_duals_serial(b, f, o.budget) : find_right_duals(b, f, o.budget));
          Json list = Json::array();
          for (const auto& d : ds) list.push_back(datum_json(b, d));
          if (ds.empty())
            return single(finding(in, "bicat.duals", Status::Fail, "no duality data", {{"data", list}},
                                  {{"reason", "no datum passes the zigzag identities"}, {"f", o.f}}));
          return single(finding(in, "bicat.duals", Status::Pass, plural(ds.size(), "duality datum", "duality data"), {{"data", list}}));
        } catch (const BudgetExceeded& e) {
          return single(finding(in, "bicat.duals", Status::Inconclusive, "budget exceeded", nullptr,
                                {{"reason", e.what()}, {"budget", o.budget}}));
        }
      });

  leaf<FOpts>(
      *top, s, "contractible", "Whether the duality data for f form an empty or contractible groupoid",
      [](CLI::App& a, FOpts& o) {
        bicat_option(a, o.bicat);
        a.add_option("--f", o.f, "1-cell")->required();
      },
      [](const FOpts& o) {
        Inputs in;
        const auto b = load_bicategory(in, "--bicat", o.bicat);
        in.add("--f", o.f);
        const int f = named("--f", o.f, b.cell1(o.f));
        const auto n = find_right_duals(b, f).size();
        const Json result = {{"data", n}};
        if (duals_groupoid_contractible(b, f))
          return single(finding(in, "bicat.contractible", Status::Pass,
                                n ? "contractible (" + plural(n, "datum", "data") + ")" : "empty", result));
        return single(finding(in, "bicat.contractible", Status::Fail, "not contractible", result,
                              {{"reason", "two duality data are joined by zero or several compatible 2-cells"}, {"data", n}}));
      });

  leaf<DeloopOpts>(
      *top, s, "deloop", "Deloop a monoidal category and validate it",
      [](CLI::App& a, DeloopOpts& o) {
        a.add_option("--monoid", o.monoid, "Discrete monoid JSON, or " + stock_help("monoid"))->required();
        a.add_flag("--full", o.full, "Include the bicategory in the result");
      },
      [](const DeloopOpts& o) {
        Inputs in;
        const auto m = load_monoid(in, "--monoid", o.monoid);
        const auto rep = validate_monoidal(m);
        if (!rep.ok())
          return single(finding(in, "bicat.deloop", Status::Fail, plural(rep.violations.size(), "violation", "violations"),
                                nullptr, violations(rep)));
        const auto b = deloop(m);
        Json result = summary_json(b);
        if (o.full) result["bicategory"] = io::to_json(b);
        return single(finding(in, "bicat.deloop", Status::Pass, "valid: " + shape(b), result));
      });

  leaf<EhOpts>(
      *top, s, "eh", "Eckmann-Hilton: one pair of operations, or the exhaustive sweep",
      [](CLI::App& a, EhOpts& o) {
        auto* n = a.add_option("--n", o.n, "Sweep every unital pair on a set of this size")->check(CLI::Range(1, 4));
        auto* ops = a.add_option("--ops", o.ops, "JSON {\"op1\":op, \"op2\":op, \"e1\":u, \"e2\":u}");
        n->excludes(ops);
        a.add_flag("--serial", o.serial, "Use the serial reference kernel for the sweep");
      },
      [](const EhOpts& o) {
        Inputs in;
        if (!o.ops.empty()) {
          const Json j = load_json(in, "--ops", o.ops);
          const auto op1 = io::binary_op_from_json(j.at("op1")), op2 = io::binary_op_from_json(j.at("op2"));
          const auto r = eckmann_hilton(op1, op2, j.at("e1").get<int>(), j.at("e2").get<int>());
          const Json result = {{"units_valid", r.units_valid}, {"interchange", r.interchange}, {"ops_equal", r.ops_equal},
                               {"commutative", r.commutative}, {"associative", r.associative},
                               {"units_equal", r.units_equal}};
          const bool all = r.units_valid && r.interchange && r.ops_equal && r.commutative && r.associative && r.units_equal;
          if (all) return single(finding(in, "bicat.eh", Status::Pass, "operations agree and commute", result));
          return single(finding(in, "bicat.eh", Status::Fail, "a hypothesis or conclusion fails", result,
                                {{"witnesses", r.witnesses}}));
        }
        if (o.n == 0) throw InvalidInput("one of --n or --ops is required");
        in.add_value("--n", o.n);
        const auto r = o.serial ? eckmann_hilton_sweep_serial(o.n) : eckmann_hilton_sweep(o.n);
        const Json result = {{"ops", r.ops}, {"pairs", r.pairs}, {"interchange", r.interchange},
                             {"counterexamples", r.counterexamples}};
        if (r.counterexamples == 0)
          return single(finding(in, "bicat.eh", Status::Pass,
                                plural(r.interchange, "interchange pair", "interchange pairs") + ", no counterexamples", result));
        return single(finding(in, "bicat.eh", Status::Fail, plural(r.counterexamples, "counterexample", "counterexamples"), result,
                              {{"pairs", r.first_counterexamples}}));
      });

  leaf<NoOpts>(
      *top, s, "cell2", "The walking 2-cell", [](CLI::App&, NoOpts&) {},
      [](const NoOpts&) {
        Inputs in;
        const auto b = cell2();
        const auto rep = validate_bicategory(b);
        Json result = summary_json(b);
        result["bicategory"] = io::to_json(b);
        return single(finding(in, "bicat.cell2", rep.ok() ? Status::Pass : Status::Fail, shape(b), result,
                              rep.ok() ? Json(nullptr) : violations(rep)));
      });
}

}  // namespace hck::cli::detail
