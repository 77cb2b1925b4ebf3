#include "cli_internal.hpp"

namespace hck::cli::detail {

namespace {

using namespace hck::simplicial;

struct SsetOpts {
  std::string sset, cat;
  int dim = 3;
};

void sset_options(CLI::App& a, SsetOpts& o) {
  auto* x = a.add_option("--sset", o.sset, "Simplicial set JSON, or " + stock_help("simplicial set"));
  auto* c = a.add_option("--cat", o.cat, "Use the nerve of this category: JSON, or " + stock_help("category"));
  x->excludes(c);
  a.add_option("--dim", o.dim, "Truncation of the nerve when --cat is given")
      ->check(positive())
      ->capture_default_str();
}

TruncSSet load_input(Inputs& in, const SsetOpts& o) {
  if (!o.sset.empty()) return load_sset(in, "--sset", o.sset);
  if (o.cat.empty()) throw InvalidInput("one of --sset or --cat is required");
  in.add_value("--dim", o.dim);
  return nerve(load_category(in, "--cat", o.cat), o.dim);
}

Json violations(const ValidationReport& rep) {
  Json w = Json::array();
  for (const auto& v : rep.violations) w.push_back({{"kind", v.kind}, {"detail", v.detail}});
  return w;
}

struct NerveOpts {
  std::string cat;
  int dim = 2;
  bool full = false;
};
struct TauOpts {
  SsetOpts x;
  std::size_t max_len = 3;
};
struct HornOpts {
  SsetOpts x;
  int n = 2;
  bool serial = false;
};
struct SegalOpts {
  std::string segal;
};

}  // namespace

void add_simplicial(CLI::App& root, Session& s) {
  auto* top = root.add_subcommand("simplicial", "Simplicial sets, nerves and Segal conditions");
  top->require_subcommand(1);

  leaf<NerveOpts>(
      *top, s, "nerve", "Nerve of a finite category, truncated",
      [](CLI::App& a, NerveOpts& o) {
        a.add_option("--cat", o.cat, "Category JSON, or " + stock_help("category"))->required();
        a.add_option("--dim", o.dim, "Truncation")->check(non_negative())->capture_default_str();
        a.add_flag("--full", o.full, "Include the simplicial set in the result");
      },
      [](const NerveOpts& o) {
        Inputs in;
        const auto c = load_category(in, "--cat", o.cat);
        in.add_value("--dim", o.dim);
        const auto x = nerve(c, o.dim);
        Json result = {{"sizes", x.sizes()}};
        if (o.full) result["sset"] = io::to_json(x);
        return single(finding(in, "simplicial.nerve", Status::Pass, "sizes " + Json(x.sizes()).dump(), result));
      });

  leaf<SsetOpts>(
      *top, s, "segal", "Whether every Segal map is a bijection", sset_options,
      [](const SsetOpts& o) {
        Inputs in;
        const auto x = load_input(in, o);
        const auto r = is_segal(x);
        Json levels = Json::array();
        Json w = nullptr;
        for (const auto& l : r.levels) {
          Json e = {{"k", l.k}, {"simplices", l.simplices}, {"fiber_product", l.fiber_product},
                    {"injective", l.injective}, {"bijective", l.bijective}};
          if (!l.bijective && w.is_null()) w = e;
          levels.push_back(e);
        }
        if (r.segal) return single(finding(in, "simplicial.segal", Status::Pass, "Segal", {{"levels", levels}}));
        return single(finding(in, "simplicial.segal", Status::Fail, "Segal map not bijective at k = " + w["k"].dump(),
                              {{"levels", levels}}, w));
      });

  leaf<TauOpts>(
      *top, s, "tau1", "Fundamental category: its presentation and, when saturated, its table",
      [](CLI::App& a, TauOpts& o) {
        sset_options(a, o.x);
        a.add_option("--max-len", o.max_len, "Path window for the quotient")->check(positive())->capture_default_str();
      },
      [](const TauOpts& o) {
        Inputs in;
        const auto x = load_input(in, o.x);
        in.add_value("--max-len", o.max_len);
        const auto p = fundamental_category(x);
        Json result = {{"presentation", io::to_json(p)}};
        try {
          const auto q = fpcat::quotient_category(p, o.max_len);
          result["category"] = io::to_json(q.category);
          return single(finding(in, "simplicial.tau1", Status::Pass,
                                plural(q.category.num_objects(), "object", "objects") + ", " +
                                    plural(q.category.num_morphisms(), "morphism", "morphisms"),
                                result));
        } catch (const fpcat::NotSaturated& e) {
          return single(finding(in, "simplicial.tau1", Status::Inconclusive, "quotient not saturated", result,
                                {{"reason", e.what()}, {"max_len", o.max_len}}));
        }
      });

  leaf<HornOpts>(
      *top, s, "horns", "Count fillers of every inner horn",
      [](CLI::App& a, HornOpts& o) {
        sset_options(a, o.x);
        a.add_option("--n", o.n, "Horn dimension")->check(CLI::Range(2, 3))->capture_default_str();
        a.add_flag("--serial", o.serial, "Use the serial reference kernel");
      },
      [](const HornOpts& o) {
        Inputs in;
        const auto x = load_input(in, o.x);
        in.add_value("--n", o.n);
        const auto r = o.serial ? inner_horn_fillers_serial(x, o.n) : inner_horn_fillers(x, o.n);
        Json horns = Json::array();
        Json w = nullptr;
        for (const auto& h : r.horns) {
          Json e = {{"missing", h.missing}, {"faces", h.faces}, {"fillers", h.fillers}};
          if (h.fillers != 1 && w.is_null()) w = e;
          horns.push_back(e);
        }
        const Json result = {{"horns", horns}, {"all_fillable", r.all_fillable()}, {"all_unique", r.all_unique()}};
        const std::string summary = plural(r.horns.size(), "inner horn", "inner horns");
        if (w.is_null()) return single(finding(in, "simplicial.horns", Status::Pass, summary + ", unique fillers", result));
        return single(finding(in, "simplicial.horns", Status::Fail, summary + ", some without a unique filler", result, w));
      });

  leaf<SegalOpts>(
      *top, s, "hcat", "Homotopy category of Segal-space data",
      [](CLI::App& a, SegalOpts& o) {
        a.add_option("--segal", o.segal, "Segal space JSON, or " + stock_help("Segal space"))->required();
      },
      [](const SegalOpts& o) {
        Inputs in;
        const auto x = load_segal_space(in, "--segal", o.segal);
        try {
          const auto c = homotopy_category(x);
          return single(finding(in, "simplicial.hcat", Status::Pass,
                                plural(c.num_objects(), "object", "objects") + ", " + plural(c.num_morphisms(), "morphism", "morphisms"),
                                io::to_json(c)));
        } catch (const CompositionIllDefined& e) {
          return single(finding(in, "simplicial.hcat", Status::Fail, "composition ill-defined", nullptr,
                                {{"reason", e.what()}, {"lifts", e.lifts()}}));
        } catch (const SegalMapNotComponentSurjective& e) {
          return single(finding(in, "simplicial.hcat", Status::Fail, "Segal map not surjective on components", nullptr,
                                {{"reason", e.what()}}));
        }
      });

  leaf<SsetOpts>(
      *top, s, "pi0", "Connected components", sset_options,
      [](const SsetOpts& o) {
        Inputs in;
        const auto x = load_input(in, o);
        const auto c = pi0(x);
        return single(finding(in, "simplicial.pi0", Status::Pass, plural(c.count, "component", "components"),
                              {{"count", c.count}, {"of", c.of}}));
      });

  leaf<SsetOpts>(
      *top, s, "validate", "Check the simplicial identities", sset_options,
      [](const SsetOpts& o) {
        Inputs in;
        const auto x = load_input(in, o);
        const auto rep = validate_sset(x);
        if (rep.ok()) return single(finding(in, "simplicial.validate", Status::Pass, "valid", {{"sizes", x.sizes()}}));
        return single(finding(in, "simplicial.validate", Status::Fail,
                              plural(rep.violations.size(), "violation", "violations"), nullptr, violations(rep)));
      });
}

}  // namespace hck::cli::detail
