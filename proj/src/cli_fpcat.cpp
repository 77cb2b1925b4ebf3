#include "cli_internal.hpp"

namespace hck::cli::detail {

namespace {

using namespace hck::fpcat;

fpcat::Path parse_path(const Graph& g, const std::string& flag, const std::string& text, const std::string& start) {
  const auto ids = split_list(text);
  try {
    if (!start.empty()) return make_path(g, start, ids);
    if (ids.empty()) throw InvalidInput("an empty path needs --start");
    return make_path(g, ids);
  } catch (const InvalidInput& e) {
    throw InvalidInput(flag + ": " + e.what());
  }
}

Json steps_json(const FinPresentation& p, const std::vector<RewriteStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps)
    out.push_back({{"relation", s.relation},
                   {"direction", s.forward ? "lhs->rhs" : "rhs->lhs"},
                   {"position", s.position},
                   {"result", io::to_json(p.graph(), s.result)}});
  return out;
}

// The image of a path under an assignment, or -1 when a composite is undefined.
int image(const FinPresentation& p, const FinCategory& c, const Assignment& a, const Path& path) {
  const auto& g = p.graph();
  int acc = c.identity(c.object(a.objects.at(g.vertices()[static_cast<std::size_t>(path.start)])));
  for (int arrow : path.arrows) {
    acc = c.compose(c.morphism(a.arrows.at(g.arrows()[static_cast<std::size_t>(arrow)].id)), acc);
    if (acc < 0) return -1;
  }
  return acc;
}

struct PathsOpts {
  std::string graph, from, to;
  std::size_t max_len = 3;
};
struct WordOpts {
  std::string pres, u, v, start;
  std::size_t budget = 6;
  bool serial = false;
};
struct QuotientOpts {
  std::string pres;
  std::size_t max_len = 3;
  std::size_t max_window = 2'000'000;
};
struct FunctorOpts {
  std::string pres, target, assign;
};
struct CatOpts {
  std::string cat;
};
struct CellOpts {
  int k = 0;
};

}  // namespace

void add_fpcat(CLI::App& root, Session& s) {
  auto* top = root.add_subcommand("fpcat", "Finitely presented categories");
  top->require_subcommand(1);

  leaf<PathsOpts>(
      *top, s, "paths", "Enumerate paths between two vertices",
      [](CLI::App& a, PathsOpts& o) {
        a.add_option("--graph", o.graph, "Graph or presentation JSON, or " + stock_help("presentation"))->required();
        a.add_option("--from", o.from, "Start vertex")->required();
        a.add_option("--to", o.to, "End vertex")->required();
        a.add_option("--max-len", o.max_len, "Longest path")->capture_default_str();
      },
      [](const PathsOpts& o) {
        Inputs in;
        const auto p = load_presentation(in, "--graph", o.graph);
        in.add("--from", o.from);
        in.add("--to", o.to);
        in.add_value("--max-len", o.max_len);
        const auto paths = enumerate_paths(p.graph(), o.from, o.to, o.max_len);
        Json list = Json::array();
        for (const auto& path : paths) list.push_back(io::to_json(p.graph(), path));
        return single(finding(in, "fpcat.paths", Status::Pass, plural(paths.size(), "path", "paths"),
                              {{"paths", list}, {"count", paths.size()}}));
      });

  leaf<WordOpts>(
      *top, s, "word", "Decide u = v in the presented category within a path-length window",
      [](CLI::App& a, WordOpts& o) {
        a.add_option("--pres", o.pres, "Presentation JSON, or " + stock_help("presentation"))->required();
        a.add_option("--u", o.u, "Arrow ids, first applied first, comma separated")->required();
        a.add_option("--v", o.v, "Arrow ids, comma separated")->required();
        a.add_option("--start", o.start, "Start vertex (needed for identity paths)");
        a.add_option("--budget", o.budget, "Path window: longest intermediate path")
            ->check(positive())
            ->capture_default_str();
        a.add_flag("--serial", o.serial, "Use the serial reference kernel");
      },
      [](const WordOpts& o) {
        Inputs in;
        const auto p = load_presentation(in, "--pres", o.pres);
        const auto u = parse_path(p.graph(), "--u", o.u, o.start);
        const auto v = parse_path(p.graph(), "--v", o.v, o.start);
        in.add("--u", o.u);
        in.add("--v", o.v);
        in.add("--start", o.start);
        in.add_value("--budget", o.budget);
        const auto r = o.serial ? word_problem_serial(p, u, v, o.budget) : word_problem(p, u, v, o.budget);
        Json result = {{"decision", to_string(r.decision)}, {"explored", r.explored}};
        const std::string d = to_string(r.decision);
        if (r.decision == Decision::Equal) {
          result["steps"] = steps_json(p, r.witness);
          return single(finding(in, "fpcat.word", Status::Pass, d, result));
        }
        if (r.decision == Decision::Distinct)
          return single(finding(in, "fpcat.word", Status::Fail, d, result,
                                {{"reason", "the class of one side is closed within the window"}, {"explored", r.explored}}));
        return single(finding(in, "fpcat.word", Status::Inconclusive, d, result,
                              {{"reason", "window exhausted"}, {"budget", o.budget}, {"explored", r.explored}}));
      });

  leaf<QuotientOpts>(
      *top, s, "quotient", "The presented category from a saturated path window",
      [](CLI::App& a, QuotientOpts& o) {
        a.add_option("--pres", o.pres, "Presentation JSON, or " + stock_help("presentation"))->required();
        a.add_option("--max-len", o.max_len, "Path window")->check(positive())->capture_default_str();
        a.add_option("--max-window", o.max_window, "Largest number of paths in the window")
            ->check(positive())
            ->capture_default_str();
      },
      [](const QuotientOpts& o) {
        Inputs in;
        const auto p = load_presentation(in, "--pres", o.pres);
        in.add_value("--max-len", o.max_len);
        in.add_value("--max-window", o.max_window);
        try {
          const auto q = quotient_category(p, o.max_len, o.max_window);
          const auto& c = q.category;
          return single(finding(in, "fpcat.quotient", Status::Pass,
                                plural(c.num_objects(), "object", "objects") + ", " + plural(c.num_morphisms(), "morphism", "morphisms"),
                                io::to_json(c)));
        } catch (const NotSaturated& e) {
          return single(finding(in, "fpcat.quotient", Status::Inconclusive, "not saturated", nullptr,
                                {{"reason", e.what()}, {"max_len", o.max_len}}));
        }
      });

  leaf<FunctorOpts>(
      *top, s, "functor", "Check that an assignment extends to a functor",
      [](CLI::App& a, FunctorOpts& o) {
        a.add_option("--pres", o.pres, "Presentation JSON, or " + stock_help("presentation"))->required();
        a.add_option("--target", o.target, "Category JSON, or " + stock_help("category"))->required();
        a.add_option("--assign", o.assign, "Assignment JSON")->required();
      },
      [](const FunctorOpts& o) {
        Inputs in;
        const auto p = load_presentation(in, "--pres", o.pres);
        const auto c = load_category(in, "--target", o.target);
        const auto a = load_assignment(in, "--assign", o.assign);
        if (check_functor(p, c, a)) return single(finding(in, "fpcat.functor", Status::Pass, "functor"));
        Json w = {{"reason", "a relation is not respected"}};
        for (std::size_t r = 0; r < p.relations().size(); ++r) {
          const int l = image(p, c, a, p.relations()[r].lhs), rr = image(p, c, a, p.relations()[r].rhs);
          if (l != rr) {
            auto name = [&](int m) { return m < 0 ? std::string("undefined") : c.morphisms()[static_cast<std::size_t>(m)].name; };
            w = {{"relation", r}, {"lhs", name(l)}, {"rhs", name(rr)}};
            break;
          }
        }
        return single(finding(in, "fpcat.functor", Status::Fail, "not a functor", nullptr, w));
      });

  leaf<CatOpts>(
      *top, s, "gaunt", "Whether the only isomorphisms are identities",
      [](CLI::App& a, CatOpts& o) {
        a.add_option("--cat", o.cat, "Category JSON, or " + stock_help("category"))->required();
      },
      [](const CatOpts& o) {
        Inputs in;
        const auto c = load_category(in, "--cat", o.cat);
        if (is_gaunt(c)) return single(finding(in, "fpcat.gaunt", Status::Pass, "gaunt"));
        Json w = nullptr;
        const int n = static_cast<int>(c.num_morphisms());
        for (int f = 0; f < n && w.is_null(); ++f) {
          if (c.is_identity(f)) continue;
          for (int g = 0; g < n; ++g)
            if (c.compose(g, f) == c.identity(c.src(f)) && c.compose(f, g) == c.identity(c.tgt(f))) {
              w = {{"isomorphism", c.morphisms()[static_cast<std::size_t>(f)].name},
                   {"inverse", c.morphisms()[static_cast<std::size_t>(g)].name}};
              break;
            }
        }
        return single(finding(in, "fpcat.gaunt", Status::Fail, "has a non-identity isomorphism", nullptr, w));
      });

  leaf<CatOpts>(
      *top, s, "validate", "Check the category laws of a composition table",
      [](CLI::App& a, CatOpts& o) {
        a.add_option("--cat", o.cat, "Category JSON, or " + stock_help("category"))->required();
      },
      [](const CatOpts& o) {
        Inputs in;
        const auto c = load_category(in, "--cat", o.cat);
        const auto rep = validate_category(c);
        if (rep.ok()) return single(finding(in, "fpcat.validate", Status::Pass, "valid"));
        Json w = Json::array();
        for (const auto& v : rep.violations) w.push_back({{"kind", v.kind}, {"detail", v.detail}});
        return single(finding(in, "fpcat.validate", Status::Fail, plural(w.size(), "violation", "violations"), nullptr, w));
      });

  leaf<CellOpts>(
      *top, s, "cell", "The free-walking k-cell for k = 0, 1",
      [](CLI::App& a, CellOpts& o) { a.add_option("--k", o.k, "Cell dimension")->required()->check(CLI::Range(0, 1)); },
      [](const CellOpts& o) {
        Inputs in;
        in.add_value("--k", o.k);
        const auto p = cell(o.k);
        return single(finding(in, "fpcat.cell", Status::Pass,
                              plural(p.graph().num_vertices(), "vertex", "vertices") + ", " +
                                  plural(p.graph().num_arrows(), "arrow", "arrows"),
                              io::to_json(p)));
      });
}

}  // namespace hck::cli::detail
