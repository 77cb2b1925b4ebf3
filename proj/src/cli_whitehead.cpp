#include "cli_internal.hpp"

namespace hck::cli::detail {

namespace {

using namespace hck::wh;

Json group_json(const FinAbGroup& g) {
  Json j = io::to_json(g);
  j["text"] = g.to_string();
  return j;
}

wh::Element parse_element(const std::string& flag, const std::string& text) {
  wh::Element out;
  for (const auto& x : split_list(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(x, &used));
      if (used != x.size()) throw std::invalid_argument(x);
    } catch (const std::exception&) {
      throw InvalidInput(flag + ": '" + x + "' is not an integer");
    }
  }
  return out;
}

FinAbGroup parse_group_flag(const std::string& text) {
  try {
    return parse_group(text);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("--group: ") + e.what());
  }
}

struct GammaOpts {
  std::string group;
  std::uint64_t max_order = 16;
  bool serial = false;
};
struct MatrixOpts {
  std::string matrix;
};
struct MapOpts {
  std::string map;
};
struct TypeOpts {
  std::string type, s;
};
struct BraidOpts {
  std::string data;
};

void gamma_options(CLI::App& a, GammaOpts& o) {
  a.add_option("--group", o.group, "Cyclic orders, comma separated (\"2,4\"); \"0\" is trivial")->required();
  a.add_option("--max-order", o.max_order, "Largest |A| for the presentation")
      ->check(positive())
      ->capture_default_str();
  a.add_flag("--serial", o.serial, "Use the serial reference kernel");
}

Report run_gamma(const GammaOpts& o) {
  Inputs in;
  const auto a = parse_group_flag(o.group);
  in.add("--group", io::to_json(a).dump());
  in.add_value("--max-order", o.max_order);
  try {
    const auto g = o.serial ? gamma_presentation_serial(a, o.max_order) : gamma_presentation(a, o.max_order);
    Json universal = Json::array();
    for (const auto& x : g.universal) universal.push_back(x);
    const Json result = {{"group", group_json(a)},        {"gamma", group_json(g.gamma)},
                         {"universal", universal},        {"generators", g.generators},
                         {"relations", g.relations},      {"smith_verified", g.smith_verified}};
    const std::string summary = "Γ(" + a.to_string() + ") = " + g.gamma.to_string();
    if (!g.smith_verified)
      return single(finding(in, "whitehead.gamma", Status::Fail, summary, result,
                            {{"reason", "Smith normal form certificate failed"}}));
    return single(finding(in, "whitehead.gamma", Status::Pass, summary, result));
  } catch (const BudgetExceeded& e) {
    return single(finding(in, "whitehead.gamma", Status::Inconclusive, "group too large for the presentation", nullptr,
                          {{"reason", e.what()}, {"max_order", o.max_order}}));
  }
}

}  // namespace

void add_whitehead(CLI::App& root, Session& s) {
  auto* top = root.add_subcommand("whitehead", "Abelian groups, Γ and quadratic maps");
  top->require_subcommand(1);

  leaf<GammaOpts>(root, s, "gamma", "Γ(A) from its presentation (same as whitehead gamma)", gamma_options, run_gamma);
  leaf<GammaOpts>(*top, s, "gamma", "Γ(A) from its presentation, with the universal map", gamma_options, run_gamma);

  leaf<GammaOpts>(
      *top, s, "gamma-fast", "Γ(A) from the closed form", [](CLI::App& a, GammaOpts& o) {
        a.add_option("--group", o.group, "Cyclic orders and Z summands, comma separated (\"2,Z\")")->required();
      },
      [](const GammaOpts& o) {
        Inputs in;
        const auto a = parse_group_flag(o.group);
        in.add("--group", io::to_json(a).dump());
        const auto g = gamma_structure(a);
        return single(finding(in, "whitehead.gamma-fast", Status::Pass, "Γ(" + a.to_string() + ") = " + g.to_string(),
                              {{"group", group_json(a)}, {"gamma", group_json(g)}}));
      });

  leaf<MatrixOpts>(
      *top, s, "snf", "Smith normal form with unimodular certificates",
      [](CLI::App& a, MatrixOpts& o) { a.add_option("--matrix", o.matrix, "Integer matrix JSON (list of rows)")->required(); },
      [](const MatrixOpts& o) {
        Inputs in;
        const auto m = load_int_matrix(in, "--matrix", o.matrix);
        const auto sm = smith_normal_form(m);
        Json diag = Json::array();
        for (const auto& d : smith_diagonal(sm)) diag.push_back(d.get_str());
        const Json result = {{"d", io::to_json(sm.d)}, {"u", io::to_json(sm.u)}, {"v", io::to_json(sm.v)},
                             {"diagonal", diag}, {"verified", sm.verified}};
        if (!sm.verified)
          return single(finding(in, "whitehead.snf", Status::Fail, "certificate failed", result,
                                {{"reason", "U m V != D or U, V not unimodular"}}));
        return single(finding(in, "whitehead.snf", Status::Pass, "diagonal " + diag.dump(), result));
      });

  leaf<MapOpts>(
      *top, s, "quadratic", "Check the quadratic-map laws of a table",
      [](CLI::App& a, MapOpts& o) { a.add_option("--map", o.map, "Quadratic map JSON")->required(); },
      [](const MapOpts& o) {
        Inputs in;
        const auto f = load_quad_map(in, "--map", o.map);
        const auto v = is_quadratic(f);
        if (v.quadratic) return single(finding(in, "whitehead.quadratic", Status::Pass, "quadratic"));
        return single(finding(in, "whitehead.quadratic", Status::Fail, "not quadratic (" + v.witness->law + ")", nullptr,
                              io::to_json(*v.witness)));
      });

  leaf<MapOpts>(
      *top, s, "induced", "The homomorphism Γ(A) -> B induced by a quadratic map",
      [](CLI::App& a, MapOpts& o) { a.add_option("--map", o.map, "Quadratic map JSON")->required(); },
      [](const MapOpts& o) {
        Inputs in;
        const auto f = load_quad_map(in, "--map", o.map);
        try {
          const auto h = induced_hom(f);
          const Json result = {{"hom", io::to_json(h.hom)}, {"gamma", group_json(h.gamma.gamma)},
                               {"reproduces", h.reproduces}, {"unique", h.unique}, {"certificate", h.certificate}};
          if (!h.reproduces || !h.unique)
            return single(finding(in, "whitehead.induced", Status::Fail, "certificate failed", result,
                                  {{"reason", h.certificate}}));
          return single(finding(in, "whitehead.induced", Status::Pass,
                                "Γ(" + f.domain.to_string() + ") = " + h.gamma.gamma.to_string() + " -> " +
                                    f.codomain.to_string(),
                                result));
        } catch (const NotQuadratic& e) {
          return single(finding(in, "whitehead.induced", Status::Fail, "not quadratic", nullptr, io::to_json(e.witness())));
        }
      });

  leaf<TypeOpts>(
      *top, s, "sequence", "H₄ and H₃ from the certain exact sequence of a 3-type",
      [](CLI::App& a, TypeOpts& o) {
        a.add_option("--type", o.type, "3-type JSON, or " + stock_help("3-type"))->required();
      },
      [](const TypeOpts& o) {
        Inputs in;
        const auto t = load_three_type(in, "--type", o.type);
        const auto e = certain_exact_sequence(t);
        return single(finding(in, "whitehead.sequence", Status::Pass,
                              "H4 = " + e.h4.to_string() + ", H3 = " + e.h3.to_string(),
                              {{"gamma", group_json(e.gamma)}, {"h3", group_json(e.h3)}, {"h4", group_json(e.h4)},
                               {"map", io::to_json(e.map)}}));
      });

  leaf<TypeOpts>(
      *top, s, "lift", "Whether s in π₂ lifts, i.e. q(s) = 0",
      [](CLI::App& a, TypeOpts& o) {
        a.add_option("--type", o.type, "3-type JSON, or " + stock_help("3-type"))->required();
        a.add_option("--s", o.s, "Element of π₂, comma separated coordinates")->required();
      },
      [](const TypeOpts& o) {
        Inputs in;
        const auto t = load_three_type(in, "--type", o.type);
        const auto x = parse_element("--s", o.s);
        in.add_value("--s", x);
        if (lift_obstruction(t, x)) return single(finding(in, "whitehead.lift", Status::Pass, "q(s) = 0, lifts"));
        const Json qs = t.q_one ? Json(t.pi3.scale(x.at(0) * x.at(0), *t.q_one)) : Json(t.q(t.pi2.normalize(x)));
        return single(finding(in, "whitehead.lift", Status::Fail, "q(s) != 0", nullptr, {{"s", x}, {"q(s)", qs}}));
      });

  leaf<BraidOpts>(
      *top, s, "qbraid", "q(x) = braid(x, x) from braided 2-group data, with its quadraticity",
      [](CLI::App& a, BraidOpts& o) { a.add_option("--data", o.data, "Braided data JSON")->required(); },
      [](const BraidOpts& o) {
        Inputs in;
        const auto b = load_braided(in, "--data", o.data);
        const auto r = q_from_braiding(b);
        const Json result = {{"q", io::to_json(r.q)}};
        if (r.verdict.quadratic) return single(finding(in, "whitehead.qbraid", Status::Pass, "q is quadratic", result));
        return single(finding(in, "whitehead.qbraid", Status::Fail, "q is not quadratic (" + r.verdict.witness->law + ")",
                              result, io::to_json(*r.verdict.witness)));
      });
}

}  // namespace hck::cli::detail
