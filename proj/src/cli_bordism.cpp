#include "cli_internal.hpp"

namespace hck::cli::detail {

namespace {

using namespace hck::bordism;

struct WordOpts {
  std::string word, calculus = "oriented";
};
struct EqualOpts {
  std::string u, v, calculus = "oriented";
};
struct EvalOpts {
  std::string word, tft, calculus = "oriented";
};
struct TftOpts {
  std::string tft, calculus = "oriented";
};
struct QuotientOpts {
  std::size_t max_len = 6, max_boundary = 4;
};

void calculus_option(CLI::App& a, std::string& c) {
  a.add_option("--calculus", c, "oriented, unoriented or quotient")
      ->check(CLI::IsMember({"oriented", "unoriented", "quotient"}))
      ->capture_default_str();
}

const char* kWordHelp = "Word file, or the word itself (dom:+,- ; cap@1:LR ; cup@0:RL ; jup@2)";

Json nf_json(const NormalForm& nf) {
  Json j = io::to_json(nf);
  j["text"] = nf.to_string();
  return j;
}

}  // namespace

void add_bordism(CLI::App& root, Session& s) {
  auto* top = root.add_subcommand("bordism", "1-dimensional bordism words and field theories");
  top->require_subcommand(1);

  leaf<WordOpts>(
      *top, s, "typecheck", "The codomain of a word, or the first ill-typed slice",
      [](CLI::App& a, WordOpts& o) {
        a.add_option("--word", o.word, kWordHelp)->required();
        calculus_option(a, o.calculus);
      },
      [](const WordOpts& o) {
        Inputs in;
        const auto w = load_word(in, "--word", o.word);
        in.add("--calculus", o.calculus);
        try {
          const auto cod = typecheck(w, parse_calculus(o.calculus));
          return single(finding(in, "bordism.typecheck", Status::Pass, "codomain (" + to_string(cod) + ")",
                                {{"codomain", to_string(cod)}}));
        } catch (const IllTyped& e) {
          return single(finding(in, "bordism.typecheck", Status::Fail, "ill-typed at slice " + std::to_string(e.position()),
                                nullptr, {{"position", e.position()}, {"reason", e.what()}}));
        }
      });

  leaf<WordOpts>(
      *top, s, "nf", "Planar normal form of a word",
      [](CLI::App& a, WordOpts& o) {
        a.add_option("--word", o.word, kWordHelp)->required();
        calculus_option(a, o.calculus);
      },
      [](const WordOpts& o) {
        Inputs in;
        const auto w = load_word(in, "--word", o.word);
        in.add("--calculus", o.calculus);
        const auto nf = normal_form(w, parse_calculus(o.calculus));
        return single(finding(in, "bordism.nf", Status::Pass, nf.to_string(), nf_json(nf)));
      });

  leaf<EqualOpts>(
      *top, s, "equal", "Whether two words present the same bordism",
      [](CLI::App& a, EqualOpts& o) {
        a.add_option("--u", o.u, kWordHelp)->required();
        a.add_option("--v", o.v, kWordHelp)->required();
        calculus_option(a, o.calculus);
      },
      [](const EqualOpts& o) {
        Inputs in;
        const auto u = load_word(in, "--u", o.u), v = load_word(in, "--v", o.v);
        in.add("--calculus", o.calculus);
        const auto c = parse_calculus(o.calculus);
        const auto r = compare_words(u, v, c);
        if (r.equal) return single(finding(in, "bordism.equal", Status::Pass, "equal"));
        Json w = {{"boundary_mismatch", r.boundary_mismatch}};
        if (!r.boundary_mismatch) {
          w["u"] = nf_json(normal_form(u, c));
          w["v"] = nf_json(normal_form(v, c));
        }
        return single(finding(in, "bordism.equal", Status::Fail,
                              r.boundary_mismatch ? "different boundaries" : "different normal forms", nullptr, w));
      });

  leaf<EvalOpts>(
      *top, s, "eval", "Evaluate a word in a matrix field theory",
      [](CLI::App& a, EvalOpts& o) {
        a.add_option("--word", o.word, kWordHelp)->required();
        a.add_option("--tft", o.tft, "Field theory JSON, or " + stock_help("field theory"))->required();
        calculus_option(a, o.calculus);
      },
      [](const EvalOpts& o) {
        Inputs in;
        const auto w = load_word(in, "--word", o.word);
        const auto z = load_tft(in, "--tft", o.tft);
        in.add("--calculus", o.calculus);
        try {
          const auto m = evaluate_tft(w, z, parse_calculus(o.calculus));
          const bool scalar = m.rows() == 1 && m.cols() == 1;
          const std::string summary = scalar ? "scalar " + format_rational(m(0, 0))
                                             : std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix";
          return single(finding(in, "bordism.eval", Status::Pass, summary, {{"matrix", io::to_json(m)}}));
        } catch (const InvalidTFTData& e) {
          throw InvalidInput(std::string("--tft: ") + e.what());
        } catch (const DimensionMismatch& e) {
          throw InvalidInput(std::string("--tft: ") + e.what());
        }
      });

  leaf<TftOpts>(
      *top, s, "validate", "Check the zigzag and pairing conditions of a field theory",
      [](CLI::App& a, TftOpts& o) {
        a.add_option("--tft", o.tft, "Field theory JSON, or " + stock_help("field theory"))->required();
        calculus_option(a, o.calculus);
      },
      [](const TftOpts& o) {
        Inputs in;
        const auto z = load_tft(in, "--tft", o.tft);
        in.add("--calculus", o.calculus);
        const auto rep = validate_tft(z, parse_calculus(o.calculus));
        if (rep.ok()) return single(finding(in, "bordism.validate", Status::Pass, "valid", {{"dim", z.dim}}));
        Json w = Json::array();
        for (const auto& v : rep.violations) w.push_back({{"kind", v.kind}, {"detail", v.detail}});
        return single(finding(in, "bordism.validate", Status::Fail, plural(w.size(), "violation", "violations"), nullptr, w));
      });

  leaf<QuotientOpts>(
      *top, s, "quotient-check", "Compare the quotient and unoriented calculi by normal forms",
      [](CLI::App& a, QuotientOpts& o) {
        a.add_option("--max-len", o.max_len, "Word length L")->check(positive())->capture_default_str();
        a.add_option("--max-boundary", o.max_boundary, "Boundary points per side")
            ->check(non_negative())
            ->capture_default_str();
      },
      [](const QuotientOpts& o) {
        Inputs in;
        in.add_value("--max-len", o.max_len);
        in.add_value("--max-boundary", o.max_boundary);
        const auto r = quotient_functor_check(o.max_len, o.max_boundary);
        const Json result = {{"relations_checked", r.relations_checked},
                             {"boundaries", r.boundaries},
                             {"unoriented_forms", r.unoriented_forms},
                             {"quotient_forms", r.quotient_forms},
                             {"quotient_forms_enumerated", r.quotient_forms_enumerated}};
        if (r.report.ok())
          return single(finding(in, "bordism.quotient-check", Status::Pass,
                                std::to_string(r.unoriented_forms) + " forms matched over " +
                                    plural(r.boundaries, "boundary", "boundaries"),
                                result));
        Json w = Json::array();
        for (const auto& v : r.report.violations) w.push_back({{"kind", v.kind}, {"detail", v.detail}});
        return single(finding(in, "bordism.quotient-check", Status::Fail,
                              plural(w.size(), "violation", "violations"), result, w));
      });
}

}  // namespace hck::cli::detail
