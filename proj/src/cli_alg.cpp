#include "cli_internal.hpp"

namespace hck::cli::detail {

namespace {

using namespace hck::alg;

Json certificate_json(const RankCertificate& c) {
  return {{"equations", c.equations}, {"unknowns", c.unknowns}, {"rank", c.rank}, {"augmented_rank", c.augmented_rank}};
}

struct AlgOpts {
  std::string alg;
  int bound = 3;
};
struct BimodOpts {
  std::string m;
  bool left = false;
  int bound = 3;
};
struct PairOpts {
  std::string m, n;
  int bound = 3;
  std::size_t budget = 200'000;
};

void alg_option(CLI::App& a, AlgOpts& o, bool bound) {
  a.add_option("--alg", o.alg, "Algebra JSON, or " + stock_help("algebra"))->required();
  if (bound)
    a.add_option("--bound", o.bound, "Coefficient sweep bound for isomorphism search")
        ->check(positive())
        ->capture_default_str();
}

}  // namespace

void add_alg(CLI::App& root, Session& s) {
  auto* top = root.add_subcommand("alg", "Algebras and bimodules over Q");
  top->require_subcommand(1);

  leaf<PairOpts>(
      *top, s, "tensor", "Relative tensor product M ⊗_B N",
      [](CLI::App& a, PairOpts& o) {
        a.add_option("--m", o.m, "A-B bimodule JSON, or " + stock_help("bimodule"))->required();
        a.add_option("--n", o.n, "B-C bimodule")->required();
      },
      [](const PairOpts& o) {
        Inputs in;
        const auto m = load_bimodule(in, "--m", o.m), n = load_bimodule(in, "--n", o.n);
        if (!(m.right == n.left)) throw InvalidInput("--n: its left algebra is not the right algebra of --m");
        const auto t = tensor_over(m, n);
        return single(finding(in, "alg.tensor", Status::Pass, "dim " + std::to_string(t.result.dim),
                              {{"dim", t.result.dim}, {"bimodule", io::to_json(t.result)}}));
      });

  leaf<BimodOpts>(
      *top, s, "dual", "Right (or left) dual of a bimodule with its zigzag check",
      [](CLI::App& a, BimodOpts& o) {
        a.add_option("--m", o.m, "Bimodule JSON, or " + stock_help("bimodule"))->required();
        a.add_flag("--left", o.left, "Left dual instead");
      },
      [](const BimodOpts& o) {
        Inputs in;
        const auto m = load_bimodule(in, "--m", o.m);
        in.add_value("--left", o.left);
        const auto r = o.left ? left_dual_candidate(m) : right_dual_candidate(m);
        if (!r.datum)
          return single(finding(in, "alg.dual", Status::Fail, "not dualizable", nullptr,
                                {{"reason", "the coevaluation system is inconsistent"},
                                 {"certificate", certificate_json(r.certificate)}}));
        const auto& d = *r.datum;
        const auto& dual = o.left ? d.f : d.g;
        const bool zz = check_zigzag(d);
        return single(finding(in, "alg.dual", zz ? Status::Pass : Status::Fail,
                              "dual of dim " + std::to_string(dual.dim) + (zz ? ", zigzag holds" : ", zigzag fails"),
                              {{"dim", dual.dim}, {"ev", io::to_json(d.ev)}, {"coev", io::to_json(d.coev)}},
                              zz ? Json(nullptr) : Json{{"reason", "snake composites are not identities"}}));
      });

  leaf<AlgOpts>(
      *top, s, "separable", "Separability idempotent or an infeasibility certificate",
      [](CLI::App& a, AlgOpts& o) { alg_option(a, o, false); },
      [](const AlgOpts& o) {
        Inputs in;
        const auto a = load_algebra(in, "--alg", o.alg);
        const auto r = is_separable(a);
        if (r.separable) return single(finding(in, "alg.separable", Status::Pass, "separable", {{"idempotent", io::to_json(*r.idempotent)}}));
        return single(finding(in, "alg.separable", Status::Fail, "not separable", nullptr,
                              {{"certificate", certificate_json(r.certificate)}}));
      });

  leaf<AlgOpts>(
      *top, s, "serre", "The Serre automorphism and whether it is the identity bimodule",
      [](CLI::App& a, AlgOpts& o) { alg_option(a, o, true); },
      [](const AlgOpts& o) {
        Inputs in;
        const auto a = load_algebra(in, "--alg", o.alg);
        in.add_value("--bound", o.bound);
        try {
          const auto sa = serre_automorphism(a);
          const auto iso = bimodule_iso_exists(sa, identity_bimodule(a), o.bound);
          const bool identity = iso.iso.has_value();
          return single(finding(in, "alg.serre", Status::Pass,
                                "dim " + std::to_string(sa.dim) + (identity ? ", isomorphic to the identity" : ", not the identity"),
                                {{"dim", sa.dim}, {"identity", identity}, {"bimodule", io::to_json(sa)}}));
        } catch (const EvNotRightDualizable& e) {
          return single(finding(in, "alg.serre", Status::Fail, "ev has no adjoint", nullptr,
                                {{"reason", e.what()}, {"certificate", certificate_json(e.certificate())}}));
        } catch (const InconclusiveWithinBudget& e) {
          return single(finding(in, "alg.serre", Status::Inconclusive, "isomorphism search inconclusive", nullptr,
                                {{"reason", e.what()}, {"bound", o.bound}}));
        }
      });

  leaf<AlgOpts>(
      *top, s, "radford", "Whether S ⊗_A S is isomorphic to A",
      [](CLI::App& a, AlgOpts& o) { alg_option(a, o, true); },
      [](const AlgOpts& o) {
        Inputs in;
        const auto a = load_algebra(in, "--alg", o.alg);
        in.add_value("--bound", o.bound);
        try {
          if (radford_check(a, o.bound)) return single(finding(in, "alg.radford", Status::Pass, "S ⊗ S ≅ A"));
          return single(finding(in, "alg.radford", Status::Fail, "S ⊗ S is not isomorphic to A", nullptr,
                                {{"reason", "no isomorphism exists"}}));
        } catch (const EvNotRightDualizable& e) {
          return single(finding(in, "alg.radford", Status::Fail, "Serre construction fails", nullptr,
                                {{"reason", e.what()}, {"certificate", certificate_json(e.certificate())}}));
        } catch (const InconclusiveWithinBudget& e) {
          return single(finding(in, "alg.radford", Status::Inconclusive, "isomorphism search inconclusive", nullptr,
                                {{"reason", e.what()}, {"bound", o.bound}}));
        }
      });

  leaf<BimodOpts>(
      *top, s, "ambi", "Whether the right dual of a bimodule is also its left dual",
      [](CLI::App& a, BimodOpts& o) {
        a.add_option("--m", o.m, "Bimodule JSON, or " + stock_help("bimodule"))->required();
        a.add_option("--bound", o.bound, "Coefficient sweep bound")->check(positive())->capture_default_str();
      },
      [](const BimodOpts& o) {
        Inputs in;
        const auto m = load_bimodule(in, "--m", o.m);
        in.add_value("--bound", o.bound);
        try {
          const auto r = ambidexterity_check(m, o.bound);
          if (r.ambidextrous) return single(finding(in, "alg.ambi", Status::Pass, "ambidextrous", {{"detail", r.detail}}));
          return single(finding(in, "alg.ambi", Status::Fail, "not ambidextrous", nullptr, {{"reason", r.detail}}));
        } catch (const InconclusiveWithinBudget& e) {
          return single(finding(in, "alg.ambi", Status::Inconclusive, "isomorphism search inconclusive", nullptr,
                                {{"reason", e.what()}, {"bound", o.bound}}));
        }
      });

  leaf<PairOpts>(
      *top, s, "iso", "Search for a bimodule isomorphism",
      [](CLI::App& a, PairOpts& o) {
        a.add_option("--m", o.m, "Bimodule JSON, or " + stock_help("bimodule"))->required();
        a.add_option("--n", o.n, "Bimodule")->required();
        a.add_option("--bound", o.bound, "Coefficient sweep bound")->check(positive())->capture_default_str();
        a.add_option("--budget", o.budget, "Largest number of combinations tried")
            ->check(positive())
            ->capture_default_str();
      },
      [](const PairOpts& o) {
        Inputs in;
        const auto m = load_bimodule(in, "--m", o.m), n = load_bimodule(in, "--n", o.n);
        in.add_value("--bound", o.bound);
        in.add_value("--budget", o.budget);
        try {
          const auto r = bimodule_iso_exists(m, n, o.bound, o.budget);
          if (r.iso) return single(finding(in, "alg.iso", Status::Pass, "isomorphic", {{"iso", io::to_json(*r.iso)}}));
          return single(finding(in, "alg.iso", Status::Fail, "not isomorphic", nullptr, {{"reason", r.certificate}}));
        } catch (const InconclusiveWithinBudget& e) {
          return single(finding(in, "alg.iso", Status::Inconclusive, "search inconclusive", nullptr,
                                {{"reason", e.what()}, {"bound", o.bound}, {"budget", o.budget}}));
        }
      });
}

}  // namespace hck::cli::detail
