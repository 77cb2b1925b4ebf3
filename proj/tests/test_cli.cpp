#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "hck/algmod.hpp"
#include "hck/bicat.hpp"
#include "hck/bordism.hpp"
#include "hck/cli.hpp"
#include "hck/fpcat.hpp"
#include "hck/io.hpp"
#include "hck/whitehead.hpp"

namespace fs = std::filesystem;
using hck::cli::Status;
using Json = hck::io::Json;

namespace {

struct Run {
  int rc = 0;
  std::string out, err;
};

Run hck_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = hck::cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string data(const std::string& name) { return std::string(HCK_DATA_DIR) + "/" + name; }

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

struct ScratchDir {
  fs::path path = fs::temp_directory_path() / ("hck_cli_" + std::to_string(::getpid()));
  ScratchDir() { fs::create_directories(path); }
  ~ScratchDir() { fs::remove_all(path); }
};

// Inputs that need construction, written once per process.
const fs::path& scratch() {
  static const ScratchDir holder;
  static const fs::path dir = [] {
    const auto& d = holder.path;
    namespace io = hck::io;

    write(d / "arrow.json", R"({"vertices":["x","y"],"arrows":[{"id":"a","src":"x","tgt":"y"}],"relations":[]})");
    write(d / "parallel.json",
          R"({"vertices":["x","y"],"arrows":[{"id":"a","src":"x","tgt":"y"},{"id":"b","src":"x","tgt":"y"}],"relations":[]})");
    write(d / "delta2_bad.json", R"({"objects":{"0":"0","1":"1","2":"2"},"arrows":{"f01":"f01","f12":"f12","f02":"f02"}})");
    write(d / "delta2_good.json",
          R"({"objects":{"0":"0","1":"1","2":"2"},"arrows":{"f01":"f01","f12":"f12","f02":"f01.f12"}})");
    write(d / "J_to_Z2.json", R"({"objects":{"j":"*","jbar":"*"},"arrows":{"f":"1","g":"1"}})");

    Json poset = io::to_json(hck::fpcat::ordinal(2));
    for (auto& t : poset["compose"])
      if (t[0] == "0<1" && t[1] == "1<2") t[2] = "0<1";
    write(d / "corrupt_cat.json", poset.dump());

    auto b = hck::bicat::deloop(hck::bicat::two_group_z2(false));
    const auto zero = static_cast<std::size_t>(b.cell1("0")), one = static_cast<std::size_t>(b.cell1("1"));
    b.assoc[(one * b.n1() + one) * b.n1() + zero] = b.cell2("0:1");
    write(d / "corrupt_assoc.json", io::to_json(b).dump());

    // Klein four and its translate with unit 1.
    hck::bicat::BinaryOp k{4, {}}, t{4, {}};
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        k.table.push_back(x ^ y);
        t.table.push_back(x ^ y ^ 1);
      }
    write(d / "eh_mismatch.json", Json{{"op1", io::to_json(k)}, {"op2", io::to_json(t)}, {"e1", 0}, {"e2", 1}}.dump());
    hck::bicat::BinaryOp z4{4, {}};
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) z4.table.push_back((x + y) % 4);
    write(d / "eh_z4.json", Json{{"op1", io::to_json(z4)}, {"op2", io::to_json(z4)}, {"e1", 0}, {"e2", 0}}.dump());

    using hck::QMatrix;
    const auto q = hck::alg::rationals(), q2 = hck::alg::diagonal_algebra(2);
    const QMatrix one1 = QMatrix::identity(1), zero1 = QMatrix(1, 1);
    write(d / "p1.json", io::to_json(hck::alg::from_actions(q2, q, {one1, zero1}, {one1})).dump());
    write(d / "p2.json", io::to_json(hck::alg::from_actions(q2, q, {zero1, one1}, {one1})).dump());
    write(d / "quad_qq.json", io::to_json(hck::alg::from_actions(q, q, {QMatrix::identity(2)}, {QMatrix::identity(2)})).dump());

    auto scaled = hck::bordism::standard_tft(2);
    scaled.coev = scaled.coev.scaled(2);
    write(d / "scaled.json", io::to_json(scaled).dump());
    Json anti = io::to_json(hck::bordism::standard_tft(2));
    anti["pairing"] = Json::array({Json::array({"0", "1"}), Json::array({"-1", "0"})});
    write(d / "anti.json", anti.dump());

    namespace wh = hck::wh;
    write(d / "universal_z2.json", io::to_json(wh::universal_map(wh::cyclic(2))).dump());
    write(d / "universal_z3.json", io::to_json(wh::universal_map(wh::cyclic(3))).dump());
    wh::QuadMapTable lin{wh::cyclic(4), wh::cyclic(4), {}};
    for (std::int64_t x = 0; x < 4; ++x) lin.table.push_back({x});
    write(d / "linear_z4.json", io::to_json(lin).dump());
    wh::BraidedTwoGroupData br{wh::cyclic(2), wh::cyclic(2), std::vector<wh::Element>(8, wh::Element{0}), {}};
    for (std::int64_t x = 0; x < 2; ++x)
      for (std::int64_t y = 0; y < 2; ++y) br.braid.push_back({x * y});
    write(d / "braided.json", io::to_json(br).dump());
    write(d / "snf.json", "[[2,4],[6,8]]");
    return d;
  }();
  return dir;
}

std::string in(const std::string& name) { return (scratch() / name).string(); }

struct Golden {
  std::vector<std::string> args;
  int rc;
  std::string line;  // first line of the text report, or of stderr when rc = 3
};

std::vector<Golden> goldens() {
  return {
      {{"gamma", "--group", "2"}, 0, "whitehead.gamma: pass  Γ(Z/2) = Z/4"},
      {{"bordism", "eval", "--word", data("circle.txt"), "--tft", data("v2.json")}, 0, "bordism.eval: pass  scalar 2"},
      {{"fpcat", "word", "--pres", data("delta2.json"), "--u", "f01,f12", "--v", "f02", "--budget", "3"},
       0,
       "fpcat.word: pass  Equal"},

      {{"fpcat", "paths", "--graph", in("arrow.json"), "--from", "x", "--to", "y"}, 0, "fpcat.paths: pass  1 path"},
      {{"fpcat", "paths", "--graph", "@loop", "--from", "x", "--to", "x", "--max-len", "2"}, 0, "fpcat.paths: pass  3 paths"},
      {{"fpcat", "paths", "--graph", in("parallel.json"), "--from", "x", "--to", "y", "--max-len", "1"},
       0,
       "fpcat.paths: pass  2 paths"},
      {{"fpcat", "word", "--pres", "@J", "--u", "f,g,f", "--v", "f", "--budget", "4"}, 0, "fpcat.word: pass  Equal"},
      {{"fpcat", "word", "--pres", in("parallel.json"), "--u", "a", "--v", "b", "--budget", "2"},
       1,
       "fpcat.word: fail  Distinct"},
      {{"fpcat", "quotient", "--pres", "@J", "--max-len", "2"}, 0, "fpcat.quotient: pass  2 objects, 4 morphisms"},
      {{"fpcat", "quotient", "--pres", "@loop:2", "--max-len", "2"}, 0, "fpcat.quotient: pass  1 object, 2 morphisms"},
      {{"fpcat", "quotient", "--pres", "@loop", "--max-len", "5"}, 2, "fpcat.quotient: inconclusive  not saturated"},
      {{"fpcat", "quotient", "--pres", "@cell:1", "--max-len", "1"}, 0, "fpcat.quotient: pass  2 objects, 3 morphisms"},
      {{"fpcat", "functor", "--pres", "@delta2", "--target", "@boundary-delta2", "--assign", in("delta2_good.json")},
       0,
       "fpcat.functor: pass  functor"},
      {{"fpcat", "functor", "--pres", "@delta2", "--target", "@boundary-delta2", "--assign", in("delta2_bad.json")},
       1,
       "fpcat.functor: fail  not a functor"},
      {{"fpcat", "functor", "--pres", "@J", "--target", "@Z:2", "--assign", in("J_to_Z2.json")},
       0,
       "fpcat.functor: pass  functor"},
      {{"fpcat", "validate", "--cat", "@ordinal:2"}, 0, "fpcat.validate: pass  valid"},
      {{"fpcat", "validate", "--cat", in("corrupt_cat.json")}, 1, "fpcat.validate: fail  1 violation"},
      {{"fpcat", "validate", "--cat", "@Z:3"}, 0, "fpcat.validate: pass  valid"},
      {{"fpcat", "gaunt", "--cat", "@ordinal:2"}, 0, "fpcat.gaunt: pass  gaunt"},
      {{"fpcat", "gaunt", "--cat", "@J"}, 1, "fpcat.gaunt: fail  has a non-identity isomorphism"},
      {{"fpcat", "gaunt", "--cat", "@Z:2"}, 1, "fpcat.gaunt: fail  has a non-identity isomorphism"},
      {{"fpcat", "cell", "--k", "0"}, 0, "fpcat.cell: pass  1 vertex, 0 arrows"},
      {{"fpcat", "cell", "--k", "1"}, 0, "fpcat.cell: pass  2 vertices, 1 arrow"},

      {{"simplicial", "nerve", "--cat", "@walking-arrow", "--dim", "2"}, 0, "simplicial.nerve: pass  sizes [2,3,4]"},
      {{"simplicial", "nerve", "--cat", "@point", "--dim", "3"}, 0, "simplicial.nerve: pass  sizes [1,1,1,1]"},
      {{"simplicial", "nerve", "--cat", "@boundary-delta2", "--dim", "2"}, 0, "simplicial.nerve: pass  sizes [3,7,12]"},
      {{"simplicial", "segal", "--cat", "@ordinal:2"}, 0, "simplicial.segal: pass  Segal"},
      {{"simplicial", "segal", "--sset", "@spine:2:2"}, 1, "simplicial.segal: fail  Segal map not bijective at k = 2"},
      {{"simplicial", "segal", "--sset", "@boundary:2:2"}, 1, "simplicial.segal: fail  Segal map not bijective at k = 2"},
      {{"simplicial", "tau1", "--sset", "@simplex:2"}, 0, "simplicial.tau1: pass  3 objects, 6 morphisms"},
      {{"simplicial", "tau1", "--cat", "@walking-arrow"}, 0, "simplicial.tau1: pass  2 objects, 3 morphisms"},
      {{"simplicial", "tau1", "--sset", "@simplex:0:2"}, 0, "simplicial.tau1: pass  1 object, 1 morphism"},
      {{"simplicial", "horns", "--cat", "@ordinal:2", "--n", "2"}, 0, "simplicial.horns: pass  10 inner horns, unique fillers"},
      {{"simplicial", "horns", "--sset", "@boundary:2:2", "--n", "2"},
       1,
       "simplicial.horns: fail  10 inner horns, some without a unique filler"},
      {{"simplicial", "horns", "--cat", "@J", "--n", "3"}, 0, "simplicial.horns: pass  32 inner horns, unique fillers"},
      {{"simplicial", "hcat", "--segal", "@discrete:ordinal:2"}, 0, "simplicial.hcat: pass  3 objects, 6 morphisms"},
      {{"simplicial", "pi0", "--sset", "@simplex:1"}, 0, "simplicial.pi0: pass  1 component"},
      {{"simplicial", "pi0", "--sset", "@points:2"}, 0, "simplicial.pi0: pass  2 components"},
      {{"simplicial", "pi0", "--sset", "@boundary:2"}, 0, "simplicial.pi0: pass  1 component"},

      {{"bicat", "validate", "--bicat", "@deloop Z/2"}, 0, "bicat.validate: pass  valid: 1 object, 2 1-cells, 2 2-cells"},
      {{"bicat", "validate", "--bicat", in("corrupt_assoc.json")}, 1, "bicat.validate: fail  "},
      {{"bicat", "validate", "--bicat", "@locally discrete [1]"},
       0,
       "bicat.validate: pass  valid: 2 objects, 3 1-cells, 3 2-cells"},
      {{"bicat", "zigzag", "--bicat", "@deloop Z/2", "--f", "1", "--g", "1", "--ev", "id_0", "--coev", "id_0"},
       0,
       "bicat.zigzag: pass  zigzag identities hold"},
      {{"bicat", "zigzag", "--bicat", "@deloop Z/3", "--f", "1", "--g", "1", "--ev", "id_0", "--coev", "id_0"},
       1,
       "bicat.zigzag: fail  zigzag identities fail"},
      {{"bicat", "duals", "--bicat", "@locally discrete [1]", "--f", "0<1"}, 1, "bicat.duals: fail  no duality data"},
      {{"bicat", "duals", "--bicat", "@deloop ({0,1}, *)", "--f", "0"}, 1, "bicat.duals: fail  no duality data"},
      {{"bicat", "duals", "--bicat", "@deloop Z/2", "--f", "1"}, 0, "bicat.duals: pass  1 duality datum"},
      {{"bicat", "contractible", "--bicat", "@deloop Z/2", "--f", "1"}, 0, "bicat.contractible: pass  contractible (1 datum)"},
      {{"bicat", "contractible", "--bicat", "@locally discrete [1]", "--f", "0<1"}, 0, "bicat.contractible: pass  empty"},
      {{"bicat", "deloop", "--monoid", "@vect:2"}, 0, "bicat.deloop: pass  valid: 1 object, 2 1-cells, 5 2-cells"},
      {{"bicat", "deloop", "--monoid", "@Z:4"}, 0, "bicat.deloop: pass  valid: 1 object, 4 1-cells, 4 2-cells"},
      {{"bicat", "eh", "--ops", in("eh_z4.json")}, 0, "bicat.eh: pass  operations agree and commute"},
      {{"bicat", "eh", "--ops", in("eh_mismatch.json")}, 1, "bicat.eh: fail  a hypothesis or conclusion fails"},
      {{"bicat", "eh", "--n", "3"}, 0, "bicat.eh: pass  27 interchange pairs, no counterexamples"},
      {{"bicat", "cell2"}, 0, "bicat.cell2: pass  2 objects, 4 1-cells, 5 2-cells"},

      {{"alg", "tensor", "--m", "@1_Q", "--n", "@1_Q"}, 0, "alg.tensor: pass  dim 1"},
      {{"alg", "tensor", "--m", "@1_QxQ", "--n", "@1_QxQ"}, 0, "alg.tensor: pass  dim 2"},
      {{"alg", "tensor", "--m", in("quad_qq.json"), "--n", in("quad_qq.json")}, 0, "alg.tensor: pass  dim 4"},
      {{"alg", "dual", "--m", "@1_QxQ"}, 0, "alg.dual: pass  dual of dim 2, zigzag holds"},
      {{"alg", "dual", "--m", "@Q^2"}, 0, "alg.dual: pass  dual of dim 2, zigzag holds"},
      {{"alg", "separable", "--alg", "@QxQ"}, 0, "alg.separable: pass  separable"},
      {{"alg", "separable", "--alg", "@M2(Q)"}, 0, "alg.separable: pass  separable"},
      {{"alg", "separable", "--alg", "@Q[x]/(x^2)"}, 1, "alg.separable: fail  not separable"},
      {{"alg", "serre", "--alg", "@Q"}, 0, "alg.serre: pass  dim 1, isomorphic to the identity"},
      {{"alg", "serre", "--alg", "@QxQ"}, 0, "alg.serre: pass  dim 2, isomorphic to the identity"},
      {{"alg", "serre", "--alg", "@M2(Q)"}, 0, "alg.serre: pass  dim 4, isomorphic to the identity"},
      {{"alg", "radford", "--alg", "@Q[Z/3]"}, 0, "alg.radford: pass  S ⊗ S ≅ A"},
      {{"alg", "radford", "--alg", "@QxQ"}, 0, "alg.radford: pass  S ⊗ S ≅ A"},
      {{"alg", "radford", "--alg", "@Q[x]/(x^2)"}, 1, "alg.radford: fail  Serre construction fails"},
      {{"alg", "ambi", "--m", "@1_QxQ"}, 0, "alg.ambi: pass  ambidextrous"},
      {{"alg", "ambi", "--m", "@Q^2"}, 0, "alg.ambi: pass  ambidextrous"},
      {{"alg", "iso", "--m", "@Q^2", "--n", "@Q^2"}, 0, "alg.iso: pass  isomorphic"},
      {{"alg", "iso", "--m", "@Q^2", "--n", "@Q^3"}, 1, "alg.iso: fail  not isomorphic"},
      {{"alg", "iso", "--m", in("p1.json"), "--n", in("p2.json")}, 1, "alg.iso: fail  not isomorphic"},

      {{"bordism", "typecheck", "--word", "dom:+ ; cap@1:RL"}, 0, "bordism.typecheck: pass  codomain (+,-,+)"},
      {{"bordism", "typecheck", "--word", "dom: ; cap@0:LR ; cup@0:LR"}, 0, "bordism.typecheck: pass  codomain ()"},
      {{"bordism", "typecheck", "--word", "dom:+ ; cup@3:LR"}, 1, "bordism.typecheck: fail  ill-typed at slice 0"},
      {{"bordism", "nf", "--word", "dom:+ ; cap@1:RL ; cup@0:LR"}, 0, "bordism.nf: pass  1->1 {d0-c0} loops=0"},
      {{"bordism", "nf", "--word", data("circle.txt")}, 0, "bordism.nf: pass  0->0 {} loops=1"},
      {{"bordism", "nf", "--calculus", "quotient", "--word", "dom:+ ; jdown@0 ; jup@0"},
       0,
       "bordism.nf: pass  1->1 {d0-c0} loops=0"},
      {{"bordism", "equal", "--u", "dom:+ ; cap@1:RL ; cup@0:LR", "--v", "dom:+"}, 0, "bordism.equal: pass  equal"},
      {{"bordism", "equal", "--u", "dom:- ; cap@0:RL ; cup@1:LR", "--v", "dom:-"}, 0, "bordism.equal: pass  equal"},
      {{"bordism", "equal", "--u", data("circle.txt"), "--v", "dom: ; cap@0:LR ; cup@0:LR ; cap@0:LR ; cup@0:LR"},
       1,
       "bordism.equal: fail  different normal forms"},
      {{"bordism", "equal", "--calculus", "unoriented", "--u", "dom: ; cap@0:RL", "--v", "dom: ; cap@0:LR"},
       0,
       "bordism.equal: pass  equal"},
      {{"bordism", "equal", "--u", "dom: ; cap@0:RL", "--v", "dom: ; cap@0:LR"}, 1, "bordism.equal: fail  different boundaries"},
      {{"bordism", "eval", "--word", "dom:+", "--tft", "@standard:2"}, 0, "bordism.eval: pass  2x2 matrix"},
      {{"bordism", "validate", "--tft", "@standard:3"}, 0, "bordism.validate: pass  valid"},
      {{"bordism", "validate", "--tft", in("scaled.json")}, 1, "bordism.validate: fail  "},
      {{"bordism", "validate", "--tft", "@standard:2", "--calculus", "unoriented"}, 0, "bordism.validate: pass  valid"},
      {{"bordism", "validate", "--tft", in("anti.json"), "--calculus", "unoriented"}, 1, "bordism.validate: fail  "},
      {{"bordism", "quotient-check"}, 0, "bordism.quotient-check: pass  13212 forms matched over 961 boundaries"},

      {{"whitehead", "gamma", "--group", "3"}, 0, "whitehead.gamma: pass  Γ(Z/3) = Z/3"},
      {{"whitehead", "gamma", "--group", "2,2"}, 0, "whitehead.gamma: pass  Γ(Z/2 + Z/2) = Z/2 + Z/4 + Z/4"},
      {{"whitehead", "gamma", "--group", "17"}, 2, "whitehead.gamma: inconclusive  group too large for the presentation"},
      {{"whitehead", "gamma-fast", "--group", "2,Z"}, 0, "whitehead.gamma-fast: pass  Γ(Z/2 + Z) = Z/2 + Z/4 + Z"},
      {{"whitehead", "snf", "--matrix", in("snf.json")}, 0, "whitehead.snf: pass  diagonal [\"2\",\"4\"]"},
      {{"whitehead", "quadratic", "--map", in("universal_z2.json")}, 0, "whitehead.quadratic: pass  quadratic"},
      {{"whitehead", "quadratic", "--map", in("linear_z4.json")}, 1, "whitehead.quadratic: fail  not quadratic (even)"},
      {{"whitehead", "induced", "--map", in("universal_z3.json")}, 0, "whitehead.induced: pass  Γ(Z/3) = Z/3 -> Z/3"},
      {{"whitehead", "induced", "--map", in("linear_z4.json")}, 1, "whitehead.induced: fail  not quadratic"},
      {{"whitehead", "sequence", "--type", "@s2"}, 0, "whitehead.sequence: pass  H4 = 0, H3 = 0"},
      {{"whitehead", "sequence", "--type", "@cp2"}, 0, "whitehead.sequence: pass  H4 = Z, H3 = 0"},
      {{"whitehead", "lift", "--type", "@s2", "--s", "0"}, 0, "whitehead.lift: pass  q(s) = 0, lifts"},
      {{"whitehead", "lift", "--type", "@s2", "--s", "1"}, 1, "whitehead.lift: fail  q(s) != 0"},
      {{"whitehead", "lift", "--type", "@cp2", "--s", "1"}, 0, "whitehead.lift: pass  q(s) = 0, lifts"},
      {{"whitehead", "qbraid", "--data", in("braided.json")}, 0, "whitehead.qbraid: pass  q is quadratic"},
  };
}

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

std::vector<std::string> with(std::vector<std::string> prefix, const std::vector<std::string>& args) {
  prefix.insert(prefix.end(), args.begin(), args.end());
  return prefix;
}

}  // namespace

TEST_CASE("golden runs: exit code and headline") {
  for (const auto& g : goldens()) {
    INFO(joined(g.args));
    const auto r = hck_run(g.args);
    CHECK(r.rc == g.rc);
    const std::string line = first_line(r.rc == hck::cli::kUsageError ? r.err : r.out);
    CHECK(line.substr(0, g.line.size()) == g.line);
    if (r.rc != hck::cli::kUsageError) CHECK(r.err.empty());
  }
}

TEST_CASE("json reports re-parse losslessly and carry witnesses") {
  for (const auto& g : goldens()) {
    INFO(joined(g.args));
    const auto r = hck_run(with({"--json"}, g.args));
    REQUIRE(r.rc == g.rc);
    const Json j = Json::parse(r.out);
    const auto rep = hck::cli::report_from_json(j);
    CHECK(hck::cli::to_json(rep).dump(2) + "\n" == r.out);
    CHECK(hck::cli::report_from_json(hck::cli::to_json(rep)) == rep);
    CHECK(hck::cli::exit_code(rep.status) == r.rc);
    for (const auto& f : rep.findings) {
      if (f.verdict != Status::Pass) CHECK_FALSE(f.witness.is_null());
      CHECK(f.inputs_digest.rfind("fnv1a64:", 0) == 0);
      CHECK(f.inputs_digest.size() == 24);
    }
  }
}

TEST_CASE("reports are byte-identical across runs and job counts") {
  for (const auto& g : goldens()) {
    INFO(joined(g.args));
    const auto a = hck_run(with({"--json", "--jobs", "1"}, g.args));
    const auto b = hck_run(with({"--json", "--jobs", "4"}, g.args));
    const auto c = hck_run(with({"--json"}, g.args));
    CHECK(a.rc == b.rc);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}

TEST_CASE("serial flags give the same findings") {
  const std::vector<std::vector<std::string>> pairs{
      {"fpcat", "word", "--pres", "@J", "--u", "f,g,f", "--v", "f", "--budget", "4"},
      {"simplicial", "horns", "--cat", "@J", "--n", "3"},
      {"bicat", "duals", "--bicat", "@deloop Z/2", "--f", "1"},
      {"bicat", "eh", "--n", "3"},
      {"whitehead", "gamma", "--group", "2,4"},
  };
  for (const auto& args : pairs) {
    INFO(joined(args));
    const auto par = hck_run(with({"--json"}, args));
    const auto ser = hck_run(with({"--json"}, with(args, {"--serial"})));
    CHECK(par.rc == ser.rc);
    const auto pj = Json::parse(par.out), sj = Json::parse(ser.out);
    CHECK(pj["status"] == sj["status"]);
    CHECK(pj["findings"][0]["result"] == sj["findings"][0]["result"]);
  }
}

TEST_CASE("text and json views agree") {
  const auto t = hck_run({"gamma", "--group", "2"});
  const auto j = hck_run({"--json", "gamma", "--group", "2"});
  const auto rep = hck::cli::report_from_json(Json::parse(j.out));
  CHECK(hck::cli::render_text(rep) == t.out);
  CHECK(t.out.find("status: pass\n") != std::string::npos);
}

TEST_CASE("inputs digest follows the inputs, not the wording") {
  const auto a = hck_run({"--json", "gamma", "--group", "2"});
  const auto b = hck_run({"--json", "gamma", "--group", "2", "--max-order", "16"});
  const auto c = hck_run({"--json", "gamma", "--group", "3"});
  const auto d = hck_run({"--json", "gamma", "--group", "2", "--max-order", "15"});
  auto digest = [](const Run& r) { return Json::parse(r.out)["findings"][0]["inputs_digest"].get<std::string>(); };
  CHECK(digest(a) == digest(b));
  CHECK(digest(a) != digest(c));
  CHECK(digest(a) != digest(d));
}

TEST_CASE("report status folds findings") {
  hck::cli::Report r;
  CHECK(r.status == Status::Pass);
  r.add({"a", "d", Status::Inconclusive, "", nullptr, {{"reason", "x"}}});
  CHECK(r.status == Status::Inconclusive);
  r.add({"b", "d", Status::Fail, "", nullptr, {{"reason", "y"}}});
  CHECK(r.status == Status::Fail);
  r.add({"c", "d", Status::Inconclusive, "", nullptr, {{"reason", "z"}}});
  CHECK(r.status == Status::Fail);
  CHECK(hck::cli::report_from_json(hck::cli::to_json(r)) == r);
  CHECK_THROWS_AS(hck::cli::report_from_json(Json{{"status", "maybe"}, {"findings", Json::array()}}), hck::InvalidInput);
  CHECK_THROWS_AS(hck::cli::report_from_json(Json{{"findings", Json::array()}}), hck::InvalidInput);
}

TEST_CASE("fnv1a64 reference values") {
  CHECK(hck::cli::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(hck::cli::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hck::cli::fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("usage and input errors exit 3 and name the flag") {
  struct Bad {
    std::vector<std::string> args;
    std::string needle;
  };
  const std::vector<Bad> cases{
      {{"fpcat", "word", "--pres", "@J", "--u", "f"}, "--v"},
      {{"gamma", "--group", "2", "--max-order", "0"}, "--max-order"},
      {{"gamma", "--group", "two"}, "--group"},
      {{"--jobs", "-1", "gamma", "--group", "2"}, "--jobs"},
      {{"fpcat", "word", "--pres", "/nonexistent/p.json", "--u", "f", "--v", "f"}, "--pres"},
      {{"fpcat", "word", "--pres", "@J", "--u", "f,zz", "--v", "f"}, "--u"},
      {{"fpcat", "word", "--pres", "@nope", "--u", "f", "--v", "f"}, "--pres"},
      {{"fpcat", "gaunt", "--cat", in("arrow.json")}, "--cat"},
      {{"simplicial", "segal", "--sset", "@simplex:2", "--cat", "@J"}, "--cat"},
      {{"whitehead", "lift", "--type", "@s2", "--s", "x"}, "--s"},
      {{"bordism", "typecheck", "--word", "dom:+", "--calculus", "spin"}, "--calculus"},
      {{"bogus"}, "bogus"},
      {{}, "subcommand"},
      {{"fpcat", "cell", "--k", "2"}, "--k"},
  };
  for (const auto& c : cases) {
    INFO(joined(c.args));
    const auto r = hck_run(c.args);
    CHECK(r.rc == hck::cli::kUsageError);
    CHECK(r.out.empty());
    CHECK(r.err.find(c.needle) != std::string::npos);
  }
}

TEST_CASE("help exits 0 and documents budgets") {
  const auto r = hck_run({"whitehead", "gamma", "--help"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("--max-order") != std::string::npos);
  CHECK(r.out.find("16") != std::string::npos);
  const auto w = hck_run({"fpcat", "word", "--help"});
  CHECK(w.out.find("--budget") != std::string::npos);
}

TEST_CASE("jobs setting does not leak between runs") {
  hck_run({"--jobs", "1", "gamma", "--group", "2"});
  const auto a = hck_run({"--json", "simplicial", "horns", "--cat", "@J", "--n", "3"});
  const auto b = hck_run({"--json", "--jobs", "2", "simplicial", "horns", "--cat", "@J", "--n", "3"});
  CHECK(a.out == b.out);
}
