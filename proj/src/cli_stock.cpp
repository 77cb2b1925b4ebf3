#include <fstream>
#include <sstream>

#include "cli_internal.hpp"

namespace hck::cli::detail {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  for (char c : s) {
    if (c == sep) out.emplace_back();
    else out.back() += c;
  }
  return out;
}

int number(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput("'" + s + "' is not a number");
}

// "head:rest" -> (head, rest)
std::pair<std::string, std::string> head(const std::string& name) {
  const auto p = name.find(':');
  if (p == std::string::npos) return {name, ""};
  return {name.substr(0, p), name.substr(p + 1)};
}

[[noreturn]] void unknown(const std::string& kind, const std::string& name) {
  throw InvalidInput("unknown built-in " + kind + " '@" + name + "' (" + stock_help(kind) + ")");
}

fpcat::FinCategory stock_category(const std::string& name) {
  const auto [h, rest] = head(name);
  if (name == "point") return fpcat::point_category();
  if (name == "walking-arrow") return fpcat::walking_arrow();
  if (name == "J") return fpcat::walking_isomorphism();
  if (name == "boundary-delta2") return fpcat::boundary_delta2_category();
  if (h == "ordinal") return fpcat::ordinal(number(rest));
  if (h == "Z") return fpcat::cyclic_group(number(rest));
  unknown("category", name);
}

fpcat::FinPresentation stock_presentation(const std::string& name) {
  const auto [h, rest] = head(name);
  if (name == "delta2") return fpcat::delta2_presentation();
  if (name == "J") return fpcat::walking_isomorphism_presentation();
  if (name == "loop") return fpcat::loop_presentation(std::nullopt);
  if (h == "loop") return fpcat::loop_presentation(number(rest));
  if (h == "cell") return fpcat::cell(number(rest));
  if (h == "taut") return fpcat::tautological_presentation(stock_category(rest));
  unknown("presentation", name);
}

simplicial::TruncSSet stock_sset(const std::string& name) {
  const auto [h, rest] = head(name);
  if (h == "nerve") return simplicial::nerve(stock_category(rest), 3);
  const auto a = split(rest, ':');
  auto arg = [&](std::size_t i, int fallback) { return i < a.size() && !a[i].empty() ? number(a[i]) : fallback; };
  if (h == "simplex") return simplicial::standard_simplex(arg(0, 0), arg(1, arg(0, 0)));
  if (h == "boundary") return simplicial::simplex_boundary(arg(0, 2), arg(1, arg(0, 2)));
  if (h == "horn") return simplicial::horn(arg(0, 2), arg(1, 1), arg(2, arg(0, 2)));
  if (h == "spine") return simplicial::spine(arg(0, 2), arg(1, arg(0, 2)));
  if (h == "points") return simplicial::points(arg(0, 1), arg(1, 0));
  unknown("simplicial set", name);
}

simplicial::SegalSpaceData stock_segal(const std::string& name) {
  const auto [h, rest] = head(name);
  if (h == "discrete") return simplicial::discrete_segal_space(stock_category(rest), 1);
  if (h == "levelwise") return simplicial::levelwise_discrete(stock_sset(rest), 1);
  unknown("Segal space", name);
}

bicat::FinBicategory stock_bicategory(const std::string& name) {
  const auto [h, rest] = head(name);
  if (name == "cell2") return bicat::cell2();
  const auto corpus = bicat::bicategory_corpus();
  if (h == "corpus") {
    const int i = number(rest);
    if (i < 0 || static_cast<std::size_t>(i) >= corpus.size()) unknown("bicategory", name);
    return corpus[static_cast<std::size_t>(i)].bicategory;
  }
  for (const auto& e : corpus)
    if (e.name == name) return e.bicategory;
  unknown("bicategory", name);
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return t;
}

bicat::MonoidalData stock_monoid(const std::string& name) {
  const auto [h, rest] = head(name);
  if (h == "Z") {
    const int n = number(rest);
    if (n < 1) unknown("monoid", name);
    return bicat::discrete_monoidal(cyclic_table(n), 0, {}, true);
  }
  if (h == "vect") return bicat::vector_space_skeleton(number(rest));
  if (name == "2group") return bicat::two_group_z2(false);
  if (name == "2group-twisted") return bicat::two_group_z2(true);
  if (name == "mult01") return bicat::discrete_monoidal({{0, 0}, {0, 1}}, 1, {"0", "1"}, true);
  unknown("monoid", name);
}

alg::Algebra stock_algebra(const std::string& name) {
  const auto [h, rest] = head(name);
  if (h == "diag") return alg::diagonal_algebra(static_cast<std::size_t>(number(rest)));
  if (h == "M") return alg::matrix_algebra(static_cast<std::size_t>(number(rest)));
  if (h == "QZ") return alg::cyclic_group_algebra(static_cast<std::size_t>(number(rest)));
  if (h == "trunc") return alg::truncated_polynomial(static_cast<std::size_t>(number(rest)));
  if (h == "quad") return alg::quadratic_algebra(parse_rational(rest));
  if (name == "upper") return alg::upper_triangular();
  for (const auto& a : alg::algebra_corpus())
    if (a.name == name) return a.algebra;
  unknown("algebra", name);
}

alg::Bimodule stock_bimodule(const std::string& name) {
  const auto [h, rest] = head(name);
  for (const auto& m : alg::bimodule_corpus())
    if (m.name == name) return m.bimodule;
  if (h == "id") return alg::identity_bimodule(stock_algebra(rest));
  if (h == "vec") return alg::vector_space(static_cast<std::size_t>(number(rest)));
  if (h == "zero") return alg::zero_bimodule(stock_algebra(rest), stock_algebra(rest));
  unknown("bimodule", name);
}

bordism::MatrixTFT stock_tft(const std::string& name) {
  const auto [h, rest] = head(name);
  if (h == "standard") return bordism::standard_tft(static_cast<std::size_t>(number(rest)));
  if (h == "corpus") {
    const auto corpus = bordism::tft_corpus();
    const int i = number(rest);
    if (i < 0 || static_cast<std::size_t>(i) >= corpus.size()) unknown("field theory", name);
    return corpus[static_cast<std::size_t>(i)];
  }
  unknown("field theory", name);
}

wh::ThreeTypeData stock_three_type(const std::string& name) {
  if (name == "s2") return wh::sphere_type();
  if (name == "cp2") return wh::projective_plane_type();
  unknown("3-type", name);
}

template <class Stock, class Parse>
auto load(Inputs& in, const std::string& flag, const std::string& value, Stock stock, Parse parse) {
  try {
    if (!value.empty() && value[0] == '@') {
      in.add(flag, value);
      return stock(value.substr(1));
    }
    return parse(load_json(in, flag, value));
  } catch (const InvalidInput& e) {
    const std::string what = e.what();
    if (what.rfind(flag, 0) == 0) throw;
    throw InvalidInput(flag + ": " + what);
  }
}

}  // namespace

std::string stock_help(const std::string& kind) {
  if (kind == "category") return "@point, @walking-arrow, @J, @boundary-delta2, @ordinal:N, @Z:N";
  if (kind == "presentation") return "@delta2, @J, @loop, @loop:N, @cell:K, @taut:<category>";
  if (kind == "simplicial set")
    return "@simplex:N[:DIM], @boundary:N[:DIM], @horn:N:I[:DIM], @spine:N[:DIM], @points:K[:DIM], @nerve:<category>";
  if (kind == "Segal space") return "@discrete:<category>, @levelwise:<simplicial set>";
  if (kind == "bicategory") return "@cell2, @corpus:I, or a corpus name such as '@deloop Z/2'";
  if (kind == "monoid") return "@Z:N, @vect:P, @2group, @2group-twisted, @mult01";
  if (kind == "algebra") return "@diag:N, @M:N, @QZ:N, @trunc:K, @quad:C, @upper, or a corpus name such as @M2(Q)";
  if (kind == "bimodule") return "@id:<algebra>, @vec:D, @zero:<algebra>, or a corpus name such as @Q^2";
  if (kind == "field theory") return "@standard:D, @corpus:I";
  if (kind == "3-type") return "@s2, @cp2";
  return "";
}

std::string read_file(const std::string& flag, const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput(flag + ": cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Json load_json(Inputs& in, const std::string& flag, const std::string& path) {
  const std::string text = read_file(flag, path);
  in.add(flag, text);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(flag + ": '" + path + "' is not valid JSON (" + e.what() + ")");
  }
}

fpcat::FinPresentation load_presentation(Inputs& in, const std::string& flag, const std::string& value) {
  return load(in, flag, value, stock_presentation, io::presentation_from_json);
}
fpcat::FinCategory load_category(Inputs& in, const std::string& flag, const std::string& value) {
  return load(in, flag, value, stock_category, io::category_from_json);
}
fpcat::Assignment load_assignment(Inputs& in, const std::string& flag, const std::string& value) {
  return load(
      in, flag, value, [](const std::string& n) -> fpcat::Assignment { unknown("assignment", n); },
      io::assignment_from_json);
}
simplicial::TruncSSet load_sset(Inputs& in, const std::string& flag, const std::string& value) {
  return load(in, flag, value, stock_sset, io::sset_from_json);
}
simplicial::SegalSpaceData load_segal_space(Inputs& in, const std::string& flag, const std::string& value) {
  return load(in, flag, value, stock_segal, io::segal_space_from_json);
}
bicat::FinBicategory load_bicategory(Inputs& in, const std::string& flag, const std::string& value) {
  return load(in, flag, value, stock_bicategory, io::bicategory_from_json);
}
bicat::MonoidalData load_monoid(Inputs& in, const std::string& flag, const std::string& value) {
  return load(in, flag, value, stock_monoid, io::monoid_from_json);
}
alg::Algebra load_algebra(Inputs& in, const std::string& flag, const std::string& value) {
  return load(in, flag, value, stock_algebra, io::algebra_from_json);
}
alg::Bimodule load_bimodule(Inputs& in, const std::string& flag, const std::string& value) {
  return load(in, flag, value, stock_bimodule, io::bimodule_from_json);
}
bordism::MatrixTFT load_tft(Inputs& in, const std::string& flag, const std::string& value) {
  return load(in, flag, value, stock_tft, io::tft_from_json);
}
wh::IntMatrix load_int_matrix(Inputs& in, const std::string& flag, const std::string& value) {
  return load(
      in, flag, value, [](const std::string& n) -> wh::IntMatrix { unknown("matrix", n); }, io::int_matrix_from_json);
}
wh::QuadMapTable load_quad_map(Inputs& in, const std::string& flag, const std::string& value) {
  return load(
      in, flag, value, [](const std::string& n) -> wh::QuadMapTable { unknown("quadratic map", n); },
      io::quad_map_from_json);
}
wh::ThreeTypeData load_three_type(Inputs& in, const std::string& flag, const std::string& value) {
  return load(in, flag, value, stock_three_type, io::three_type_from_json);
}
wh::BraidedTwoGroupData load_braided(Inputs& in, const std::string& flag, const std::string& value) {
  return load(
      in, flag, value, [](const std::string& n) -> wh::BraidedTwoGroupData { unknown("braided data", n); },
      io::braided_from_json);
}

bordism::CobWord load_word(Inputs& in, const std::string& flag, const std::string& value) {
  std::string text = value;
  if (value.rfind("dom:", 0) != 0) text = read_file(flag, value);
  in.add(flag, text);
  try {
    return bordism::parse_word(text);
  } catch (const InvalidInput& e) {
    throw InvalidInput(flag + ": " + e.what());
  }
}

}  // namespace hck::cli::detail
