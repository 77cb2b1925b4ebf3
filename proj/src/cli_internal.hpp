#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hck/cli.hpp"
#include "hck/io.hpp"

namespace hck::cli::detail {

/// Accumulates every input that influences a result, for the report digest.
class Inputs {
 public:
  void add(const std::string& label, const std::string& bytes);
  template <class T>
  void add_value(const std::string& label, const T& value) {
    add(label, Json(value).dump());
  }
  std::string digest() const;

 private:
  std::string bytes_;
};

/// Sets a witness on non-passing findings that lack one.
Finding finding(const Inputs& in, std::string operation, Status verdict, std::string summary, Json result = nullptr,
                Json witness = nullptr);
Report single(Finding f);

using Action = std::function<Report()>;

/// The selected subcommand's work, filled in by the CLI11 callbacks.
struct Session {
  Action action;
};

// Inputs are file paths, or "@name" for a built-in object.
std::string read_file(const std::string& flag, const std::string& path);
fpcat::FinPresentation load_presentation(Inputs& in, const std::string& flag, const std::string& value);
fpcat::FinCategory load_category(Inputs& in, const std::string& flag, const std::string& value);
fpcat::Assignment load_assignment(Inputs& in, const std::string& flag, const std::string& value);
simplicial::TruncSSet load_sset(Inputs& in, const std::string& flag, const std::string& value);
simplicial::SegalSpaceData load_segal_space(Inputs& in, const std::string& flag, const std::string& value);
bicat::FinBicategory load_bicategory(Inputs& in, const std::string& flag, const std::string& value);
bicat::MonoidalData load_monoid(Inputs& in, const std::string& flag, const std::string& value);
Json load_json(Inputs& in, const std::string& flag, const std::string& path);
alg::Algebra load_algebra(Inputs& in, const std::string& flag, const std::string& value);
alg::Bimodule load_bimodule(Inputs& in, const std::string& flag, const std::string& value);
/// A file, or the word itself when the value starts with "dom:".
bordism::CobWord load_word(Inputs& in, const std::string& flag, const std::string& value);
bordism::MatrixTFT load_tft(Inputs& in, const std::string& flag, const std::string& value);
wh::IntMatrix load_int_matrix(Inputs& in, const std::string& flag, const std::string& value);
wh::QuadMapTable load_quad_map(Inputs& in, const std::string& flag, const std::string& value);
wh::ThreeTypeData load_three_type(Inputs& in, const std::string& flag, const std::string& value);
wh::BraidedTwoGroupData load_braided(Inputs& in, const std::string& flag, const std::string& value);

/// Built-in object names, per kind, for --help.
std::string stock_help(const std::string& kind);

/// Integer option checks with messages that name the expected range.
CLI::Validator positive();
CLI::Validator non_negative();

/// Comma-separated identifiers; "" is the empty list.
std::vector<std::string> split_list(const std::string& text);
std::string plural(std::size_t n, const std::string& one, const std::string& many);

void add_fpcat(CLI::App& root, Session& s);
void add_simplicial(CLI::App& root, Session& s);
void add_bicat(CLI::App& root, Session& s);
void add_alg(CLI::App& root, Session& s);
void add_bordism(CLI::App& root, Session& s);
void add_whitehead(CLI::App& root, Session& s);

/// Registers a leaf subcommand whose options live in a shared Opts value.
template <class Opts, class Setup, class Run>
CLI::App* leaf(CLI::App& parent, Session& s, const std::string& name, const std::string& help, Setup setup, Run run) {
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = parent.add_subcommand(name, help);
  setup(*sub, *opts);
  sub->callback([&s, opts, run] { s.action = [opts, run] { return run(*opts); }; });
  return sub;
}

}  // namespace hck::cli::detail
