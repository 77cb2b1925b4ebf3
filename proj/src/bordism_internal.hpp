#pragma once

#include <optional>
#include <string>
#include <tuple>

#include "hck/bordism.hpp"

namespace hck::bordism::detail {

// A partially built bordism: domain points 0..n-1, then the open ends.
struct Tangle {
  std::size_t n = 0;
  SignSeq signs;
  std::vector<std::size_t> partner;
  std::vector<int> flips;
  std::size_t loops = 0;

  auto key() const { return std::tie(n, signs, partner, flips, loops); }
  bool operator<(const Tangle& o) const { return key() < o.key(); }
  bool operator==(const Tangle& o) const { return key() == o.key(); }
};

Tangle start(const SignSeq& domain);
/// Applies s; returns an error message when s is ill-typed.
std::optional<std::string> apply(Tangle& t, const Slice& s, Calculus c);
NormalForm finish(const Tangle& t);

}  // namespace hck::bordism::detail
