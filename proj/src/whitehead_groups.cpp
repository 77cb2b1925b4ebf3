#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hck/whitehead.hpp"
#include "whitehead_internal.hpp"

namespace hck::wh {

namespace {

std::int64_t to_i64(const Integer& x) {
  if (!x.fits_slong_p()) throw InvalidInput("integer " + x.get_str() + " is out of range");
  return x.get_si();
}

std::int64_t mod(std::int64_t x, std::int64_t d) {
  const std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

std::vector<std::int64_t> cyclic_pieces(const FinAbGroup& a) {
  std::vector<std::int64_t> out = a.factors;
  out.insert(out.end(), a.free_rank, 0);
  return out;
}

}  // namespace

std::uint64_t FinAbGroup::order() const {
  if (free_rank) throw InvalidInput("the group " + to_string() + " is infinite");
  std::uint64_t n = 1;
  for (auto d : factors) n *= static_cast<std::uint64_t>(d);
  return n;
}

std::string FinAbGroup::to_string() const {
  std::vector<std::string> parts;
  for (auto d : factors) parts.push_back("Z/" + std::to_string(d));
  for (std::size_t i = 0; i < free_rank; ++i) parts.push_back("Z");
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

Element FinAbGroup::normalize(Element x) const {
  if (x.size() != rank()) throw InvalidInput("element has " + std::to_string(x.size()) + " coordinates, expected " +
                                             std::to_string(rank()));
  for (std::size_t i = 0; i < factors.size(); ++i) x[i] = mod(x[i], factors[i]);
  return x;
}

Element FinAbGroup::add(const Element& x, const Element& y) const {
  Element z(rank());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = x.at(i) + y.at(i);
  return normalize(std::move(z));
}

Element FinAbGroup::neg(const Element& x) const {
  Element z(x.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = -x[i];
  return normalize(std::move(z));
}

Element FinAbGroup::scale(std::int64_t n, const Element& x) const {
  Element z(x.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    // Reduce first so the product stays small.
    const std::int64_t xi = i < factors.size() ? mod(x[i], factors[i]) : x[i];
    const std::int64_t ni = i < factors.size() ? mod(n, factors[i]) : n;
    z[i] = xi * ni;
  }
  return normalize(std::move(z));
}

bool FinAbGroup::contains(const Element& x) const {
  if (x.size() != rank()) return false;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (x[i] < 0 || x[i] >= factors[i]) return false;
  return true;
}

Element FinAbGroup::element_at(std::uint64_t index) const {
  if (free_rank) throw InvalidInput("cannot enumerate the infinite group " + to_string());
  Element x(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    x[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(factors[i]));
    index /= static_cast<std::uint64_t>(factors[i]);
  }
  return x;
}

std::uint64_t FinAbGroup::index_of(const Element& x) const {
  if (free_rank) throw InvalidInput("cannot enumerate the infinite group " + to_string());
  const Element y = normalize(x);
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    index = index * static_cast<std::uint64_t>(factors[i]) + static_cast<std::uint64_t>(y[i]);
  return index;
}

FinAbGroup canonical_group(const std::vector<Integer>& orders, std::size_t free_rank) {
  // Prime-power decomposition, then the largest powers of each prime
  // multiply into the last invariant factor, and so on.
  std::map<std::int64_t, std::vector<std::int64_t>> powers;
  for (const auto& o : orders) {
    std::int64_t n = to_i64(abs(o));
    if (n == 0) {
      ++free_rank;
      continue;
    }
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      std::int64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
    if (n > 1) powers[n].push_back(n);
  }
  std::size_t len = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.rbegin(), qs.rend());
    len = std::max(len, qs.size());
  }
  std::vector<std::int64_t> inv(len, 1);
  for (const auto& [p, qs] : powers)
    for (std::size_t i = 0; i < qs.size(); ++i) inv[len - 1 - i] *= qs[i];
  return FinAbGroup{inv, free_rank};
}

FinAbGroup cyclic(std::int64_t n) {
  if (n < 1) throw InvalidInput("cyclic group order must be positive");
  return canonical_group({Integer(n)});
}

FinAbGroup integers() { return FinAbGroup{{}, 1}; }

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Integer> orders;
  for (auto d : a.factors) orders.emplace_back(d);
  for (auto d : b.factors) orders.emplace_back(d);
  return canonical_group(orders, a.free_rank + b.free_rank);
}

FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Integer> orders;
  for (auto x : cyclic_pieces(a))
    for (auto y : cyclic_pieces(b)) orders.emplace_back(std::gcd(x, y));  // gcd(0, n) = n, gcd(0, 0) = 0
  return canonical_group(orders);
}

FinAbGroup parse_group(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty() || t == "0" || t == "trivial") return FinAbGroup{};
  std::vector<Integer> orders;
  std::size_t free = 0;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "Z") {
      ++free;
      continue;
    }
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw InvalidInput("bad group summand '" + tok + "'");
    Integer n(tok);
    if (n < 1) throw InvalidInput("cyclic orders must be positive, got '" + tok + "'");
    orders.push_back(n);
  }
  return canonical_group(orders, free);
}

std::vector<FinAbGroup> groups_up_to(std::uint64_t n) {
  std::vector<FinAbGroup> out;
  // Chains d_1 | d_2 | ... built from the smallest factor up.
  std::function<void(std::vector<std::int64_t>&, std::uint64_t)> grow = [&](std::vector<std::int64_t>& chain,
                                                                           std::uint64_t prod) {
    out.push_back(FinAbGroup{chain, 0});
    const std::int64_t last = chain.empty() ? 1 : chain.back();
    for (std::int64_t d = std::max<std::int64_t>(2, last); prod * static_cast<std::uint64_t>(d) <= n; d += last) {
      chain.push_back(d);
      grow(chain, prod * static_cast<std::uint64_t>(d));
      chain.pop_back();
    }
  };
  std::vector<std::int64_t> chain;
  grow(chain, 1);
  std::sort(out.begin(), out.end(), [](const FinAbGroup& a, const FinAbGroup& b) {
    return std::pair(a.order(), a.factors) < std::pair(b.order(), b.factors);
  });
  return out;
}

// ---- cokernels ------------------------------------------------------------------

Element Cokernel::image_of(const std::vector<Integer>& x) const {
  Element e(group.rank());
  for (std::size_t i = 0; i < e.size(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += x[j] * coords(j, i);
    if (i < group.factors.size()) acc = acc % group.factors[i];
    e[i] = to_i64(acc);
  }
  return group.normalize(std::move(e));
}

Cokernel cokernel(const std::vector<std::vector<Integer>>& relations, std::size_t n) {
  for (const auto& r : relations)
    if (r.size() != n) throw InvalidInput("relation row has the wrong length");
  const auto ech = detail::echelon_rows(relations, n);
  IntMatrix m(ech.size(), n);
  for (std::size_t i = 0; i < ech.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ech[i][j];
  Cokernel out;
  out.smith = smith_normal_form(m);
  const auto diag = smith_diagonal(out.smith);
  std::vector<std::size_t> kept;
  std::vector<std::int64_t> factors;
  std::size_t free = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer d = i < diag.size() ? diag[i] : Integer(0);
    if (d == 1) continue;
    kept.push_back(i);
    if (d == 0) ++free;
    else factors.push_back(to_i64(d));
  }
  out.group = FinAbGroup{factors, free};
  out.coords = IntMatrix(n, kept.size());
  out.section = IntMatrix(kept.size(), n);
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      out.coords(j, k) = out.smith.v(j, kept[k]);
      out.section(k, j) = out.smith.v_inv(kept[k], j);
    }
  return out;
}

// ---- homomorphisms ------------------------------------------------------------------

Element Hom::operator()(const Element& x) const {
  if (x.size() != src.rank()) throw InvalidInput("element does not belong to the source");
  Element acc = tgt.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = tgt.add(acc, tgt.scale(x[i], images[i]));
  return acc;
}

bool Hom::well_defined() const {
  if (images.size() != src.rank()) return false;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!tgt.contains(images[i])) return false;
    if (i < src.factors.size() && tgt.scale(src.factors[i], images[i]) != tgt.zero()) return false;
  }
  return true;
}

FinAbGroup cokernel(const Hom& h) {
  const std::size_t s = h.tgt.rank();
  std::vector<std::vector<Integer>> rels;
  for (const auto& img : h.images) rels.emplace_back(img.begin(), img.end());
  for (std::size_t j = 0; j < h.tgt.factors.size(); ++j) {
    std::vector<Integer> r(s, 0);
    r[j] = h.tgt.factors[j];
    rels.push_back(r);
  }
  return cokernel(rels, s).group;
}

FinAbGroup kernel(const Hom& h) {
  const std::size_t r = h.src.rank(), s = h.tgt.rank(), ft = h.tgt.factors.size();
  // ker(ℤ^r -> tgt) is the projection of ker [H | D_tgt].
  IntMatrix m(s, r + ft);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j) m(j, i) = h.images[i][j];
  for (std::size_t j = 0; j < ft; ++j) m(j, r + j) = h.tgt.factors[j];
  const Smith sm = smith_normal_form(m);
  const auto diag = smith_diagonal(sm);
  std::vector<std::vector<Integer>> gens;
  for (std::size_t c = 0; c < r + ft; ++c) {
    if (c < diag.size() && diag[c] != 0) continue;
    std::vector<Integer> x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = sm.v(i, c);
    gens.push_back(x);
  }
  const auto basis = detail::echelon_rows(gens, r);
  // Coordinates of the relations d_i e_i of the source in that basis.
  std::vector<std::vector<Integer>> rels;
  for (std::size_t i = 0; i < h.src.factors.size(); ++i) {
    std::vector<Integer> rest(r, 0);
    rest[i] = h.src.factors[i];
    std::vector<Integer> c(basis.size(), 0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::size_t p = 0;
      while (basis[k][p] == 0) ++p;
      if (!mpz_divisible_p(rest[p].get_mpz_t(), basis[k][p].get_mpz_t()))
        throw Error("kernel: source relation outside the kernel lattice");
      c[k] = rest[p] / basis[k][p];
      for (std::size_t j = 0; j < r; ++j) rest[j] -= c[k] * basis[k][j];
    }
    if (!std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; }))
      throw Error("kernel: source relation outside the kernel lattice");
    rels.push_back(c);
  }
  return cokernel(rels, basis.size()).group;
}

std::vector<Hom> all_homs(const FinAbGroup& a, const FinAbGroup& b) {
  const std::uint64_t nb = b.order();
  std::vector<std::vector<Element>> choices;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    std::vector<Element> ok;
    for (std::uint64_t k = 0; k < nb; ++k) {
      Element x = b.element_at(k);
      if (i >= a.factors.size() || b.scale(a.factors[i], x) == b.zero()) ok.push_back(std::move(x));
    }
    choices.push_back(std::move(ok));
  }
  std::vector<Hom> out;
  std::vector<std::size_t> pick(a.rank(), 0);
  for (;;) {
    Hom h{a, b, {}};
    for (std::size_t i = 0; i < pick.size(); ++i) h.images.push_back(choices[i][pick[i]]);
    out.push_back(std::move(h));
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == choices[pos].size()) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
  return out;
}

}  // namespace hck::wh
