#include <algorithm>
#include <cctype>
#include <sstream>

#include "bordism_internal.hpp"

namespace hck::bordism {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::pair<Sign, Sign> elbow_signs(Elbow e) {
  return e == Elbow::LR ? std::pair{Sign::Plus, Sign::Minus} : std::pair{Sign::Minus, Sign::Plus};
}

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

std::string slice_str(const Slice& s) {
  const std::string e = s.elbow == Elbow::LR ? "LR" : "RL";
  switch (s.kind) {
    case Slice::Kind::Id: return "id";
    case Slice::Kind::Cup: return "cup@" + std::to_string(s.pos) + ":" + e;
    case Slice::Kind::Cap: return "cap@" + std::to_string(s.pos) + ":" + e;
    case Slice::Kind::JUp: return "jup@" + std::to_string(s.pos);
    case Slice::Kind::JDown: return "jdown@" + std::to_string(s.pos);
  }
  return "?";
}

std::size_t in_width(const Slice& s) {
  switch (s.kind) {
    case Slice::Kind::Cup: return 2;
    case Slice::Kind::JUp:
    case Slice::Kind::JDown: return 1;
    default: return 0;
  }
}

std::size_t out_width(const Slice& s) {
  switch (s.kind) {
    case Slice::Kind::Cap: return 2;
    case Slice::Kind::JUp:
    case Slice::Kind::JDown: return 1;
    default: return 0;
  }
}

Slice shifted(Slice s, std::ptrdiff_t by) {
  s.pos = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(s.pos) + by);
  return s;
}

bool well_typed(const CobWord& w, Calculus c) {
  try {
    typecheck(w, c);
    return true;
  } catch (const IllTyped&) {
    return false;
  }
}

}  // namespace

SignSeq parse_signs(const std::string& text) {
  SignSeq out;
  for (char ch : text) {
    if (ch == '+') out.push_back(Sign::Plus);
    else if (ch == '-') out.push_back(Sign::Minus);
    else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) continue;
    else throw InvalidInput(std::string("bad sign character '") + ch + "'");
  }
  return out;
}

std::string to_string(const SignSeq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += sign_char(s[i]);
  }
  return out;
}

Slice cup(std::size_t pos, Elbow e) { return {Slice::Kind::Cup, pos, e}; }
Slice cap(std::size_t pos, Elbow e) { return {Slice::Kind::Cap, pos, e}; }
Slice jup(std::size_t pos) { return {Slice::Kind::JUp, pos, Elbow::LR}; }
Slice jdown(std::size_t pos) { return {Slice::Kind::JDown, pos, Elbow::LR}; }

CobWord parse_word(const std::string& text) {
  std::string flat;
  for (char ch : text) flat += (ch == '\n' ? ';' : ch);
  CobWord w;
  bool have_domain = false;
  for (const auto& tok : split(flat, ';')) {
    if (tok.empty() || tok[0] == '#') continue;
    if (tok.rfind("dom:", 0) == 0) {
      if (have_domain) throw InvalidInput("two domain declarations");
      w.domain = parse_signs(tok.substr(4));
      have_domain = true;
      continue;
    }
    if (tok == "id") {
      w.slices.push_back({});
      continue;
    }
    const auto at = tok.find('@');
    if (at == std::string::npos) throw InvalidInput("bad slice '" + tok + "'");
    const std::string name = tok.substr(0, at);
    std::string rest = tok.substr(at + 1), variant;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      variant = trim(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    std::size_t pos = 0;
    try {
      std::size_t used = 0;
      const long v = std::stol(rest, &used);
      if (used != rest.size() || v < 0) throw InvalidInput("");
      pos = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw InvalidInput("bad position in '" + tok + "'");
    }
    Elbow e = Elbow::LR;
    if (variant == "RL" || variant == "-+") e = Elbow::RL;
    else if (!(variant.empty() || variant == "LR" || variant == "+-")) throw InvalidInput("bad elbow '" + variant + "'");
    if (name == "cup") w.slices.push_back(cup(pos, e));
    else if (name == "cap") w.slices.push_back(cap(pos, e));
    else if (name == "jup" && variant.empty()) w.slices.push_back(jup(pos));
    else if (name == "jdown" && variant.empty()) w.slices.push_back(jdown(pos));
    else throw InvalidInput("bad slice '" + tok + "'");
  }
  if (!have_domain) throw InvalidInput("word has no 'dom:' declaration");
  return w;
}

std::string to_string(const CobWord& w) {
  std::string out = "dom:" + to_string(w.domain);
  for (const auto& s : w.slices) out += " ; " + slice_str(s);
  return out;
}

std::string to_string(Calculus c) {
  switch (c) {
    case Calculus::Oriented: return "oriented";
    case Calculus::Unoriented: return "unoriented";
    case Calculus::Quotient: return "quotient";
  }
  return "?";
}

Calculus parse_calculus(const std::string& name) {
  if (name == "oriented") return Calculus::Oriented;
  if (name == "unoriented") return Calculus::Unoriented;
  if (name == "quotient") return Calculus::Quotient;
  throw InvalidInput("unknown calculus '" + name + "'");
}

namespace detail {

Tangle start(const SignSeq& domain) {
  // Domain points 0..n-1, open ends n..; each domain point starts as a
  // through strand to its open end.
  Tangle t;
  t.n = domain.size();
  t.signs = domain;
  t.partner.resize(2 * t.n);
  t.flips.assign(2 * t.n, 0);
  for (std::size_t i = 0; i < t.n; ++i) {
    t.partner[i] = t.n + i;
    t.partner[t.n + i] = i;
  }
  return t;
}

namespace {

// Shifts every partner reference >= at by delta.
void renumber(Tangle& t, std::size_t at, std::ptrdiff_t delta) {
  auto fix = [&](std::size_t p) {
    return p >= at ? static_cast<std::size_t>(static_cast<std::ptrdiff_t>(p) + delta) : p;
  };
  for (auto& p : t.partner) p = fix(p);
}

}  // namespace

std::optional<std::string> apply(Tangle& t, const Slice& s, Calculus c) {
  const std::size_t k = t.signs.size();
  const std::size_t base = t.n;
  switch (s.kind) {
    case Slice::Kind::Id: return std::nullopt;
    case Slice::Kind::Cap: {
      if (s.pos > k) return "cap position " + std::to_string(s.pos) + " beyond " + std::to_string(k) + " strands";
      const std::size_t a = base + s.pos;
      renumber(t, a, 2);
      auto [l, r] = elbow_signs(s.elbow);
      t.partner.insert(t.partner.begin() + static_cast<std::ptrdiff_t>(a), {a + 1, a});
      t.flips.insert(t.flips.begin() + static_cast<std::ptrdiff_t>(a), {0, 0});
      t.signs.insert(t.signs.begin() + static_cast<std::ptrdiff_t>(s.pos), {l, r});
      return std::nullopt;
    }
    case Slice::Kind::Cup: {
      if (s.pos + 1 >= k) return "cup position " + std::to_string(s.pos) + " needs two strands of " + std::to_string(k);
      if (c != Calculus::Unoriented) {
        auto [l, r] = elbow_signs(s.elbow);
        if (t.signs[s.pos] != l || t.signs[s.pos + 1] != r)
          return "cup " + slice_str(s) + " meets signs (" + sign_char(t.signs[s.pos]) + "," +
                 sign_char(t.signs[s.pos + 1]) + ")";
      }
      const std::size_t a = base + s.pos, b = a + 1;
      if (t.partner[a] == b) {
        ++t.loops;
      } else {
        const std::size_t x = t.partner[a], y = t.partner[b];
        const int f = t.flips[a] ^ t.flips[b];
        t.partner[x] = y;
        t.partner[y] = x;
        t.flips[x] = t.flips[y] = f;
      }
      t.partner.erase(t.partner.begin() + static_cast<std::ptrdiff_t>(a),
                      t.partner.begin() + static_cast<std::ptrdiff_t>(b + 1));
      t.flips.erase(t.flips.begin() + static_cast<std::ptrdiff_t>(a), t.flips.begin() + static_cast<std::ptrdiff_t>(b + 1));
      t.signs.erase(t.signs.begin() + static_cast<std::ptrdiff_t>(s.pos),
                    t.signs.begin() + static_cast<std::ptrdiff_t>(s.pos + 2));
      renumber(t, b + 1, -2);
      return std::nullopt;
    }
    case Slice::Kind::JUp:
    case Slice::Kind::JDown: {
      if (c != Calculus::Quotient) return "j-slices exist only in the quotient calculus";
      if (s.pos >= k) return "j position " + std::to_string(s.pos) + " beyond " + std::to_string(k) + " strands";
      const bool up = s.kind == Slice::Kind::JUp;
      const Sign need = up ? Sign::Minus : Sign::Plus;
      if (t.signs[s.pos] != need) return slice_str(s) + " meets sign " + sign_char(t.signs[s.pos]);
      t.signs[s.pos] = up ? Sign::Plus : Sign::Minus;
      const std::size_t a = base + s.pos;
      t.flips[a] ^= 1;
      t.flips[t.partner[a]] ^= 1;
      return std::nullopt;
    }
  }
  return "unknown slice";
}

NormalForm finish(const Tangle& t) {
  // Vertices are already numbered domain first, then the open ends in order.
  NormalForm nf;
  nf.domain_size = t.n;
  nf.codomain_size = t.signs.size();
  nf.partner = t.partner;
  nf.flips = t.flips;
  nf.loops = t.loops;
  return nf;
}

}  // namespace detail

SignSeq typecheck(const CobWord& w, Calculus c) {
  auto t = detail::start(w.domain);
  for (std::size_t i = 0; i < w.slices.size(); ++i)
    if (auto err = detail::apply(t, w.slices[i], c)) throw IllTyped("slice " + std::to_string(i) + ": " + *err, i);
  return t.signs;
}

bool NormalForm::operator<(const NormalForm& o) const {
  return std::tie(domain_size, codomain_size, partner, flips, loops) <
         std::tie(o.domain_size, o.codomain_size, o.partner, o.flips, o.loops);
}

std::string NormalForm::to_string() const {
  std::ostringstream os;
  auto name = [&](std::size_t p) {
    return p < domain_size ? "d" + std::to_string(p) : "c" + std::to_string(p - domain_size);
  };
  os << domain_size << "->" << codomain_size << " {";
  bool first = true;
  for (std::size_t p = 0; p < partner.size(); ++p) {
    if (partner[p] < p) continue;
    os << (first ? "" : ", ") << name(p) << "-" << name(partner[p]) << (flips[p] ? "*" : "");
    first = false;
  }
  os << "} loops=" << loops;
  return os.str();
}

NormalForm normal_form(const CobWord& w, Calculus c) {
  auto t = detail::start(w.domain);
  for (std::size_t i = 0; i < w.slices.size(); ++i)
    if (auto err = detail::apply(t, w.slices[i], c)) throw IllTyped("slice " + std::to_string(i) + ": " + *err, i);
  return detail::finish(t);
}

CobWord replay(const NormalForm& nf, const SignSeq& domain, const SignSeq& codomain, Calculus c) {
  const std::size_t n = nf.domain_size, m = nf.codomain_size;
  if (domain.size() != n || codomain.size() != m || nf.partner.size() != n + m || nf.flips.size() != n + m)
    throw InvalidInput("normal form does not fit the boundary");
  const bool quotient = c == Calculus::Quotient;
  CobWord w{domain, {}};
  SignSeq signs = domain;
  auto flip_at = [&](std::size_t i) {
    w.slices.push_back(signs[i] == Sign::Plus ? jdown(i) : jup(i));
    signs[i] = signs[i] == Sign::Plus ? Sign::Minus : Sign::Plus;
  };
  auto elbow_for = [&](Sign l) { return (c == Calculus::Unoriented || l == Sign::Plus) ? Elbow::LR : Elbow::RL; };

  // Domain arcs, innermost first.
  std::vector<std::size_t> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = i;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] >= n || cur[i + 1] >= n || nf.partner[cur[i]] != cur[i + 1]) continue;
      if (quotient && signs[i] == signs[i + 1]) flip_at(i);
      w.slices.push_back(cup(i, elbow_for(signs[i])));
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.begin() + static_cast<std::ptrdiff_t>(i + 2));
      signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(i), signs.begin() + static_cast<std::ptrdiff_t>(i + 2));
      progress = true;
      break;
    }
  }
  for (auto p : cur)
    if (nf.partner[p] < n) throw InvalidInput("normal form is not planar");

  // Codomain arcs, removed innermost first and rebuilt in reverse.
  std::vector<std::size_t> tgt(m);
  for (std::size_t j = 0; j < m; ++j) tgt[j] = n + j;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> removed;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i + 1 < tgt.size(); ++i) {
      if (nf.partner[tgt[i]] != tgt[i + 1]) continue;
      removed.emplace_back(i, tgt[i], tgt[i + 1]);
      tgt.erase(tgt.begin() + static_cast<std::ptrdiff_t>(i), tgt.begin() + static_cast<std::ptrdiff_t>(i + 2));
      progress = true;
      break;
    }
  }
  if (tgt.size() != cur.size()) throw InvalidInput("normal form is not planar");
  for (std::size_t j = 0; j < cur.size(); ++j)
    if (nf.partner[cur[j]] != tgt[j]) throw InvalidInput("normal form is not planar");

  // Through strands that end with the other sign.
  if (quotient)
    for (std::size_t j = 0; j < cur.size(); ++j)
      if (signs[j] != codomain[tgt[j] - n]) flip_at(j);

  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    const auto [i, p, q] = *it;
    const Sign tl = codomain[p - n], tr = codomain[q - n];
    Elbow e = Elbow::LR;
    if (c != Calculus::Unoriented) e = tr == Sign::Minus ? Elbow::LR : Elbow::RL;
    w.slices.push_back(cap(i, e));
    auto [l, r] = elbow_signs(e);
    signs.insert(signs.begin() + static_cast<std::ptrdiff_t>(i), {l, r});
    if (quotient && l != tl) flip_at(i);
  }
  for (std::size_t k = 0; k < nf.loops; ++k) {
    w.slices.push_back(cap(0, Elbow::LR));
    w.slices.push_back(cup(0, Elbow::LR));
  }
  return w;
}

Comparison compare_words(const CobWord& u, const CobWord& v, Calculus c) {
  const auto cu = typecheck(u, c), cv = typecheck(v, c);
  Comparison r;
  const bool same = c == Calculus::Unoriented
                        ? (u.domain.size() == v.domain.size() && cu.size() == cv.size())
                        : (u.domain == v.domain && cu == cv);
  if (!same) {
    r.boundary_mismatch = true;
    return r;
  }
  r.equal = normal_form(u, c) == normal_form(v, c);
  return r;
}

bool words_equal(const CobWord& u, const CobWord& v, Calculus c) { return compare_words(u, v, c).equal; }

CobWord juxtapose(const CobWord& u, const CobWord& v, Calculus c) {
  const auto cu = typecheck(u, c);
  typecheck(v, c);
  CobWord w{u.domain, u.slices};
  w.domain.insert(w.domain.end(), v.domain.begin(), v.domain.end());
  for (const auto& s : v.slices) w.slices.push_back(shifted(s, static_cast<std::ptrdiff_t>(cu.size())));
  return w;
}

CobWord compose(const CobWord& u, const CobWord& v) {
  CobWord w = u;
  w.slices.insert(w.slices.end(), v.slices.begin(), v.slices.end());
  return w;
}

std::vector<CobWord> rewrite_moves(const CobWord& w, Calculus c) {
  std::vector<CobWord> out;
  auto keep = [&](CobWord x) {
    if (well_typed(x, c)) out.push_back(std::move(x));
  };
  auto without = [&](std::size_t t, std::size_t count) {
    CobWord x = w;
    x.slices.erase(x.slices.begin() + static_cast<std::ptrdiff_t>(t),
                   x.slices.begin() + static_cast<std::ptrdiff_t>(t + count));
    return x;
  };
  using K = Slice::Kind;
  for (std::size_t t = 0; t < w.slices.size(); ++t) {
    const Slice& a = w.slices[t];
    if (a.kind == K::Id) keep(without(t, 1));
    if (t + 1 == w.slices.size()) break;
    const Slice& b = w.slices[t + 1];
    if (a.kind == K::Cap && b.kind == K::Cup && (a.pos == b.pos + 1 || b.pos == a.pos + 1)) keep(without(t, 2));
    if (a.pos == b.pos && ((a.kind == K::JUp && b.kind == K::JDown) || (a.kind == K::JDown && b.kind == K::JUp)))
      keep(without(t, 2));
    // Interchange of slices on disjoint strands.
    if (a.kind == K::Id || b.kind == K::Id) continue;
    const auto wa_in = static_cast<std::ptrdiff_t>(in_width(a)), wa_out = static_cast<std::ptrdiff_t>(out_width(a));
    const auto wb_in = static_cast<std::ptrdiff_t>(in_width(b)), wb_out = static_cast<std::ptrdiff_t>(out_width(b));
    const auto pa = static_cast<std::ptrdiff_t>(a.pos), pb = static_cast<std::ptrdiff_t>(b.pos);
    CobWord x = w;
    if (pb + wb_in <= pa) {
      x.slices[t] = b;
      x.slices[t + 1] = shifted(a, wb_out - wb_in);
      keep(std::move(x));
    } else if (pb >= pa + wa_out) {
      x.slices[t] = shifted(b, wa_in - wa_out);
      x.slices[t + 1] = a;
      keep(std::move(x));
    }
  }
  // Inserting a snake on any strand between slices.
  auto t = detail::start(w.domain);
  for (std::size_t slot = 0; slot <= w.slices.size(); ++slot) {
    for (std::size_t i = 0; i < t.signs.size(); ++i) {
      const bool plus = c == Calculus::Unoriented || t.signs[i] == Sign::Plus;
      CobWord x = w;
      const std::vector<Slice> snake = plus ? std::vector<Slice>{cap(i + 1, Elbow::RL), cup(i, Elbow::LR)}
                                            : std::vector<Slice>{cap(i + 1, Elbow::LR), cup(i, Elbow::RL)};
      const std::vector<Slice> plain = {cap(i + 1, Elbow::LR), cup(i, Elbow::LR)};
      const auto& ins = c == Calculus::Unoriented ? plain : snake;
      x.slices.insert(x.slices.begin() + static_cast<std::ptrdiff_t>(slot), ins.begin(), ins.end());
      keep(std::move(x));
    }
    if (slot < w.slices.size() && detail::apply(t, w.slices[slot], c)) break;
  }
  return out;
}

}  // namespace hck::bordism
