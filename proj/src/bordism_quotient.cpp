#include <algorithm>
#include <map>
#include <set>

#include "bordism_internal.hpp"
#include "hck/parallel.hpp"

namespace hck::bordism {

namespace {

CobWord word(const std::string& dom, std::vector<Slice> slices) { return {parse_signs(dom), std::move(slices)}; }

std::vector<Slice> generators(const detail::Tangle& t, Calculus c) {
  const std::size_t k = t.signs.size();
  std::vector<Slice> out;
  for (std::size_t i = 0; i <= k; ++i) {
    out.push_back(cap(i, Elbow::LR));
    if (c != Calculus::Unoriented) out.push_back(cap(i, Elbow::RL));
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (c == Calculus::Unoriented) {
      out.push_back(cup(i, Elbow::LR));
    } else if (t.signs[i] != t.signs[i + 1]) {
      out.push_back(cup(i, t.signs[i] == Sign::Plus ? Elbow::LR : Elbow::RL));
    }
  }
  if (c == Calculus::Quotient)
    for (std::size_t i = 0; i < k; ++i) out.push_back(t.signs[i] == Sign::Plus ? jdown(i) : jup(i));
  return out;
}

std::vector<detail::Tangle> successors(const detail::Tangle& t, Calculus c, std::size_t remaining,
                                       std::size_t max_codomain) {
  std::vector<detail::Tangle> out;
  for (const auto& s : generators(t, c)) {
    detail::Tangle u = t;
    if (detail::apply(u, s, c)) continue;
    if (c == Calculus::Unoriented) std::fill(u.signs.begin(), u.signs.end(), Sign::Plus);
    // Each later cup removes two ends; drop states that can never get back under the cap.
    if (u.signs.size() > max_codomain + 2 * remaining) continue;
    out.push_back(std::move(u));
  }
  return out;
}

detail::Tangle initial(const SignSeq& domain, Calculus c) {
  auto t = detail::start(domain);
  if (c == Calculus::Unoriented) std::fill(t.signs.begin(), t.signs.end(), Sign::Plus);
  return t;
}

ReachableForms collect(const std::set<detail::Tangle>& seen, std::size_t max_codomain) {
  ReachableForms r;
  for (const auto& t : seen)
    if (t.signs.size() <= max_codomain) r.forms.emplace_back(t.signs, detail::finish(t));
  std::sort(r.forms.begin(), r.forms.end());
  r.forms.erase(std::unique(r.forms.begin(), r.forms.end()), r.forms.end());
  return r;
}

NormalForm forget(const NormalForm& nf) {
  NormalForm u = nf;
  std::fill(u.flips.begin(), u.flips.end(), 0);
  return u;
}

// The unique flip pattern making nf orientable over the boundary (s, t).
NormalForm lift(const NormalForm& nf, const SignSeq& s, const SignSeq& t) {
  NormalForm q = nf;
  const std::size_t n = nf.domain_size;
  auto sign = [&](std::size_t p) { return p < n ? s[p] : t[p - n]; };
  for (std::size_t p = 0; p < q.partner.size(); ++p) {
    const std::size_t r = q.partner[p];
    const bool same_side = (p < n) == (r < n);
    q.flips[p] = same_side ? (sign(p) == sign(r)) : (sign(p) != sign(r));
  }
  return q;
}

std::vector<SignSeq> all_signs(std::size_t n) {
  std::vector<SignSeq> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    SignSeq s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? Sign::Minus : Sign::Plus;
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<Relation> generating_relations(Calculus c) {
  const auto LR = Elbow::LR, RL = Elbow::RL;
  std::vector<Relation> rel;
  if (c == Calculus::Unoriented) {
    rel.push_back({"snake_right", word("+", {cap(1), cup(0)}), word("+", {})});
    rel.push_back({"snake_left", word("+", {cap(0), cup(1)}), word("+", {})});
    rel.push_back({"cap_symmetry", word("", {cap(0, RL)}), word("", {cap(0, LR)})});
    rel.push_back({"cup_symmetry", word("+,-", {cup(0, RL)}), word("+,-", {cup(0, LR)})});
    return rel;
  }
  rel.push_back({"snake_plus_right", word("+", {cap(1, RL), cup(0, LR)}), word("+", {})});
  rel.push_back({"snake_minus_left", word("-", {cap(0, RL), cup(1, LR)}), word("-", {})});
  rel.push_back({"snake_plus_left", word("+", {cap(0, LR), cup(1, RL)}), word("+", {})});
  rel.push_back({"snake_minus_right", word("-", {cap(1, LR), cup(0, RL)}), word("-", {})});
  if (c == Calculus::Quotient) {
    rel.push_back({"j_inverse_plus", word("+", {jdown(0), jup(0)}), word("+", {})});
    rel.push_back({"j_inverse_minus", word("-", {jup(0), jdown(0)}), word("-", {})});
    rel.push_back({"twisted_cap_plus", word("", {cap(0, RL), jup(0)}), word("", {cap(0, LR), jup(1)})});
    rel.push_back({"twisted_cap_minus", word("", {cap(0, LR), jdown(0)}), word("", {cap(0, RL), jdown(1)})});
  }
  return rel;
}

Assignment standard_assignment() {
  return [](const Slice& s) -> std::vector<Slice> {
    if (s.kind == Slice::Kind::Cup || s.kind == Slice::Kind::Cap) return {s};
    return {};
  };
}

CobWord apply_assignment(const CobWord& w, const Assignment& f) {
  CobWord out{w.domain, {}};
  for (const auto& s : w.slices) {
    auto img = f(s);
    out.slices.insert(out.slices.end(), img.begin(), img.end());
  }
  return out;
}

ReachableForms reachable_forms_serial(const SignSeq& domain, Calculus c, std::size_t max_len,
                                      std::size_t max_codomain) {
  std::set<detail::Tangle> seen{initial(domain, c)};
  std::vector<detail::Tangle> frontier{initial(domain, c)};
  for (std::size_t depth = 0; depth < max_len && !frontier.empty(); ++depth) {
    std::vector<detail::Tangle> next;
    for (const auto& t : frontier)
      for (auto& u : successors(t, c, max_len - depth - 1, max_codomain))
        if (seen.insert(u).second) next.push_back(std::move(u));
    frontier = std::move(next);
  }
  return collect(seen, max_codomain);
}

ReachableForms reachable_forms(const SignSeq& domain, Calculus c, std::size_t max_len, std::size_t max_codomain) {
  std::set<detail::Tangle> seen{initial(domain, c)};
  std::vector<detail::Tangle> frontier{initial(domain, c)};
  for (std::size_t depth = 0; depth < max_len && !frontier.empty(); ++depth) {
    const auto expanded = par::map_indexed<std::vector<detail::Tangle>>(
        static_cast<std::int64_t>(frontier.size()),
        [&](std::int64_t i) { return successors(frontier[static_cast<std::size_t>(i)], c, max_len - depth - 1, max_codomain); });
    std::vector<detail::Tangle> next;
    for (const auto& batch : expanded)
      for (const auto& u : batch)
        if (seen.insert(u).second) next.push_back(u);
    frontier = std::move(next);
  }
  return collect(seen, max_codomain);
}

QuotientCheck quotient_functor_check(std::size_t max_len, std::size_t max_boundary, const Assignment& f) {
  QuotientCheck out;
  auto& rep = out.report;
  auto unoriented_nf = [&](const CobWord& w) -> std::optional<NormalForm> {
    try {
      return normal_form(apply_assignment(w, f), Calculus::Unoriented);
    } catch (const IllTyped&) {
      return std::nullopt;
    }
  };

  for (const auto& r : generating_relations(Calculus::Quotient)) {
    ++out.relations_checked;
    const auto l = unoriented_nf(r.lhs), rr = unoriented_nf(r.rhs);
    if (!l || !rr) rep.add("relation", r.name + " maps to an ill-typed word");
    else if (!(*l == *rr)) rep.add("relation", r.name + " is not respected: " + l->to_string() + " vs " + rr->to_string());
  }

  for (std::size_t n = 0; n <= max_boundary; ++n) {
    const auto uforms = reachable_forms(SignSeq(n, Sign::Plus), Calculus::Unoriented, max_len, max_boundary);
    std::map<std::size_t, std::vector<NormalForm>> by_size;
    std::set<NormalForm> uset;
    for (const auto& [sig, nf] : uforms.forms) {
      by_size[sig.size()].push_back(nf);
      uset.insert(nf);
    }
    for (const auto& s : all_signs(n)) {
      for (std::size_t m = 0; m <= max_boundary; ++m) {
        const auto& us = by_size[m];
        for (const auto& t : all_signs(m)) {
          ++out.boundaries;
          out.unoriented_forms += us.size();
          std::set<NormalForm> lifts;
          for (const auto& nf : us) {
            const NormalForm q = lift(nf, s, t);
            lifts.insert(q);
            const CobWord w = replay(q, s, t, Calculus::Quotient);
            if (!(normal_form(w, Calculus::Quotient) == q)) {
              rep.add("lift", "replay of " + q.to_string() + " does not reproduce it");
              continue;
            }
            const auto back = unoriented_nf(w);
            if (!back || !(*back == nf))
              rep.add("lift", "forgetting the lift of " + nf.to_string() + " over " + to_string(s) + " -> " +
                                  to_string(t) + " does not return it");
          }
          out.quotient_forms += lifts.size();
        }
      }
      const auto qforms = reachable_forms(s, Calculus::Quotient, max_len, max_boundary);
      out.quotient_forms_enumerated += qforms.forms.size();
      for (const auto& [t, q] : qforms.forms) {
        const NormalForm u = forget(q);
        if (!uset.count(u)) rep.add("forget", q.to_string() + " forgets to an unreached form");
        if (!(lift(u, s, t) == q))
          rep.add("injectivity", q.to_string() + " is not determined by its unoriented shadow");
        const auto img = unoriented_nf(replay(q, s, t, Calculus::Quotient));
        if (!img || !(*img == u)) rep.add("forget", "the assignment sends " + q.to_string() + " elsewhere");
      }
    }
  }
  return out;
}

}  // namespace hck::bordism
