/* Copyright 2026 The gsp4 Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef GSP4_FAMILIES_HPP_
#define GSP4_FAMILIES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsp4/irreducibles.hpp"
#include "gsp4/parabolic.hpp"
#include "gsp4/whittaker.hpp"

namespace gsp4 {

struct FamilyCheck {
  std::string group;
  std::string detail;
  bool ok = false;
};

/// Decomposition of one induced character against the table.
struct SpecDecomposition {
  InducedSpec spec;
  std::vector<Constituent> constituents;
  std::int64_t norm = 0;

  bool irreducible() const { return norm == 1; }
  bool contains(std::size_t irr) const {
    return std::any_of(constituents.begin(), constituents.end(), [&](const Constituent& c) { return c.index == irr; });
  }
};

struct FamilyReport {
  std::vector<FamilyCheck> checks;
  std::vector<SpecDecomposition> specs;
  std::vector<bool> cuspidal;          // per irreducible
  std::vector<std::string> annotation; // per irreducible; empty when unnamed
  std::size_t noncuspidal_count = 0;
  std::size_t cuspidal_count = 0;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const FamilyCheck& c) { return c.ok; });
  }
  const FamilyCheck* find(const std::string& group) const {
    for (const auto& c : checks)
      if (c.group == group) return &c;
    return nullptr;
  }
};

namespace detail {

/// Degrees with multiplicity, sorted descending.
inline std::vector<std::int64_t> constituent_degrees(const CharacterTable& T, const std::vector<Constituent>& cs) {
  std::vector<std::int64_t> d;
  for (const auto& c : cs)
    for (std::int64_t m = 0; m < c.multiplicity; ++m) d.push_back(T.degrees[c.index]);
  std::sort(d.rbegin(), d.rend());
  return d;
}

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline std::vector<std::size_t> common(const SpecDecomposition& a, const SpecDecomposition& b) {
  std::vector<std::size_t> r;
  for (const auto& c : a.constituents)
    if (b.contains(c.index)) r.push_back(c.index);
  return r;
}

/// Accumulates failures of one group into a single check line.
class GroupCheck {
 public:
  explicit GroupCheck(std::string group) : group_(std::move(group)) {}
  void expect(bool cond, const std::string& what) {
    ++cases_;
    if (!cond && failures_.size() < 4) failures_.push_back(what);
    if (!cond) ++failed_;
  }
  void note(const std::string& s) { notes_ = s; }
  FamilyCheck finish() const {
    FamilyCheck c;
    c.group = group_;
    c.ok = failed_ == 0;
    std::ostringstream os;
    os << cases_ << " cases";
    if (!notes_.empty()) os << "; " << notes_;
    if (cases_ == 0) os << "; no cases at this q";
    for (const auto& f : failures_) os << "; FAIL " << f;
    c.detail = os.str();
    return c;
  }
  std::size_t cases() const { return cases_; }

 private:
  std::string group_;
  std::vector<std::string> failures_;
  std::string notes_;
  std::size_t cases_ = 0, failed_ = 0;
};

}  // namespace detail

/// Decomposes every B, P and Q induced character and checks the
/// reducibility criteria and constituent data of groups I to XI and the
/// V and VI* constituent tables. `gg` is the Gelfand-Graev character.
inline FamilyReport verify_family_decompositions(const ClassList& L, const CharacterTable& T,
                                                 const ClassFunction& gg) {
  using detail::GroupCheck;
  const std::int64_t q = L.q, h = (q - 1) / 2;
  FamilyReport R;
  const std::vector<bool> generic = genericity_marks(T, gg);

  std::map<InducedSpec, std::size_t> where;
  for (Parabolic p : {Parabolic::borel, Parabolic::siegel, Parabolic::klingen})
    for (const auto& sp : all_specs(q, p)) {
      SpecDecomposition d;
      d.spec = sp;
      ClassFunction f = closed_form_character(L, sp);
      d.constituents = decompose(f, T.characters);
      for (const auto& c : d.constituents) d.norm += c.multiplicity * c.multiplicity;
      where[sp] = R.specs.size();
      R.specs.push_back(std::move(d));
    }
  auto get = [&](const InducedSpec& s) -> const SpecDecomposition& { return R.specs.at(where.at(s)); };
  auto degs = [&](const SpecDecomposition& d) { return detail::constituent_degrees(T, d.constituents); };
  auto generic_pattern = [&](const SpecDecomposition& d) {
    std::vector<std::int64_t> g;
    for (const auto& c : d.constituents)
      if (generic[c.index]) g.push_back(T.degrees[c.index]);
    return g;
  };
  // Exactly one generic constituent, of the given degree.
  auto generic_is = [&](const SpecDecomposition& d, std::int64_t deg) {
    auto g = generic_pattern(d);
    return g.size() == 1 && g[0] == deg;
  };

  const std::int64_t q2 = q * q;
  const std::int64_t dim_I = (q2 + 1) * (q + 1) * (q + 1);
  const std::int64_t dim_IIa = q * (q2 + 1) * (q + 1), dim_IIb = (q2 + 1) * (q + 1);
  const std::int64_t dim_VIIIa = q * (q2 + 1) * (q - 1), dim_VIIIb = (q2 + 1) * (q - 1);
  const std::int64_t theta9 = q * (q + 1) * (q + 1) / 2, theta11 = q * (q2 + 1) / 2;

  {
    GroupCheck g("every induced character");
    for (const auto& d : R.specs) {
      // one generic constituent: Borel, and Siegel or Klingen with cuspidal pi
      bool claimed = d.spec.parabolic == Parabolic::borel || d.spec.pi.family == Gl2Family::cuspidal;
      std::int64_t gm = as_integer(inner_product(closed_form_character(L, d.spec), gg));
      if (claimed) g.expect(gm == 1, d.spec.str() + " Gelfand-Graev multiplicity " + std::to_string(gm));
      if (d.spec.parabolic == Parabolic::borel)
        g.expect(d.norm == borel_norm(q, d.spec.m1, d.spec.m2),
                 d.spec.str() + " norm " + std::to_string(d.norm) + " vs formula");
    }
    g.note("integer multiplicities, one generic constituent, Borel norms");
    R.checks.push_back(g.finish());
  }
  {
    GroupCheck g("I");
    for (const auto& d : R.specs) {
      if (d.spec.parabolic != Parabolic::borel) continue;
      const std::int64_t a = d.spec.m1, b = d.spec.m2;
      bool want = a != 0 && b != 0 && floor_mod(a - b, q - 1) != 0 && floor_mod(a + b, q - 1) != 0;
      g.expect(d.irreducible() == want, d.spec.str() + " irreducible " + std::to_string(d.irreducible()));
      if (want) g.expect(degs(d) == std::vector<std::int64_t>{dim_I}, d.spec.str() + " degree");
    }
    R.checks.push_back(g.finish());
  }
  {
    GroupCheck g("II");
    for (std::int64_t a = 0; a < q - 1; ++a) {
      if (floor_mod(2 * a, q - 1) == 0) continue;
      for (std::int64_t s = 0; s < q - 1; ++s) {
        const auto& B = get(InducedSpec::borel(q, a, a, s));
        const auto& Pa = get(InducedSpec::siegel(q, Gl2Character::steinberg(q, a), s));
        const auto& Pb = get(InducedSpec::siegel(q, Gl2Character::linear(q, a), s));
        g.expect(degs(B) == std::vector<std::int64_t>{dim_IIa, dim_IIb}, B.spec.str() + " " + detail::join(degs(B)));
        g.expect(Pa.irreducible() && Pb.irreducible() && B.contains(Pa.constituents[0].index) &&
                     B.contains(Pb.constituents[0].index),
                 B.spec.str() + " constituents are the Siegel inductions");
        g.expect(generic_is(B, dim_IIa), B.spec.str() + " genericity");
      }
    }
    R.checks.push_back(g.finish());
  }
  {
    GroupCheck g("III");
    for (std::int64_t a = 1; a < q - 1; ++a)
      for (std::int64_t s = 0; s < q - 1; ++s) {
        const auto& B = get(InducedSpec::borel(q, a, 0, s));
        const auto& Qa = get(InducedSpec::klingen(q, a, Gl2Character::steinberg(q, s)));
        const auto& Qb = get(InducedSpec::klingen(q, a, Gl2Character::linear(q, s)));
        g.expect(degs(B) == std::vector<std::int64_t>{dim_IIa, dim_IIb}, B.spec.str() + " " + detail::join(degs(B)));
        g.expect(Qa.irreducible() && Qb.irreducible() && B.contains(Qa.constituents[0].index) &&
                     B.contains(Qb.constituents[0].index),
                 B.spec.str() + " constituents are the Klingen inductions");
        g.expect(generic_is(B, dim_IIa), B.spec.str() + " genericity");
      }
    R.checks.push_back(g.finish());
  }
  {
    GroupCheck g("V");
    const std::vector<std::int64_t> want{q2 * (q2 + 1), q * (q2 + 1), q * (q2 + 1), q2 + 1};
    for (std::int64_t s = 0; s < q - 1; ++s) {
      const auto& B = get(InducedSpec::borel(q, h, h, s));
      g.expect(degs(B) == want && B.norm == 4, B.spec.str() + " " + detail::join(degs(B)));
      g.expect(generic_is(B, q2 * (q2 + 1)), B.spec.str() + " only Va generic");
      // rows: xi St |x sigma, xi 1 |x sigma; columns: the same with xi sigma
      const SpecDecomposition* rows[2] = {&get(InducedSpec::siegel(q, Gl2Character::steinberg(q, h), s)),
                                          &get(InducedSpec::siegel(q, Gl2Character::linear(q, h), s))};
      const SpecDecomposition* cols[2] = {&get(InducedSpec::siegel(q, Gl2Character::steinberg(q, h), s + h)),
                                          &get(InducedSpec::siegel(q, Gl2Character::linear(q, h), s + h))};
      const std::int64_t cell[2][2] = {{q2 * (q2 + 1), q * (q2 + 1)}, {q * (q2 + 1), q2 + 1}};
      std::set<std::size_t> seen;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          auto x = detail::common(*rows[r], *cols[c]);
          bool ok = rows[r]->norm == 2 && x.size() == 1 && T.degrees[x[0]] == cell[r][c];
          if (ok) seen.insert(x[0]);
          g.expect(ok, B.spec.str() + " table cell " + std::to_string(r) + std::to_string(c));
        }
      g.expect(seen.size() == 4, B.spec.str() + " table cells distinct");
      if (s == 0 && seen.size() == 4) {
        const char* names[2][2] = {{"Va", "Vb"}, {"Vc", "Vd"}};
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) R.annotation.resize(T.size()), R.annotation[detail::common(*rows[r], *cols[c])[0]] = names[r][c];
      }
    }
    R.checks.push_back(g.finish());
  }
  {
    GroupCheck g("VI*");
    for (std::int64_t s = 0; s < q - 1; ++s) {
      const auto& B = get(InducedSpec::borel(q, 0, 0, s));
      const std::vector<std::int64_t> want{q2 * q2, theta9, theta9, theta11, theta11, 1};
      g.expect(B.norm == 8 && degs(B) == want, B.spec.str() + " " + detail::join(degs(B)));
      bool twice = false;
      for (const auto& c : B.constituents)
        if (c.multiplicity == 2) twice = T.degrees[c.index] == theta9;
      g.expect(twice, B.spec.str() + " theta9 constituent has multiplicity 2");
      g.expect(generic_is(B, q2 * q2), B.spec.str() + " only Steinberg generic");
      // rows: Klingen 1 |x sigma St, 1 |x sigma 1; columns: Siegel St |x sigma, 1 |x sigma
      const SpecDecomposition* rows[2] = {&get(InducedSpec::klingen(q, 0, Gl2Character::steinberg(q, s))),
                                          &get(InducedSpec::klingen(q, 0, Gl2Character::linear(q, s)))};
      const SpecDecomposition* cols[2] = {&get(InducedSpec::siegel(q, Gl2Character::steinberg(q, 0), s)),
                                          &get(InducedSpec::siegel(q, Gl2Character::linear(q, 0), s))};
      const std::int64_t cell[2][2] = {{q2 * q2, theta11}, {theta11, 1}};
      std::vector<std::size_t> all4;
      for (auto* d : {rows[0], rows[1], cols[0], cols[1]})
        g.expect(d->norm == 3 && d->constituents.size() == 3, d->spec.str() + " three constituents");
      std::set<std::size_t> commons;
      for (const auto& c : rows[0]->constituents)
        if (rows[1]->contains(c.index) && cols[0]->contains(c.index) && cols[1]->contains(c.index))
          commons.insert(c.index);
      g.expect(commons.size() == 1 && T.degrees[*commons.begin()] == theta9, B.spec.str() + " common factor");
      std::set<std::size_t> extras;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          auto x = detail::common(*rows[r], *cols[c]);
          x.erase(std::remove_if(x.begin(), x.end(), [&](std::size_t i) { return commons.count(i) > 0; }), x.end());
          bool ok = x.size() == 1 && T.degrees[x[0]] == cell[r][c];
          if (ok) extras.insert(x[0]);
          g.expect(ok, B.spec.str() + " table cell " + std::to_string(r) + std::to_string(c));
        }
      g.expect(extras.size() == 4, B.spec.str() + " theta11 and theta12 distinct");
      if (s == 0 && extras.size() == 4 && commons.size() == 1) {
        R.annotation.resize(T.size());
        const char* names[2][2] = {{"VI*a", "VI*d"}, {"VI*e", "VI*f"}};
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c)
            for (std::size_t i : detail::common(*rows[r], *cols[c]))
              if (!commons.count(i)) R.annotation[i] = names[r][c];
        R.annotation[*commons.begin()] = "VI*b";
      }
    }
    R.checks.push_back(g.finish());
  }

  auto self_dual = [&](const Gl2Character& pi) { return floor_mod(pi.a - (q + 1) / 2, q + 1) == 0; };
  std::vector<Gl2Character> cusp;
  for (const auto& pi : gl2_irreducibles(q))
    if (pi.family == Gl2Family::cuspidal) cusp.push_back(pi);
  {
    GroupCheck g("VII");
    for (const auto& pi : cusp)
      for (std::int64_t a = 0; a < q - 1; ++a) {
        const auto& Q = get(InducedSpec::klingen(q, a, pi));
        bool want = a != 0 && !(a == h && self_dual(pi));
        g.expect(Q.irreducible() == want, Q.spec.str() + " irreducible " + std::to_string(Q.irreducible()));
        if (want) g.expect(degs(Q) == std::vector<std::int64_t>{q2 * q2 - 1}, Q.spec.str() + " degree");
      }
    R.checks.push_back(g.finish());
  }
  {
    GroupCheck g("VIII");
    for (const auto& pi : cusp) {
      const auto& Q = get(InducedSpec::klingen(q, 0, pi));
      g.expect(degs(Q) == std::vector<std::int64_t>{dim_VIIIa, dim_VIIIb}, Q.spec.str() + " " + detail::join(degs(Q)));
      g.expect(generic_is(Q, dim_VIIIa), Q.spec.str() + " genericity");
    }
    R.checks.push_back(g.finish());
  }
  {
    GroupCheck g("IX");
    for (const auto& pi : cusp) {
      if (!self_dual(pi)) continue;
      const auto& Q = get(InducedSpec::klingen(q, h, pi));
      g.expect(degs(Q) == std::vector<std::int64_t>{q2 * (q2 - 1), q2 - 1}, Q.spec.str() + " " + detail::join(degs(Q)));
      g.expect(generic_is(Q, q2 * (q2 - 1)), Q.spec.str() + " genericity");
    }
    R.checks.push_back(g.finish());
  }
  {
    GroupCheck g("X");
    for (const auto& pi : cusp)
      for (std::int64_t s = 0; s < q - 1; ++s) {
        const auto& P = get(InducedSpec::siegel(q, pi, s));
        bool want = pi.central_exponent(q) != 0;
        g.expect(P.irreducible() == want, P.spec.str() + " irreducible " + std::to_string(P.irreducible()));
      }
    R.checks.push_back(g.finish());
  }
  {
    GroupCheck g("XI");
    for (const auto& pi : cusp) {
      if (pi.central_exponent(q) != 0) continue;
      for (std::int64_t s = 0; s < q - 1; ++s) {
        const auto& P = get(InducedSpec::siegel(q, pi, s));
        g.expect(degs(P) == std::vector<std::int64_t>{dim_VIIIa, dim_VIIIb}, P.spec.str() + " " + detail::join(degs(P)));
        g.expect(generic_is(P, dim_VIIIa), P.spec.str() + " genericity");
      }
    }
    R.checks.push_back(g.finish());
  }

  R.cuspidal.assign(T.size(), true);
  for (const auto& d : R.specs)
    for (const auto& c : d.constituents) R.cuspidal[c.index] = false;
  R.cuspidal_count = static_cast<std::size_t>(std::count(R.cuspidal.begin(), R.cuspidal.end(), true));
  R.noncuspidal_count = T.size() - R.cuspidal_count;
  {
    GroupCheck g("cuspidal inventory");
    g.expect(R.cuspidal_count + R.noncuspidal_count == T.size(), "counts add up");
    g.note(std::to_string(R.cuspidal_count) + " cuspidal, " + std::to_string(R.noncuspidal_count) + " non-cuspidal");
    R.checks.push_back(g.finish());
  }

  // Table names where degree and genericity pick out a single row.
  R.annotation.resize(T.size());
  std::map<std::pair<std::int64_t, bool>, std::vector<std::string>> by_key;
  for (const auto& row : irreducible_inventory())
    if (index_set_size(row.index, q) > 0) by_key[{row.degree(q), row.generic}].push_back(row.name);
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (!R.annotation[i].empty()) continue;
    auto it = by_key.find({T.degrees[i], generic[i]});
    if (it != by_key.end() && it->second.size() == 1) R.annotation[i] = it->second[0];
  }
  return R;
}

}  // namespace gsp4

#endif  // GSP4_FAMILIES_HPP_
