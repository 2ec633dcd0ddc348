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

#ifndef GSP4_DIMENSIONS_HPP_
#define GSP4_DIMENSIONS_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4/families.hpp"

namespace gsp4 {

/// Polynomial in q with half-integer coefficients, stored as 2 P(q).
struct DimensionPolynomial {
  std::array<std::int64_t, 5> twice{};

  static DimensionPolynomial from_twice(std::array<std::int64_t, 5> c) { return {c}; }

  std::int64_t operator()(std::int64_t q) const {
    std::int64_t v = 0;
    for (std::size_t i = twice.size(); i-- > 0;) v = v * q + twice[i];
    if (v % 2 != 0) throw std::domain_error("dimension is not an integer at q=" + std::to_string(q));
    return v / 2;
  }
  DimensionPolynomial operator+(const DimensionPolynomial& o) const {
    DimensionPolynomial r;
    for (std::size_t i = 0; i < twice.size(); ++i) r.twice[i] = twice[i] + o.twice[i];
    return r;
  }
  bool operator==(const DimensionPolynomial&) const = default;

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = twice.size(); i-- > 0;) {
      if (twice[i] == 0) continue;
      std::int64_t c = twice[i];
      os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      c = c < 0 ? -c : c;
      bool half = c % 2 != 0;
      std::int64_t whole = c / 2;
      if (half) os << c << "/2";
      else if (whole != 1 || i == 0) os << whole;
      if (i > 0) os << ((half || whole != 1) ? "*" : "") << "q" << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    return first ? "0" : os.str();
  }
};

/// Named polynomials of the constituent degrees (2 P(q), ascending powers).
namespace dimpoly {
inline DimensionPolynomial constant(std::int64_t c) { return {{2 * c, 0, 0, 0, 0}}; }
inline const DimensionPolynomial I{{2, 4, 4, 4, 2}};          // (q^2+1)(q+1)^2
inline const DimensionPolynomial q_q2p1_qp1{{0, 2, 2, 2, 2}}; // q(q^2+1)(q+1)
inline const DimensionPolynomial q2p1_qp1{{2, 2, 2, 2, 0}};   // (q^2+1)(q+1)
inline const DimensionPolynomial q4{{0, 0, 0, 0, 2}};
inline const DimensionPolynomial theta9{{0, 1, 2, 1, 0}};     // q(q+1)^2/2
inline const DimensionPolynomial theta11{{0, 1, 0, 1, 0}};    // q(q^2+1)/2
inline const DimensionPolynomial q2_q2p1{{0, 0, 2, 0, 2}};    // q^2(q^2+1)
inline const DimensionPolynomial q_q2p1{{0, 2, 0, 2, 0}};     // q(q^2+1)
inline const DimensionPolynomial q2p1{{2, 0, 2, 0, 0}};       // q^2+1
inline const DimensionPolynomial q4m1{{-2, 0, 0, 0, 2}};      // q^4-1
inline const DimensionPolynomial q_q2p1_qm1{{0, -2, 2, -2, 2}}; // q(q^2+1)(q-1)
inline const DimensionPolynomial q2p1_qm1{{-2, 2, -2, 2, 0}};   // (q^2+1)(q-1)
inline const DimensionPolynomial q2_q2m1{{0, 0, -2, 0, 2}};     // q^2(q^2-1)
inline const DimensionPolynomial q2m1{{-2, 0, 2, 0, 0}};        // q^2-1
}  // namespace dimpoly

/// One finite-group summand of a row: its printed name and degree.
struct FiniteConstituent {
  std::string name;
  DimensionPolynomial degree;
};

/// A row of the fixed-vector dimension table. Twists are opaque text;
/// nothing in the record depends on sigma.
struct PAdicType {
  std::string label;           // I, IIa, ..., XIb
  std::string representation;  // name of the p-adic representation
  std::string condition;       // condition on the finite inducing data
  DimensionPolynomial dimension;
  std::vector<FiniteConstituent> constituents;
};

inline const std::vector<PAdicType>& padic_types() {
  using namespace dimpoly;
  static const std::vector<PAdicType> rows = {
      {"I", "chi1 x chi2 |x sigma", "chi1, chi2 != 1, chi1 != chi2^{+-1}", I, {{"chi1 x chi2 |x sigma", I}}},
      {"IIa", "chi St_GL(2) |x sigma", "chi^2 != 1", q_q2p1_qp1, {{"chi St_GL(2) |x sigma", q_q2p1_qp1}}},
      {"IIb", "chi 1_GL(2) |x sigma", "chi^2 != 1", q2p1_qp1, {{"chi 1_GL(2) |x sigma", q2p1_qp1}}},
      {"IIIa", "chi |x sigma St_GSp(2)", "chi != 1", q_q2p1_qp1, {{"chi |x sigma St_GSp(2)", q_q2p1_qp1}}},
      {"IIIb", "chi |x sigma 1_GSp(2)", "chi != 1", q2p1_qp1, {{"chi |x sigma 1_GSp(2)", q2p1_qp1}}},
      {"IVa", "sigma St_GSp(4)", "", q4, {{"sigma St_GSp(4)", q4}}},
      {"IVb", "L(nu^2, nu^-1 sigma St_GSp(2))", "", {{0, 2, 2, 2, 0}},
       {{"sigma Ind(theta9)_a", theta9}, {"sigma Ind(theta11)_a", theta11}}},
      {"IVc", "L(nu^3/2 St_GL(2), nu^-3/2 sigma)", "", {{0, 2, 2, 2, 0}},
       {{"sigma Ind(theta9)_a", theta9}, {"sigma Ind(theta12)_a", theta11}}},
      {"IVd", "sigma 1_GSp(4)", "", constant(1), {{"sigma 1_GSp(4)", constant(1)}}},
      {"Va", "delta([xi, nu xi], nu^-1/2 sigma)", "xi^2 = 1, xi != 1", q2_q2p1, {{"sigma Ind(theta1)", q2_q2p1}}},
      {"Vb", "L(nu^1/2 xi St_GL(2), nu^-1/2 sigma)", "xi^2 = 1, xi != 1", q_q2p1, {{"sigma Ind(Phi9)_a", q_q2p1}}},
      {"Vc", "L(nu^1/2 xi St_GL(2), xi nu^-1/2 sigma)", "xi^2 = 1, xi != 1", q_q2p1, {{"sigma Ind(Phi9)_b", q_q2p1}}},
      {"Vd", "L(nu xi, xi |x nu^-1/2 sigma)", "xi^2 = 1, xi != 1", q2p1, {{"sigma Ind(theta3)", q2p1}}},
      {"VIa", "tau(S, nu^-1/2 sigma)", "", q4 + theta9,
       {{"sigma St_GSp(4)", q4}, {"sigma Ind(theta9)_a", theta9}}},
      {"VIb", "tau(T, nu^-1/2 sigma)", "", theta11, {{"sigma Ind(theta11)_a", theta11}}},
      {"VIc", "L(nu^1/2 St_GL(2), nu^-1/2 sigma)", "", theta11, {{"sigma Ind(theta12)_a", theta11}}},
      {"VId", "L(nu, 1_F |x nu^-1/2 sigma)", "", constant(1) + theta9,
       {{"sigma 1_GSp(4)", constant(1)}, {"sigma Ind(theta9)_a", theta9}}},
      {"VII", "chi |x pi", "pi cuspidal, chi != 1, not (chi = xi, xi pi = pi)", q4m1, {{"chi |x pi", q4m1}}},
      {"VIIIa", "tau(S, pi)", "pi cuspidal", q_q2p1_qm1, {{"Ind(omega_pi Phi3)", q_q2p1_qm1}}},
      {"VIIIb", "tau(T, pi)", "pi cuspidal", q2p1_qm1, {{"Ind(omega_pi Phi1)", q2p1_qm1}}},
      {"IXa", "delta(nu xi, nu^-1/2 pi)", "pi cuspidal, xi != 1, xi pi = pi", q2_q2m1, {{"Ind(xi omega_pi theta5)", q2_q2m1}}},
      {"IXb", "L(nu xi, nu^-1/2 pi)", "pi cuspidal, xi != 1, xi pi = pi", q2m1, {{"Ind(xi omega_pi theta7)", q2m1}}},
      {"X", "pi |x sigma", "pi cuspidal, omega_pi != 1", q4m1, {{"pi |x sigma", q4m1}}},
      {"XIa", "delta(nu^1/2 pi, nu^-1/2 sigma)", "pi cuspidal, omega_pi = 1", q_q2p1_qm1,
       {{"sigma Ind(chi7(n))_a", q_q2p1_qm1}}},
      {"XIb", "L(nu^1/2 pi, nu^-1/2 sigma)", "pi cuspidal, omega_pi = 1", q2p1_qm1,
       {{"sigma Ind(chi6(n))_a", q2p1_qm1}}},
  };
  return rows;
}

inline const PAdicType& padic_type(const std::string& label) {
  for (const auto& t : padic_types())
    if (t.label == label) return t;
  throw std::invalid_argument("unknown dimension table row '" + label + "'");
}

inline std::int64_t padic_dimension(const PAdicType& t, std::int64_t q) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be an odd prime power");
  return t.dimension(q);
}

inline std::int64_t padic_dimension(const std::string& label, std::int64_t q) {
  return padic_dimension(padic_type(label), q);
}

struct DimensionCheck {
  std::string what;
  std::string detail;
  bool ok = false;
};

struct DimensionReport {
  std::int64_t q = 0;
  std::vector<DimensionCheck> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const DimensionCheck& c) { return c.ok; });
  }
};

/// Identities that need no table: each row against its constituents,
/// and the partitions of I into the IV, V and VI rows.
inline DimensionReport verify_dimension_polynomials(std::int64_t q) {
  DimensionReport R;
  R.q = q;
  for (const auto& t : padic_types()) {
    DimensionPolynomial sum;
    for (const auto& c : t.constituents) sum = sum + c.degree;
    std::int64_t v = padic_dimension(t, q);
    R.checks.push_back({t.label + " = sum of constituents", t.dimension.str() + " = " + std::to_string(v),
                        sum == t.dimension && v > 0});
  }
  const auto total = [&](std::initializer_list<const char*> labels) {
    DimensionPolynomial s;
    for (const char* l : labels) s = s + padic_type(l).dimension;
    return s;
  };
  const DimensionPolynomial& I = padic_type("I").dimension;
  for (auto [name, parts] : {std::pair{"IV", total({"IVa", "IVb", "IVc", "IVd"})},
                             std::pair{"V", total({"Va", "Vb", "Vc", "Vd"})},
                             std::pair{"VI", total({"VIa", "VIb", "VIc", "VId"})}}) {
    R.checks.push_back({std::string(name) + "a+b+c+d = I", parts.str() + " at q: " + std::to_string(parts(q)),
                        parts == I && parts(q) == I(q)});
  }
  return R;
}

namespace detail {

/// Degrees observed for one row across every matching induced character.
struct Observed {
  std::set<std::int64_t> degrees;
  std::size_t cases = 0;
};

inline std::vector<std::int64_t> sorted_degrees(const CharacterTable& T, const SpecDecomposition& d) {
  return constituent_degrees(T, d.constituents);
}

}  // namespace detail

/// Per row, the table's degrees of the finite constituents named in the
/// row. Constituents are located through the family decompositions and
/// the V / VI* annotations.
inline DimensionReport verify_dimension_identities(const ClassList& L, const CharacterTable& T,
                                                   const FamilyReport& F) {
  DimensionReport R = verify_dimension_polynomials(L.q);
  const std::int64_t q = L.q, h = (q - 1) / 2;
  auto self_dual = [&](const Gl2Character& pi) { return floor_mod(pi.a - (q + 1) / 2, q + 1) == 0; };
  auto annotated = [&](const std::string& name) -> std::int64_t {
    std::int64_t d = -1;
    for (std::size_t i = 0; i < F.annotation.size(); ++i)
      if (F.annotation[i] == name) {
        if (d >= 0) return -2;
        d = T.degrees[i];
      }
    return d;
  };

  // pick: 0 = the only constituent, 1 = larger of two, 2 = smaller of two
  using Pred = std::function<bool(const InducedSpec&)>;
  auto observe = [&](const Pred& match, int pick) {
    detail::Observed o;
    for (const auto& d : F.specs) {
      if (!match(d.spec)) continue;
      auto degs = detail::sorted_degrees(T, d);
      ++o.cases;
      if (pick == 0) o.degrees.insert(degs.size() == 1 ? degs[0] : -1);
      else o.degrees.insert(degs.size() == 2 ? degs[pick - 1] : -1);
    }
    return o;
  };
  const Pred borel_irr = [&](const InducedSpec& s) {
    return s.parabolic == Parabolic::borel && s.m1 != 0 && s.m2 != 0 && s.m1 != s.m2 &&
           floor_mod(s.m1 + s.m2, q - 1) != 0;
  };
  auto siegel_of = [&](Gl2Family fam) {
    return Pred([&, fam](const InducedSpec& s) {
      return s.parabolic == Parabolic::siegel && s.pi.family == fam && floor_mod(2 * s.pi.a, q - 1) != 0;
    });
  };
  auto klingen_of = [&](Gl2Family fam) {
    return Pred([&, fam](const InducedSpec& s) {
      return s.parabolic == Parabolic::klingen && s.pi.family == fam && s.m != 0;
    });
  };
  const Pred vii = [&](const InducedSpec& s) {
    return s.parabolic == Parabolic::klingen && s.pi.family == Gl2Family::cuspidal && s.m != 0 &&
           !(s.m == h && self_dual(s.pi));
  };
  const Pred viii = [&](const InducedSpec& s) {
    return s.parabolic == Parabolic::klingen && s.pi.family == Gl2Family::cuspidal && s.m == 0;
  };
  const Pred ix = [&](const InducedSpec& s) {
    return s.parabolic == Parabolic::klingen && s.pi.family == Gl2Family::cuspidal && s.m == h && self_dual(s.pi);
  };
  auto siegel_cusp = [&](bool trivial_centre) {
    return Pred([&, trivial_centre](const InducedSpec& s) {
      return s.parabolic == Parabolic::siegel && s.pi.family == Gl2Family::cuspidal &&
             (s.pi.central_exponent(q) == 0) == trivial_centre;
    });
  };

  auto report_induced = [&](const std::string& label, const detail::Observed& o) {
    const auto& t = padic_type(label);
    std::int64_t want = t.constituents.front().degree(q);
    bool ok = o.cases == 0 || (o.degrees.size() == 1 && *o.degrees.begin() == want);
    std::string detail = std::to_string(o.cases) + " induced characters, degree " + std::to_string(want);
    if (o.cases == 0) detail += "; no cases at this q";
    R.checks.push_back({label + " against table", detail, ok});
  };
  report_induced("I", observe(borel_irr, 0));
  report_induced("IIa", observe(siegel_of(Gl2Family::steinberg), 0));
  report_induced("IIb", observe(siegel_of(Gl2Family::linear), 0));
  report_induced("IIIa", observe(klingen_of(Gl2Family::steinberg), 0));
  report_induced("IIIb", observe(klingen_of(Gl2Family::linear), 0));
  report_induced("VII", observe(vii, 0));
  report_induced("VIIIa", observe(viii, 1));
  report_induced("VIIIb", observe(viii, 2));
  report_induced("IXa", observe(ix, 1));
  report_induced("IXb", observe(ix, 2));
  report_induced("X", observe(siegel_cusp(false), 0));
  report_induced("XIa", observe(siegel_cusp(true), 1));
  report_induced("XIb", observe(siegel_cusp(true), 2));

  // Rows built from the V and VI* constituents at sigma = 1.
  const std::vector<std::pair<std::string, std::vector<std::string>>> named = {
      {"IVa", {"VI*a"}},         {"IVb", {"VI*b", "VI*d"}}, {"IVc", {"VI*b", "VI*e"}}, {"IVd", {"VI*f"}},
      {"Va", {"Va"}},            {"Vb", {"Vb"}},            {"Vc", {"Vc"}},            {"Vd", {"Vd"}},
      {"VIa", {"VI*a", "VI*b"}}, {"VIb", {"VI*d"}},         {"VIc", {"VI*e"}},         {"VId", {"VI*f", "VI*b"}},
  };
  for (const auto& [label, parts] : named) {
    const auto& t = padic_type(label);
    std::int64_t sum = 0;
    bool found = true;
    std::string detail;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::int64_t d = annotated(parts[i]);
      found = found && d > 0;
      sum += d;
      detail += (i ? " + " : "") + std::to_string(d);
    }
    std::int64_t want = padic_dimension(t, q);
    detail += " = " + std::to_string(sum) + ", row " + std::to_string(want);
    R.checks.push_back({label + " against table", detail, found && sum == want});
  }
  // rows whose finite analogue is the induced character itself
  const std::vector<std::pair<std::string, InducedSpec>> induced = {
      {"I", InducedSpec::borel(q, 1, 1, 0)},
      {"IIa", InducedSpec::siegel(q, Gl2Character::steinberg(q, 1), 0)},
      {"IIb", InducedSpec::siegel(q, Gl2Character::linear(q, 1), 0)},
      {"IIIa", InducedSpec::klingen(q, 1, Gl2Character::steinberg(q, 0))},
      {"IIIb", InducedSpec::klingen(q, 1, Gl2Character::linear(q, 0))},
      {"VII", InducedSpec::klingen(q, 1, Gl2Character::cuspidal(q, 1))},
      {"X", InducedSpec::siegel(q, Gl2Character::cuspidal(q, 1), 0)},
  };
  for (const auto& [label, spec] : induced) {
    std::int64_t d = padic_dimension(label, q), e = spec.degree(q);
    R.checks.push_back({label + " against induced degree", std::to_string(d) + " vs " + std::to_string(e), d == e});
  }
  return R;
}

}  // namespace gsp4

#endif  // GSP4_DIMENSIONS_HPP_
