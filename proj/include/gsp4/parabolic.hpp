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

#ifndef GSP4_PARABOLIC_HPP_
#define GSP4_PARABOLIC_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/classfn.hpp"
#include "gsp4/conjugacy.hpp"
#include "gsp4/gl2.hpp"
#include "gsp4/group.hpp"

namespace gsp4 {

enum class Parabolic : std::uint8_t { borel, siegel, klingen };

inline const char* parabolic_name(Parabolic p) {
  switch (p) {
    case Parabolic::borel: return "B";
    case Parabolic::siegel: return "P";
    case Parabolic::klingen: return "Q";
  }
  return "?";
}

inline Subgroup parabolic_subgroup(Parabolic p) {
  switch (p) {
    case Parabolic::borel: return Subgroup::borel;
    case Parabolic::siegel: return Subgroup::siegel;
    case Parabolic::klingen: return Subgroup::klingen;
  }
  return Subgroup::whole;
}

/// A parabolically induced representation.
///   B: chi_{m1} x chi_{m2} |x sigma_{m}
///   P: pi |x sigma_{m}
///   Q: chi_{m} |x pi
/// chi_m(gamma^t) = exp(2 pi i m t / (q-1)).
struct InducedSpec {
  Parabolic parabolic = Parabolic::borel;
  std::int64_t m1 = 0, m2 = 0;
  std::int64_t m = 0;
  Gl2Character pi{};

  auto operator<=>(const InducedSpec&) const = default;

  static InducedSpec borel(std::int64_t q, std::int64_t m1, std::int64_t m2, std::int64_t s) {
    return {Parabolic::borel, floor_mod(m1, q - 1), floor_mod(m2, q - 1), floor_mod(s, q - 1), {}};
  }
  static InducedSpec siegel(std::int64_t q, const Gl2Character& pi, std::int64_t s) {
    return {Parabolic::siegel, 0, 0, floor_mod(s, q - 1), pi};
  }
  static InducedSpec klingen(std::int64_t q, std::int64_t chi, const Gl2Character& pi) {
    return {Parabolic::klingen, 0, 0, floor_mod(chi, q - 1), pi};
  }

  /// Exponent of the central character.
  std::int64_t central_exponent(std::int64_t q) const {
    switch (parabolic) {
      case Parabolic::borel: return floor_mod(m1 + m2 + 2 * m, q - 1);
      case Parabolic::siegel: return floor_mod(pi.central_exponent(q) + 2 * m, q - 1);
      case Parabolic::klingen: return floor_mod(m + pi.central_exponent(q), q - 1);
    }
    return 0;
  }

  std::int64_t degree(std::int64_t q) const {
    const std::int64_t c = (q * q + 1) * (q + 1);
    return parabolic == Parabolic::borel ? c * (q + 1) : c * pi.degree(q);
  }

  std::string str() const {
    switch (parabolic) {
      case Parabolic::borel:
        return "B(" + std::to_string(m1) + "," + std::to_string(m2) + ";" + std::to_string(m) + ")";
      case Parabolic::siegel: return "P(" + pi.str() + ";" + std::to_string(m) + ")";
      case Parabolic::klingen: return "Q(" + std::to_string(m) + ";" + pi.str() + ")";
    }
    return "?";
  }
};

/// Every spec of one parabolic: ordered triples for B, all GL(2)
/// irreducibles times all characters for P and Q.
inline std::vector<InducedSpec> all_specs(std::int64_t q, Parabolic p) {
  std::vector<InducedSpec> v;
  if (p == Parabolic::borel) {
    for (std::int64_t a = 0; a < q - 1; ++a)
      for (std::int64_t b = 0; b < q - 1; ++b)
        for (std::int64_t s = 0; s < q - 1; ++s) v.push_back(InducedSpec::borel(q, a, b, s));
    return v;
  }
  for (const auto& pi : gl2_irreducibles(q))
    for (std::int64_t s = 0; s < q - 1; ++s)
      v.push_back(p == Parabolic::siegel ? InducedSpec::siegel(q, pi, s) : InducedSpec::klingen(q, s, pi));
  return v;
}

/// Value of the induced character on the class with the given label.
/// Classes missing from a parabolic's table get 0.
inline Complex closed_form_value(std::int64_t q, const InducedSpec& sp, const ClassLabel& l) {
  using F = Family;
  using D = Gl2ClassDatum;
  const std::int64_t h = (q - 1) / 2;  // -1 = gamma^h
  const std::int64_t i = l.i, j = l.j, k = l.k;
  const double qd = static_cast<double>(q);
  auto ch = [q](std::int64_t mm, std::int64_t t) { return unit_root(mm * t, q - 1); };

  if (sp.parabolic == Parabolic::borel) {
    auto c1 = [&](std::int64_t t) { return ch(sp.m1, t); };
    auto c2 = [&](std::int64_t t) { return ch(sp.m2, t); };
    auto s = [&](std::int64_t t) { return ch(sp.m, t); };
    auto c12 = [&](std::int64_t t) { return c1(t) * c2(t); };
    const Complex base = c12(k);
    const Complex pm = c1(h) + c2(h);
    auto four = [&](std::int64_t t) { return 1.0 + c12(t) + c1(t) + c2(t); };
    switch (l.family) {
      case F::A1: return (qd * qd + 1) * (qd + 1) * (qd + 1) * base * s(2 * k);
      case F::A2: return (qd + 1) * (qd + 1) * base * s(2 * k);
      case F::A31: return (3 * qd + 1) * base * s(2 * k);
      case F::A32: return (qd + 1) * base * s(2 * k);
      case F::A5: return base * s(2 * k);
      case F::B11: return (qd + 1) * (qd + 1) * base * s(2 * k) * pm;
      case F::B21: return (qd + 1) * base * s(2 * k + h) * four(h);
      case F::B3: return (qd + 1) * base * s(2 * k) * pm;
      case F::B41:
      case F::B42: return base * s(2 * k) * pm;
      case F::B51: return base * s(2 * k + h) * four(h);
      case F::C1: return (qd + 1) * base * s(2 * k + i) * four(i);
      case F::C21:
        return base * s(2 * k + i + h) * (pm + c12(h) * (c1(i) + c2(i)) + pm * c12(i) + c1(i) + c2(i));
      case F::C3: return base * s(2 * k + i) * four(i);
      case F::C4: return base * s(2 * k) * (c1(i) + c1(-i) + c2(i) + c2(-i));
      case F::C5: return (qd + 1) * base * s(2 * k) * (c1(i) + c1(-i) + c2(i) + c2(-i));
      case F::C6:
        return base * s(2 * k + i + j) *
               (c1(i) + c1(j) + c2(i) + c2(j) + c1(i + j) * (c2(i) + c2(j)) + c2(i + j) * (c1(i) + c1(j)));
      default: return 0.0;
    }
  }

  auto X = [&](const D& d) { return gl2_char_value(q, sp.pi, d); };
  auto cen = [q](std::int64_t e) { return D::scalar(q, e); };
  auto jor = [q](std::int64_t e) { return D::jordan(q, e); };
  auto dg = [q](std::int64_t a, std::int64_t b) { return D::diag(q, a, b); };
  auto half = [q](std::int64_t e) { return gl2_half_power_datum(q, e); };
  // diag(gamma^a theta^b, gamma^a theta^(qb)) as a conjugate pair
  auto ell = [q](std::int64_t a, std::int64_t b) { return D::conjugate_pair(q, a * (q + 1) + b); };

  if (sp.parabolic == Parabolic::siegel) {
    auto s = [&](std::int64_t t) { return ch(sp.m, t); };
    switch (l.family) {
      case F::A1: return (qd * qd + 1) * (qd + 1) * s(2 * k) * X(cen(k));
      case F::A2: return (qd + 1) * s(2 * k) * X(cen(k));
      case F::A31: return s(2 * k) * (X(cen(k)) + 2 * qd * X(jor(k)));
      case F::A32: return s(2 * k) * X(cen(k));
      case F::A5: return s(2 * k) * X(jor(k));
      case F::B11: return (qd + 1) * (qd + 1) * s(2 * k) * X(dg(k, k + h));
      case F::B12: return (qd * qd + 1) * s(2 * k + 1) * X(half(k));
      case F::B21:
        return s(2 * k + h) * (X(cen(k)) + X(cen(k + h)) + (qd + 1) * X(dg(k, k + h)));
      case F::B22: return (qd + 1) * s(2 * k + 1 + h) * X(half(k));
      case F::B3: return (qd + 1) * s(2 * k) * X(dg(k, k + h));
      case F::B41:
      case F::B42: return s(2 * k) * X(dg(k, k + h));
      case F::B43:
      case F::B44: return s(2 * k + 1) * X(half(k));
      case F::B51: return s(2 * k + h) * (X(dg(k, k + h)) + X(jor(k)) + X(jor(k + h)));
      case F::B52: return s(2 * k + 1 + h) * X(half(k));
      case F::C1: return s(2 * k + i) * (X(cen(k)) + X(cen(k + i)) + (qd + 1) * X(dg(k, k + i)));
      case F::C21:
        return s(2 * k + i + h) *
               (X(dg(k, k + h)) + X(dg(k + i, k + i + h)) + X(dg(k, k + i)) + X(dg(k + h, k + i + h)));
      case F::C22: return s(2 * k + i + 1 + h) * (X(half(k)) + X(half(k + i)));
      case F::C3: return s(2 * k + i) * (X(jor(k)) + X(jor(k + i)) + X(dg(k, k + i)));
      case F::C4: return s(2 * k) * (X(dg(k, k + i)) + X(dg(k, k - i)));
      case F::C5: return (qd + 1) * s(2 * k) * (X(dg(k, k + i)) + X(dg(k, k - i)));
      case F::C6:
        return s(2 * k + i + j) *
               (X(dg(k, k + i)) + X(dg(k, k + j)) + X(dg(k + i, k + i + j)) + X(dg(k + j, k + i + j)));
      case F::D2: return (qd + 1) * s(2 * k + i) * X(ell(k, i));
      case F::D31: return s(2 * k + i + h) * (X(ell(k, i)) + X(ell(k + h, i)));
      case F::D4: return s(2 * k + i + j) * (X(ell(k, q * i)) + X(ell(k + j, q * i)));
      case F::D5: return s(2 * k + i) * X(ell(k, i));
      default: return 0.0;
    }
  }

  auto c = [&](std::int64_t t) { return ch(sp.m, t); };
  const Complex base = c(k);
  switch (l.family) {
    case F::A1: return (qd * qd + 1) * (qd + 1) * base * X(cen(k));
    case F::A2: return base * (X(cen(k)) + qd * (qd + 1) * X(jor(k)));
    case F::A31: return 2.0 * base * (X(cen(k)) + (qd - 1) / 2 * X(jor(k)));
    case F::A32: return (qd + 1) * base * X(jor(k));
    case F::A5: return base * X(jor(k));
    case F::B11: return (qd + 1) * base * (c(h) * X(cen(k)) + X(cen(k + h)));
    case F::B21: return (qd + 1) * base * (1.0 + c(h)) * X(dg(k, k + h));
    case F::B3: return base * (c(h) * X(cen(k)) + (qd + 1) * X(jor(k + h)));
    case F::B41:
    case F::B42: return base * (c(h) * X(jor(k)) + X(jor(k + h)));
    case F::B51: return base * (1.0 + c(h)) * X(dg(k, k + h));
    case F::C1: return (qd + 1) * base * (1.0 + c(i)) * X(dg(k, k + i));
    case F::C21:
      return base * ((c(i) + c(h)) * X(dg(k, k + i + h)) + (1.0 + c(i + h)) * X(dg(k + h, k + i)));
    case F::C3: return base * (1.0 + c(i)) * X(dg(k, k + i));
    case F::C4: return base * ((c(i) + c(-i)) * X(jor(k)) + X(dg(k + i, k - i)));
    case F::C5: return base * ((c(i) + c(-i)) * X(cen(k)) + (qd + 1) * X(dg(k + i, k - i)));
    case F::C6:
      return base * ((1.0 + c(i + j)) * X(dg(k + i, k + j)) + (c(i) + c(j)) * X(dg(k, k + i + j)));
    case F::D1: return base * (1.0 + c(i)) * X(ell(k, i));
    case F::D6: return (qd + 1) * base * X(ell(k, i * (q - 1)));
    case F::D8: return base * X(ell(k, i * (q - 1)));
    default: return 0.0;
  }
}

inline ClassFunction closed_form_character(const ClassList& L, const InducedSpec& sp) {
  std::vector<Complex> v(L.size());
  for (std::size_t c = 0; c < L.size(); ++c) v[c] = closed_form_value(L.q, sp, L.classes[c].label);
  return ClassFunction(L.partition, std::move(v));
}

/// The character of the parabolic subgroup that `sp` induces from, as a
/// function on subgroup elements.
inline SubgroupCharacter<4> inducing_character(const Gsp4& G, const InducedSpec& sp) {
  const FqArith& A = G.arith();
  const std::int64_t q = G.q();
  SubgroupCharacter<4> chi;
  Subgroup sub = parabolic_subgroup(sp.parabolic);
  chi.subgroup_order = G.subgroup_order(sub);
  const Gsp4* g = &G;
  chi.contains = [g, sub](const Mat4& m) { return g->in_subgroup(m, sub); };
  auto lg = [&A](Code x) { return A.log(x); };
  switch (sp.parabolic) {
    case Parabolic::borel:
      chi.eval = [&A, q, sp, lg](const Mat4& m) {
        Code c = A.mul(m(1, 1), m(2, 2));
        return unit_root(sp.m1 * lg(m(0, 0)) + sp.m2 * lg(m(1, 1)) + sp.m * lg(c), q - 1);
      };
      break;
    case Parabolic::siegel: {
      auto cls = std::make_shared<Gl2Classifier>(A);
      chi.eval = [g, q, sp, cls, lg](const Mat4& m) {
        Mat2 a;
        a(0, 0) = m(0, 0), a(0, 1) = m(0, 1), a(1, 0) = m(1, 0), a(1, 1) = m(1, 1);
        Code lambda = g->multiplier_of_member(m);
        return unit_root(sp.m * lg(lambda), q - 1) * gl2_char_value(q, sp.pi, (*cls)(a));
      };
      break;
    }
    case Parabolic::klingen: {
      auto cls = std::make_shared<Gl2Classifier>(A);
      chi.eval = [q, sp, cls, lg](const Mat4& m) {
        Mat2 a;
        a(0, 0) = m(1, 1), a(0, 1) = m(1, 2), a(1, 0) = m(2, 1), a(1, 1) = m(2, 2);
        return unit_root(sp.m * lg(m(0, 0)), q - 1) * gl2_char_value(q, sp.pi, (*cls)(a));
      };
      break;
    }
  }
  return chi;
}

/// z1..z7; the first six are 0 or q-1, z7 is 0 or q+1.
/// z6 = q-1 exactly when chi2 = chi1^-1.
struct ZFlags {
  std::array<std::int64_t, 7> z{};
  std::int64_t operator[](int n) const { return z[static_cast<std::size_t>(n - 1)]; }
};

/// Flags for chi1 = chi_{m1}, chi2 = chi_{m2} and phi_{n} on F_{q^2}^x.
inline ZFlags z_flags(std::int64_t q, std::int64_t m1, std::int64_t m2, std::int64_t n = 1) {
  const std::int64_t r = q - 1;
  auto triv = [r](std::int64_t e) { return floor_mod(e, r) == 0; };
  ZFlags f;
  f.z[0] = triv(m1) ? r : 0;
  f.z[1] = triv(m2) ? r : 0;
  f.z[2] = triv(2 * m1) ? r : 0;
  f.z[3] = triv(2 * m2) ? r : 0;
  f.z[4] = triv(m2 - m1) ? r : 0;
  f.z[5] = triv(m1 + m2) ? r : 0;
  f.z[6] = floor_mod(n * (q - 1), q * q - 1) == 0 ? q + 1 : 0;
  return f;
}

/// (chi1 x chi2 |x sigma, chi1 x chi2 |x sigma) from the z-flags, reading
/// the printed z^2 term as z2^2.
inline std::int64_t borel_norm(std::int64_t q, std::int64_t m1, std::int64_t m2) {
  ZFlags f = z_flags(q, m1, m2);
  const std::int64_t z1 = f[1], z2 = f[2], z5 = f[5], z6 = f[6];
  std::int64_t num = q * q + (z5 + z6 - 2) * q + 1 + z1 * z1 + 2 * z1 * z2 + z2 * z2 - z5 - z6 + z5 * z6;
  std::int64_t den = (q - 1) * (q - 1);
  if (num % den != 0) throw std::logic_error("Borel norm is not an integer");
  return num / den;
}

/// Same norm by Mackey: the number of Weyl group elements fixing the
/// torus character chi1(a) chi2(b) sigma(c) on diag(a, b, c/b, c/a).
/// The group is generated by a <-> b and b -> c/b.
inline std::int64_t borel_norm_weyl(std::int64_t q, std::int64_t m1, std::int64_t m2, std::int64_t m = 0) {
  const std::int64_t r = q - 1;
  using E = std::array<std::int64_t, 3>;
  auto norm = [r](E e) {
    for (auto& x : e) x = floor_mod(x, r);
    return e;
  };
  std::vector<E> orbit{norm({m1, m2, m})};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    E e = orbit[i];
    for (E n : {E{e[1], e[0], e[2]}, E{e[0], -e[1], e[2] + e[1]}}) {
      n = norm(n);
      if (std::find(orbit.begin(), orbit.end(), n) == orbit.end()) orbit.push_back(n);
    }
  }
  return 8 / static_cast<std::int64_t>(orbit.size());
}

struct LemmaSides {
  Complex lhs, rhs;
  bool holds(double tol = 1e-9) const { return std::abs(lhs - rhs) <= tol; }
};

/// The eight character-sum identities over T1 and pairs i < j in T1.
/// Identity 6 sums a term that depends only on i; unless `literal` is
/// set, it is read as the symmetrized sum of (f(i) + f(j)) / 2.
inline LemmaSides lemma1_sum(std::int64_t q, int id, std::int64_t m1, std::int64_t m2, bool literal = false) {
  const std::int64_t h = (q - 1) / 2;
  auto c1 = [&](std::int64_t t) { return unit_root(m1 * t, q - 1); };
  auto c2 = [&](std::int64_t t) { return unit_root(m2 * t, q - 1); };
  ZFlags z = z_flags(q, m1, m2);
  const auto T1 = index_t1(q);
  const double qd = static_cast<double>(q);
  const Complex e1 = c1(h), e12 = c1(h) * c2(h);
  LemmaSides r;
  auto single = [&](auto f) {
    Complex s = 0;
    for (auto i : T1) s += f(i);
    return s;
  };
  auto pairs = [&](auto f) {
    Complex s = 0;
    for (std::size_t a = 0; a < T1.size(); ++a)
      for (std::size_t b = a + 1; b < T1.size(); ++b) s += f(T1[a], T1[b]);
    return s;
  };
  const double z1 = static_cast<double>(z[1]), z3 = static_cast<double>(z[3]), z5 = static_cast<double>(z[5]),
               z6 = static_cast<double>(z[6]);
  switch (id) {
    case 1:
      r.lhs = single([&](auto i) { return c1(i) + c1(-i); });
      r.rhs = z1 - 1.0 - e1;
      break;
    case 2:
      r.lhs = single([&](auto i) { return c1(i) * c2(i) + c1(-i) * c2(-i); });
      r.rhs = z6 - 1.0 - e12;
      break;
    case 3:
      r.lhs = single([&](auto i) { return c1(i) * c2(-i) + c1(-i) * c2(i); });
      r.rhs = z5 - 1.0 - e12;
      break;
    case 4:
      r.lhs = single([&](auto i) { return c1(i) * c1(i) + c1(-i) * c1(-i); });
      r.rhs = z3 - 2.0;
      break;
    case 5: {
      r.lhs = pairs([&](auto i, auto j) { return c1(i + j) + c1(i - j) + c1(-i + j) + c1(-i - j); });
      Complex t = z1 - e1 - 1.0;
      r.rhs = 0.5 * (t * t - z3 - qd + 5.0);
      break;
    }
    case 6: {
      auto f = [&](std::int64_t i) { return (c1(i) + c1(-i)) * (c2(i) + c2(-i)); };
      r.lhs = literal ? pairs([&](auto i, auto) { return f(i); })
                      : pairs([&](auto i, auto j) { return 0.5 * (f(i) + f(j)); });
      r.rhs = (qd - 5.0) / 4.0 * (z6 + z5 - 2.0 * e12 - 2.0);
      break;
    }
    case 7:
      r.lhs = pairs([&](auto i, auto j) { return c1(i) + c1(-i) + c1(j) + c1(-j); });
      r.rhs = (qd - 5.0) / 2.0 * (z1 - 1.0 - e1);
      break;
    case 8:
      r.lhs = pairs([&](auto i, auto j) {
        return c1(i) * c1(i) + c1(-i) * c1(-i) + c1(j) * c1(j) + c1(-j) * c1(-j);
      });
      r.rhs = (qd - 5.0) / 2.0 * (z3 - 2.0);
      break;
    default: throw std::invalid_argument("identity id must be 1..8");
  }
  return r;
}

}  // namespace gsp4

#endif  // GSP4_PARABOLIC_HPP_
