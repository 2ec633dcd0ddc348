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

#ifndef GSP4_CONJUGACY_HPP_
#define GSP4_CONJUGACY_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4/field.hpp"
#include "gsp4/finite_group.hpp"
#include "gsp4/group.hpp"

namespace gsp4 {

// ---------------------------------------------------------------------------
// Linear algebra over F_{q^4}.

using QuarticMatrix = std::array<FieldElement, 16>;

inline QuarticMatrix lift(const Gsp4& G, const Mat4& m) {
  QuarticMatrix r;
  for (std::size_t i = 0; i < 16; ++i) r[i] = G.field().embed(G.arith().element(m.a[i]), Level::quartic);
  return r;
}

inline QuarticMatrix quartic_mul(const Field& f, const QuarticMatrix& x, const QuarticMatrix& y) {
  QuarticMatrix r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      FieldElement s = f.zero(Level::quartic);
      for (std::size_t k = 0; k < 4; ++k) s = f.add(s, f.mul(x[i * 4 + k], y[k * 4 + j]));
      r[i * 4 + j] = s;
    }
  return r;
}

inline int quartic_rank(const Field& f, QuarticMatrix m) {
  int r = 0;
  for (std::size_t c = 0; c < 4 && r < 4; ++c) {
    std::size_t rr = static_cast<std::size_t>(r);
    std::size_t piv = 4;
    for (std::size_t i = rr; i < 4; ++i)
      if (!m[i * 4 + c].is_zero()) {
        piv = i;
        break;
      }
    if (piv == 4) continue;
    for (std::size_t j = 0; j < 4; ++j) std::swap(m[piv * 4 + j], m[rr * 4 + j]);
    FieldElement inv = f.inv(m[rr * 4 + c]);
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == rr || m[i * 4 + c].is_zero()) continue;
      FieldElement t = f.mul(m[i * 4 + c], inv);
      for (std::size_t j = 0; j < 4; ++j) m[i * 4 + j] = f.sub(m[i * 4 + j], f.mul(t, m[rr * 4 + j]));
    }
    ++r;
  }
  return r;
}

/// Roots in F_{q^4} of the monic quartic x^4 + c3 x^3 + ... + c0 with
/// multiplicities, ordered by kappa-log.
inline std::vector<std::pair<FieldElement, int>> quartic_roots(const Gsp4& G,
                                                               const std::array<Code, 4>& c) {
  const Field& f = G.field();
  std::vector<FieldElement> poly(5);
  for (std::size_t i = 0; i < 4; ++i) poly[i] = f.embed(G.arith().element(c[i]), Level::quartic);
  poly[4] = f.one(Level::quartic);
  std::vector<std::pair<FieldElement, int>> roots;
  for (std::int64_t e = 0; e < f.unit_order(Level::quartic) && poly.size() > 1; ++e) {
    FieldElement z = f.element(Level::quartic, e);
    int mult = 0;
    for (;;) {
      // Synthetic division by (x - z).
      std::vector<FieldElement> quo(poly.size() - 1);
      FieldElement acc = f.zero(Level::quartic);
      for (std::size_t i = poly.size(); i-- > 0;) {
        acc = f.add(f.mul(acc, z), poly[i]);
        if (i > 0) quo[i - 1] = acc;
      }
      if (!acc.is_zero()) break;
      poly = quo;
      ++mult;
      if (poly.size() == 1) break;
    }
    if (mult > 0) roots.push_back({z, mult});
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Element analysis.

/// Multiplicative order of a group element.
inline std::uint64_t element_order(const Gsp4& G, const Mat4& g) {
  Mat4 x = g;
  const Mat4 id = Mat4::identity();
  for (std::uint64_t n = 1;; ++n) {
    if (x == id) return n;
    x = G.mul(x, g);
    if (n > G.order()) throw std::logic_error("element order exceeds group order");
  }
}

/// Jordan decomposition g = s u with s semisimple, u unipotent, su = us.
inline std::pair<Mat4, Mat4> jordan_decomposition(const Gsp4& G, const Mat4& g) {
  std::uint64_t n = element_order(G, g);
  const std::uint64_t p = static_cast<std::uint64_t>(G.field().p());
  std::uint64_t pr = 1;
  while (n % (pr * p) == 0) pr *= p;
  std::uint64_t m = n / pr;
  // alpha = 0 mod p^r, alpha = 1 mod m.
  std::uint64_t alpha = 0;
  if (m > 1) {
    for (std::uint64_t t = 0; t < m; ++t)
      if ((pr * t) % m == 1) {
        alpha = pr * t;
        break;
      }
  }
  Mat4 s = power(G.arith(), g, alpha);
  Mat4 u = G.mul(G.inverse(s), g);
  return {s, u};
}

struct EigenData {
  std::int64_t kappa_log = 0;
  int multiplicity = 0;
  std::array<int, 4> ranks{};  // rank of (g - z)^j, j = 1..4, over F_{q^4}
  auto operator<=>(const EigenData&) const = default;
};

/// Square class of the binary form v -> <v, (u-1) v> when u - 1 has rank 2
/// and square zero.
enum class UnipotentForm : std::int8_t { none = -1, anisotropic = 0, isotropic = 1 };

/// Conjugacy invariant of an element: multiplier, characteristic polynomial,
/// the rank sequence of (g - z)^j at each eigenvalue z, and the unipotent
/// form class.
struct Fingerprint {
  Code multiplier = 0;
  std::array<Code, 4> charpoly{};
  std::vector<EigenData> eigen;
  UnipotentForm form = UnipotentForm::none;

  auto operator<=>(const Fingerprint&) const = default;

  std::string str() const {
    std::ostringstream o;
    o << "lambda=" << int{multiplier} << " chi=[" << int{charpoly[0]} << "," << int{charpoly[1]}
      << "," << int{charpoly[2]} << "," << int{charpoly[3]} << "]";
    for (const auto& e : eigen) {
      o << " k" << e.kappa_log << "^" << e.multiplicity << "(";
      for (int r : e.ranks) o << r;
      o << ")";
    }
    o << " form=" << static_cast<int>(form);
    return o.str();
  }
};

struct ElementAnalysis {
  Fingerprint fingerprint;
  int nilpotent_rank = 0;  // rank of u - 1
};

inline ElementAnalysis analyze(const Gsp4& G, const Mat4& g) {
  const FqArith& F = G.arith();
  const Field& f = G.field();
  ElementAnalysis a;
  Fingerprint& fp = a.fingerprint;
  fp.multiplier = G.multiplier_of_member(g);
  fp.charpoly = charpoly(F, g);
  QuarticMatrix gl = lift(G, g);
  for (auto [z, mult] : quartic_roots(G, fp.charpoly)) {
    EigenData d;
    d.kappa_log = z.log;
    d.multiplicity = mult;
    QuarticMatrix m = gl;
    for (std::size_t i = 0; i < 4; ++i) m[i * 5] = f.sub(m[i * 5], z);
    QuarticMatrix pw = m;
    for (std::size_t j = 0; j < 4; ++j) {
      d.ranks[j] = quartic_rank(f, pw);
      pw = quartic_mul(f, pw, m);
    }
    fp.eigen.push_back(d);
  }
  auto [s, u] = jordan_decomposition(G, g);
  Mat4 N = sub(F, u, Mat4::identity());
  a.nilpotent_rank = rank(F, N);
  if (a.nilpotent_rank == 2 && mul(F, N, N) == Mat4{}) {
    Mat4 S = mul(F, G.form(), N);  // symmetric
    for (std::size_t i = 0; i < 4 && fp.form == UnipotentForm::none; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        Code det = F.sub(F.mul(S(i, i), S(j, j)), F.mul(S(i, j), S(j, i)));
        if (det != 0) {
          fp.form = F.is_square(F.neg(det)) ? UnipotentForm::isotropic : UnipotentForm::anisotropic;
          break;
        }
      }
    if (fp.form == UnipotentForm::none) throw std::logic_error("rank-2 form without a nonzero principal minor");
  }
  return a;
}

// ---------------------------------------------------------------------------
// Class labels.

enum class Family : std::uint8_t {
  A1, A2, A31, A32, A5,
  B11, B12, B21, B22, B3, B41, B42, B43, B44, B51, B52,
  C1, C21, C22, C3, C4, C5, C6,
  D1, D2, D31, D32, D4, D5, D6, D7, D8, D9,
};

inline constexpr std::array<const char*, 33> kFamilyNames = {
    "A1",  "A2",  "A31", "A32", "A5",  "B11", "B12", "B21", "B22", "B3", "B41",
    "B42", "B43", "B44", "B51", "B52", "C1",  "C21", "C22", "C3",  "C4", "C5",
    "C6",  "D1",  "D2",  "D31", "D32", "D4",  "D5",  "D6",  "D7",  "D8", "D9"};

inline const char* family_name(Family f) { return kFamilyNames[static_cast<std::size_t>(f)]; }

inline std::optional<Family> family_from_name(const std::string& s) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i)
    if (s == kFamilyNames[i]) return static_cast<Family>(i);
  return std::nullopt;
}

/// Which of i, j, k a family carries.
struct FamilyParams {
  bool i, j;
};
inline FamilyParams family_params(Family f) {
  switch (f) {
    case Family::C1: case Family::C21: case Family::C22: case Family::C3: case Family::C4:
    case Family::C5: case Family::D1: case Family::D2: case Family::D31: case Family::D32:
    case Family::D5: case Family::D6: case Family::D8: case Family::D9:
      return {true, false};
    case Family::C6: case Family::D4: case Family::D7:
      return {true, true};
    default:
      return {false, false};
  }
}

/// Family and parameters of a class. Families with `provisional` set are
/// the elliptic ones that meet no parabolic subgroup; their parameters are
/// orbit-minimal exponents rather than a published normalization.
struct ClassLabel {
  Family family = Family::A1;
  std::int64_t i = 0, j = 0, k = 0;
  bool provisional = false;

  auto operator<=>(const ClassLabel&) const = default;

  std::string str() const {
    std::ostringstream o;
    o << family_name(family) << "(";
    FamilyParams fp = family_params(family);
    if (fp.i) o << "i=" << i << ",";
    if (fp.j) o << "j=" << j << ",";
    o << "k=" << k << ")";
    return o.str();
  }
};

/// Derives the label of an element from its analysis.
inline ClassLabel derive_label(const Gsp4& G, const ElementAnalysis& an) {
  const std::int64_t q = G.q();
  const std::int64_t h = (q - 1) / 2;
  const std::int64_t Q2 = q * q - 1;
  const Field& f = G.field();
  const Fingerprint& fp = an.fingerprint;
  const std::int64_t L = G.arith().log(fp.multiplier);
  const std::int64_t ib = f.index(Level::base), iq = f.index(Level::quadratic);
  auto m1 = [&](std::int64_t x) { return floor_mod(x, q - 1); };
  auto t3 = [&](std::int64_t x) { std::int64_t r = m1(x); return r == 0 ? q - 1 : r; };
  auto in_t2 = [&](std::int64_t x) { std::int64_t r = m1(x); return r >= 1 && r <= h; };
  auto in_t1 = [&](std::int64_t x) { std::int64_t r = m1(x); return r >= 1 && r <= h - 1; };
  auto is_base = [&](const EigenData& e) { return e.kappa_log % ib == 0; };
  auto is_quad = [&](const EigenData& e) { return e.kappa_log % iq == 0; };
  auto gexp = [&](const EigenData& e) { return e.kappa_log / ib; };
  auto texp = [&](const EigenData& e) { return e.kappa_log / iq; };
  const bool semisimple = an.nilpotent_rank == 0;
  const bool iso = fp.form == UnipotentForm::isotropic;
  const auto& E = fp.eigen;
  ClassLabel lab;
  auto fail = [&]() -> ClassLabel {
    throw std::logic_error("unrecognized eigenvalue structure: " + fp.str());
  };

  if (E.size() == 1) {
    if (!is_base(E[0])) return fail();
    lab.k = t3(gexp(E[0]));
    static constexpr Family by_rank[] = {Family::A1, Family::A2, Family::A31, Family::A5};
    lab.family = by_rank[an.nilpotent_rank];
    if (an.nilpotent_rank == 2) lab.family = iso ? Family::A31 : Family::A32;
    return lab;
  }

  if (E.size() == 2) {
    if (E[0].multiplicity != 2) return fail();
    if (is_base(E[0]) && is_base(E[1])) {
      std::int64_t ea = gexp(E[0]), eb = gexp(E[1]);
      bool opposite = m1(eb - ea - h) == 0;
      if (m1(ea + eb - L) == 0 && m1(2 * ea - L) != 0) {
        if (opposite) {
          lab.family = semisimple ? Family::B21 : Family::B51;
          lab.k = in_t2(ea) ? m1(ea) : m1(eb);
        } else {
          lab.family = semisimple ? Family::C1 : Family::C3;
          if (!in_t1(eb - ea)) std::swap(ea, eb);
          lab.i = m1(eb - ea);
          lab.k = t3(ea);
        }
        return lab;
      }
      if (!opposite || m1(2 * ea - L) != 0) return fail();
      int ra = E[0].ranks[0], rb = E[1].ranks[0];
      if (ra == 2 && rb == 2) {
        lab.family = Family::B11;
        lab.k = in_t2(ea) ? m1(ea) : m1(eb);
      } else if (ra == 2 || rb == 2) {
        lab.family = Family::B3;
        lab.k = t3(ra == 2 ? ea : eb);
      } else {
        lab.family = iso ? Family::B41 : Family::B42;
        lab.k = in_t2(ea) ? m1(ea) : m1(eb);
      }
      return lab;
    }
    if (!is_quad(E[0]) || !is_quad(E[1])) return fail();
    std::int64_t e1 = texp(E[0]), e2 = texp(E[1]);
    if (floor_mod(e2 - e1 - Q2 / 2, Q2) == 0 && floor_mod(q * e1 - e1 - Q2 / 2, Q2) == 0) {
      // Eigenvalues +-x with x^2 in F_q a non-square.
      std::int64_t g2 = (2 * e1) / (q + 1);
      bool plus = m1(g2 - L) == 0;
      std::int64_t k0 = (m1(g2) - 1) / 2;
      lab.k = k0 == 0 ? h : k0;
      if (plus) lab.family = semisimple ? Family::B12 : (iso ? Family::B43 : Family::B44);
      else lab.family = semisimple ? Family::B22 : Family::B52;
      return lab;
    }
    if (floor_mod(q * e1 - e2, Q2) != 0 || m1(e1 - L) != 0) return fail();
    std::int64_t e = floor_mod(e1, q + 1) <= h ? e1 : e2;
    lab.family = semisimple ? Family::D2 : Family::D5;
    lab.i = floor_mod(e, q + 1);
    lab.k = t3((e - lab.i) / (q + 1));
    return lab;
  }

  if (E.size() == 3) {
    std::size_t d = 0;
    while (d < 3 && E[d].multiplicity != 2) ++d;
    if (d == 3 || !is_base(E[d])) return fail();
    const EigenData& a = E[d];
    const EigenData& b = E[(d + 1) % 3];
    const EigenData& c = E[(d + 2) % 3];
    std::int64_t ea = gexp(a);
    lab.k = t3(ea);
    if (is_base(b) && is_base(c)) {
      lab.family = a.ranks[0] == 2 ? Family::C5 : Family::C4;
      lab.i = in_t1(gexp(b) - ea) ? m1(gexp(b) - ea) : m1(gexp(c) - ea);
      return lab;
    }
    if (!is_quad(b) || !is_quad(c)) return fail();
    lab.family = a.ranks[0] == 2 ? Family::D6 : Family::D8;
    std::int64_t r = floor_mod(texp(b) - ea * (q + 1), Q2);
    if (r % (q - 1) != 0) return fail();
    std::int64_t i = floor_mod(r / (q - 1), q + 1);
    lab.i = i <= h ? i : q + 1 - i;
    return lab;
  }

  if (E.size() != 4) return fail();
  std::vector<const EigenData*> base, quad, quart;
  for (const auto& e : E) {
    if (is_base(e)) base.push_back(&e);
    else if (is_quad(e)) quad.push_back(&e);
    else quart.push_back(&e);
  }
  if (base.size() == 4) {
    std::set<std::int64_t> S;
    for (auto* e : base) S.insert(gexp(*e));
    bool neg_closed = true;
    for (std::int64_t s : S) neg_closed = neg_closed && S.count(m1(s + h)) > 0;
    if (neg_closed) {
      lab.family = Family::C21;
      for (std::int64_t u : S) {
        std::int64_t v = m1(L - u + h);
        if (in_t1(v - u) && in_t2(u)) {
          lab.i = m1(v - u);
          lab.k = m1(u);
          return lab;
        }
      }
      return fail();
    }
    lab.family = Family::C6;
    for (std::int64_t u : S) {
      std::int64_t up = m1(L - u);
      for (std::int64_t w : S) {
        if (w == u || w == up) continue;
        std::int64_t i = m1(w - u), j = m1(L - w - u);
        if (i >= 1 && i < j && j <= h - 1) {
          lab.i = i;
          lab.j = j;
          lab.k = t3(u);
          return lab;
        }
      }
    }
    return fail();
  }
  if (base.size() == 2 && quad.size() == 2) {
    lab.family = Family::D1;
    std::vector<std::int64_t> r2 = index_r2(q);
    for (auto* t : base)
      for (auto* x : quad) {
        std::int64_t i = floor_mod(texp(*x) - gexp(*t) * (q + 1), Q2);
        if (std::find(r2.begin(), r2.end(), i) != r2.end()) {
          lab.i = i;
          lab.k = t3(gexp(*t));
          return lab;
        }
      }
    return fail();
  }
  if (quad.size() == 4) {
    std::vector<std::int64_t> ex;
    for (auto* e : quad) ex.push_back(texp(*e));
    std::int64_t x = ex[0];
    std::int64_t xq = floor_mod(q * x, Q2);
    std::vector<std::int64_t> other;
    for (std::int64_t e : ex)
      if (e != x && e != xq) other.push_back(e);
    if (other.size() != 2) return fail();
    auto negate = [&](std::int64_t e) { return floor_mod(e + Q2 / 2, Q2); };
    bool opposite = (other[0] == negate(x) || other[0] == negate(xq));
    if (m1(x - L) == 0) {
      // Both Frobenius pairs are self-paired: elliptic.
      lab.provisional = true;
      lab.k = m1(L);
      if (opposite) {
        lab.family = Family::D32;
        lab.i = *std::min_element(ex.begin(), ex.end());
      } else {
        lab.family = Family::D7;
        std::int64_t a = std::min(x, xq), b = std::min(other[0], other[1]);
        lab.i = std::min(a, b);
        lab.j = std::max(a, b);
      }
      return lab;
    }
    if (floor_mod(q * x - negate(x), Q2) == 0) {
      lab.family = Family::C22;
      auto half_k = [&](std::int64_t e) { return m1(((2 * e) / (q + 1) - 1) / 2); };
      for (std::int64_t e : ex) {
        std::int64_t ey = floor_mod(L * (q + 1) - e + Q2 / 2, Q2);
        std::int64_t k = half_k(e), i = m1(half_k(ey) - k);
        if (in_t2(k) && in_t1(i)) {
          lab.k = k;
          lab.i = i;
          return lab;
        }
      }
      return fail();
    }
    if (opposite) {
      lab.family = Family::D31;
      for (std::int64_t e : ex) {
        std::int64_t i = floor_mod(e, q + 1), k = m1((e - i) / (q + 1));
        if (i >= 1 && i <= h && in_t2(k)) {
          lab.i = i;
          lab.k = k;
          return lab;
        }
      }
      return fail();
    }
    lab.family = Family::D4;
    for (std::int64_t e : ex) {
      std::int64_t jj = m1(L - e), i = floor_mod(e, q + 1);
      if (in_t1(jj) && i >= 1 && i <= h) {
        lab.i = i;
        lab.j = jj;
        lab.k = t3((e - i) / (q + 1));
        return lab;
      }
    }
    return fail();
  }
  if (quart.size() == 4) {
    lab.family = Family::D9;
    lab.provisional = true;
    lab.k = m1(L);
    lab.i = quart[0]->kappa_log;
    for (auto* e : quart) lab.i = std::min(lab.i, e->kappa_log);
    return lab;
  }
  return fail();
}

inline ClassLabel label_element(const Gsp4& G, const Mat4& g) { return derive_label(G, analyze(G, g)); }

/// Class label parsed from its printed form, e.g. "C1(i=1,k=2)".
inline ClassLabel parse_label(const std::string& s) {
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw std::invalid_argument("malformed label: " + s);
  auto fam = family_from_name(s.substr(0, open));
  if (!fam) throw std::invalid_argument("unknown family in label: " + s);
  ClassLabel l;
  l.family = *fam;
  std::string body = s.substr(open + 1, s.size() - open - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed label: " + s);
    std::string key = item.substr(0, eq);
    std::int64_t v = std::stoll(item.substr(eq + 1));
    if (key == "i") l.i = v;
    else if (key == "j") l.j = v;
    else if (key == "k") l.k = v;
    else throw std::invalid_argument("unknown label parameter: " + key);
  }
  l.provisional = *fam == Family::D32 || *fam == Family::D7 || *fam == Family::D9;
  return l;
}

// ---------------------------------------------------------------------------
// Class list.

struct ClassInfo {
  Mat4 representative;
  std::uint64_t size = 0;
  std::uint64_t centralizer_order = 0;
  Fingerprint fingerprint;
  ClassLabel label;
};

/// Conjugacy classes of GSp(4, F_q), ordered by fingerprint.
struct ClassList {
  std::int64_t q = 0;
  std::uint64_t group_order = 0;
  ConjugacyPartition partition;
  std::vector<ClassInfo> classes;

  std::size_t size() const { return classes.size(); }

  std::optional<std::size_t> find(const ClassLabel& l) const {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const ClassLabel& m = classes[c].label;
      if (m.family == l.family && m.i == l.i && m.j == l.j && m.k == l.k) return c;
    }
    return std::nullopt;
  }
  std::size_t identity_class() const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (classes[c].representative == Mat4::identity()) return c;
    throw std::logic_error("identity class missing");
  }
};

/// Conjugacy classes of the full group. Multiplying by a scalar z maps
/// classes to classes and scales the multiplier by z^2, so orbits are
/// computed only where the multiplier is 1 or gamma and then transported.
/// Same result as conjugacy_partition(E, G.generators()).
inline ConjugacyPartition gsp4_partition(const Gsp4& G, const EnumeratedGroup<4>& E) {
  const FqArith& F = G.arith();
  const auto gens = G.generators();
  std::vector<SparseMatrix<4>> fwd, inv;
  for (const auto& s : gens) {
    fwd.emplace_back(s);
    inv.emplace_back(G.inverse(s));
  }
  const std::size_t n = E.size();
  UnionFind uf(n);
  std::vector<std::uint8_t> shift(n, 0);  // t with multiplier gamma^(2t + parity)
  for (std::size_t i = 0; i < n; ++i) {
    Mat4 x = E.element(i);
    std::int64_t e = F.log(G.multiplier_of_member(x));
    if (e >= 2) {
      shift[i] = static_cast<std::uint8_t>(e / 2);
      continue;
    }
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto j = E.find(mul_sparse(F, fwd[s], x, inv[s]));
      if (!j) throw std::logic_error("conjugate left the group");
      uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*j));
    }
  }
  const std::size_t nshift = static_cast<std::size_t>(G.q() - 1) / 2;
  ConjugacyPartition P;
  P.group_order = n;
  P.class_of.assign(n, 0);
  std::vector<std::uint32_t> base_id(n, KeyIndex::kEmpty);
  std::vector<std::uint32_t> id_of;  // base class * nshift + shift -> class id
  std::uint32_t nbase = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t root;
    if (shift[i] == 0) {
      root = uf.find(static_cast<std::uint32_t>(i));
    } else {
      Mat4 y = scale(F, F.gamma_pow(-static_cast<std::int64_t>(shift[i])), E.element(i));
      auto j = E.find(y);
      if (!j) throw std::logic_error("scaled element left the group");
      root = uf.find(static_cast<std::uint32_t>(*j));
    }
    if (base_id[root] == KeyIndex::kEmpty) {
      base_id[root] = nbase++;
      id_of.resize(static_cast<std::size_t>(nbase) * nshift, KeyIndex::kEmpty);
    }
    std::uint32_t& id = id_of[base_id[root] * nshift + shift[i]];
    if (id == KeyIndex::kEmpty) {
      if (P.representative.size() >= std::numeric_limits<std::uint16_t>::max())
        throw ResourceGuardError("too many conjugacy classes");
      id = static_cast<std::uint32_t>(P.representative.size());
      P.representative.push_back(i);
      P.size.push_back(0);
    }
    P.class_of[i] = static_cast<std::uint16_t>(id);
    ++P.size[id];
  }
  return P;
}

inline ClassList compute_classes(const Gsp4& G, const EnumeratedGroup<4>& E) {
  ClassList L;
  L.q = G.q();
  L.group_order = E.size();
  L.partition = gsp4_partition(G, E);
  std::vector<ClassInfo> info(L.partition.num_classes());
  for (std::size_t c = 0; c < info.size(); ++c) {
    info[c].representative = E.element(L.partition.representative[c]);
    info[c].size = L.partition.size[c];
    info[c].centralizer_order = L.partition.centralizer_order(c);
    ElementAnalysis an = analyze(G, info[c].representative);
    info[c].fingerprint = an.fingerprint;
    info[c].label = derive_label(G, an);
  }
  std::vector<std::size_t> order(info.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (info[a].fingerprint != info[b].fingerprint) return info[a].fingerprint < info[b].fingerprint;
    return L.partition.representative[a] < L.partition.representative[b];
  });
  L.partition.reorder(order);
  for (std::size_t c : order) L.classes.push_back(info[c]);
  return L;
}

/// Number of H-conjugacy classes inside each G-class.
inline std::vector<int> split_counts(const Gsp4& G, const EnumeratedGroup<4>& E, const ClassList& L,
                                     Subgroup s) {
  auto elems = G.subgroup_elements(s);
  auto H = EnumeratedGroup<4>::from_elements(G.arith(), elems);
  auto gens = G.subgroup_generators(s);
  ConjugacyPartition P = conjugacy_partition(H, std::span<const Mat4>(gens));
  std::vector<int> counts(L.size(), 0);
  for (std::size_t c = 0; c < P.num_classes(); ++c) {
    std::size_t gi = E.index_of(H.element(P.representative[c]));
    ++counts[L.partition.class_of[gi]];
  }
  return counts;
}


/// Published numbers of B-, P- and Q-classes in each class family;
/// 0 where the family misses the subgroup.
struct SplitRow {
  Family family;
  int borel, siegel, klingen;
};

inline const std::vector<SplitRow>& published_split_counts() {
  static const std::vector<SplitRow> rows = {
      {Family::A1, 1, 1, 1},
      {Family::A2, 2, 1, 2},
      {Family::A31, 3, 2, 2},
      {Family::A32, 1, 1, 1},
      {Family::A5, 1, 1, 1},
      {Family::B11, 2, 1, 2},
      {Family::B12, 0, 1, 0},
      {Family::B21, 4, 3, 2},
      {Family::B22, 0, 1, 0},
      {Family::B3, 2, 1, 2},
      {Family::B41, 2, 1, 2},
      {Family::B42, 2, 1, 2},
      {Family::B43, 0, 1, 0},
      {Family::B44, 0, 1, 0},
      {Family::B51, 4, 3, 2},
      {Family::B52, 0, 1, 0},
      {Family::C1, 4, 3, 2},
      {Family::C21, 8, 4, 4},
      {Family::C22, 0, 2, 0},
      {Family::C3, 4, 3, 2},
      {Family::C4, 4, 2, 3},
      {Family::C5, 4, 2, 3},
      {Family::C6, 8, 4, 4},
      {Family::D1, 0, 0, 2},
      {Family::D2, 0, 1, 0},
      {Family::D31, 0, 2, 0},
      {Family::D32, 0, 0, 0},
      {Family::D4, 0, 2, 0},
      {Family::D5, 0, 1, 0},
      {Family::D6, 0, 0, 1},
      {Family::D7, 0, 0, 0},
      {Family::D8, 0, 0, 1},
      {Family::D9, 0, 0, 0},
  };
  return rows;
}

}  // namespace gsp4

#endif  // GSP4_CONJUGACY_HPP_
