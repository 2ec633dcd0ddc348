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

#ifndef GSP4_GROUP_HPP_
#define GSP4_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4/field.hpp"
#include "gsp4/finite_group.hpp"
#include "gsp4/fq_matrix.hpp"

namespace gsp4 {

enum class Subgroup { whole, borel, siegel, klingen, unipotent, sp4, gsp4_plus };

inline const char* subgroup_name(Subgroup s) {
  switch (s) {
    case Subgroup::whole: return "G";
    case Subgroup::borel: return "B";
    case Subgroup::siegel: return "P";
    case Subgroup::klingen: return "Q";
    case Subgroup::unipotent: return "N";
    case Subgroup::sp4: return "Sp4";
    case Subgroup::gsp4_plus: return "GSp4+";
  }
  return "?";
}

/// Borel element diag(a, b, c/b, c/a) * X(x) * Y(lambda, mu, kappa) with
/// X(x) = 1 + x E_{23} and Y the Klingen unipotent below.
struct BorelParts {
  Code a = 1, b = 1, c = 1, x = 0, lambda = 0, mu = 0, kappa = 0;
  auto operator<=>(const BorelParts&) const = default;
};

/// Siegel element [[A, 0], [0, lambda A']] * [[1, S], [0, 1]],
/// A' = w tA^-1 w, S = [[mu, kappa], [x, mu]].
struct SiegelParts {
  Mat2 A = Mat2::identity();
  Code lambda = 1, x = 0, mu = 0, kappa = 0;
  auto operator<=>(const SiegelParts&) const = default;
};

/// Klingen element diag(t, A, det A / t) * Y(lambda, mu, kappa),
/// Y = [[1, l, m, k], [0, 1, 0, m], [0, 0, 1, -l], [0, 0, 0, 1]].
struct KlingenParts {
  Code t = 1;
  Mat2 A = Mat2::identity();
  Code lambda = 0, mu = 0, kappa = 0;
  auto operator<=>(const KlingenParts&) const = default;
};

/// GSp(4, F_q) = { g : tg J g = lambda(g) J }, J = antidiag(1, 1, -1, -1).
class Gsp4 {
 public:
  static constexpr std::size_t kDefaultElementLimit = 40'000'000;

  explicit Gsp4(int p, int n = 1)
      : field_(std::make_shared<const Field>(Field::make(p, n))), F_(*field_) {
    sign_ = {1, 1, F_.minus_one(), F_.minus_one()};
    for (std::size_t i = 0; i < 4; ++i) J_(i, 3 - i) = sign_[i];
  }
  Gsp4(const Gsp4& o) : field_(o.field_), F_(*field_), J_(o.J_), sign_(o.sign_) {}
  Gsp4& operator=(const Gsp4&) = delete;

  static Gsp4 for_q(std::int64_t q) {
    for (int p = 3; p <= q; p += 2) {
      if (!is_prime(p)) continue;
      std::int64_t t = 1;
      int n = 0;
      while (t < q) {
        t *= p;
        ++n;
      }
      if (t == q) return Gsp4(p, n);
    }
    throw std::invalid_argument("q must be an odd prime power");
  }

  const Field& field() const { return *field_; }
  const FqArith& arith() const { return F_; }
  std::int64_t q() const { return field_->q(); }
  const Mat4& form() const { return J_; }

  std::uint64_t order() const {
    std::uint64_t q1 = static_cast<std::uint64_t>(q());
    std::uint64_t q4 = q1 * q1 * q1 * q1;
    return q4 * (q4 - 1) * (q1 * q1 - 1) * (q1 - 1);
  }

  std::uint64_t subgroup_order(Subgroup s) const {
    std::uint64_t q1 = static_cast<std::uint64_t>(q());
    std::uint64_t q4 = q1 * q1 * q1 * q1;
    switch (s) {
      case Subgroup::whole: return order();
      case Subgroup::borel: return q4 * (q1 - 1) * (q1 - 1) * (q1 - 1);
      case Subgroup::siegel:
      case Subgroup::klingen: return q4 * (q1 * q1 - 1) * (q1 - 1) * (q1 - 1);
      case Subgroup::unipotent: return q4;
      case Subgroup::sp4: return q4 * (q4 - 1) * (q1 * q1 - 1);
      case Subgroup::gsp4_plus: return order() / 2;
    }
    return 0;
  }

  Mat4 mul(const Mat4& a, const Mat4& b) const { return gsp4::mul(F_, a, b); }

  /// lambda with tg J g = lambda J, or nothing when g is not a similitude.
  std::optional<Code> multiplier(const Mat4& g) const {
    Mat4 m = gsp4::mul(F_, gsp4::mul(F_, transpose(g), J_), g);
    Code lam = m(0, 3);
    if (lam == 0) return std::nullopt;
    if (m != scale(F_, lam, J_)) return std::nullopt;
    return lam;
  }
  bool is_member(const Mat4& g) const { return multiplier(g).has_value(); }

  /// Multiplier of a known group element (one entry of tg J g).
  Code multiplier_of_member(const Mat4& g) const {
    Code s = F_.mul(g(0, 0), g(3, 3));
    s = F_.add(s, F_.mul(g(1, 0), g(2, 3)));
    s = F_.sub(s, F_.mul(g(2, 0), g(1, 3)));
    s = F_.sub(s, F_.mul(g(3, 0), g(0, 3)));
    return s;
  }

  /// Inverse of a group element: g^-1 = lambda^-1 s_i s_j g_{3-j, 3-i}.
  Mat4 inverse(const Mat4& g) const {
    Code li = F_.inv(multiplier_of_member(g));
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        r(i, j) = F_.mul(F_.mul(li, F_.mul(sign_[i], sign_[j])), g(3 - j, 3 - i));
    return r;
  }

  Mat4 conjugate(const Mat4& x, const Mat4& g) const { return mul(mul(x, g), inverse(x)); }

  // Root elements. alpha is short (E12 - E34), beta is long (E23).
  Mat4 x_alpha(Code t) const { return root(0, 1, 2, 3, t); }
  Mat4 x_beta(Code t) const { return root(1, 2, 4, 4, t); }
  Mat4 x_minus_alpha(Code t) const { return root(1, 0, 3, 2, t); }
  Mat4 x_minus_beta(Code t) const { return root(2, 1, 4, 4, t); }
  Mat4 torus(Code a, Code b, Code c) const {
    Mat4 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = F_.div(c, b);
    m(3, 3) = F_.div(c, a);
    return m;
  }

  /// Sp4 root elements for an F_p-basis of F_q, plus diag(1, 1, gamma, gamma).
  std::vector<Mat4> generators() const {
    std::vector<Mat4> g;
    for (Code t : basis()) {
      g.push_back(x_alpha(t));
      g.push_back(x_beta(t));
      g.push_back(x_minus_alpha(t));
      g.push_back(x_minus_beta(t));
    }
    g.push_back(torus(1, 1, F_.gamma_pow(1)));
    return g;
  }

  std::vector<Mat4> subgroup_generators(Subgroup s) const {
    if (s == Subgroup::whole) return generators();
    if (s == Subgroup::sp4 || s == Subgroup::gsp4_plus) {
      std::vector<Mat4> g;
      for (Code t : basis()) {
        g.push_back(x_alpha(t));
        g.push_back(x_beta(t));
        g.push_back(x_minus_alpha(t));
        g.push_back(x_minus_beta(t));
      }
      if (s == Subgroup::gsp4_plus) g.push_back(Mat4::scalar(F_.gamma_pow(1)));
      return g;
    }
    std::vector<Mat4> g;
    for (Code t : basis()) {
      g.push_back(x_alpha(t));
      g.push_back(x_beta(t));
      g.push_back(unipotent_y(0, t, 0));
      g.push_back(unipotent_y(0, 0, t));
      if (s == Subgroup::siegel) g.push_back(x_minus_alpha(t));
      if (s == Subgroup::klingen) g.push_back(x_minus_beta(t));
    }
    if (s != Subgroup::unipotent) {
      Code gm = F_.gamma_pow(1);
      g.push_back(torus(gm, 1, 1));
      g.push_back(torus(1, gm, 1));
      g.push_back(torus(1, 1, gm));
    }
    return g;
  }

  /// Shape test for elements already known to lie in G.
  bool in_subgroup(const Mat4& g, Subgroup s) const {
    switch (s) {
      case Subgroup::whole: return true;
      case Subgroup::borel:
        for (std::size_t i = 1; i < 4; ++i)
          for (std::size_t j = 0; j < i; ++j)
            if (g(i, j) != 0) return false;
        return true;
      case Subgroup::siegel:
        return g(2, 0) == 0 && g(2, 1) == 0 && g(3, 0) == 0 && g(3, 1) == 0;
      case Subgroup::klingen:
        return g(1, 0) == 0 && g(2, 0) == 0 && g(3, 0) == 0 && g(3, 1) == 0 && g(3, 2) == 0;
      case Subgroup::unipotent:
        if (!in_subgroup(g, Subgroup::borel)) return false;
        for (std::size_t i = 0; i < 4; ++i)
          if (g(i, i) != 1) return false;
        return true;
      case Subgroup::sp4: return multiplier_of_member(g) == 1;
      case Subgroup::gsp4_plus: return F_.is_square(multiplier_of_member(g));
    }
    return false;
  }

  Mat4 unipotent_y(Code lambda, Code mu, Code kappa) const {
    Mat4 m = Mat4::identity();
    m(0, 1) = lambda;
    m(0, 2) = mu;
    m(0, 3) = kappa;
    m(1, 3) = mu;
    m(2, 3) = F_.neg(lambda);
    return m;
  }

  Mat4 compose(const BorelParts& b) const {
    Mat4 x = Mat4::identity();
    x(1, 2) = b.x;
    return mul(mul(torus(b.a, b.b, b.c), x), unipotent_y(b.lambda, b.mu, b.kappa));
  }
  BorelParts decompose_borel(const Mat4& g) const {
    if (!in_subgroup(g, Subgroup::borel)) throw std::invalid_argument("not in the Borel subgroup");
    BorelParts b;
    b.a = g(0, 0);
    b.b = g(1, 1);
    b.c = multiplier_of_member(g);
    b.lambda = F_.div(g(0, 1), b.a);
    b.mu = F_.div(g(0, 2), b.a);
    b.kappa = F_.div(g(0, 3), b.a);
    b.x = F_.div(g(1, 2), b.b);
    if (compose(b) != g) throw std::invalid_argument("not a Borel element");
    return b;
  }

  /// A' = w tA^-1 w.
  Mat2 levi_dual(const Mat2& A) const {
    Mat2 ti = transpose(gsp4::inverse(F_, A));
    Mat2 r;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) r(i, j) = ti(1 - i, 1 - j);
    return r;
  }

  Mat4 compose(const SiegelParts& s) const {
    Mat2 D = scale(F_, s.lambda, levi_dual(s.A));
    Mat4 L;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        L(i, j) = s.A(i, j);
        L(i + 2, j + 2) = D(i, j);
      }
    Mat4 U = Mat4::identity();
    U(0, 2) = s.mu;
    U(0, 3) = s.kappa;
    U(1, 2) = s.x;
    U(1, 3) = s.mu;
    return mul(L, U);
  }
  SiegelParts decompose_siegel(const Mat4& g) const {
    if (!in_subgroup(g, Subgroup::siegel)) throw std::invalid_argument("not in the Siegel parabolic");
    SiegelParts s;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) s.A(i, j) = g(i, j);
    s.lambda = multiplier_of_member(g);
    Mat2 B;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) B(i, j) = g(i, j + 2);
    Mat2 S = gsp4::mul(F_, gsp4::inverse(F_, s.A), B);
    s.mu = S(0, 0);
    s.kappa = S(0, 1);
    s.x = S(1, 0);
    if (compose(s) != g) throw std::invalid_argument("not a Siegel element");
    return s;
  }

  Mat4 compose(const KlingenParts& k) const {
    Mat4 L;
    L(0, 0) = k.t;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) L(i + 1, j + 1) = k.A(i, j);
    L(3, 3) = F_.div(determinant(F_, k.A), k.t);
    return mul(L, unipotent_y(k.lambda, k.mu, k.kappa));
  }
  KlingenParts decompose_klingen(const Mat4& g) const {
    if (!in_subgroup(g, Subgroup::klingen)) throw std::invalid_argument("not in the Klingen parabolic");
    KlingenParts k;
    k.t = g(0, 0);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) k.A(i, j) = g(i + 1, j + 1);
    k.lambda = F_.div(g(0, 1), k.t);
    k.mu = F_.div(g(0, 2), k.t);
    k.kappa = F_.div(g(0, 3), k.t);
    if (compose(k) != g) throw std::invalid_argument("not a Klingen element");
    return k;
  }

  /// All elements of GL2(F_q).
  std::vector<Mat2> gl2_elements() const {
    std::vector<Mat2> out;
    const int q1 = F_.q();
    for (int a = 0; a < q1; ++a)
      for (int b = 0; b < q1; ++b)
        for (int c = 0; c < q1; ++c)
          for (int d = 0; d < q1; ++d) {
            Mat2 m;
            m.a = {static_cast<Code>(a), static_cast<Code>(b), static_cast<Code>(c), static_cast<Code>(d)};
            if (determinant(F_, m) != 0) out.push_back(m);
          }
    return out;
  }

  /// Parametric enumeration of B, P, Q or N.
  std::vector<Mat4> subgroup_elements(Subgroup s) const {
    const int q1 = F_.q();
    std::vector<Mat4> out;
    out.reserve(subgroup_order(s));
    auto triples = [&](auto&& f) {
      for (int l = 0; l < q1; ++l)
        for (int m = 0; m < q1; ++m)
          for (int k = 0; k < q1; ++k) f(static_cast<Code>(l), static_cast<Code>(m), static_cast<Code>(k));
    };
    switch (s) {
      case Subgroup::borel:
      case Subgroup::unipotent: {
        const int hi = s == Subgroup::unipotent ? 1 : q1 - 1;
        for (int a = 1; a <= hi; ++a)
          for (int b = 1; b <= hi; ++b)
            for (int c = 1; c <= hi; ++c)
              for (int x = 0; x < q1; ++x)
                triples([&](Code l, Code m, Code k) {
                  out.push_back(compose(BorelParts{static_cast<Code>(a), static_cast<Code>(b),
                                                   static_cast<Code>(c), static_cast<Code>(x), l, m, k}));
                });
        break;
      }
      case Subgroup::siegel:
        for (const Mat2& A : gl2_elements())
          for (int lam = 1; lam < q1; ++lam)
            for (int x = 0; x < q1; ++x)
              for (int m = 0; m < q1; ++m)
                for (int k = 0; k < q1; ++k)
                  out.push_back(compose(SiegelParts{A, static_cast<Code>(lam), static_cast<Code>(x),
                                                    static_cast<Code>(m), static_cast<Code>(k)}));
        break;
      case Subgroup::klingen:
        for (const Mat2& A : gl2_elements())
          for (int t = 1; t < q1; ++t)
            triples([&](Code l, Code m, Code k) {
              out.push_back(compose(KlingenParts{static_cast<Code>(t), A, l, m, k}));
            });
        break;
      default:
        throw std::invalid_argument("parametric enumeration is only available for B, P, Q, N");
    }
    return out;
  }

 private:
  // 1 + t E_{r1 c1} - t E_{r2 c2}; r2 == 4 drops the second term.
  Mat4 root(std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2, Code t) const {
    Mat4 m = Mat4::identity();
    m(r1, c1) = t;
    if (r2 < 4) m(r2, c2) = F_.neg(t);
    return m;
  }

  std::vector<Code> basis() const {
    std::vector<Code> b;
    for (int i = 0; i < field_->n(); ++i) b.push_back(F_.gamma_pow(i));
    return b;
  }

  std::shared_ptr<const Field> field_;
  FqArith F_;
  Mat4 J_;
  std::array<Code, 4> sign_{};
};

/// Every element of GSp(4, F_q): the closure of Sp(4, F_q) from its root
/// elements, then its cosets under diag(1, 1, gamma^e, gamma^e). Guarded
/// by `limit` (default admits q <= 5).
inline EnumeratedGroup<4> enumerate_group(const Gsp4& G,
                                          std::size_t limit = Gsp4::kDefaultElementLimit) {
  if (G.order() > limit)
    throw ResourceGuardError("GSp4(F_" + std::to_string(G.q()) + ") has " +
                             std::to_string(G.order()) + " elements, above the limit " +
                             std::to_string(limit));
  const FqArith& F = G.arith();
  auto gens = G.subgroup_generators(Subgroup::sp4);
  auto sp4 = EnumeratedGroup<4>::closure(F, gens, limit, static_cast<std::size_t>(G.subgroup_order(Subgroup::sp4)));
  if (sp4.size() != G.subgroup_order(Subgroup::sp4)) throw std::logic_error("Sp4 closure has the wrong order");
  std::vector<Mat4> reps;
  for (std::int64_t e = 0; e < G.q() - 1; ++e) reps.push_back(G.torus(1, 1, F.gamma_pow(e)));
  return EnumeratedGroup<4>::from_cosets(sp4, reps);
}

}  // namespace gsp4

#endif  // GSP4_GROUP_HPP_
