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

#ifndef GSP4_GL2_HPP_
#define GSP4_GL2_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4/field.hpp"
#include "gsp4/fq_matrix.hpp"

namespace gsp4 {

enum class Gl2Family : std::uint8_t { linear, steinberg, principal, cuspidal };

inline const char* gl2_family_name(Gl2Family f) {
  switch (f) {
    case Gl2Family::linear: return "linear";
    case Gl2Family::steinberg: return "steinberg";
    case Gl2Family::principal: return "principal";
    case Gl2Family::cuspidal: return "cuspidal";
  }
  return "?";
}

/// Irreducible character of GL(2,F_q).
///   linear(a):       alpha_a o det
///   steinberg(a):    alpha_a St
///   principal(a,b):  Ind(alpha_a x alpha_b), 0 <= a < b < q-1
///   cuspidal(a):     from phi_a on F_{q^2}^x, a mod q^2-1, (q+1) does not
///                    divide a; a is the least of {a, qa}.
/// alpha_m(gamma^t) = exp(2 pi i m t / (q-1)), phi_n(theta^t) likewise mod q^2-1.
struct Gl2Character {
  Gl2Family family = Gl2Family::linear;
  std::int64_t a = 0;
  std::int64_t b = 0;

  auto operator<=>(const Gl2Character&) const = default;

  static Gl2Character linear(std::int64_t q, std::int64_t a) {
    return {Gl2Family::linear, floor_mod(a, q - 1), 0};
  }
  static Gl2Character steinberg(std::int64_t q, std::int64_t a) {
    return {Gl2Family::steinberg, floor_mod(a, q - 1), 0};
  }
  static Gl2Character principal(std::int64_t q, std::int64_t a, std::int64_t b) {
    a = floor_mod(a, q - 1);
    b = floor_mod(b, q - 1);
    if (a == b) throw std::invalid_argument("principal series needs distinct characters");
    if (a > b) std::swap(a, b);
    return {Gl2Family::principal, a, b};
  }
  static Gl2Character cuspidal(std::int64_t q, std::int64_t n) {
    std::int64_t m = q * q - 1;
    n = floor_mod(n, m);
    if (n % (q + 1) == 0) throw std::invalid_argument("cuspidal parameter is not regular");
    return {Gl2Family::cuspidal, std::min(n, floor_mod(q * n, m)), 0};
  }

  std::int64_t degree(std::int64_t q) const {
    switch (family) {
      case Gl2Family::linear: return 1;
      case Gl2Family::steinberg: return q;
      case Gl2Family::principal: return q + 1;
      case Gl2Family::cuspidal: return q - 1;
    }
    return 0;
  }

  /// Exponent m of the central character alpha_m.
  std::int64_t central_exponent(std::int64_t q) const {
    switch (family) {
      case Gl2Family::linear:
      case Gl2Family::steinberg: return floor_mod(2 * a, q - 1);
      case Gl2Family::principal: return floor_mod(a + b, q - 1);
      case Gl2Family::cuspidal: return floor_mod(a, q - 1);  // phi restricted to gamma = theta^(q+1)
    }
    return 0;
  }

  /// phi trivial on eta = theta^(q-1); only meaningful for cuspidals,
  /// where it never holds.
  bool trivial_on_norm_one(std::int64_t q) const {
    return family == Gl2Family::cuspidal && floor_mod(a * (q - 1), q * q - 1) == 0;
  }

  std::string str() const {
    std::string s = gl2_family_name(family);
    s += "(" + std::to_string(a);
    if (family == Gl2Family::principal) s += "," + std::to_string(b);
    return s + ")";
  }
};

/// All q^2-1 irreducible characters, grouped by family.
inline std::vector<Gl2Character> gl2_irreducibles(std::int64_t q) {
  std::vector<Gl2Character> v;
  for (std::int64_t a = 0; a < q - 1; ++a) v.push_back(Gl2Character::linear(q, a));
  for (std::int64_t a = 0; a < q - 1; ++a) v.push_back(Gl2Character::steinberg(q, a));
  for (std::int64_t a = 0; a < q - 1; ++a)
    for (std::int64_t b = a + 1; b < q - 1; ++b) v.push_back(Gl2Character::principal(q, a, b));
  std::int64_t m = q * q - 1;
  for (std::int64_t n = 1; n < m; ++n) {
    if (n % (q + 1) == 0) continue;
    if (floor_mod(q * n, m) < n) continue;
    v.push_back(Gl2Character::cuspidal(q, n));
  }
  return v;
}

/// Conjugacy class of GL(2,F_q) by eigenvalue data.
///   central(e1):       gamma^e1 I
///   jordan(e1):        [[gamma^e1, 1], [0, gamma^e1]]
///   split(e1, e2):     diag(gamma^e1, gamma^e2), e1 != e2, unordered
///   elliptic(e1):      eigenvalues theta^e1, theta^(q e1) outside F_q
struct Gl2ClassDatum {
  enum class Kind : std::uint8_t { central, jordan, split, elliptic };
  Kind kind = Kind::central;
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;

  auto operator<=>(const Gl2ClassDatum&) const = default;

  static Gl2ClassDatum scalar(std::int64_t q, std::int64_t e) { return {Kind::central, floor_mod(e, q - 1), 0}; }
  static Gl2ClassDatum jordan(std::int64_t q, std::int64_t e) { return {Kind::jordan, floor_mod(e, q - 1), 0}; }
  /// diag(gamma^e1, gamma^e2); scalar when the exponents agree.
  static Gl2ClassDatum diag(std::int64_t q, std::int64_t e1, std::int64_t e2) {
    e1 = floor_mod(e1, q - 1);
    e2 = floor_mod(e2, q - 1);
    if (e1 == e2) return {Kind::central, e1, 0};
    if (e1 > e2) std::swap(e1, e2);
    return {Kind::split, e1, e2};
  }
  /// diag(theta^e, theta^(qe)); scalar when theta^e lies in F_q.
  static Gl2ClassDatum conjugate_pair(std::int64_t q, std::int64_t e) {
    std::int64_t m = q * q - 1;
    e = floor_mod(e, m);
    if (e % (q + 1) == 0) return scalar(q, e / (q + 1));
    return {Kind::elliptic, std::min(e, floor_mod(q * e, m)), 0};
  }
};

/// diag(g, -g) with g = gamma^(k + 1/2) = theta^((q+1)(2k+1)/2). Then
/// g^q = -g, so the pair is the conjugate pair of an element outside F_q.
inline Gl2ClassDatum gl2_half_power_datum(std::int64_t q, std::int64_t k) {
  std::int64_t e = (q + 1) * (2 * floor_mod(k, q - 1) + 1) / 2;
  return Gl2ClassDatum::conjugate_pair(q, e);
}

inline Complex gl2_char_value(std::int64_t q, const Gl2Character& pi, const Gl2ClassDatum& d) {
  using K = Gl2ClassDatum::Kind;
  const std::int64_t m1 = q - 1, m2 = q * q - 1;
  auto alpha = [&](std::int64_t m, std::int64_t t) { return unit_root(m * t, m1); };
  // det as a gamma exponent; N(theta^e) = gamma^e
  std::int64_t det = 0;
  switch (d.kind) {
    case K::central:
    case K::jordan: det = 2 * d.e1; break;
    case K::split: det = d.e1 + d.e2; break;
    case K::elliptic: det = d.e1; break;
  }
  const double qd = static_cast<double>(q);
  switch (pi.family) {
    case Gl2Family::linear: return alpha(pi.a, det);
    case Gl2Family::steinberg:
      switch (d.kind) {
        case K::central: return qd * alpha(pi.a, det);
        case K::jordan: return 0.0;
        case K::split: return alpha(pi.a, det);
        case K::elliptic: return -alpha(pi.a, det);
      }
      break;
    case Gl2Family::principal:
      switch (d.kind) {
        case K::central: return (qd + 1.0) * alpha(pi.a + pi.b, d.e1);
        case K::jordan: return alpha(pi.a + pi.b, d.e1);
        case K::split: return alpha(pi.a, d.e1) * alpha(pi.b, d.e2) + alpha(pi.a, d.e2) * alpha(pi.b, d.e1);
        case K::elliptic: return 0.0;
      }
      break;
    case Gl2Family::cuspidal:
      switch (d.kind) {
        case K::central: return (qd - 1.0) * alpha(pi.a, d.e1);
        case K::jordan: return -alpha(pi.a, d.e1);
        case K::split: return 0.0;
        case K::elliptic: return -(unit_root(pi.a * d.e1, m2) + unit_root(pi.a * q * d.e1, m2));
      }
      break;
  }
  return 0.0;
}

/// Class datum of a concrete invertible 2x2 matrix, from a table indexed
/// by (trace, det).
class Gl2Classifier {
 public:
  explicit Gl2Classifier(const FqArith& A) : A_(&A) {
    const Field& f = A.field();
    const std::int64_t q = f.q(), m = q * q - 1;
    elliptic_.assign(static_cast<std::size_t>(q * q), -1);
    for (std::int64_t e = 1; e < m; ++e) {
      if (e % (q + 1) == 0) continue;
      FieldElement x = f.element(Level::quadratic, e);
      auto tr = f.restrict_to(f.add(x, f.frobenius(x)), Level::base);
      if (!tr) throw std::logic_error("trace left F_q");
      Code t = A.code(*tr), n = A.code(f.norm(x));
      std::int64_t& slot = elliptic_[static_cast<std::size_t>(t * q + n)];
      if (slot < 0) slot = std::min(e, floor_mod(q * e, m));
    }
  }

  Gl2ClassDatum operator()(const Mat2& g) const {
    const FqArith& A = *A_;
    const std::int64_t q = A.q();
    Code t = A.add(g(0, 0), g(1, 1));
    Code n = A.sub(A.mul(g(0, 0), g(1, 1)), A.mul(g(0, 1), g(1, 0)));
    if (n == 0) throw std::invalid_argument("singular matrix");
    Code two = A.from_int(2), four = A.from_int(4);
    Code disc = A.sub(A.mul(t, t), A.mul(four, n));
    if (disc == 0) {
      Code ev = A.div(t, two);
      bool scalar = g(0, 1) == 0 && g(1, 0) == 0;
      return scalar ? Gl2ClassDatum::scalar(q, A.log(ev)) : Gl2ClassDatum::jordan(q, A.log(ev));
    }
    if (A.is_square(disc)) {
      Code r = sqrt_code(disc);
      Code x = A.div(A.add(t, r), two), y = A.div(A.sub(t, r), two);
      return Gl2ClassDatum::diag(q, A.log(x), A.log(y));
    }
    std::int64_t e = elliptic_[static_cast<std::size_t>(t * q + n)];
    if (e < 0) throw std::logic_error("missing elliptic class");
    return {Gl2ClassDatum::Kind::elliptic, e, 0};
  }

 private:
  Code sqrt_code(Code a) const {
    for (int c = 1; c < A_->q(); ++c)
      if (A_->mul(static_cast<Code>(c), static_cast<Code>(c)) == a) return static_cast<Code>(c);
    throw std::logic_error("not a square");
  }

  const FqArith* A_;
  std::vector<std::int64_t> elliptic_;
};

}  // namespace gsp4

#endif  // GSP4_GL2_HPP_
