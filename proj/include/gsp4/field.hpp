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

#ifndef GSP4_FIELD_HPP_
#define GSP4_FIELD_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <compare>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsp4 {

using Complex = std::complex<double>;

/// Largest supported q^4 for the log/antilog tables.
inline constexpr std::int64_t kMaxQuarticOrder = std::int64_t{1} << 22;

/// Subfield tag: F_q, F_{q^2} or F_{q^4}.
enum class Level : std::uint8_t { base = 1, quadratic = 2, quartic = 4 };

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// An element of one level of the tower, stored as its discrete log with
/// respect to that level's generator. log == -1 encodes zero.
struct FieldElement {
  Level level = Level::base;
  std::int64_t log = -1;

  bool is_zero() const { return log < 0; }
  auto operator<=>(const FieldElement&) const = default;
};

/// exp(2 pi i num / den), with the exact values at quarter turns.
inline Complex unit_root(std::int64_t num, std::int64_t den) {
  std::int64_t r = floor_mod(num, den);
  if (r == 0) return {1.0, 0.0};
  if (2 * r == den) return {-1.0, 0.0};
  if (4 * r == den) return {0.0, 1.0};
  if (4 * r == 3 * den) return {0.0, -1.0};
  double t = 2.0 * std::numbers::pi * static_cast<double>(r) /
             static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Finite field tower F_q < F_{q^2} < F_{q^4} for q = p^n, p odd.
///
/// F_{q^4} is F_p[x]/(f) with f the least monic primitive polynomial of
/// degree 4n, where polynomials are ordered by the integer
/// sum c_i p^i of their lower coefficients. kappa = x. The other named
/// generators are powers of kappa:
///   theta = kappa^(q^2+1), zeta = kappa^(q^2-1), eta = theta^(q-1),
///   gamma = theta^(q+1).
class Field {
 public:
  static Field make(int p, int n = 1) {
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1) throw std::invalid_argument("extension degree must be positive");
    Field f;
    f.p_ = p;
    f.n_ = n;
    f.q_ = 1;
    for (int i = 0; i < n; ++i) f.q_ *= p;
    std::int64_t q4 = f.q_ * f.q_ * f.q_ * f.q_;
    if (q4 > kMaxQuarticOrder)
      throw std::invalid_argument("q too large for the field tables");
    f.q4_ = q4;
    f.build_tables();
    return f;
  }

  int p() const { return p_; }
  int n() const { return n_; }
  std::int64_t q() const { return q_; }

  /// Size of the multiplicative group of the given level.
  std::int64_t unit_order(Level l) const {
    switch (l) {
      case Level::base: return q_ - 1;
      case Level::quadratic: return q_ * q_ - 1;
      case Level::quartic: return q4_ - 1;
    }
    return 0;
  }

  /// Exponent e with generator(l) = kappa^e.
  std::int64_t index(Level l) const { return (q4_ - 1) / unit_order(l); }

  /// Coefficients c_0..c_{4n-1} of the defining polynomial (monic, degree 4n).
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero(Level l) const { return {l, -1}; }
  FieldElement one(Level l) const { return {l, 0}; }
  FieldElement element(Level l, std::int64_t e) const {
    return {l, floor_mod(e, unit_order(l))};
  }

  FieldElement kappa() const { return {Level::quartic, 1}; }
  FieldElement zeta() const { return element(Level::quartic, q_ * q_ - 1); }
  FieldElement theta() const { return {Level::quadratic, 1}; }
  FieldElement eta() const { return element(Level::quadratic, q_ - 1); }
  FieldElement gamma() const { return {Level::base, 1}; }

  /// Discrete log relative to kappa, or -1 for zero.
  std::int64_t kappa_log(FieldElement x) const {
    return x.is_zero() ? -1 : x.log * index(x.level);
  }

  FieldElement embed(FieldElement x, Level to) const {
    if (static_cast<int>(to) < static_cast<int>(x.level))
      throw std::invalid_argument("embed: target level below source level");
    if (x.is_zero()) return zero(to);
    return {to, x.log * index(x.level) / index(to)};
  }

  /// Descends x into level `to` when it lies there.
  std::optional<FieldElement> restrict_to(FieldElement x, Level to) const {
    if (x.is_zero()) return zero(to);
    std::int64_t k = kappa_log(x);
    if (k % index(to) != 0) return std::nullopt;
    return FieldElement{to, k / index(to)};
  }

  FieldElement mul(FieldElement a, FieldElement b) const {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return zero(a.level);
    return element(a.level, a.log + b.log);
  }
  FieldElement inv(FieldElement a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return element(a.level, -a.log);
  }
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::int64_t e) const {
    if (a.is_zero()) {
      if (e <= 0) throw std::domain_error("non-positive power of zero");
      return a;
    }
    std::int64_t m = unit_order(a.level);
    std::int64_t r = floor_mod(e, m);
    return element(a.level, static_cast<std::int64_t>(
                                (static_cast<__int128>(a.log) * r) % m));
  }
  FieldElement add(FieldElement a, FieldElement b) const {
    check_same(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // kappa^x + kappa^y = kappa^x (1 + kappa^(y-x)).
    std::int64_t x = kappa_log(a), y = kappa_log(b);
    std::int64_t z = zech_[static_cast<std::size_t>(floor_mod(y - x, q4_ - 1))];
    if (z < 0) return zero(a.level);
    std::int64_t k = floor_mod(x + z, q4_ - 1);
    return {a.level, k / index(a.level)};
  }
  FieldElement neg(FieldElement a) const {
    if (a.is_zero()) return a;
    // -1 = kappa^((q^4-1)/2) and lies in every level.
    return element(a.level, a.log + unit_order(a.level) / 2);
  }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement frobenius(FieldElement a) const {
    if (a.is_zero()) return a;
    return element(a.level, a.log * q_);
  }

  /// Polynomial encoding sum c_i p^i of the element inside F_{q^4}.
  std::int64_t encoding(FieldElement x) const {
    if (x.is_zero()) return 0;
    return exp_[static_cast<std::size_t>(kappa_log(x))];
  }
  FieldElement from_encoding(std::int64_t enc, Level l) const {
    if (enc == 0) return zero(l);
    std::int64_t k = log_[static_cast<std::size_t>(enc)];
    if (k % index(l) != 0)
      throw std::invalid_argument("encoding does not lie in the requested level");
    return {l, k / index(l)};
  }

  /// Prime-field element n * 1 of the given level.
  FieldElement from_int(std::int64_t v, Level l) const {
    return from_encoding(floor_mod(v, p_), l);
  }

  /// Absolute trace of an element of F_q, as an integer in [0, p).
  int trace_to_prime(FieldElement x) const {
    if (x.level != Level::base)
      throw std::invalid_argument("trace_to_prime expects an F_q element");
    std::int64_t acc = 0;
    FieldElement y = x;
    for (int j = 0; j < n_; ++j) {
      acc = add_enc(acc, encoding(y));
      if (!y.is_zero()) y = element(y.level, y.log * p_);
    }
    if (acc >= p_) throw std::logic_error("trace left the prime field");
    return static_cast<int>(acc);
  }

  /// Norm from F_{q^2} to F_q.
  FieldElement norm(FieldElement x) const {
    if (x.level != Level::quadratic)
      throw std::invalid_argument("norm expects an F_{q^2} element");
    if (x.is_zero()) return zero(Level::base);
    return element(Level::base, x.log);
  }

  bool is_square(FieldElement x) const {
    return x.is_zero() || x.log % 2 == 0;
  }

 private:
  Field() = default;

  static void check_same(FieldElement a, FieldElement b) {
    if (a.level != b.level)
      throw std::invalid_argument("incompatible field tags");
  }

  std::int64_t add_enc(std::int64_t a, std::int64_t b) const {
    std::int64_t r = 0, place = 1;
    while (a > 0 || b > 0) {
      r += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return r;
  }

  // True when x has order p^(4n)-1 modulo the candidate polynomial.
  bool is_primitive(const std::vector<int>& c) const {
    const int d = static_cast<int>(c.size());
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    v[0] = 1;
    for (std::int64_t step = 1; step < q4_; ++step) {
      int top = v[static_cast<std::size_t>(d - 1)];
      for (int i = d - 1; i > 0; --i) v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i - 1)];
      v[0] = 0;
      for (int i = 0; i < d; ++i)
        v[static_cast<std::size_t>(i)] = static_cast<int>(floor_mod(
            v[static_cast<std::size_t>(i)] - static_cast<std::int64_t>(top) * c[static_cast<std::size_t>(i)], p_));
      bool is_one = v[0] == 1;
      for (int i = 1; i < d && is_one; ++i) is_one = v[static_cast<std::size_t>(i)] == 0;
      if (is_one) return step == q4_ - 1;
      bool is_zero = true;
      for (int i = 0; i < d && is_zero; ++i) is_zero = v[static_cast<std::size_t>(i)] == 0;
      if (is_zero) return false;
    }
    return false;
  }

  void build_tables() {
    const int d = 4 * n_;
    std::vector<int> c(static_cast<std::size_t>(d), 0);
    bool found = false;
    for (std::int64_t code = 1; code < q4_ && !found; ++code) {
      std::int64_t t = code;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(t % p_);
        t /= p_;
      }
      if (c[0] == 0) continue;
      found = is_primitive(c);
    }
    if (!found) throw std::logic_error("no primitive polynomial found");
    modulus_ = c;

    exp_.assign(static_cast<std::size_t>(q4_ - 1), 0);
    log_.assign(static_cast<std::size_t>(q4_), -1);
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    v[0] = 1;
    for (std::int64_t e = 0; e < q4_ - 1; ++e) {
      std::int64_t enc = 0, place = 1;
      for (int i = 0; i < d; ++i) {
        enc += v[static_cast<std::size_t>(i)] * place;
        place *= p_;
      }
      exp_[static_cast<std::size_t>(e)] = enc;
      log_[static_cast<std::size_t>(enc)] = e;
      int top = v[static_cast<std::size_t>(d - 1)];
      for (int i = d - 1; i > 0; --i) v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i - 1)];
      v[0] = 0;
      for (int i = 0; i < d; ++i)
        v[static_cast<std::size_t>(i)] = static_cast<int>(floor_mod(
            v[static_cast<std::size_t>(i)] - static_cast<std::int64_t>(top) * c[static_cast<std::size_t>(i)], p_));
    }
    zech_.assign(static_cast<std::size_t>(q4_ - 1), -1);
    for (std::int64_t e = 0; e < q4_ - 1; ++e)
      zech_[static_cast<std::size_t>(e)] = log_[static_cast<std::size_t>(add_enc(1, exp_[static_cast<std::size_t>(e)]))];
  }

  int p_ = 0;
  int n_ = 0;
  std::int64_t q_ = 0;
  std::int64_t q4_ = 0;
  std::vector<int> modulus_;
  std::vector<std::int64_t> exp_;
  std::vector<std::int64_t> log_;
  std::vector<std::int64_t> zech_;  // log(1 + kappa^e), -1 when zero
};

/// Multiplicative character of F_q^x (modulus q-1) or F_{q^2}^x
/// (modulus q^2-1): generator^k -> exp(2 pi i m k / modulus).
struct MultiplicativeCharacter {
  Level level = Level::base;
  std::int64_t exponent = 0;

  /// Value at x, which may lie in a smaller level than the character.
  Complex operator()(const Field& f, FieldElement x) const {
    if (x.is_zero()) throw std::domain_error("character evaluated at zero");
    auto y = f.restrict_to(f.embed(x, Level::quartic), level);
    if (!y) throw std::invalid_argument("element outside the character's field");
    return unit_root(exponent * y->log, f.unit_order(level));
  }
  /// Value at generator^k of its own level.
  Complex at(const Field& f, std::int64_t k) const {
    return unit_root(exponent * k, f.unit_order(level));
  }
  bool is_trivial(const Field& f) const {
    return floor_mod(exponent, f.unit_order(level)) == 0;
  }
};

/// psi_a(x) = exp(2 pi i Tr(a x) / p) on F_q.
struct AdditiveCharacter {
  FieldElement twist;

  Complex operator()(const Field& f, FieldElement x) const {
    return unit_root(f.trace_to_prime(f.mul(twist, x)), f.p());
  }
};

/// T1 = {1..(q-3)/2}.
inline std::vector<std::int64_t> index_t1(std::int64_t q) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = 1; i <= (q - 3) / 2; ++i) v.push_back(i);
  return v;
}
/// T2 = {1..(q-1)/2}.
inline std::vector<std::int64_t> index_t2(std::int64_t q) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = 1; i <= (q - 1) / 2; ++i) v.push_back(i);
  return v;
}
/// T3 = {1..q-1}.
inline std::vector<std::int64_t> index_t3(std::int64_t q) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = 1; i <= q - 1; ++i) v.push_back(i);
  return v;
}
/// R1 = {1..(q^2-1)/4}.
inline std::vector<std::int64_t> index_r1(std::int64_t q) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = 1; i <= (q * q - 1) / 4; ++i) v.push_back(i);
  return v;
}

/// True when theta^i, theta^-i, theta^qi, theta^-qi are pairwise distinct.
inline bool r2_admissible(std::int64_t q, std::int64_t i) {
  std::int64_t m = q * q - 1;
  std::int64_t a = floor_mod(i, m), b = floor_mod(-i, m), c = floor_mod(q * i, m),
               d = floor_mod(-q * i, m);
  return a != b && a != c && a != d && b != c && b != d && c != d;
}

/// Greedy orbit representatives for theta^i -> theta^{+-i}, theta^{+-qi}:
/// (q-1)^2/4 admissible positive integers, least first.
inline std::vector<std::int64_t> index_r2(std::int64_t q) {
  std::int64_t m = q * q - 1;
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::vector<std::int64_t> v;
  for (std::int64_t i = 1; i < m; ++i) {
    if (!r2_admissible(q, i) || used[static_cast<std::size_t>(i)]) continue;
    v.push_back(i);
    for (std::int64_t t : {i, -i, q * i, -q * i}) used[static_cast<std::size_t>(floor_mod(t, m))] = 1;
  }
  return v;
}

}  // namespace gsp4

#endif  // GSP4_FIELD_HPP_
