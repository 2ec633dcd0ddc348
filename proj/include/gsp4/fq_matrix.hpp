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

#ifndef GSP4_FQ_MATRIX_HPP_
#define GSP4_FQ_MATRIX_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/field.hpp"

namespace gsp4 {

using Code = std::uint8_t;

/// Table arithmetic on F_q "codes". The code of x is its rank among the
/// polynomial encodings of F_q inside F_{q^4}; for prime q it is the
/// residue in [0, q).
class FqArith {
 public:
  static constexpr int kMaxQ = 16;

  explicit FqArith(const Field& f) : field_(&f), q_(static_cast<int>(f.q())) {
    if (q_ > kMaxQ) throw std::invalid_argument("q too large for F_q code tables");
    prime_ = f.n() == 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> enc;  // (encoding, gamma log)
    enc.push_back({0, -1});
    for (std::int64_t e = 0; e < q_ - 1; ++e) enc.push_back({f.encoding(f.element(Level::base, e)), e});
    std::sort(enc.begin(), enc.end());
    for (int c = 0; c < q_; ++c) {
      log_[static_cast<std::size_t>(c)] = enc[static_cast<std::size_t>(c)].second;
      encoding_[static_cast<std::size_t>(c)] = enc[static_cast<std::size_t>(c)].first;
      if (c > 0) exp_[static_cast<std::size_t>(enc[static_cast<std::size_t>(c)].second)] = static_cast<Code>(c);
    }
    for (int a = 0; a < q_; ++a) {
      for (int b = 0; b < q_; ++b) {
        FieldElement x = element(static_cast<Code>(a)), y = element(static_cast<Code>(b));
        add_[slot(a, b)] = code(f.add(x, y));
        mul_[slot(a, b)] = code(f.mul(x, y));
      }
      neg_[static_cast<std::size_t>(a)] = code(f.neg(element(static_cast<Code>(a))));
      inv_[static_cast<std::size_t>(a)] = a == 0 ? 0 : code(f.inv(element(static_cast<Code>(a))));
    }
    bits_ = std::bit_width(static_cast<unsigned>(q_ - 1));
  }

  const Field& field() const { return *field_; }
  int q() const { return q_; }
  int bits() const { return bits_; }
  /// True when codes are residues mod p and integer arithmetic applies.
  bool prime() const { return prime_; }

  Code add(Code a, Code b) const { return add_[slot(a, b)]; }
  Code sub(Code a, Code b) const { return add_[slot(a, neg_[b])]; }
  Code mul(Code a, Code b) const { return mul_[slot(a, b)]; }
  Code neg(Code a) const { return neg_[a]; }
  Code inv(Code a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
  }
  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  static Code zero() { return 0; }
  static Code one() { return 1; }
  Code minus_one() const { return neg_[1]; }
  /// gamma^e.
  Code gamma_pow(std::int64_t e) const { return exp_[static_cast<std::size_t>(floor_mod(e, q_ - 1))]; }
  /// Discrete log base gamma of a nonzero code.
  std::int64_t log(Code a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
  }
  bool is_square(Code a) const { return a == 0 || log_[a] % 2 == 0; }

  FieldElement element(Code a) const { return FieldElement{Level::base, log_[a]}; }
  Code code(FieldElement x) const {
    if (x.level != Level::base) throw std::invalid_argument("not an F_q element");
    return x.is_zero() ? Code{0} : exp_[static_cast<std::size_t>(x.log)];
  }
  /// n * 1.
  Code from_int(std::int64_t v) const { return code(field_->from_int(v, Level::base)); }
  /// Polynomial encoding inside F_{q^4}; for prime q this is the residue.
  std::int64_t encoding(Code a) const { return encoding_[a]; }

 private:
  static std::size_t slot(int a, int b) { return static_cast<std::size_t>(a * kMaxQ + b); }

  const Field* field_;
  int q_;
  int bits_ = 0;
  bool prime_ = false;
  std::array<Code, kMaxQ * kMaxQ> add_{};
  std::array<Code, kMaxQ * kMaxQ> mul_{};
  std::array<Code, kMaxQ> neg_{};
  std::array<Code, kMaxQ> inv_{};
  std::array<std::int64_t, kMaxQ> log_{};
  std::array<std::int64_t, kMaxQ> encoding_{};
  std::array<Code, kMaxQ> exp_{};
};

/// N x N matrix of F_q codes, row-major.
template <std::size_t N>
struct Matrix {
  std::array<Code, N * N> a{};

  Code& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
  Code operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }
  auto operator<=>(const Matrix&) const = default;

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix scalar(Code c) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = c;
    return m;
  }
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

template <std::size_t N>
Matrix<N> mul(const FqArith& F, const Matrix<N>& x, const Matrix<N>& y) {
  Matrix<N> r;
  if (F.prime()) {
    const unsigned p = static_cast<unsigned>(F.q());
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        unsigned s = 0;
        for (std::size_t k = 0; k < N; ++k) s += unsigned{x(i, k)} * unsigned{y(k, j)};
        r(i, j) = static_cast<Code>(s % p);
      }
    return r;
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Code s = 0;
      for (std::size_t k = 0; k < N; ++k) s = F.add(s, F.mul(x(i, k), y(k, j)));
      r(i, j) = s;
    }
  return r;
}

template <std::size_t N>
Matrix<N> add(const FqArith& F, const Matrix<N>& x, const Matrix<N>& y) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = F.add(x.a[i], y.a[i]);
  return r;
}

template <std::size_t N>
Matrix<N> sub(const FqArith& F, const Matrix<N>& x, const Matrix<N>& y) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = F.sub(x.a[i], y.a[i]);
  return r;
}

template <std::size_t N>
Matrix<N> scale(const FqArith& F, Code c, const Matrix<N>& x) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = F.mul(c, x.a[i]);
  return r;
}

template <std::size_t N>
Matrix<N> transpose(const Matrix<N>& x) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = x(j, i);
  return r;
}

template <std::size_t N>
Matrix<N> power(const FqArith& F, Matrix<N> x, std::uint64_t e) {
  Matrix<N> r = Matrix<N>::identity();
  while (e > 0) {
    if (e & 1U) r = mul(F, r, x);
    x = mul(F, x, x);
    e >>= 1U;
  }
  return r;
}

/// Rank by Gaussian elimination over F_q.
template <std::size_t N>
int rank(const FqArith& F, Matrix<N> m) {
  int r = 0;
  for (std::size_t c = 0; c < N && r < static_cast<int>(N); ++c) {
    std::size_t piv = N;
    for (std::size_t i = static_cast<std::size_t>(r); i < N; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == N) continue;
    for (std::size_t j = 0; j < N; ++j) std::swap(m(piv, j), m(static_cast<std::size_t>(r), j));
    Code inv = F.inv(m(static_cast<std::size_t>(r), c));
    for (std::size_t i = 0; i < N; ++i) {
      if (i == static_cast<std::size_t>(r) || m(i, c) == 0) continue;
      Code f = F.mul(m(i, c), inv);
      for (std::size_t j = 0; j < N; ++j)
        m(i, j) = F.sub(m(i, j), F.mul(f, m(static_cast<std::size_t>(r), j)));
    }
    ++r;
  }
  return r;
}

template <std::size_t N>
Code determinant(const FqArith& F, Matrix<N> m) {
  Code det = 1;
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = N;
    for (std::size_t i = c; i < N; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == N) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < N; ++j) std::swap(m(piv, j), m(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(c, c));
    Code inv = F.inv(m(c, c));
    for (std::size_t i = c + 1; i < N; ++i) {
      if (m(i, c) == 0) continue;
      Code f = F.mul(m(i, c), inv);
      for (std::size_t j = c; j < N; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
    }
  }
  return det;
}

/// General inverse by Gauss-Jordan; throws on singular input.
template <std::size_t N>
Matrix<N> inverse(const FqArith& F, Matrix<N> m) {
  Matrix<N> r = Matrix<N>::identity();
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = N;
    for (std::size_t i = c; i < N; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == N) throw std::domain_error("singular matrix");
    for (std::size_t j = 0; j < N; ++j) {
      std::swap(m(piv, j), m(c, j));
      std::swap(r(piv, j), r(c, j));
    }
    Code inv = F.inv(m(c, c));
    for (std::size_t j = 0; j < N; ++j) {
      m(c, j) = F.mul(m(c, j), inv);
      r(c, j) = F.mul(r(c, j), inv);
    }
    for (std::size_t i = 0; i < N; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Code f = m(i, c);
      for (std::size_t j = 0; j < N; ++j) {
        m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
        r(i, j) = F.sub(r(i, j), F.mul(f, r(c, j)));
      }
    }
  }
  return r;
}

/// Characteristic polynomial coefficients c_0..c_{N-1} of det(xI - m)
/// (monic, leading coefficient omitted), via sums of principal minors.
template <std::size_t N>
std::array<Code, N> charpoly(const FqArith& F, const Matrix<N>& m) {
  std::array<Code, N> c{};
  // e_k = sum of k x k principal minors; c_{N-k} = (-1)^k e_k.
  for (unsigned mask = 1; mask < (1U << N); ++mask) {
    std::size_t k = static_cast<std::size_t>(std::popcount(mask));
    Matrix<N> s = Matrix<N>::identity();
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if ((mask & (1U << i)) && (mask & (1U << j))) s(i, j) = m(i, j);
    Code minor = determinant(F, s);
    c[N - k] = F.add(c[N - k], k % 2 == 0 ? minor : F.neg(minor));
  }
  return c;
}

/// Nonzero entries of a matrix, for cheap products with sparse factors
/// such as root elements.
template <std::size_t N>
struct SparseMatrix {
  struct Entry {
    std::uint8_t r, c;
    Code v;
  };
  std::vector<Entry> nz;

  explicit SparseMatrix(const Matrix<N>& m) {
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        if (m(r, c) != 0) nz.push_back({static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(c), m(r, c)});
  }
};

/// s * x * t.
template <std::size_t N>
Matrix<N> mul_sparse(const FqArith& F, const SparseMatrix<N>& s, const Matrix<N>& x, const SparseMatrix<N>& t) {
  Matrix<N> y, z;
  if (F.prime()) {
    const int p = F.q();
    std::array<int, N * N> acc{};
    for (const auto& e : s.nz)
      for (std::size_t j = 0; j < N; ++j) acc[e.r * N + j] += e.v * x(e.c, j);
    for (std::size_t i = 0; i < N * N; ++i) y.a[i] = static_cast<Code>(acc[i] % p);
    acc.fill(0);
    for (const auto& e : t.nz)
      for (std::size_t i = 0; i < N; ++i) acc[i * N + e.c] += y(i, e.r) * e.v;
    for (std::size_t i = 0; i < N * N; ++i) z.a[i] = static_cast<Code>(acc[i] % p);
    return z;
  }
  for (const auto& e : s.nz)
    for (std::size_t j = 0; j < N; ++j) y(e.r, j) = F.add(y(e.r, j), F.mul(e.v, x(e.c, j)));
  for (const auto& e : t.nz)
    for (std::size_t i = 0; i < N; ++i) z(i, e.c) = F.add(z(i, e.c), F.mul(y(i, e.r), e.v));
  return z;
}

/// Packs the codes into an integer key, first entry most significant, so
/// numeric key order is lexicographic row-major code order.
template <std::size_t N>
std::uint64_t pack(const Matrix<N>& m, int bits) {
  static_assert(N * N * 4 <= 64, "matrix too large to pack");
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < N * N; ++i) k = (k << bits) | m.a[i];
  return k;
}

template <std::size_t N>
Matrix<N> unpack(std::uint64_t k, int bits) {
  Matrix<N> m;
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  for (std::size_t i = N * N; i-- > 0;) {
    m.a[i] = static_cast<Code>(k & mask);
    k >>= bits;
  }
  return m;
}

}  // namespace gsp4

#endif  // GSP4_FQ_MATRIX_HPP_
