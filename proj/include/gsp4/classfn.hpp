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

#ifndef GSP4_CLASSFN_HPP_
#define GSP4_CLASSFN_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "gsp4/field.hpp"
#include "gsp4/finite_group.hpp"

namespace gsp4 {

inline constexpr double kTolerance = 1e-6;

using LongComplex = std::complex<long double>;

/// Pairwise sum; the result does not depend on how the input was produced.
inline LongComplex pairwise_sum(std::span<const LongComplex> v) {
  if (v.empty()) return {};
  if (v.size() <= 8) {
    LongComplex s = 0;
    for (const auto& x : v) s += x;
    return s;
  }
  std::size_t h = v.size() / 2;
  return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

/// A complex value per class of a fixed partition.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(const ConjugacyPartition& p, std::vector<Complex> values)
      : partition_(&p), values_(std::move(values)) {
    if (values_.size() != p.num_classes()) throw std::invalid_argument("class function has wrong length");
  }
  static ClassFunction zero(const ConjugacyPartition& p) {
    return ClassFunction(p, std::vector<Complex>(p.num_classes()));
  }
  static ClassFunction constant(const ConjugacyPartition& p, Complex c) {
    return ClassFunction(p, std::vector<Complex>(p.num_classes(), c));
  }

  const ConjugacyPartition& partition() const { return *partition_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }
  Complex operator[](std::size_t c) const { return values_[c]; }
  Complex& operator[](std::size_t c) { return values_[c]; }

  ClassFunction& operator+=(const ClassFunction& o) {
    check(o);
    for (std::size_t c = 0; c < size(); ++c) values_[c] += o.values_[c];
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& o) {
    check(o);
    for (std::size_t c = 0; c < size(); ++c) values_[c] -= o.values_[c];
    return *this;
  }
  ClassFunction& operator*=(Complex s) {
    for (auto& v : values_) v *= s;
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(Complex s, ClassFunction a) { return a *= s; }

  /// Pointwise product.
  ClassFunction operator*(const ClassFunction& o) const {
    check(o);
    ClassFunction r = *this;
    for (std::size_t c = 0; c < size(); ++c) r.values_[c] *= o.values_[c];
    return r;
  }
  ClassFunction conj() const {
    ClassFunction r = *this;
    for (auto& v : r.values_) v = std::conj(v);
    return r;
  }

  bool approx_equal(const ClassFunction& o, double tol = kTolerance) const {
    check(o);
    for (std::size_t c = 0; c < size(); ++c)
      if (std::abs(values_[c] - o.values_[c]) > tol) return false;
    return true;
  }
  double max_abs_diff(const ClassFunction& o) const {
    check(o);
    double m = 0;
    for (std::size_t c = 0; c < size(); ++c) m = std::max(m, std::abs(values_[c] - o.values_[c]));
    return m;
  }

  void check(const ClassFunction& o) const {
    if (partition_ != o.partition_) throw std::invalid_argument("class functions on different partitions");
  }

 private:
  const ConjugacyPartition* partition_ = nullptr;
  std::vector<Complex> values_;
};

/// (f, g) = (1/|G|) sum_classes |C| f(C) conj(g(C)).
inline Complex inner_product(const ClassFunction& f, const ClassFunction& g) {
  f.check(g);
  const ConjugacyPartition& P = f.partition();
  std::vector<LongComplex> terms(f.size());
  for (std::size_t c = 0; c < f.size(); ++c) {
    LongComplex a(f[c].real(), f[c].imag()), b(g[c].real(), g[c].imag());
    terms[c] = static_cast<long double>(P.size[c]) * a * std::conj(b);
  }
  LongComplex s = pairwise_sum(terms) / static_cast<long double>(P.group_order);
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

/// Nearest integer to a complex number that should be one.
inline std::int64_t as_integer(Complex z, double tol = kTolerance) {
  double r = std::round(z.real());
  if (std::abs(z - Complex(r, 0.0)) > tol) throw std::domain_error("value is not an integer");
  return static_cast<std::int64_t>(r);
}

/// Character of a subgroup H: membership test, value on members, |H|.
template <std::size_t N>
struct SubgroupCharacter {
  std::function<bool(const Matrix<N>&)> contains;
  std::function<Complex(const Matrix<N>&)> eval;
  std::uint64_t subgroup_order = 0;
};

namespace detail {

inline unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Runs body(begin, end, slot) on fixed chunks of [0, n); chunk results are
/// stored per chunk so the reduction order is fixed.
template <class Body>
void for_chunks(std::size_t n, std::size_t chunks, Body body) {
  unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(chunks));
  auto run = [&](unsigned w) {
    for (std::size_t ch = w; ch < chunks; ch += workers) {
      std::size_t b = n * ch / chunks, e = n * (ch + 1) / chunks;
      body(b, e, ch);
    }
  };
  if (workers <= 1) {
    run(0);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  for (auto& t : pool) t.join();
}

}  // namespace detail

/// Frobenius induction by the defining sum
///   Ind f(g) = (1/|H|) sum_{x in G, x^-1 g x in H} f(x^-1 g x),
/// for several subgroup characters of the same subgroup at once.
/// `limit` bounds |G| * #classes.
template <std::size_t N>
std::vector<ClassFunction> induce_frobenius(const EnumeratedGroup<N>& E, const ConjugacyPartition& P,
                                            const std::function<bool(const Matrix<N>&)>& contains,
                                            std::span<const std::function<Complex(const Matrix<N>&)>> evals,
                                            std::uint64_t subgroup_order,
                                            std::uint64_t limit = 6'000'000'000ULL) {
  const std::size_t nc = P.num_classes(), ne = evals.size();
  if (static_cast<long double>(E.size()) * static_cast<long double>(nc) > static_cast<long double>(limit))
    throw ResourceGuardError("Frobenius sum exceeds the work limit");
  const FqArith& F = E.arith();
  std::vector<Matrix<N>> reps(nc);
  for (std::size_t c = 0; c < nc; ++c) reps[c] = E.element(P.representative[c]);
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(E.size() / 512, 4096));
  std::vector<LongComplex> acc(chunks * nc * ne);
  detail::for_chunks(E.size(), chunks, [&](std::size_t b, std::size_t e, std::size_t ch) {
    LongComplex* out = acc.data() + ch * nc * ne;
    for (std::size_t i = b; i < e; ++i) {
      Matrix<N> x = E.element(i);
      Matrix<N> xi = inverse(F, x);
      for (std::size_t c = 0; c < nc; ++c) {
        Matrix<N> h = mul(F, mul(F, xi, reps[c]), x);
        if (!contains(h)) continue;
        for (std::size_t t = 0; t < ne; ++t) {
          Complex v = evals[t](h);
          out[c * ne + t] += LongComplex(v.real(), v.imag());
        }
      }
    }
  });
  std::vector<ClassFunction> result;
  std::vector<LongComplex> col(chunks);
  for (std::size_t t = 0; t < ne; ++t) {
    std::vector<Complex> vals(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      for (std::size_t ch = 0; ch < chunks; ++ch) col[ch] = acc[(ch * nc + c) * ne + t];
      LongComplex s = pairwise_sum(col) / static_cast<long double>(subgroup_order);
      vals[c] = {static_cast<double>(s.real()), static_cast<double>(s.imag())};
    }
    result.emplace_back(P, std::move(vals));
  }
  return result;
}

template <std::size_t N>
ClassFunction induce(const SubgroupCharacter<N>& chi, const EnumeratedGroup<N>& E, const ConjugacyPartition& P) {
  std::vector<std::function<Complex(const Matrix<N>&)>> ev{chi.eval};
  return induce_frobenius<N>(E, P, chi.contains, ev, chi.subgroup_order).front();
}

/// Induction from an explicit element list of H, using
///   Ind f(g) = |C_G(g)| / |H| * sum_{h in H cap class(g)} f(h).
/// Equal to the Frobenius sum; the cost is |H| lookups instead of |G| * #classes.
template <std::size_t N>
std::vector<ClassFunction> induce_by_intersection(const EnumeratedGroup<N>& E, const ConjugacyPartition& P,
                                                  std::span<const Matrix<N>> subgroup,
                                                  std::span<const std::function<Complex(const Matrix<N>&)>> evals) {
  const std::size_t nc = P.num_classes(), ne = evals.size();
  std::vector<std::vector<LongComplex>> acc(nc * ne);
  std::vector<std::size_t> cls(subgroup.size());
  for (std::size_t i = 0; i < subgroup.size(); ++i) cls[i] = P.class_of[E.index_of(subgroup[i])];
  for (std::size_t t = 0; t < ne; ++t) {
    for (std::size_t i = 0; i < subgroup.size(); ++i) {
      Complex v = evals[t](subgroup[i]);
      acc[cls[i] * ne + t].emplace_back(v.real(), v.imag());
    }
  }
  std::vector<ClassFunction> result;
  for (std::size_t t = 0; t < ne; ++t) {
    std::vector<Complex> vals(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      LongComplex s = pairwise_sum(acc[c * ne + t]) * static_cast<long double>(P.centralizer_order(c)) /
                      static_cast<long double>(subgroup.size());
      vals[c] = {static_cast<double>(s.real()), static_cast<double>(s.imag())};
    }
    result.emplace_back(P, std::move(vals));
  }
  return result;
}

struct Constituent {
  std::size_t index = 0;
  std::int64_t multiplicity = 0;
};

/// Multiplicities of f against a complete list of irreducible characters.
/// Throws std::domain_error when a multiplicity is not a non-negative integer.
inline std::vector<Constituent> decompose(const ClassFunction& f, std::span<const ClassFunction> irreducibles) {
  if (irreducibles.size() != f.size()) throw std::invalid_argument("irreducible table is incomplete");
  std::vector<Constituent> out;
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    std::int64_t m = as_integer(inner_product(f, irreducibles[i]));
    if (m < 0) throw std::domain_error("negative multiplicity");
    if (m > 0) out.push_back({i, m});
  }
  return out;
}

}  // namespace gsp4

#endif  // GSP4_CLASSFN_HPP_
