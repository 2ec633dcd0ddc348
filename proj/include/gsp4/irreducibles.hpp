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

#ifndef GSP4_IRREDUCIBLES_HPP_
#define GSP4_IRREDUCIBLES_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4/classfn.hpp"
#include "gsp4/finite_group.hpp"
#include "gsp4/whittaker.hpp"

namespace gsp4 {

/// Raised when the chosen class matrices do not separate all characters.
class SeparationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a(i, j, k) = #{(x, y) : x in C_i, y in C_j, x y = z_k} for the rows i
/// in `rows` and all j, k; z_k is the representative of class k.
struct StructureConstants {
  std::size_t num_classes = 0;
  std::vector<std::size_t> rows;
  std::vector<std::uint64_t> a;  // [row position][j][k]

  std::uint64_t operator()(std::size_t r, std::size_t j, std::size_t k) const {
    return a[(r * num_classes + j) * num_classes + k];
  }
  std::optional<std::size_t> position(std::size_t i) const {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r] == i) return r;
    return std::nullopt;
  }
};

/// Element indices of each class.
inline std::vector<std::vector<std::uint32_t>> class_members(const ConjugacyPartition& P) {
  std::vector<std::vector<std::uint32_t>> m(P.num_classes());
  for (std::size_t c = 0; c < m.size(); ++c) m[c].reserve(P.size[c]);
  for (std::size_t i = 0; i < P.class_of.size(); ++i) m[P.class_of[i]].push_back(static_cast<std::uint32_t>(i));
  return m;
}

/// Appends the rows `rows` to sc by counting y = x^-1 z_k over x in C_i.
/// `inv` inverts group elements.
template <std::size_t N>
void append_rows(StructureConstants& sc, const EnumeratedGroup<N>& E, const ConjugacyPartition& P,
                 const std::function<Matrix<N>(const Matrix<N>&)>& inv, std::span<const std::size_t> rows,
                 const std::vector<std::vector<std::uint32_t>>& members) {
  const std::size_t n = P.num_classes();
  sc.num_classes = n;
  const FqArith& F = E.arith();
  std::vector<Matrix<N>> reps(n);
  for (std::size_t k = 0; k < n; ++k) reps[k] = E.element(P.representative[k]);
  for (std::size_t i : rows) {
    std::size_t r = sc.rows.size();
    sc.rows.push_back(i);
    sc.a.resize(sc.rows.size() * n * n, 0);
    const auto& mem = members[i];
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(mem.size() / 64, 256));
    std::vector<std::uint64_t> acc(chunks * n * n, 0);
    detail::for_chunks(mem.size(), chunks, [&](std::size_t b, std::size_t e, std::size_t ch) {
      std::uint64_t* out = acc.data() + ch * n * n;
      for (std::size_t m = b; m < e; ++m) {
        Matrix<N> xinv = inv(E.element(mem[m]));
        for (std::size_t k = 0; k < n; ++k) {
          auto y = E.find(mul(F, xinv, reps[k]));
          if (!y) throw std::logic_error("product left the group");
          ++out[P.class_of[*y] * n + k];
        }
      }
    });
    std::uint64_t* out = sc.a.data() + r * n * n;
    for (std::size_t ch = 0; ch < chunks; ++ch)
      for (std::size_t t = 0; t < n * n; ++t) out[t] += acc[ch * n * n + t];
  }
}

template <std::size_t N>
StructureConstants structure_constants(const EnumeratedGroup<N>& E, const ConjugacyPartition& P,
                                       const std::function<Matrix<N>(const Matrix<N>&)>& inv,
                                       std::span<const std::size_t> rows) {
  StructureConstants sc;
  append_rows(sc, E, P, inv, rows, class_members(P));
  return sc;
}

/// Same numbers by a different loop: for each y in G, x = z_k y^-1.
/// Cost |G| * #classes per k; meant for checking.
template <std::size_t N>
std::uint64_t structure_constant_by_pairs(const EnumeratedGroup<N>& E, const ConjugacyPartition& P,
                                          const std::function<Matrix<N>(const Matrix<N>&)>& inv,
                                          std::size_t i, std::size_t j, std::size_t k) {
  const FqArith& F = E.arith();
  Matrix<N> z = E.element(P.representative[k]);
  std::uint64_t count = 0;
  for (std::size_t y = 0; y < E.size(); ++y) {
    if (P.class_of[y] != j) continue;
    auto x = E.find(mul(F, z, inv(E.element(y))));
    if (!x) throw std::logic_error("product left the group");
    if (P.class_of[*x] == i) ++count;
  }
  return count;
}

template <std::size_t N>
StructureConstants structure_constants(const EnumeratedGroup<N>& E, const ConjugacyPartition& P,
                                       const std::function<Matrix<N>(const Matrix<N>&)>& inv) {
  std::vector<std::size_t> rows(P.num_classes());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return structure_constants(E, P, inv, std::span<const std::size_t>(rows));
}

/// Irreducible characters, sorted by degree and then by values.
struct CharacterTable {
  const ConjugacyPartition* partition = nullptr;
  std::vector<ClassFunction> characters;
  std::vector<std::int64_t> degrees;
  std::vector<std::size_t> rows_used;
  double residual = 0;  // worst relative error of the checked class relations

  std::size_t size() const { return characters.size(); }
};

struct SolverOptions {
  std::uint64_t seed = 0x5eed5eedULL;
  int attempts = 6;
};

namespace detail {

inline bool value_less(const ClassFunction& a, const ClassFunction& b) {
  for (std::size_t c = 0; c < a.size(); ++c) {
    double ar = std::round(a[c].real() * 1e6), br = std::round(b[c].real() * 1e6);
    if (ar != br) return ar < br;
    double ai = std::round(a[c].imag() * 1e6), bi = std::round(b[c].imag() * 1e6);
    if (ai != bi) return ai < bi;
  }
  return false;
}

}  // namespace detail

/// Characters as the common eigenvectors of the class matrices
/// (M_i)_{jk} = a(i, j, k): M_i w = w_i w with w_j = |C_j| chi(C_j) / chi(1).
/// A random combination of the available M_i is diagonalized; throws
/// SeparationError when its eigenvalues are not distinct.
inline CharacterTable solve_character_table(const ConjugacyPartition& P, const StructureConstants& sc,
                                            std::size_t identity_class, const SolverOptions& opt = {}) {
  using Eigen::MatrixXcd;
  using Eigen::MatrixXd;
  const std::size_t n = P.num_classes();
  const Eigen::Index ni = static_cast<Eigen::Index>(n);
  std::vector<MatrixXd> M;
  for (std::size_t r = 0; r < sc.rows.size(); ++r) {
    MatrixXd m(ni, ni);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = static_cast<double>(sc(r, j, k));
    M.push_back(std::move(m));
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  std::string last_error = "no attempts";
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    MatrixXd A = MatrixXd::Zero(ni, ni);
    for (std::size_t r = 0; r < M.size(); ++r)
      A += coef(rng) / static_cast<double>(P.size[sc.rows[r]]) * M[r];
    Eigen::EigenSolver<MatrixXd> es(A);
    if (es.info() != Eigen::Success) {
      last_error = "eigensolver did not converge";
      continue;
    }
    Eigen::VectorXcd ev = es.eigenvalues();
    double scale = 1.0;
    for (Eigen::Index i = 0; i < ni; ++i) scale = std::max(scale, std::abs(ev(i)));
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < ni; ++i)
      for (Eigen::Index j = i + 1; j < ni; ++j) gap = std::min(gap, std::abs(ev(i) - ev(j)));
    if (gap < 1e-7 * scale) {
      last_error = "class matrices do not separate the characters";
      continue;
    }
    MatrixXcd V = es.eigenvectors();
    CharacterTable T;
    T.partition = &P;
    T.rows_used = sc.rows;
    bool ok = true;
    for (Eigen::Index e = 0; e < ni && ok; ++e) {
      Eigen::VectorXcd w = V.col(e) / V(static_cast<Eigen::Index>(identity_class), e);
      for (std::size_t r = 0; r < M.size() && ok; ++r) {
        Complex lam = w(static_cast<Eigen::Index>(sc.rows[r]));
        double res = (M[r].cast<Complex>() * w - lam * w).norm();
        if (res > 1e-6 * (1.0 + w.norm() * (1.0 + std::abs(lam)))) ok = false;
      }
      long double s = 0;
      for (std::size_t j = 0; j < n; ++j)
        s += std::norm(w(static_cast<Eigen::Index>(j))) / static_cast<long double>(P.size[j]);
      double d = std::sqrt(static_cast<double>(static_cast<long double>(P.group_order) / s));
      double dr = std::round(d);
      if (dr < 1 || std::abs(d - dr) > 1e-6 * std::max(1.0, d)) ok = false;
      std::vector<Complex> vals(n);
      for (std::size_t j = 0; j < n; ++j)
        vals[j] = dr * w(static_cast<Eigen::Index>(j)) / static_cast<double>(P.size[j]);
      T.characters.emplace_back(P, std::move(vals));
      T.degrees.push_back(static_cast<std::int64_t>(dr));
    }
    if (!ok) {
      last_error = "eigenvector is not a character";
      continue;
    }
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a; b < n && ok; ++b) {
        Complex ip = inner_product(T.characters[a], T.characters[b]);
        if (std::abs(ip - Complex(a == b ? 1.0 : 0.0, 0.0)) > kTolerance) ok = false;
      }
    if (!ok) {
      last_error = "characters are not orthonormal";
      continue;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (T.degrees[a] != T.degrees[b]) return T.degrees[a] < T.degrees[b];
      return detail::value_less(T.characters[a], T.characters[b]);
    });
    CharacterTable S;
    S.partition = &P;
    S.rows_used = T.rows_used;
    for (std::size_t i : order) {
      S.characters.push_back(T.characters[i]);
      S.degrees.push_back(T.degrees[i]);
    }
    return S;
  }
  throw SeparationError(last_error);
}

/// Maximum deviation from column orthogonality,
/// sum_chi chi(C) conj(chi(C')) = delta |G| / |C|.
inline double column_orthogonality_error(const CharacterTable& T) {
  const ConjugacyPartition& P = *T.partition;
  const std::size_t n = P.num_classes();
  double worst = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Complex s = 0;
      for (const auto& chi : T.characters) s += chi[a] * std::conj(chi[b]);
      double want = a == b ? static_cast<double>(P.centralizer_order(a)) : 0.0;
      worst = std::max(worst, std::abs(s - want));
    }
  return worst;
}

/// Maximum deviation of the Gram matrix from the identity.
inline double row_orthonormality_error(const CharacterTable& T) {
  double worst = 0;
  for (std::size_t a = 0; a < T.size(); ++a)
    for (std::size_t b = 0; b < T.size(); ++b) {
      Complex ip = inner_product(T.characters[a], T.characters[b]);
      worst = std::max(worst, std::abs(ip - Complex(a == b ? 1.0 : 0.0, 0.0)));
    }
  return worst;
}

/// Index of the irreducible equal to f, if any.
inline std::optional<std::size_t> find_character(const CharacterTable& T, const ClassFunction& f) {
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T.characters[i].approx_equal(f)) return i;
  return std::nullopt;
}

/// Called after each class matrix is added: rows so far, products so far.
using TableProgress = std::function<void(std::size_t, std::uint64_t)>;

/// Full table of an enumerated group. Uses every class matrix when
/// |G| * #classes <= full_budget; otherwise adds class matrices in order
/// of class size until the characters separate, within `budget` products.
template <std::size_t N>
CharacterTable character_table(const EnumeratedGroup<N>& E, const ConjugacyPartition& P,
                               const std::function<Matrix<N>(const Matrix<N>&)>& inv,
                               std::size_t identity_class, const SolverOptions& opt = {},
                               std::uint64_t full_budget = 50'000'000ULL,
                               std::uint64_t budget = 8'000'000'000ULL, const TableProgress& progress = {}) {
  const std::uint64_t n = P.num_classes();
  if (P.group_order * n <= full_budget) {
    auto sc = structure_constants(E, P, inv);
    return solve_character_table(P, sc, identity_class, opt);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return P.size[a] < P.size[b]; });
  const auto members = class_members(P);
  StructureConstants sc;
  SolverOptions quick = opt;
  quick.attempts = 2;
  std::uint64_t cost = 0;
  for (std::size_t c : order) {
    cost += P.size[c] * n;
    if (cost > budget) throw ResourceGuardError("class matrices exceed the work budget");
    append_rows(sc, E, P, inv, std::span<const std::size_t>(&c, 1), members);
    if (progress) progress(sc.rows.size(), cost);
    try {
      return solve_character_table(P, sc, identity_class, quick);
    } catch (const SeparationError&) {
    }
  }
  throw SeparationError("class matrices do not separate the characters");
}

/// Columns a(i, ., c) of class matrices, computed on demand with |C_i|
/// lookups each. Row j of M_i follows from column j^-1:
///   a(i, j, k) |C_k| = a(i, k^-1, j^-1) |C_j|.
template <std::size_t N>
class ClassMatrixColumns {
 public:
  ClassMatrixColumns(const EnumeratedGroup<N>& E, const ConjugacyPartition& P,
                     std::function<Matrix<N>(const Matrix<N>&)> inv, std::uint64_t budget)
      : E_(&E), P_(&P), inv_(std::move(inv)), budget_(budget), members_(class_members(P)) {
    const std::size_t n = P.num_classes();
    reps_.resize(n);
    inverse_class_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      reps_[k] = E.element(P.representative[k]);
      inverse_class_[k] = P.class_of[E.index_of(inv_(reps_[k]))];
    }
  }

  std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }
  std::uint64_t products() const { return products_; }

  /// Computes the missing columns among `cols` of M_i in one pass over C_i.
  void fetch(std::size_t i, std::span<const std::size_t> cols) {
    std::vector<std::size_t> todo;
    for (std::size_t c : cols)
      if (!cache_.count({i, c}) && std::find(todo.begin(), todo.end(), c) == todo.end()) todo.push_back(c);
    if (todo.empty()) return;
    const std::size_t n = P_->num_classes(), nt = todo.size();
    const auto& mem = members_[i];
    products_ += mem.size() * nt;
    if (products_ > budget_) throw ResourceGuardError("class matrix columns exceed the work budget");
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(mem.size() / 64, 256));
    std::vector<std::uint64_t> acc(chunks * nt * n, 0);
    const FqArith& F = E_->arith();
    detail::for_chunks(mem.size(), chunks, [&](std::size_t b, std::size_t e, std::size_t ch) {
      std::uint64_t* out = acc.data() + ch * nt * n;
      for (std::size_t m = b; m < e; ++m) {
        Matrix<N> xinv = inv_(E_->element(mem[m]));
        for (std::size_t t = 0; t < nt; ++t) {
          auto y = E_->find(mul(F, xinv, reps_[todo[t]]));
          if (!y) throw std::logic_error("product left the group");
          ++out[t * n + P_->class_of[*y]];
        }
      }
    });
    for (std::size_t t = 0; t < nt; ++t) {
      std::vector<std::uint64_t> col(n, 0);
      for (std::size_t ch = 0; ch < chunks; ++ch)
        for (std::size_t j = 0; j < n; ++j) col[j] += acc[(ch * nt + t) * n + j];
      cache_.emplace(std::make_pair(i, todo[t]), std::move(col));
    }
  }

  /// a(i, j, c); the column must have been fetched.
  std::uint64_t column_entry(std::size_t i, std::size_t c, std::size_t j) const { return cache_.at({i, c})[j]; }

  /// Row j of M_i as doubles; fetches the column it comes from.
  std::vector<double> row(std::size_t i, std::size_t j) {
    std::size_t c = inverse_class_[j];
    fetch(i, std::span<const std::size_t>(&c, 1));
    const std::size_t n = P_->num_classes();
    std::vector<double> r(n);
    for (std::size_t k = 0; k < n; ++k)
      r[k] = static_cast<double>(column_entry(i, c, inverse_class_[k])) * static_cast<double>(P_->size[j]) /
             static_cast<double>(P_->size[k]);
    return r;
  }

  const std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint64_t>>& cache() const { return cache_; }

 private:
  const EnumeratedGroup<N>* E_;
  const ConjugacyPartition* P_;
  std::function<Matrix<N>(const Matrix<N>&)> inv_;
  std::uint64_t budget_;
  std::uint64_t products_ = 0;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<Matrix<N>> reps_;
  std::vector<std::size_t> inverse_class_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint64_t>> cache_;
};

/// Characters by splitting invariant subspaces one class at a time,
/// working in coordinates x_j = w_j / sqrt|C_j| where the class matrices
/// are normal. A subspace U is split by the cheapest class j on which
/// its vectors are not proportional to their identity entry; M_j on U is
/// read off d rows of M_j, d = dim U.
template <std::size_t N>
CharacterTable split_character_table(const EnumeratedGroup<N>& E, const ConjugacyPartition& P,
                                     const std::function<Matrix<N>(const Matrix<N>&)>& inv,
                                     std::size_t identity_class, std::uint64_t budget = 2'000'000'000ULL,
                                     const TableProgress& progress = {}) {
  using Eigen::MatrixXcd;
  using Eigen::VectorXcd;
  const std::size_t n = P.num_classes();
  const Eigen::Index ni = static_cast<Eigen::Index>(n), id = static_cast<Eigen::Index>(identity_class);
  ClassMatrixColumns<N> cols(E, P, inv, budget);
  std::vector<double> sq(n);
  for (std::size_t j = 0; j < n; ++j) sq[j] = std::sqrt(static_cast<double>(P.size[j]));

  std::vector<MatrixXcd> pending{MatrixXcd::Identity(ni, ni)};
  std::vector<VectorXcd> found;
  std::set<std::size_t> used;
  while (!pending.empty()) {
    MatrixXcd U = std::move(pending.back());
    pending.pop_back();
    const Eigen::Index d = U.cols();
    if (d == 1) {
      found.push_back(U.col(0));
      continue;
    }
    // Class j separates U unless row j is a multiple of the identity row.
    Eigen::RowVectorXcd r0 = U.row(id);
    std::optional<std::size_t> pick;
    for (std::size_t j = 0; j < n; ++j) {
      if (static_cast<Eigen::Index>(j) == id) continue;
      Eigen::RowVectorXcd rj = U.row(static_cast<Eigen::Index>(j));
      Complex alpha = r0.dot(rj) / r0.squaredNorm();
      double off = (rj - alpha * r0).norm();
      if (off <= 1e-8 * std::max(1.0, rj.norm())) continue;
      if (!pick || P.size[j] < P.size[*pick]) pick = j;
    }
    if (!pick) throw SeparationError("no class separates an invariant subspace");
    const std::size_t j = *pick;
    used.insert(j);
    // 2d + 2 well-conditioned rows, B by least squares
    Eigen::ColPivHouseholderQR<MatrixXcd> qr(U.transpose());
    const Eigen::Index nr = std::min<Eigen::Index>(ni, 2 * d + 2);
    std::vector<std::size_t> J(static_cast<std::size_t>(nr));
    for (Eigen::Index r = 0; r < nr; ++r)
      J[static_cast<std::size_t>(r)] = static_cast<std::size_t>(qr.colsPermutation().indices()(r));
    std::vector<std::size_t> need;
    for (std::size_t j0 : J) need.push_back(cols.inverse_class(j0));
    cols.fetch(j, need);
    MatrixXcd UJ(nr, d), Y(nr, d);
    for (Eigen::Index r = 0; r < nr; ++r) {
      std::size_t j0 = J[static_cast<std::size_t>(r)];
      std::vector<double> row = cols.row(j, j0);
      // scaled row: M~[j0][k] = M[j0][k] sqrt|C_k| / sqrt|C_j0|
      Eigen::RowVectorXcd srow(ni);
      for (std::size_t k = 0; k < n; ++k) srow(static_cast<Eigen::Index>(k)) = row[k] * sq[k] / sq[j0];
      Y.row(r) = srow * U;
      UJ.row(r) = U.row(static_cast<Eigen::Index>(j0));
    }
    MatrixXcd B = UJ.colPivHouseholderQr().solve(Y);
    Eigen::ComplexEigenSolver<MatrixXcd> es(B);
    if (es.info() != Eigen::Success) throw SeparationError("eigensolver did not converge");
    VectorXcd ev = es.eigenvalues();
    double scale = 1.0;
    for (Eigen::Index a = 0; a < d; ++a) scale = std::max(scale, std::abs(ev(a)));
    std::vector<std::vector<Eigen::Index>> groups;
    std::vector<bool> taken(static_cast<std::size_t>(d), false);
    for (Eigen::Index a = 0; a < d; ++a) {
      if (taken[static_cast<std::size_t>(a)]) continue;
      groups.push_back({a});
      taken[static_cast<std::size_t>(a)] = true;
      for (Eigen::Index b = a + 1; b < d; ++b)
        if (!taken[static_cast<std::size_t>(b)] && std::abs(ev(a) - ev(b)) <= 1e-7 * scale) {
          groups.back().push_back(b);
          taken[static_cast<std::size_t>(b)] = true;
        }
    }
    if (groups.size() < 2) throw SeparationError("chosen class does not split the subspace");
    for (const auto& g : groups) {
      Complex lam = 0;
      for (Eigen::Index a : g) lam += ev(a);
      lam /= static_cast<double>(g.size());
      MatrixXcd K = B - lam * MatrixXcd::Identity(d, d);
      Eigen::JacobiSVD<MatrixXcd> svd(K, Eigen::ComputeFullV);
      const Eigen::Index m = static_cast<Eigen::Index>(g.size());
      MatrixXcd W = svd.matrixV().rightCols(m);
      MatrixXcd V = U * W;
      Eigen::HouseholderQR<MatrixXcd> h(V);
      pending.push_back(h.householderQ() * MatrixXcd::Identity(ni, m));
    }
    if (progress) progress(found.size(), cols.products());
  }
  if (found.size() != n) throw SeparationError("subspace splitting lost dimensions");

  CharacterTable T;
  T.partition = &P;
  T.rows_used.assign(used.begin(), used.end());
  for (const auto& x : found) {
    std::vector<Complex> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = x(static_cast<Eigen::Index>(j)) * sq[j] / x(id);
    long double s = 0;
    for (std::size_t j = 0; j < n; ++j) s += std::norm(w[j]) / static_cast<long double>(P.size[j]);
    double deg = std::sqrt(static_cast<double>(static_cast<long double>(P.group_order) / s));
    double dr = std::round(deg);
    if (dr < 1 || std::abs(deg - dr) > 1e-6 * deg) throw std::domain_error("degree is not an integer");
    std::vector<Complex> vals(n);
    for (std::size_t k = 0; k < n; ++k) vals[k] = dr * w[k] / static_cast<double>(P.size[k]);
    T.characters.emplace_back(P, std::move(vals));
    T.degrees.push_back(static_cast<std::int64_t>(dr));
  }
  // Each fetched column gives rows of the eigen-relation M_i w = w_i w.
  for (const auto& [key, col] : cols.cache()) {
    auto [i, c] = key;
    std::size_t j0 = cols.inverse_class(c);
    std::vector<double> row = cols.row(i, j0);
    for (std::size_t t = 0; t < n; ++t) {
      const ClassFunction& chi = T.characters[t];
      auto w = [&](std::size_t k) { return static_cast<double>(P.size[k]) * chi[k] / static_cast<double>(T.degrees[t]); };
      Complex lhs = 0;
      double mag = std::abs(w(i) * w(j0));
      for (std::size_t k = 0; k < n; ++k) {
        lhs += row[k] * w(k);
        mag += std::abs(row[k] * w(k));
      }
      T.residual = std::max(T.residual, std::abs(lhs - w(i) * w(j0)) / (1.0 + mag));
    }
  }
  if (T.residual > 1e-4) throw std::domain_error("class relations fail");
  if (row_orthonormality_error(T) > kTolerance) throw std::domain_error("characters are not orthonormal");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (T.degrees[a] != T.degrees[b]) return T.degrees[a] < T.degrees[b];
    return detail::value_less(T.characters[a], T.characters[b]);
  });
  CharacterTable S;
  S.partition = &P;
  S.rows_used = T.rows_used;
  S.residual = T.residual;
  for (std::size_t i : order) {
    S.characters.push_back(T.characters[i]);
    S.degrees.push_back(T.degrees[i]);
  }
  return S;
}

// ---------------------------------------------------------------------------
// Dimension inventory of the published list of irreducible characters.

/// Index set of a row; the row exists at q when the set is nonempty.
enum class IndexSet : std::uint8_t { none, r1, r2, t1, t2, t1_pairs, t2_ordered_pairs, t2_times_t1 };

struct InventoryRow {
  const char* name;
  IndexSet index;
  int parts;  // constituents of the induced character: 1 or 2
  bool generic;
  std::int64_t (*degree)(std::int64_t q);
};

inline std::int64_t index_set_size(IndexSet s, std::int64_t q) {
  const std::int64_t t1 = (q - 3) / 2, t2 = (q - 1) / 2;
  switch (s) {
    case IndexSet::none: return 1;
    case IndexSet::r1: return (q * q - 1) / 4;
    case IndexSet::r2: return (q - 1) * (q - 1) / 4;
    case IndexSet::t1: return t1;
    case IndexSet::t2: return t2;
    case IndexSet::t1_pairs: return t1 * (t1 - 1) / 2;
    case IndexSet::t2_ordered_pairs: return t2 * (t2 - 1);
    case IndexSet::t2_times_t1: return t2 * t1;
  }
  return 0;
}

inline const std::vector<InventoryRow>& irreducible_inventory() {
  using I = IndexSet;
  static const std::vector<InventoryRow> rows = {
      {"chi1", I::r1, 2, true, [](std::int64_t q) { return (q * q - 1) * (q * q - 1); }},
      {"chi2", I::r2, 2, true, [](std::int64_t q) { return q * q * q * q - 1; }},
      {"chi3", I::t1_pairs, 2, true, [](std::int64_t q) { return (q * q + 1) * (q + 1) * (q + 1); }},
      {"chi4", I::t2_ordered_pairs, 2, true, [](std::int64_t q) { return (q * q + 1) * (q - 1) * (q - 1); }},
      {"chi5", I::t2_times_t1, 2, true, [](std::int64_t q) { return q * q * q * q - 1; }},
      {"chi6", I::t2, 2, false, [](std::int64_t q) { return (q * q + 1) * (q - 1); }},
      {"chi7", I::t2, 2, true, [](std::int64_t q) { return q * (q * q + 1) * (q - 1); }},
      {"chi8", I::t1, 2, false, [](std::int64_t q) { return (q * q + 1) * (q + 1); }},
      {"chi9", I::t1, 2, true, [](std::int64_t q) { return q * (q * q + 1) * (q + 1); }},
      {"xi1", I::t2, 2, false, [](std::int64_t q) { return (q * q + 1) * (q - 1); }},
      {"xi1'", I::t2, 2, true, [](std::int64_t q) { return q * (q * q + 1) * (q - 1); }},
      {"xi21", I::t2, 1, true, [](std::int64_t q) { return q * q * q * q - 1; }},
      {"xi21'", I::t2, 1, true, [](std::int64_t q) { return (q * q + 1) * (q - 1) * (q - 1); }},
      {"xi3", I::t1, 2, false, [](std::int64_t q) { return (q * q + 1) * (q + 1); }},
      {"xi3'", I::t1, 2, true, [](std::int64_t q) { return q * (q * q + 1) * (q + 1); }},
      {"xi41", I::t1, 1, true, [](std::int64_t q) { return (q * q + 1) * (q + 1) * (q + 1); }},
      {"xi41'", I::t1, 1, true, [](std::int64_t q) { return q * q * q * q - 1; }},
      {"Phi1", I::none, 1, false, [](std::int64_t q) { return (q * q + 1) * (q - 1); }},
      {"Phi3", I::none, 1, true, [](std::int64_t q) { return q * (q * q + 1) * (q - 1); }},
      {"Phi5", I::none, 1, false, [](std::int64_t q) { return (q * q + 1) * (q + 1); }},
      {"Phi7", I::none, 1, true, [](std::int64_t q) { return q * (q * q + 1) * (q + 1); }},
      {"Phi9", I::none, 2, false, [](std::int64_t q) { return q * (q * q + 1); }},
      {"theta1", I::none, 1, true, [](std::int64_t q) { return q * q * (q * q + 1); }},
      {"theta3", I::none, 1, false, [](std::int64_t q) { return q * q + 1; }},
      {"theta5", I::none, 1, true, [](std::int64_t q) { return q * q * (q * q - 1); }},
      {"theta7", I::none, 1, false, [](std::int64_t q) { return q * q - 1; }},
      {"theta9", I::none, 2, false, [](std::int64_t q) { return q * (q + 1) * (q + 1) / 2; }},
      {"theta10", I::none, 2, false, [](std::int64_t q) { return q * (q - 1) * (q - 1) / 2; }},
      {"theta11", I::none, 2, false, [](std::int64_t q) { return q * (q * q + 1) / 2; }},
      {"theta12", I::none, 2, false, [](std::int64_t q) { return q * (q * q + 1) / 2; }},
      {"theta13", I::none, 2, true, [](std::int64_t q) { return q * q * q * q; }},
  };
  return rows;
}

/// Degrees of the listed characters present at q, plus 1 for the
/// one-dimensional characters the list leaves out.
inline std::set<std::int64_t> inventory_degree_set(std::int64_t q) {
  std::set<std::int64_t> s{1};
  for (const auto& r : irreducible_inventory())
    if (index_set_size(r.index, q) > 0) s.insert(r.degree(q));
  return s;
}

/// Generic marks from the Gelfand-Graev character.
inline std::vector<bool> genericity_marks(const CharacterTable& T, const ClassFunction& gg) {
  std::vector<bool> g;
  for (const auto& chi : T.characters) g.push_back(is_generic(chi, gg));
  return g;
}

}  // namespace gsp4

#endif  // GSP4_IRREDUCIBLES_HPP_
