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

#ifndef GSP4_FINITE_GROUP_HPP_
#define GSP4_FINITE_GROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gsp4/fq_matrix.hpp"

namespace gsp4 {

/// Raised when a computation would exceed a configured size limit.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Open-addressing map from packed keys to positions in an external key
/// vector. Slots hold 32-bit positions; empty slots hold kEmpty.
class KeyIndex {
 public:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

  KeyIndex() = default;
  explicit KeyIndex(std::size_t expected) { reset(expected); }

  void reset(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected + expected / 2 + 1) cap <<= 1U;
    slots_.assign(cap, kEmpty);
    mask_ = cap - 1;
    size_ = 0;
  }

  std::size_t capacity() const { return slots_.size(); }
  std::size_t size() const { return size_; }

  /// Position of `key`, or kEmpty.
  std::uint32_t find(std::uint64_t key, const std::vector<std::uint64_t>& keys) const {
    std::size_t h = mix64(key) & mask_;
    for (;;) {
      std::uint32_t s = slots_[h];
      if (s == kEmpty) return kEmpty;
      if (keys[s] == key) return s;
      h = (h + 1) & mask_;
    }
  }

  /// Inserts keys[pos] unless an equal key is present; returns the
  /// position that now holds the key.
  std::uint32_t insert(std::uint32_t pos, const std::vector<std::uint64_t>& keys) {
    if ((size_ + 1) * 10 > slots_.size() * 7) grow(keys);
    std::uint64_t key = keys[pos];
    std::size_t h = mix64(key) & mask_;
    for (;;) {
      std::uint32_t s = slots_[h];
      if (s == kEmpty) {
        slots_[h] = pos;
        ++size_;
        return pos;
      }
      if (keys[s] == key) return s;
      h = (h + 1) & mask_;
    }
  }

 private:
  void grow(const std::vector<std::uint64_t>& keys) {
    std::vector<std::uint32_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    mask_ = slots_.size() - 1;
    for (std::uint32_t s : old) {
      if (s == kEmpty) continue;
      std::size_t h = mix64(keys[s]) & mask_;
      while (slots_[h] != kEmpty) h = (h + 1) & mask_;
      slots_[h] = s;
    }
  }

  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

/// A finite matrix group stored as its sorted packed keys.
template <std::size_t N>
class EnumeratedGroup {
 public:
  EnumeratedGroup() = default;

  /// Closure of `gens` under right multiplication, starting at the
  /// identity. Throws ResourceGuardError once more than `limit` elements
  /// have been found.
  static EnumeratedGroup closure(const FqArith& F, std::span<const Matrix<N>> gens,
                                 std::size_t limit, std::size_t size_hint = 0) {
    EnumeratedGroup g;
    g.F_ = &F;
    const int bits = F.bits();
    std::vector<std::uint64_t>& keys = g.keys_;
    if (size_hint > 0) keys.reserve(size_hint);
    g.index_.reset(size_hint > 0 ? size_hint : 1024);
    keys.push_back(pack(Matrix<N>::identity(), bits));
    g.index_.insert(0, keys);
    for (std::size_t head = 0; head < keys.size(); ++head) {
      Matrix<N> x = unpack<N>(keys[head], bits);
      for (const Matrix<N>& s : gens) {
        keys.push_back(pack(mul(F, x, s), bits));
        std::uint32_t pos = static_cast<std::uint32_t>(keys.size() - 1);
        if (g.index_.insert(pos, keys) != pos) {
          keys.pop_back();
        } else if (keys.size() > limit) {
          throw ResourceGuardError("group closure exceeded the element limit");
        }
      }
    }
    g.finish();
    return g;
  }

  /// Group given by an explicit duplicate-free element list.
  static EnumeratedGroup from_elements(const FqArith& F, std::span<const Matrix<N>> elems) {
    EnumeratedGroup g;
    g.F_ = &F;
    g.keys_.reserve(elems.size());
    for (const auto& m : elems) g.keys_.push_back(pack(m, F.bits()));
    g.finish();
    if (std::adjacent_find(g.keys_.begin(), g.keys_.end()) != g.keys_.end())
      throw std::invalid_argument("duplicate group elements");
    return g;
  }

  /// Union of the disjoint cosets base * r for r in `reps`.
  static EnumeratedGroup from_cosets(const EnumeratedGroup& base, std::span<const Matrix<N>> reps) {
    EnumeratedGroup g;
    g.F_ = base.F_;
    const FqArith& F = *g.F_;
    g.keys_.reserve(base.size() * reps.size());
    for (const auto& r : reps) {
      const SparseMatrix<N> sr(r), id(Matrix<N>::identity());
      for (std::size_t i = 0; i < base.size(); ++i)
        g.keys_.push_back(pack(mul_sparse(F, id, base.element(i), sr), F.bits()));
    }
    g.finish();
    if (std::adjacent_find(g.keys_.begin(), g.keys_.end()) != g.keys_.end())
      throw std::invalid_argument("cosets are not disjoint");
    return g;
  }

  /// Group given by sorted duplicate-free keys (e.g. loaded from a cache).
  static EnumeratedGroup from_sorted_keys(const FqArith& F, std::vector<std::uint64_t> keys) {
    EnumeratedGroup g;
    g.F_ = &F;
    g.keys_ = std::move(keys);
    if (!std::is_sorted(g.keys_.begin(), g.keys_.end()))
      throw std::invalid_argument("keys are not sorted");
    g.finish();
    return g;
  }

  const FqArith& arith() const { return *F_; }
  std::size_t size() const { return keys_.size(); }
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  std::uint64_t key(std::size_t i) const { return keys_[i]; }
  Matrix<N> element(std::size_t i) const { return unpack<N>(keys_[i], F_->bits()); }

  std::optional<std::size_t> find(std::uint64_t key) const {
    std::uint32_t s = index_.find(key, keys_);
    if (s == KeyIndex::kEmpty) return std::nullopt;
    return s;
  }
  std::optional<std::size_t> find(const Matrix<N>& m) const { return find(pack(m, F_->bits())); }
  bool contains(const Matrix<N>& m) const { return find(m).has_value(); }

  std::size_t index_of(const Matrix<N>& m) const {
    auto i = find(m);
    if (!i) throw std::invalid_argument("matrix is not a group element");
    return *i;
  }

 private:
  void finish() {
    std::sort(keys_.begin(), keys_.end());
    if (keys_.size() >= KeyIndex::kEmpty) throw ResourceGuardError("group too large to index");
    index_.reset(keys_.size());
    for (std::uint32_t i = 0; i < keys_.size(); ++i) index_.insert(i, keys_);
  }

  const FqArith* F_ = nullptr;
  std::vector<std::uint64_t> keys_;
  KeyIndex index_;
};

/// Disjoint-set forest over element indices.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Keeps the smaller index as the root.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

/// Conjugacy classes of an enumerated group, in canonical-representative
/// order unless reordered by a caller.
struct ConjugacyPartition {
  std::uint64_t group_order = 0;
  std::vector<std::uint16_t> class_of;         // element index -> class id
  std::vector<std::size_t> representative;     // class id -> element index
  std::vector<std::uint64_t> size;             // class id -> class size

  std::size_t num_classes() const { return representative.size(); }
  std::uint64_t centralizer_order(std::size_t c) const { return group_order / size[c]; }

  /// Renumbers classes so that new id i is old id order[i].
  void reorder(const std::vector<std::size_t>& order) {
    std::vector<std::uint16_t> new_id(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<std::uint16_t>(i);
    std::vector<std::size_t> rep(order.size());
    std::vector<std::uint64_t> sz(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      rep[i] = representative[order[i]];
      sz[i] = size[order[i]];
    }
    representative = std::move(rep);
    size = std::move(sz);
    for (auto& c : class_of) c = new_id[c];
  }
};

/// Conjugacy classes as orbits of conjugation by `conjugators`, which must
/// generate the group. Representatives are the least keys of their class.
template <std::size_t N>
ConjugacyPartition conjugacy_partition(const EnumeratedGroup<N>& G,
                                       std::span<const Matrix<N>> conjugators) {
  const FqArith& F = G.arith();
  std::vector<SparseMatrix<N>> fwd, inv;
  for (const auto& s : conjugators) {
    fwd.emplace_back(s);
    inv.emplace_back(inverse(F, s));
  }
  UnionFind uf(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) {
    Matrix<N> x = G.element(i);
    for (std::size_t s = 0; s < conjugators.size(); ++s) {
      Matrix<N> y = mul_sparse(F, fwd[s], x, inv[s]);
      auto j = G.find(y);
      if (!j) throw std::logic_error("conjugator does not normalize the group");
      uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*j));
    }
  }
  ConjugacyPartition P;
  P.group_order = G.size();
  P.class_of.assign(G.size(), 0);
  std::vector<std::uint32_t> id_of_root(G.size(), KeyIndex::kEmpty);
  for (std::size_t i = 0; i < G.size(); ++i) {
    std::uint32_t r = uf.find(static_cast<std::uint32_t>(i));
    if (id_of_root[r] == KeyIndex::kEmpty) {
      if (P.representative.size() >= std::numeric_limits<std::uint16_t>::max())
        throw ResourceGuardError("too many conjugacy classes");
      id_of_root[r] = static_cast<std::uint32_t>(P.representative.size());
      P.representative.push_back(r);
      P.size.push_back(0);
    }
    std::uint32_t c = id_of_root[r];
    P.class_of[i] = static_cast<std::uint16_t>(c);
    ++P.size[c];
  }
  return P;
}

}  // namespace gsp4

#endif  // GSP4_FINITE_GROUP_HPP_
