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

#ifndef GSP4_WHITTAKER_HPP_
#define GSP4_WHITTAKER_HPP_

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "gsp4/classfn.hpp"
#include "gsp4/conjugacy.hpp"
#include "gsp4/group.hpp"

namespace gsp4 {

/// psi_N(n) = psi_1(x) psi_2(y) with y = n[0][1], x = n[1][2] and
/// psi_i(t) = psi(a_i t), psi the trace character.
struct WhittakerDatum {
  Code a1 = 1;
  Code a2 = 1;
};

inline SubgroupCharacter<4> whittaker_character(const Gsp4& G, const WhittakerDatum& d) {
  if (d.a1 == 0 || d.a2 == 0) throw std::invalid_argument("additive characters must be nontrivial");
  SubgroupCharacter<4> chi;
  chi.subgroup_order = G.subgroup_order(Subgroup::unipotent);
  const Gsp4* g = &G;
  chi.contains = [g](const Mat4& m) { return g->in_subgroup(m, Subgroup::unipotent); };
  chi.eval = [g, d](const Mat4& m) {
    const FqArith& A = g->arith();
    const Field& f = A.field();
    Code x = m(1, 2), y = m(0, 1);
    int t = f.trace_to_prime(A.element(A.mul(d.a1, x))) + f.trace_to_prime(A.element(A.mul(d.a2, y)));
    return unit_root(t, f.p());
  };
  return chi;
}

/// The Gelfand-Graev character Ind_N^G psi_N.
inline ClassFunction gelfand_graev(const Gsp4& G, const EnumeratedGroup<4>& E, const ClassList& L,
                                   const WhittakerDatum& d = {}) {
  auto chi = whittaker_character(G, d);
  auto N = G.subgroup_elements(Subgroup::unipotent);
  std::vector<std::function<Complex(const Mat4&)>> ev{chi.eval};
  return induce_by_intersection<4>(E, L.partition, N, ev).front();
}

/// Same character by the defining Frobenius sum over G.
inline ClassFunction gelfand_graev_frobenius(const Gsp4& G, const EnumeratedGroup<4>& E, const ClassList& L,
                                             const WhittakerDatum& d = {}) {
  return induce(whittaker_character(G, d), E, L.partition);
}

/// Tabulated value on the classes A1, A2, A31, A32, A5 with k = q-1;
/// 0 elsewhere.
inline Complex gelfand_graev_table_value(std::int64_t q, const ClassLabel& l) {
  if (l.k != q - 1) return 0.0;
  const double qd = static_cast<double>(q);
  switch (l.family) {
    case Family::A1: return (qd * qd * qd * qd - 1) * (qd * qd - 1) * (qd - 1);
    case Family::A2:
    case Family::A31:
    case Family::A32: return -(qd * qd - 1) * (qd - 1);
    case Family::A5: return qd - 1;
    default: return 0.0;
  }
}

/// True when (f, G) = 1, false when 0; anything else is an error.
inline bool is_generic(const ClassFunction& f, const ClassFunction& gg) {
  std::int64_t m = as_integer(inner_product(f, gg));
  if (m != 0 && m != 1) throw std::domain_error("Gelfand-Graev multiplicity is not 0 or 1");
  return m == 1;
}

}  // namespace gsp4

#endif  // GSP4_WHITTAKER_HPP_
