// Copyright 2026 The quatrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Three-way classification of irreducible representations of a real form
// (real / not self-conjugate / quaternionic) from the Satake-Tits data, its
// multiplicative extension to direct sums of simple factors, and descriptors
// for the irreducible quaternionic-linear representations they generate.

#ifndef QUATREP_CLASSIFY_HPP_
#define QUATREP_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quatrep/real_form.hpp"
#include "quatrep/root_system.hpp"

namespace quatrep {

enum class RepClass { Real, NotSelfConjugate, Quaternionic };

inline std::string to_string(RepClass c) {
  switch (c) {
    case RepClass::Real: return "Real";
    case RepClass::NotSelfConjugate: return "NotSelfConjugate";
    case RepClass::Quaternionic: return "Quaternionic";
  }
  return "?";
}

// epsilon is +1 / -1 for self-conjugate classes and undefined otherwise.
inline std::optional<int> epsilon(RepClass c) {
  switch (c) {
    case RepClass::Real: return 1;
    case RepClass::Quaternionic: return -1;
    case RepClass::NotSelfConjugate: return std::nullopt;
  }
  return std::nullopt;
}

// Highest weight of the conjugate representation: coordinates permuted by
// t(sigma), so that (t.lambda)_{t(i)} = lambda_i.
inline DominantWeight galois_conjugate_weight(const RealForm& f, const DominantWeight& lambda) {
  if (lambda.rank() != f.rank())
    throw std::invalid_argument("weight has " + std::to_string(lambda.rank()) + " coordinates, expected " + std::to_string(f.rank()));
  std::vector<std::int64_t> c(f.rank());
  for (int i = 1; i <= f.rank(); ++i) c[f.conj_node(i) - 1] = lambda.coords[i - 1];
  return DominantWeight(std::move(c));
}

// The criterion on highest weights: not self-conjugate iff some coordinate
// differs across a t(sigma) pair; otherwise the parity of the weight over Q
// decides real vs quaternionic.
inline RepClass classify_irrep(const RealForm& f, const DominantWeight& lambda) {
  if (lambda.rank() != f.rank())
    throw std::invalid_argument("weight has " + std::to_string(lambda.rank()) + " coordinates, expected " + std::to_string(f.rank()));
  for (int i = 1; i <= f.rank(); ++i)
    if (lambda.coords[i - 1] != lambda.coords[f.conj_node(i) - 1]) return RepClass::NotSelfConjugate;
  std::int64_t q_sum = 0;
  for (int q : f.q_set) q_sum += lambda.coords[q - 1];
  return q_sum % 2 == 0 ? RepClass::Real : RepClass::Quaternionic;
}

// Sign rule for an irreducible representation of g_1 + ... + g_k given as the
// outer tensor product of per-factor irreducibles. Not-self-conjugate absorbs.
inline RepClass classify_product(const std::vector<std::pair<RealForm, DominantWeight>>& factors) {
  if (factors.empty()) throw std::invalid_argument("classify_product needs at least one factor");
  int sign = 1;
  for (const auto& [f, lambda] : factors) {
    RepClass c = classify_irrep(f, lambda);
    if (c == RepClass::NotSelfConjugate) return RepClass::NotSelfConjugate;
    sign *= *epsilon(c);
  }
  return sign == 1 ? RepClass::Real : RepClass::Quaternionic;
}

// An irreducible representation over the quaternions, described by its
// underlying complex data: either a quaternionic irreducible (real dimension
// twice its complex dimension) or phi + conj(phi) for phi real or not
// self-conjugate (real dimension four times dim phi). Doubled descriptors are
// keyed by the lexicographically smaller of {lambda, t(sigma)lambda} so that
// descriptor equality is decidable.
struct HRepDescriptor {
  enum class Kind { QuaternionicIrreducible, DoubledIrreducible };
  Kind kind;
  DominantWeight weight;
  Int real_dim;

  bool operator==(const HRepDescriptor&) const = default;
  bool operator<(const HRepDescriptor& o) const {
    if (weight != o.weight) return weight < o.weight;
    return kind < o.kind;
  }
};

inline std::string to_string(HRepDescriptor::Kind k) {
  return k == HRepDescriptor::Kind::QuaternionicIrreducible ? "quaternionic-irreducible" : "doubled-irreducible";
}

inline HRepDescriptor irreducible_hrep(const RealForm& f, const DominantWeight& lambda) {
  RootSystem rs = build_root_system(f.complex_type);
  Int d = rs.weyl_dim(lambda);
  if (classify_irrep(f, lambda) == RepClass::Quaternionic)
    return {HRepDescriptor::Kind::QuaternionicIrreducible, lambda, 2 * d};
  DominantWeight conj = galois_conjugate_weight(f, lambda);
  return {HRepDescriptor::Kind::DoubledIrreducible, std::min(lambda, conj), 4 * d};
}

// Same, but with the root system supplied by the caller (hot paths).
inline HRepDescriptor irreducible_hrep(const RootSystem& rs, const RealForm& f, const DominantWeight& lambda) {
  Int d = rs.weyl_dim(lambda);
  if (classify_irrep(f, lambda) == RepClass::Quaternionic)
    return {HRepDescriptor::Kind::QuaternionicIrreducible, lambda, 2 * d};
  DominantWeight conj = galois_conjugate_weight(f, lambda);
  return {HRepDescriptor::Kind::DoubledIrreducible, std::min(lambda, conj), 4 * d};
}

}  // namespace quatrep

#endif  // QUATREP_CLASSIFY_HPP_
