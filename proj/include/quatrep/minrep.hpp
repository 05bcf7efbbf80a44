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
// Exact search for the quaternionic-linear representation of minimal real
// dimension of a real simple Lie algebra. Candidates per irreducible shape:
// 2*dim for a quaternionic highest weight, 4*dim for the double of anything
// else; the trivial weight is excluded. Strict monotonicity of the Weyl
// dimension in every coordinate makes the enumeration bound sound.

#ifndef QUATREP_MINREP_HPP_
#define QUATREP_MINREP_HPP_

#include <set>
#include <vector>

#include "quatrep/classify.hpp"

namespace quatrep {

struct MinRepResult {
  std::vector<HRepDescriptor> minimizers;  // all minima, canonical weight order
  Int real_dim;
};

inline MinRepResult minimal_quaternionic_rep(const RealForm& f) {
  RootSystem rs = build_root_system(f.complex_type);

  // Every nontrivial dominant weight dominates some fundamental weight, so the
  // best fundamental candidate is a valid search ceiling.
  Int bound = 0;
  for (int i = 1; i <= f.rank(); ++i) {
    Int cand = irreducible_hrep(rs, f, fundamental_weight(f.rank(), i)).real_dim;
    if (bound == 0 || cand < bound) bound = cand;
  }

  Int best = bound;
  std::set<HRepDescriptor> minimizers;
  enumerate_dominant_weights(rs, bound / 2, [&](const DominantWeight& lambda, const Int& dim) {
    if (lambda.is_zero()) return;
    RepClass c = classify_irrep(f, lambda);
    Int cand = c == RepClass::Quaternionic ? 2 * dim : 4 * dim;
    if (cand > best) return;
    HRepDescriptor desc = irreducible_hrep(rs, f, lambda);
    if (cand < best) {
      best = cand;
      minimizers.clear();
    }
    minimizers.insert(desc);
  });

  MinRepResult out;
  out.real_dim = best;
  out.minimizers.assign(minimizers.begin(), minimizers.end());
  return out;
}

}  // namespace quatrep

#endif  // QUATREP_MINREP_HPP_
