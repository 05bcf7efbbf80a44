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

#ifndef QUATREP_LABELS_HPP_
#define QUATREP_LABELS_HPP_

#include <vector>

#include "quatrep/root_system.hpp"

namespace quatrep {

// The library uses Bourbaki node numbering everywhere. The classification
// tables this project reproduces label the exceptional diagrams differently:
//   E6 : chain 1-2-3-4-5 with the branch node called 6   (Bourbaki 1-3-4-5-6, branch 2)
//   E7 : chain reversed, 1 is the 56-dim minuscule end   (Bourbaki 7)
//   E8 : chain reversed, 1 is the 248-dim adjoint end    (Bourbaki 8)
//   F4 : reversed, 1 is the 26-dim short end             (Bourbaki 4)
// Classical families and G2 agree with Bourbaki.
//
// table_label_to_bourbaki(t, i) maps a table label to the Bourbaki node and
// bourbaki_to_table_label inverts it. Both are 1-based.
inline int table_label_to_bourbaki(const LieType& t, int label) {
  switch (t.family) {
    case Family::E:
      if (t.rank == 6) {
        static constexpr int map6[7] = {0, 1, 3, 4, 5, 6, 2};
        return map6[label];
      }
      if (t.rank == 7) {
        static constexpr int map7[8] = {0, 7, 6, 5, 4, 3, 1, 2};
        return map7[label];
      }
      {
        static constexpr int map8[9] = {0, 8, 7, 6, 5, 4, 3, 1, 2};
        return map8[label];
      }
    case Family::F:
      return 5 - label;
    default:
      return label;
  }
}

inline int bourbaki_to_table_label(const LieType& t, int node) {
  for (int label = 1; label <= t.rank; ++label)
    if (table_label_to_bourbaki(t, label) == node) return label;
  throw std::invalid_argument("node out of range");
}

// Reorders weight coordinates given in table labels into Bourbaki order.
inline DominantWeight weight_from_table_labels(const LieType& t, const DominantWeight& w) {
  std::vector<std::int64_t> c(t.rank, 0);
  for (int label = 1; label <= t.rank; ++label) c[table_label_to_bourbaki(t, label) - 1] = w.coords[label - 1];
  return DominantWeight(std::move(c));
}

inline DominantWeight weight_to_table_labels(const LieType& t, const DominantWeight& w) {
  std::vector<std::int64_t> c(t.rank, 0);
  for (int label = 1; label <= t.rank; ++label) c[label - 1] = w.coords[table_label_to_bourbaki(t, label) - 1];
  return DominantWeight(std::move(c));
}

}  // namespace quatrep

#endif  // QUATREP_LABELS_HPP_
