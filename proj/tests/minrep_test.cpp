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

#include "quatrep/minrep.hpp"

#include "gtest/gtest.h"

using namespace quatrep;

namespace {

using Kind = HRepDescriptor::Kind;

MinRepResult run(const std::string& name) { return minimal_quaternionic_rep(lookup_real_form(name)); }

std::vector<DominantWeight> weights_of(const MinRepResult& r) {
  std::vector<DominantWeight> w;
  for (const auto& d : r.minimizers) w.push_back(d.weight);
  return w;
}

TEST(MinRepTest, PaperExamples) {
  {
    auto r = run("su(3,1)");
    EXPECT_EQ(r.real_dim, 12);
    ASSERT_EQ(r.minimizers.size(), 1u);
    EXPECT_EQ(r.minimizers[0].kind, Kind::QuaternionicIrreducible);
    EXPECT_EQ(r.minimizers[0].weight, DominantWeight({0, 1, 0}));
  }
  {
    auto r = run("sl_2(H)");
    EXPECT_EQ(r.real_dim, 8);
    // Minimizers come back in lexicographic weight order.
    EXPECT_EQ(weights_of(r), (std::vector<DominantWeight>{DominantWeight{{0, 0, 1}}, DominantWeight{{1, 0, 0}}}));
  }
  {
    auto r = run("e7(-5)");
    EXPECT_EQ(r.real_dim, 112);
    ASSERT_EQ(r.minimizers.size(), 1u);
    EXPECT_EQ(r.minimizers[0].kind, Kind::QuaternionicIrreducible);
    EXPECT_EQ(r.minimizers[0].weight, DominantWeight({0, 0, 0, 0, 0, 0, 1}));
  }
  {
    auto r = run("g2(2)");
    EXPECT_EQ(r.real_dim, 28);
    ASSERT_EQ(r.minimizers.size(), 1u);
    EXPECT_EQ(r.minimizers[0].kind, Kind::DoubledIrreducible);
    EXPECT_EQ(r.minimizers[0].weight, DominantWeight({1, 0}));
  }
  {
    auto r = run("sp(2,1)");
    EXPECT_EQ(r.real_dim, 12);
    ASSERT_EQ(r.minimizers.size(), 1u);
    EXPECT_EQ(r.minimizers[0].weight, DominantWeight({1, 0, 0}));
  }
  {
    auto r = run("so(6,2)");
    EXPECT_EQ(r.real_dim, 16);
    EXPECT_EQ(weights_of(r), (std::vector<DominantWeight>{DominantWeight{{0, 0, 0, 1}}, DominantWeight{{0, 0, 1, 0}}}));
  }
  {
    auto r = run("su(2)");
    EXPECT_EQ(r.real_dim, 4);
  }
  {
    auto r = run("sl(2,R)");
    EXPECT_EQ(r.real_dim, 8);
    EXPECT_EQ(r.minimizers[0].kind, Kind::DoubledIrreducible);
  }
  {
    auto r = run("e8(-24)");
    EXPECT_EQ(r.real_dim, 992);
  }
}

TEST(MinRepTest, TriailtyCoincidencesAgreeOnDimension) {
  EXPECT_EQ(run("so(5)").real_dim, run("sp(2)").real_dim);
  EXPECT_EQ(run("so*(8)").real_dim, run("so(6,2)").real_dim);
  EXPECT_EQ(run("so*(6)").real_dim, run("su(3,1)").real_dim);
  EXPECT_EQ(run("so(3)").real_dim, run("su(2)").real_dim);
  EXPECT_EQ(run("so(2,1)").real_dim, run("sl(2,R)").real_dim);
  EXPECT_EQ(run("so(3,3)").real_dim, run("sl(4,R)").real_dim);
  EXPECT_EQ(run("so(3,2)").real_dim, run("sp(2,R)").real_dim);
}

TEST(MinRepTest, QEmptyInnerFormsDoubleTheSmallestIrrep) {
  for (const char* name : {"sl(3,R)", "g2(2)", "f4(4)", "e6(-26)", "sp(2,R)", "so(5,4)"}) {
    RealForm f = lookup_real_form(name);
    ASSERT_TRUE(f.q_set.empty() && f.involution_is_identity()) << name;
    auto r = run(name);
    for (const auto& m : r.minimizers) EXPECT_EQ(m.kind, Kind::DoubledIrreducible) << name;
    // 4 * smallest nontrivial dimension.
    RootSystem rs = build_root_system(f.complex_type);
    Int smallest = 0;
    enumerate_dominant_weights(rs, r.real_dim / 2, [&](const DominantWeight& w, const Int& d) {
      if (!w.is_zero() && (smallest == 0 || d < smallest)) smallest = d;
    });
    EXPECT_EQ(r.real_dim, 4 * smallest) << name;
  }
}

TEST(MinRepTest, DimensionAlwaysDivisibleByFour) {
  for (const auto& name : catalog_forms_up_to_rank(4)) EXPECT_EQ(run(name).real_dim % 4, 0) << name;
}

TEST(MinRepTest, BruteForceCertificateSmallRanks) {
  // Independent of the pruning search: enumerate everything below the
  // claimed optimum and confirm nothing beats it.
  for (const auto& name : catalog_forms_up_to_rank(3)) {
    RealForm f = lookup_real_form(name);
    auto r = run(name);
    RootSystem rs = build_root_system(f.complex_type);
    Int best = 0;
    enumerate_dominant_weights(rs, r.real_dim / 2, [&](const DominantWeight& w, const Int& d) {
      if (w.is_zero()) return;
      Int cand = classify_irrep(f, w) == RepClass::Quaternionic ? 2 * d : 4 * d;
      if (best == 0 || cand < best) best = cand;
    });
    EXPECT_EQ(best, r.real_dim) << name;
  }
}

TEST(MinRepTest, So44HasThreeMinimizersByTriality) {
  auto r = run("so(4,4)");
  EXPECT_EQ(r.real_dim, 32);
  EXPECT_EQ(r.minimizers.size(), 3u);
}

}  // namespace
