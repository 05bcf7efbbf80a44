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
// Dimension oracle based on Freudenthal's multiplicity recursion. It exists
// to cross-check weyl_dim without the product formula, hence the scale guard:
// it validates, it does not compute.

#ifndef QUATREP_FREUDENTHAL_HPP_
#define QUATREP_FREUDENTHAL_HPP_

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "quatrep/root_system.hpp"

namespace quatrep {

namespace detail {

// Inverse of the Cartan matrix, exact. Entries are nonnegative for finite type.
inline std::vector<std::vector<Rat>> cartan_inverse(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = rs.cartan[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(m[col], m[pivot]);
    Rat p = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace detail

// Weight multiplicities of the irreducible module with highest weight lambda,
// keyed by dominant weight. Guarded to rank <= 4 and dimension <= 10^4.
inline std::map<std::vector<std::int64_t>, std::int64_t> freudenthal_multiplicities(const RootSystem& rs,
                                                                                    const DominantWeight& lambda) {
  if (rs.rank() > 4) throw std::invalid_argument("Freudenthal oracle is guarded to rank <= 4, got " + rs.lie_type.str());
  if (lambda.rank() != rs.rank())
    throw std::invalid_argument("weight has " + std::to_string(lambda.rank()) + " coordinates, expected " + std::to_string(rs.rank()));
  if (rs.weyl_dim(lambda) > 10000) throw std::invalid_argument("Freudenthal oracle is guarded to dimension <= 10^4");

  const int n = rs.rank();
  const auto inv = detail::cartan_inverse(rs);

  // Integer-scaled invariant form on weight coordinates: L * D * A^{-1}.
  std::int64_t scale = 1;
  for (const auto& row : inv)
    for (const auto& e : row) scale = std::lcm(scale, static_cast<std::int64_t>(boost::multiprecision::denominator(e)));
  std::vector<std::vector<std::int64_t>> gram(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat g = Rat(scale) * Rat(rs.symmetrizer[i]) * inv[i][j];
      if (boost::multiprecision::denominator(g) != 1) throw std::logic_error("Gram scaling failed");
      gram[i][j] = static_cast<std::int64_t>(boost::multiprecision::numerator(g));
    }
  auto form = [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += gram[i][j] * x[i] * y[j];
    return s;
  };
  // (x, alpha) for a positive root in simple-root coordinates, same scaling.
  auto root_form = [&](const std::vector<std::int64_t>& x, const std::vector<int>& root) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += scale * root[j] * rs.symmetrizer[j] * x[j];
    return s;
  };

  // All dominant weights mu with lambda - mu in the nonnegative root span.
  // Coordinates of lambda - mu over simple roots are bounded by A^{-1} lambda.
  std::vector<std::int64_t> cap(n);
  for (int i = 0; i < n; ++i) {
    Rat c = 0;
    for (int j = 0; j < n; ++j) c += inv[i][j] * lambda.coords[j];
    cap[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(c) / boost::multiprecision::denominator(c));
  }
  struct Entry {
    std::vector<std::int64_t> mu;
    std::int64_t depth;
  };
  std::vector<Entry> table;
  std::vector<std::int64_t> c(n, 0);
  std::function<void(int)> collect = [&](int i) {
    if (i == n) {
      std::vector<std::int64_t> mu(lambda.coords);
      std::int64_t depth = 0;
      for (int k = 0; k < n; ++k) {
        depth += c[k];
        for (int r = 0; r < n; ++r) mu[r] -= rs.cartan[r][k] * c[k];
      }
      if (std::all_of(mu.begin(), mu.end(), [](std::int64_t v) { return v >= 0; })) table.push_back({mu, depth});
      return;
    }
    for (c[i] = 0; c[i] <= cap[i]; ++c[i]) collect(i + 1);
    c[i] = 0;
  };
  collect(0);
  std::sort(table.begin(), table.end(), [](const Entry& a, const Entry& b) {
    return a.depth != b.depth ? a.depth < b.depth : a.mu < b.mu;
  });

  auto dominantize = [&](std::vector<std::int64_t> x) {
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 0; i < n; ++i) {
        if (x[i] < 0) {
          std::int64_t xi = x[i];
          for (int k = 0; k < n; ++k) x[k] -= xi * rs.cartan[k][i];
          moved = true;
        }
      }
    }
    return x;
  };

  std::map<std::vector<std::int64_t>, std::int64_t> mult;
  auto shifted_norm = [&](const std::vector<std::int64_t>& x) {
    std::vector<std::int64_t> y(n);
    for (int i = 0; i < n; ++i) y[i] = x[i] + 1;
    return form(y, y);
  };
  const std::int64_t top = shifted_norm(lambda.coords);
  for (const auto& entry : table) {
    if (entry.depth == 0) {
      mult[entry.mu] = 1;
      continue;
    }
    std::int64_t rhs = 0;
    for (const auto& root : rs.positive_roots) {
      std::vector<std::int64_t> root_w(n);  // root in weight coordinates
      for (int r = 0; r < n; ++r) {
        root_w[r] = 0;
        for (int k = 0; k < n; ++k) root_w[r] += rs.cartan[r][k] * root[k];
      }
      std::vector<std::int64_t> nu = entry.mu;
      for (std::int64_t k = 1;; ++k) {
        for (int r = 0; r < n; ++r) nu[r] += root_w[r];
        auto it = mult.find(dominantize(nu));
        if (it == mult.end()) break;  // weight strings are contiguous
        rhs += it->second * root_form(nu, root);
      }
    }
    std::int64_t denom = top - shifted_norm(entry.mu);
    if (denom <= 0 || (2 * rhs) % denom != 0) throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
    mult[entry.mu] = 2 * rhs / denom;
  }
  return mult;
}

// Size of the Weyl orbit of a dominant weight, by reflection closure.
inline std::int64_t weyl_orbit_size(const RootSystem& rs, const std::vector<std::int64_t>& mu) {
  int n = rs.rank();
  std::set<std::vector<std::int64_t>> orbit{mu};
  std::vector<std::vector<std::int64_t>> frontier{mu};
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& x : frontier) {
      for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        std::vector<std::int64_t> y = x;
        for (int k = 0; k < n; ++k) y[k] -= x[i] * rs.cartan[k][i];
        if (orbit.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return static_cast<std::int64_t>(orbit.size());
}

// Same integer as weyl_dim, computed as the sum of Freudenthal multiplicities
// over Weyl orbits of dominant weights.
inline Int freudenthal_dim(const RootSystem& rs, const DominantWeight& lambda) {
  auto mult = freudenthal_multiplicities(rs, lambda);
  Int total = 0;
  for (const auto& [mu, m] : mult) total += Int(m) * weyl_orbit_size(rs, mu);
  return total;
}

}  // namespace quatrep

#endif  // QUATREP_FREUDENTHAL_HPP_
