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

#ifndef QUATREP_ROOT_SYSTEM_HPP_
#define QUATREP_ROOT_SYSTEM_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quatrep {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple complex Lie algebra type, e.g. E7 or B4. Node numbering follows
// Bourbaki throughout the library (see labels.hpp for the translation used by
// --paper-labels).
struct LieType {
  Family family;
  int rank;

  std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
  bool operator==(const LieType&) const = default;
};

inline void validate(const LieType& t) {
  if (t.rank < 1) throw std::invalid_argument("rank must be >= 1, got " + t.str());
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
      return;
    case Family::D:
      if (t.rank < 3) throw std::invalid_argument("D requires rank >= 3, got " + t.str());
      return;
    case Family::E:
      if (t.rank < 6 || t.rank > 8) throw std::invalid_argument("E requires rank in {6,7,8}, got " + t.str());
      return;
    case Family::F:
      if (t.rank != 4) throw std::invalid_argument("F requires rank 4, got " + t.str());
      return;
    case Family::G:
      if (t.rank != 2) throw std::invalid_argument("G requires rank 2, got " + t.str());
      return;
  }
  throw std::invalid_argument("unknown family");
}

inline LieType parse_lie_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("cannot parse Lie type '" + s + "'");
  char f = s[0];
  if (f < 'A' || f > 'G') throw std::invalid_argument("unknown family letter '" + std::string(1, f) + "' in '" + s + "'");
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad rank token '" + s.substr(1) + "' in '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 64) throw std::invalid_argument("rank out of range in '" + s + "'");
  }
  LieType t{static_cast<Family>(f), rank};
  validate(t);
  return t;
}

// Highest weight in fundamental-weight coordinates; coords[i] belongs to
// node i+1.
struct DominantWeight {
  std::vector<std::int64_t> coords;

  DominantWeight() = default;
  explicit DominantWeight(std::vector<std::int64_t> c) : coords(std::move(c)) {
    for (auto v : coords)
      if (v < 0) throw std::invalid_argument("dominant weight coordinates must be nonnegative");
  }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t v) { return v == 0; });
  }
  bool operator==(const DominantWeight&) const = default;
  bool operator<(const DominantWeight& o) const { return coords < o.coords; }

  std::string str() const {
    std::string out = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(coords[i]);
    }
    return out + ")";
  }
};

inline DominantWeight fundamental_weight(int rank, int node) {
  std::vector<std::int64_t> c(rank, 0);
  c[node - 1] = 1;
  return DominantWeight(std::move(c));
}

// Root datum of a simple type: Cartan matrix, symmetrizer and the positive
// roots in simple-root coordinates, generated by closure rather than
// hard-coded per family.
class RootSystem {
 public:
  LieType lie_type;
  std::vector<std::vector<int>> cartan;      // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::int64_t> symmetrizer;     // d_i, integer-scaled, d_i*cartan[i][j] symmetric
  std::vector<std::vector<int>> positive_roots;  // coordinates over simple roots

  int rank() const { return lie_type.rank; }

  Int num_positive_roots() const { return Int(positive_roots.size()); }

  // dim_C of the algebra = dim_R of any real form.
  Int algebra_dim() const { return Int(2 * positive_roots.size() + rank()); }

  // Product formula over positive roots, exact integer arithmetic.
  Int weyl_dim(const DominantWeight& lambda) const {
    if (lambda.rank() != rank())
      throw std::invalid_argument("weight has " + std::to_string(lambda.rank()) + " coordinates, expected " + std::to_string(rank()));
    Int num = 1, den = 1;
    for (const auto& root : positive_roots) {
      std::int64_t n = 0, d = 0;
      for (int j = 0; j < rank(); ++j) {
        std::int64_t w = static_cast<std::int64_t>(root[j]) * symmetrizer[j];
        n += w * (lambda.coords[j] + 1);
        d += w;
      }
      num *= n;
      den *= d;
    }
    Int q = num / den;
    if (q * den != num) throw std::logic_error("Weyl dimension product did not divide exactly");
    return q;
  }

  // Nontrivial diagram involution (A_n reversal, D_n fork swap, E6 flip);
  // identity elsewhere. 1-based node in, 1-based node out.
  int diagram_flip(int node) const {
    int n = rank();
    switch (lie_type.family) {
      case Family::A:
        return n + 1 - node;
      case Family::D:
        if (node == n - 1) return n;
        if (node == n) return n - 1;
        return node;
      case Family::E:
        if (n == 6) {
          static constexpr int flip[7] = {0, 6, 2, 5, 4, 3, 1};
          return flip[node];
        }
        return node;
      default:
        return node;
    }
  }

  DominantWeight apply_diagram_flip(const DominantWeight& w) const {
    std::vector<std::int64_t> c(rank());
    for (int i = 1; i <= rank(); ++i) c[diagram_flip(i) - 1] = w.coords[i - 1];
    return DominantWeight(std::move(c));
  }
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(const LieType& t) {
  int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };  // 0-based
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      if (n >= 2) a[n - 1][n - 2] = -2;  // short coroot row
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      if (n >= 2) a[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
      chain(0, 2);
      chain(2, 3);
      chain(3, 4);
      chain(4, 5);
      if (n >= 7) chain(5, 6);
      if (n >= 8) chain(6, 7);
      chain(1, 3);
      break;
    case Family::F:
      chain(0, 1);
      chain(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case Family::G:
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

inline std::vector<std::int64_t> symmetrizer(const LieType& t) {
  int n = t.rank;
  std::vector<std::int64_t> d(n, 1);
  switch (t.family) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C:
      d[n - 1] = 2;
      break;
    case Family::F:
      d[0] = d[1] = 2;
      break;
    case Family::G:
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

}  // namespace detail

inline RootSystem build_root_system(const LieType& t) {
  validate(t);
  RootSystem rs;
  rs.lie_type = t;
  rs.cartan = detail::cartan_matrix(t);
  rs.symmetrizer = detail::symmetrizer(t);

  int n = t.rank;
  // Closure by root strings: alpha + alpha_i is a root iff
  // p - <alpha, alpha_i^vee> >= 1, where p is the string depth below alpha.
  std::map<std::vector<int>, int> seen;  // root -> height
  std::vector<std::vector<int>> level;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.emplace(e, 1);
    level.push_back(e);
  }
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& root : level) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += rs.cartan[i][j] * root[j];
        int p = 0;
        std::vector<int> down = root;
        while (true) {
          down[i] -= 1;
          bool nonneg = std::all_of(down.begin(), down.end(), [](int v) { return v >= 0; });
          if (!nonneg || !seen.count(down)) break;
          ++p;
        }
        if (p - pairing >= 1) {
          std::vector<int> up = root;
          up[i] += 1;
          if (seen.emplace(up, 0).second) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
  rs.positive_roots.reserve(seen.size());
  for (auto& [root, h] : seen) rs.positive_roots.push_back(root);
  return rs;
}

inline RootSystem build_root_system(const std::string& type) { return build_root_system(parse_lie_type(type)); }

inline Int weyl_dim(const RootSystem& rs, const DominantWeight& lambda) { return rs.weyl_dim(lambda); }

inline Int algebra_real_dim(const LieType& t) { return build_root_system(t).algebra_dim(); }

// Visits every dominant weight (including zero) with weyl_dim <= max_dim,
// in lexicographic order. Relies on strict monotonicity of weyl_dim in each
// coordinate for pruning.
inline void enumerate_dominant_weights(const RootSystem& rs, const Int& max_dim,
                                       const std::function<void(const DominantWeight&, const Int&)>& visit) {
  int n = rs.rank();
  std::vector<std::int64_t> coords(n, 0);
  std::function<void(int)> rec = [&](int i) {
    for (std::int64_t v = 0;; ++v) {
      coords[i] = v;
      DominantWeight w(coords);
      Int d = rs.weyl_dim(w);
      if (d > max_dim) {
        coords[i] = 0;
        return;
      }
      if (i + 1 == n)
        visit(w, d);
      else
        rec(i + 1);
    }
  };
  if (n > 0 && !(rs.weyl_dim(DominantWeight(coords)) > max_dim)) rec(0);
}

}  // namespace quatrep

#endif  // QUATREP_ROOT_SYSTEM_HPP_
