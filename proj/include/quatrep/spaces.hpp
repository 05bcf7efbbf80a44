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
// Quaternion-Kahler symmetric spaces and the dimension-bound verdict engine.
// The necessary condition is dim_R(rho_min) <= dim(M) + 4; violating it rules
// an invariant integrable almost quaternionic structure out. The positive
// identifications (flat space, quaternionic hyperbolic and projective spaces)
// are curated model-geometry facts, not recomputed.

#ifndef QUATREP_SPACES_HPP_
#define QUATREP_SPACES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "quatrep/minrep.hpp"

namespace quatrep {

enum class CurvatureClass { Flat, Compact, NonCompact };

struct SymmetricSpace {
  std::string family_display;  // complex type, e.g. "A4"
  std::string g_name;          // canonical catalog name of g
  std::string g_display;       // spelling used by the classification table
  std::string k_display;
  std::string sigma_type;      // restricted-root type, display metadata only
  int dim = 0;                 // dim(G/K)
  int dim_k = 0;               // dim_R(k), including the center for the su rows
  CurvatureClass curvature = CurvatureClass::NonCompact;
  bool hyperbolic_model = false;  // quaternionic hyperbolic space H^n_H
  bool projective_model = false;  // quaternionic projective space P(H^{n+1})
};

enum class Outcome { Integrable, NotIntegrable, BoundSatisfiedKnownIntegrable, BoundSatisfiedUnresolved };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Integrable: return "Integrable";
    case Outcome::NotIntegrable: return "NotIntegrable";
    case Outcome::BoundSatisfiedKnownIntegrable: return "BoundSatisfiedKnownIntegrable";
    case Outcome::BoundSatisfiedUnresolved: return "BoundSatisfiedUnresolved";
  }
  return "?";
}

inline bool is_integrable(Outcome o) {
  return o == Outcome::Integrable || o == Outcome::BoundSatisfiedKnownIntegrable;
}

struct Verdict {
  Outcome outcome;
  Int bound_lhs = 0;  // dim_R(rho_min); 0 when no semisimple g applies (flat model)
  Int bound_rhs = 0;
  std::optional<MinRepResult> witness;
  bool dim4_warning = false;  // dimension-4 inputs are conformal, 4n >= 8 intended
  std::string detail;
};

// The unique non-compact quaternion-Kahler symmetric space for each simple
// complex type. Valid for A(n>=2), B(n>=2), C(n>=3), D(n>=4), E6/E7/E8, F4, G2.
inline SymmetricSpace qk_space_noncompact(const LieType& t) {
  validate(t);
  int n = t.rank;
  SymmetricSpace s;
  s.family_display = t.str();
  s.curvature = CurvatureClass::NonCompact;
  auto su_dim = [](int m) { return m * m - 1; };   // dim su(m)
  auto so_dim = [](int m) { return m * (m - 1) / 2; };
  auto sp_dim = [](int m) { return m * (2 * m + 1); };
  switch (t.family) {
    case Family::A: {
      if (n < 2) throw std::invalid_argument("no quaternion-Kahler symmetric space for A1");
      s.g_name = detail::make_su(n - 1, 2).name;
      s.g_display = "su(" + std::to_string(n - 1) + ",2)";
      s.k_display = "su(" + std::to_string(n - 1) + ")+su(2)";
      s.dim = 4 * (n - 1);
      s.dim_k = su_dim(n - 1) + 3 + 1;  // isotropy is s(u(n-1)+u(2)): paper's k column omits the center
      s.sigma_type = n == 2 ? "BC1" : (n == 3 ? "B2" : "BC2");
      break;
    }
    case Family::B: {
      if (n < 2) throw std::invalid_argument("no quaternion-Kahler symmetric space for B1");
      s.g_name = detail::make_so(2 * n - 3, 4).name;
      s.g_display = "so(" + std::to_string(2 * n - 3) + ",4)";
      s.k_display = "so(" + std::to_string(2 * n - 3) + ")+so(4)";
      s.dim = 4 * (2 * n - 3);
      s.dim_k = so_dim(2 * n - 3) + so_dim(4);
      s.sigma_type = n == 2 ? "A1" : (n == 3 ? "B3" : "B4");
      s.hyperbolic_model = n == 2;  // so(1,4) is the n = 1 hyperbolic space
      break;
    }
    case Family::C: {
      if (n < 3) throw std::invalid_argument("the C-family rows start at C3");
      s.g_name = detail::make_sp(n - 1, 1).name;
      s.g_display = "sp(" + std::to_string(n - 1) + ",1)";
      s.k_display = "sp(" + std::to_string(n - 1) + ")+sp(1)";
      s.dim = 4 * (n - 1);
      s.dim_k = sp_dim(n - 1) + sp_dim(1);
      s.sigma_type = "BC1";
      s.hyperbolic_model = true;
      break;
    }
    case Family::D: {
      if (n < 4) throw std::invalid_argument("the D-family rows start at D4");
      s.g_name = detail::make_so(2 * n - 4, 4).name;
      s.g_display = "so(" + std::to_string(2 * n - 4) + ",4)";
      s.k_display = "so(" + std::to_string(2 * n - 4) + ")+so(4)";
      s.dim = 4 * (2 * n - 4);
      s.dim_k = so_dim(2 * n - 4) + so_dim(4);
      s.sigma_type = n == 4 ? "D4" : "B4";
      break;
    }
    case Family::E:
      if (n == 6) s = {"E6", "e6(2)", "e6(2)", "su(6)+su(2)", "F4", 40, su_dim(6) + 3, CurvatureClass::NonCompact};
      if (n == 7) s = {"E7", "e7(-5)", "e7(-5)", "so(12)+su(2)", "F4", 64, so_dim(12) + 3, CurvatureClass::NonCompact};
      if (n == 8) s = {"E8", "e8(-24)", "e8(-24)", "e7+su(2)", "F4", 112, 133 + 3, CurvatureClass::NonCompact};
      break;
    case Family::F:
      s = {"F4", "f4(4)", "f4(4)", "sp(3)+su(2)", "F4", 28, sp_dim(3) + 3, CurvatureClass::NonCompact};
      break;
    case Family::G:
      s = {"G2", "g2(2)", "g2(2)", "su(2)+su(2)", "G2", 8, 3 + 3, CurvatureClass::NonCompact};
      break;
  }
  // The paper's B2 row is written with the signature reversed.
  if (t.family == Family::B && n == 2) s.g_display = "so(1,4)";
  if (t.family == Family::A && n == 2) s.g_display = "su(1,2)";
  return s;
}

inline SymmetricSpace compact_dual(const SymmetricSpace& nc) {
  SymmetricSpace s = nc;
  s.curvature = CurvatureClass::Compact;
  RealForm f = lookup_real_form(nc.g_name);
  LieType t = f.complex_type;
  switch (t.family) {
    case Family::A: s.g_name = "su(" + std::to_string(t.rank + 1) + ")"; break;
    case Family::B: s.g_name = "so(" + std::to_string(2 * t.rank + 1) + ")"; break;
    case Family::C: s.g_name = "sp(" + std::to_string(t.rank) + ")"; break;
    case Family::D: s.g_name = "so(" + std::to_string(2 * t.rank) + ")"; break;
    case Family::E: s.g_name = t.rank == 6 ? "e6(-78)" : (t.rank == 7 ? "e7(-133)" : "e8(-248)"); break;
    case Family::F: s.g_name = "f4(-52)"; break;
    case Family::G: s.g_name = "g2(-14)"; break;
  }
  s.g_display = s.g_name;
  s.hyperbolic_model = false;
  s.projective_model = nc.hyperbolic_model;  // duals of the hyperbolic rows are P(H^{n+1}) (and S^4 = P(H^2))
  return s;
}

inline SymmetricSpace flat_model(int dim) {
  SymmetricSpace s;
  s.family_display = "-";
  s.g_name = "flat";
  s.g_display = "H^" + std::to_string(dim / 4);
  s.k_display = "sp(" + std::to_string(dim / 4) + ")+sp(1)";
  s.sigma_type = "-";
  s.dim = dim;
  s.curvature = CurvatureClass::Flat;
  return s;
}

// Fixed rows of the non-compact classification (parameterized families at
// their smallest ranks), in table order.
inline std::vector<SymmetricSpace> table1_fixed_spaces() {
  std::vector<SymmetricSpace> rows;
  for (int n : {2, 3, 4}) rows.push_back(qk_space_noncompact({Family::A, n}));
  for (int n : {2, 3, 4}) rows.push_back(qk_space_noncompact({Family::B, n}));
  rows.push_back(qk_space_noncompact({Family::C, 3}));
  for (int n : {4, 5, 6}) rows.push_back(qk_space_noncompact({Family::D, n}));
  for (int n : {6, 7, 8}) rows.push_back(qk_space_noncompact({Family::E, n}));
  rows.push_back(qk_space_noncompact({Family::F, 4}));
  rows.push_back(qk_space_noncompact({Family::G, 2}));
  return rows;
}

// Flat model, fixed non-compact rows, and their compact duals.
inline std::vector<SymmetricSpace> qk_catalog() {
  std::vector<SymmetricSpace> all;
  all.push_back(flat_model(4));
  for (const auto& s : table1_fixed_spaces()) {
    all.push_back(s);
    all.push_back(compact_dual(s));
  }
  return all;
}

// Resolves a real-form name to its catalog symmetric space, if the form is
// the isometry algebra of one (non-compact rows by g, compact rows by the
// compact form's name).
inline std::optional<SymmetricSpace> qk_space_for_form(const std::string& name) {
  RealForm f = lookup_real_form(name);
  LieType t = f.complex_type;
  bool family_ok = !(t.family == Family::A && t.rank < 2) && !(t.family == Family::B && t.rank < 2) &&
                   !(t.family == Family::C && t.rank < 3) && !(t.family == Family::D && t.rank < 4);
  if (!family_ok) return std::nullopt;
  SymmetricSpace nc = qk_space_noncompact(t);
  if (nc.g_name == f.name) return nc;
  SymmetricSpace cd = compact_dual(nc);
  if (cd.g_name == f.name) return cd;
  return std::nullopt;
}

// The necessary condition: dim_R(rho_min) <= manifold_dim + 4. rho_min is
// recomputed from the search on every call; the classification tables are
// never consulted here.
inline Verdict check_bound(const RealForm& f, int manifold_dim) {
  if (manifold_dim < 4 || manifold_dim % 4 != 0)
    throw std::invalid_argument("manifold dimension must be a positive multiple of 4, got " + std::to_string(manifold_dim));
  Verdict v;
  MinRepResult mr = minimal_quaternionic_rep(f);
  v.bound_lhs = mr.real_dim;
  v.bound_rhs = manifold_dim + 4;
  v.witness = std::move(mr);
  v.dim4_warning = manifold_dim == 4;
  if (v.bound_lhs > v.bound_rhs) {
    v.outcome = Outcome::NotIntegrable;
    v.detail = "minimal quaternionic representation needs " + v.bound_lhs.str() + " > " + v.bound_rhs.str() + " real dimensions";
  } else {
    v.outcome = Outcome::BoundSatisfiedUnresolved;
    v.detail = "necessary condition holds: " + v.bound_lhs.str() + " <= " + v.bound_rhs.str();
  }
  return v;
}

inline Verdict check_qk_symmetric(const SymmetricSpace& s) {
  Verdict v;
  switch (s.curvature) {
    case CurvatureClass::Flat:
      v.outcome = Outcome::Integrable;
      v.bound_rhs = s.dim + 4;
      v.detail = "flat model: quaternionic vector space";
      break;
    case CurvatureClass::Compact: {
      v = check_bound(lookup_real_form(s.g_name), s.dim);
      if (s.projective_model) {
        v.outcome = Outcome::Integrable;
        v.detail = "quaternionic projective space";
      } else {
        v.outcome = Outcome::NotIntegrable;
        v.detail = "compact and not quaternionic projective space" +
                   (v.bound_lhs > v.bound_rhs ? "; the dimension bound fails independently (" + v.bound_lhs.str() + " > " + v.bound_rhs.str() + ")" : std::string());
      }
      break;
    }
    case CurvatureClass::NonCompact:
      v = check_bound(lookup_real_form(s.g_name), s.dim);
      if (v.outcome == Outcome::BoundSatisfiedUnresolved && s.hyperbolic_model) {
        v.outcome = Outcome::BoundSatisfiedKnownIntegrable;
        v.detail += "; quaternionic hyperbolic space model";
      }
      break;
  }
  v.dim4_warning = s.dim == 4;
  return v;
}

// Transitive actions of exceptional types other than E7: the manifold
// dimension is at most dim_R(g), so dim_R(rho_min) <= dim_R(g) + 4 is
// necessary.
inline Verdict check_exceptional_transitive(const RealForm& f) {
  LieType t = f.complex_type;
  bool ok = (t.family == Family::E && (t.rank == 6 || t.rank == 8)) || t.family == Family::F || t.family == Family::G;
  if (!ok) throw std::invalid_argument("check_exceptional_transitive applies to real forms of E6, E8, F4, G2; got " + f.name + " (" + t.str() + ")");
  Verdict v;
  MinRepResult mr = minimal_quaternionic_rep(f);
  v.bound_lhs = mr.real_dim;
  v.bound_rhs = algebra_real_dim(t) + 4;
  v.witness = std::move(mr);
  if (v.bound_lhs > v.bound_rhs) {
    v.outcome = Outcome::NotIntegrable;
    v.detail = "no transitive action on an integrable quaternionic manifold: " + v.bound_lhs.str() + " > dim_R(g)+4 = " + v.bound_rhs.str();
  } else {
    v.outcome = Outcome::BoundSatisfiedUnresolved;
    v.detail = "dimension bound inconclusive";
  }
  return v;
}

// Affine symmetric spaces G/H for real forms of E7. For g = e7(-5) the
// admissible Berger subalgebras h are checked against
// 112 <= 133 - dim_R(h) + 4; the Riemannian pair defers to the symmetric
// space verdict. e7(7) / e7(-25) fail the bound for every h, and e7(-133)
// only carries Riemannian spaces.
inline Verdict check_affine_e7(const std::string& h_name) {
  std::string s;
  for (char c : h_name)
    if (!isspace(static_cast<unsigned char>(c))) s += c;

  static const std::vector<std::string> berger = {
      "so(12)+sp(1)", "e6(-14)+R", "so(8,4)+su(2)", "su(4,4)", "su(6,2)", "e6(2)+R", "so*(12)+sl(2,R)"};

  if (s == "e7(-133)") {
    Verdict v;
    MinRepResult mr = minimal_quaternionic_rep(lookup_real_form("e7(-133)"));
    v.bound_lhs = mr.real_dim;
    v.bound_rhs = algebra_real_dim({Family::E, 7}) + 4;
    v.witness = std::move(mr);
    v.outcome = Outcome::NotIntegrable;
    v.detail = "compact form: every affine symmetric space is Riemannian and none is quaternionic projective space";
    return v;
  }
  if (s == "e7(7)" || s == "e7(-25)") {
    Verdict v;
    MinRepResult mr = minimal_quaternionic_rep(lookup_real_form(s));
    v.bound_lhs = mr.real_dim;
    v.bound_rhs = algebra_real_dim({Family::E, 7}) + 4;  // h = 0 already fails
    v.witness = std::move(mr);
    v.outcome = Outcome::NotIntegrable;
    v.detail = v.bound_lhs.str() + " > 133 - dim_R(h) + 4 for every subalgebra h (" + v.bound_rhs.str() + " at h = 0)";
    return v;
  }
  if (std::find(berger.begin(), berger.end(), s) == berger.end()) {
    std::string all;
    for (const auto& b : berger) all += (all.empty() ? "" : ", ") + b;
    throw std::invalid_argument("unknown e7(-5) Berger subalgebra '" + h_name + "'; expected one of: " + all + ", or e7(7), e7(-25), e7(-133)");
  }
  if (s == "so(12)+sp(1)") {
    Verdict v = check_qk_symmetric(qk_space_noncompact({Family::E, 7}));
    v.detail = "Riemannian symmetric pair; deferred to the symmetric-space verdict: " + v.detail;
    return v;
  }

  int dim_h = 0;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, '+'))
    dim_h += part == "R" ? 1 : static_cast<int>(algebra_real_dim(lookup_real_form(part).complex_type));

  Verdict v;
  MinRepResult mr = minimal_quaternionic_rep(lookup_real_form("e7(-5)"));
  v.bound_lhs = mr.real_dim;
  v.bound_rhs = 133 - dim_h + 4;
  v.witness = std::move(mr);
  if (v.bound_lhs > v.bound_rhs) {
    v.outcome = Outcome::NotIntegrable;
    v.detail = v.bound_lhs.str() + " > 133 - " + std::to_string(dim_h) + " + 4 = " + v.bound_rhs.str();
  } else {
    v.outcome = Outcome::BoundSatisfiedUnresolved;
    v.detail = "dimension bound inconclusive";
  }
  return v;
}

}  // namespace quatrep

#endif  // QUATREP_SPACES_HPP_
