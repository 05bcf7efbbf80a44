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
// Desk-scale antiinvolution witnesses: explicit rational matrices realizing
// J with J^2 = +1 (first kind) or -1 (second kind) that commute with a
// concrete representation of a small real form. Complex n-space is realified
// to R^{2n}, so an antilinear J becomes a real matrix anticommuting with the
// scalar-i action. The J construction on V + conj(V) is
//   first kind:  (v1, v2) -> (v2, v1)
//   second kind: (v1, v2) -> (-v2, v1)
// and for irreducible weights of su(2) a weight-basis ladder J.

#ifndef QUATREP_WITNESS_HPP_
#define QUATREP_WITNESS_HPP_

#include <string>
#include <vector>

#include "quatrep/classify.hpp"

namespace quatrep {

struct RatMat {
  int n = 0;  // square
  std::vector<Rat> a;

  RatMat() = default;
  explicit RatMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, Rat(0)) {}
  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static RatMat identity(int n) {
    RatMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  RatMat operator*(const RatMat& o) const {
    RatMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (at(i, k) == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }
  RatMat operator-() const {
    RatMat r(n);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = -a[i];
    return r;
  }
  bool operator==(const RatMat&) const = default;
};

// Complex matrix with exact rational entries, as a (re, im) pair.
struct CMat {
  RatMat re, im;
  explicit CMat(int n = 0) : re(n), im(n) {}
  int n() const { return re.n; }
  CMat conj() const {
    CMat c = *this;
    c.im = -c.im;
    return c;
  }
  CMat transpose_neg() const {  // X -> -X^T, the dual representation
    CMat c(n());
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j) {
        c.re.at(i, j) = -re.at(j, i);
        c.im.at(i, j) = -im.at(j, i);
      }
    return c;
  }
};

// C^n -> R^{2n}: a C-linear map M becomes [[Re,-Im],[Im,Re]].
inline RatMat realify(const CMat& m) {
  int n = m.n();
  RatMat r(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.at(i, j) = m.re.at(i, j);
      r.at(i, j + n) = -m.im.at(i, j);
      r.at(i + n, j) = m.im.at(i, j);
      r.at(i + n, j + n) = m.re.at(i, j);
    }
  return r;
}

// An antilinear map v -> M * conj(v) becomes [[Re,Im],[Im,-Re]].
inline RatMat realify_antilinear(const CMat& m) {
  int n = m.n();
  RatMat r(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.at(i, j) = m.re.at(i, j);
      r.at(i, j + n) = m.im.at(i, j);
      r.at(i + n, j) = m.im.at(i, j);
      r.at(i + n, j + n) = -m.re.at(i, j);
    }
  return r;
}

inline RatMat scalar_i_action(int complex_dim) {
  CMat i_mat(complex_dim);
  for (int k = 0; k < complex_dim; ++k) i_mat.im.at(k, k) = 1;
  return realify(i_mat);
}

enum class WitnessKind { FirstKind, SecondKind };
enum class WitnessShape { Irreducible, Doubled };

struct AntiinvolutionWitness {
  std::vector<RatMat> rep_matrices;  // realified images of a real basis of g
  RatMat j_matrix;
  RatMat i_matrix;  // realified multiplication by i
  WitnessKind kind;
  WitnessShape shape;
  std::string note;

  // The three defining identities, checked exactly.
  bool j_squares_correctly() const {
    RatMat sq = j_matrix * j_matrix;
    RatMat expect = RatMat::identity(j_matrix.n);
    if (kind == WitnessKind::SecondKind) expect = -expect;
    return sq == expect;
  }
  bool j_anticommutes_with_i() const { return j_matrix * i_matrix == -(i_matrix * j_matrix); }
  bool j_commutes_with_rep() const {
    for (const auto& m : rep_matrices)
      if (!(j_matrix * m == m * j_matrix)) return false;
    return true;
  }
  bool valid() const { return j_squares_correctly() && j_anticommutes_with_i() && j_commutes_with_rep(); }
};

namespace detail {

// Weight-basis matrices of the (m+1)-dimensional irreducible of A1:
// H v_k = (m-2k) v_k, F v_k = v_{k+1}, E v_k = k(m-k+1) v_{k-1}.
inline void sl2_ladder(int m, CMat& h, CMat& e, CMat& f) {
  int d = m + 1;
  h = CMat(d);
  e = CMat(d);
  f = CMat(d);
  for (int k = 0; k <= m; ++k) {
    h.re.at(k, k) = m - 2 * k;
    if (k >= 1) e.re.at(k - 1, k) = Rat(k) * Rat(m - k + 1);
    if (k + 1 <= m) f.re.at(k + 1, k) = 1;
  }
}

inline CMat times_i(const CMat& m) {
  CMat r(m.n());
  r.re = -m.im;
  r.im = m.re;
  return r;
}

inline CMat sum(const CMat& a, const CMat& b, int sign_b) {
  CMat r(a.n());
  for (size_t i = 0; i < r.re.a.size(); ++i) {
    r.re.a[i] = a.re.a[i] + sign_b * b.re.a[i];
    r.im.a[i] = a.im.a[i] + sign_b * b.im.a[i];
  }
  return r;
}

// Complex images of a real basis of the form on its defining module.
inline std::vector<CMat> defining_basis(const RealForm& f, std::string& note) {
  if (f.name == "su(2)" || f.name == "sl(2,R)" || f.name == "su(1,1)") {
    CMat h, e, fm;
    sl2_ladder(1, h, e, fm);
    if (f.name == "sl(2,R)") {
      note = "basis {H, E, F} of sl(2,R)";
      return {h, e, fm};
    }
    note = "basis {iH, E-F, i(E+F)} of su(2)";
    if (f.name == "su(1,1)") note = "basis {iH, E+F, i(E-F)} of su(1,1)";
    if (f.name == "su(1,1)") return {times_i(h), sum(e, fm, +1), times_i(sum(e, fm, -1))};
    return {times_i(h), sum(e, fm, -1), times_i(sum(e, fm, +1))};
  }
  if (f.name == "sl(3,R)") {
    note = "elementary-matrix basis of sl(3,R)";
    std::vector<CMat> basis;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        if (k == l) continue;
        CMat m(3);
        m.re.at(k, l) = 1;
        basis.push_back(m);
      }
    for (int k = 0; k < 2; ++k) {
      CMat m(3);
      m.re.at(k, k) = 1;
      m.re.at(k + 1, k + 1) = -1;
      basis.push_back(m);
    }
    return basis;
  }
  if (f.name == "su(3)" || f.name == "su(2,1)") {
    int p = f.name == "su(3)" ? 3 : 2;
    note = "anti-Hermitian basis of " + f.name + " for the form diag(1_" + std::to_string(p) + ", -1_" + std::to_string(3 - p) + ")";
    auto s = [&](int k) { return k < p ? 1 : -1; };
    std::vector<CMat> basis;
    for (int k = 0; k < 3; ++k)
      for (int l = k + 1; l < 3; ++l) {
        CMat a(3), b(3);
        a.re.at(k, l) = 1;
        a.re.at(l, k) = -s(k) * s(l);
        b.im.at(k, l) = 1;
        b.im.at(l, k) = s(k) * s(l);
        basis.push_back(a);
        basis.push_back(b);
      }
    for (int k = 0; k < 2; ++k) {
      CMat m(3);
      m.im.at(k, k) = 1;
      m.im.at(k + 1, k + 1) = -1;
      basis.push_back(m);
    }
    return basis;
  }
  throw std::invalid_argument("witness construction supports the A1 forms su(2), sl(2,R), su(1,1) and the A2 defining weights of sl(3,R), su(3), su(2,1); got " + f.name);
}

// Irreducible weight module matrices for the supported (form, weight) pairs.
inline std::vector<CMat> irrep_matrices(const RealForm& f, const DominantWeight& lambda, std::string& note) {
  if (f.complex_type.family == Family::A && f.complex_type.rank == 1) {
    int m = static_cast<int>(lambda.coords[0]);
    CMat h, e, fm;
    sl2_ladder(m, h, e, fm);
    if (f.name == "sl(2,R)") {
      note = "weight-basis module of highest weight " + std::to_string(m) + ", basis {H, E, F}";
      return {h, e, fm};
    }
    note = "weight-basis module of highest weight " + std::to_string(m) + ", basis {iH, E-F, i(E+F)}";
    if (f.name == "su(2)") return {times_i(h), sum(e, fm, -1), times_i(sum(e, fm, +1))};
    if (f.name == "su(1,1)") {
      note = "weight-basis module of highest weight " + std::to_string(m) + ", basis {iH, E+F, i(E-F)}";
      return {times_i(h), sum(e, fm, +1), times_i(sum(e, fm, -1))};
    }
  }
  if (f.complex_type.family == Family::A && f.complex_type.rank == 2) {
    bool w1 = lambda == fundamental_weight(2, 1);
    bool w2 = lambda == fundamental_weight(2, 2);
    if (w1 || w2) {
      auto basis = defining_basis(f, note);
      if (w2) {
        for (auto& m : basis) m = m.transpose_neg();
        note += ", dualized";
      }
      return basis;
    }
    throw std::invalid_argument("explicit rep matrices for rank-2 forms are available at the defining weights (1,0), (0,1) only; got " + lambda.str());
  }
  throw std::invalid_argument("witness construction supports the A1 forms su(2), sl(2,R), su(1,1) and the A2 defining weights of sl(3,R), su(3), su(2,1); got " + f.name + " at " + lambda.str());
}

}  // namespace detail

// Builds a witness for (f, lambda, kind). When lambda itself admits an
// antiinvolution of the requested kind the witness lives on the irreducible
// module; otherwise J is built on V + conj(V) by the doubling formulas.
inline AntiinvolutionWitness build_antiinvolution_witness(const RealForm& f, const DominantWeight& lambda, WitnessKind kind) {
  if (lambda.rank() != f.rank())
    throw std::invalid_argument("weight has " + std::to_string(lambda.rank()) + " coordinates, expected " + std::to_string(f.rank()));
  RootSystem rs = build_root_system(f.complex_type);
  Int dim = rs.weyl_dim(lambda);
  if (dim > 20) throw std::invalid_argument("witness guard: weyl_dim(lambda) = " + dim.str() + " exceeds 20");

  AntiinvolutionWitness w;
  w.kind = kind;
  std::string note;
  std::vector<CMat> rep = detail::irrep_matrices(f, lambda, note);
  int d = rep.front().n();

  RepClass cls = classify_irrep(f, lambda);
  bool irreducible_ok = (cls == RepClass::Real && kind == WitnessKind::FirstKind) ||
                        (cls == RepClass::Quaternionic && kind == WitnessKind::SecondKind);

  if (irreducible_ok) {
    w.shape = WitnessShape::Irreducible;
    CMat jm(d);
    if (f.name == "su(2)" || f.name == "su(1,1)") {
      // Ladder antiinvolution J v_k = s_k * k!/(m-k)! v_{m-k} with s_k the
      // alternating sign for su(2) (J^2 = (-1)^m) and +1 for su(1,1)
      // (J^2 = +1).
      int m = d - 1;
      for (int k = 0; k <= m; ++k) {
        Rat c = (f.name == "su(2)" && k % 2 == 1) ? -1 : 1;
        for (int j = 1; j <= k; ++j) c *= j;
        for (int j = 1; j <= m - k; ++j) c /= j;
        jm.re.at(m - k, k) = c;
      }
      w.note = note + "; ladder J";
    } else {
      // Real matrices in this basis: plain coordinate conjugation works.
      for (int k = 0; k < d; ++k) jm.re.at(k, k) = 1;
      w.note = note + "; coordinate conjugation J";
    }
    w.j_matrix = realify_antilinear(jm);
    w.i_matrix = scalar_i_action(d);
    for (const auto& m : rep) w.rep_matrices.push_back(realify(m));
    return w;
  }

  // Doubled shape on V + conj(V).
  w.shape = WitnessShape::Doubled;
  CMat jm(2 * d);
  int top_sign = kind == WitnessKind::FirstKind ? 1 : -1;
  for (int k = 0; k < d; ++k) {
    jm.re.at(k, d + k) = top_sign;  // (v1,v2) -> (+-v2, v1)
    jm.re.at(d + k, k) = 1;
  }
  w.j_matrix = realify_antilinear(jm);
  w.i_matrix = scalar_i_action(2 * d);
  for (const auto& m : rep) {
    CMat block(2 * d);
    CMat mc = m.conj();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        block.re.at(i, j) = m.re.at(i, j);
        block.im.at(i, j) = m.im.at(i, j);
        block.re.at(d + i, d + j) = mc.re.at(i, j);
        block.im.at(d + i, d + j) = mc.im.at(i, j);
      }
    w.rep_matrices.push_back(realify(block));
  }
  w.note = note + "; doubled module V+conj(V), " +
           (kind == WitnessKind::FirstKind ? std::string("J(v1,v2)=(v2,v1)") : std::string("J(v1,v2)=(-v2,v1)"));
  return w;
}

}  // namespace quatrep

#endif  // QUATREP_WITNESS_HPP_
