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
// Real forms of the simple complex Lie algebras as Satake-Tits data: the
// twisted Galois involution t(sigma) on fundamental weights, the compact node
// set, and the set Q of nodes with quaternionic fundamental representation.
//
// Classical families are built from their diagram rules; exceptional forms
// are catalog records (see data/realforms.tsv). The involution stored here is
// the full twisted Galois action: it can move compact nodes that the usual
// Satake picture leaves arrowless (e.g. conj of rho_2 for su(5,1) is rho_4).

#ifndef QUATREP_REAL_FORM_HPP_
#define QUATREP_REAL_FORM_HPP_

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quatrep/catalog_data.hpp"
#include "quatrep/root_system.hpp"

namespace quatrep {

struct RealForm {
  std::string name;                // canonical, e.g. "su(3,1)", "e7(-5)"
  LieType complex_type;
  std::vector<int> involution;     // involution[i] = t(sigma)(i), 1-based; slot 0 unused
  std::vector<int> compact_nodes;  // sorted, 1-based
  std::vector<int> q_set;          // sorted, 1-based
  std::string provenance;          // "paper-table1" | "paper-table2" | "standard-tables"
  std::optional<std::pair<int, int>> signature;  // (p,q) for su/so/sp families

  int rank() const { return complex_type.rank; }
  int conj_node(int i) const { return involution[i]; }
  bool involution_is_identity() const {
    for (int i = 1; i <= rank(); ++i)
      if (involution[i] != i) return false;
    return true;
  }
  bool node_is_quaternionic(int i) const { return std::binary_search(q_set.begin(), q_set.end(), i); }
};

// Disjoint R / C / Q node sets: C is moved by t(sigma), Q is the quaternionic
// set, R is the rest.
struct IndexClassification {
  std::vector<int> r_set, c_set, q_set;
};

inline IndexClassification index_classification(const RealForm& f) {
  IndexClassification out;
  out.q_set = f.q_set;
  for (int i = 1; i <= f.rank(); ++i) {
    if (f.conj_node(i) != i)
      out.c_set.push_back(i);
    else if (!f.node_is_quaternionic(i))
      out.r_set.push_back(i);
  }
  return out;
}

namespace detail {

inline std::vector<int> identity_involution(int rank) {
  std::vector<int> inv(rank + 1);
  for (int i = 0; i <= rank; ++i) inv[i] = i;
  return inv;
}

inline std::vector<int> flip_involution(const LieType& t) {
  std::vector<int> inv = identity_involution(t.rank);
  int n = t.rank;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) inv[i] = n + 1 - i;
      break;
    case Family::D:
      inv[n - 1] = n;
      inv[n] = n - 1;
      break;
    case Family::E:
      if (n == 6) {
        inv[1] = 6;
        inv[6] = 1;
        inv[3] = 5;
        inv[5] = 3;
      }
      break;
    default:
      break;
  }
  return inv;
}

inline std::vector<int> range_nodes(int lo, int hi) {  // inclusive, empty if lo > hi
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

inline std::vector<int> odd_nodes(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i)
    if (i % 2 == 1) v.push_back(i);
  return v;
}

inline std::string signature_name(const std::string& fam, int p, int q) {
  if (q == 0) return fam + "(" + std::to_string(p) + ")";
  return fam + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

inline RealForm make_su(int p, int q) {
  if (p < q) std::swap(p, q);
  if (p + q < 2) throw std::invalid_argument("su(p,q) requires p+q >= 2");
  int n = p + q - 1;
  RealForm f;
  f.name = signature_name("su", p, q);
  f.complex_type = {Family::A, n};
  f.involution = flip_involution(f.complex_type);
  f.compact_nodes = range_nodes(q + 1, n - q);
  if (n % 2 == 1 && ((n + 1) / 2 + q) % 2 == 1) f.q_set = {(n + 1) / 2};
  f.provenance = f.q_set.empty() ? "standard-tables" : "paper-table2";
  f.signature = {p, q};
  return f;
}

inline RealForm make_sl_r(int n) {
  if (n < 2) throw std::invalid_argument("sl(n,R) requires n >= 2");
  RealForm f;
  f.name = "sl(" + std::to_string(n) + ",R)";
  f.complex_type = {Family::A, n - 1};
  f.involution = identity_involution(n - 1);
  f.provenance = "standard-tables";
  return f;
}

inline RealForm make_sl_h(int k) {
  if (k < 2) throw std::invalid_argument("sl_k(H) requires k >= 2 (sl_1(H) is su(2))");
  int n = 2 * k - 1;
  RealForm f;
  f.name = "sl_" + std::to_string(k) + "(H)";
  f.complex_type = {Family::A, n};
  f.involution = identity_involution(n);
  f.compact_nodes = odd_nodes(1, n);
  f.q_set = odd_nodes(1, n);
  f.provenance = "paper-table2";
  return f;
}

inline RealForm make_so(int p, int q) {
  if (p < q) std::swap(p, q);
  int m = p + q;
  if (m < 3) throw std::invalid_argument("so(p,q) requires p+q >= 3");
  RealForm f;
  f.name = signature_name("so", p, q);
  f.signature = {p, q};
  if (m % 2 == 1) {
    int n = (m - 1) / 2;
    f.complex_type = {Family::B, n};
    f.involution = identity_involution(n);
    f.compact_nodes = range_nodes(q + 1, n);
    if ((n - q) % 4 == 1 || (n - q) % 4 == 2) f.q_set = {n};
  } else {
    int n = m / 2;
    if (n < 3) throw std::invalid_argument("so(p,q) with p+q = " + std::to_string(m) + " is not simple (type D" + std::to_string(n) + ")");
    f.complex_type = {Family::D, n};
    f.involution = (q % 2 != n % 2) ? flip_involution(f.complex_type) : identity_involution(n);
    f.compact_nodes = q <= n - 2 ? range_nodes(q + 1, n) : std::vector<int>{};
    if ((n - q) % 4 == 2) f.q_set = {n - 1, n};
  }
  f.provenance = f.q_set.empty() ? "standard-tables" : "paper-table2";
  return f;
}

inline RealForm make_so_star(int two_n) {
  if (two_n % 2 != 0) throw std::invalid_argument("so*(2n) requires an even argument");
  int n = two_n / 2;
  if (n < 3) throw std::invalid_argument("so*(2n) requires n >= 3 (so*(4) is not simple)");
  RealForm f;
  f.name = "so*(" + std::to_string(two_n) + ")";
  f.complex_type = {Family::D, n};
  f.involution = (n % 2 == 1) ? flip_involution(f.complex_type) : identity_involution(n);
  f.compact_nodes = odd_nodes(1, n % 2 == 0 ? n - 1 : n - 2);
  f.q_set = odd_nodes(1, n % 2 == 0 ? n - 1 : n - 2);
  f.provenance = "paper-table2";
  return f;
}

inline RealForm make_sp(int p, int q) {
  if (p < q) std::swap(p, q);
  int n = p + q;
  if (n < 1) throw std::invalid_argument("sp(p,q) requires p+q >= 1");
  RealForm f;
  f.name = signature_name("sp", p, q);
  f.complex_type = {Family::C, n};
  f.involution = identity_involution(n);
  for (int i = 1; i <= n; ++i)
    if ((i % 2 == 1 && i <= 2 * q) || i > 2 * q) f.compact_nodes.push_back(i);
  f.q_set = odd_nodes(1, n);
  f.provenance = "paper-table2";
  f.signature = {p, q};
  return f;
}

inline RealForm make_sp_r(int n) {
  if (n < 1) throw std::invalid_argument("sp(n,R) requires n >= 1");
  RealForm f;
  f.name = "sp(" + std::to_string(n) + ",R)";
  f.complex_type = {Family::C, n};
  f.involution = identity_involution(n);
  f.provenance = "standard-tables";
  return f;
}

inline int levenshtein(const std::string& a, const std::string& b) {
  std::vector<int> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = static_cast<int>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    int prev = row[0];
    row[0] = static_cast<int>(i);
    for (size_t j = 1; j <= b.size(); ++j) {
      int cur = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, prev + (a[i - 1] == b[j - 1] ? 0 : 1)});
      prev = cur;
    }
  }
  return row[b.size()];
}

}  // namespace detail

// Exceptional-form records loaded from the versioned catalog text; classical
// families are rule-based. The text format is documented in data/realforms.tsv.
class RealFormCatalog {
 public:
  static RealFormCatalog from_text(const std::string& text) {
    RealFormCatalog cat;
    cat.source_text_ = text;
    std::istringstream in(text);
    std::string line;
    bool saw_version = false;
    while (std::getline(in, line)) {
      if (line.rfind("# quatrep real-form catalog", 0) == 0) saw_version = true;
      if (line.empty() || line[0] == '#' || line.rfind("name\t", 0) == 0) continue;
      std::vector<std::string> fields;
      std::istringstream ls(line);
      std::string tok;
      while (std::getline(ls, tok, '\t')) fields.push_back(tok);
      if (fields.size() != 6) throw std::invalid_argument("catalog record needs 6 tab-separated fields: " + line);
      RealForm f;
      f.name = fields[0];
      f.complex_type = parse_lie_type(fields[1]);
      f.involution = detail::identity_involution(f.complex_type.rank);
      if (fields[2] != "-") {
        std::istringstream cs(fields[2]);
        std::string cyc;
        while (std::getline(cs, cyc, ',')) {
          auto colon = cyc.find(':');
          if (colon == std::string::npos) throw std::invalid_argument("bad involution cycle '" + cyc + "'");
          int a = std::stoi(cyc.substr(0, colon)), b = std::stoi(cyc.substr(colon + 1));
          f.involution[a] = b;
          f.involution[b] = a;
        }
      }
      auto parse_nodes = [](const std::string& s) {
        std::vector<int> out;
        if (s == "-") return out;
        std::istringstream ns(s);
        std::string v;
        while (std::getline(ns, v, ',')) out.push_back(std::stoi(v));
        std::sort(out.begin(), out.end());
        return out;
      };
      f.compact_nodes = parse_nodes(fields[3]);
      f.q_set = parse_nodes(fields[4]);
      f.provenance = fields[5];
      for (int q : f.q_set)
        if (f.involution[q] != q) throw std::invalid_argument("catalog record " + f.name + " has a Q node moved by the involution");
      cat.exceptional_.emplace(f.name, f);
    }
    if (!saw_version) throw std::invalid_argument("catalog text is missing the version header");
    return cat;
  }

  static RealFormCatalog from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
  }

  static const RealFormCatalog& builtin() {
    static const RealFormCatalog cat = from_text(kBuiltinRealFormCatalog);
    return cat;
  }

  const std::string& source_text() const { return source_text_; }

  std::vector<std::string> exceptional_names() const {
    std::vector<std::string> names;
    for (const auto& [k, v] : exceptional_) names.push_back(k);
    return names;
  }

  RealForm lookup(const std::string& raw) const {
    std::string s;
    for (char c : raw)
      if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (auto it = exceptional_.find(s); it != exceptional_.end()) return it->second;

    auto args_of = [&](size_t open) -> std::vector<std::string> {
      if (s.back() != ')') throw std::invalid_argument("expected ')' at end of '" + raw + "'");
      std::string inner = s.substr(open + 1, s.size() - open - 2);
      std::vector<std::string> parts;
      std::istringstream in(inner);
      std::string tok;
      while (std::getline(in, tok, ',')) parts.push_back(tok);
      return parts;
    };
    auto to_int = [&](const std::string& t) {
      try {
        size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("");
        return v;
      } catch (...) {
        throw std::invalid_argument("bad integer token '" + t + "' in '" + raw + "'");
      }
    };

    if (s.rfind("su(", 0) == 0) {
      auto a = args_of(2);
      if (a.size() == 1) return detail::make_su(to_int(a[0]), 0);
      if (a.size() == 2) return detail::make_su(to_int(a[0]), to_int(a[1]));
      throw std::invalid_argument("su takes one or two integers, got '" + raw + "'");
    }
    if (s.rfind("sl_", 0) == 0) {
      auto open = s.find('(');
      if (open == std::string::npos) throw std::invalid_argument("expected '(' in '" + raw + "'");
      auto a = args_of(open);
      if (a.size() != 1 || a[0] != "H") throw std::invalid_argument("the quaternionic special linear family is written sl_k(H)");
      return detail::make_sl_h(to_int(s.substr(3, open - 3)));
    }
    if (s.rfind("sl(", 0) == 0) {
      auto a = args_of(2);
      if (a.size() == 2 && a[1] == "R") return detail::make_sl_r(to_int(a[0]));
      if (a.size() == 2 && a[1] == "H") return detail::make_sl_h(to_int(a[0]));  // sl(k,H) alias
      throw std::invalid_argument("the split special linear family is written sl(n,R)");
    }
    if (s.rfind("so*(", 0) == 0) return detail::make_so_star(to_int(args_of(3).at(0)));
    if (s.rfind("so(", 0) == 0) {
      auto a = args_of(2);
      if (a.size() == 1) return detail::make_so(to_int(a[0]), 0);
      if (a.size() == 2) return detail::make_so(to_int(a[0]), to_int(a[1]));
      throw std::invalid_argument("so takes one or two integers, got '" + raw + "'");
    }
    if (s.rfind("sp(", 0) == 0) {
      auto a = args_of(2);
      if (a.size() == 1) return detail::make_sp(to_int(a[0]), 0);
      if (a.size() == 2 && a[1] == "R") return detail::make_sp_r(to_int(a[0]));
      if (a.size() == 2) return detail::make_sp(to_int(a[0]), to_int(a[1]));
      throw std::invalid_argument("sp takes sp(p,q), sp(n) or sp(n,R), got '" + raw + "'");
    }

    std::string best;
    int best_d = 1 << 30;
    for (const auto& [name, f] : exceptional_) {
      int d = detail::levenshtein(s, name);
      if (d < best_d) {
        best_d = d;
        best = name;
      }
    }
    for (const char* tmpl : {"su(p,q)", "sl(n,R)", "sl_k(H)", "so(p,q)", "so*(2n)", "sp(p,q)", "sp(n,R)"}) {
      int d = detail::levenshtein(s, tmpl);
      if (d < best_d) {
        best_d = d;
        best = tmpl;
      }
    }
    throw std::invalid_argument("unknown real form '" + raw + "' (closest match: " + best + ")");
  }

 private:
  std::map<std::string, RealForm> exceptional_;
  std::string source_text_;
};

namespace detail {
inline const RealFormCatalog*& active_catalog_slot() {
  static const RealFormCatalog* active = nullptr;
  return active;
}
}  // namespace detail

// Process-wide catalog override (used by the CLI's --catalog flag). Intended
// to be set once at startup, before concurrent use.
inline void set_active_catalog(const RealFormCatalog* catalog) { detail::active_catalog_slot() = catalog; }

inline const RealFormCatalog& active_catalog() {
  const RealFormCatalog* c = detail::active_catalog_slot();
  return c ? *c : RealFormCatalog::builtin();
}

inline RealForm lookup_real_form(const std::string& name) { return active_catalog().lookup(name); }

// Canonical names of all catalog forms of rank <= max_rank, classical
// families instantiated over every admissible signature.
inline std::vector<std::string> catalog_forms_up_to_rank(int max_rank) {
  std::vector<std::string> names;
  for (int r = 1; r <= max_rank; ++r) {
    for (int q = 0; 2 * q <= r + 1; ++q)
      if (r + 1 - q >= q && r + 1 >= 2) names.push_back(detail::make_su(r + 1 - q, q).name);
    names.push_back(detail::make_sl_r(r + 1).name);
    if ((r + 1) % 2 == 0 && (r + 1) / 2 >= 2) names.push_back(detail::make_sl_h((r + 1) / 2).name);
    for (int q = 0; q <= r; ++q) names.push_back(detail::make_so(2 * r + 1 - q, q).name);
    for (int q = 0; 2 * q <= r; ++q) names.push_back(detail::make_sp(r - q, q).name);
    names.push_back(detail::make_sp_r(r).name);
    if (r >= 3) {
      for (int q = 0; q <= r; ++q) names.push_back(detail::make_so(2 * r - q, q).name);
      names.push_back(detail::make_so_star(2 * r).name);
    }
  }
  for (const auto& name : RealFormCatalog::builtin().exceptional_names())
    if (lookup_real_form(name).rank() <= max_rank) names.push_back(name);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace quatrep

#endif  // QUATREP_REAL_FORM_HPP_
