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
// Command-line front end. All outputs are deterministic; exit status encodes
// operational failure (parse or lookup errors) only, never a mathematical
// verdict.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatrep/classify.hpp"
#include "quatrep/freudenthal.hpp"
#include "quatrep/labels.hpp"
#include "quatrep/minrep.hpp"
#include "quatrep/spaces.hpp"
#include "quatrep/tables.hpp"
#include "quatrep/witness.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace quatrep;

constexpr int kSchemaVersion = 1;

json json_int(const Int& v) {
  if (v >= 0 && v <= Int(9007199254740992LL)) return json(static_cast<std::int64_t>(v));
  return json(v.str());  // exact decimal string once past double-safe range
}

json json_weight(const DominantWeight& w) {
  json a = json::array();
  for (auto c : w.coords) a.push_back(c);
  return a;
}

DominantWeight parse_weight(const std::string& text, const LieType& t, bool paper_labels) {
  std::vector<std::int64_t> coords;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    try {
      size_t pos = 0;
      long long v = std::stoll(tok, &pos);
      if (pos != tok.size() || v < 0) throw std::invalid_argument("");
      coords.push_back(v);
    } catch (...) {
      throw std::invalid_argument("bad weight token '" + tok + "' in '" + text + "' (expected comma-separated nonnegative integers)");
    }
  }
  if (static_cast<int>(coords.size()) != t.rank)
    throw std::invalid_argument("weight '" + text + "' has " + std::to_string(coords.size()) + " coordinates, " + t.str() +
                                " needs " + std::to_string(t.rank));
  DominantWeight w{coords};
  return paper_labels ? weight_from_table_labels(t, w) : w;
}

json descriptor_json(const RealForm& f, const HRepDescriptor& d) {
  json j;
  j["kind"] = to_string(d.kind);
  j["weight"] = json_weight(d.weight);
  j["weight_table_labels"] = json_weight(weight_to_table_labels(f.complex_type, d.weight));
  j["display"] = quatrep::detail::descriptor_display(f, d);
  j["real_dim"] = json_int(d.real_dim);
  return j;
}

json minrep_json(const RealForm& f, const MinRepResult& r) {
  json j;
  j["real_dim"] = json_int(r.real_dim);
  json mins = json::array();
  for (const auto& d : r.minimizers) mins.push_back(descriptor_json(f, d));
  j["minimizers"] = std::move(mins);
  return j;
}

json verdict_json(const Verdict& v, const RealForm* form) {
  json j;
  j["outcome"] = to_string(v.outcome);
  j["integrable"] = is_integrable(v.outcome);
  j["bound_lhs"] = json_int(v.bound_lhs);
  j["bound_rhs"] = json_int(v.bound_rhs);
  if (v.dim4_warning)
    j["warning"] = "dimension 4: an almost quaternionic structure is a conformal structure; the bound engine targets 4n >= 8";
  j["detail"] = v.detail;
  if (v.witness && form) j["minimal_representation"] = minrep_json(*form, *v.witness);
  return j;
}

json space_json(const SymmetricSpace& s) {
  json j;
  j["g_C"] = s.family_display;
  j["g"] = s.g_display;
  j["k"] = s.k_display;
  j["sigma_type"] = s.sigma_type;
  j["dim"] = s.dim;
  switch (s.curvature) {
    case CurvatureClass::Flat: j["curvature_class"] = "Flat"; break;
    case CurvatureClass::Compact: j["curvature_class"] = "Compact"; break;
    case CurvatureClass::NonCompact: j["curvature_class"] = "NonCompact"; break;
  }
  return j;
}

void emit(const json& query, const json& result, const std::string& format) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["query"] = query;
  out["result"] = result;
  if (format == "tsv") {
    // Flat key<TAB>value rows for diffing.
    std::function<void(const std::string&, const json&)> walk = [&](const std::string& prefix, const json& v) {
      if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
      } else if (v.is_array()) {
        for (size_t i = 0; i < v.size(); ++i) walk(prefix + "[" + std::to_string(i) + "]", v[i]);
      } else {
        std::cout << prefix << "\t" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    };
    walk("", out);
    return;
  }
  std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quatrep: quaternionic representation classification and symmetric-space integrability checks"};
  app.require_subcommand(1);

  std::string format = "json";
  bool paper_labels = false;
  std::string catalog_path;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--paper-labels", paper_labels, "read and report node labels in the classification tables' numbering");
  app.add_option("--catalog", catalog_path, "override the built-in exceptional real-form catalog file");

  std::string arg_type, arg_weight, arg_form, arg_h;
  int arg_table = 0, arg_dim = 0;

  auto* cmd_dim = app.add_subcommand("dim", "complex and real dimension of an irreducible representation");
  cmd_dim->add_option("type", arg_type, "Lie type, e.g. A3")->required();
  cmd_dim->add_option("weight", arg_weight, "highest weight, e.g. 0,1,0")->required();

  auto* cmd_classify = app.add_subcommand("classify", "real / not-self-conjugate / quaternionic classification");
  cmd_classify->add_option("form", arg_form, "real form, e.g. su(3,1)")->required();
  cmd_classify->add_option("weight", arg_weight)->required();

  auto* cmd_minrep = app.add_subcommand("minrep", "minimal quaternionic representation of a real form");
  cmd_minrep->add_option("form", arg_form)->required();

  auto* cmd_tables = app.add_subcommand("tables", "regenerate classification table 1, 2 or 3");
  cmd_tables->add_option("which", arg_table, "table number")->required()->check(CLI::Range(1, 3));

  auto* cmd_check = app.add_subcommand("check", "integrability verdicts");
  cmd_check->require_subcommand(1);
  auto* check_qk = cmd_check->add_subcommand("qk", "verdict for a quaternion-Kahler symmetric space, by its isometry algebra");
  check_qk->add_option("form", arg_form, "real form (or 'flat' with --dim)")->required();
  check_qk->add_option("--dim", arg_dim, "manifold dimension for the flat model");
  auto* check_bound_cmd = cmd_check->add_subcommand("bound", "dimension-bound necessary condition");
  check_bound_cmd->add_option("form", arg_form)->required();
  check_bound_cmd->add_option("dim", arg_dim, "manifold dimension (positive multiple of 4)")->required();
  auto* check_exc = cmd_check->add_subcommand("exceptional", "transitive actions of E6/E8/F4/G2 forms");
  check_exc->add_option("form", arg_form)->required();
  auto* check_affine = cmd_check->add_subcommand("affine-e7", "affine symmetric spaces of E7 forms");
  check_affine->add_option("subalgebra", arg_h, "Berger subalgebra, e.g. su(4,4), or e7(7)/e7(-25)/e7(-133)")->required();

  // Global flags remain usable after a subcommand name.
  for (auto* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (auto* subsub : sub->get_subcommands(nullptr)) subsub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    RealFormCatalog override_catalog;
    if (!catalog_path.empty()) {
      override_catalog = RealFormCatalog::from_file(catalog_path);
      set_active_catalog(&override_catalog);
    }

    if (*cmd_dim) {
      LieType t = parse_lie_type(arg_type);
      RootSystem rs = build_root_system(t);
      DominantWeight w = parse_weight(arg_weight, t, paper_labels);
      Int d = rs.weyl_dim(w);
      json q{{"command", "dim"}, {"type", t.str()}, {"weight", json_weight(w)}, {"paper_labels", paper_labels}};
      json r{{"complex_dim", json_int(d)}, {"real_dim", json_int(2 * d)}};
      emit(q, r, format);
      return 0;
    }

    if (*cmd_classify) {
      RealForm f = lookup_real_form(arg_form);
      DominantWeight w = parse_weight(arg_weight, f.complex_type, paper_labels);
      RepClass c = classify_irrep(f, w);
      IndexClassification idx = index_classification(f);
      std::string clause;
      if (c == RepClass::NotSelfConjugate) {
        for (int i : idx.c_set)
          if (w.coords[i - 1] != w.coords[f.conj_node(i) - 1]) {
            clause = "coordinates differ across the conjugated node pair (" + std::to_string(i) + "," +
                     std::to_string(f.conj_node(i)) + ")";
            break;
          }
      } else {
        std::int64_t qsum = 0;
        for (int qn : f.q_set) qsum += w.coords[qn - 1];
        clause = "self-conjugate; weight sum over Q is " + std::to_string(qsum) + " (" + (qsum % 2 ? "odd" : "even") + ")";
      }
      json q{{"command", "classify"}, {"form", f.name}, {"weight", json_weight(w)}, {"paper_labels", paper_labels}};
      json r;
      r["class"] = to_string(c);
      r["epsilon"] = epsilon(c) ? json(*epsilon(c)) : json(nullptr);
      r["clause"] = clause;
      r["conjugate_weight"] = json_weight(galois_conjugate_weight(f, w));
      r["index_sets"] = json{{"R", idx.r_set}, {"C", idx.c_set}, {"Q", idx.q_set}};
      r["provenance"] = f.provenance;
      emit(q, r, format);
      return 0;
    }

    if (*cmd_minrep) {
      RealForm f = lookup_real_form(arg_form);
      MinRepResult mr = minimal_quaternionic_rep(f);
      json q{{"command", "minrep"}, {"form", f.name}};
      emit(q, minrep_json(f, mr), format);
      return 0;
    }

    if (*cmd_tables) {
      Table t = render_table(arg_table);
      if (format == "tsv") {
        std::cout << to_tsv(t);
        return 0;
      }
      json rows = json::array();
      for (const auto& row : t.rows) rows.push_back(row);
      json q{{"command", "tables"}, {"which", arg_table}};
      json r{{"header", t.header}, {"rows", rows}};
      emit(q, r, "json");
      return 0;
    }

    if (*check_qk) {
      json q{{"command", "check qk"}, {"input", arg_form}};
      if (arg_form == "flat") {
        SymmetricSpace s = flat_model(arg_dim > 0 ? arg_dim : 4);
        Verdict v = check_qk_symmetric(s);
        emit(q, json{{"space", space_json(s)}, {"verdict", verdict_json(v, nullptr)}}, format);
        return 0;
      }
      auto space = qk_space_for_form(arg_form);
      if (!space)
        throw std::invalid_argument("'" + arg_form + "' is not the isometry algebra of a cataloged quaternion-Kahler symmetric space");
      RealForm f = lookup_real_form(space->g_name);
      Verdict v = check_qk_symmetric(*space);
      emit(q, json{{"space", space_json(*space)}, {"verdict", verdict_json(v, &f)}}, format);
      return 0;
    }

    if (*check_bound_cmd) {
      RealForm f = lookup_real_form(arg_form);
      Verdict v = check_bound(f, arg_dim);
      json q{{"command", "check bound"}, {"form", f.name}, {"manifold_dim", arg_dim}};
      emit(q, json{{"verdict", verdict_json(v, &f)}}, format);
      return 0;
    }

    if (*check_exc) {
      RealForm f = lookup_real_form(arg_form);
      Verdict v = check_exceptional_transitive(f);
      json q{{"command", "check exceptional"}, {"form", f.name}};
      emit(q, json{{"verdict", verdict_json(v, &f)}}, format);
      return 0;
    }

    if (*check_affine) {
      Verdict v = check_affine_e7(arg_h);
      json q{{"command", "check affine-e7"}, {"h", arg_h}};
      emit(q, json{{"verdict", verdict_json(v, nullptr)}}, format);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
