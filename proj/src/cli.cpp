#include "affpav/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "affpav/errors.hpp"
#include "affpav/grasstools.hpp"
#include "affpav/hecke.hpp"
#include "affpav/jsonio.hpp"
#include "affpav/oracle.hpp"
#include "affpav/paving.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace affpav::cli {

using jsonio::json;
using rootdata::RootDatum;
using weyl::WeylElement;

namespace {

// Tuple syntax: elements separated by ';', or by top-level commas (commas
// inside brackets bind to the bracket; a run of bare integers is one word).
std::vector<std::string> split_tuple(const std::string& s) {
  std::vector<std::string> items;
  if (s.find(';') != std::string::npos) {
    std::string cur;
    for (char c : s) {
      if (c == ';') {
        items.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    items.push_back(cur);
    return items;
  }
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  auto is_bare_int = [](const std::string& t) {
    if (t.empty()) return false;
    for (size_t i = 0; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i])) && !(i == 0 && t[i] == '-'))
        return false;
    return true;
  };
  for (size_t i = 0; i < tokens.size();) {
    if (is_bare_int(tokens[i])) {
      std::string word = tokens[i];
      size_t j = i + 1;
      while (j < tokens.size() && is_bare_int(tokens[j])) {
        word += "," + tokens[j];
        ++j;
      }
      items.push_back(word);
      i = j;
    } else {
      items.push_back(tokens[i]);
      ++i;
    }
  }
  return items;
}

std::vector<bool> parse_flags(const std::string& s, size_t n) {
  if (s.empty()) return {};
  std::vector<bool> out;
  for (char c : s) {
    if (c == ',') continue;
    if (c != '0' && c != '1') throw UserError("closed flags must be 0/1");
    out.push_back(c == '1');
  }
  if (out.size() != n) throw UserError("closed flag count does not match the tuple");
  return out;
}

void emit(std::ostream& out, const json& j, bool text) {
  if (text)
    out << j.dump(2) << "\n";
  else
    out << j.dump() << "\n";
}

struct Common {
  std::string group;
  std::string format = "json";
  int threads = 0;
};

void apply_threads(const Common& c) {
#ifdef _OPENMP
  if (c.threads > 0) omp_set_num_threads(c.threads);
#else
  (void)c;
#endif
}

// closure cap for W_P enumeration, overridable via AFFPAV_WP_CAP
size_t wp_cap() {
  if (const char* e = std::getenv("AFFPAV_WP_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(e, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return 1000000;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"convolution-fiber pavings and parahoric Hecke computations"};
  app.require_subcommand(1);

  Common common;
  std::string sp_text, tuple_text, at_text, closed_text;
  std::string x_text, y_text, w1_text, w2_text;
  std::string mu_text, lambda_text, p_text, nu_text, suite_name, mode_text = "uncompactified";
  bool want_cells = false, check_routes = false, verify_all = false;

  auto add_common = [&](CLI::App* sub, bool needs_group = true) {
    auto* g = sub->add_option("--group", common.group, "group spec, e.g. B2:adjoint");
    if (needs_group) g->required();
    sub->add_option("--format", common.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--threads", common.threads, "worker threads for parallel kernels");
  };

  CLI::App* group_cmd = app.add_subcommand("group", "root datum services");
  CLI::App* group_describe = group_cmd->add_subcommand("describe", "print the root datum");
  add_common(group_describe);

  CLI::App* weyl_cmd = app.add_subcommand("weyl", "extended affine Weyl group services");
  CLI::App* weyl_length = weyl_cmd->add_subcommand("length", "length of an element");
  add_common(weyl_length);
  weyl_length->add_option("--x", x_text)->required();
  CLI::App* weyl_word = weyl_cmd->add_subcommand("word", "Omega part and reduced word");
  add_common(weyl_word);
  weyl_word->add_option("--x", x_text)->required();
  CLI::App* weyl_bruhat = weyl_cmd->add_subcommand("bruhat", "Bruhat comparison x <= y");
  add_common(weyl_bruhat);
  weyl_bruhat->add_option("--x", x_text)->required();
  weyl_bruhat->add_option("--y", y_text)->required();
  CLI::App* weyl_demazure = weyl_cmd->add_subcommand("demazure", "Demazure product x * y");
  add_common(weyl_demazure);
  weyl_demazure->add_option("--x", x_text)->required();
  weyl_demazure->add_option("--y", y_text)->required();
  CLI::App* weyl_cosets = weyl_cmd->add_subcommand("cosets", "double coset normal forms");
  add_common(weyl_cosets);
  weyl_cosets->add_option("--SP", sp_text, "subset of S_aff: '' | spherical | 0,1,...");
  weyl_cosets->add_option("--x", x_text)->required();

  CLI::App* hecke_cmd = app.add_subcommand("hecke", "Iwahori-Hecke algebra services");
  CLI::App* hecke_product = hecke_cmd->add_subcommand("product", "T_{w1} * T_{w2}");
  add_common(hecke_product);
  hecke_product->add_option("--w1", w1_text)->required();
  hecke_product->add_option("--w2", w2_text)->required();
  CLI::App* hecke_constants =
      hecke_cmd->add_subcommand("constants", "parahoric structure constants");
  add_common(hecke_constants);
  hecke_constants->add_option("--SP", sp_text, "subset of S_aff");
  hecke_constants->add_option("--w1", w1_text)->required();
  hecke_constants->add_option("--w2", w2_text)->required();

  CLI::App* paving_cmd = app.add_subcommand("paving", "convolution fiber pavings");
  CLI::App* paving_fiber = paving_cmd->add_subcommand("fiber", "fiber point count");
  add_common(paving_fiber);
  paving_fiber->add_option("--SP", sp_text, "subset of S_aff");
  paving_fiber->add_option("--tuple", tuple_text, "convolution tuple")->required();
  paving_fiber->add_option("--at", at_text, "base point element")->required();
  paving_fiber->add_option("--closed", closed_text, "per-factor closure flags, e.g. 0,1");
  paving_fiber->add_flag("--cells", want_cells, "emit the cell list");
  paving_fiber->add_flag("--check-routes", check_routes,
                         "cross-check against the Hecke route");

  CLI::App* mv_cmd = app.add_subcommand("mv", "affine Grassmannian intersections");
  add_common(mv_cmd);
  mv_cmd->add_option("--P", p_text, "Levi subset of finite simple indices, e.g. 1,2");
  mv_cmd->add_option("--mu", mu_text)->required();
  mv_cmd->add_option("--lambda", lambda_text)->required();
  mv_cmd->add_option("--nu", nu_text, "override the nu witness");
  mv_cmd->add_flag("--cells", want_cells);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "independent verification");
  CLI::App* oracle_verify = oracle_cmd->add_subcommand("verify", "run oracle suites");
  add_common(oracle_verify, /*needs_group=*/false);
  oracle_verify->add_flag("--all", verify_all, "full-size suites");
  oracle_verify->add_option("--suite", suite_name,
                            "bott-samelson | finite-constants | subword");

  std::vector<const char*> argv;
  std::string prog = "affpav";
  argv.push_back(prog.c_str());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  bool text = common.format == "text";
  apply_threads(common);

  try {
    if (*group_describe) {
      auto rd = RootDatum::parse(common.group);
      json j;
      j["spec"] = rd->spec_string();
      j["rank"] = rd->rank();
      json cart = json::array();
      for (int i = 0; i < rd->rank(); ++i) {
        json row = json::array();
        for (int k = 0; k < rd->rank(); ++k) row.push_back(rd->cartan().at(i, k));
        cart.push_back(row);
      }
      j["cartan"] = cart;
      j["num_positive_roots"] = rd->num_positive();
      j["two_rho"] = rd->two_rho();
      j["highest_root"] = rd->highest_root().ch;
      j["highest_coroot"] = rd->highest_root().cov;
      j["omega_order"] = weyl::omega_elements(*rd).size();
      emit(out, j, text);
      return 0;
    }
    if (*weyl_length || *weyl_word || *weyl_bruhat || *weyl_demazure || *weyl_cosets) {
      auto rd = RootDatum::parse(common.group);
      if (*weyl_length) {
        WeylElement x = jsonio::parse_element(*rd, x_text);
        json j;
        j["element"] = jsonio::element_to_json(x);
        j["length"] = weyl::length(x);
        emit(out, j, text);
      } else if (*weyl_word) {
        WeylElement x = jsonio::parse_element(*rd, x_text);
        weyl::ReducedWord rw = weyl::reduced_word(x);
        json j;
        j["omega"] = jsonio::element_to_json(rw.omega_part);
        j["word"] = rw.letters;
        emit(out, j, text);
      } else if (*weyl_bruhat) {
        WeylElement x = jsonio::parse_element(*rd, x_text);
        WeylElement y = jsonio::parse_element(*rd, y_text);
        json j;
        j["leq"] = weyl::bruhat_leq(x, y);
        emit(out, j, text);
      } else if (*weyl_demazure) {
        WeylElement x = jsonio::parse_element(*rd, x_text);
        WeylElement y = jsonio::parse_element(*rd, y_text);
        emit(out, jsonio::element_to_json(weyl::demazure(x, y)), text);
      } else {
        WeylElement x = jsonio::parse_element(*rd, x_text);
        weyl::ParabolicData pd = weyl::parabolic_data(*rd, jsonio::parse_subset(*rd, sp_text), wp_cap());
        weyl::CosetNormalForms nf = weyl::coset_normal_forms(x, pd);
        json j;
        j["min"] = jsonio::element_to_json(nf.min_rep);
        j["max"] = jsonio::element_to_json(nf.max_rep);
        json etas = json::array();
        for (const WeylElement& eta : nf.eta_list) etas.push_back(jsonio::element_to_json(eta));
        j["etas"] = etas;
        emit(out, j, text);
      }
      return 0;
    }
    if (*hecke_product) {
      auto rd = RootDatum::parse(common.group);
      WeylElement w1 = jsonio::parse_element(*rd, w1_text);
      WeylElement w2 = jsonio::parse_element(*rd, w2_text);
      emit(out,
           jsonio::hecke_to_json(
               hecke::hecke_product(hecke::HeckeElement::basis(w1),
                                    hecke::HeckeElement::basis(w2))),
           text);
      return 0;
    }
    if (*hecke_constants) {
      auto rd = RootDatum::parse(common.group);
      weyl::ParabolicData pd = weyl::parabolic_data(*rd, jsonio::parse_subset(*rd, sp_text), wp_cap());
      WeylElement w1 = jsonio::parse_element(*rd, w1_text);
      WeylElement w2 = jsonio::parse_element(*rd, w2_text);
      emit(out, jsonio::table_to_json(hecke::structure_constants(w1, w2, pd)), text);
      return 0;
    }
    if (*paving_fiber) {
      auto rd = RootDatum::parse(common.group);
      weyl::ParabolicData pd = weyl::parabolic_data(*rd, jsonio::parse_subset(*rd, sp_text), wp_cap());
      std::vector<WeylElement> tuple;
      for (const std::string& item : split_tuple(tuple_text))
        tuple.push_back(jsonio::parse_element(*rd, item));
      if (tuple.empty()) throw UserError("empty tuple");
      std::vector<bool> closed = parse_flags(closed_text, tuple.size());
      WeylElement at = jsonio::parse_element(*rd, at_text);
      paving::FiberResult res = paving::parahoric_fiber(tuple, pd, at, closed, want_cells);
      if (check_routes) {
        PolyQ route_b = hecke::convolution_value(tuple, pd, at, closed);
        if (!(route_b == res.value.value()))
          throw InternalCheckError("route A / route B disagreement at " + at_text);
      }
      json j = jsonio::paving_to_json(res.value);
      if (want_cells) j["cells"] = jsonio::cells_to_json(*res.cells);
      if (check_routes) j["checked"] = "routes-agree";
      emit(out, j, text);
      return 0;
    }
    if (*mv_cmd) {
      auto rd = RootDatum::parse(common.group);
      grass::ParabolicChoice P =
          grass::make_parabolic(*rd, jsonio::parse_subset(*rd, p_text));
      rootdata::Vec mu = jsonio::parse_element(*rd, mu_text).lambda;
      rootdata::Vec lambda = jsonio::parse_element(*rd, lambda_text).lambda;
      json j;
      paving::FiberResult fib;
      rootdata::Vec nu;
      if (!nu_text.empty()) {
        nu = jsonio::parse_element(*rd, nu_text).lambda;
        fib = grass::mv_intersection_with_nu(*rd, mu, lambda, P, nu, want_cells);
      } else {
        grass::MVResult res = grass::mv_intersection(*rd, mu, lambda, P, want_cells);
        fib = std::move(res.fiber);
        nu = res.nu;
      }
      j = jsonio::paving_to_json(fib.value);
      j["nu"] = nu;
      if (want_cells) j["cells"] = jsonio::cells_to_json(*fib.cells);
      emit(out, j, text);
      return 0;
    }
    if (*oracle_verify) {
      std::vector<oracle::SuiteReport> reports;
      if (suite_name.empty()) {
        reports = oracle::run_all_suites(verify_all);
      } else if (suite_name == "bott-samelson") {
        reports = {oracle::suite_bott_samelson(verify_all)};
      } else if (suite_name == "finite-constants") {
        reports = {oracle::suite_finite_constants(verify_all)};
      } else if (suite_name == "subword") {
        reports = {oracle::suite_subword_bruhat(verify_all)};
      } else {
        throw UserError("unknown suite '" + suite_name + "'");
      }
      bool all_ok = true;
      json j = json::array();
      for (const auto& r : reports) {
        json e;
        e["suite"] = r.name;
        e["passed"] = r.passed;
        e["checks"] = r.checks;
        if (!r.passed) e["counterexample"] = r.detail;
        j.push_back(e);
        all_ok &= r.passed;
        err << (r.passed ? "pass" : "FAIL") << ": " << r.name << " (" << r.checks
            << " checks)\n";
      }
      emit(out, j, text);
      return all_ok ? 0 : 2;
    }
  } catch (const InternalCheckError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const UserError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace affpav::cli
