#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "natdual/hom.hpp"
#include "natdual/kleene.hpp"
#include "natdual/verify.hpp"

using namespace natdual;

namespace {

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(std::string const& s) {
  Range r;
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s);
    } else {
      r.lo = std::stoi(s.substr(0, dots));
      r.hi = std::stoi(s.substr(dots + 2));
    }
  } catch (std::exception const&) {
    throw Error(ErrorKind::parse, "bad range '" + s + "'");
  }
  if (r.lo > r.hi) throw Error(ErrorKind::invalid_parameter, "empty range '" + s + "'");
  return r;
}

void emit(std::string const& text, std::string const& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorKind::invalid_parameter, "cannot write " + out);
  f << text;
}

FiniteAlgebra algebra_by_kind(std::string const& kind, int k) {
  if (kind == "Z") return make_sugihara_algebra(k);
  if (kind == "W") return make_sugihara_monoid(k);
  if (kind == "kleene") return make_kleene_algebra();
  if (kind == "kleene-lat") return make_kleene_lattice();
  throw Error(ErrorKind::invalid_parameter, "unknown algebra kind " + kind);
}

std::vector<DualitySpec> specs_for(std::vector<std::string> const& names, Range m) {
  std::vector<DualitySpec> out;
  for (auto const& n : names) {
    auto k = spec_kind_from_string(n);
    if (!is_parametric(k)) {
      out.push_back({k, 2});
      continue;
    }
    for (int i = m.lo; i <= m.hi; ++i) out.push_back({k, i});
  }
  return out;
}

std::vector<std::string> const kAllChecks{"duality",   "separation",    "tables",         "generators", "entailment",
                                          "strongness", "variety-facts", "kleene-translation", "free"};
std::vector<std::string> const kAllSpecs{"odd-alg", "even-alg", "odd-mon", "even-mon", "kleene", "kleene-lat"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Natural dualities for Sugihara algebras, monoids and Kleene algebras"};
  app.require_subcommand(1);

  std::string kind;
  int k = 3;
  auto* algebra = app.add_subcommand("algebra", "print an algebra as JSON");
  algebra->add_option("kind", kind, "Z, W, kleene or kleene-lat")->required();
  algebra->add_option("k", k, "size of the chain");

  std::string spec_name;
  int m = 2, s = 1;
  std::size_t guard = 2000;
  std::string out;
  bool json = false;
  auto* free = app.add_subcommand("free", "free algebra E(M^s) with the oracle cross-check");
  free->add_option("spec", spec_name, "duality spec")->required();
  int s_pos = -1;
  free->add_option("generators", s_pos, "number of generators");
  free->add_option("--s", s, "number of generators");
  free->add_option("--m", m, "parameter m");
  free->add_option("--guard-size", guard, "largest power to enumerate");
  free->add_option("--out", out, "write the algebra JSON here");
  free->add_flag("--json", json, "print the algebra as JSON");

  std::vector<std::string> checks, vspecs;
  std::string m_range = "2..3", s_range = "0..1";
  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("checks", checks, "checks to run (default: all)")->check(CLI::IsMember(kAllChecks));
  verify->add_option("--spec", vspecs, "duality specs (repeatable)");
  verify->add_option("--m", m_range, "m range, e.g. 2..4");
  verify->add_option("--s", s_range, "s range for free algebras and the Kleene translation");
  verify->add_option("--guard-size", guard, "largest power to enumerate");
  verify->add_option("--out", out, "directory for report.json");
  verify->add_flag("--json", json, "print the JSON report");

  std::string what, format = "dot";
  auto* exp = app.add_subcommand("export", "export an alter ego, a dual or a Kleene space");
  exp->add_option("what", what, "ego, dual-free, power or kleene-space")
      ->required()
      ->check(CLI::IsMember({"ego", "dual-free", "power", "kleene-space"}));
  exp->add_option("--spec", spec_name, "duality spec")->default_val("kleene");
  exp->add_option("--m", m, "parameter m");
  exp->add_option("--s", s, "power / number of generators");
  exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--out", out, "output file (default stdout)");
  exp->add_option("--guard-size", guard, "largest power to enumerate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*algebra) {
      std::cout << to_json(algebra_by_kind(kind, k)).dump(2) << '\n';
      return 0;
    }

    if (*free) {
      DualitySpec spec{spec_kind_from_string(spec_name), m};
      if (s_pos >= 0) s = s_pos;
      auto r = check_free(spec, s, guard);
      auto f = free_algebra(build_alter_ego(spec), s, guard);
      Json j{{"check", to_json(r)}, {"size", f.size()}, {"spec", to_string(spec)}, {"s", s}};
      if (!out.empty()) emit(to_json(f).dump(2) + "\n", out);
      if (json) j["algebra"] = to_json(f);
      std::cout << j.dump(2) << '\n';
      return r.ok ? 0 : 1;
    }

    if (*verify) {
      if (checks.empty()) checks = kAllChecks;
      if (vspecs.empty()) vspecs = kAllSpecs;
      auto const mr = parse_range(m_range);
      auto const sr = parse_range(s_range);
      if (mr.lo < 2) throw Error(ErrorKind::invalid_parameter, "m starts at 2");
      if (sr.lo < 0) throw Error(ErrorKind::invalid_parameter, "s must be nonnegative");
      if (guard == 0) throw Error(ErrorKind::invalid_parameter, "guard must be positive");
      auto const specs = specs_for(vspecs, mr);
      std::set<std::string> const want(checks.begin(), checks.end());
      std::vector<CheckResult> results;
      bool any_monoid = false, any_algebra = false;
      for (auto const& sp : specs) {
        bool const par = is_parametric(sp.kind);
        any_monoid = any_monoid || is_monoid(sp.kind);
        any_algebra = any_algebra || (par && !is_monoid(sp.kind));
        if (want.count("duality")) {
          results.push_back(check_unit(sp, default_parents(sp)));
          results.push_back(check_counit(sp, default_parents(sp)));
        }
        if (want.count("strongness")) results.push_back(check_strongness_sweep(sp, default_parents(sp)).result);
        if (par && want.count("separation")) results.push_back(check_separation(sp));
        if (par && want.count("tables")) results.push_back(check_tables(sp));
        if (par && want.count("entailment")) results.push_back(check_entailment(sp));
        if (want.count("free"))
          for (int i = sr.lo; i <= sr.hi; ++i) results.push_back(check_free(sp, i, guard));
      }
      for (int i = mr.lo; i <= mr.hi; ++i) {
        if (want.count("generators")) results.push_back(check_generators(i));
        if (want.count("variety-facts")) {
          if (any_algebra) results.push_back(check_variety_facts(i, false));
          if (any_monoid) results.push_back(check_variety_facts(i, true));
        }
      }
      if (want.count("kleene-translation")) results.push_back(check_kleene_translation(sr.hi));

      bool ok = true;
      Json list = Json::array();
      for (auto const& r : results) {
        ok = ok && r.ok;
        list.push_back(to_json(r));
      }
      Json report{{"checks", list},
                  {"config", {{"checks", checks}, {"guard", guard}, {"m", m_range}, {"s", s_range}, {"specs", vspecs}}},
                  {"ok", ok}};
      if (!out.empty()) {
        std::filesystem::create_directories(out);
        emit(report.dump(2) + "\n", (std::filesystem::path(out) / "report.json").string());
      }
      if (json) {
        std::cout << report.dump(2) << '\n';
      } else {
        for (auto const& r : results) {
          std::cout << (r.ok ? "ok   " : "FAIL ") << r.name << " (" << r.items << " items)\n";
          for (std::size_t i = 0; i < r.failures; ++i) std::cout << "     " << r.notes[i] << '\n';
        }
        std::cout << (ok ? "all checks pass\n" : "some checks fail\n");
      }
      return ok ? 0 : 1;
    }

    if (*exp) {
      DualitySpec spec{spec_kind_from_string(spec_name), m};
      auto const ego = build_alter_ego(spec);
      std::string text;
      if (what == "kleene-space") {
        if (spec.kind != SpecKind::kleene_alg) throw Error(ErrorKind::invalid_parameter, "kleene-space needs --spec kleene");
        auto k2 = quotient_to_kleene_space(structure_power(ego.structure(), s));
        text = format == "dot" ? to_dot(k2) : to_json(k2).dump(2) + "\n";
      } else {
        MultisortedStructure x;
        if (what == "ego") {
          x = ego.structure();
        } else if (what == "power") {
          x = structure_power(ego.structure(), s);
        } else {
          x = dual_of_algebra(free_algebra(ego, s, guard), ego);
        }
        text = format == "dot" ? to_dot(x) : to_json(x).dump(2) + "\n";
      }
      emit(text, out);
      return 0;
    }
  } catch (Error const& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}
