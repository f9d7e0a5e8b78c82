#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "leibniz/classify.hpp"
#include "leibniz/cover.hpp"
#include "leibniz/error.hpp"
#include "leibniz/io.hpp"
#include "leibniz/sweep.hpp"

using namespace leibniz;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string field;
  std::optional<std::size_t> cap;
  std::string output;
};

Options opts;

// Field override: rewrites the "field" key of every algebra object before parsing.
void override_field(Json& alg) {
  if (opts.field.empty()) return;
  alg["field"] = opts.field == "Q" ? Json("Q") : Json{{"GF", std::stoull(opts.field)}};
}

LeibnizAlgebra load_algebra(const std::string& path) {
  Json j = io::read_file(path);
  override_field(j);
  return io::algebra_from_json(j);
}

Pair load_pair(const std::string& path) {
  Json j = io::read_file(path);
  if (j.is_object() && j.contains("algebra")) override_field(j["algebra"]);
  return io::pair_from_json(j);
}

CrossedModule load_crossed_module(const std::string& path) {
  Json j = io::read_file(path);
  if (j.is_object() && j.contains("m")) override_field(j["m"]);
  if (j.is_object() && j.contains("g")) override_field(j["g"]);
  return io::crossed_module_from_json(j);
}

void write(const Json& report) {
  std::string text = io::emit(report);
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + opts.output);
  out << text;
}

Json violations_json(const ValidationReport& r) {
  Json out = Json::array();
  for (const auto& v : r.violations) out.push_back({{"axiom", v.axiom}, {"indices", v.indices}});
  return out;
}

Json homology_methods(const Pair& p, const std::string& which, bool& agree) {
  Json out = Json::object();
  Json skipped = Json::object();
  std::optional<std::size_t> first;
  agree = true;
  auto record = [&](const char* name, auto&& run) {
    if (which != "all" && which != name) return;
    try {
      std::size_t d = run().dim;
      out[name] = d;
      if (first && *first != d) agree = false;
      if (!first) first = d;
    } catch (const Error& e) {
      bool skippable = e.code() == ErrorCode::IdealNotCentral || e.code() == ErrorCode::DimensionCapExceeded;
      if (which != "all" || !skippable) throw;
      skipped[name] = e.code() == ErrorCode::DimensionCapExceeded ? "cone skipped: dimension cap" : "ideal not central";
    }
  };
  record("exterior", [&] { return hl2_exterior(p); });
  record("cone", [&] { return hl2_cone(p, opts.cap); });
  record("tau", [&] { return hl2_central_tau(p); });
  record("star", [&] { return hl2_central_star(p); });
  if (out.empty()) throw Error(ErrorCode::InvalidInput, "unknown method '" + which + "'");
  out["agreement"] = agree;
  if (!skipped.empty()) out["skipped"] = skipped;
  return out;
}

Json tensor_json(const TensorPresentation& tp) {
  Json basis = Json::array();
  for (const auto& v : tp.quotient.complement.basis_vectors()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) {
        basis.push_back(tp.symbol_name(i));
        break;
      }
    }
  }
  return {{"dim", tp.dim()}, {"basis", basis}, {"kind", tp.kind == TensorKind::Tensor ? "tensor" : "exterior"}};
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t q = std::stoul(text);
      return {q, q};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad range '" + text + "'");
  }
}

Json verdict_json(const ClassificationVerdict& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    checks.push_back({{"case", std::string(to_string(c.kind))},
                      {"k", c.k},
                      {"condition", std::string(to_string(c.condition))},
                      {"defect_matches", c.defect_matches},
                      {"consistent", c.consistent()},
                      {"reason", c.reason}});
  }
  const Evidence& e = v.evidence;
  return {{"n", v.n},
          {"m", v.m},
          {"hl2", v.hl2_dim},
          {"defect", v.defect},
          {"case", std::string(to_string(v.matched_case))},
          {"consistent", v.consistent()},
          {"evidence",
           {{"dim_g2", e.dim_g2},
            {"dim_center", e.dim_center},
            {"dim_center_cap_n", e.dim_center_cap_n},
            {"n_central", e.n_central},
            {"decomposition_found", e.decomposition_found},
            {"witness", e.witness}}},
          {"checks", checks}};
}

Json cover_report(const StemCoverCandidate& c, bool& ok) {
  ValidationReport cm = validate_crossed_module(c.cm);
  ValidationReport sc = validate_stem_cover(c);
  ok = cm.ok() && sc.ok();
  return {{"crossed_module_violations", violations_json(cm)},
          {"stem_cover_violations", violations_json(sc)},
          {"kernel_dim", kernel(c.cm.delta).dim()},
          {"hl2", hl2_dim(c.target)},
          {"ok", ok}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right Leibniz algebras: tensor products, relative homology, covers"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", opts.field, "Field override: Q or a prime p");
  app.add_option("--cap", opts.cap, "Cone dimension cap (default LEIBNIZ_DIM_CAP or 8)");
  app.add_option("-o,--output", opts.output, "Write the report here instead of standard output");

  std::string algebra_file, pair_file, second_file, cm_file, ideal_file, method = "all", q_range = "0..2", construct;
  std::string catalog_name;
  std::size_t param = 0;
  bool emit = false;

  auto* validate = app.add_subcommand("validate", "Check an algebra, pair or crossed module");
  auto* v_inputs = validate->add_option_group("input");
  v_inputs->add_option("--algebra", algebra_file)->check(CLI::ExistingFile);
  v_inputs->add_option("--pair", pair_file)->check(CLI::ExistingFile);
  v_inputs->add_option("--crossed-module", cm_file)->check(CLI::ExistingFile);
  v_inputs->require_option(1);

  auto* invariants = app.add_subcommand("invariants", "Structural invariants of an algebra or pair");
  auto* i_inputs = invariants->add_option_group("input");
  i_inputs->add_option("--algebra", algebra_file)->check(CLI::ExistingFile);
  i_inputs->add_option("--pair", pair_file)->check(CLI::ExistingFile);
  i_inputs->require_option(1);

  auto* tensor = app.add_subcommand("tensor", "m*n for the pair ideal n and an ideal m (default g)");
  auto* exterior = app.add_subcommand("exterior", "m∧n for the pair ideal n and an ideal m (default g)");
  for (auto* sub : {tensor, exterior}) {
    sub->add_option("--pair", pair_file)->required()->check(CLI::ExistingFile);
    sub->add_option("--m", ideal_file, "Ideal file for m")->check(CLI::ExistingFile);
  }

  auto* hl2 = app.add_subcommand("hl2", "dim HL_2(g,n)");
  hl2->add_option("--pair", pair_file)->required()->check(CLI::ExistingFile);
  hl2->add_option("--method", method)->check(CLI::IsMember({"all", "exterior", "cone", "tau", "star"}));

  auto* kunneth = app.add_subcommand("kunneth", "HL_2 of a direct sum of pairs against its decomposition");
  kunneth->add_option("--pair", pair_file)->required()->check(CLI::ExistingFile);
  kunneth->add_option("--second", second_file)->required()->check(CLI::ExistingFile);

  auto* bounds = app.add_subcommand("bounds", "Upper bounds for dim HL_2 of a nilpotent pair");
  bounds->add_option("--pair", pair_file)->required()->check(CLI::ExistingFile);

  auto* classify_cmd = app.add_subcommand("classify", "Defect and classification checks");
  classify_cmd->add_option("--pair", pair_file)->required()->check(CLI::ExistingFile);

  auto* prop43 = app.add_subcommand("prop43-sweep", "Two-dimensional ideals of e ⊕ a(q), e in {J1, J2, H1}");
  prop43->add_option("--q", q_range, "q or lo..hi");

  auto* cover = app.add_subcommand("cover", "Validate or construct a relative stem cover");
  cover->add_option("--pair", pair_file)->required()->check(CLI::ExistingFile);
  auto* c_inputs = cover->add_option_group("source");
  c_inputs->add_option("--crossed-module", cm_file)->check(CLI::ExistingFile);
  c_inputs->add_option("--construct", construct)->check(CLI::IsMember({"abelian", "cocycle", "zero"}));
  c_inputs->require_option(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog algebras");
  catalog_cmd->add_option("name", catalog_name, "abelian, J1, J2, H1, heisenberg, sl2");
  catalog_cmd->add_option("--param", param, "Dimension for abelian, k for heisenberg");
  catalog_cmd->add_flag("--emit", emit, "Print the structure-constant file");

  auto* oracle = app.add_subcommand("oracle-diff", "Run every applicable HL_2 method and compare");
  oracle->add_option("--pair", pair_file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (!opts.field.empty() && opts.field != "Q") {
    try {
      Field::prime(std::stoull(opts.field));
    } catch (const std::exception& e) {
      std::cerr << "bad --field '" << opts.field << "'\n";
      return kInputError;
    }
  }

  try {
    if (*validate) {
      ValidationReport r;
      Json report;
      if (!algebra_file.empty()) {
        r = leibniz::validate(load_algebra(algebra_file));
      } else if (!pair_file.empty()) {
        Json j = io::read_file(pair_file);
        if (j.is_object() && j.contains("algebra")) override_field(j["algebra"]);
        LeibnizAlgebra g = io::algebra_from_json(io::Json(j.value("algebra", Json())));
        r = leibniz::validate(g);
        Subspace n = io::subspace_from_json(j.value("ideal", Json()), g.field(), g.dim());
        if (!is_ideal(g, n)) r.add("ideal", {});
      } else {
        r = validate_crossed_module(load_crossed_module(cm_file));
      }
      report = {{"ok", r.ok()}, {"violations", violations_json(r)}};
      write(report);
      return r.ok() ? kOk : kCheckFailed;
    }

    if (*invariants) {
      Pair p = algebra_file.empty() ? load_pair(pair_file) : Pair::full(load_algebra(algebra_file));
      const LeibnizAlgebra& g = p.g;
      if (!leibniz::validate(g).ok()) throw Error(ErrorCode::InvalidInput, "not a right Leibniz algebra");
      Json lcs = Json::array();
      for (const auto& s : lower_central_series(g)) lcs.push_back(s.dim());
      bool nil = is_nilpotent(g);
      Json report = {{"dim", g.dim()},
                     {"field", g.field().name()},
                     {"dim_derived", derived(g).dim()},
                     {"dim_center", center(g).dim()},
                     {"abelian", is_abelian(g)},
                     {"lie", is_lie(g)},
                     {"nilpotent", nil},
                     {"lower_central_series", lcs},
                     {"extra_special", is_extra_special(g)},
                     {"hl2_g", hl2_exterior(Pair::full(g)).dim}};
      if (nil) report["generators"] = minimal_generator_count(g);
      if (!algebra_file.empty()) {
        write(report);
        return kOk;
      }
      report["ideal"] = format_subspace(g, p.n);
      report["dim_n"] = p.n.dim();
      report["hl1"] = hl1(p).dim;
      report["hl2"] = hl2_exterior(p).dim;
      report["dim_center_of_pair"] = center_of_pair(p).dim();
      write(report);
      return kOk;
    }

    if (*tensor || *exterior) {
      Pair p = load_pair(pair_file);
      Subspace m = ideal_file.empty() ? full_space(p.g)
                                      : io::subspace_from_json(io::read_file(ideal_file), p.g.field(), p.g.dim());
      TensorPresentation tp = *tensor ? tensor_product(p.g, m, p.n) : exterior_product(p.g, m, p.n);
      write(tensor_json(tp));
      return kOk;
    }

    if (*hl2 || *oracle) {
      Pair p = load_pair(pair_file);
      bool agree = true;
      Json report = homology_methods(p, *oracle ? "all" : method, agree);
      write(report);
      return agree ? kOk : kCheckFailed;
    }

    if (*kunneth) {
      KunnethReport k = kunneth_check(load_pair(pair_file), load_pair(second_file));
      write({{"direct", k.direct},
             {"first", k.first},
             {"second", k.second},
             {"b_factor", k.b_factor},
             {"holds", k.holds()}});
      return k.holds() ? kOk : kCheckFailed;
    }

    if (*bounds) {
      Pair p = load_pair(pair_file);
      BoundReport b = bound_theorem36(p);
      Cor39Report c = bound_cor39(p.g);
      write({{"pair_bound", {{"hl2", b.lhs}, {"bound", b.rhs}, {"holds", b.holds()}, {"slack", b.slack()}}},
             {"algebra_bound",
              {{"hl2", c.bound.lhs},
               {"bound", c.bound.rhs},
               {"holds", c.bound.holds()},
               {"equality", c.bound.equality()},
               {"abelian", c.abelian},
               {"equality_matches", c.equality_matches()}}}});
      return b.holds() && c.bound.holds() && c.equality_matches() ? kOk : kCheckFailed;
    }

    if (*classify_cmd) {
      ClassificationVerdict v = classify(load_pair(pair_file));
      Json report = verdict_json(v);
      report["pair"] = std::filesystem::path(pair_file).filename().string();
      write(report);
      return v.consistent() ? kOk : kCheckFailed;
    }

    if (*prop43) {
      auto [lo, hi] = parse_range(q_range);
      Json rows = Json::array();
      bool ok = true;
      for (const auto& r : prop43_sweep(hi)) {
        if (r.q < lo) continue;
        LeibnizAlgebra g = extra_special_sum(r.e, r.q);
        rows.push_back({{"e", r.e},
                        {"q", r.q},
                        {"ideal", format_subspace(g, r.n)},
                        {"row", std::string(to_string(r.row))},
                        {"expected", r.expected},
                        {"actual", r.actual},
                        {"matches", r.matches()}});
        ok = ok && r.matches();
      }
      write({{"rows", rows}, {"all_match", ok}});
      return ok ? kOk : kCheckFailed;
    }

    if (*cover) {
      Pair p = load_pair(pair_file);
      StemCoverCandidate c;
      if (!cm_file.empty()) {
        c = {load_crossed_module(cm_file), p};
      } else if (construct == "abelian") {
        c = abelian_pair_cover(p);
      } else if (construct == "cocycle") {
        if (!p.n.is_full()) throw Error(ErrorCode::InvalidInput, "cocycle covers need n = g");
        c = cocycle_cover(p.g);
      } else {
        if (!p.n.is_zero()) throw Error(ErrorCode::InvalidInput, "the zero cover needs n = 0");
        c = zero_cover(p.g);
      }
      bool ok = true;
      Json report = cover_report(c, ok);
      if (!construct.empty()) report["crossed_module"] = io::crossed_module_to_json(c.cm);
      write(report);
      return ok ? kOk : kCheckFailed;
    }

    if (*catalog_cmd) {
      if (catalog_name.empty()) {
        Json names = Json::array();
        for (const auto& [name, g] : catalog_algebras(5)) names.push_back({{"name", name}, {"dim", g.dim()}});
        write(names);
        return kOk;
      }
      Field f = opts.field.empty() || opts.field == "Q" ? Field::rationals() : Field::prime(std::stoull(opts.field));
      LeibnizAlgebra g = catalog::by_name(catalog_name, param, f);
      if (emit) {
        write(io::algebra_to_json(g));
      } else {
        write({{"name", catalog_name}, {"dim", g.dim()}, {"basis", g.labels()}});
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
