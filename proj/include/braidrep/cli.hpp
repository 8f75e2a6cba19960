#ifndef BRAIDREP_CLI_HPP_
#define BRAIDREP_CLI_HPP_

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidrep/analyze.hpp"
#include "braidrep/catalog.hpp"
#include "braidrep/construct.hpp"
#include "braidrep/extract.hpp"
#include "braidrep/json_io.hpp"

namespace braidrep::cli {

using json_io::json;

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kExtraction = 3 };

/// Tolerances with BRAIDREP_TOL applied to the validation and relation
/// thresholds.
inline Tolerances default_tolerances() {
  Tolerances tol;
  if (const char* env = std::getenv("BRAIDREP_TOL")) {
    try {
      const double v = std::stod(env);
      if (v > 0.0) {
        tol.validate = v;
        tol.rel = v;
      }
    } catch (const std::exception&) {
      // Unparseable values leave the defaults in place.
    }
  }
  return tol;
}

/// "re,im" or "re".
inline Complex parse_complex(const std::string& s) {
  std::stringstream ss(s);
  std::string re, im;
  std::getline(ss, re, ',');
  std::getline(ss, im);
  try {
    std::size_t used = 0;
    const double r = std::stod(re, &used);
    if (used != re.size()) throw std::invalid_argument(s);
    double i = 0.0;
    if (!im.empty()) {
      i = std::stod(im, &used);
      if (used != im.size()) throw std::invalid_argument(s);
    }
    return {r, i};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidParameter, "complex values are written re,im: got '" + s + "'");
  }
}

inline std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidParameter, "expected comma-separated integers: got '" + s + "'");
    }
  }
  return out;
}

inline void write_doc(const json& doc, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << doc.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::Schema, "cannot write " + path);
  f << doc.dump(2) << "\n";
}

inline bool is_extraction_failure(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotCommuting:
    case ErrorKind::ScalarOperator:
    case ErrorKind::ClosureFailed:
    case ErrorKind::NoMatch:
    case ErrorKind::NotPermutation:
    case ErrorKind::NonSquareBlock:
      return true;
    default:
      return false;
  }
}

inline const char* condition_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotCommuting:
      return "condition (2)";
    case ErrorKind::ScalarOperator:
      return "condition (1)";
    default:
      return "condition (3)";
  }
}

inline int cmd_build(const std::string& input, const std::string& output, bool weighted, double tol,
                     std::ostream& out, std::ostream& err) {
  const FiveTuple t = json_io::tuple_from_json(json_io::read_file(input));
  json reports = json::array();
  try {
    for (const auto& r : validate_tuple(t, tol)) reports.push_back(json_io::report_to_json(r));
    const Representation rep = weighted ? build_representation_weighted(t, tol) : build_representation(t, tol);
    write_doc(json_io::representation_to_json(rep), output, out);
  } catch (const ValidationError& e) {
    json doc = json_io::error_to_json(e);
    doc["report"] = json_io::report_to_json(e.report());
    err << doc.dump() << "\n";
    return kValidation;
  }
  err << json{{"status", "ok"}, {"reports", reports}}.dump() << "\n";
  return kOk;
}

inline int cmd_extract(const std::string& input, const std::string& output, const Tolerances& tol,
                       std::ostream& out, std::ostream& err) {
  const Representation rep = json_io::representation_from_json(json_io::read_file(input));
  Parametrization p;
  try {
    p = parametrize(rep, tol);
  } catch (const Error& e) {
    if (!is_extraction_failure(e.kind())) throw;
    json doc = json_io::error_to_json(e);
    doc["condition"] = condition_of(e.kind());
    err << doc.dump() << "\n";
    return kExtraction;
  }
  write_doc(json_io::tuple_to_json(p.tuple), output, out);
  json eigenvalues = json::array();
  for (const auto& clusters : p.spectral.clusters) {
    json per = json::array();
    for (const auto& c : clusters) per.push_back({{"value", c.value.real()}, {"multiplicity", c.multiplicity}});
    eigenvalues.push_back(std::move(per));
  }
  json nu_profile = json::object();
  for (int v : p.tuple.nu) nu_profile[std::to_string(v)] = nu_profile.value(std::to_string(v), 0) + 1;
  err << json{{"status", "ok"},
              {"eigenvalues", eigenvalues},
              {"point_count", p.tuple.support().size()},
              {"nu_profile", nu_profile},
              {"equivalence_residual", p.equivalence_residual},
              {"closure", json_io::report_to_json(p.closure.report)},
              {"lambda_check", json_io::report_to_json(p.lambda_check)},
              {"warnings", p.warnings}}
             .dump()
      << "\n";
  return kOk;
}

inline int cmd_verify(const std::string& input, const Tolerances& tol, std::ostream& out, std::ostream& err) {
  const json doc = json_io::read_file(input);
  json reports = json::array();
  bool pass = true;
  auto add = [&](const ValidationReport& r) {
    pass = pass && r.pass;
    reports.push_back(json_io::report_to_json(r));
  };
  auto relation_report = [&](const Representation& rep) {
    ValidationReport r{"generator_braid_relations", true, 0.0, tol.rel, {}};
    for (const auto& rel : braid_relation_residuals(rep)) r.record(rel.residual, {rel.i, -1, rel.relation});
    return r;
  };
  if (json_io::is_tuple_doc(doc)) {
    const FiveTuple t = json_io::tuple_from_json(doc);
    try {
      validate_structure(t, tol.inv);
    } catch (const Error& e) {
      err << json_io::error_to_json(e).dump() << "\n";
      out << json{{"kind", "five_tuple"}, {"pass", false}, {"error", json_io::error_to_json(e)}}.dump(2) << "\n";
      return kValidation;
    }
    for (const auto& r : validate_tuple(t, tol.validate)) add(r);
    if (pass) add(relation_report(build_representation(t, tol.validate)));
    out << json{{"kind", "five_tuple"}, {"pass", pass}, {"reports", reports}}.dump(2) << "\n";
  } else {
    const Representation rep = json_io::representation_from_json(doc);
    validate_representation(rep, tol.inv);
    add(relation_report(rep));
    out << json{{"kind", "representation"}, {"pass", pass}, {"reports", reports}}.dump(2) << "\n";
  }
  return pass ? kOk : kValidation;
}

struct CatalogOptions {
  std::string name;
  int n = 4;
  std::string t = "2,0";
  std::string q;
  int m = 3;
  std::string gamma = "trivial";
  std::string z;
  std::string as = "matrices";
};

inline CMatrix parse_q(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::InvalidParameter, "--q is required (JSON matrix, e.g. [[1,2],[3,1]])");
  return json_io::matrix_from_json(json_io::parse(text));
}

inline int cmd_catalog(const CatalogOptions& o, std::ostream& out) {
  const bool tuple = o.as == "tuple";
  if (!tuple && o.as != "matrices") throw Error(ErrorKind::InvalidParameter, "--as must be matrices or tuple");
  auto emit = [&](const Representation* rep, const FiveTuple* t) {
    if (tuple) {
      if (t == nullptr) throw Error(ErrorKind::InvalidParameter, o.name + " has no five-tuple form");
      out << json_io::tuple_to_json(*t).dump(2) << "\n";
    } else {
      out << json_io::representation_to_json(*rep).dump(2) << "\n";
    }
    return kOk;
  };
  if (o.name == "standard") {
    const Complex t = parse_complex(o.t);
    const auto rep = catalog::standard(o.n, t);
    const auto tp = tuple ? catalog::standard_tuple(o.n, t) : FiveTuple{};
    return emit(&rep, &tp);
  }
  if (o.name == "burau") {
    const auto rep = catalog::burau(o.n, parse_complex(o.t));
    return emit(&rep, nullptr);
  }
  if (o.name == "diagonal-local") {
    const CMatrix q = parse_q(o.q);
    const auto rep = catalog::diagonal_local(q, o.n);
    const auto tp = tuple ? catalog::diagonal_local_tuple(q, o.n) : FiveTuple{};
    return emit(&rep, &tp);
  }
  if (o.name == "group-cocycle") {
    const auto sym = catalog::symmetric_group(o.m);
    const auto tset = sym.transpositions();
    catalog::GammaCocycle gamma;
    if (o.gamma == "trivial") {
      gamma = catalog::gamma_trivial(sym.table, tset);
    } else if (o.gamma == "coboundary") {
      // Sign character and f(t) = 1 + index of t.
      std::map<int, Complex> f;
      for (int t : tset.elements) f[t] = Complex(1.0 + t, 0.0);
      gamma = catalog::gamma_coboundary(
          sym.table, tset, [&](int g) { return Complex(static_cast<double>(sym.sign(g)), 0.0); }, f);
    } else {
      throw Error(ErrorKind::InvalidParameter, "--gamma must be trivial or coboundary");
    }
    const auto rep = catalog::group_cocycle_local(sym.table, tset, gamma, o.n);
    const auto tp = tuple ? catalog::group_cocycle_local_tuple(sym.table, tset, gamma, o.n) : FiveTuple{};
    return emit(&rep, &tp);
  }
  if (o.name == "eg") {
    const auto z = parse_ints(o.z);
    const auto fam = catalog::eg_family(z, catalog::eg_symmetric_q(parse_complex(o.t)), static_cast<int>(z.size()));
    return emit(&fam.rep, &fam.tuple);
  }
  if (o.name == "indecomposable") {
    const auto tp = catalog::indecomposable_example(o.n);
    const auto rep = build_representation(tp);
    return emit(&rep, &tp);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown catalog entry '" + o.name + "'");
}

inline json commutant_json(const CommutantReport& c) {
  return {{"dimension", c.dimension},
          {"radical_dim", c.radical_dim},
          {"semisimple_quotient_dim", c.semisimple_quotient_dim},
          {"is_scalar", c.is_scalar},
          {"is_local", c.is_local}};
}

inline int cmd_analyze(const std::string& input, const std::vector<std::string>& checks, const Tolerances& tol,
                       std::ostream& out) {
  const json doc = json_io::read_file(input);
  std::optional<FiveTuple> t;
  Representation rep;
  if (json_io::is_tuple_doc(doc)) {
    t = json_io::tuple_from_json(doc);
    rep = build_representation(*t, tol.validate);
  } else {
    rep = json_io::representation_from_json(doc);
  }
  auto need_tuple = [&](const std::string& c) {
    if (!t) throw Error(ErrorKind::InvalidParameter, "check '" + c + "' needs a five-tuple document");
  };
  json report = json::object();
  for (const auto& c : checks) {
    if (c == "irreducible") {
      const auto r = is_irreducible(rep, tol);
      json j{{"verdict", verdict_name(r.verdict)}, {"closure_dim", r.closure_dim}, {"full_dim", r.full_dim}};
      if (r.invariant_subspace) {
        j["invariant_subspace"] = json_io::to_json(*r.invariant_subspace);
        j["invariance_leak"] = detail::invariance_leak(rep, *r.invariant_subspace);
      }
      report["irreducible"] = j;
    } else if (c == "factor") {
      const auto r = is_factor(rep, tol);
      report["factor"] = {{"verdict", verdict_name(r.verdict)}, {"algebra_dim", r.algebra_dim}, {"center_dim", r.center_dim}};
    } else if (c == "indecomposable") {
      const auto r = is_indecomposable(rep, tol);
      report["indecomposable"] = {{"verdict", verdict_name(r.verdict)}, {"commutant", commutant_json(r.commutant)}};
    } else if (c == "orbits") {
      need_tuple(c);
      const auto r = orbit_decomposition(*t);
      report["orbits"] = {{"orbits", r.orbits}, {"masses", r.masses}, {"count", r.orbits.size()}, {"ergodic", r.ergodic}};
    } else if (c == "section6") {
      need_tuple(c);
      json props = json::array();
      for (const auto& p : cross_check_section6(*t, tol).checks) {
        json hyps = json::object();
        for (const auto& h : p.hypotheses) hyps[h.name] = h.holds;
        json entry{{"proposition", p.proposition},
                   {"hypotheses", hyps},
                   {"conclusion", p.conclusion},
                   {"verdict", cross_verdict_name(p.verdict)}};
        entry["conclusion_holds"] = p.conclusion_holds ? json(*p.conclusion_holds) : json(nullptr);
        props.push_back(std::move(entry));
      }
      report["section6"] = props;
    } else {
      throw Error(ErrorKind::InvalidParameter, "unknown check '" + c + "'");
    }
  }
  out << report.dump(2) << "\n";
  return kOk;
}

inline Representation load_representation(const std::string& path, const Tolerances& tol) {
  const json doc = json_io::read_file(path);
  if (json_io::is_tuple_doc(doc)) return build_representation(json_io::tuple_from_json(doc), tol.validate);
  return json_io::representation_from_json(doc);
}

inline int cmd_equiv(const std::string& a, const std::string& b, const Tolerances& tol, std::ostream& out) {
  const auto r = are_equivalent(load_representation(a, tol), load_representation(b, tol), tol);
  json doc{{"verdict", verdict_name(r.verdict)}, {"intertwiner_dim", r.intertwiner_dim}, {"note", r.note}};
  if (r.witness) {
    doc["witness"] = json_io::to_json(*r.witness);
    doc["residual"] = r.residual;
  }
  out << doc.dump(2) << "\n";
  return kOk;
}

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Tolerances base = default_tolerances();
  CLI::App app{"Braid group representations from five-tuples", "braidrep"};
  app.require_subcommand(1);

  std::string input, output, input2;
  bool weighted = false;
  double tol_build = base.validate;
  auto* build = app.add_subcommand("build", "Build generator matrices from a five-tuple document");
  build->add_option("input", input, "FiveTupleDoc path")->required();
  build->add_option("-o,--output", output, "output path (default stdout)");
  build->add_flag("--weighted", weighted, "use the measure-weighted coordinates");
  build->add_option("--tol", tol_build, "validation tolerance");

  Tolerances ext = base;
  auto* extract = app.add_subcommand("extract", "Recover a five-tuple from generator matrices");
  extract->add_option("input", input, "RepresentationDoc path")->required();
  extract->add_option("-o,--output", output, "output path (default stdout)");
  extract->add_option("--tol-cluster", ext.cluster, "eigenvalue clustering tolerance");
  extract->add_option("--tol-comm", ext.comm, "commutation tolerance");

  auto* verify = app.add_subcommand("verify", "Run all validators on a document");
  verify->add_option("input", input, "RepresentationDoc or FiveTupleDoc path")->required();

  CatalogOptions cat;
  auto* catalog_cmd = app.add_subcommand("catalog", "Emit a named construction");
  catalog_cmd->add_option("name", cat.name, "standard|burau|diagonal-local|group-cocycle|eg|indecomposable")
      ->required();
  catalog_cmd->add_option("--n", cat.n, "strand count");
  catalog_cmd->add_option("--t", cat.t, "complex parameter re,im");
  catalog_cmd->add_option("--q", cat.q, "JSON matrix for diagonal-local");
  catalog_cmd->add_option("--m", cat.m, "symmetric group degree for group-cocycle");
  catalog_cmd->add_option("--gamma", cat.gamma, "trivial|coboundary");
  catalog_cmd->add_option("--z", cat.z, "comma-separated orbit representative for eg");
  catalog_cmd->add_option("--as", cat.as, "matrices|tuple");

  std::vector<std::string> checks{"irreducible", "factor", "indecomposable"};
  auto* analyze = app.add_subcommand("analyze", "Irreducibility, factor, orbit and proposition checks");
  analyze->add_option("input", input, "RepresentationDoc or FiveTupleDoc path")->required();
  analyze->add_option("--checks", checks, "irreducible,factor,indecomposable,orbits,section6")->delimiter(',');

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two representations");
  equiv->add_option("input1", input, "first document")->required();
  equiv->add_option("input2", input2, "second document")->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "Usage"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }

  try {
    if (*build) return cmd_build(input, output, weighted, tol_build, out, err);
    if (*extract) return cmd_extract(input, output, ext, out, err);
    if (*verify) return cmd_verify(input, base, out, err);
    if (*catalog_cmd) return cmd_catalog(cat, out);
    if (*analyze) return cmd_analyze(input, checks, base, out);
    if (*equiv) return cmd_equiv(input, input2, base, out);
  } catch (const ValidationError& e) {
    json doc = json_io::error_to_json(e);
    doc["report"] = json_io::report_to_json(e.report());
    err << doc.dump() << "\n";
    return kValidation;
  } catch (const Error& e) {
    err << json_io::error_to_json(e).dump() << "\n";
    switch (e.kind()) {
      case ErrorKind::Schema:
      case ErrorKind::InvalidParameter:
        return kUsage;
      default:
        return kValidation;
    }
  } catch (const std::exception& e) {
    err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace braidrep::cli

#endif  // BRAIDREP_CLI_HPP_
