// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.

#include "qweb_cli/commands.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qweb/combinat.hpp"
#include "qweb/normalform.hpp"
#include "qweb/polyring.hpp"
#include "qweb/qrep.hpp"
#include "qweb/sergeev.hpp"
#include "qweb_cli/dsl.hpp"
#include "qweb_cli/json_io.hpp"

namespace qweb::cli {

namespace {

// A check that ran to completion but found a counterexample.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

ModuleSpec parse_module(const std::string& text) {
  ModuleSpec m;
  if (text.empty() || text == "none") return m;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int d = -1;
    try {
      d = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || d < 1)
      throw std::invalid_argument("--module expects comma-separated positive degrees, got '" + text + "'");
    m.push_back(d);
  }
  return m;
}

Composition check_object(const std::vector<int>& c, const char* flag) {
  for (int x : c)
    if (x < 1) throw std::invalid_argument(std::string(flag) + " must list positive thicknesses");
  return c;
}

struct Session {
  std::istream& in;
  std::ostringstream out;

  std::string expression(const std::string& arg) {
    if (arg != "-") return arg;
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
};

// ---- subcommands -------------------------------------------------------------

struct NormalizeOpts {
  std::string expr;
  bool text = false;
};

void cmd_normalize(Session& s, const NormalizeOpts& o) {
  NormalMorphism nm = reduce(parse_morphism(s.expression(o.expr)));
  if (o.text) s.out << nm.str() << "\n";
  else s.out << to_json(nm).dump(2) << "\n";
}

struct EvalOpts {
  std::string expr;
  int n = 2;
  std::string module = "1";
  std::int64_t dim_cap = OracleOptions{}.dim_cap;
};

void cmd_eval(Session& s, const EvalOpts& o) {
  Morphism f = parse_morphism(s.expression(o.expr));
  SuperLinearMap m = eval_morphism(f, o.n, parse_module(o.module), OracleOptions{o.dim_cap});
  s.out << to_json(m).dump() << "\n";
}

struct BasisOpts {
  std::vector<int> source, target;
  int maxdeg = 0;
  bool finite = false;
  bool json = false;
};

void cmd_dim(Session& s, const BasisOpts& o) {
  auto src = check_object(o.source, "--source"), tgt = check_object(o.target, "--target");
  if (o.finite) {
    s.out << cfd_basis_finite(tgt, src).size() << "\n";
    return;
  }
  auto dims = graded_dimension(tgt, src, o.maxdeg);
  for (std::size_t i = 0; i < dims.size(); ++i) s.out << (i ? " " : "") << dims[i];
  s.out << "\n";
}

void cmd_basis(Session& s, const BasisOpts& o) {
  auto src = check_object(o.source, "--source"), tgt = check_object(o.target, "--target");
  auto basis = o.finite ? cfd_basis_finite(tgt, src) : cfd_basis(tgt, src, o.maxdeg);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& c : basis) {
      Json j = to_json(c);
      j["degree"] = c.degree();
      arr.push_back(std::move(j));
    }
    s.out << arr.dump(2) << "\n";
    return;
  }
  for (const auto& c : basis) s.out << c.degree() << "\t" << c.str() << "\n";
}

struct RelOpts {
  std::string suite = "all";
  int bound = 4;
  int n = 3;
  std::string module = "1";
  std::string via = "functor";
  bool json = false;
};

void cmd_check_relations(Session& s, const RelOpts& o) {
  std::vector<std::string> suites;
  if (o.suite == "all") suites = relation_suite_names();
  else suites.push_back(o.suite);
  ModuleSpec m = parse_module(o.module);
  bool functor = o.via != "reduce", normal = o.via != "functor";
  Json report = Json::array();
  std::size_t total = 0, passed = 0;
  for (const auto& name : suites) {
    for (const auto& rel : relation_suite(name, o.bound)) {
      bool ok = true;
      if (functor) ok = ok && eval_morphism(rel.lhs, o.n, m) == eval_morphism(rel.rhs, o.n, m);
      if (normal) ok = ok && reduce(rel.lhs) == reduce(rel.rhs);
      ++total;
      passed += ok ? 1 : 0;
      if (o.json) report.push_back({{"suite", name}, {"relation", rel.name}, {"pass", ok}});
      else s.out << (ok ? "pass " : "FAIL ") << name << " " << rel.name << "\n";
    }
  }
  if (o.json) s.out << report.dump(2) << "\n";
  else s.out << passed << "/" << total << " relations hold\n";
  if (passed != total) throw CheckFailed(std::to_string(total - passed) + " relation(s) failed");
}

struct SergeevOpts {
  std::string mode;
  std::vector<std::string> words;
  int n = 2;
  bool json = false;
};

void cmd_sergeev(Session& s, const SergeevOpts& o) {
  std::size_t need = o.mode == "multiply" ? 2 : 1;
  if (o.words.size() != need)
    throw CLI::ValidationError("sergeev " + o.mode + " takes " + std::to_string(need) + " word(s)");
  auto emit = [&](const SergeevElement& u) {
    if (o.json) s.out << to_json(u).dump() << "\n";
    else s.out << u.str() << "\n";
  };
  SergeevWord u = parse_sergeev_word(o.words[0], o.n);
  if (o.mode == "straighten") {
    emit(straighten(u, o.n));
  } else if (o.mode == "multiply") {
    SergeevWord v = parse_sergeev_word(o.words[1], o.n);
    emit(multiply(straighten(u, o.n), straighten(v, o.n)));
  } else {
    SergeevElement via_webs = decode(reduce(phi(u, o.n)));
    SergeevElement direct = straighten(u, o.n);
    emit(via_webs);
    if (!(via_webs == direct))
      throw CheckFailed("roundtrip mismatch: straightening gives " + direct.str());
  }
}

struct PolyOpts {
  std::string mode;
  int a = 4, k = 2, d = 4, s = 5;
};

void cmd_poly_check(Session& s, const PolyOpts& o) {
  bool ok = true;
  if (o.mode == "g") {
    for (const auto& lambda : strict_partitions_exact_len(o.a, o.k)) {
      bool same = g_lambda(lambda, o.k, o.a, GMethod::Recursive) ==
                  g_lambda(lambda, o.k, o.a, GMethod::Raising);
      ok = ok && same;
      s.out << vec_str(lambda) << (same ? " agree" : " DIFFER") << "\n";
    }
  } else if (o.mode == "det") {
    for (int sz = 1; sz <= o.s; ++sz) {
      auto B = esym_matrix_B(sz);
      std::vector<int> all;
      for (int i = 1; i <= sz; ++i) all.push_back(i);
      bool det_ok = determinant(B) == vandermonde(all, sz);
      bool minors_ok = true;
      for (int i = 1; i <= sz; ++i)
        for (int j = 1; j <= sz; ++j) minors_ok = minors_ok && matrix_minor(B, i, j) == esym_minor(i, j, sz);
      ok = ok && det_ok && minors_ok;
      s.out << "s=" << sz << " det " << (det_ok ? "ok" : "FAIL") << " minors " << (minors_ok ? "ok" : "FAIL")
            << "\n";
    }
  } else {
    auto pairs = pairs_C(o.a, o.k, o.d);
    int r = independence_rank(pairs, o.a, o.k);
    ok = r == static_cast<int>(pairs.size());
    s.out << "rank " << r << " of " << pairs.size() << "\n";
  }
  if (!ok) throw CheckFailed("poly-check " + o.mode + " found a failure");
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args, std::istream& in) {
  CommandResult res;
  Session session{in, {}};

  CLI::App app{"Exact computations with affine webs of type Q", "qweb"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  NormalizeOpts norm;
  auto* c_norm = app.add_subcommand("normalize", "Coordinates of an expression in the elementary basis");
  c_norm->add_option("expr", norm.expr, "Expression ('-' reads standard input)")->required();
  c_norm->add_flag("--text", norm.text, "Print a one-line summary instead of JSON");

  EvalOpts ev;
  auto* c_eval = app.add_subcommand("eval", "Matrix of an expression under the q(n) functor");
  c_eval->add_option("expr", ev.expr, "Expression ('-' reads standard input)")->required();
  c_eval->add_option("--n", ev.n, "Rank of q(n)")->check(CLI::Range(1, 16));
  c_eval->add_option("--module", ev.module, "Auxiliary module as symmetric-power degrees, e.g. 1 or 2,1; 'none' for trivial");
  c_eval->add_option("--dim-cap", ev.dim_cap, "Refuse source or target spaces beyond this dimension");

  BasisOpts bo;
  auto add_basis_opts = [&](CLI::App* c) {
    c->add_option("--source", bo.source, "Source object, e.g. 2,1")->required()->delimiter(',');
    c->add_option("--target", bo.target, "Target object")->required()->delimiter(',');
    c->add_option("--maxdeg", bo.maxdeg, "Largest degree")->check(CLI::NonNegativeNumber);
    c->add_flag("--finite", bo.finite, "Only the finite (no black dot) basis");
  };
  auto* c_dim = app.add_subcommand("dim", "Graded dimensions of a morphism space");
  add_basis_opts(c_dim);
  auto* c_basis = app.add_subcommand("basis", "List the elementary basis of a morphism space");
  add_basis_opts(c_basis);
  c_basis->add_flag("--json", bo.json, "JSON output");

  RelOpts ro;
  auto* c_rel = app.add_subcommand("check-relations", "Verify a relation suite");
  std::vector<std::string> suite_choices = relation_suite_names();
  suite_choices.push_back("all");
  c_rel->add_option("--suite", ro.suite, "Suite name or 'all'")->check(CLI::IsMember(suite_choices));
  c_rel->add_option("--bound", ro.bound, "Largest source weight")->check(CLI::Range(1, 8));
  c_rel->add_option("--n", ro.n, "Rank of q(n)")->check(CLI::Range(1, 16));
  c_rel->add_option("--module", ro.module, "Auxiliary module, as for eval");
  c_rel->add_option("--via", ro.via, "functor, reduce or both")
      ->check(CLI::IsMember({"functor", "reduce", "both"}));
  c_rel->add_flag("--json", ro.json, "JSON output");

  SergeevOpts so;
  auto* c_serg = app.add_subcommand("sergeev", "Affine Sergeev algebra arithmetic");
  c_serg->add_option("mode", so.mode, "straighten, multiply or roundtrip")
      ->required()
      ->check(CLI::IsMember({"straighten", "multiply", "roundtrip"}));
  c_serg->add_option("words", so.words, "Words such as \"x1 s1 c2\"")->required();
  c_serg->add_option("--n", so.n, "Number of strands")->check(CLI::Range(1, 12));
  c_serg->add_flag("--json", so.json, "JSON output");

  PolyOpts po;
  auto* c_poly = app.add_subcommand("poly-check", "Symmetric-polynomial identities");
  c_poly->add_option("mode", po.mode, "g, det or independence")
      ->required()
      ->check(CLI::IsMember({"g", "det", "independence"}));
  c_poly->add_option("--a", po.a, "Number of variables")->check(CLI::Range(1, 8));
  c_poly->add_option("--k", po.k, "Length of lambda")->check(CLI::Range(0, 8));
  c_poly->add_option("--d", po.d, "Degree")->check(CLI::NonNegativeNumber);
  c_poly->add_option("--s", po.s, "Largest matrix size")->check(CLI::Range(1, 7));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& e) {
    res.status = 2;
    res.err = error_json("usage", e.what()).dump() + "\n";
    return res;
  }

  try {
    if (c_norm->parsed()) cmd_normalize(session, norm);
    else if (c_eval->parsed()) cmd_eval(session, ev);
    else if (c_dim->parsed()) cmd_dim(session, bo);
    else if (c_basis->parsed()) cmd_basis(session, bo);
    else if (c_rel->parsed()) cmd_check_relations(session, ro);
    else if (c_serg->parsed()) cmd_sergeev(session, so);
    else if (c_poly->parsed()) cmd_poly_check(session, po);
  } catch (const CLI::ValidationError& e) {
    res.status = 2;
    res.err = error_json("usage", e.what()).dump() + "\n";
  } catch (const DslError& e) {
    res.status = 1;
    res.err = error_json(e.kind(), e.detail(), std::pair{e.pos().line, e.pos().column}).dump() + "\n";
  } catch (const CheckFailed& e) {
    res.status = 1;
    res.err = error_json("check-failed", e.what()).dump() + "\n";
  } catch (const OracleTooLarge& e) {
    res.status = 1;
    res.err = error_json("oracle-too-large", e.what()).dump() + "\n";
  } catch (const std::exception& e) {
    res.status = 1;
    res.err = error_json("domain", e.what()).dump() + "\n";
  }
  res.out = session.out.str();
  return res;
}

CommandResult run_command(const std::vector<std::string>& args) { return run_command(args, std::cin); }

}  // namespace qweb::cli
