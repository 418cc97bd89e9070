#include "sl2sym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>

#include "sl2sym/errors.hpp"
#include "sl2sym/expr.hpp"
#include "sl2sym/sl2_actions.hpp"
#include "sl2sym/verify.hpp"

namespace sl2sym {

namespace {

Json big_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json optional_int(std::optional<int> v) { return v ? Json(*v) : Json(nullptr); }

struct Options {
  bool json = false;
  std::string rep;
  std::string op;
  std::optional<int> n;
  std::optional<int> d;
  std::optional<std::string> z;
  std::optional<std::string> zprime;
  std::string expr;
  int maxDegree = 6;
  std::optional<int> maxWeight;
  std::string suite;
};

int require(const std::optional<int>& v, const std::string& flag, const std::string& command) {
  if (!v) throw InvalidInput(command + " requires " + flag);
  return *v;
}

SlOp sl_op(const std::string& op, const std::string& rep) {
  if (op == "lower") return SlOp::lower;
  if (op == "cartan") return SlOp::cartan;
  if (op == "raise") return SlOp::raise;
  throw InvalidInput("operator '" + op + "' does not apply to representation '" + rep + "'");
}

KerovOp kerov_op(const std::string& op) {
  if (op == "U") return KerovOp::U;
  if (op == "L") return KerovOp::L;
  if (op == "D") return KerovOp::D;
  throw InvalidInput("operator '" + op + "' does not apply to representation 'kerov'");
}

int cmd_act(const Options& o, std::ostream& out) {
  Json inputs;
  inputs["rep"] = o.rep;
  inputs["op"] = o.op;
  inputs["n"] = optional_int(o.n);
  inputs["d"] = optional_int(o.d);
  if (o.z) inputs["z"] = *o.z;
  if (o.zprime) inputs["zprime"] = *o.zprime;
  inputs["expr"] = o.expr;

  const ExprPtr e = parse(o.expr);
  std::string basis = "schur";
  std::optional<int> n = o.n;
  std::map<Partition, Rational> terms;
  std::string text;

  if (o.rep == "rho1" || o.rep == "rho2") {
    const int nn = require(o.n, "--n", "act");
    const SchurVector v = evaluate_schur(*e, nn);
    const SchurVector image = o.rep == "rho1" ? act_rho1(sl_op(o.op, o.rep), v)
                                              : act_rho2(sl_op(o.op, o.rep), v, require(o.d, "--d", "act --rep rho2"));
    terms = image.terms();
    text = image.to_string();
  } else if (o.rep == "hat" || o.rep == "tilde") {
    basis = "diagram";
    const int nn = require(o.n, "--n", "act");
    const DiagramVector v = evaluate_diagram(*e, nn);
    const DiagramVector image = o.rep == "hat"
                                    ? hat_apply(sl_op(o.op, o.rep), v, nn)
                                    : tilde_apply(sl_op(o.op, o.rep), v, nn, require(o.d, "--d", "act --rep tilde"));
    terms = image.terms();
    text = image.to_string();
  } else {
    basis = "diagram";
    n.reset();
    if (!o.z || !o.zprime) throw InvalidInput("act --rep kerov requires --z and --zprime");
    const KerovParams params{parse_rational(*o.z), parse_rational(*o.zprime)};
    const DiagramVector v = evaluate_diagram(*e, std::nullopt);
    const DiagramVector image = kerov_apply(kerov_op(o.op), v, params, v.max_size() + 1);
    terms = image.terms();
    text = image.to_string();
  }

  if (o.json) {
    out << result_document(basis, n, o.d, terms, "act", inputs).dump(2) << '\n';
  } else {
    out << text << '\n';
  }
  return 0;
}

int cmd_kernel(const Options& o, std::ostream& out) {
  const int n = require(o.n, "--n", "kernel");
  std::vector<LowestWeightVector> vectors;
  if (o.rep == "rho1") {
    if (o.maxDegree < 0) throw InvalidInput("--max-degree must be nonnegative");
    for (int m = 0; m <= o.maxDegree; ++m) {
      auto layer = lowest_weight_space_rho1(n, m);
      vectors.insert(vectors.end(), layer.begin(), layer.end());
    }
  } else if (o.rep == "rho2") {
    vectors = lowest_weight_space_rho2(n, require(o.d, "--d", "kernel --rep rho2"));
  } else {
    throw InvalidInput("kernel supports --rep rho1 or rho2");
  }

  if (o.json) {
    Json doc;
    doc["basis"] = "schur";
    doc["n"] = n;
    doc["d"] = optional_int(o.rep == "rho2" ? o.d : std::nullopt);
    Json list = Json::array();
    for (const auto& v : vectors) {
      Json entry;
      entry["weight"] = v.weight;
      entry["terms"] = terms_json(v.vector.terms());
      list.push_back(std::move(entry));
    }
    doc["vectors"] = std::move(list);
    Json inputs;
    inputs["rep"] = o.rep;
    inputs["n"] = n;
    inputs["d"] = optional_int(o.d);
    inputs["max_degree"] = o.maxDegree;
    doc["metadata"] = {{"command", "kernel"}, {"inputs", inputs}};
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& v : vectors) out << "weight " << v.weight << ": " << v.vector.to_string() << '\n';
    out << vectors.size() << " lowest weight vectors\n";
  }
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const int n = require(o.n, "--n", "decompose");
  if (o.d && o.maxWeight) throw InvalidInput("decompose takes --d or --max-weight, not both");
  if (!o.d && !o.maxWeight) throw InvalidInput("decompose requires --d or --max-weight");

  Json inputs;
  inputs["n"] = n;
  inputs["d"] = optional_int(o.d);
  inputs["max_weight"] = optional_int(o.maxWeight);

  if (o.d) {
    const WeightedDecomposition dec = decompose_finite(n, *o.d);
    if (o.json) {
      Json table = Json::array();
      for (auto it = dec.multiplicities.rbegin(); it != dec.multiplicities.rend(); ++it) {
        table.push_back({{"highest_weight", it->first}, {"multiplicity", big_json(it->second)}});
      }
      Json doc;
      doc["n"] = n;
      doc["d"] = *o.d;
      doc["decomposition"] = std::move(table);
      doc["metadata"] = {{"command", "decompose"}, {"inputs", inputs}};
      out << doc.dump(2) << '\n';
    } else {
      std::string sum;
      for (auto it = dec.multiplicities.rbegin(); it != dec.multiplicities.rend(); ++it) {
        if (!sum.empty()) sum += " + ";
        if (it->second != 1) sum += it->second.get_str();
        sum += "V" + std::to_string(it->first);
      }
      out << "Lambda_" << n << "^(" << *o.d << ") = " << (sum.empty() ? "0" : sum) << '\n';
    }
    return 0;
  }

  if (*o.maxWeight < 0) throw InvalidInput("--max-weight must be nonnegative");
  if (n < 2) throw InvalidInput("decompose --max-weight requires n >= 2");
  const WeightedDecomposition dec = decompose_lambda_n(n, *o.maxWeight);
  if (o.json) {
    Json table = Json::array();
    for (int i = 0; i <= *o.maxWeight; ++i) table.push_back({{"i", i}, {"multiplicity", big_json(dec.multiplicity(i))}});
    Json doc;
    doc["n"] = n;
    doc["d"] = nullptr;
    doc["multiplicities"] = std::move(table);
    doc["metadata"] = {{"command", "decompose"}, {"inputs", inputs}};
    out << doc.dump(2) << '\n';
  } else {
    for (int i = 0; i <= *o.maxWeight; ++i) out << "c_" << i << " = " << dec.multiplicity(i).get_str() << '\n';
  }
  return 0;
}

int cmd_character(const Options& o, std::ostream& out) {
  const int n = require(o.n, "--n", "character");
  const int d = require(o.d, "--d", "character");
  const Character ch = character_finite(n, d);
  if (o.json) {
    Json table = Json::array();
    for (const auto& [w, m] : ch.multiplicities) table.push_back({{"exponent", w}, {"multiplicity", big_json(m)}});
    Json doc;
    doc["n"] = n;
    doc["d"] = d;
    doc["character"] = std::move(table);
    doc["metadata"] = {{"command", "character"}, {"inputs", {{"n", n}, {"d", d}}}};
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& [w, m] : ch.multiplicities) out << "q^" << w << ": " << m.get_str() << '\n';
    out << "dimension " << ch.dimension().get_str() << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VerifyReport report = run_verify_suite(o.suite);
  const auto passed = std::count_if(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.passed; });
  if (o.json) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    Json notes = Json::array();
    for (const auto& d : report.discrepancies) {
      notes.push_back({{"name", d.name}, {"computed", d.computed}, {"paper", d.paper}});
    }
    Json doc;
    doc["suite"] = o.suite;
    doc["passed"] = report.all_passed();
    doc["checks"] = std::move(checks);
    doc["discrepancies"] = std::move(notes);
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.suite << ": " << c.name;
      if (!c.passed) out << " (" << c.detail << ")";
      out << '\n';
    }
    for (const auto& d : report.discrepancies) {
      out << "[NOTE] " << d.name << "\n  computed: " << d.computed << "\n  paper:    " << d.paper << '\n';
    }
    out << passed << "/" << report.checks.size() << " checks passed\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

Json terms_json(const std::map<Partition, Rational>& terms) {
  std::vector<std::pair<Partition, Rational>> sorted(terms.begin(), terms.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return b.first < a.first;
  });
  Json list = Json::array();
  for (const auto& [lambda, c] : sorted) {
    list.push_back({{"coefficient", to_fraction_string(c)}, {"partition", lambda.parts()}});
  }
  return list;
}

Json result_document(const std::string& basis, std::optional<int> n, std::optional<int> d,
                     const std::map<Partition, Rational>& terms, const std::string& command, const Json& inputs) {
  Json doc;
  doc["basis"] = basis;
  doc["n"] = optional_int(n);
  doc["d"] = optional_int(d);
  doc["terms"] = terms_json(terms);
  doc["metadata"] = {{"command", command}, {"inputs", inputs}};
  return doc;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact sl2 actions on symmetric functions and Young diagrams", "sl2sym"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit a JSON document");

  auto* act = app.add_subcommand("act", "Apply an operator to an expression");
  act->fallthrough();
  act->add_option("--rep", o.rep)->required()->check(CLI::IsMember({"rho1", "rho2", "hat", "tilde", "kerov"}));
  act->add_option("--op", o.op)->required()->check(CLI::IsMember({"raise", "lower", "cartan", "U", "L", "D"}));
  act->add_option("--n", o.n)->check(CLI::NonNegativeNumber);
  act->add_option("--d", o.d)->check(CLI::NonNegativeNumber);
  act->add_option("--z", o.z);
  act->add_option("--zprime", o.zprime);
  act->add_option("--expr", o.expr)->required();

  auto* kernel = app.add_subcommand("kernel", "List lowest weight vectors");
  kernel->fallthrough();
  kernel->add_option("--rep", o.rep)->required()->check(CLI::IsMember({"rho1", "rho2"}));
  kernel->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  kernel->add_option("--d", o.d)->check(CLI::NonNegativeNumber);
  kernel->add_option("--max-degree", o.maxDegree, "Largest degree for rho1")->check(CLI::NonNegativeNumber);

  auto* decompose = app.add_subcommand("decompose", "Multiplicities of irreducible modules");
  decompose->fallthrough();
  decompose->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  auto* dOpt = decompose->add_option("--d", o.d)->check(CLI::NonNegativeNumber);
  decompose->add_option("--max-weight", o.maxWeight)->check(CLI::NonNegativeNumber)->excludes(dOpt);

  auto* character = app.add_subcommand("character", "Character of the bounded module");
  character->fallthrough();
  character->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  character->add_option("--d", o.d)->required()->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->fallthrough();
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember(verify_suite_names()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (act->parsed()) return cmd_act(o, out);
    if (kernel->parsed()) return cmd_kernel(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (character->parsed()) return cmd_character(o, out);
    return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace sl2sym
