#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sl2sym/cli.hpp"
#include "sl2sym/expr.hpp"
#include "sl2sym/verify.hpp"

using namespace sl2sym;

namespace {

struct Timed {
  VerifyReport report;
  double seconds;
};

Timed timed_suite(const std::string& suite) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report = run_verify_suite(suite);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {std::move(report), elapsed.count()};
}

// Every listed fragment must name at least one check, and all named checks must pass.
bool checks_pass(const VerifyReport& report, const std::vector<std::string>& fragments, std::string& why) {
  for (const auto& fragment : fragments) {
    bool seen = false;
    for (const auto& c : report.checks) {
      if (c.name.find(fragment) == std::string::npos) continue;
      seen = true;
      if (!c.passed) {
        why = c.name + ": " + c.detail;
        return false;
      }
    }
    if (!seen) {
      why = "no check matching '" + fragment + "'";
      return false;
    }
  }
  return true;
}

const Discrepancy* find_note(const VerifyReport& report, const std::string& fragment) {
  for (const auto& d : report.discrepancies) {
    if (d.name.find(fragment) != std::string::npos) return &d;
  }
  return nullptr;
}

ExprPtr random_expr(std::mt19937& rng, int depth) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (depth == 0 || pick(0, 3) == 0) {
    switch (pick(0, 5)) {
      case 0: return make_literal(make_rational(pick(0, 20), pick(1, 6)));
      case 1:
      case 5: {
        std::vector<int> parts;
        int top = pick(0, 4);
        while (top > 0 && parts.size() < 4) {
          parts.push_back(top);
          top = pick(0, top);
        }
        return make_atom(pick(0, 1) ? AtomKind::schur : AtomKind::diagram, parts);
      }
      case 2: return make_atom(AtomKind::power_sum, {pick(1, 6)});
      case 3: return make_atom(AtomKind::elementary, {pick(0, 4)});
      default: return make_atom(AtomKind::homogeneous, {pick(0, 4)});
    }
  }
  switch (pick(0, 4)) {
    case 0: return make_negate(random_expr(rng, depth - 1));
    case 1: return make_binary('+', random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 2: return make_binary('-', random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 3: return make_binary('*', random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return make_power(random_expr(rng, depth - 1), static_cast<unsigned>(pick(0, 3)));
  }
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << '\n';
  if (!ok) ++failures;
}

void criterion(int id, const std::string& title, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, title, ok, detail);
}

std::string seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const Timed commutators = timed_suite("commutators");
  const Timed schur = timed_suite("schur-action");
  const Timed kernel = timed_suite("kernel");
  const Timed identities = timed_suite("identities");
  const Timed tables = timed_suite("tables");
  const Timed kerov = timed_suite("kerov");

  criterion(1, "commutation relations for rho1, rho2 and the Schur-basis actions", [&](std::string& why) {
    if (!checks_pass(commutators.report, {"rho1 brackets on monomials", "rho2 brackets on monomials",
                                          "Schur-basis rho1 brackets", "Schur-basis rho2 brackets"},
                     why)) {
      return false;
    }
    why = seconds(commutators.seconds);
    return commutators.seconds < 30;
  });
  criterion(2, "combinatorial Schur action equals the differential operators", [&](std::string& why) {
    if (!checks_pass(schur.report, {"rho1 Schur action equals", "rho2 Schur action equals"}, why)) return false;
    why = seconds(schur.seconds);
    return schur.seconds < 60;
  });
  criterion(3, "z_i kernel generators, leading coefficients, slice images", [&](std::string& why) {
    return checks_pass(kernel.report, {"z_i is annihilated", "sigma(p_i) = z_i"}, why) &&
           checks_pass(identities.report, {"leading coefficient"}, why);
  });
  criterion(4, "graded multiplicities and the n = 3 recurrence", [&](std::string& why) {
    return checks_pass(identities.report, {"graded dimensions", "n = 3 multiplicities"}, why);
  });
  criterion(5, "two-variable power-sum identities for m = 1..8", [&](std::string& why) {
    return checks_pass(identities.report, {"two-variable power-sum identities"}, why);
  });
  criterion(6, "characters, Sylvester-Cayley multiplicities, dimensions, Lambda_3^(d) tables", [&](std::string& why) {
    return checks_pass(tables.report, {"Char Lambda_n^(d) = Char Sym^n(V_d)", "character peeling equals",
                                       "sum c_n(d,i)(i+1)", "Lambda_3^(d) tables"},
                       why);
  });
  criterion(7, "Lambda_3^(6) lowest weight space", [&](std::string& why) {
    return checks_pass(kernel.report, {"Lambda_3^(6) lowest weight space"}, why);
  });
  criterion(8, "w_i span a standard module V_d for d <= 8", [&](std::string& why) {
    return checks_pass(tables.report, {"w_i realize V_d"}, why);
  });
  criterion(9, "phi intertwines hat/tilde with the Schur actions; pi_k and zeta_i", [&](std::string& why) {
    return checks_pass(schur.report, {"hat and tilde operators are transported", "phi(pi_k) = p_k"}, why);
  });
  criterion(10, "Kerov relations and the witness leaving bounded diagrams", [&](std::string& why) {
    return checks_pass(kerov.report, {"[D,U] = L", "U leaves the diagrams"}, why);
  });
  criterion(11, "discrepancies are reported without failing the suite", [&](std::string& why) {
    const Discrepancy* small = find_note(tables.report, "Lambda_2^(2)");
    const Discrepancy* graded = find_note(kernel.report, "Lambda_2 lowest weight");
    if (!small || !graded) {
      why = "discrepancy note missing";
      return false;
    }
    if (small->computed.find("V0 + V4") == std::string::npos) {
      why = "computed " + small->computed;
      return false;
    }
    if (graded->computed.find("{0,2,4,6,8}") == std::string::npos ||
        graded->computed.find("weights 4i") == std::string::npos) {
      why = "computed " + graded->computed;
      return false;
    }
    int code = 0;
    const std::string out = cli_output({"verify", "--suite", "tables"}, code);
    if (code != 0 || out.find("computed:") == std::string::npos || out.find("paper:") == std::string::npos) {
      why = "verify output lacks computed/paper lines";
      return false;
    }
    return tables.report.all_passed() && kernel.report.all_passed();
  });
  criterion(12, "parser round trip, byte-stable CLI JSON, full verification under 5 minutes", [&](std::string& why) {
    std::mt19937 rng(12345);
    for (int k = 0; k < 500; ++k) {
      const ExprPtr e = random_expr(rng, 4);
      const std::string text = print(*e);
      if (!(*parse(text) == *e)) {
        why = "round trip failed on " + text;
        return false;
      }
    }
    const std::vector<std::vector<std::string>> examples{
        {"--json", "act", "--rep", "rho1", "--op", "lower", "--n", "3", "--expr", "s[2,1]"},
        {"--json", "decompose", "--n", "3", "--d", "2"},
        {"--json", "decompose", "--n", "3", "--max-weight", "10"}};
    std::vector<Json> docs;
    for (const auto& args : examples) {
      int first = 0, second = 0;
      const std::string a = cli_output(args, first);
      const std::string b = cli_output(args, second);
      if (first != 0 || second != 0 || a != b || a.empty()) {
        why = "unstable or failing output for " + args[1];
        return false;
      }
      docs.push_back(Json::parse(a));
    }
    const Json& act = docs[0]["terms"];
    const bool actOk = act.size() == 2 && act[0]["coefficient"] == "-2/1" && act[0]["partition"] == Json::array({2}) &&
                       act[1]["coefficient"] == "-4/1" && act[1]["partition"] == Json::array({1, 1});
    const Json& fin = docs[1]["decomposition"];
    const bool finOk = fin.size() == 2 && fin[0]["highest_weight"] == 6 && fin[0]["multiplicity"] == 1 &&
                       fin[1]["highest_weight"] == 2 && fin[1]["multiplicity"] == 1;
    const int expected[] = {1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2};
    bool gradedOk = docs[2]["multiplicities"].size() == 11;
    for (int i = 0; gradedOk && i <= 10; ++i) gradedOk = docs[2]["multiplicities"][i]["multiplicity"] == expected[i];
    if (!actOk || !finOk || !gradedOk) {
      why = "example values differ";
      return false;
    }
    const Timed all = timed_suite("all");
    why = "verify all " + seconds(all.seconds);
    return all.report.all_passed() && all.seconds < 300;
  });

  const std::chrono::duration<double> total = std::chrono::steady_clock::now() - start;
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
            << seconds(total.count()) << '\n';
  return failures == 0 ? 0 : 1;
}
