#pragma once

#include <string>
#include <vector>

namespace sl2sym {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// A place where the computed mathematics differs from a printed claim.
/// Reported side by side; never counted as a failure.
struct Discrepancy {
  std::string name;
  std::string computed;
  std::string paper;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<Discrepancy> discrepancies;

  bool all_passed() const;
};

/// Names accepted by run_verify_suite, "all" last.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite ("commutators", "schur-action", "kernel", "identities",
/// "tables", "kerov") or "all". Unknown names throw InvalidInput.
VerifyReport run_verify_suite(const std::string& suite);

}  // namespace sl2sym
