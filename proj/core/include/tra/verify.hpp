#pragma once

#include <string>
#include <vector>

namespace tra {

/// One invariant evaluated by the verification suites.
struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;   // worst residual or the measured quantity
  double threshold = 0.0;  // pass bound on measured
  bool passed = false;
  /// Reported for the record only (documented errata); never fails a run.
  bool informational = false;
  std::string note;
};

struct VerifyOptions {
  /// Perturbs every implementation-side value by a relative 1e-6 plus an
  /// absolute 1e-6 before comparison. Used to prove that the suites can fail.
  bool inject_fault = false;
};

/// Suite names accepted by run_verification, "all" first.
const std::vector<std::string>& verification_suites();

/// Runs one suite ("specfun", "basis", "assembly", "eigensolve", "recursion",
/// "oracle") or every suite ("all"). Throws DomainError for an unknown name.
std::vector<CheckResult> run_verification(const std::string& suite,
                                          const VerifyOptions& options = {});

/// True when every non-informational check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace tra
