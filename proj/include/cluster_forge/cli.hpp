#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cluster_forge/audit.hpp"
#include "cluster_forge/multifunction.hpp"
#include "cluster_forge/verify.hpp"

namespace cluster_forge::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kConstructionFailed = 3,
};

/// Entry point of the cluster-forge tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "thm1" when every pair comes from Theorem 1, "lemma1" when every pair
/// comes from Lemma 1, "thm2" for a mix, "external" without provenance.
std::string infer_command(const FunctionSample& f);

nlohmann::ordered_json report_json(const std::string& scene_hash, const std::string& command,
                                   std::size_t pairs, const ToleranceBreakdown& tol,
                                   const VerifyReport& verify, const AuditReport& audit);

}  // namespace cluster_forge::cli
