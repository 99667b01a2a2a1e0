#pragma once

#include <optional>
#include <string>

#include "bbt/testsetup.hpp"

namespace bbt {

/// Refutability of R under the auxiliary assumption A: every system in
/// A that violates R must admit an observation t with
/// alpha_hat(t), A and R jointly empty. With A = all elements this is
/// exactly plain refutability.
RefutabilityReport refutable_under(const SystemModel& model,
                                   const TestSetup& setup,
                                   const Requirement& r,
                                   const Requirement& assumption);

/// The residual prohibition P_{R|A} = down-closure of (A meet R). On the
/// systems satisfying A it coincides with R whenever R is refutable
/// under A.
Requirement residual_prohibition(const SystemModel& model,
                                 const Requirement& r,
                                 const Requirement& assumption);

/// Outcome of the two-step refute-then-verify reduction for one system:
/// refute membership in the residual prohibition, then verify the
/// assumption. Absence of witnesses is always inconclusive, never a
/// satisfaction claim.
struct CampaignReport {
  enum class Conclusion {
    UnconditionalViolation,  // S violates R, outright
    ConditionalViolation,    // S violates R, provided S satisfies A
    Inconclusive
  };
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string assumption_name;
  std::optional<std::string> refutation_witness;     // t refuting residual
  std::optional<std::string> verification_witness;   // t verifying A
  bool assumption_verifiable = false;
};

CampaignReport reduction_campaign(const SystemModel& model,
                                  const TestSetup& setup, const Requirement& r,
                                  const Requirement& assumption,
                                  const std::string& system_id);

}  // namespace bbt
