#pragma once

#include <map>
#include <string>
#include <vector>

#include "bbt/order.hpp"

namespace bbt {

/// A test setup (T, alpha): a finite observation domain plus an
/// order-preserving map from elements to observation sets. Observation
/// identifiers are kept in lexicographic order, so "first observation"
/// is deterministic everywhere witnesses are picked.
struct TestSetup {
  std::string name;
  std::uint64_t model_uid = 0;
  std::size_t n_elements = 0;
  std::vector<std::string> obs_ids;  // sorted lexicographically
  std::map<std::string, std::size_t> obs_index;
  std::vector<Bits> alpha;      // element -> observations
  std::vector<Bits> alpha_hat;  // observation -> elements that can yield it

  std::size_t observation(const std::string& id) const;
};

/// Validates order preservation over the model's covering pairs (which
/// suffices, since the order is the transitive closure of its covers).
/// `alpha_by_id` must be total on the model's elements.
TestSetup build_setup(
    const SystemModel& model, std::string name,
    std::vector<std::string> observations,
    const std::map<std::string, std::vector<std::string>>& alpha_by_id);

/// As above, with alpha already resolved to bitsets indexed like
/// `observations` (pre-sort); used by generators that build alpha in bulk.
TestSetup build_setup(const SystemModel& model, std::string name,
                      std::vector<std::string> observations,
                      std::vector<Bits> alpha);

/// The reflexive setup T_r: observations are the elements themselves and
/// alpha(S) is the principal down-set of S.
TestSetup reflexive_setup(const SystemModel& model);

/// Systems that can yield observation t. Throws UnknownObservation.
Bits alpha_hat(const TestSetup& setup, const std::string& obs);

/// { alpha_hat(t) | t in T }, deduplicated, as abstraction-closed
/// requirements named after a representative observation.
std::vector<Requirement> induced_obligations(const SystemModel& model,
                                             const TestSetup& setup);

struct RefutabilityReport {
  bool holds = false;
  // For is_refutable: violator -> witness observation with
  // alpha_hat(t) disjoint from R. For is_verifiable: satisfier -> witness
  // with alpha_hat(t) contained in R.
  std::map<std::string, std::string> witnesses;
  std::vector<std::string> blockers;  // elements with no witness
};

RefutabilityReport is_refutable(const SystemModel& model,
                                const TestSetup& setup, const Requirement& r);
RefutabilityReport is_verifiable(const SystemModel& model,
                                 const TestSetup& setup, const Requirement& r);

/// True iff every requirement refutable in `coarser` is refutable in
/// `finer`, decided by exhausting all 2^n requirements. Refuses models
/// larger than `element_cap` rather than sampling.
bool is_more_permissive(const SystemModel& model, const TestSetup& finer,
                        const TestSetup& coarser, std::size_t element_cap = 12);

}  // namespace bbt
