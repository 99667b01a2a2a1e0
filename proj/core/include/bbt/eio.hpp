#pragma once

#include <string>
#include <vector>

#include "bbt/order.hpp"
#include "bbt/testsetup.hpp"

namespace bbt {

/// One extensional input-output system: a set of (input, output) pairs.
struct EioSystem {
  std::vector<std::pair<int, int>> pairs;  // sorted, unique
};

/// The bounded extensional input-output universe: inputs and outputs
/// range over 0..bound-1 and the model is the full powerset of the
/// bound x bound grid ordered by inclusion.
struct EioUniverse {
  int bound = 0;
  SystemModel model;

  unsigned pair_bit(int input, int output) const;
  std::size_t element_of(const EioSystem& s) const;
  EioSystem system_of(std::size_t element) const;
};

/// Identifier of the pair set with the given grid bitmask, e.g.
/// "{(0,0),(1,0)}". Element index m carries exactly this name.
std::string eio_element_id(int bound, std::size_t mask);

EioUniverse build_universe(int bound);  // 1 <= bound <= 4

/// The T_k setup: observations are all k-tuples over the grid and
/// alpha_k(S) = S^k. k = 1 observations are written "{(i,o)}" to match
/// the singleton observations of the subprocess harness.
TestSetup tk_setup(const EioUniverse& u, int k,
                   std::size_t observation_cap = 1 << 16);

/// Named requirements evaluated over every system in the universe:
/// determinism, totality, total_function, anonymity_zigzag,
/// never_zero_odd.
Requirement builtin_requirement(const EioUniverse& u, const std::string& name);
std::vector<std::string> builtin_requirement_names();

/// The ascending chain S_0, S_1, ... restricted to systems the grid can
/// host (inputs below the bound).
std::vector<EioSystem> chain_example(const EioUniverse& u);

/// S_j of the chain, independent of any universe: S_0 = {(0,0)} and S_j
/// adds (j, j/2) for even j, (j, (j-1)/2) for odd j.
EioSystem chain_system(int j);

/// The anonymity predicate on a raw system: every (i,o) has a companion
/// (i',o) with a different input.
bool anonymity_zigzag_holds(const EioSystem& s);

}  // namespace bbt
