#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bbt/order.hpp"
#include "bbt/testsetup.hpp"

namespace bbt {

/// An ultimately periodic word stem.loop^omega in canonical form: the
/// loop is primitive and the stem is minimal, so two LassoWords are
/// equal iff they denote the same infinite word.
class LassoWord {
 public:
  static LassoWord make(std::string stem, std::string loop);

  const std::string& stem() const { return stem_; }
  const std::string& loop() const { return loop_; }

  /// First `len` letters of the denoted infinite word.
  std::string unroll(std::size_t len) const;

  /// Printable identifier, e.g. "a(ba)^w".
  std::string id() const { return stem_ + "(" + loop_ + ")^w"; }

  auto operator<=>(const LassoWord&) const = default;

 private:
  LassoWord(std::string stem, std::string loop)
      : stem_(std::move(stem)), loop_(std::move(loop)) {}
  std::string stem_;
  std::string loop_;
};

/// All prefixes of the denoted word up to `depth`, including the empty
/// word.
std::set<std::string> prefixes(const LassoWord& w, std::size_t depth);

/// A finite carrier for the temporal model: all canonical lasso words
/// within the stem/loop bounds, with the powerset of behaviors as the
/// system model. Safety and liveness verdicts are relative to this
/// carrier and to prefix_depth.
struct TemporalUniverse {
  std::string alphabet;
  std::size_t stem_bound = 0;
  std::size_t loop_bound = 0;
  std::size_t prefix_depth = 0;
  std::vector<LassoWord> behaviors;  // sorted by id
  SystemModel model;

  std::size_t behavior_index(const std::string& id) const;
  /// Behaviors whose denoted word starts with `sigma`.
  Bits extenders(const std::string& sigma) const;
  std::string label() const;
};

TemporalUniverse build_temporal_universe(std::string alphabet,
                                         std::size_t stem_bound,
                                         std::size_t loop_bound,
                                         std::size_t prefix_depth,
                                         std::size_t behavior_cap = 12);

/// A temporal property: a subset of the universe's behaviors.
struct TemporalProperty {
  std::string name;
  Bits members;  // over universe.behaviors
};

TemporalProperty make_property(const TemporalUniverse& u, std::string name,
                               const std::vector<std::string>& behavior_ids);
TemporalProperty make_property(const TemporalUniverse& u, std::string name,
                               Bits members);

/// The T_* setup: observations are all subsets of Sigma^{<=prefix_depth}
/// of cardinality at most `set_cap`, and alpha_*(S) collects the
/// observations contained in the prefixes of S's behaviors.
TestSetup tstar_setup(const TemporalUniverse& u, std::size_t set_cap = 3);

struct SafetyCertificate {
  bool holds = false;
  std::map<std::string, std::string> bad_prefixes;  // violator -> prefix
  std::vector<std::string> undetectable;  // violators with no bad prefix
};

struct LivenessCertificate {
  bool holds = false;
  std::string stuck_prefix;  // a prefix with no extension into the property
};

SafetyCertificate is_safety(const TemporalUniverse& u,
                            const TemporalProperty& phi);
LivenessCertificate is_liveness(const TemporalUniverse& u,
                                const TemporalProperty& phi);

/// Splits phi into a safety part (the universe-relative closure of phi)
/// and a liveness part whose conjunction with it gives back phi.
std::pair<TemporalProperty, TemporalProperty> decompose(
    const TemporalUniverse& u, const TemporalProperty& phi);

/// R_phi: the systems all of whose behaviors lie in phi. Always a
/// prohibition.
Requirement property_requirement(const TemporalUniverse& u,
                                 const TemporalProperty& phi);

/// T_*-refutability of an arbitrary requirement over the universe.
bool is_hyper_safety(const TemporalUniverse& u, const Requirement& r,
                     std::size_t set_cap = 3);

/// Irremediable sequences: words (up to prefix_depth) none of whose
/// universe extensions lie in phi.
std::set<std::string> nabla(const TemporalUniverse& u,
                            const TemporalProperty& phi);

/// All words over the alphabet of length <= depth, shortest first, then
/// lexicographic.
std::vector<std::string> words_up_to(const std::string& alphabet,
                                     std::size_t depth);

}  // namespace bbt
