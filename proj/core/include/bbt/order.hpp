#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bbt/errors.hpp"

namespace bbt {

using Bits = boost::dynamic_bitset<>;

/// A finite bounded poset of systems. Elements are opaque identifiers;
/// the order is stored in closed form so that every leq query is O(1).
///
/// Two backends exist: an explicit closed relation (general models built
/// from order pairs) and an implicit subset order where element index i
/// encodes a bitmask and leq(i, j) holds iff i's mask is contained in
/// j's. The latter makes powerset universes (EIO, temporal) tractable
/// without materializing a quadratic relation.
class SystemModel {
 public:
  /// An empty placeholder; only models returned by the named builders
  /// satisfy the class invariants.
  SystemModel() = default;

  /// Builds a model from generator pairs. The stored order is the
  /// reflexive-transitive closure of `order_pairs`. Elements are indexed
  /// in lexicographic order of their identifiers.
  static SystemModel from_pairs(
      const std::vector<std::string>& elements,
      const std::vector<std::pair<std::string, std::string>>& order_pairs,
      const std::string& bot, const std::string& top);

  /// Builds the powerset model over `width` atoms: element index m is the
  /// set with bit pattern m, ordered by inclusion. `ids[m]` names element m.
  static SystemModel subset_order(std::vector<std::string> ids, unsigned width);

  std::size_t size() const { return ids_.size(); }
  std::size_t bot() const { return bot_; }
  std::size_t top() const { return top_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }

  /// Throws UnknownElement if `name` is not an element.
  std::size_t index(const std::string& name) const;
  bool has_element(const std::string& name) const {
    return index_.count(name) != 0;
  }

  bool leq(std::size_t a, std::size_t b) const {
    if (subset_) return (a & ~b) == 0;
    return up_[a].test(b);
  }

  bool is_subset_order() const { return subset_; }
  unsigned width() const { return width_; }

  /// { j | exists i in r with i <= j }
  Bits upward(const Bits& r) const;
  /// { j | exists i in r with j <= i }
  Bits downward(const Bits& r) const;

  /// Covering pairs (a, b): a < b with nothing strictly between. Used to
  /// validate order preservation without quantifying over all pairs.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Identity token: requirements remember the model they belong to.
  std::uint64_t uid() const { return uid_; }

 private:
  void index_elements();

  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t bot_ = 0;
  std::size_t top_ = 0;
  bool subset_ = false;
  unsigned width_ = 0;
  std::vector<Bits> up_;    // dense backend: up_[i] = {j | i <= j}
  std::vector<Bits> down_;  // dense backend transpose
  std::uint64_t uid_ = 0;
};

/// A requirement is an extensional set of a model's elements.
struct Requirement {
  std::string name;
  Bits members;
  std::uint64_t model_uid = 0;

  bool satisfied_by(std::size_t element) const { return members.test(element); }
};

struct Classification {
  bool is_obligation = false;
  bool is_prohibition = false;
  bool is_trivial = false;
  bool is_semi_monotone = false;
};

enum class SetOp { Meet, Join };

Requirement make_requirement(const SystemModel& model, std::string name,
                             const std::vector<std::string>& members);
Requirement make_requirement(const SystemModel& model, std::string name,
                             Bits members);

/// Throws ModelMismatch unless `r` belongs to `model`.
void check_model(const SystemModel& model, const Requirement& r);

Requirement up_closure(const SystemModel& model, const Requirement& r);
Requirement down_closure(const SystemModel& model, const Requirement& r);
Classification classify(const SystemModel& model, const Requirement& r);
Requirement combine(SetOp op, const Requirement& r1, const Requirement& r2);

}  // namespace bbt
