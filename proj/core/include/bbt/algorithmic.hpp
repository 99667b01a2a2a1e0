#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bbt/testsetup.hpp"

namespace bbt {

/// One step of a steppable computation that progressively produces
/// members of a recursively enumerable set.
struct StepResult {
  enum class Kind { Yielded, Working, Exhausted };
  Kind kind = Kind::Working;
  std::string item;  // set for Yielded only

  static StepResult yielded(std::string i) {
    return {Kind::Yielded, std::move(i)};
  }
  static StepResult working() { return {Kind::Working, {}}; }
  static StepResult exhausted() { return {Kind::Exhausted, {}}; }
};

class Enumerator {
 public:
  virtual ~Enumerator() = default;
  /// After the first Exhausted, every further call returns Exhausted.
  virtual StepResult step() = 0;
  virtual std::string id() const { return "enum"; }
};

/// An enumerator driven by a fixed script of events. With `repeat_last`,
/// the final event is replayed forever (e.g. a perpetual stall);
/// otherwise the enumerator exhausts after the script ends.
class ScriptedEnumerator : public Enumerator {
 public:
  ScriptedEnumerator(std::string id, std::vector<StepResult> events,
                     bool repeat_last = false)
      : id_(std::move(id)), events_(std::move(events)),
        repeat_last_(repeat_last) {}

  /// Yields the given items one per step, then exhausts.
  static std::unique_ptr<ScriptedEnumerator> of_items(
      std::string id, const std::vector<std::string>& items);

  StepResult step() override;
  std::string id() const override { return id_; }

 private:
  std::string id_;
  std::vector<StepResult> events_;
  bool repeat_last_;
  std::size_t pos_ = 0;
  bool done_ = false;
};

/// Fair interleaving: stage m performs m steps on each of the first m
/// constituents, so any item a constituent would ever yield is
/// eventually emitted even when other constituents stall forever.
std::unique_ptr<Enumerator> dovetail(
    std::vector<std::unique_ptr<Enumerator>> enumerators);

/// The exact set of irremediable observations of R in a finite setup:
/// { t in T | alpha_hat(t) and R are disjoint }.
std::set<std::string> omega_set(const SystemModel& model,
                                const TestSetup& setup, const Requirement& r);

/// A recursively enumerable oracle for a set of observations: `make`
/// starts a fresh enumeration of the set, which membership probes watch
/// for a specific item.
struct OmegaOracle {
  std::string name;
  std::function<std::unique_ptr<Enumerator>()> make;

  static OmegaOracle from_set(std::string name, std::set<std::string> items);
};

struct CampaignLogEntry {
  std::size_t step = 0;
  std::string enum_id;
  StepResult::Kind event = StepResult::Kind::Working;
  std::string item;

  std::string render() const;
};

struct CampaignVerdict {
  enum class Outcome { Refuted, BudgetExhausted };
  Outcome outcome = Outcome::BudgetExhausted;
  std::optional<std::string> witness;
  std::size_t steps_used = 0;
  std::vector<CampaignLogEntry> log;
};

/// Emptiness test of the intersection of two r.e. sets: observations
/// yielded by `system_enum` spawn membership probes against `omega`, all
/// interleaved by the dovetailing stage schedule. Budget exhaustion is an
/// inconclusive verdict, never a satisfaction claim.
CampaignVerdict algorithm1(std::unique_ptr<Enumerator> system_enum,
                           const OmegaOracle& omega, std::size_t budget);

enum class Decision { Permit, Stall };

/// Weak-enforcement monitor: each incoming observation is probed against
/// the complement oracle under dovetailing; it is permitted once
/// confirmed outside Omega_R and stalls otherwise (within the budget).
std::vector<Decision> weak_enforce(const std::vector<std::string>& inputs,
                                   const OmegaOracle& co_omega,
                                   std::size_t budget);

}  // namespace bbt
