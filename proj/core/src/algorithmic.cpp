#include "bbt/algorithmic.hpp"

namespace bbt {

std::unique_ptr<ScriptedEnumerator> ScriptedEnumerator::of_items(
    std::string id, const std::vector<std::string>& items) {
  std::vector<StepResult> events;
  events.reserve(items.size());
  for (const auto& i : items) events.push_back(StepResult::yielded(i));
  return std::make_unique<ScriptedEnumerator>(std::move(id), std::move(events));
}

StepResult ScriptedEnumerator::step() {
  if (done_) return StepResult::exhausted();
  if (pos_ >= events_.size()) {
    if (repeat_last_ && !events_.empty()) return events_.back();
    done_ = true;
    return StepResult::exhausted();
  }
  StepResult r = events_[pos_];
  if (!repeat_last_ || pos_ + 1 < events_.size()) ++pos_;
  if (r.kind == StepResult::Kind::Exhausted) done_ = true;
  return r;
}

namespace {

class DovetailEnumerator : public Enumerator {
 public:
  explicit DovetailEnumerator(std::vector<std::unique_ptr<Enumerator>> inner)
      : inner_(std::move(inner)), exhausted_(inner_.size(), false) {
    if (inner_.empty()) throw ValidationError("dovetail needs an enumerator");
  }

  StepResult step() override {
    if (all_exhausted()) return StepResult::exhausted();
    // Tick position inside the stage schedule: stage m runs constituents
    // 0..m-1 for m repetitions each.
    for (;;) {
      if (idx_ >= stage_ ) {
        ++stage_;
        idx_ = 0;
        rep_ = 0;
      }
      if (idx_ >= inner_.size()) {  // beyond the finite list; next stage
        stage_ += 1;
        idx_ = 0;
        rep_ = 0;
        continue;
      }
      const std::size_t i = idx_;
      if (++rep_ >= stage_) {
        rep_ = 0;
        ++idx_;
      }
      if (exhausted_[i]) return StepResult::working();
      StepResult r = inner_[i]->step();
      if (r.kind == StepResult::Kind::Exhausted) {
        exhausted_[i] = true;
        if (all_exhausted()) return StepResult::exhausted();
        return StepResult::working();
      }
      return r;
    }
  }

  std::string id() const override { return "dovetail"; }

 private:
  bool all_exhausted() const {
    for (bool e : exhausted_)
      if (!e) return false;
    return true;
  }

  std::vector<std::unique_ptr<Enumerator>> inner_;
  std::vector<bool> exhausted_;
  std::size_t stage_ = 1;
  std::size_t idx_ = 0;
  std::size_t rep_ = 0;
};

}  // namespace

std::unique_ptr<Enumerator> dovetail(
    std::vector<std::unique_ptr<Enumerator>> enumerators) {
  return std::make_unique<DovetailEnumerator>(std::move(enumerators));
}

std::set<std::string> omega_set(const SystemModel& model,
                                const TestSetup& setup, const Requirement& r) {
  check_model(model, r);
  if (setup.model_uid != model.uid())
    throw ModelMismatch("setup does not belong to this model");
  std::set<std::string> out;
  for (std::size_t o = 0; o < setup.obs_ids.size(); ++o)
    if (!setup.alpha_hat[o].intersects(r.members)) out.insert(setup.obs_ids[o]);
  return out;
}

OmegaOracle OmegaOracle::from_set(std::string name,
                                  std::set<std::string> items) {
  std::vector<std::string> ordered(items.begin(), items.end());
  return OmegaOracle{
      std::move(name), [ordered](){
        return ScriptedEnumerator::of_items("omega", ordered);
      }};
}

std::string CampaignLogEntry::render() const {
  const char* ev = event == StepResult::Kind::Yielded    ? "Yielded"
                   : event == StepResult::Kind::Working ? "Working"
                                                        : "Exhausted";
  std::string out = "step=" + std::to_string(step) + " enum=" + enum_id +
                    " event=" + ev;
  if (event == StepResult::Kind::Yielded) out += " item=" + item;
  return out;
}

namespace {

// One scheduler slot: the system-side enumerator, or a membership probe
// watching a fresh oracle enumeration for one target observation.
struct Slot {
  std::unique_ptr<Enumerator> en;
  std::string id;
  std::optional<std::string> target;
  bool exhausted = false;
};

}  // namespace

CampaignVerdict algorithm1(std::unique_ptr<Enumerator> system_enum,
                           const OmegaOracle& omega, std::size_t budget) {
  CampaignVerdict verdict;
  std::vector<Slot> slots;
  slots.push_back(Slot{std::move(system_enum), "system", std::nullopt});
  std::set<std::string> seen;

  // The slot list grows as the system yields observations; new probes
  // join the stage schedule at their index, preserving fairness.
  for (std::size_t stage = 1;; ++stage) {
    for (std::size_t idx = 0; idx < stage; ++idx) {
      if (idx >= slots.size()) continue;
      for (std::size_t rep = 0; rep < stage; ++rep) {
        if (verdict.steps_used >= budget) {
          verdict.outcome = CampaignVerdict::Outcome::BudgetExhausted;
          return verdict;
        }
        Slot& slot = slots[idx];
        StepResult r = slot.exhausted ? StepResult::exhausted()
                                      : slot.en->step();
        if (r.kind == StepResult::Kind::Exhausted) slot.exhausted = true;
        ++verdict.steps_used;
        verdict.log.push_back(
            {verdict.steps_used, slot.id, r.kind, r.item});
        if (r.kind != StepResult::Kind::Yielded) continue;
        if (idx == 0) {
          if (seen.insert(r.item).second)
            slots.push_back(
                Slot{omega.make(), "probe:" + r.item, r.item});
        } else if (slot.target && r.item == *slot.target) {
          verdict.outcome = CampaignVerdict::Outcome::Refuted;
          verdict.witness = r.item;
          return verdict;
        }
      }
    }
  }
}

std::vector<Decision> weak_enforce(const std::vector<std::string>& inputs,
                                   const OmegaOracle& co_omega,
                                   std::size_t budget) {
  std::vector<Decision> decisions(inputs.size(), Decision::Stall);
  std::vector<Slot> slots;
  for (const auto& t : inputs)
    slots.push_back(Slot{co_omega.make(), "probe:" + t, t});

  std::size_t used = 0;
  std::size_t pending = inputs.size();
  for (std::size_t stage = 1; pending > 0; ++stage) {
    for (std::size_t idx = 0; idx < stage && idx < slots.size(); ++idx) {
      for (std::size_t rep = 0; rep < stage; ++rep) {
        if (used >= budget) return decisions;
        Slot& slot = slots[idx];
        if (slot.exhausted || decisions[idx] == Decision::Permit) continue;
        StepResult r = slot.en->step();
        ++used;
        if (r.kind == StepResult::Kind::Exhausted) slot.exhausted = true;
        if (r.kind == StepResult::Kind::Yielded && r.item == *slot.target) {
          decisions[idx] = Decision::Permit;
          --pending;
        }
      }
    }
    bool live = false;
    for (std::size_t idx = 0; idx < slots.size(); ++idx)
      if (!slots[idx].exhausted && decisions[idx] == Decision::Stall)
        live = true;
    if (!live) break;  // every undecided probe's enumeration has ended
  }
  return decisions;
}

}  // namespace bbt
