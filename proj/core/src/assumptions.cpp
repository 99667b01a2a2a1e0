#include "bbt/assumptions.hpp"

namespace bbt {

RefutabilityReport refutable_under(const SystemModel& model,
                                   const TestSetup& setup,
                                   const Requirement& r,
                                   const Requirement& assumption) {
  check_model(model, r);
  check_model(model, assumption);
  if (setup.model_uid != model.uid())
    throw ModelMismatch("setup does not belong to this model");

  const Bits narrowed = assumption.members & r.members;
  const Bits subjects = assumption.members & ~r.members;
  RefutabilityReport rep;
  rep.holds = true;
  for (std::size_t i = subjects.find_first(); i != Bits::npos;
       i = subjects.find_next(i)) {
    bool found = false;
    for (std::size_t o = setup.alpha[i].find_first(); o != Bits::npos;
         o = setup.alpha[i].find_next(o)) {
      if (!setup.alpha_hat[o].intersects(narrowed)) {
        rep.witnesses.emplace(model.id(i), setup.obs_ids[o]);
        found = true;
        break;
      }
    }
    if (!found) {
      rep.blockers.push_back(model.id(i));
      rep.holds = false;
    }
  }
  return rep;
}

Requirement residual_prohibition(const SystemModel& model,
                                 const Requirement& r,
                                 const Requirement& assumption) {
  check_model(model, r);
  check_model(model, assumption);
  return make_requirement(model, "P_" + r.name + "|" + assumption.name,
                          model.downward(assumption.members & r.members));
}

CampaignReport reduction_campaign(const SystemModel& model,
                                  const TestSetup& setup, const Requirement& r,
                                  const Requirement& assumption,
                                  const std::string& system_id) {
  CampaignReport report;
  report.assumption_name = assumption.name;
  const std::size_t s = model.index(system_id);
  const Requirement residual = residual_prohibition(model, r, assumption);

  // Step 1: refute S in P_{R|A}, if an irremediable observation of the
  // residual is available on S.
  for (std::size_t o = setup.alpha[s].find_first(); o != Bits::npos;
       o = setup.alpha[s].find_next(o)) {
    if (!setup.alpha_hat[o].intersects(residual.members)) {
      report.refutation_witness = setup.obs_ids[o];
      break;
    }
  }

  // Step 2: verify S in A, when A is verifiable at all.
  report.assumption_verifiable = is_verifiable(model, setup, assumption).holds;
  if (report.assumption_verifiable) {
    for (std::size_t o = setup.alpha[s].find_first(); o != Bits::npos;
         o = setup.alpha[s].find_next(o)) {
      if (setup.alpha_hat[o].is_subset_of(assumption.members)) {
        report.verification_witness = setup.obs_ids[o];
        break;
      }
    }
  }

  if (report.refutation_witness && report.verification_witness)
    report.conclusion = CampaignReport::Conclusion::UnconditionalViolation;
  else if (report.refutation_witness)
    report.conclusion = CampaignReport::Conclusion::ConditionalViolation;
  else
    report.conclusion = CampaignReport::Conclusion::Inconclusive;
  return report;
}

}  // namespace bbt
