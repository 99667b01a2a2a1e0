#include "bbt/testsetup.hpp"

#include <algorithm>
#include <numeric>

namespace bbt {

std::size_t TestSetup::observation(const std::string& id) const {
  auto it = obs_index.find(id);
  if (it == obs_index.end())
    throw UnknownObservation("unknown observation: " + id);
  return it->second;
}

namespace {

void finish_setup(const SystemModel& model, TestSetup& s) {
  const std::size_t n = model.size();
  const std::size_t t = s.obs_ids.size();
  s.alpha_hat.assign(t, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t o = s.alpha[i].find_first(); o != Bits::npos;
         o = s.alpha[i].find_next(o))
      s.alpha_hat[o].set(i);

  for (const auto& [a, b] : model.covers()) {
    if (!s.alpha[a].is_subset_of(s.alpha[b]))
      throw NotOrderPreserving("alpha(" + model.id(a) +
                               ") is not contained in alpha(" + model.id(b) +
                               ")");
  }
}

}  // namespace

TestSetup build_setup(const SystemModel& model, std::string name,
                      std::vector<std::string> observations,
                      std::vector<Bits> alpha) {
  TestSetup s;
  s.name = std::move(name);
  s.model_uid = model.uid();
  s.n_elements = model.size();
  if (alpha.size() != model.size())
    throw ModelMismatch("alpha must be total on the model's elements");

  // Sort observation ids, permuting alpha columns to match.
  const std::size_t t = observations.size();
  std::vector<std::size_t> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return observations[a] < observations[b];
  });
  s.obs_ids.reserve(t);
  for (std::size_t k = 0; k < t; ++k) s.obs_ids.push_back(observations[perm[k]]);
  for (std::size_t k = 0; k + 1 < t; ++k)
    if (s.obs_ids[k] == s.obs_ids[k + 1])
      throw ValidationError("duplicate observation: " + s.obs_ids[k]);
  for (std::size_t k = 0; k < t; ++k) s.obs_index[s.obs_ids[k]] = k;

  s.alpha.assign(model.size(), Bits(t));
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (alpha[i].size() != t)
      throw ValidationError("alpha row has wrong observation count");
    for (std::size_t k = 0; k < t; ++k)
      if (alpha[i].test(perm[k])) s.alpha[i].set(k);
  }
  finish_setup(model, s);
  return s;
}

TestSetup build_setup(
    const SystemModel& model, std::string name,
    std::vector<std::string> observations,
    const std::map<std::string, std::vector<std::string>>& alpha_by_id) {
  std::sort(observations.begin(), observations.end());
  std::map<std::string, std::size_t> oindex;
  for (std::size_t k = 0; k < observations.size(); ++k)
    oindex[observations[k]] = k;

  std::vector<Bits> alpha(model.size(), Bits(observations.size()));
  for (const auto& [elem, obs] : alpha_by_id) {
    const std::size_t i = model.index(elem);
    for (const auto& o : obs) {
      auto it = oindex.find(o);
      if (it == oindex.end())
        throw UnknownObservation("alpha(" + elem +
                                 ") mentions undeclared observation " + o);
      alpha[i].set(it->second);
    }
  }
  return build_setup(model, std::move(name), std::move(observations),
                     std::move(alpha));
}

TestSetup reflexive_setup(const SystemModel& model) {
  const std::size_t n = model.size();
  std::vector<std::string> obs;
  obs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) obs.push_back(model.id(i));
  std::vector<Bits> alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    Bits self(n);
    self.set(i);
    alpha[i] = model.downward(self);
  }
  return build_setup(model, "reflexive", std::move(obs), std::move(alpha));
}

Bits alpha_hat(const TestSetup& setup, const std::string& obs) {
  return setup.alpha_hat[setup.observation(obs)];
}

std::vector<Requirement> induced_obligations(const SystemModel& model,
                                             const TestSetup& setup) {
  std::vector<Requirement> out;
  std::vector<Bits> seen;
  for (std::size_t o = 0; o < setup.obs_ids.size(); ++o) {
    if (std::find(seen.begin(), seen.end(), setup.alpha_hat[o]) != seen.end())
      continue;
    seen.push_back(setup.alpha_hat[o]);
    out.push_back(make_requirement(model, "alpha_hat(" + setup.obs_ids[o] + ")",
                                   setup.alpha_hat[o]));
  }
  return out;
}

namespace {

void check_setup(const SystemModel& model, const TestSetup& setup,
                 const Requirement& r) {
  check_model(model, r);
  if (setup.model_uid != model.uid())
    throw ModelMismatch("setup " + setup.name +
                        " does not belong to this model");
}

// Shared scan: for each element with `from_members` membership status,
// find the first observation whose alpha_hat image satisfies `good`.
template <typename Pred>
RefutabilityReport witness_scan(const SystemModel& model,
                                const TestSetup& setup, const Bits& subjects,
                                Pred good) {
  RefutabilityReport rep;
  rep.holds = true;
  for (std::size_t i = subjects.find_first(); i != Bits::npos;
       i = subjects.find_next(i)) {
    bool found = false;
    for (std::size_t o = setup.alpha[i].find_first(); o != Bits::npos;
         o = setup.alpha[i].find_next(o)) {
      if (good(setup.alpha_hat[o])) {
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

}  // namespace

RefutabilityReport is_refutable(const SystemModel& model,
                                const TestSetup& setup, const Requirement& r) {
  check_setup(model, setup, r);
  const Bits violators = ~r.members;
  return witness_scan(model, setup, violators, [&](const Bits& image) {
    return !image.intersects(r.members);
  });
}

RefutabilityReport is_verifiable(const SystemModel& model,
                                 const TestSetup& setup, const Requirement& r) {
  check_setup(model, setup, r);
  return witness_scan(model, setup, r.members, [&](const Bits& image) {
    return image.is_subset_of(r.members);
  });
}

namespace {

// Mask view of a setup for small models (n <= 64).
struct MaskSetup {
  std::vector<std::uint64_t> alpha_hat;            // obs -> element mask
  std::vector<std::vector<std::size_t>> obs_of;    // element -> observations
};

MaskSetup to_masks(const TestSetup& s) {
  MaskSetup m;
  m.alpha_hat.reserve(s.alpha_hat.size());
  for (const auto& b : s.alpha_hat) {
    std::uint64_t mask = 0;
    for (std::size_t i = b.find_first(); i != Bits::npos; i = b.find_next(i))
      mask |= std::uint64_t{1} << i;
    m.alpha_hat.push_back(mask);
  }
  m.obs_of.resize(s.alpha.size());
  for (std::size_t i = 0; i < s.alpha.size(); ++i)
    for (std::size_t o = s.alpha[i].find_first(); o != Bits::npos;
         o = s.alpha[i].find_next(o))
      m.obs_of[i].push_back(o);
  return m;
}

bool mask_refutable(const MaskSetup& s, std::uint64_t req, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (req >> i & 1) continue;  // satisfier
    bool found = false;
    for (std::size_t o : s.obs_of[i]) {
      if ((s.alpha_hat[o] & req) == 0) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool is_more_permissive(const SystemModel& model, const TestSetup& finer,
                        const TestSetup& coarser, std::size_t element_cap) {
  if (finer.model_uid != model.uid() || coarser.model_uid != model.uid())
    throw ModelMismatch("setups belong to a different model");
  const std::size_t n = model.size();
  // The contract is a universal claim over all requirements; refuse rather
  // than sample when exhaustion is infeasible.
  if (n > element_cap || n > 20)
    throw ModelTooLarge("model has " + std::to_string(n) +
                        " elements, above the enumeration cap of " +
                        std::to_string(std::min<std::size_t>(element_cap, 20)));
  const MaskSetup mf = to_masks(finer);
  const MaskSetup mc = to_masks(coarser);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t req = 0; req < total; ++req) {
    if (mask_refutable(mc, req, n) && !mask_refutable(mf, req, n)) return false;
  }
  return true;
}

}  // namespace bbt
