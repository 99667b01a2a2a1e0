#include "bbt/order.hpp"

#include <algorithm>
#include <atomic>

namespace bbt {

namespace {
std::atomic<std::uint64_t> next_uid{1};
}

void SystemModel::index_elements() {
  index_.clear();
  for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = i;
}

std::size_t SystemModel::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownElement("unknown element: " + name);
  return it->second;
}

SystemModel SystemModel::from_pairs(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& order_pairs,
    const std::string& bot, const std::string& top) {
  if (elements.empty()) throw UnknownElement("model needs at least one element");
  SystemModel m;
  m.ids_ = elements;
  std::sort(m.ids_.begin(), m.ids_.end());
  m.ids_.erase(std::unique(m.ids_.begin(), m.ids_.end()), m.ids_.end());
  m.index_elements();
  m.bot_ = m.index(bot);
  m.top_ = m.index(top);

  const std::size_t n = m.ids_.size();
  m.up_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) m.up_[i].set(i);
  for (const auto& [a, b] : order_pairs) m.up_[m.index(a)].set(m.index(b));

  // Reflexive-transitive closure, Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m.up_[i].test(k)) m.up_[i] |= m.up_[k];

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.up_[i].test(j) && m.up_[j].test(i))
        throw CycleDetected("antisymmetry violated between " + m.ids_[i] +
                            " and " + m.ids_[j]);

  for (std::size_t i = 0; i < n; ++i) {
    if (!m.up_[m.bot_].test(i))
      throw BoundViolation(bot + " is not below " + m.ids_[i]);
    if (!m.up_[i].test(m.top_))
      throw BoundViolation(top + " is not above " + m.ids_[i]);
  }

  m.down_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.up_[i].test(j)) m.down_[j].set(i);

  m.uid_ = next_uid.fetch_add(1);
  return m;
}

SystemModel SystemModel::subset_order(std::vector<std::string> ids,
                                      unsigned width) {
  SystemModel m;
  if (ids.size() != (std::size_t{1} << width))
    throw UnknownElement("subset order needs 2^width element names");
  m.ids_ = std::move(ids);
  m.index_elements();
  m.subset_ = true;
  m.width_ = width;
  m.bot_ = 0;
  m.top_ = (std::size_t{1} << width) - 1;
  m.uid_ = next_uid.fetch_add(1);
  return m;
}

Bits SystemModel::upward(const Bits& r) const {
  const std::size_t n = size();
  if (!subset_) {
    Bits out(n);
    for (std::size_t i = r.find_first(); i != Bits::npos; i = r.find_next(i))
      out |= up_[i];
    return out;
  }
  // Subset-sum transform: out[m] = OR over submasks of m of r[m'].
  Bits out = r;
  for (unsigned b = 0; b < width_; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t mask = 0; mask < n; ++mask)
      if ((mask & bit) && out.test(mask ^ bit)) out.set(mask);
  }
  return out;
}

Bits SystemModel::downward(const Bits& r) const {
  const std::size_t n = size();
  if (!subset_) {
    Bits out(n);
    for (std::size_t i = r.find_first(); i != Bits::npos; i = r.find_next(i))
      out |= down_[i];
    return out;
  }
  Bits out = r;
  for (unsigned b = 0; b < width_; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t mask = 0; mask < n; ++mask)
      if (!(mask & bit) && out.test(mask ^ bit)) out.set(mask);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SystemModel::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  if (subset_) {
    for (std::size_t mask = 0; mask < n; ++mask)
      for (unsigned b = 0; b < width_; ++b)
        if (!(mask >> b & 1)) out.emplace_back(mask, mask | (std::size_t{1} << b));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = up_[i].find_first(); j != Bits::npos;
         j = up_[i].find_next(j)) {
      if (j == i) continue;
      bool covering = true;
      for (std::size_t k = up_[i].find_first(); k != Bits::npos;
           k = up_[i].find_next(k)) {
        if (k != i && k != j && up_[k].test(j)) {
          covering = false;
          break;
        }
      }
      if (covering) out.emplace_back(i, j);
    }
  }
  return out;
}

Requirement make_requirement(const SystemModel& model, std::string name,
                             const std::vector<std::string>& members) {
  Bits bits(model.size());
  for (const auto& m : members) bits.set(model.index(m));
  return Requirement{std::move(name), std::move(bits), model.uid()};
}

Requirement make_requirement(const SystemModel& model, std::string name,
                             Bits members) {
  if (members.size() != model.size())
    throw ModelMismatch("member set size does not match model");
  return Requirement{std::move(name), std::move(members), model.uid()};
}

void check_model(const SystemModel& model, const Requirement& r) {
  if (r.model_uid != model.uid() || r.members.size() != model.size())
    throw ModelMismatch("requirement " + r.name +
                        " does not belong to this model");
}

Requirement up_closure(const SystemModel& model, const Requirement& r) {
  check_model(model, r);
  return Requirement{r.name, model.upward(r.members), model.uid()};
}

Requirement down_closure(const SystemModel& model, const Requirement& r) {
  check_model(model, r);
  return Requirement{r.name, model.downward(r.members), model.uid()};
}

Classification classify(const SystemModel& model, const Requirement& r) {
  check_model(model, r);
  const Bits up = model.upward(r.members);
  const Bits down = model.downward(r.members);
  Classification c;
  c.is_obligation = (r.members == up);
  c.is_prohibition = (r.members == down);
  c.is_trivial = r.members.none() || r.members.all();
  c.is_semi_monotone = (r.members == (up & down));
  return c;
}

Requirement combine(SetOp op, const Requirement& r1, const Requirement& r2) {
  if (r1.model_uid != r2.model_uid || r1.members.size() != r2.members.size())
    throw ModelMismatch("cannot combine requirements over different models");
  Bits bits = op == SetOp::Meet ? (r1.members & r2.members)
                                : (r1.members | r2.members);
  const char* sep = op == SetOp::Meet ? " & " : " | ";
  return Requirement{r1.name + sep + r2.name, std::move(bits), r1.model_uid};
}

}  // namespace bbt
