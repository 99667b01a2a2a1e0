#include "bbt/eio.hpp"

#include <algorithm>

namespace bbt {

std::string eio_element_id(int bound, std::size_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < bound; ++i) {
    for (int o = 0; o < bound; ++o) {
      if (mask >> (i * bound + o) & 1) {
        if (!first) out += ",";
        out += "(" + std::to_string(i) + "," + std::to_string(o) + ")";
        first = false;
      }
    }
  }
  return out + "}";
}

unsigned EioUniverse::pair_bit(int input, int output) const {
  return static_cast<unsigned>(input * bound + output);
}

std::size_t EioUniverse::element_of(const EioSystem& s) const {
  std::size_t mask = 0;
  for (const auto& [i, o] : s.pairs) {
    if (i < 0 || i >= bound || o < 0 || o >= bound)
      throw UnknownElement("pair outside grid: (" + std::to_string(i) + "," +
                           std::to_string(o) + ")");
    mask |= std::size_t{1} << pair_bit(i, o);
  }
  return mask;
}

EioSystem EioUniverse::system_of(std::size_t element) const {
  EioSystem s;
  for (int i = 0; i < bound; ++i)
    for (int o = 0; o < bound; ++o)
      if (element >> pair_bit(i, o) & 1) s.pairs.emplace_back(i, o);
  return s;
}

EioUniverse build_universe(int bound) {
  if (bound < 1 || bound > 4)
    throw BoundTooLarge("bound must be between 1 and 4, got " +
                        std::to_string(bound));
  const unsigned width = static_cast<unsigned>(bound * bound);
  std::vector<std::string> ids;
  ids.reserve(std::size_t{1} << width);
  for (std::size_t m = 0; m < (std::size_t{1} << width); ++m)
    ids.push_back(eio_element_id(bound, m));
  EioUniverse u;
  u.bound = bound;
  u.model = SystemModel::subset_order(std::move(ids), width);
  return u;
}

namespace {

std::string tuple_id(int bound, const std::vector<unsigned>& bits) {
  auto pair_str = [&](unsigned b) {
    return "(" + std::to_string(b / bound) + "," + std::to_string(b % bound) +
           ")";
  };
  if (bits.size() == 1) return "{" + pair_str(bits[0]) + "}";
  std::string out = "(";
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (k) out += ",";
    out += pair_str(bits[k]);
  }
  return out + ")";
}

}  // namespace

TestSetup tk_setup(const EioUniverse& u, int k, std::size_t observation_cap) {
  if (k < 1) throw ValidationError("k must be at least 1");
  const std::size_t grid = static_cast<std::size_t>(u.bound) * u.bound;
  std::size_t count = 1;
  for (int j = 0; j < k; ++j) {
    count *= grid;
    if (count > observation_cap)
      throw ObservationSpaceTooLarge("|grid|^k exceeds the observation cap");
  }

  std::vector<std::string> obs_ids;
  std::vector<std::size_t> needed;  // grid mask each tuple requires
  obs_ids.reserve(count);
  needed.reserve(count);
  std::vector<unsigned> tuple(static_cast<std::size_t>(k), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    std::size_t mask = 0;
    for (int j = k - 1; j >= 0; --j) {
      tuple[j] = static_cast<unsigned>(rest % grid);
      rest /= grid;
      mask |= std::size_t{1} << tuple[j];
    }
    obs_ids.push_back(tuple_id(u.bound, tuple));
    needed.push_back(mask);
  }

  const std::size_t n = u.model.size();
  std::vector<Bits> alpha(n, Bits(count));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < count; ++t)
      if ((needed[t] & ~s) == 0) alpha[s].set(t);

  return build_setup(u.model, "t_" + std::to_string(k), std::move(obs_ids),
                     std::move(alpha));
}

namespace {

bool mask_deterministic(int bound, std::size_t m) {
  for (int i = 0; i < bound; ++i) {
    int outs = 0;
    for (int o = 0; o < bound; ++o)
      if (m >> (i * bound + o) & 1) ++outs;
    if (outs > 1) return false;
  }
  return true;
}

bool mask_total(int bound, std::size_t m) {
  for (int i = 0; i < bound; ++i) {
    bool any = false;
    for (int o = 0; o < bound; ++o)
      if (m >> (i * bound + o) & 1) any = true;
    if (!any) return false;
  }
  return true;
}

bool mask_zigzag(int bound, std::size_t m) {
  for (int i = 0; i < bound; ++i) {
    for (int o = 0; o < bound; ++o) {
      if (!(m >> (i * bound + o) & 1)) continue;
      bool companion = false;
      for (int i2 = 0; i2 < bound; ++i2)
        if (i2 != i && (m >> (i2 * bound + o) & 1)) companion = true;
      if (!companion) return false;
    }
  }
  return true;
}

bool mask_never_zero_odd(int bound, std::size_t m) {
  for (int i = 1; i < bound; i += 2)
    if (m >> (i * bound + 0) & 1) return false;
  return true;
}

}  // namespace

std::vector<std::string> builtin_requirement_names() {
  return {"determinism", "totality", "total_function", "anonymity_zigzag",
          "never_zero_odd"};
}

Requirement builtin_requirement(const EioUniverse& u, const std::string& name) {
  bool (*pred)(int, std::size_t) = nullptr;
  if (name == "determinism") pred = mask_deterministic;
  else if (name == "totality") pred = mask_total;
  else if (name == "anonymity_zigzag") pred = mask_zigzag;
  else if (name == "never_zero_odd") pred = mask_never_zero_odd;
  else if (name == "total_function")
    return make_requirement(
        u.model, "total_function",
        builtin_requirement(u, "determinism").members &
            builtin_requirement(u, "totality").members);
  else
    throw UnknownRequirementName("no builtin requirement named " + name);

  Bits members(u.model.size());
  for (std::size_t m = 0; m < u.model.size(); ++m)
    if (pred(u.bound, m)) members.set(m);
  return make_requirement(u.model, name, std::move(members));
}

EioSystem chain_system(int j) {
  EioSystem s;
  s.pairs.emplace_back(0, 0);
  for (int i = 1; i <= j; ++i)
    s.pairs.emplace_back(i, i % 2 == 0 ? i / 2 : (i - 1) / 2);
  return s;
}

std::vector<EioSystem> chain_example(const EioUniverse& u) {
  if (u.bound < 1)
    throw BoundTooSmallForChain("grid cannot host the chain's first element");
  std::vector<EioSystem> out;
  // S_j needs input j and output floor(j/2), both below the bound.
  for (int j = 0; j < u.bound; ++j) out.push_back(chain_system(j));
  return out;
}

bool anonymity_zigzag_holds(const EioSystem& s) {
  for (const auto& [i, o] : s.pairs) {
    bool companion = false;
    for (const auto& [i2, o2] : s.pairs)
      if (o2 == o && i2 != i) companion = true;
    if (!companion) return false;
  }
  return true;
}

}  // namespace bbt
