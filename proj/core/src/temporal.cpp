#include "bbt/temporal.hpp"

#include <algorithm>

namespace bbt {

namespace {

// Smallest period of `s`: the shortest p with s = s[0..p)^(|s|/p).
std::size_t primitive_period(const std::string& s) {
  for (std::size_t p = 1; p <= s.size(); ++p) {
    if (s.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < s.size() && ok; ++i)
      if (s[i] != s[i - p]) ok = false;
    if (ok) return p;
  }
  return s.size();
}

}  // namespace

LassoWord LassoWord::make(std::string stem, std::string loop) {
  if (loop.empty()) throw ValidationError("lasso loop must be nonempty");
  loop.resize(primitive_period(loop));
  // Absorb trailing stem letters that match the rotated loop: x.(vy)^w
  // equals (yv)^w-shifted, so a stem ending in the loop's last letter is
  // not minimal.
  while (!stem.empty() && stem.back() == loop.back()) {
    stem.pop_back();
    loop = std::string(1, loop.back()) + loop.substr(0, loop.size() - 1);
  }
  return LassoWord(std::move(stem), std::move(loop));
}

std::string LassoWord::unroll(std::size_t len) const {
  std::string out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (i < stem_.size())
      out += stem_[i];
    else
      out += loop_[(i - stem_.size()) % loop_.size()];
  }
  return out;
}

std::set<std::string> prefixes(const LassoWord& w, std::size_t depth) {
  std::set<std::string> out;
  const std::string full = w.unroll(depth);
  for (std::size_t len = 0; len <= full.size(); ++len)
    out.insert(full.substr(0, len));
  return out;
}

std::vector<std::string> words_up_to(const std::string& alphabet,
                                     std::size_t depth) {
  std::vector<std::string> out{""};
  std::size_t level_begin = 0;
  for (std::size_t d = 1; d <= depth; ++d) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    level_begin = level_end;
  }
  return out;
}

std::size_t TemporalUniverse::behavior_index(const std::string& id) const {
  for (std::size_t i = 0; i < behaviors.size(); ++i)
    if (behaviors[i].id() == id) return i;
  throw UnknownElement("unknown behavior: " + id);
}

Bits TemporalUniverse::extenders(const std::string& sigma) const {
  Bits out(behaviors.size());
  for (std::size_t i = 0; i < behaviors.size(); ++i)
    if (behaviors[i].unroll(sigma.size()) == sigma) out.set(i);
  return out;
}

std::string TemporalUniverse::label() const {
  return "temporal(alphabet=" + alphabet +
         ",stem=" + std::to_string(stem_bound) +
         ",loop=" + std::to_string(loop_bound) +
         ",depth=" + std::to_string(prefix_depth) + ")";
}

namespace {

std::string behavior_set_id(const TemporalUniverse& u, std::size_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < u.behaviors.size(); ++i) {
    if (mask >> i & 1) {
      if (!first) out += ",";
      out += u.behaviors[i].id();
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

TemporalUniverse build_temporal_universe(std::string alphabet,
                                         std::size_t stem_bound,
                                         std::size_t loop_bound,
                                         std::size_t prefix_depth,
                                         std::size_t behavior_cap) {
  if (alphabet.empty()) throw ValidationError("alphabet must be nonempty");
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()),
                 alphabet.end());
  if (stem_bound < 1 || loop_bound < 1)
    throw ValidationError("stem and loop bounds must be at least 1");

  std::set<LassoWord> canonical;
  for (const auto& stem : words_up_to(alphabet, stem_bound)) {
    for (const auto& loop : words_up_to(alphabet, loop_bound)) {
      if (loop.empty()) continue;
      canonical.insert(LassoWord::make(stem, loop));
    }
  }
  if (canonical.size() > behavior_cap)
    throw UniverseTooLarge("universe has " +
                           std::to_string(canonical.size()) +
                           " behaviors, above the cap of " +
                           std::to_string(behavior_cap));

  TemporalUniverse u;
  u.alphabet = std::move(alphabet);
  u.stem_bound = stem_bound;
  u.loop_bound = loop_bound;
  u.prefix_depth = prefix_depth;
  u.behaviors.assign(canonical.begin(), canonical.end());
  std::sort(u.behaviors.begin(), u.behaviors.end(),
            [](const LassoWord& a, const LassoWord& b) {
              return a.id() < b.id();
            });

  const unsigned width = static_cast<unsigned>(u.behaviors.size());
  std::vector<std::string> ids;
  ids.reserve(std::size_t{1} << width);
  for (std::size_t m = 0; m < (std::size_t{1} << width); ++m)
    ids.push_back(behavior_set_id(u, m));
  u.model = SystemModel::subset_order(std::move(ids), width);
  return u;
}

TemporalProperty make_property(const TemporalUniverse& u, std::string name,
                               const std::vector<std::string>& behavior_ids) {
  Bits members(u.behaviors.size());
  for (const auto& id : behavior_ids) members.set(u.behavior_index(id));
  return TemporalProperty{std::move(name), std::move(members)};
}

TemporalProperty make_property(const TemporalUniverse& u, std::string name,
                               Bits members) {
  if (members.size() != u.behaviors.size())
    throw ModelMismatch("property bitset does not match the universe");
  return TemporalProperty{std::move(name), std::move(members)};
}

namespace {

std::string word_or_epsilon(const std::string& w) {
  return w.empty() ? "\xce\xb5" : w;  // epsilon
}

std::string obs_id(const std::vector<std::string>& words,
                   const std::vector<std::size_t>& subset) {
  std::string out = "{";
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (k) out += ",";
    out += word_or_epsilon(words[subset[k]]);
  }
  return out + "}";
}

}  // namespace

TestSetup tstar_setup(const TemporalUniverse& u, std::size_t set_cap) {
  const std::vector<std::string> words =
      words_up_to(u.alphabet, u.prefix_depth);
  const std::size_t w = words.size();
  if (w > 64) throw ObservationSpaceTooLarge("too many words for T_*");

  // Per element: which words are prefixes of one of its behaviors.
  const std::size_t n = u.model.size();
  std::vector<std::uint64_t> behavior_words(u.behaviors.size(), 0);
  for (std::size_t b = 0; b < u.behaviors.size(); ++b)
    for (std::size_t k = 0; k < w; ++k)
      if (u.behaviors[b].unroll(words[k].size()) == words[k])
        behavior_words[b] |= std::uint64_t{1} << k;
  std::vector<std::uint64_t> element_words(n, 0);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t b = 0; b < u.behaviors.size(); ++b)
      if (m >> b & 1) element_words[m] |= behavior_words[b];

  // All subsets of the word list up to the cardinality cap.
  std::vector<std::string> obs_ids;
  std::vector<std::uint64_t> obs_words;
  std::vector<std::size_t> subset;
  auto emit = [&]() {
    std::uint64_t mask = 0;
    for (std::size_t k : subset) mask |= std::uint64_t{1} << k;
    obs_ids.push_back(obs_id(words, subset));
    obs_words.push_back(mask);
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    emit();
    if (subset.size() == set_cap) return;
    for (std::size_t k = start; k < w; ++k) {
      subset.push_back(k);
      self(self, k + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0);
  if (obs_ids.size() > (std::size_t{1} << 16))
    throw ObservationSpaceTooLarge("T_* observation domain exceeds the cap");

  const std::size_t t = obs_ids.size();
  std::vector<Bits> alpha(n, Bits(t));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t o = 0; o < t; ++o)
      if ((obs_words[o] & ~element_words[m]) == 0) alpha[m].set(o);

  return build_setup(u.model, "t_star", std::move(obs_ids), std::move(alpha));
}

SafetyCertificate is_safety(const TemporalUniverse& u,
                            const TemporalProperty& phi) {
  SafetyCertificate cert;
  cert.holds = true;
  for (std::size_t b = 0; b < u.behaviors.size(); ++b) {
    if (phi.members.test(b)) continue;
    bool found = false;
    // Shortest bad prefix first, for deterministic certificates.
    for (std::size_t len = 0; len <= u.prefix_depth && !found; ++len) {
      const std::string sigma = u.behaviors[b].unroll(len);
      if (!u.extenders(sigma).intersects(phi.members)) {
        cert.bad_prefixes.emplace(u.behaviors[b].id(), word_or_epsilon(sigma));
        found = true;
      }
    }
    if (!found) {
      cert.undetectable.push_back(u.behaviors[b].id());
      cert.holds = false;
    }
  }
  return cert;
}

LivenessCertificate is_liveness(const TemporalUniverse& u,
                                const TemporalProperty& phi) {
  LivenessCertificate cert;
  cert.holds = true;
  for (const auto& sigma : words_up_to(u.alphabet, u.prefix_depth)) {
    const Bits ext = u.extenders(sigma);
    if (ext.none()) continue;  // not a prefix of any universe behavior
    if (!ext.intersects(phi.members)) {
      cert.holds = false;
      cert.stuck_prefix = word_or_epsilon(sigma);
      return cert;
    }
  }
  return cert;
}

std::pair<TemporalProperty, TemporalProperty> decompose(
    const TemporalUniverse& u, const TemporalProperty& phi) {
  // Closure: behaviors all of whose prefixes still extend into phi.
  Bits safe(u.behaviors.size());
  for (std::size_t b = 0; b < u.behaviors.size(); ++b) {
    bool closed = true;
    for (std::size_t len = 0; len <= u.prefix_depth && closed; ++len) {
      const std::string sigma = u.behaviors[b].unroll(len);
      if (!u.extenders(sigma).intersects(phi.members)) closed = false;
    }
    if (closed) safe.set(b);
  }
  Bits live = phi.members | ~safe;
  return {TemporalProperty{phi.name + "_safe", std::move(safe)},
          TemporalProperty{phi.name + "_live", std::move(live)}};
}

Requirement property_requirement(const TemporalUniverse& u,
                                 const TemporalProperty& phi) {
  std::uint64_t phi_mask = 0;
  for (std::size_t b = phi.members.find_first(); b != Bits::npos;
       b = phi.members.find_next(b))
    phi_mask |= std::uint64_t{1} << b;
  Bits members(u.model.size());
  for (std::size_t m = 0; m < u.model.size(); ++m)
    if ((m & ~phi_mask) == 0) members.set(m);
  return make_requirement(u.model, "R_" + phi.name, std::move(members));
}

bool is_hyper_safety(const TemporalUniverse& u, const Requirement& r,
                     std::size_t set_cap) {
  return is_refutable(u.model, tstar_setup(u, set_cap), r).holds;
}

std::set<std::string> nabla(const TemporalUniverse& u,
                            const TemporalProperty& phi) {
  std::set<std::string> out;
  for (const auto& sigma : words_up_to(u.alphabet, u.prefix_depth))
    if (!u.extenders(sigma).intersects(phi.members))
      out.insert(word_or_epsilon(sigma));
  return out;
}

}  // namespace bbt
