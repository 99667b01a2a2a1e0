#pragma once

#include <map>
#include <string>
#include <variant>

#include "bbt/eio.hpp"
#include "bbt/temporal.hpp"
#include "bbt/testsetup.hpp"

namespace bbt {

/// A parsed workbench file: model plus named requirements, setups,
/// assumptions and (for temporal universes) properties. Builtin
/// universes are referenced by name and parameters in the file and
/// regenerated on load; powerset universes are never serialized
/// element by element.
struct Workbench {
  std::variant<SystemModel, EioUniverse, TemporalUniverse> universe;
  std::map<std::string, Requirement> requirements;
  std::map<std::string, TestSetup> setups;
  std::map<std::string, Requirement> assumptions;
  std::map<std::string, TemporalProperty> properties;
  std::string universe_label;

  const SystemModel& model() const;
  const EioUniverse* eio() const;
  const TemporalUniverse* temporal() const;

  const Requirement& requirement(const std::string& name) const;
  const TestSetup& setup(const std::string& name) const;
  const Requirement& assumption(const std::string& name) const;
  const TemporalProperty& property(const std::string& name) const;
};

/// Parses and validates a workbench file. Throws ParseError for
/// malformed JSON (with position) and ValidationError for files whose
/// contents do not build (unknown references, non-monotone alpha, ...).
Workbench parse_file(const std::string& path);
Workbench parse_text(const std::string& text);

/// Serialized form of a generated EIO workbench (builtin model
/// reference, builtin requirements and the T_1/reflexive setups).
std::string render_eio_workbench(int bound, int k_max = 2);

/// Serialized form of a generated temporal workbench with a few named
/// properties (all behaviors, empty, and one single-behavior property).
std::string render_temporal_workbench(const std::string& alphabet,
                                      std::size_t stem_bound,
                                      std::size_t loop_bound,
                                      std::size_t prefix_depth);

}  // namespace bbt
