#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadalg/io.hpp"

namespace quadalg::fuzz {

using io::json;

enum class Profile { FormCriteria, TraceForm, CompositionSplit };

std::optional<Profile> profile_from_string(const std::string& name);
std::string to_string(Profile p);

struct InstanceOutcome {
  std::size_t index = 0;
  std::string kind;      // generator class of the instance
  json verdicts;         // criterion and full-check values
  bool agrees = true;
  json instance;         // algebra document for replay
};

struct FuzzReport {
  Profile profile = Profile::FormCriteria;
  std::uint64_t seed = 0;
  std::vector<InstanceOutcome> outcomes;

  std::size_t agreements() const;
  bool passed() const { return agreements() == outcomes.size(); }
  /// The violating instances, serialized as loadable algebra documents.
  json replay() const;
  json to_json() const;
  std::string to_text() const;
};

/// Deterministic given (profile, seed, count); contains no timings.
FuzzReport run(Profile profile, std::uint64_t seed, std::size_t count);

}  // namespace quadalg::fuzz
