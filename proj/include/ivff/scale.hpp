#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ivff/core.hpp"

namespace ivff {

/// Record of a non-strict label fixup (e.g. a stray digit suffix).
struct LabelRepair {
  std::string original;
  std::string resolved;
};

/// Ordered map from linguistic judgment labels to values. Lookup is
/// case-insensitive and whitespace-trimming.
class LinguisticScale {
 public:
  static LinguisticScale from_entries(
      std::vector<std::pair<std::string, Ivffn>> entries);

  /// Strict lookup; throws UnknownLabel.
  const Ivffn& lookup(const std::string& label) const;

  /// Non-strict lookup: unknown labels are retried with trailing digits
  /// stripped; a successful retry is reported through `repair`.
  const Ivffn& lookup_repairing(const std::string& label,
                                std::optional<LabelRepair>& repair) const;

  const std::vector<std::pair<std::string, Ivffn>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<std::pair<std::string, Ivffn>> entries_;
  std::unordered_map<std::string, std::size_t> index_;  // by normalized label
};

/// Normalized form used for lookups: trimmed and uppercased.
std::string normalize_label(const std::string& label);

/// The built-in nine-level scale, from "certainly high" down to "certainly
/// low" importance. Referenced in problem files as "ivff-9".
const LinguisticScale& builtin_scale();

inline constexpr const char* kBuiltinScaleName = "ivff-9";

}  // namespace ivff
