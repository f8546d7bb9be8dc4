#include "ivff/scale.hpp"

#include <cctype>

namespace ivff {

std::string normalize_label(const std::string& label) {
  std::size_t begin = 0;
  std::size_t end = label.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(label[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(label[end - 1]))) --end;
  std::string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(label[i]))));
  }
  return out;
}

LinguisticScale LinguisticScale::from_entries(
    std::vector<std::pair<std::string, Ivffn>> entries) {
  LinguisticScale scale;
  for (auto& [label, value] : entries) {
    const std::string key = normalize_label(label);
    if (key.empty()) {
      throw Error(ErrorKind::UnknownLabel, "empty scale label");
    }
    if (scale.index_.contains(key)) {
      throw Error(ErrorKind::UnknownLabel, "duplicate scale label '" + label + "'");
    }
    scale.index_.emplace(key, scale.entries_.size());
    scale.entries_.emplace_back(std::move(label), value);
  }
  return scale;
}

const Ivffn& LinguisticScale::lookup(const std::string& label) const {
  const std::string key = normalize_label(label);
  auto it = index_.find(key);
  if (it == index_.end()) {
    throw Error(ErrorKind::UnknownLabel, "label '" + label + "' not in scale");
  }
  return entries_[it->second].second;
}

const Ivffn& LinguisticScale::lookup_repairing(
    const std::string& label, std::optional<LabelRepair>& repair) const {
  repair.reset();
  const std::string key = normalize_label(label);
  auto it = index_.find(key);
  if (it != index_.end()) return entries_[it->second].second;

  // Retry with trailing digits stripped; covers stray numeric suffixes.
  std::string stripped = key;
  while (!stripped.empty() && std::isdigit(static_cast<unsigned char>(stripped.back()))) {
    stripped.pop_back();
  }
  if (stripped != key && !stripped.empty()) {
    auto it2 = index_.find(stripped);
    if (it2 != index_.end()) {
      repair = LabelRepair{label, entries_[it2->second].first};
      return entries_[it2->second].second;
    }
  }
  throw Error(ErrorKind::UnknownLabel, "label '" + label + "' not in scale");
}

const LinguisticScale& builtin_scale() {
  static const LinguisticScale scale = LinguisticScale::from_entries({
      {"CH", Ivffn::make(0.95, 1.0, 0.0, 0.0)},
      {"VH", Ivffn::make(0.8, 0.9, 0.1, 0.2)},
      {"H", Ivffn::make(0.7, 0.8, 0.2, 0.3)},
      {"SM", Ivffn::make(0.6, 0.65, 0.35, 0.4)},
      {"E", Ivffn::make(0.5, 0.5, 0.5, 0.5)},
      {"SL", Ivffn::make(0.35, 0.4, 0.6, 0.65)},
      {"L", Ivffn::make(0.2, 0.3, 0.7, 0.8)},
      {"VL", Ivffn::make(0.1, 0.2, 0.8, 0.9)},
      {"CL", Ivffn::make(0.0, 0.0, 0.95, 1.0)},
  });
  return scale;
}

}  // namespace ivff
