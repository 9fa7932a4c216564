#include "debate/framework.hpp"

#include <algorithm>

namespace debate {

bool is_valid_argument_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

ArgId ArgumentationFramework::add_argument(std::string name) {
  if (!is_valid_argument_name(name)) {
    throw std::invalid_argument("malformed argument name '" + name + "'");
  }
  if (by_name_.count(name) != 0) {
    throw std::invalid_argument("duplicate argument '" + name + "'");
  }
  const auto id = static_cast<ArgId>(names_.size());
  const std::size_t old_n = names_.size();
  by_name_.emplace(name, id);
  names_.push_back(std::move(name));
  attackers_.emplace_back();
  attacks_on_.emplace_back();
  grow_index(old_n);
  return id;
}

void ArgumentationFramework::grow_index(std::size_t old_n) {
  const std::size_t n = names_.size();
  std::vector<AttackId> index(n * n, kNoAttack);
  for (std::size_t x = 0; x < old_n; ++x) {
    for (std::size_t y = 0; y < old_n; ++y) {
      index[x * n + y] = attack_index_[x * old_n + y];
    }
  }
  attack_index_ = std::move(index);
}

AttackId ArgumentationFramework::add_attack(ArgId attacker, ArgId target) {
  if (attacker >= size() || target >= size()) {
    throw std::out_of_range("attack references an argument outside the framework");
  }
  AttackId& slot = attack_index_[attacker * size() + target];
  if (slot != kNoAttack) return slot;
  slot = static_cast<AttackId>(attacks_.size());
  attacks_.push_back({attacker, target});
  attackers_[target].push_back(attacker);
  attacks_on_[target].push_back(slot);
  return slot;
}

AttackId ArgumentationFramework::add_attack(std::string_view attacker, std::string_view target) {
  return add_attack(id(attacker), id(target));
}

ArgId ArgumentationFramework::id(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) throw UnknownArgument(std::string(name));
  return it->second;
}

bool ArgumentationFramework::contains(std::string_view name) const {
  return by_name_.count(std::string(name)) != 0;
}

std::vector<ArgId> ArgumentationFramework::attackers_by_name(ArgId x) const {
  std::vector<ArgId> out = attackers_.at(x);
  std::sort(out.begin(), out.end(), [&](ArgId a, ArgId b) { return names_[a] < names_[b]; });
  return out;
}

std::vector<ArgId> ArgumentationFramework::ids_by_name() const {
  std::vector<ArgId> out(size());
  for (ArgId i = 0; i < out.size(); ++i) out[i] = i;
  std::sort(out.begin(), out.end(), [&](ArgId a, ArgId b) { return names_[a] < names_[b]; });
  return out;
}

Extension::Extension(std::vector<ArgId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Extension Extension::from_names(const ArgumentationFramework& af,
                                const std::vector<std::string>& names) {
  std::vector<ArgId> ids;
  ids.reserve(names.size());
  for (const auto& n : names) ids.push_back(af.id(n));
  return Extension(std::move(ids));
}

bool Extension::contains(ArgId a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool Extension::is_subset_of(const Extension& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

namespace {

std::vector<std::string> sorted_names(const ArgumentationFramework& af, const Extension& e) {
  std::vector<std::string> names;
  names.reserve(e.size());
  for (ArgId a : e) names.push_back(af.name(a));
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

std::string format_extension(const ArgumentationFramework& af, const Extension& e) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : sorted_names(af, e)) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  out += "}";
  return out;
}

std::string format_extensions(const ArgumentationFramework& af,
                              const std::vector<Extension>& family) {
  std::vector<std::vector<std::string>> keyed;
  keyed.reserve(family.size());
  for (const auto& e : family) keyed.push_back(sorted_names(af, e));
  std::sort(keyed.begin(), keyed.end());
  std::string out = "{";
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i) out += ", ";
    out += "{";
    for (std::size_t j = 0; j < keyed[i].size(); ++j) {
      if (j) out += ", ";
      out += keyed[i][j];
    }
    out += "}";
  }
  out += "}";
  return out;
}

}  // namespace debate
