#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace debate {

using ArgId = std::uint32_t;
using AttackId = std::uint32_t;

inline constexpr ArgId kNoArg = std::numeric_limits<ArgId>::max();

struct Attack {
  ArgId attacker;
  ArgId target;

  friend bool operator==(const Attack&, const Attack&) = default;
};

class UnknownArgument : public std::invalid_argument {
 public:
  explicit UnknownArgument(const std::string& name)
      : std::invalid_argument("unknown argument '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Raised when an exhaustive computation would exceed a configured bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True for nonempty tokens over [A-Za-z0-9_].
bool is_valid_argument_name(std::string_view name);

/// An abstract argumentation framework <Args, Att>.
///
/// Arguments are stored in insertion order and addressed by dense ids; the
/// attack relation keeps insertion order as well. Once built, a framework is
/// never mutated by any algorithm in this library.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;

  /// Adds a new argument. Throws std::invalid_argument on a malformed or
  /// duplicate name.
  ArgId add_argument(std::string name);

  /// Adds an attack between two existing arguments. Duplicate attacks are
  /// ignored and return the id of the existing pair.
  AttackId add_attack(ArgId attacker, ArgId target);
  AttackId add_attack(std::string_view attacker, std::string_view target);

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t attack_count() const noexcept { return attacks_.size(); }

  const std::string& name(ArgId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Throws UnknownArgument.
  ArgId id(std::string_view name) const;
  bool contains(std::string_view name) const;

  const std::vector<Attack>& attacks() const noexcept { return attacks_; }
  const Attack& attack(AttackId id) const { return attacks_.at(id); }

  bool attacks(ArgId attacker, ArgId target) const {
    return attack_index_[attacker * names_.size() + target] != kNoAttack;
  }
  /// Id of the pair (attacker, target), or kNoAttack.
  AttackId attack_id(ArgId attacker, ArgId target) const {
    return attack_index_[attacker * names_.size() + target];
  }

  /// Attackers of x in insertion order of the attack relation.
  const std::vector<ArgId>& attackers_of(ArgId x) const { return attackers_.at(x); }
  /// Attack ids whose target is x, aligned with attackers_of(x).
  const std::vector<AttackId>& attacks_on(ArgId x) const { return attacks_on_.at(x); }

  /// Attackers of x sorted by argument name.
  std::vector<ArgId> attackers_by_name(ArgId x) const;
  /// All argument ids sorted by name.
  std::vector<ArgId> ids_by_name() const;

  static constexpr AttackId kNoAttack = std::numeric_limits<AttackId>::max();

  friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
    return a.names_ == b.names_ && a.attacks_ == b.attacks_;
  }

 private:
  void grow_index(std::size_t old_n);

  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgId> by_name_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<ArgId>> attackers_;
  std::vector<std::vector<AttackId>> attacks_on_;
  std::vector<AttackId> attack_index_;  // n*n, row = attacker
};

/// A set of arguments, kept sorted by id.
class Extension {
 public:
  Extension() = default;
  explicit Extension(std::vector<ArgId> members);

  static Extension from_names(const ArgumentationFramework& af,
                              const std::vector<std::string>& names);

  const std::vector<ArgId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(ArgId a) const;
  bool is_subset_of(const Extension& other) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend auto operator<=>(const Extension&, const Extension&) = default;

 private:
  std::vector<ArgId> members_;
};

/// `{a, b, c}` with members sorted by name.
std::string format_extension(const ArgumentationFramework& af, const Extension& e);

/// `{{a, b}, {c}}`; extensions sorted by their formatted member lists.
std::string format_extensions(const ArgumentationFramework& af,
                              const std::vector<Extension>& family);

}  // namespace debate
