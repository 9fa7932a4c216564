#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "debate/framework.hpp"

namespace debate {

enum class SemanticsKind { ConflictFree, Admissible, Complete, Grounded, Preferred, Ideal };

std::string_view to_string(SemanticsKind kind);
/// Accepts the lower-case names used on the command line (`conflict-free`,
/// `admissible`, `complete`, `grounded`, `preferred`, `ideal`).
std::optional<SemanticsKind> parse_semantics(std::string_view text);

inline constexpr std::size_t kDefaultEnumerationBound = 20;

/// Brute-force extension oracles. Everything that needs the family of
/// admissible, complete or preferred sets enumerates all 2^|Args| subsets and
/// refuses frameworks above `bound` arguments with a ResourceError.
class SemanticsOracle {
 public:
  explicit SemanticsOracle(const ArgumentationFramework& af,
                           std::size_t bound = kDefaultEnumerationBound);

  const ArgumentationFramework& framework() const noexcept { return af_; }

  /// Every attacker of `a` is attacked by some member of `e`.
  bool is_acceptable(ArgId a, const Extension& e) const;
  bool is_conflict_free(const Extension& e) const;

  /// Table-1 criterion. Grounded and Ideal hold only for the unique
  /// grounded / ideal extension.
  bool satisfies(const Extension& e, SemanticsKind kind) const;

  /// Least fixpoint of the characteristic function; polynomial, no bound.
  Extension grounded_extension() const;

  /// All extensions of `kind`, sorted. Ideal yields exactly one set.
  std::vector<Extension> extensions(SemanticsKind kind) const;

  /// Grounded/Ideal: membership in the unique extension. Otherwise credulous:
  /// membership in at least one extension of the kind.
  bool accepted(ArgId a, SemanticsKind kind) const;

 private:
  using Mask = std::uint64_t;

  void require_bound() const;
  Mask to_mask(const Extension& e) const;
  Extension from_mask(Mask m) const;
  bool mask_conflict_free(Mask m) const;
  bool mask_admissible(Mask m) const;
  bool mask_complete(Mask m) const;
  Mask defended_by(Mask m) const;

  const std::vector<Mask>& admissible_masks() const;
  const std::vector<Mask>& preferred_masks() const;
  Mask ideal_mask() const;

  const ArgumentationFramework& af_;
  std::size_t bound_;
  std::vector<Mask> attackers_mask_;
  std::vector<Mask> attacks_mask_;  // arguments attacked by x
  mutable std::optional<std::vector<Mask>> admissible_;
  mutable std::optional<std::vector<Mask>> preferred_;
  mutable std::optional<Mask> ideal_;
};

// Free-function façade over a one-shot oracle.
bool is_acceptable(const ArgumentationFramework& af, ArgId a, const Extension& e);
bool satisfies(const ArgumentationFramework& af, const Extension& e, SemanticsKind kind);
Extension grounded_extension(const ArgumentationFramework& af);
std::vector<Extension> extensions(const ArgumentationFramework& af, SemanticsKind kind,
                                  std::size_t bound = kDefaultEnumerationBound);
bool accepted(const ArgumentationFramework& af, ArgId a, SemanticsKind kind,
              std::size_t bound = kDefaultEnumerationBound);

/// Set of attackers of x as an Extension.
Extension attackers(const ArgumentationFramework& af, ArgId x);

}  // namespace debate
