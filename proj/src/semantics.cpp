#include "debate/semantics.hpp"

#include <algorithm>
#include <bit>

namespace debate {

std::string_view to_string(SemanticsKind kind) {
  switch (kind) {
    case SemanticsKind::ConflictFree: return "conflict-free";
    case SemanticsKind::Admissible: return "admissible";
    case SemanticsKind::Complete: return "complete";
    case SemanticsKind::Grounded: return "grounded";
    case SemanticsKind::Preferred: return "preferred";
    case SemanticsKind::Ideal: return "ideal";
  }
  return "?";
}

std::optional<SemanticsKind> parse_semantics(std::string_view text) {
  for (auto k : {SemanticsKind::ConflictFree, SemanticsKind::Admissible, SemanticsKind::Complete,
                 SemanticsKind::Grounded, SemanticsKind::Preferred, SemanticsKind::Ideal}) {
    if (text == to_string(k)) return k;
  }
  if (text == "cf") return SemanticsKind::ConflictFree;
  return std::nullopt;
}

SemanticsOracle::SemanticsOracle(const ArgumentationFramework& af, std::size_t bound)
    : af_(af), bound_(std::min<std::size_t>(bound, 62)) {
  if (af.size() <= 64) {
    attackers_mask_.assign(af.size(), 0);
    attacks_mask_.assign(af.size(), 0);
    for (const auto& at : af.attacks()) {
      attackers_mask_[at.target] |= Mask{1} << at.attacker;
      attacks_mask_[at.attacker] |= Mask{1} << at.target;
    }
  }
}

void SemanticsOracle::require_bound() const {
  if (af_.size() > bound_) {
    throw ResourceError("exhaustive enumeration needs at most " + std::to_string(bound_) +
                        " arguments, framework has " + std::to_string(af_.size()));
  }
}

bool SemanticsOracle::is_acceptable(ArgId a, const Extension& e) const {
  for (ArgId b : af_.attackers_of(a)) {
    bool countered = false;
    for (ArgId c : e) {
      if (af_.attacks(c, b)) {
        countered = true;
        break;
      }
    }
    if (!countered) return false;
  }
  return true;
}

bool SemanticsOracle::is_conflict_free(const Extension& e) const {
  for (ArgId x : e) {
    for (ArgId y : e) {
      if (af_.attacks(x, y)) return false;
    }
  }
  return true;
}

Extension SemanticsOracle::grounded_extension() const {
  const std::size_t n = af_.size();
  std::vector<bool> in(n, false);
  std::vector<ArgId> members;
  bool changed = true;
  while (changed) {
    changed = false;
    Extension current(members);
    for (ArgId a = 0; a < n; ++a) {
      if (!in[a] && is_acceptable(a, current)) {
        in[a] = true;
        members.push_back(a);
        changed = true;
      }
    }
  }
  return Extension(std::move(members));
}

SemanticsOracle::Mask SemanticsOracle::to_mask(const Extension& e) const {
  Mask m = 0;
  for (ArgId a : e) m |= Mask{1} << a;
  return m;
}

Extension SemanticsOracle::from_mask(Mask m) const {
  std::vector<ArgId> ids;
  while (m) {
    ids.push_back(static_cast<ArgId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return Extension(std::move(ids));
}

bool SemanticsOracle::mask_conflict_free(Mask m) const {
  for (Mask r = m; r; r &= r - 1) {
    if (attacks_mask_[std::countr_zero(r)] & m) return false;
  }
  return true;
}

SemanticsOracle::Mask SemanticsOracle::defended_by(Mask m) const {
  Mask attacked_by_m = 0;
  for (Mask r = m; r; r &= r - 1) attacked_by_m |= attacks_mask_[std::countr_zero(r)];
  Mask out = 0;
  for (std::size_t a = 0; a < af_.size(); ++a) {
    if ((attackers_mask_[a] & ~attacked_by_m) == 0) out |= Mask{1} << a;
  }
  return out;
}

bool SemanticsOracle::mask_admissible(Mask m) const {
  return mask_conflict_free(m) && (m & ~defended_by(m)) == 0;
}

bool SemanticsOracle::mask_complete(Mask m) const {
  return mask_conflict_free(m) && defended_by(m) == m;
}

const std::vector<SemanticsOracle::Mask>& SemanticsOracle::admissible_masks() const {
  if (!admissible_) {
    require_bound();
    std::vector<Mask> out;
    const Mask limit = Mask{1} << af_.size();
    for (Mask m = 0; m < limit; ++m) {
      if (mask_admissible(m)) out.push_back(m);
    }
    admissible_ = std::move(out);
  }
  return *admissible_;
}

const std::vector<SemanticsOracle::Mask>& SemanticsOracle::preferred_masks() const {
  if (!preferred_) {
    std::vector<Mask> by_size = admissible_masks();
    std::stable_sort(by_size.begin(), by_size.end(), [](Mask a, Mask b) {
      return std::popcount(a) > std::popcount(b);
    });
    // Any admissible superset lies inside a larger preferred set seen earlier.
    std::vector<Mask> out;
    for (Mask m : by_size) {
      bool covered = std::any_of(out.begin(), out.end(), [m](Mask p) { return (m & ~p) == 0; });
      if (!covered) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    preferred_ = std::move(out);
  }
  return *preferred_;
}

SemanticsOracle::Mask SemanticsOracle::ideal_mask() const {
  if (!ideal_) {
    Mask common = ~Mask{0};
    for (Mask p : preferred_masks()) common &= p;
    // Admissible subsets of the intersection are pairwise compatible, so
    // their union is the unique maximal one.
    Mask ideal = 0;
    for (Mask m : admissible_masks()) {
      if ((m & ~common) == 0) ideal |= m;
    }
    ideal_ = ideal;
  }
  return *ideal_;
}

bool SemanticsOracle::satisfies(const Extension& e, SemanticsKind kind) const {
  switch (kind) {
    case SemanticsKind::ConflictFree:
      return is_conflict_free(e);
    case SemanticsKind::Admissible:
      if (!is_conflict_free(e)) return false;
      return std::all_of(e.begin(), e.end(), [&](ArgId a) { return is_acceptable(a, e); });
    case SemanticsKind::Complete: {
      if (!satisfies(e, SemanticsKind::Admissible)) return false;
      for (ArgId a = 0; a < af_.size(); ++a) {
        if (!e.contains(a) && is_acceptable(a, e)) return false;
      }
      return true;
    }
    case SemanticsKind::Grounded:
      return e == grounded_extension();
    case SemanticsKind::Preferred: {
      if (!satisfies(e, SemanticsKind::Admissible)) return false;
      const Mask m = to_mask(e);
      const auto& pref = preferred_masks();
      return std::find(pref.begin(), pref.end(), m) != pref.end();
    }
    case SemanticsKind::Ideal:
      require_bound();
      return to_mask(e) == ideal_mask();
  }
  return false;
}

std::vector<Extension> SemanticsOracle::extensions(SemanticsKind kind) const {
  require_bound();
  std::vector<Extension> out;
  switch (kind) {
    case SemanticsKind::ConflictFree: {
      const Mask limit = Mask{1} << af_.size();
      for (Mask m = 0; m < limit; ++m) {
        if (mask_conflict_free(m)) out.push_back(from_mask(m));
      }
      break;
    }
    case SemanticsKind::Admissible:
      for (Mask m : admissible_masks()) out.push_back(from_mask(m));
      break;
    case SemanticsKind::Complete:
      for (Mask m : admissible_masks()) {
        if (mask_complete(m)) out.push_back(from_mask(m));
      }
      break;
    case SemanticsKind::Grounded:
      out.push_back(grounded_extension());
      break;
    case SemanticsKind::Preferred:
      for (Mask m : preferred_masks()) out.push_back(from_mask(m));
      break;
    case SemanticsKind::Ideal:
      out.push_back(from_mask(ideal_mask()));
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SemanticsOracle::accepted(ArgId a, SemanticsKind kind) const {
  if (a >= af_.size()) throw std::out_of_range("argument id outside the framework");
  const Mask bit = Mask{1} << a;
  switch (kind) {
    case SemanticsKind::Grounded:
      return grounded_extension().contains(a);
    case SemanticsKind::Ideal:
      require_bound();
      return (ideal_mask() & bit) != 0;
    case SemanticsKind::ConflictFree:
      return !af_.attacks(a, a);
    case SemanticsKind::Admissible:
    case SemanticsKind::Complete:
    case SemanticsKind::Preferred: {
      // Every admissible set lies in a complete and a preferred one.
      const auto& adm = admissible_masks();
      return std::any_of(adm.begin(), adm.end(), [bit](Mask m) { return (m & bit) != 0; });
    }
  }
  return false;
}

bool is_acceptable(const ArgumentationFramework& af, ArgId a, const Extension& e) {
  return SemanticsOracle(af).is_acceptable(a, e);
}

bool satisfies(const ArgumentationFramework& af, const Extension& e, SemanticsKind kind) {
  return SemanticsOracle(af).satisfies(e, kind);
}

Extension grounded_extension(const ArgumentationFramework& af) {
  return SemanticsOracle(af).grounded_extension();
}

std::vector<Extension> extensions(const ArgumentationFramework& af, SemanticsKind kind,
                                  std::size_t bound) {
  return SemanticsOracle(af, bound).extensions(kind);
}

bool accepted(const ArgumentationFramework& af, ArgId a, SemanticsKind kind, std::size_t bound) {
  return SemanticsOracle(af, bound).accepted(a, kind);
}

Extension attackers(const ArgumentationFramework& af, ArgId x) {
  if (x >= af.size()) throw std::out_of_range("argument id outside the framework");
  return Extension(af.attackers_of(x));
}

}  // namespace debate
