#pragma once

#include <compare>
#include <string>

#include "rsos/entity.hpp"

namespace rsos {

/// Transition label <W |> R, I, P>.
struct Label {
  EntitySet w;  ///< entities available in the system
  EntitySet r;  ///< entities whose presence is assumed
  EntitySet i;  ///< entities whose absence is assumed
  EntitySet p;  ///< products

  std::size_t hash() const {
    return hash_combine(hash_combine(w.hash(), r.hash()), hash_combine(i.hash(), p.hash()));
  }
  bool operator==(const Label&) const = default;
  std::strong_ordering operator<=>(const Label&) const = default;
};

/// (R', I') ⊑ (R, I): componentwise inclusion on the assumption sets.
inline bool dominated_by(const Label& lower, const Label& upper) {
  return lower.r.subset_of(upper.r) && lower.i.subset_of(upper.i);
}

/// (W ∪ R) ∩ I = ∅.
inline bool is_consistent(const Label& l) { return !(l.w | l.r).intersects(l.i); }

/// "a,b |> a,b ; c ; b", empty sets as "-".
std::string to_string(const Label& label, const Universe& universe);

}  // namespace rsos

template <>
struct std::hash<rsos::Label> {
  std::size_t operator()(const rsos::Label& l) const noexcept { return l.hash(); }
};
