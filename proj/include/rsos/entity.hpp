#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rsos {

using EntityId = std::uint32_t;

/// The finite universe S of a specification. Ids are assigned in
/// declaration order and are only meaningful relative to one universe.
class Universe {
 public:
  Universe() = default;
  Universe(std::initializer_list<std::string_view> names);

  /// Adds a name; returns the existing id if already declared.
  EntityId add(std::string_view name);
  std::optional<EntityId> find(std::string_view name) const;
  /// Throws std::out_of_range for unknown names.
  EntityId id(std::string_view name) const;
  const std::string& name(EntityId id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const Universe& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, EntityId> index_;
};

/// Finite set of entities, stored as a bitset over universe ids. Trailing
/// zero words are trimmed so that equal sets have equal representations.
class EntitySet {
 public:
  EntitySet() = default;
  EntitySet(std::initializer_list<EntityId> ids);

  static EntitySet from_ids(const std::vector<EntityId>& ids);

  bool empty() const { return words_.empty(); }
  std::size_t size() const;
  bool contains(EntityId id) const;
  void insert(EntityId id);
  void erase(EntityId id);

  bool subset_of(const EntitySet& other) const;
  bool intersects(const EntitySet& other) const;

  EntitySet operator|(const EntitySet& other) const;
  EntitySet operator&(const EntitySet& other) const;
  EntitySet operator-(const EntitySet& other) const;
  EntitySet& operator|=(const EntitySet& other);

  /// Ascending ids.
  std::vector<EntityId> ids() const;

  /// Calls fn for every subset of this set, including the empty set and the
  /// set itself.
  template <class Fn>
  void for_each_subset(Fn&& fn) const {
    const auto members = ids();
    const std::size_t n = members.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      EntitySet subset;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (std::uint64_t{1} << k)) subset.insert(members[k]);
      }
      fn(subset);
    }
  }

  std::size_t hash() const;

  bool operator==(const EntitySet& other) const = default;
  /// Lexicographic on the ascending id sequence.
  std::strong_ordering operator<=>(const EntitySet& other) const;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

/// Sorted-by-name comma list, e.g. "a,b". Empty sets render as `empty`.
std::string join_names(const EntitySet& set, const Universe& universe,
                       std::string_view empty = "");

/// "{a,b}" form used by contexts and states.
std::string brace_set(const EntitySet& set, const Universe& universe);

/// "[a,b]" form used by reactions.
std::string bracket_set(const EntitySet& set, const Universe& universe);

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace rsos

template <>
struct std::hash<rsos::EntitySet> {
  std::size_t operator()(const rsos::EntitySet& s) const noexcept { return s.hash(); }
};
