#include "rsos/entity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rsos {

Universe::Universe(std::initializer_list<std::string_view> names) {
  for (auto n : names) add(n);
}

EntityId Universe::add(std::string_view name) {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  const auto id = static_cast<EntityId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(std::string(name), id);
  return id;
}

std::optional<EntityId> Universe::find(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

EntityId Universe::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw std::out_of_range("unknown entity '" + std::string(name) + "'");
}

EntitySet::EntitySet(std::initializer_list<EntityId> ids) {
  for (auto id : ids) insert(id);
}

EntitySet EntitySet::from_ids(const std::vector<EntityId>& ids) {
  EntitySet s;
  for (auto id : ids) s.insert(id);
  return s;
}

std::size_t EntitySet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool EntitySet::contains(EntityId id) const {
  const std::size_t word = id / 64;
  return word < words_.size() && (words_[word] >> (id % 64)) & 1U;
}

void EntitySet::insert(EntityId id) {
  const std::size_t word = id / 64;
  if (word >= words_.size()) words_.resize(word + 1, 0);
  words_[word] |= std::uint64_t{1} << (id % 64);
}

void EntitySet::erase(EntityId id) {
  const std::size_t word = id / 64;
  if (word >= words_.size()) return;
  words_[word] &= ~(std::uint64_t{1} << (id % 64));
  trim();
}

bool EntitySet::subset_of(const EntitySet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & ~other.words_[k]) return false;
  }
  return true;
}

bool EntitySet::intersects(const EntitySet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (words_[k] & other.words_[k]) return true;
  }
  return false;
}

EntitySet EntitySet::operator|(const EntitySet& other) const {
  EntitySet out = *this;
  out |= other;
  return out;
}

EntitySet& EntitySet::operator|=(const EntitySet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t k = 0; k < other.words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

EntitySet EntitySet::operator&(const EntitySet& other) const {
  EntitySet out;
  const std::size_t n = std::min(words_.size(), other.words_.size());
  out.words_.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.words_[k] = words_[k] & other.words_[k];
  out.trim();
  return out;
}

EntitySet EntitySet::operator-(const EntitySet& other) const {
  EntitySet out = *this;
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t k = 0; k < n; ++k) out.words_[k] &= ~other.words_[k];
  out.trim();
  return out;
}

std::vector<EntityId> EntitySet::ids() const {
  std::vector<EntityId> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<EntityId>(k * 64 + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t EntitySet::hash() const {
  std::size_t h = 0x51ed270b;
  for (auto w : words_) h = hash_combine(h, std::hash<std::uint64_t>{}(w));
  return h;
}

std::strong_ordering EntitySet::operator<=>(const EntitySet& other) const {
  const auto a = ids();
  const auto b = other.ids();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

void EntitySet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::string join_names(const EntitySet& set, const Universe& universe, std::string_view empty) {
  if (set.empty()) return std::string(empty);
  std::vector<std::string> names;
  for (auto id : set.ids()) names.push_back(universe.name(id));
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k) out += ',';
    out += names[k];
  }
  return out;
}

std::string brace_set(const EntitySet& set, const Universe& universe) {
  return "{" + join_names(set, universe) + "}";
}

std::string bracket_set(const EntitySet& set, const Universe& universe) {
  return "[" + join_names(set, universe) + "]";
}

}  // namespace rsos
