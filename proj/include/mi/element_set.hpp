#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mi {

/// Dense element id in [0, n).
using Element = std::uint32_t;

/// Subset of a ground set [0, n), stored as a bitset with a cached
/// cardinality.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members)
      : ElementSet(universe) {
    for (Element e : members) insert(e);
  }
  ElementSet(std::size_t universe, std::span<const Element> members)
      : ElementSet(universe) {
    for (Element e : members) insert(e);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t e = 0; e < universe; ++e) s.insert(static_cast<Element>(e));
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Element e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u) != 0;
  }

  // Throws InputError when e is outside the universe.
  void insert(Element e);
  void erase(Element e);

  /// Members in ascending order.
  std::vector<Element> to_vector() const;

  ElementSet complement() const;
  ElementSet operator|(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator-(const ElementSet& other) const;
  ElementSet operator^(const ElementSet& other) const;

  /// Smallest member, or universe() when empty.
  Element first() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  void recount();

  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mi
