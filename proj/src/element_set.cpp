#include "mi/element_set.hpp"

#include <string>

#include "mi/errors.hpp"

namespace mi {

void ElementSet::insert(Element e) {
  if (e >= universe_) {
    throw InputError("element " + std::to_string(e) + " outside ground set of size " +
                     std::to_string(universe_));
  }
  std::uint64_t& w = words_[e >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (e & 63);
  if ((w & bit) == 0) {
    w |= bit;
    ++count_;
  }
}

void ElementSet::erase(Element e) {
  if (e >= universe_) return;
  std::uint64_t& w = words_[e >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (e & 63);
  if ((w & bit) != 0) {
    w &= ~bit;
    --count_;
  }
}

std::vector<Element> ElementSet::to_vector() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

Element ElementSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    }
  }
  return static_cast<Element>(universe_);
}

void ElementSet::recount() {
  count_ = 0;
  for (std::uint64_t w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
}

ElementSet ElementSet::complement() const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (universe_ % 64 != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
  out.recount();
  return out;
}

namespace {

void require_same_universe(const ElementSet& a, const ElementSet& b) {
  if (a.universe() != b.universe()) {
    throw InputError("element sets over different ground sets");
  }
}

}  // namespace

ElementSet ElementSet::operator|(const ElementSet& other) const {
  require_same_universe(*this, other);
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
  out.recount();
  return out;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  require_same_universe(*this, other);
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  out.recount();
  return out;
}

ElementSet ElementSet::operator-(const ElementSet& other) const {
  require_same_universe(*this, other);
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & ~other.words_[i];
  out.recount();
  return out;
}

ElementSet ElementSet::operator^(const ElementSet& other) const {
  require_same_universe(*this, other);
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] ^ other.words_[i];
  out.recount();
  return out;
}

}  // namespace mi
