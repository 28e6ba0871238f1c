#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "ordsgp/error.hpp"

namespace ordsgp {

/// A subset of the carrier {0, ..., universe-1} of one structure.
class ElementSet {
 public:
  class const_iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;

    const_iterator() = default;
    const_iterator(const boost::dynamic_bitset<std::uint64_t>* bits,
                   std::size_t pos)
        : bits_(bits), pos_(pos) {}

    Element operator*() const { return static_cast<Element>(pos_); }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return pos_ == other.pos_;
    }

   private:
    const boost::dynamic_bitset<std::uint64_t>* bits_ = nullptr;
    std::size_t pos_ = boost::dynamic_bitset<std::uint64_t>::npos;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members);
  ElementSet(std::size_t universe, const std::vector<Element>& members);

  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool is_full() const noexcept { return bits_.all(); }

  bool contains(Element a) const { return a < bits_.size() && bits_.test(a); }
  void insert(Element a) { bits_.set(a); }
  void erase(Element a) { bits_.reset(a); }

  /// Least member; universe() when empty.
  Element first() const;

  bool subset_of(const ElementSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const ElementSet& other) const {
    return bits_.intersects(other.bits_);
  }

  ElementSet& operator|=(const ElementSet& other) {
    bits_ |= other.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) {
    bits_ &= other.bits_;
    return *this;
  }
  ElementSet& operator-=(const ElementSet& other) {
    bits_ -= other.bits_;
    return *this;
  }
  friend ElementSet operator|(ElementSet lhs, const ElementSet& rhs) {
    return lhs |= rhs;
  }
  friend ElementSet operator&(ElementSet lhs, const ElementSet& rhs) {
    return lhs &= rhs;
  }
  friend ElementSet operator-(ElementSet lhs, const ElementSet& rhs) {
    return lhs -= rhs;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {}; }

  std::vector<Element> members() const;

  /// "{0,2,3}"
  std::string to_string() const;

  std::size_t hash() const;

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

/// Orders by cardinality, then lexicographically on the ascending member
/// list. This is the order used for enumerated ideals and P_f carriers.
bool size_lex_less(const ElementSet& a, const ElementSet& b);

std::ostream& operator<<(std::ostream& os, const ElementSet& set);

}  // namespace ordsgp
