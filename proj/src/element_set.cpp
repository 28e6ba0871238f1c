#include "ordsgp/element_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ordsgp {

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> members)
    : bits_(universe) {
  for (Element a : members) bits_.set(a);
}

ElementSet::ElementSet(std::size_t universe, const std::vector<Element>& members)
    : bits_(universe) {
  for (Element a : members) bits_.set(a);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet set(universe);
  set.bits_.set();
  return set;
}

Element ElementSet::first() const {
  auto pos = bits_.find_first();
  return pos == boost::dynamic_bitset<std::uint64_t>::npos
             ? static_cast<Element>(bits_.size())
             : static_cast<Element>(pos);
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for (Element a : *this) out.push_back(a);
  return out;
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::size_t ElementSet::hash() const {
  std::size_t h = bits_.size();
  for (Element a : *this) h = h * 1000003u ^ (a + 0x9e3779b9u);
  return h;
}

bool size_lex_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::ostream& operator<<(std::ostream& os, const ElementSet& set) {
  os << '{';
  bool first = true;
  for (Element a : set) {
    if (!first) os << ',';
    os << a;
    first = false;
  }
  return os << '}';
}

}  // namespace ordsgp
