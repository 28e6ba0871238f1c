#include "ordsgp/power.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "ordsgp/classification.hpp"
#include "ordsgp/limits.hpp"

namespace ordsgp {

namespace {

using Mask = std::uint32_t;

Mask mask_of(const std::vector<Element>& subset) {
  Mask m = 0;
  for (Element x : subset) m |= Mask{1} << x;
  return m;
}

std::string subset_name(const FiniteSemigroup& f, const std::vector<Element>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ',';
    out += f.names().empty() ? std::to_string(subset[i]) : f.names()[subset[i]];
  }
  return out + "}";
}

void check_power_size(std::size_t n) {
  if (n > limits().power_base) throw SizeLimitError("P_f base", n, limits().power_base);
}

}  // namespace

std::vector<std::vector<Element>> power_carrier(std::size_t n) {
  check_power_size(n);
  std::vector<std::vector<Element>> subsets;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    std::vector<Element> s;
    for (Element x = 0; x < n; ++x)
      if (m >> x & 1) s.push_back(x);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return subsets;
}

OrderedSemigroup power_ordered_semigroup(const FiniteSemigroup& f) {
  const std::size_t n = f.size();
  const auto carrier = power_carrier(n);
  const std::size_t m = carrier.size();

  std::unordered_map<Mask, Element> index;
  std::vector<Mask> masks(m);
  std::vector<std::string> names(m);
  for (Element i = 0; i < m; ++i) {
    masks[i] = mask_of(carrier[i]);
    index.emplace(masks[i], i);
    names[i] = subset_name(f, carrier[i]);
  }

  std::vector<Element> cells(m * m);
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < m; ++j) {
      Mask product = 0;
      for (Element a : carrier[i])
        for (Element b : carrier[j]) product |= Mask{1} << f.mul(a, b);
      cells[i * m + j] = index.at(product);
    }

  std::vector<OrderPair> pairs;
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < m; ++j)
      if (i != j && (masks[i] & ~masks[j]) == 0) pairs.emplace_back(i, j);

  return OrderedSemigroup::validate(FiniteSemigroup::from_cells(m, std::move(cells), names),
                                    pairs);
}

Element singleton_index(std::size_t base_size, Element x) {
  if (x >= base_size)
    throw ValidationError(ValidationFailure::IndexOutOfRange, {x}, Side::TwoSided);
  return x;  // singletons come first, in element order
}

std::optional<Element> join(const OrderedSemigroup& s, Element a, Element b) {
  const ElementSet upper = s.above(a) & s.above(b);
  for (Element u : upper)
    if (upper.subset_of(s.above(u))) return u;
  return std::nullopt;
}

SemigroupMorphism universal_extension(const FiniteSemigroup& f, const OrderedSemigroup& s,
                                      std::span<const Element> hom) {
  const std::size_t n = f.size();
  if (hom.size() != n)
    throw PreconditionError(PreconditionFailure::NotMorphism, {},
                            "map has " + std::to_string(hom.size()) + " images for " +
                                std::to_string(n) + " elements");
  for (Element a = 0; a < n; ++a)
    if (hom[a] >= s.size())
      throw PreconditionError(PreconditionFailure::NotMorphism, {a}, "image out of range");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (hom[f.mul(a, b)] != s.mul(hom[a], hom[b]))
        throw PreconditionError(PreconditionFailure::NotMorphism, {a, b});

  const auto carrier = power_carrier(n);
  SemigroupMorphism phi;
  phi.map.reserve(carrier.size());
  for (const auto& subset : carrier) {
    Element acc = hom[subset.front()];
    for (std::size_t i = 1; i < subset.size(); ++i) {
      auto j = join(s, acc, hom[subset[i]]);
      if (!j) throw PreconditionError(PreconditionFailure::NoJoin, {acc, hom[subset[i]]});
      acc = *j;
    }
    phi.map.push_back(acc);
  }

  const OrderedSemigroup power = power_ordered_semigroup(f);
  const std::size_t m = power.size();
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      if (phi(power.mul(x, y)) != s.mul(phi(x), phi(y)))
        throw PreconditionError(PreconditionFailure::NotDistributive, {x, y},
                                "phi(AB) differs from phi(A)phi(B)");
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      if (power.leq(x, y) && !s.leq(phi(x), phi(y)))
        throw PreconditionError(PreconditionFailure::NotMorphism, {x, y}, "order not preserved");
  return phi;
}

std::vector<SemigroupMorphism> homomorphisms(const FiniteSemigroup& f,
                                             const OrderedSemigroup& s) {
  const std::size_t n = f.size(), k = s.size();
  std::vector<SemigroupMorphism> out;
  if (n == 0 || k == 0) return out;
  std::vector<Element> map(n, 0);
  for (;;) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b)
        ok = map[f.mul(a, b)] == s.mul(map[a], map[b]);
    if (ok) out.push_back(SemigroupMorphism{map});
    std::size_t pos = n;
    while (pos > 0 && ++map[pos - 1] == k) map[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

bool is_group(const FiniteSemigroup& f) {
  const std::size_t n = f.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      std::size_t left = 0, right = 0;
      for (Element x = 0; x < n; ++x) {
        left += f.mul(x, a) == b;
        right += f.mul(a, x) == b;
      }
      if (left != 1 || right != 1) return false;
    }
  return n > 0;
}

bool is_left_group(const FiniteSemigroup& f) {
  const std::size_t n = f.size();
  for (Element a = 0; a < n; ++a) {
    bool regular = false;
    for (Element x = 0; x < n && !regular; ++x) regular = f.mul(f.mul(a, x), a) == a;
    if (!regular) return false;
    std::vector<bool> hit(n, false);
    for (Element x = 0; x < n; ++x) hit[f.mul(x, a)] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  }
  return n > 0;
}

bool is_completely_regular(const FiniteSemigroup& f) {
  const std::size_t n = f.size();
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element x = 0; x < n && !found; ++x)
      found = f.mul(f.mul(a, x), a) == a && f.mul(f.mul(x, a), x) == x &&
              f.mul(a, x) == f.mul(x, a);
    if (!found) return false;
  }
  return true;
}

const char* to_string(PowerProperty property) noexcept {
  switch (property) {
    case PowerProperty::TSimple: return "t_simple";
    case PowerProperty::LeftGroupLike: return "left_group_like";
    case PowerProperty::CompletelyRegular: return "completely_regular";
  }
  return "?";
}

PowerProperty parse_power_property(std::string_view text) {
  for (auto p : {PowerProperty::TSimple, PowerProperty::LeftGroupLike,
                 PowerProperty::CompletelyRegular})
    if (text == to_string(p)) return p;
  throw UnknownNameError("power property", std::string(text));
}

BundleResult power_correspondence_check(const FiniteSemigroup& f, PowerProperty property) {
  BundleResult r;
  r.id = std::string("POWER-") + to_string(property);
  bool base = false;
  std::string base_label;
  switch (property) {
    case PowerProperty::TSimple:
      base = is_group(f);
      base_label = "F is a group";
      r.statement = "F is a group <=> P_f(F) is t-simple";
      break;
    case PowerProperty::LeftGroupLike:
      base = is_left_group(f);
      base_label = "F is a left group";
      r.statement = "F is a left group <=> P_f(F) is left group like";
      break;
    case PowerProperty::CompletelyRegular:
      base = is_completely_regular(f);
      base_label = "F is completely regular";
      r.statement = "F is completely regular <=> P_f(F) is completely regular";
      break;
  }
  const OrderedSemigroup power = power_ordered_semigroup(f);
  Verdict ordered = predicate(power, to_string(property));
  if (!ordered.applicable()) ordered = Verdict::fail({}, "P_f(F) is not regular");
  r.conditions.push_back(condition(base_label, base ? Verdict::pass() : Verdict::fail({})));
  r.conditions.push_back(condition(std::string("P_f(F) is ") + to_string(property), ordered));
  settle(r);
  return r;
}

}  // namespace ordsgp
