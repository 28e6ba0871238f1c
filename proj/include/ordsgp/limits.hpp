#pragma once

#include <cstddef>
#include <string_view>

namespace ordsgp {

/// Size guards for the exponential scans. Defaults can be overridden through
/// the ORDSGP_LIMITS environment variable, e.g.
///
///   ORDSGP_LIMITS="ideals=14,power=11,semigroups=5"
///
/// Raising them is for experts: the scans are 2^n, Bell(n) or n^(n^2).
struct Limits {
  std::size_t ideal_scan = 12;        // enumerate_ideals, subsemigroup scans
  std::size_t power_base = 10;        // |F| for P_f(F)
  std::size_t semigroup_order = 4;    // enumerate_semigroups / ordered
  std::size_t order_scan = 5;         // enumerate_compatible_orders
  std::size_t partition_scan = 9;     // restricted-growth partition scans
};

/// Parses "key=value,key=value". Unknown keys or malformed values throw
/// ordsgp::Error.
Limits parse_limits(std::string_view spec, Limits base = {});

/// Process-wide limits: defaults overlaid with ORDSGP_LIMITS, read once.
const Limits& limits();

}  // namespace ordsgp
