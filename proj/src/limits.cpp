#include "ordsgp/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "ordsgp/error.hpp"

namespace ordsgp {

Limits parse_limits(std::string_view spec, Limits base) {
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{}
                                           : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw Error("ORDSGP_LIMITS: expected key=value, got '" +
                  std::string(item) + "'");
    auto key = item.substr(0, eq);
    auto text = item.substr(eq + 1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      throw Error("ORDSGP_LIMITS: bad value for '" + std::string(key) + "'");
    if (key == "ideals") {
      base.ideal_scan = value;
    } else if (key == "power") {
      base.power_base = value;
    } else if (key == "semigroups") {
      base.semigroup_order = value;
    } else if (key == "orders") {
      base.order_scan = value;
    } else if (key == "partitions") {
      base.partition_scan = value;
    } else {
      throw Error("ORDSGP_LIMITS: unknown key '" + std::string(key) + "'");
    }
  }
  return base;
}

const Limits& limits() {
  static const Limits value = [] {
    const char* env = std::getenv("ORDSGP_LIMITS");
    return env ? parse_limits(env) : Limits{};
  }();
  return value;
}

}  // namespace ordsgp
