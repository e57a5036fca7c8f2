#ifndef AISR_CAPS_HPP_
#define AISR_CAPS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace aisr {

  // Size limits for brute-force work. Every operation that can blow up takes
  // a Caps and fails fast with SizeError instead of running for hours.
  struct Caps {
    std::size_t   max_carrier       = 4096;  // products, closures, words
    std::size_t   max_power_base    = 8;     // |T| for power semirings
    std::size_t   max_group_order   = 32;    // subgroup enumeration
    std::uint64_t max_assignments   = 10'000'000;  // per identity check
    std::uint64_t max_candidates    = 1'000'000;   // separation search
    std::size_t   max_satisfactions = 4096;  // coordinates of witness powers

    // Parses "key=value,key=value". Unknown keys and malformed values throw.
    static Caps parse(std::string_view spec) {
      return parse(spec, Caps());
    }

    static Caps parse(std::string_view spec, Caps base) {
      std::size_t pos = 0;
      while (pos < spec.size()) {
        std::size_t end = spec.find(',', pos);
        if (end == std::string_view::npos) {
          end = spec.size();
        }
        std::string_view item = spec.substr(pos, end - pos);
        pos                   = end + 1;
        if (item.empty()) {
          continue;
        }
        auto eq = item.find('=');
        if (eq == std::string_view::npos) {
          throw Error("caps: expected key=value, got '" + std::string(item)
                      + "'");
        }
        std::string key(item.substr(0, eq));
        std::string val(item.substr(eq + 1));
        std::uint64_t v = 0;
        try {
          std::size_t used = 0;
          v                = std::stoull(val, &used);
          if (used != val.size()) {
            throw std::invalid_argument(val);
          }
        } catch (std::exception const&) {
          throw Error("caps: bad value for " + key + ": '" + val + "'");
        }
        if (key == "carrier") {
          base.max_carrier = v;
        } else if (key == "power_base") {
          base.max_power_base = v;
        } else if (key == "group_order") {
          base.max_group_order = v;
        } else if (key == "assignments") {
          base.max_assignments = v;
        } else if (key == "candidates") {
          base.max_candidates = v;
        } else if (key == "satisfactions") {
          base.max_satisfactions = v;
        } else {
          throw Error("caps: unknown key '" + key + "'");
        }
      }
      return base;
    }
  };

}  // namespace aisr

#endif  // AISR_CAPS_HPP_
