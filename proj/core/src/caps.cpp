#include "tdn/caps.hpp"

#include <cstdlib>
#include <string>

namespace tdn {

Caps Caps::from_env() {
  Caps caps;
  if (const char* v = std::getenv("TDN_MAX_CELLS")) {
    try {
      caps.max_families = std::stoull(std::string(v));
    } catch (...) {
      // Ignore malformed values; keep the default.
    }
  }
  return caps;
}

}  // namespace tdn
