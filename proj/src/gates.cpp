#include "gates.hpp"

#include <cstdlib>
#include <string>

namespace qw {

Gates active_gates() {
  Gates g;
  if (const char* env = std::getenv("QW_GATE_OVERRIDE")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) {
        g.subset_enumeration = v;
        g.partition_enumeration = v;
        g.search_order = v;
      }
    } catch (const std::exception&) {
      // Unparsable override is ignored; the defaults stay in force.
    }
  }
  return g;
}

}  // namespace qw
