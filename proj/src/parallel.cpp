#include "graphpoly/parallel.hpp"

#include <cstdlib>
#include <string>

namespace graphpoly {

std::size_t default_jobs() {
  if (const char* env = std::getenv("GRAPHPOLY_JOBS")) {
    try {
      const auto n = std::stoul(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace graphpoly
