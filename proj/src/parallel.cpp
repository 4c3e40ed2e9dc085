#include "kuwalls/parallel.hpp"

#include <cstdlib>
#include <string>

namespace kuwalls {

unsigned thread_count() {
  if (const char* env = std::getenv("KUWALLS_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace kuwalls
