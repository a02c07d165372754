#include "qadic/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qadic {

std::size_t worker_count() {
  std::size_t requested = 0;
  if (const char* env = std::getenv("QADIC_THREADS")) {
    try {
      requested = std::stoul(env);
    } catch (const std::exception&) {
      requested = 0;
    }
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

}  // namespace qadic
