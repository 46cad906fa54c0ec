#include "ferrers/parallel.hpp"

namespace ferrers {

unsigned hardware_jobs() noexcept {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace ferrers
