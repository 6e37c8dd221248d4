#include "fock/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace fock {

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("FOCK_TOEPLITZ_THREADS")) {
    try {
      long cap = std::stol(env);
      if (cap >= 1)
        return std::min<unsigned>(hw, static_cast<unsigned>(cap));
    } catch (const std::exception &) {
      // unparsable values fall back to the hardware default
    }
  }
  return hw;
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)> &body) {
  if (count == 0)
    return;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));

  std::vector<std::exception_ptr> failures(count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(worker);
  }

  for (auto &f : failures)
    if (f)
      std::rethrow_exception(f);
}

} // namespace fock
