#include "entropy_lab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace entropy_lab {

int worker_count() {
  if (const char* env = std::getenv("ENTROPY_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_chunks(std::int64_t total,
                     const std::function<void(std::int64_t, std::int64_t)>& body) {
  if (total <= 0) return;
  const int workers = std::min<std::int64_t>(worker_count(), total);
  if (workers <= 1) {
    body(0, total);
    return;
  }
  const std::int64_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = static_cast<std::int64_t>(w) * chunk;
    const std::int64_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace entropy_lab
