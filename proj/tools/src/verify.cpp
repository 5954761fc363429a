#include "multlab/cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace multlab::cli {

int thread_budget(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("MULTLAB_THREADS")) {
    const int c = std::atoi(cap);
    if (c > 0) n = std::min(n, c);
  }
  return std::max(1, n);
}

json verify(const Property& property, const VerifyOptions& options) {
  const int count = options.count >= 0 ? options.count : property.default_count;
  const auto start = std::chrono::steady_clock::now();

  std::vector<InstanceOutcome> results(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        results[i] = property.run(options.seed, i);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::min(thread_budget(options.threads), std::max(1, count));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  json failures = json::array();
  double max_residual = 0.0;
  for (int i = 0; i < count; ++i) {
    max_residual = std::max(max_residual, results[i].residual);
    if (!results[i].passed) failures.push_back({{"index", i}, {"residual", results[i].residual}, {"instance", results[i].instance}});
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {{"property", property.name},
          {"seed", options.seed},
          {"count", count},
          {"tolerance", property.tolerance},
          {"failures", failures},
          {"failure_count", failures.size()},
          {"max_residual", max_residual},
          {"passed", failures.empty()},
          {"timing", {{"wall_seconds", wall}, {"threads", threads}}}};
}

}  // namespace multlab::cli
