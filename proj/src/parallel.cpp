#include "omkit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace omkit {

namespace {

std::atomic<int> override_workers{0};

int from_environment() {
  const char* text = std::getenv("OMKIT_WORKERS");
  if (text == nullptr) return 0;
  try {
    return std::max(0, std::stoi(text));
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

int worker_count() {
  if (const int w = override_workers.load(); w > 0) return w;
  if (const int w = from_environment(); w > 0) return w;
  return std::max(1U, std::thread::hardware_concurrency());
}

void set_worker_count(int workers) { override_workers.store(std::max(0, workers)); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> hold(failure_lock);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace omkit
