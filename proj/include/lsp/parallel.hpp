#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace lsp {

/// out[k] = f(items[k]); the order of results never depends on scheduling.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f, bool parallel) {
  using R = decltype(f(items.front()));
  std::vector<R> out;
  out.reserve(items.size());
  if (!parallel || items.size() < 2) {
    for (const T& x : items) out.push_back(f(x));
    return out;
  }
  // one object per slot; std::vector<bool> would share words between threads
  std::vector<std::optional<R>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < items.size();) {
        try {
          slots[k] = f(items[k]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  for (auto& r : slots) out.push_back(std::move(*r));
  return out;
}

}  // namespace lsp
