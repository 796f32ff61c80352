#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace relhur {

/// Worker count: hardware concurrency, capped by REL_HUR_THREADS if set.
unsigned worker_count();

/// out[i] = fn(i) for i in [0, n), evaluated on up to worker_count()
/// threads. Output order is by index. The first exception is rethrown.
template <typename Fn>
auto parallel_map(std::size_t n, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using T = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(n)));
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += workers) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace relhur
