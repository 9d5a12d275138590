#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace kegraph::cli {

/// Pulls items from `next`, runs `work` on up to `jobs` threads and hands the
/// results to `emit` in input order. Items are processed in windows of
/// `window` so memory stays bounded on long streams. `emit` runs on the
/// calling thread and may return false to stop early.
template <typename In, typename Out>
void ordered_map(int jobs, std::size_t window, const std::function<std::optional<In>()>& next,
                 const std::function<Out(const In&)>& work, const std::function<bool(Out&&)>& emit) {
  if (jobs < 1) jobs = 1;
  std::vector<In> batch;
  std::vector<std::optional<Out>> results;
  for (;;) {
    batch.clear();
    while (batch.size() < window) {
      std::optional<In> item = next();
      if (!item) break;
      batch.push_back(std::move(*item));
    }
    if (batch.empty()) return;

    results.assign(batch.size(), std::nullopt);
    if (jobs == 1 || batch.size() == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (!emit(work(batch[i]))) return;
      }
      continue;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
      threads.emplace_back([&, t] {
        try {
          for (std::size_t i = cursor++; i < batch.size(); i = cursor++) results[i].emplace(work(batch[i]));
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
          cursor = batch.size();
        }
      });
    }
    for (auto& th : threads) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& r : results) {
      if (!emit(std::move(*r))) return;
    }
  }
}

}  // namespace kegraph::cli
