// Copyright 2026 The Broadcast Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BROADCAST_SEARCH_HPP
#define BROADCAST_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace broadcast {

template <typename T>
struct FirstHit {
  std::size_t index;  // == trials when nothing was found
  std::optional<T> value;
};

/// Runs trial(k) for k in [0, trials) on `threads` workers (0 = hardware
/// concurrency) and returns the hit with the lowest index. Trials above the
/// current best are skipped. An exception thrown by the lowest failing trial
/// is rethrown unless a lower trial produced a hit.
template <typename T, typename Trial>
FirstHit<T> first_hit(std::size_t trials, std::size_t threads, Trial trial) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{trials};
  std::mutex mu;
  std::optional<T> value;
  std::exception_ptr error;

  auto work = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= best.load()) return;
      try {
        std::optional<T> hit = trial(k);
        if (!hit) continue;
        std::lock_guard lock(mu);
        if (k < best.load()) {
          best.store(k);
          value = std::move(hit);
          error = nullptr;
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (k < best.load()) {
          best.store(k);
          value.reset();
          error = std::current_exception();
        }
      }
    }
  };

  if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  threads = std::min(threads, trials);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return FirstHit<T>{best.load(), std::move(value)};
}

}  // namespace broadcast

#endif  // BROADCAST_SEARCH_HPP
