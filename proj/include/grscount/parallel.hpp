/**************************************************************************
 * parallel.hpp
 *
 * Copyright 2026 The grscount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "grscount/error.hpp"

namespace grscount {

/// Worker count used when the caller passes 0.
inline unsigned default_workers() noexcept {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

/// Run fn(worker) for worker = 0..workers-1 on separate threads and join.
/// The first exception thrown by any worker is rethrown on the caller.
template <class Fn>
void run_workers(unsigned workers, Fn&& fn) {
    if (workers <= 1) {
        fn(0u);
        return;
    }
    std::exception_ptr first;
    std::mutex m;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            try {
                fn(w);
            } catch (...) {
                std::lock_guard lock(m);
                if (!first) first = std::current_exception();
            }
        });
    for (auto& t : threads) t.join();
    if (first) std::rethrow_exception(first);
}

/// Shared node counter for search budgets.
class Budget {
   public:
    explicit Budget(std::uint64_t limit) : limit_(limit) {}

    /// Charge n nodes; throws Errc::BudgetExceeded past the limit.
    void charge(std::uint64_t n) {
        const auto used = used_.fetch_add(n, std::memory_order_relaxed) + n;
        if (used > limit_) throw Error(Errc::BudgetExceeded, "search node budget exhausted");
    }
    std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }
    std::uint64_t limit() const noexcept { return limit_; }

   private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

}  // namespace grscount
