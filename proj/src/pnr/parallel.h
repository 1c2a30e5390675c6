// Copyright 2026 The pnr-discrimination Authors
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

#ifndef PNR_PARALLEL_H
#define PNR_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pnr {

/// Resolves a requested worker count; 0 means one per hardware thread.
inline size_t resolve_workers(size_t requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max<size_t>(1, std::thread::hardware_concurrency());
}

/// Calls body(i) for i in [0, n) on up to `workers` threads. The first
/// exception thrown by any call is rethrown after all threads join.
template <typename Body>
void parallel_for(size_t n, size_t workers, Body &&body) {
    size_t threads = std::min(resolve_workers(workers), n);
    if (threads <= 1) {
        for (size_t i = 0; i < n; i++) {
            body(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto run = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= n) {
                return;
            }
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(n);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (size_t t = 0; t < threads; t++) {
        pool.emplace_back(run);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace pnr

#endif
