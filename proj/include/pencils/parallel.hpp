/*
   Copyright 2026 The pencils authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PENCILS_PARALLEL_HPP
#define PENCILS_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace pencils {

/// 0 means "all available hardware threads" (at least 1).
inline unsigned resolve_thread_count(unsigned requested) noexcept {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/**
 * @brief Runs fn(shard) for every shard in [0, shard_count) on a pool of
 * worker threads pulling shards from a shared counter.
 *
 * Callers write per-shard results into slots indexed by shard and merge them
 * in shard order afterwards, so results do not depend on scheduling. If any
 * shard throws, the remaining shards are skipped and the exception of the
 * lowest failing shard is rethrown.
 */
template <class Fn>
void parallel_for_shards(std::size_t shard_count, unsigned threads, Fn&& fn) {
    threads = resolve_thread_count(threads);
    if (threads > shard_count) threads = static_cast<unsigned>(shard_count == 0 ? 1 : shard_count);

    std::vector<std::exception_ptr> errors(shard_count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t shard = next.fetch_add(1, std::memory_order_relaxed);
            if (shard >= shard_count || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(shard);
            } catch (...) {
                errors[shard] = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace pencils

#endif  // PENCILS_PARALLEL_HPP
