#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hmt {

// Runs task(0), ..., task(n_tasks - 1) on up to n_threads workers.  Tasks
// must write only to their own output slots; callers then merge slots in
// fixed index order, which makes every result independent of thread count.
inline void parallel_for(std::size_t n_tasks, unsigned n_threads,
                         const std::function<void(std::size_t)>& task) {
    if (n_tasks == 0) return;
    if (n_threads <= 1 || n_tasks == 1) {
        for (std::size_t i = 0; i < n_tasks; ++i) task(i);
        return;
    }
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(n_threads, n_tasks));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_tasks) return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace hmt
