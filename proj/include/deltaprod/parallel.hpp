#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace deltaprod {

// Runs fn(i) for i in [0, count) on up to `parallelism` threads.  Work items
// must be independent and write only to their own output slot; results are
// then identical for any thread count.  The first exception thrown by a
// worker is rethrown on the calling thread.
template <class Fn>
void parallel_for(long count, int parallelism, Fn&& fn) {
    if (count <= 0) return;
    int threads = parallelism;
    if (threads > count) threads = static_cast<int>(count);
    if (threads <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace deltaprod
