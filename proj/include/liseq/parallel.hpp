#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace liseq::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Index-parallel loop; fn(i) must be independent across i (results land in
// preallocated slots, so outputs are deterministic regardless of schedule).
template <class Fn>
void parallel_for(long begin, long end, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    const long count = end - begin;
    if (count <= 0) return;
    if (threads <= 1 || count == 1) {
        for (long i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<long> next(begin);
    std::atomic<bool> failed(false);
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= end || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned spawn = static_cast<unsigned>(std::min<long>(threads, count));
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace liseq::detail
