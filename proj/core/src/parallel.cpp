#include "augraph/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace augraph {

namespace {
std::atomic<std::size_t> g_thread_cap{0};
}

void set_thread_cap(std::size_t n) { g_thread_cap.store(n); }

std::size_t thread_cap() {
    std::size_t cap = g_thread_cap.load();
    if (cap == 0) {
        cap = std::thread::hardware_concurrency();
        if (cap == 0) cap = 1;
    }
    return cap;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min(thread_cap(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    if (error) std::rethrow_exception(error);
}

}  // namespace augraph
