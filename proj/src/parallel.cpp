#include "rainbow/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace rainbow {

unsigned worker_threads() {
    unsigned requested = 0;
    if (const char* env = std::getenv("RAINBOW_THREADS")) {
        try {
            requested = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            requested = 0;
        }
    }
    if (requested == 0) requested = std::thread::hardware_concurrency();
    return std::max(1U, requested);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, unsigned)>& task) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_threads(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    task(i, w);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace rainbow
