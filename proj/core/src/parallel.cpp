#include "dcq/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dcq {

unsigned worker_count(unsigned requested) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned n = requested != 0 ? requested : hw;
    if (const char* env = std::getenv("DCQ_THREADS")) {
        char* end = nullptr;
        unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap >= 1) {
            n = std::min<unsigned long>(n, cap);
        }
    }
    return std::max(1u, n);
}

void parallel_for(std::int64_t begin, std::int64_t end, unsigned threads,
                  const std::function<void(std::int64_t)>& body) {
    if (begin >= end) return;
    threads = std::max(1u, threads);
    std::int64_t count = end - begin;
    if (threads == 1 || count == 1) {
        for (std::int64_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (std::int64_t i = begin + t; i < end; i += threads) body(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace dcq
