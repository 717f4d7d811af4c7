#include "vitalsign/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace vitalsign {

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    if (jobs <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

int resolve_jobs(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("VITALSIGN_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

}  // namespace vitalsign
