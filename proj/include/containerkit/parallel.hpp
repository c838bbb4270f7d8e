#ifndef CONTAINERKIT_PARALLEL_HPP
#define CONTAINERKIT_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace containerkit {

// Runs fn(i) for i in [0, count) across `jobs` workers. Results must be
// written into pre-sized slots by index so emission order stays
// deterministic regardless of scheduling; RNG must be derived per index.
inline void parallel_for_indexed(std::size_t count, int jobs,
                                 const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const int n_workers = std::min<int>(jobs, static_cast<int>(count));
    std::exception_ptr error;
    std::mutex error_mutex;
    workers.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w)
        workers.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& worker : workers) worker.join();
    if (error) std::rethrow_exception(error);
}

} // namespace containerkit

#endif
