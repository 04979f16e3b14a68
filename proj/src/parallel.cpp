#include "rolesim/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <string>

namespace rolesim {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ROLESIM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

int parallel_chunks(std::size_t count, int threads,
                    const std::function<void(int, std::size_t, std::size_t)>& fn) {
    if (count == 0) return 0;
    const std::size_t wanted = static_cast<std::size_t>(std::max(threads, 1));
    const int chunks = static_cast<int>(std::min(wanted, count));
    if (chunks == 1) {
        fn(0, 0, count);
        return 1;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto guarded = [&](int idx, std::size_t begin, std::size_t end) {
        try {
            fn(idx, begin, end);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    std::vector<std::thread> workers;
    workers.reserve(chunks - 1);
    const std::size_t base = count / chunks;
    const std::size_t extra = count % chunks;
    std::size_t begin = 0;
    for (int c = 0; c < chunks; ++c) {
        const std::size_t len = base + (static_cast<std::size_t>(c) < extra ? 1 : 0);
        const std::size_t end = begin + len;
        if (c + 1 == chunks) {
            guarded(c, begin, end);  // run the last chunk on this thread
        } else {
            workers.emplace_back(guarded, c, begin, end);
        }
        begin = end;
    }
    for (auto& w : workers) w.join();
    if (first_error) std::rethrow_exception(first_error);
    return chunks;
}

}  // namespace rolesim
