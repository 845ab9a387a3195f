#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace wpb {

/// Splits [0, count) into contiguous chunks, evaluates `chunk(begin, end)`
/// on up to `threads` workers and folds the partial results in chunk order,
/// so the answer is independent of the thread count whenever `combine` is
/// associative.
template <class T, class Chunk, class Combine>
T parallel_reduce(std::uint64_t count, unsigned threads, T init, Chunk chunk, Combine combine)
{
    const std::uint64_t workers =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, count / 256));
    if (workers == 1)
        return combine(std::move(init), chunk(std::uint64_t{0}, count));

    struct Slot {
        T value;
    };
    std::vector<Slot> partial(workers, Slot{init});
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = count * w / workers;
        const std::uint64_t end = count * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            try {
                partial[w].value = chunk(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    T acc = std::move(init);
    for (auto& p : partial)
        acc = combine(std::move(acc), std::move(p.value));
    return acc;
}

} // namespace wpb
