#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace panofold::detail {

// Runs fn(row) for every row in [0, rows). Rows are independent, so the result does not
// depend on how they are split across threads.
template <class Fn>
void parallel_rows(int rows, Fn&& fn) {
    const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const int workers = std::min(hw, std::max(1, rows / 16));
    if (workers <= 1) {
        for (int r = 0; r < rows; ++r) fn(r);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&fn, w, workers, rows] {
            for (int r = w; r < rows; r += workers) fn(r);
        });
    }
}

}  // namespace panofold::detail
