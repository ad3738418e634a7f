#include "nfbeam/numeric.hpp"

#include <algorithm>
#include <thread>

namespace nfbeam {

namespace {

double pairwise_sum_range(const double* data, std::size_t count) {
    if (count <= 8) {
        double sum = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            sum += data[i];
        }
        return sum;
    }
    const std::size_t half = count / 2;
    return pairwise_sum_range(data, half) + pairwise_sum_range(data + half, count - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_range(values.data(), values.size());
}

void parallel_for_index(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers =
        std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * block;
        const std::size_t end = std::min(count, begin + block);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) {
                fn(i);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

}  // namespace nfbeam
