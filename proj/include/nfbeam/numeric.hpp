#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace nfbeam {

// Binary-tree pairwise sum: deterministic for a fixed element order and far
// lower rounding error than sequential accumulation on long inputs.
double pairwise_sum(std::span<const double> values);

// Runs fn(i) for i in [0, count) across at most `threads` std::thread
// workers over contiguous index blocks. Each index is processed exactly
// once, so any output written to per-index slots is identical to a
// sequential run.
void parallel_for_index(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace nfbeam
