#pragma once

// Exhaustive-scan kernels. Each comes as a serial reference and an OpenMP
// variant; both return identical results (the parallel scans reduce to the
// minimum index / a sorted list), so tests compare them directly.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "mrc/graph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mrc::kernels {

// ---------------------------------------------------------------------------
// Colouring scans

struct ScanResult {
  /// Scan index of the first colouring without a monochromatic cycle.
  std::optional<std::uint64_t> first_good;
  std::uint64_t examined = 0;
};

/// Number of colourings scanned for r colours with edge 0 pinned to colour 0.
std::uint64_t colouring_space(int edges, int r);

/// Colour of every edge for scan index `index`. For r = 2 the scan follows
/// the reflected Gray code so consecutive colourings differ in one edge; for
/// r = 3 it counts in base 3 with edge 1 as the least significant digit.
std::vector<std::uint8_t> colouring_at(std::uint64_t index, int edges, int r);

ScanResult scan_colourings_serial(const Graph& g, int r);
ScanResult scan_colourings_parallel(const Graph& g, int r, int jobs);

// ---------------------------------------------------------------------------
// Labeled small graphs as bitmasks over vertex pairs in sorted order
// (0,1),(0,2),...,(0,n-1),(1,2),...

constexpr int kMaxSmall = 16;

struct SmallGraph {
  int n = 0;
  std::array<std::uint32_t, kMaxSmall> adj{};
};

std::vector<Edge> pair_table(int n);
SmallGraph small_from_mask(int n, std::uint64_t mask, const std::vector<Edge>& pairs);
Graph graph_from_mask(int n, std::uint64_t mask);

int small_edge_count(const SmallGraph& g);
int small_min_degree(const SmallGraph& g);
bool small_is_2_connected(const SmallGraph& g);
/// Every edge has at least two common neighbours of its endpoints.
bool small_every_edge_in_two_triangles(const SmallGraph& g);
/// Minimal Ramsey for cyclicity (2 colours) by direct subset densities:
/// e(G) = 2n - 1 and every proper vertex subset S spans at most 2|S| - 2
/// edges.
bool small_is_minimal_ramsey2(const SmallGraph& g);

/// Next integer with the same popcount (Gosper).
inline std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// All masks of `bits` bits (with exactly `popcount` ones, or any when
/// popcount < 0) satisfying pred, ascending.
template <class Pred>
std::vector<std::uint64_t> collect_masks_serial(int bits, int popcount, Pred pred) {
  std::vector<std::uint64_t> out;
  const std::uint64_t end = std::uint64_t{1} << bits;
  if (popcount < 0) {
    for (std::uint64_t m = 0; m < end; ++m)
      if (pred(m)) out.push_back(m);
    return out;
  }
  if (popcount > bits) return out;
  if (popcount == 0) {
    if (pred(0)) out.push_back(0);
    return out;
  }
  for (std::uint64_t m = (std::uint64_t{1} << popcount) - 1; m < end; m = next_same_popcount(m))
    if (pred(m)) out.push_back(m);
  return out;
}

/// Same contract as collect_masks_serial; the top bits are split across
/// threads and the per-thread results merged and sorted.
template <class Pred>
std::vector<std::uint64_t> collect_masks_parallel(int bits, int popcount, Pred pred, int jobs) {
  const int high = std::min(bits, 10);
  const int low = bits - high;
  const std::int64_t blocks = std::int64_t{1} << high;
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t hi = static_cast<std::uint64_t>(b) << low;
    const int need = popcount < 0 ? -1 : popcount - std::popcount(static_cast<std::uint64_t>(b));
    if (popcount >= 0 && (need < 0 || need > low)) continue;
    auto local = collect_masks_serial(low, need, [&](std::uint64_t m) { return pred(hi | m); });
    for (auto& m : local) m |= hi;
    found[static_cast<std::size_t>(b)] = std::move(local);
  }
  std::vector<std::uint64_t> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

}  // namespace mrc::kernels
