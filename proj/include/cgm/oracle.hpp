#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cgm/fp.hpp"
#include "cgm/matrix.hpp"

namespace cgm {

// A tiny full matrix ring M_n(F_p), small enough to enumerate outright.
struct RingSpec {
    int n;
    std::uint32_t p;
};

// p^(n*n); throws too-large when that exceeds 2^32 or the spec is outside
// n in 2..4, p in {2, 3, 5}.
std::uint64_t ring_size(const RingSpec& spec);

// Matrices are numbered 0 .. p^(n*n)-1 by base-p digits with entry (0,0) most
// significant, so ascending index is lexicographic entry order.
std::uint32_t encode_matrix(const RingSpec& spec, const Matrix<Fp>& m);
Matrix<Fp> decode_matrix(const RingSpec& spec, std::uint32_t index);

enum class MatrixFilter { all, non_central, idempotent, square_zero_nonzero };

// Indices of all matrices matching the filter, ascending.
std::vector<std::uint32_t> enumerate(const RingSpec& spec, MatrixFilter filter);

// Hop distances in the commuting graph (vertices: non-central matrices;
// edges: distinct commuting pairs). dist is indexed by matrix index;
// -1 means unreachable, -2 marks central matrices, which are not vertices.
struct DistanceMap {
    std::uint32_t source;
    std::vector<std::int32_t> dist;
};

DistanceMap bfs(const RingSpec& spec, const Matrix<Fp>& source);

struct DiameterResult {
    bool finite;
    int value;             // meaningful when finite
    std::uint32_t from, to; // maximizing pair, or an unreachable pair
};

// Exact diameter by BFS from every vertex; reports an unreachable witness
// pair when the graph is disconnected.
DiameterResult diameter(const RingSpec& spec);

// Exhaustive check of the bridge construction: for every pair of a
// non-trivial idempotent and a nonzero square-zero matrix, run
// common_commuter and verify its output, and independently brute-force
// whether any non-scalar common commuter exists at all. A discrepancy is a
// postcondition violation or an algorithm failure on a pair where brute
// force finds a commuter.
struct Prop3Report {
    RingSpec spec{0, 0};
    std::uint64_t idempotents_nontrivial = 0;
    std::uint64_t square_zero_nonzero = 0;
    std::uint64_t pairs = 0;
    std::uint64_t algorithm_successes = 0;
    std::uint64_t algorithm_failures = 0; // no-common-commuter outcomes
    std::uint64_t brute_force_exists = 0;
    std::uint64_t discrepancies = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> discrepancy_pairs; // first few, by index
};

Prop3Report prop3_exhaustive(const RingSpec& spec);

// DOT text of the radius-2 neighborhood of a vertex, for eyeballing.
std::string export_dot(const RingSpec& spec, std::uint32_t source_index, int radius = 2);

} // namespace cgm
