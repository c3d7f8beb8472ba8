#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sumgrowth/point_set.hpp"

namespace sumgrowth {

/// Cube corner + [0, side)^d with corner in (side Z)^d.
struct CubeCell {
    std::int64_t side = 1;
    std::vector<std::int64_t> corner;

    bool contains(const std::int64_t* p) const;
    friend bool operator==(const CubeCell&, const CubeCell&) = default;
};

struct DecompositionResult {
    unsigned level = 0;
    std::int64_t B = 1;                    // (1/delta)^level
    std::vector<CubeCell> cells;           // side N / B, lexicographic by corner
    PointSet a_prime;                      // A restricted to the cells
    std::vector<Integer> level_volumes;    // occupied volume at levels 0..level+1

    std::string json() const;
};

/// Exact "a/b", integer, or finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

/// Coarse-to-fine occupancy refinement of A ⊆ [0, N)^d with cell side N / (1/delta)^l.
/// Stops at the first level l whose next level keeps at least
/// (1 - delta^{d+1} eps) of the occupied volume, and keeps the level-l cells
/// whose subcells are all occupied. Requirements: 1/delta an integer m, N a
/// power of m, |A| >= eps N^d. Violations throw InvalidInput.
DecompositionResult structural_decompose(const PointSet& a, std::int64_t n, const Rational& eps, const Rational& delta);

/// Every lattice point of the cell lies within L∞ distance delta * side of a
/// point of A' inside the cell.
bool is_delta_dense(const PointSet& a_prime, const CubeCell& cell, const Rational& delta);

}  // namespace sumgrowth
