#pragma once

#include <iosfwd>
#include <string>

#include "sumgrowth/gap.hpp"
#include "sumgrowth/matrix.hpp"
#include "sumgrowth/point_set.hpp"

namespace sumgrowth {

/// One point per line, space-separated integers; `#` starts a comment; blank
/// lines are skipped. Duplicates and ragged rows throw InvalidInput.
PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::string& path);
/// Sorted lexicographic order, one point per line.
void write_point_set(std::ostream& out, const PointSet& a);

/// One row per line, space-separated integers; the matrix must be square.
LatticeOperator read_matrix(std::istream& in);
LatticeOperator read_matrix_file(const std::string& path);

/// Header `centered` or `offset`; for offset form a `v0` coordinate line;
/// then one line per generator: its coordinates followed by its bound.
Gap read_gap(std::istream& in);
Gap read_gap_file(const std::string& path);

}  // namespace sumgrowth
