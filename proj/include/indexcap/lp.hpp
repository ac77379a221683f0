#pragma once

#include <vector>

#include "indexcap/limits.hpp"
#include "indexcap/rational.hpp"

namespace indexcap::lp {

enum class Status { Optimal, Unbounded };

struct Result {
  Status status = Status::Optimal;
  Rat objective;
  std::vector<Rat> primal;  // x, one per column
  std::vector<Rat> dual;    // one per row, >= 0
};

/// Exact primal simplex for
///
///   maximize c.x  subject to  A x <= b,  x >= 0,
///
/// with b >= 0 so the origin is a starting vertex. Bland's rule picks both the
/// entering and the leaving variable, which with exact arithmetic guarantees
/// termination. At optimality the duals satisfy A^T y >= c, y >= 0 and
/// b.y = c.x. Throws std::invalid_argument on ragged input or negative b.
Result maximize(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                const std::vector<Rat>& c, const Deadline& deadline = {});

}  // namespace indexcap::lp
