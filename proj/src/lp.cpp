#include "indexcap/lp.hpp"

#include <stdexcept>

namespace indexcap::lp {

namespace {

// Dictionary form: x_B = b - A x_N, z = z0 + c . x_N. Variable labels
// 0..cols-1 are the structural variables, cols..cols+rows-1 the slacks.
class Dictionary {
 public:
  Dictionary(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
             const std::vector<Rat>& c)
      : rows_(a.size()), cols_(c.size()), a_(a), b_(b), c_(c), z_(0) {
    basic_.resize(rows_);
    nonbasic_.resize(cols_);
    for (std::size_t j = 0; j < cols_; ++j) nonbasic_[j] = j;
    for (std::size_t i = 0; i < rows_; ++i) basic_[i] = cols_ + i;
  }

  Status solve(const Deadline& deadline) {
    while (true) {
      deadline.check("simplex");
      // Bland: entering variable has the smallest label among improving ones.
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (c_[j] > 0 && (enter == cols_ || nonbasic_[j] < nonbasic_[enter])) enter = j;
      }
      if (enter == cols_) return Status::Optimal;

      std::size_t leave = rows_;
      Rat best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (a_[i][enter] <= 0) continue;
        Rat ratio = b_[i] / a_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_) return Status::Unbounded;
      pivot(leave, enter);
    }
  }

  Result extract(Status status) const {
    Result out;
    out.status = status;
    out.objective = z_;
    out.primal.assign(cols_, Rat(0));
    out.dual.assign(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basic_[i] < cols_) out.primal[basic_[i]] = b_[i];
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      if (nonbasic_[j] >= cols_) out.dual[nonbasic_[j] - cols_] = -c_[j];
    }
    return out;
  }

 private:
  void pivot(std::size_t r, std::size_t e) {
    const Rat inv = 1 / a_[r][e];
    std::vector<Rat>& row = a_[r];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != e && row[j] != 0) row[j] *= inv;
    }
    row[e] = inv;
    b_[r] *= inv;

    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || a_[i][e] == 0) continue;
      const Rat factor = a_[i][e];
      std::vector<Rat>& target = a_[i];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != e && row[j] != 0) target[j] -= factor * row[j];
      }
      target[e] = -factor * inv;
      b_[i] -= factor * b_[r];
    }

    if (c_[e] != 0) {
      const Rat factor = c_[e];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != e && row[j] != 0) c_[j] -= factor * row[j];
      }
      c_[e] = -factor * inv;
      z_ += factor * b_[r];
    }
    std::swap(basic_[r], nonbasic_[e]);
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rat>> a_;
  std::vector<Rat> b_;
  std::vector<Rat> c_;
  Rat z_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
};

}  // namespace

Result maximize(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                const std::vector<Rat>& c, const Deadline& deadline) {
  if (a.size() != b.size()) throw std::invalid_argument("row count mismatch");
  for (const auto& row : a) {
    if (row.size() != c.size()) throw std::invalid_argument("ragged constraint matrix");
  }
  for (const auto& bi : b) {
    if (bi < 0) throw std::invalid_argument("right-hand side must be non-negative");
  }
  Dictionary dict(a, b, c);
  Status status = dict.solve(deadline);
  return dict.extract(status);
}

}  // namespace indexcap::lp
