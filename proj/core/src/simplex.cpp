#include "cosmo/simplex.hpp"

#include <stdexcept>

namespace cosmo {

void LinearSystem::add_equality(std::vector<Rational> row, Rational rhs) {
  if (row.size() != variables) throw std::invalid_argument("constraint width mismatch");
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_inequality(std::vector<Rational> row, Rational rhs) {
  if (row.size() != variables) throw std::invalid_argument("constraint width mismatch");
  ge_rows.push_back(std::move(row));
  ge_rhs.push_back(std::move(rhs));
}

bool LinearSystem::satisfied_by(const std::vector<Rational>& x) const {
  if (x.size() != variables) return false;
  auto dot = [&](const std::vector<Rational>& row) {
    Rational s(0);
    for (std::size_t j = 0; j < variables; ++j) s += row[j] * x[j];
    return s;
  };
  for (std::size_t i = 0; i < eq_rows.size(); ++i) {
    if (dot(eq_rows[i]) != eq_rhs[i]) return false;
  }
  for (std::size_t i = 0; i < ge_rows.size(); ++i) {
    if (dot(ge_rows[i]) < ge_rhs[i]) return false;
  }
  return true;
}

namespace {

// Dense tableau for  A y = b, y >= 0, b >= 0, with one artificial per row.
// Column layout: [x+ (d) | x- (d) | surplus (ge rows) | artificial (rows)].
class Phase1Tableau {
 public:
  explicit Phase1Tableau(const LinearSystem& sys)
      : d_(sys.variables),
        rows_(sys.eq_rows.size() + sys.ge_rows.size()),
        surplus_(sys.ge_rows.size()),
        cols_(2 * d_ + surplus_ + rows_),
        a_(rows_, std::vector<Rational>(cols_)),
        b_(rows_),
        basis_(rows_),
        reduced_(cols_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool is_eq = i < sys.eq_rows.size();
      const auto& row = is_eq ? sys.eq_rows[i] : sys.ge_rows[i - sys.eq_rows.size()];
      Rational rhs = is_eq ? sys.eq_rhs[i] : sys.ge_rhs[i - sys.eq_rows.size()];
      const int sign = rhs < 0 ? -1 : 1;
      for (std::size_t j = 0; j < d_; ++j) {
        if (row[j] == 0) continue;
        a_[i][j] = sign * row[j];
        a_[i][d_ + j] = -sign * row[j];
      }
      if (!is_eq) a_[i][2 * d_ + (i - sys.eq_rows.size())] = -sign;
      a_[i][artificial(i)] = 1;
      b_[i] = sign * rhs;
      basis_[i] = artificial(i);
    }
    // Phase-1 objective: minimize the sum of artificials.
    for (std::size_t j = 0; j < artificial(0); ++j) {
      Rational s(0);
      for (std::size_t i = 0; i < rows_; ++i) s -= a_[i][j];
      reduced_[j] = s;
    }
    for (std::size_t i = 0; i < rows_; ++i) objective_ += b_[i];
  }

  // Runs to optimality; returns the pivot count.
  std::size_t solve() {
    std::size_t pivots = 0;
    while (objective_ > 0) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) break;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) {
        throw std::logic_error("phase-1 simplex reported an unbounded direction");
      }
      pivot(leave, enter);
      ++pivots;
    }
    return pivots;
  }

  bool feasible() const { return objective_ == 0; }

  std::vector<Rational> point() const {
    std::vector<Rational> y(cols_);
    for (std::size_t i = 0; i < rows_; ++i) y[basis_[i]] = b_[i];
    std::vector<Rational> x(d_);
    for (std::size_t j = 0; j < d_; ++j) x[j] = y[j] - y[d_ + j];
    return x;
  }

 private:
  std::size_t artificial(std::size_t i) const { return 2 * d_ + surplus_ + i; }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = a_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (prow[j] == 0) continue;
      prow[j] *= inv;
      support.push_back(j);
    }
    b_[r] *= inv;
    Rational factor;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      factor = a_[i][c];
      for (std::size_t j : support) a_[i][j] -= factor * prow[j];
      b_[i] -= factor * b_[r];
    }
    if (reduced_[c] != 0) {
      factor = reduced_[c];
      for (std::size_t j : support) reduced_[j] -= factor * prow[j];
      objective_ += factor * b_[r];
    }
    basis_[r] = c;
  }

  std::size_t d_;
  std::size_t rows_;
  std::size_t surplus_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational objective_{0};
};

}  // namespace

std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& system, SimplexStats* stats) {
  if (system.eq_rows.empty() && system.ge_rows.empty()) {
    return std::vector<Rational>(system.variables);
  }
  Phase1Tableau tableau(system);
  const std::size_t pivots = tableau.solve();
  if (stats) stats->pivots += pivots;
  if (!tableau.feasible()) return std::nullopt;
  return tableau.point();
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& input) {
  auto rows = input;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cosmo
