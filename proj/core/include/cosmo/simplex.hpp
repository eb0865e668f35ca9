#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cosmo/rational.hpp"

namespace cosmo {

// A system of linear constraints over free (sign-unrestricted) rational
// variables:  eq_rows * x == eq_rhs,  ge_rows * x >= ge_rhs.
struct LinearSystem {
  std::size_t variables = 0;
  std::vector<std::vector<Rational>> eq_rows;
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> ge_rows;
  std::vector<Rational> ge_rhs;

  void add_equality(std::vector<Rational> row, Rational rhs);
  void add_inequality(std::vector<Rational> row, Rational rhs);
  bool satisfied_by(const std::vector<Rational>& x) const;
};

struct SimplexStats {
  std::size_t pivots = 0;
};

// Phase-1 simplex in exact arithmetic with Bland's smallest-index rule, so it
// terminates on every input. Returns a feasible point when one exists.
std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& system,
                                                         SimplexStats* stats = nullptr);

// Rank of an integer matrix by exact elimination.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace cosmo
