#pragma once

// The block Z-grading of gl_{m+n} and the Jordan pair read off its
// (1, -1) pieces via {x, y, z} = [[x, y], z].

#include <array>
#include <vector>

#include "jordan/structure.hpp"

namespace jordan {

struct GradedGL {
  RingPtr ring;
  std::size_t m = 0;
  std::size_t n = 0;
  ProductTensor bracket;  // on the row-major matrix units of M_{m+n}
  // indices of matrix units in L_{-1}, L_0, L_1
  std::array<std::vector<std::size_t>, 3> pieces;

  std::size_t k() const { return m + n; }
  int degree(std::size_t unit) const;  // of E_{unit / k, unit % k}
};

GradedGL make_graded_gl(std::size_t m, std::size_t n, const RingPtr& ring);  // BadDims

struct GradingReport {
  bool graded = true;
  bool antisymmetric = true;
  bool jacobi = true;
  std::string detail;
  bool passed() const { return graded && antisymmetric && jacobi; }
};
// Exhaustive over basis pairs (grading, antisymmetry) and triples (Jacobi).
GradingReport check_grading(const GradedGL& g);

// V+ = L_1 = M_{m,n} via E_{i, m+j}; V- = L_{-1} = M_{n,m} via E_{m+i, j}.
JordanPair pair_from_grading(const GradedGL& g);  // GradingViolation

}  // namespace jordan
