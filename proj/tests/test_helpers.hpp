#pragma once

#include "bdris/linalg.hpp"
#include "bdris/rng.hpp"

namespace bdris::test {

inline CMat random_cmat(RngStream& rng, Eigen::Index rows, Eigen::Index cols) {
  CMat a(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = rng.next_cgauss();
  return a;
}

inline CVec random_cvec(RngStream& rng, Eigen::Index n) {
  CVec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.next_cgauss();
  return v;
}

inline CVec random_unit_vector(RngStream& rng, Eigen::Index n) {
  CVec v = random_cvec(rng, n);
  v.normalize();
  return v;
}

}  // namespace bdris::test
