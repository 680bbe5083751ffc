#include "bdris/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bdris {

namespace {

constexpr double kSymmetryTol = 1e-10;   // input symmetry check, relative
constexpr double kClusterTol = 1e-8;     // singular values treated as equal
constexpr double kPhaseTol = 1e-12;      // "first nonzero" threshold

void require_square(const CMat& a, const char* who) {
  if (a.rows() != a.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

// Simultaneous diagonalization of two commuting real symmetric matrices.
// Diagonalizes X, then re-diagonalizes Y inside each eigenspace of X.
RMat diagonalize_commuting_pair(const RMat& x, const RMat& y, RVec& dx, RVec& dy) {
  const Eigen::Index m = x.rows();
  Eigen::SelfAdjointEigenSolver<RMat> es_x(x);
  RMat q = es_x.eigenvectors();
  const RVec lx = es_x.eigenvalues();
  Eigen::Index i = 0;
  while (i < m) {
    Eigen::Index j = i + 1;
    while (j < m && std::abs(lx(j) - lx(i)) < 1e-8 * std::max(1.0, std::abs(lx(i)))) ++j;
    if (j - i > 1) {
      RMat yb = q.middleCols(i, j - i).transpose() * y * q.middleCols(i, j - i);
      Eigen::SelfAdjointEigenSolver<RMat> es_y(RMat(0.5 * (yb + yb.transpose())));
      q.middleCols(i, j - i) = q.middleCols(i, j - i) * es_y.eigenvectors();
    }
    i = j;
  }
  dx = (q.transpose() * x * q).diagonal();
  dy = (q.transpose() * y * q).diagonal();
  return q;
}

// Unitary W with W W^T = C for a symmetric unitary block C. Real and
// imaginary parts of C are commuting real symmetric matrices, so they share
// an orthogonal eigenbasis; the eigenvalue pairs lie on the unit circle and
// half their phase gives W.
CMat symmetric_unitary_sqrt(const CMat& c) {
  RVec dx, dy;
  const RMat q = diagonalize_commuting_pair(c.real(), c.imag(), dx, dy);
  CVec half_phase(c.rows());
  for (Eigen::Index k = 0; k < c.rows(); ++k) {
    const double phi = std::atan2(dy(k), dx(k));
    half_phase(k) = std::polar(1.0, 0.5 * phi);
  }
  return q.cast<Complex>() * half_phase.asDiagonal();
}

}  // namespace

CMat symmetrize(const CMat& a) {
  require_square(a, "symmetrize");
  return 0.5 * (a + a.transpose());
}

TakagiDecomposition takagi(const CMat& s) {
  require_square(s, "takagi");
  const Eigen::Index n = s.rows();
  const double scale = s.norm();
  if ((s - s.transpose()).norm() > kSymmetryTol * std::max(scale, 1e-300))
    throw std::invalid_argument("takagi: input is not symmetric within tolerance");

  Eigen::BDCSVD<CMat> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const CMat& a = svd.matrixU();
  const RVec sigma = svd.singularValues();

  // For symmetric S = A Sigma B^H, the coupling C = A^H conj(B) is unitary
  // and block diagonal over groups of equal singular values; within a group
  // it is also symmetric. W = sqrt(C) block-wise turns A into Takagi vectors.
  const CMat coupling = a.adjoint() * svd.matrixV().conjugate();
  const double s1 = n > 0 ? sigma(0) : 0.0;
  const double gap_tol = kClusterTol * std::max(s1, 1.0);

  CMat w = CMat::Zero(n, n);
  Eigen::Index i = 0;
  while (i < n) {
    Eigen::Index j = i + 1;
    while (j < n && sigma(i) - sigma(j) <= gap_tol) ++j;
    const Eigen::Index m = j - i;
    if (sigma(i) <= 1e-14 * std::max(s1, 1.0)) {
      // Null space of S: vectors are free, keep the SVD basis.
      w.block(i, i, m, m).setIdentity();
    } else if (m == 1) {
      w(i, i) = std::sqrt(coupling(i, i));
    } else {
      CMat block = coupling.block(i, i, m, m);
      block = 0.5 * (block + block.transpose());
      w.block(i, i, m, m) = symmetric_unitary_sqrt(block);
    }
    i = j;
  }
  return {a * w, sigma};
}

CMat project_symmetric_unitary(const CMat& s) {
  const CMat u = takagi(s).takagi_vectors;
  CMat theta = u * u.transpose();
  return 0.5 * (theta + theta.transpose());
}

Eigen::Index vech_index(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  if (i < j) std::swap(i, j);
  return j * n + i - j * (j + 1) / 2;
}

RMat duplication_matrix(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("duplication_matrix: n must be >= 1");
  RMat d = RMat::Zero(n * n, n * (n + 1) / 2);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) d(j * n + i, vech_index(n, i, j)) = 1.0;
  return d;
}

CVec vec(const CMat& a) { return CMat(a).reshaped(); }

CMat unvec(const CVec& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols)
    throw std::invalid_argument("unvec: length " + std::to_string(v.size()) +
                                " does not match shape " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  return v.reshaped(rows, cols);
}

CVec vech(const CMat& a) {
  require_square(a, "vech");
  const Eigen::Index n = a.rows();
  CVec v(n * (n + 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = j; i < n; ++i) v(k++) = a(i, j);
  return v;
}

CMat unvech(const CVec& v, Eigen::Index n) {
  if (v.size() != n * (n + 1) / 2)
    throw std::invalid_argument("unvech: length does not match dimension");
  CMat a(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = j; i < n; ++i) a(i, j) = a(j, i) = v(vech_index(n, i, j));
  return a;
}

CVec vecd(const CMat& a) {
  require_square(a, "vecd");
  return a.diagonal();
}

void fix_global_phase(CVec& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double mag = std::abs(v(k));
    if (mag > kPhaseTol) {
      v *= std::conj(v(k)) / mag;
      v(k) = Complex(mag, 0.0);  // exact zero imaginary part on the pivot
      return;
    }
  }
}

std::pair<double, CVec> dominant_singular_pair(const CMat& a) {
  if (a.size() == 0 || a.norm() == 0.0)
    throw std::domain_error("dominant_singular_vector: input matrix is zero");
  const Eigen::Index rows = a.rows(), cols = a.cols();
  // Only the dominant pair is needed, so eigendecompose the Gram matrix of
  // the shorter side; accuracy of the top pair matches a full SVD.
  double sigma_top = 0.0;
  CVec v;
  if (rows < cols) {
    Eigen::SelfAdjointEigenSolver<CMat> es(CMat(a * a.adjoint()));
    sigma_top = std::sqrt(std::max(0.0, es.eigenvalues()(rows - 1)));
    if (sigma_top == 0.0)
      throw std::domain_error("dominant_singular_vector: input numerically zero");
    v = a.adjoint() * es.eigenvectors().col(rows - 1) / sigma_top;
  } else {
    Eigen::SelfAdjointEigenSolver<CMat> es(CMat(a.adjoint() * a));
    sigma_top = std::sqrt(std::max(0.0, es.eigenvalues()(cols - 1)));
    if (sigma_top == 0.0)
      throw std::domain_error("dominant_singular_vector: input numerically zero");
    v = es.eigenvectors().col(cols - 1);
  }
  v.normalize();
  fix_global_phase(v);
  return {sigma_top, v};
}

CVec dominant_right_singular_vector(const CMat& a) {
  return dominant_singular_pair(a).second;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace bdris
