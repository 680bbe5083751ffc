#pragma once

#include <Eigen/Dense>
#include <complex>

namespace bdris {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Symmetric part (A + A^T)/2 of a square matrix. Plain transpose, no
/// conjugation; the result is symmetric entry-by-entry by construction.
CMat symmetrize(const CMat& a);

/// Factorization S = U diag(values) U^T of a complex symmetric matrix,
/// with U unitary and values real, nonnegative, sorted descending.
struct TakagiDecomposition {
  CMat takagi_vectors;  // unitary U
  RVec takagi_values;   // descending, >= 0
};

/// Computes the Takagi factorization of a complex symmetric matrix via the
/// standard SVD followed by per-column phase alignment. Repeated singular
/// values (within 1e-8) are handled block-wise; for those blocks only the
/// reconstruction S = U diag(v) U^T is guaranteed, not vector uniqueness.
/// Throws std::invalid_argument if S is not square or not symmetric within
/// 1e-10 relative Frobenius norm.
TakagiDecomposition takagi(const CMat& s);

/// Nearest symmetric unitary matrix to S in Frobenius norm: U U^T with U the
/// Takagi vectors of S. Output satisfies Theta = Theta^T and
/// Theta Theta^H = I to well below 1e-10.
CMat project_symmetric_unitary(const CMat& s);

/// vech position of entry (i, j), 0-based, for an n x n symmetric matrix.
/// Arguments may be given in either order.
Eigen::Index vech_index(Eigen::Index n, Eigen::Index i, Eigen::Index j);

/// Duplication matrix D of shape n^2 x n(n+1)/2 with binary entries, defined
/// by vec(S) = D vech(S) for every symmetric S. Each row has exactly one 1.
/// Throws std::invalid_argument for n < 1.
RMat duplication_matrix(Eigen::Index n);

/// Column-stacking vectorization and its inverse.
CVec vec(const CMat& a);
CMat unvec(const CVec& v, Eigen::Index rows, Eigen::Index cols);

/// Half-vectorization: stacks the lower triangle (diagonal included) column
/// by column. Requires a square input.
CVec vech(const CMat& a);

/// Expands a half-vectorization back into the full symmetric n x n matrix,
/// i.e. unvec(D vech) without materializing D.
CMat unvech(const CVec& v, Eigen::Index n);

/// Diagonal of a square matrix as a column vector.
CVec vecd(const CMat& a);

/// Unit-norm right singular vector for the largest singular value, with a
/// deterministic phase: the first entry of non-negligible magnitude is made
/// real positive. Throws std::domain_error when A is identically zero.
/// For strongly rectangular inputs the computation runs on the Gram matrix
/// of the short side.
CVec dominant_right_singular_vector(const CMat& a);

/// Largest singular value together with the phase-fixed right singular
/// vector (same contract as dominant_right_singular_vector).
std::pair<double, CVec> dominant_singular_pair(const CMat& a);

/// Kronecker product.
CMat kron(const CMat& a, const CMat& b);

/// Applies the deterministic phase convention in place: the first entry with
/// magnitude above 1e-12 is rotated to be real positive.
void fix_global_phase(CVec& v);

}  // namespace bdris
