#include "bdris/attack.hpp"

#include <cmath>
#include <stdexcept>

namespace bdris {

namespace {

void check_inputs(const CMat& bs_ris, const std::vector<CVec>& ris_user,
                  const std::vector<double>& weights) {
  if (ris_user.empty()) throw std::invalid_argument("aligned attack: no users");
  if (weights.size() != ris_user.size())
    throw std::invalid_argument("aligned attack: one weight per user required");
  for (const auto& g : ris_user)
    if (g.size() != bs_ris.rows())
      throw std::invalid_argument("aligned attack: channel dimensions disagree");
  double user_norm = 0.0;
  for (const auto& g : ris_user) user_norm = std::max(user_norm, g.norm());
  if (bs_ris.norm() == 0.0 || user_norm == 0.0)
    throw std::domain_error("aligned attack: zero channel estimate");
}

// Symmetric matrix from the reduced coefficient vector of one block,
// i.e. unvec(D_g theta_g) without forming the duplication matrix.
CMat reduced_to_symmetric(const CVec& reduced, Eigen::Index n) {
  return unvech(reduced, n);
}

}  // namespace

std::vector<int> make_group_sizes(Architecture arch, int dim, int group_size) {
  if (dim < 1) throw std::invalid_argument("reflection dimension must be >= 1");
  switch (arch) {
    case Architecture::fully:
      return {dim};
    case Architecture::single:
      return std::vector<int>(dim, 1);
    case Architecture::group: {
      if (group_size < 1 || dim % group_size != 0)
        throw std::invalid_argument("D divisible by D_g violated for group-connected surface");
      return std::vector<int>(dim / group_size, group_size);
    }
  }
  throw std::invalid_argument("unknown architecture");
}

void validate_reflection(const ReflectionConfig& cfg, double tol) {
  const Eigen::Index d = cfg.dim;
  if (cfg.theta.rows() != d || cfg.theta.cols() != d)
    throw std::invalid_argument("reflection: matrix does not match dim");
  int total = 0;
  for (int s : cfg.group_sizes) total += s;
  if (total != cfg.dim)
    throw std::invalid_argument("reflection: group sizes do not sum to dim");

  // off-block entries must vanish
  Eigen::Index offset = 0;
  for (int s : cfg.group_sizes) {
    const auto block = cfg.theta.block(offset, offset, s, s);
    if ((block - block.transpose()).norm() > tol)
      throw std::invalid_argument("reflection: block not symmetric within tolerance");
    if ((block * block.adjoint() - CMat::Identity(s, s)).norm() > tol)
      throw std::invalid_argument("reflection: block not unitary within tolerance");
    offset += s;
  }
  CMat off = cfg.theta;
  offset = 0;
  for (int s : cfg.group_sizes) {
    off.block(offset, offset, s, s).setZero();
    offset += s;
  }
  if (off.norm() > tol)
    throw std::invalid_argument("reflection: nonzero entries outside the blocks");
}

ReflectionConfig random_reflection(Architecture arch, int dim, int group_size,
                                   RngStream& rng) {
  ReflectionConfig cfg;
  cfg.architecture = arch;
  cfg.dim = dim;
  cfg.group_sizes = make_group_sizes(arch, dim, group_size);
  cfg.theta = CMat::Zero(dim, dim);

  Eigen::Index offset = 0;
  for (int s : cfg.group_sizes) {
    if (arch == Architecture::single) {
      cfg.theta(offset, offset) = rng.next_phase();
    } else {
      CMat draw(s, s);
      for (Eigen::Index j = 0; j < s; ++j)
        for (Eigen::Index i = 0; i < s; ++i) draw(i, j) = rng.next_cgauss();
      cfg.theta.block(offset, offset, s, s) =
          project_symmetric_unitary(symmetrize(draw));
    }
    offset += s;
  }
  return cfg;
}

double interference_objective(const CMat& theta, const CMat& bs_ris,
                              const std::vector<CVec>& ris_user,
                              const std::vector<double>& weights) {
  double total = 0.0;
  for (size_t i = 0; i < ris_user.size(); ++i)
    total += weights[i] * (ris_user[i].adjoint() * theta * bs_ris).squaredNorm();
  return total;
}

ReflectionConfig aligned_fully_connected(const CMat& bs_ris,
                                         const std::vector<CVec>& ris_user,
                                         const std::vector<double>& weights) {
  check_inputs(bs_ris, ris_user, weights);
  const Eigen::Index d = bs_ris.rows(), m = bs_ris.cols();
  const Eigen::Index users = Eigen::Index(ris_user.size());

  // Gram matrix of the compressed interference stack, assembled from M x M
  // blocks instead of the D^2-column stack itself. With S_i = G^T (x) g_i^H
  // and the duplication map D, the (i,k) block of (S D)(S D)^H is
  //   (g_i^H g_k) conj(G^H G) + (G^T g_k)(g_i^H conj(G))
  //     - G^T diag(conj(g_i) o g_k) conj(G),
  // which follows from D D^T vec(A) = vec(A + A^T - diag A).
  const CMat gram_g_conj = (bs_ris.adjoint() * bs_ris).conjugate();
  CMat gram(users * m, users * m);
  for (Eigen::Index i = 0; i < users; ++i) {
    for (Eigen::Index k = i; k < users; ++k) {
      const Complex gik = ris_user[i].adjoint() * ris_user[k];
      const CMat cross = (bs_ris.transpose() * ris_user[k]) *
                         (ris_user[i].adjoint() * bs_ris.conjugate());
      const CVec had = ris_user[i].conjugate().cwiseProduct(ris_user[k]);
      const CMat diag_term = bs_ris.transpose() * had.asDiagonal() * bs_ris.conjugate();
      const double w = std::sqrt(weights[i] * weights[k]);
      gram.block(i * m, k * m, m, m) = w * (gik * gram_g_conj + cross - diag_term);
      if (k != i)
        gram.block(k * m, i * m, m, m) = gram.block(i * m, k * m, m, m).adjoint();
    }
  }

  Eigen::SelfAdjointEigenSolver<CMat> es(gram);
  const double lambda = es.eigenvalues()(users * m - 1);
  if (!(lambda > 0.0))
    throw std::domain_error("aligned attack: interference matrix is degenerate");
  const double sigma = std::sqrt(lambda);
  const CVec left = es.eigenvectors().col(users * m - 1);

  // Right singular vector, reconstructed through
  //   S^H u = vec( sum_i sqrt(w_i) g_i u_i^T G^H ),
  // then compressed by D^T and rescaled to unit norm.
  CMat z = CMat::Zero(d, d);
  for (Eigen::Index i = 0; i < users; ++i)
    z += std::sqrt(weights[i]) * ris_user[i] *
         (left.segment(i * m, m).transpose() * bs_ris.adjoint());
  CVec reduced(d * (d + 1) / 2);
  for (Eigen::Index j = 0; j < d; ++j) {
    reduced(vech_index(d, j, j)) = z(j, j) / sigma;
    for (Eigen::Index i = j + 1; i < d; ++i)
      reduced(vech_index(d, i, j)) = (z(i, j) + z(j, i)) / sigma;
  }
  reduced.normalize();
  fix_global_phase(reduced);

  ReflectionConfig cfg;
  cfg.architecture = Architecture::fully;
  cfg.dim = int(d);
  cfg.group_sizes = {int(d)};
  cfg.theta = project_symmetric_unitary(reduced_to_symmetric(reduced, d));
  return cfg;
}

ReflectionConfig aligned_group_connected(const CMat& bs_ris,
                                         const std::vector<CVec>& ris_user,
                                         const std::vector<int>& group_sizes,
                                         const std::vector<double>& weights) {
  check_inputs(bs_ris, ris_user, weights);
  const Eigen::Index d = bs_ris.rows(), m = bs_ris.cols();
  const Eigen::Index users = Eigen::Index(ris_user.size());
  Eigen::Index total = 0, reduced_len = 0;
  for (int s : group_sizes) {
    total += s;
    reduced_len += Eigen::Index(s) * (s + 1) / 2;
  }
  if (total != d)
    throw std::invalid_argument("aligned attack: group sizes do not sum to D");

  // Stacked block-row matrix: rows are user blocks scaled by sqrt(w_i),
  // columns are per-group reduced coefficients. Column (p >= q) of group g
  // holds conj(g_ig)_p G_g(q,:) + conj(g_ig)_q G_g(p,:) (single term on the
  // diagonal), assembled directly in compressed form.
  CMat stacked = CMat::Zero(users * m, reduced_len);
  Eigen::Index col0 = 0, row_off = 0;
  for (size_t g = 0; g < group_sizes.size(); ++g) {
    const Eigen::Index s = group_sizes[g];
    const auto sub = bs_ris.middleRows(row_off, s);
    for (Eigen::Index i = 0; i < users; ++i) {
      const double w = std::sqrt(weights[i]);
      const auto gi = ris_user[i].segment(row_off, s);
      Eigen::Index col = col0;
      for (Eigen::Index q = 0; q < s; ++q) {
        stacked.block(i * m, col, m, 1).noalias() =
            w * std::conj(gi(q)) * sub.row(q).transpose();
        ++col;
        for (Eigen::Index p = q + 1; p < s; ++p) {
          stacked.block(i * m, col, m, 1).noalias() =
              w * (std::conj(gi(p)) * sub.row(q).transpose() +
                   std::conj(gi(q)) * sub.row(p).transpose());
          ++col;
        }
      }
    }
    col0 += s * (s + 1) / 2;
    row_off += s;
  }

  const CVec coeffs = dominant_right_singular_vector(stacked);

  ReflectionConfig cfg;
  cfg.architecture = Architecture::group;
  cfg.dim = int(d);
  cfg.group_sizes = group_sizes;
  cfg.theta = CMat::Zero(d, d);
  Eigen::Index off = 0, slice0 = 0;
  for (int s : group_sizes) {
    const CVec slice = coeffs.segment(slice0, Eigen::Index(s) * (s + 1) / 2);
    cfg.theta.block(off, off, s, s) =
        project_symmetric_unitary(reduced_to_symmetric(slice, s));
    off += s;
    slice0 += Eigen::Index(s) * (s + 1) / 2;
  }
  return cfg;
}

ReflectionConfig aligned_single_connected(const CMat& bs_ris,
                                          const std::vector<CVec>& ris_user,
                                          const std::vector<double>& weights) {
  check_inputs(bs_ris, ris_user, weights);
  const Eigen::Index d = bs_ris.rows();

  // Restricted to Theta = diag(x), the objective is x^H Q x with
  // Q = conj(G G^H) o (sum_i w_i g_i g_i^H): Hermitian PSD by construction.
  CMat user_part = CMat::Zero(d, d);
  for (size_t i = 0; i < ris_user.size(); ++i)
    user_part += weights[i] * (ris_user[i] * ris_user[i].adjoint());
  const CMat q = (bs_ris * bs_ris.adjoint()).conjugate().cwiseProduct(user_part);

  Eigen::SelfAdjointEigenSolver<CMat> es(q);
  if (!(es.eigenvalues()(d - 1) > 0.0))
    throw std::domain_error("aligned attack: interference matrix is degenerate");
  CVec lead = es.eigenvectors().col(d - 1);
  fix_global_phase(lead);

  ReflectionConfig cfg;
  cfg.architecture = Architecture::single;
  cfg.dim = int(d);
  cfg.group_sizes.assign(d, 1);
  cfg.theta = CMat::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double mag = std::abs(lead(k));
    cfg.theta(k, k) = mag > 1e-300 ? lead(k) / mag : Complex(1.0, 0.0);
  }
  return cfg;
}

ReflectionConfig aligned_attack(Architecture arch, const CMat& bs_ris,
                                const std::vector<CVec>& ris_user, int group_size,
                                const std::vector<double>& weights) {
  switch (arch) {
    case Architecture::fully:
      return aligned_fully_connected(bs_ris, ris_user, weights);
    case Architecture::group:
      return aligned_group_connected(
          bs_ris, ris_user, make_group_sizes(arch, int(bs_ris.rows()), group_size),
          weights);
    case Architecture::single:
      return aligned_single_connected(bs_ris, ris_user, weights);
  }
  throw std::invalid_argument("unknown architecture");
}

}  // namespace bdris
