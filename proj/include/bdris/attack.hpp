#pragma once

#include <vector>

#include "bdris/linalg.hpp"
#include "bdris/rng.hpp"

namespace bdris {

enum class Architecture { single, group, fully };

/// A reflection matrix together with its circuit topology. The structural
/// constraints are: fully connected -> theta symmetric unitary; group
/// connected -> block diagonal with symmetric unitary blocks; single
/// connected -> diagonal with unit-modulus entries.
struct ReflectionConfig {
  Architecture architecture = Architecture::fully;
  int dim = 0;
  std::vector<int> group_sizes;  // [D] for fully, all ones for single
  CMat theta;
};

/// Group partition for an architecture: contiguous blocks of group_size for
/// the group-connected case. Throws when D is not divisible by group_size.
std::vector<int> make_group_sizes(Architecture arch, int dim, int group_size);

/// Checks the structural constraints at the given tolerance; throws
/// std::invalid_argument naming the first violation.
void validate_reflection(const ReflectionConfig& cfg, double tol = 1e-10);

/// Fresh random valid reflection coefficients: per (block of the)
/// architecture, a complex Gaussian draw is symmetrized and projected onto
/// the symmetric unitary set; single-connected surfaces draw independent
/// uniform phases.
ReflectionConfig random_reflection(Architecture arch, int dim, int group_size,
                                   RngStream& rng);

/// Reflection maximizing the weighted reflected power toward the users,
/// for a fully connected surface: the symmetry constraint is folded in
/// through the duplication matrix, the relaxed quadratic problem is solved
/// by the dominant right singular vector of the stacked weighted
/// interference matrix, and the result is projected back onto the symmetric
/// unitary set. Inputs are the attacker's channel estimates.
ReflectionConfig aligned_fully_connected(const CMat& bs_ris,
                                         const std::vector<CVec>& ris_user,
                                         const std::vector<double>& weights);

/// Group-connected variant: one reduced coefficient block per group, solved
/// jointly through the stacked block-row matrix, then projected per group.
ReflectionConfig aligned_group_connected(const CMat& bs_ris,
                                         const std::vector<CVec>& ris_user,
                                         const std::vector<int>& group_sizes,
                                         const std::vector<double>& weights);

/// Diagonal variant: the objective restricted to diagonal reflections is a
/// Hermitian quadratic form with a Hadamard structure; the dominant
/// eigenvector is projected entrywise to unit modulus. Non-iterative
/// counterpart of the relax-then-project pipeline above.
ReflectionConfig aligned_single_connected(const CMat& bs_ris,
                                          const std::vector<CVec>& ris_user,
                                          const std::vector<double>& weights);

/// Convenience dispatch on architecture.
ReflectionConfig aligned_attack(Architecture arch, const CMat& bs_ris,
                                const std::vector<CVec>& ris_user, int group_size,
                                const std::vector<double>& weights);

/// Weighted reflected power sum_i w_i ||g_i^H Theta G||^2 - the quantity the
/// aligned attacks maximize; exposed for evaluation and tests.
double interference_objective(const CMat& theta, const CMat& bs_ris,
                              const std::vector<CVec>& ris_user,
                              const std::vector<double>& weights);

}  // namespace bdris
