#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricbundle/kaneyama.hpp"
#include "toricbundle/liealg.hpp"

namespace toricbundle {

/// Lie algebra of the equivariant automorphism group, expressed in the frame of `base_cone`.
struct AutReport {
  std::size_t base_cone = 0;
  MatrixSubspace lie_algebra;
  /// Lie algebra of the parabolic attached to each ray, in the same frame.
  std::map<std::size_t, MatrixSubspace> per_ray;

  std::size_t dim() const noexcept { return lie_algebra.dim(); }
};

/// (<xi^sigma_1, v>, ..., <xi^sigma_r, v>) for a ray v of sigma. Throws InputError otherwise.
WeightVector ray_weight_vector(const KaneyamaData& data, std::size_t sigma, std::size_t ray);

/// Lie algebra of the parabolic of `ray` in the frame of `base`, computed through cone `via`:
/// C S C^{-1} with C = P(base, via) and S the pattern subspace of the ray's weights in `via`.
/// Intersected with the traceless matrices for SL.
MatrixSubspace parabolic_at_ray_via(const KaneyamaData& data, std::size_t base, std::size_t ray, std::size_t via);

/// parabolic_at_ray_via through the lowest-index maximal cone containing the ray.
MatrixSubspace parabolic_at_ray(const KaneyamaData& data, std::size_t base, std::size_t ray);

/// Intersection of all per-ray parabolic Lie algebras. Throws ValidationError for invalid data.
AutReport aut_lie_algebra(const KaneyamaData& data, std::size_t base);

/// Exact group-level test: for each ray, C^{-1} A C must respect the ray's zero pattern.
/// Throws SingularMatrix for singular A; returns false for SL data when det A != 1.
bool is_equivariant_automorphism(const KaneyamaData& data, std::size_t base, const QMatrix& a);

/// Ordered partition of {0, ..., r-1} into blocks; the block-diagonal matrices form a Levi subgroup.
using Partition = std::vector<std::vector<std::size_t>>;

/// Throws InputError unless the blocks are nonempty, disjoint and cover {0..r-1}.
void check_partition(const Partition& partition, std::size_t r);

/// Partition into singletons (the diagonal maximal torus).
Partition torus_partition(std::size_t r);

/// Whether the connected centre of the block Levi lies in the automorphism group: its Lie algebra
/// (block identities for GL, their traceless combinations for SL) lies in the Aut Lie algebra.
bool levi_reduction_check(const KaneyamaData& data, std::size_t base, const Partition& partition);

struct SplitVerdict {
  enum class Kind { Split, NotSplit, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<QMatrix> certificate;
  std::string reason;
};

std::string to_string(SplitVerdict::Kind kind);

struct SplitOptions {
  std::size_t attempts = 32;
  std::uint64_t seed = 0;
  std::int64_t coefficient_bound = 10;
};

/// Equivariant splitting via maximal torus containment in Aut. NotSplit when the Lie algebra is
/// too small to hold a maximal torus; otherwise samples integer combinations of its basis looking
/// for a regular semisimple element whose centralizer lies in it.
SplitVerdict split_check(const KaneyamaData& data, std::size_t base, const SplitOptions& options = {});

/// Re-checks a Split certificate: membership, squarefree characteristic polynomial and
/// centralizer containment (traceless part for SL).
bool verify_split_certificate(const KaneyamaData& data, std::size_t base, const QMatrix& x);

/// g0 in the base frame, g[c] in the diagonal frame of cone c.
struct MorphismWitness {
  QMatrix g0;
  std::vector<QMatrix> g;
};

/// Checks a morphism witness from `source` to `target`, both framed at `base`. Per cone sigma:
/// nonzero (g_sigma)_ij connect equal characters (target_i = source_j), and
/// g_sigma^{-1} P'(base,sigma)^{-1} g0 P(base,sigma) respects the source's patterns on sigma's rays.
bool verify_morphism_witness(const KaneyamaData& source, const KaneyamaData& target, std::size_t base,
                             const MorphismWitness& witness);

/// Reduction to the block Levi subgroup H of `partition` (singletons: the diagonal torus).
/// Per cone: alpha^{-1} diag(xi(t)) alpha lies in H for all t, beta_tau^{-1} P beta_sigma lies in
/// H, and t -> diag(xi(t)) beta alpha^{-1} diag(xi(t))^{-1} extends over the cone.
bool verify_reduction_witness(const KaneyamaData& data, const Partition& partition, const std::vector<QMatrix>& alpha,
                              const std::vector<QMatrix>& beta);

}  // namespace toricbundle
