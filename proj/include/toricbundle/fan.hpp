#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricbundle/lattice.hpp"
#include "toricbundle/validation.hpp"

namespace toricbundle {

/// A cone given by indices into its fan's ray table. Generator order is the index order.
struct Cone {
  std::vector<std::size_t> ray_indices;

  std::size_t size() const noexcept { return ray_indices.size(); }
  friend bool operator==(const Cone&, const Cone&) = default;
};

/// Fan of a smooth complete toric variety: primitive rays plus simplicial maximal cones.
///
/// The constructor enforces structure only (dimensions, index ranges, distinct indices, every
/// maximal cone having `dim` rays). Geometric rules live in validate_fan.
class Fan {
 public:
  Fan() = default;
  Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<Cone> max_cones);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_rays() const noexcept { return rays_.size(); }
  std::size_t num_cones() const noexcept { return cones_.size(); }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const LatticeVector& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<Cone>& max_cones() const noexcept { return cones_; }
  const Cone& cone(std::size_t i) const { return cones_.at(i); }

  /// Generators of a maximal cone in its ray order.
  std::vector<LatticeVector> generators(std::size_t cone) const;

  /// Position of `ray` inside the generator list of `cone`, if present.
  std::optional<std::size_t> position_in_cone(std::size_t cone, std::size_t ray) const;

  /// Lowest-index maximal cone containing the ray.
  std::optional<std::size_t> home_cone(std::size_t ray) const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> cones_;
};

/// Rules: primitive_rays, unimodular_cones, facet_pairing, common_faces.
///
/// facet_pairing (each facet of a maximal cone lies in exactly two maximal cones) is necessary
/// for completeness of a pure smooth fan but not sufficient; completeness is not decided exactly.
/// common_faces checks that ray vectors and cones are distinct and that no maximal cone contains
/// an interior point of another, after which common faces are index-set intersections.
ValidationReport validate_fan(const Fan& fan);

/// Indices of rays common to both maximal cones, ascending.
std::vector<std::size_t> shared_rays(const Fan& fan, std::size_t sigma, std::size_t tau);

/// Fan of P^n: rays e_0 = -(e_1+...+e_n), e_1, ..., e_n; cone i omits ray i.
Fan projective_space(std::size_t n);

/// Fan of P(O + O(a_1) + ... + O(a_r)) over P^s, in Z^s x Z^r.
///
/// Ray order: v_0, v_1..v_s, e_0, e_1..e_r where v_0 = -v_1-...-v_s + a_1 e_1 + ... + a_r e_r and
/// e_0 = -e_1-...-e_r. Cone j*(r+1)+i omits v_j and e_i; its generators list the remaining v's
/// then the remaining e's. Cone 0 is Cone(v_1..v_s, e_1..e_r).
Fan kleinschmidt(std::size_t s, const std::vector<std::int64_t>& a);

}  // namespace toricbundle
