#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "toricbundle/fan.hpp"
#include "toricbundle/lattice.hpp"
#include "toricbundle/matrix.hpp"
#include "toricbundle/validation.hpp"

namespace toricbundle {

enum class GroupKind { GL, SL };

/// Structure group G realized as GL(r) or SL(r) with the diagonal matrices as maximal torus.
struct GroupTag {
  GroupKind kind = GroupKind::GL;
  std::size_t rank = 1;

  friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

std::string to_string(GroupKind kind);

/// Invertible for GL, determinant one for SL, and of the tag's size.
bool in_group(const GroupTag& group, const QMatrix& m);

/// Torus-equivariant principal bundle in diagonal (Kaneyama) form.
///
/// xi(c) lists the r characters of the diagonal homomorphism attached to maximal cone c.
/// transition(tau, sigma) is the value at the identity point of the transition function, oriented
/// so that the sigma-frame equals the tau-frame multiplied on the right by it.
/// Construction checks shapes only; validate() checks the mathematical conditions.
class KaneyamaData {
 public:
  KaneyamaData() = default;
  KaneyamaData(Fan fan, GroupTag group, std::vector<std::vector<Character>> xi, std::vector<QMatrix> transitions);

  const Fan& fan() const noexcept { return fan_; }
  const GroupTag& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return group_.rank; }
  std::size_t num_cones() const noexcept { return fan_.num_cones(); }

  const std::vector<Character>& xi(std::size_t cone) const { return xi_.at(cone); }
  const QMatrix& transition(std::size_t tau, std::size_t sigma) const;

  const std::vector<std::vector<Character>>& all_xi() const noexcept { return xi_; }
  /// Indexed tau * num_cones() + sigma.
  const std::vector<QMatrix>& all_transitions() const noexcept { return trans_; }

  friend bool operator==(const KaneyamaData&, const KaneyamaData&) = default;

 private:
  Fan fan_;
  GroupTag group_;
  std::vector<std::vector<Character>> xi_;
  std::vector<QMatrix> trans_;
};

/// Rules: group_membership, multiset_condition, support_condition, identity_diagonal, cocycle.
ValidationReport validate(const KaneyamaData& data);

/// Whether t -> xi^tau(t) A xi^sigma(t)^{-1} is regular on the overlap: every nonzero A_ij needs
/// <xi^tau_i - xi^sigma_j, v> >= 0 on every shared ray.
bool extends_on_overlap(const KaneyamaData& data, std::size_t tau, std::size_t sigma, const QMatrix& a);

/// Frame bundle of the tangent bundle: dual-basis characters and change-of-frame transitions
/// P(tau, sigma)_ij = <u_i(tau), v_j(sigma)>. Throws ValidationError for an invalid fan.
KaneyamaData tangent_frame_data(const Fan& fan);

/// Equivariantly split data from a map m: ray -> Z^r, with trivial transitions.
/// xi^sigma_i is the character taking value m(ray)_i on each generator of sigma.
KaneyamaData split_data(const Fan& fan, const std::vector<std::vector<std::int64_t>>& m, const GroupTag& group);

struct IdentityEmbedding {};

/// GL(r) or SL(r) into GL(target_rank): A occupies rows/columns `positions`, the remaining
/// diagonal slots carry 1 with the constant characters `fixed` (in ascending slot order).
struct BlockEmbedding {
  std::size_t target_rank = 0;
  std::vector<std::size_t> positions;
  std::vector<Character> fixed;
};

/// A -> diag(A, det(A)^{-1}) into SL(r+1).
struct DeterminantBalancing {};

using Embedding = std::variant<IdentityEmbedding, BlockEmbedding, DeterminantBalancing>;

KaneyamaData extend_structure_group(const KaneyamaData& data, const Embedding& embedding);

/// Per-cone permutation eta and change of frame beta. eta[c][i] is the new slot of character i.
struct EquivalenceWitness {
  std::vector<std::vector<std::size_t>> eta;
  std::vector<QMatrix> beta;
};

/// Permutes characters by eta and conjugates transitions to beta_tau^{-1} P beta_sigma.
/// Throws ValidationError naming the cone, entry and ray if a beta violates its support rule.
KaneyamaData apply_equivalence_witness(const KaneyamaData& data, const EquivalenceWitness& witness);

/// apply_equivalence_witness(data, witness) == target, false if the witness is rejected.
bool verify_equivalence_witness(const KaneyamaData& data, const KaneyamaData& target,
                                const EquivalenceWitness& witness);

/// Fills in all ordered transitions from a connected spanning set using the cocycle rule.
/// Throws ValidationError if supplied entries contradict each other or leave cones unreachable.
std::vector<QMatrix> complete_transitions(std::size_t num_cones, std::size_t rank,
                                          const std::map<std::pair<std::size_t, std::size_t>, QMatrix>& given);

}  // namespace toricbundle
