#include "toricbundle/analysis.hpp"

#include <random>
#include <set>

#include "toricbundle/polynomial.hpp"

namespace toricbundle {

WeightVector ray_weight_vector(const KaneyamaData& data, std::size_t sigma, std::size_t ray) {
  if (sigma >= data.num_cones()) throw InputError("cone index out of range");
  if (!data.fan().position_in_cone(sigma, ray)) {
    throw InputError("ray " + std::to_string(ray) + " is not a ray of cone " + std::to_string(sigma));
  }
  WeightVector w;
  for (const auto& u : data.xi(sigma)) w.weights.push_back(pairing(u, data.fan().ray(ray)));
  return w;
}

MatrixSubspace parabolic_at_ray_via(const KaneyamaData& data, std::size_t base, std::size_t ray, std::size_t via) {
  const WeightVector w = ray_weight_vector(data, via, ray);
  MatrixSubspace s = pattern_subspace(parabolic_pattern(w));
  if (via != base) s = conjugate_subspace(s, data.transition(base, via));
  if (data.group().kind == GroupKind::SL) s = trace_zero_restrict(s);
  return s;
}

MatrixSubspace parabolic_at_ray(const KaneyamaData& data, std::size_t base, std::size_t ray) {
  if (ray >= data.fan().num_rays()) throw InputError("ray index out of range");
  const auto home = data.fan().home_cone(ray);
  if (!home) throw InputError("ray " + std::to_string(ray) + " lies in no maximal cone");
  return parabolic_at_ray_via(data, base, ray, *home);
}

AutReport aut_lie_algebra(const KaneyamaData& data, std::size_t base) {
  if (base >= data.num_cones()) throw InputError("base cone index out of range");
  const ValidationReport report = validate(data);
  if (!report.valid()) throw ValidationError("invalid data: " + report.first_failure()->detail);
  AutReport out;
  out.base_cone = base;
  const std::size_t r = data.rank();
  out.lie_algebra = data.group().kind == GroupKind::SL ? trace_zero_restrict(MatrixSubspace::full(r))
                                                       : MatrixSubspace::full(r);
  for (std::size_t ray = 0; ray < data.fan().num_rays(); ++ray) {
    MatrixSubspace p = parabolic_at_ray(data, base, ray);
    out.lie_algebra = intersect_subspaces(out.lie_algebra, p);
    out.per_ray.emplace(ray, std::move(p));
  }
  return out;
}

bool is_equivariant_automorphism(const KaneyamaData& data, std::size_t base, const QMatrix& a) {
  const std::size_t r = data.rank();
  if (a.rows() != r || a.cols() != r) throw DimensionMismatch("matrix is not rank x rank");
  const Rational det = determinant(a);
  if (det == 0) throw SingularMatrix("candidate automorphism is singular");
  if (data.group().kind == GroupKind::SL && det != 1) return false;
  for (std::size_t ray = 0; ray < data.fan().num_rays(); ++ray) {
    const auto home = data.fan().home_cone(ray);
    if (!home) throw InputError("ray " + std::to_string(ray) + " lies in no maximal cone");
    const QMatrix& c = data.transition(base, *home);
    const QMatrix local = rational_inverse(c) * a * c;
    if (!parabolic_pattern(ray_weight_vector(data, *home, ray)).admits(local)) return false;
  }
  return true;
}

void check_partition(const Partition& partition, std::size_t r) {
  std::vector<bool> seen(r, false);
  std::size_t count = 0;
  for (const auto& block : partition) {
    if (block.empty()) throw InputError("partition has an empty block");
    for (auto i : block) {
      if (i >= r) throw InputError("partition index " + std::to_string(i) + " out of range");
      if (seen[i]) throw InputError("partition repeats index " + std::to_string(i));
      seen[i] = true;
      ++count;
    }
  }
  if (count != r) throw InputError("partition does not cover every index");
}

Partition torus_partition(std::size_t r) {
  Partition p;
  for (std::size_t i = 0; i < r; ++i) p.push_back({i});
  return p;
}

namespace {

QMatrix block_identity(std::size_t r, const std::vector<std::size_t>& block) {
  QMatrix e(r, r);
  for (auto i : block) e(i, i) = 1;
  return e;
}

ZeroPattern levi_pattern(const Partition& partition, std::size_t r) {
  std::vector<std::size_t> block_of(r);
  for (std::size_t b = 0; b < partition.size(); ++b)
    for (auto i : partition[b]) block_of[i] = b;
  ZeroPattern p(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) p.set(i, j, block_of[i] == block_of[j]);
  return p;
}

// Lie algebra of the connected centre of the block Levi subgroup, as spanning matrices.
std::vector<QMatrix> levi_centre(const Partition& partition, std::size_t r, GroupKind kind) {
  std::vector<QMatrix> gens;
  if (kind == GroupKind::GL) {
    for (const auto& block : partition) gens.push_back(block_identity(r, block));
    return gens;
  }
  for (std::size_t b = 0; b + 1 < partition.size(); ++b) {
    const Rational next_size(partition[b + 1].size());
    const Rational this_size(partition[b].size());
    gens.push_back(next_size * block_identity(r, partition[b]) - this_size * block_identity(r, partition[b + 1]));
  }
  return gens;
}

bool certificate_holds(const MatrixSubspace& lie, GroupKind kind, const QMatrix& x) {
  if (!lie.contains(x)) return false;
  if (!is_squarefree(characteristic_polynomial(x))) return false;
  MatrixSubspace c = centralizer(x);
  if (kind == GroupKind::SL) c = trace_zero_restrict(c);
  return lie.contains(c);
}

// nonzero m_ij need <xi_i - xi_j, v> >= 0 on every generator of the cone.
bool extends_over_cone(const KaneyamaData& data, std::size_t cone, const QMatrix& m) {
  for (auto ray : data.fan().cone(cone).ray_indices) {
    if (!parabolic_pattern(ray_weight_vector(data, cone, ray)).admits(m)) return false;
  }
  return true;
}

}  // namespace

bool levi_reduction_check(const KaneyamaData& data, std::size_t base, const Partition& partition) {
  check_partition(partition, data.rank());
  const AutReport aut = aut_lie_algebra(data, base);
  for (const auto& z : levi_centre(partition, data.rank(), data.group().kind))
    if (!aut.lie_algebra.contains(z)) return false;
  return true;
}

std::string to_string(SplitVerdict::Kind kind) {
  switch (kind) {
    case SplitVerdict::Kind::Split: return "split";
    case SplitVerdict::Kind::NotSplit: return "not_split";
    case SplitVerdict::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

SplitVerdict split_check(const KaneyamaData& data, std::size_t base, const SplitOptions& options) {
  const AutReport aut = aut_lie_algebra(data, base);
  const std::size_t r = data.rank();
  const GroupKind kind = data.group().kind;
  const std::size_t torus_dim = kind == GroupKind::GL ? r : r - 1;
  SplitVerdict verdict;
  if (aut.dim() < torus_dim) {
    verdict.kind = SplitVerdict::Kind::NotSplit;
    verdict.reason = "automorphism Lie algebra has dimension " + std::to_string(aut.dim()) +
                     ", below the maximal torus dimension " + std::to_string(torus_dim);
    return verdict;
  }
  const auto basis = aut.lie_algebra.basis();
  std::mt19937_64 rng(options.seed);
  const auto span = static_cast<std::uint64_t>(2 * options.coefficient_bound + 1);
  for (std::size_t attempt = 0; attempt < options.attempts; ++attempt) {
    QMatrix x(r, r);
    for (const auto& b : basis) {
      const auto coeff = static_cast<std::int64_t>(rng() % span) - options.coefficient_bound;
      x = x + Rational(coeff) * b;
    }
    if (certificate_holds(aut.lie_algebra, kind, x)) {
      verdict.kind = SplitVerdict::Kind::Split;
      verdict.certificate = std::move(x);
      verdict.reason = "regular semisimple element with centralizer inside the automorphism Lie algebra";
      return verdict;
    }
  }
  verdict.kind = SplitVerdict::Kind::Unknown;
  verdict.reason = "no regular semisimple certificate found in " + std::to_string(options.attempts) + " attempts";
  return verdict;
}

bool verify_split_certificate(const KaneyamaData& data, std::size_t base, const QMatrix& x) {
  if (x.rows() != data.rank() || x.cols() != data.rank()) throw DimensionMismatch("certificate is not rank x rank");
  return certificate_holds(aut_lie_algebra(data, base).lie_algebra, data.group().kind, x);
}

bool verify_morphism_witness(const KaneyamaData& source, const KaneyamaData& target, std::size_t base,
                             const MorphismWitness& witness) {
  if (!(source.fan() == target.fan()) || source.group() != target.group()) {
    throw DimensionMismatch("morphism witness needs data on the same fan with the same group");
  }
  const std::size_t k = source.num_cones();
  const std::size_t r = source.rank();
  if (base >= k) throw InputError("base cone index out of range");
  if (witness.g.size() != k) throw DimensionMismatch("morphism witness needs one g per maximal cone");
  if (witness.g0.rows() != r || witness.g0.cols() != r) throw DimensionMismatch("g0 is not rank x rank");
  if (!in_group(source.group(), witness.g0)) return false;
  for (std::size_t c = 0; c < k; ++c) {
    const QMatrix& g = witness.g[c];
    if (g.rows() != r || g.cols() != r) throw DimensionMismatch("g of a cone is not rank x rank");
    if (!in_group(source.group(), g)) return false;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (g(i, j) != 0 && target.xi(c)[i] != source.xi(c)[j]) return false;
    const QMatrix local = rational_inverse(g) * rational_inverse(target.transition(base, c)) * witness.g0 *
                          source.transition(base, c);
    if (!extends_over_cone(source, c, local)) return false;
  }
  return true;
}

bool verify_reduction_witness(const KaneyamaData& data, const Partition& partition, const std::vector<QMatrix>& alpha,
                              const std::vector<QMatrix>& beta) {
  const std::size_t k = data.num_cones();
  const std::size_t r = data.rank();
  check_partition(partition, r);
  if (alpha.size() != k || beta.size() != k) throw DimensionMismatch("reduction witness needs one matrix per cone");
  for (std::size_t c = 0; c < k; ++c) {
    if (alpha[c].rows() != r || alpha[c].cols() != r || beta[c].rows() != r || beta[c].cols() != r) {
      throw DimensionMismatch("reduction witness matrix is not rank x rank");
    }
    if (!in_group(data.group(), alpha[c]) || !in_group(data.group(), beta[c])) return false;
  }
  const ZeroPattern h = levi_pattern(partition, r);
  std::vector<QMatrix> beta_inv(k);
  for (std::size_t c = 0; c < k; ++c) {
    const QMatrix alpha_inv = rational_inverse(alpha[c]);
    // diag(xi(t)) is a combination of the projectors onto equal-character slots with linearly
    // independent coefficients, so membership for all t is membership of each conjugated projector.
    std::set<Character> distinct(data.xi(c).begin(), data.xi(c).end());
    for (const auto& chi : distinct) {
      QMatrix proj(r, r);
      for (std::size_t i = 0; i < r; ++i)
        if (data.xi(c)[i] == chi) proj(i, i) = 1;
      if (!h.admits(alpha_inv * proj * alpha[c])) return false;
    }
    if (!extends_over_cone(data, c, beta[c] * alpha_inv)) return false;
    beta_inv[c] = rational_inverse(beta[c]);
  }
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t s = 0; s < k; ++s)
      if (!h.admits(beta_inv[t] * data.transition(t, s) * beta[s])) return false;
  return true;
}

}  // namespace toricbundle
