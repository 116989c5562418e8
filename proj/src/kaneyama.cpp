#include "toricbundle/kaneyama.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>

namespace toricbundle {

std::string to_string(GroupKind kind) { return kind == GroupKind::GL ? "GL" : "SL"; }

bool in_group(const GroupTag& group, const QMatrix& m) {
  if (m.rows() != group.rank || m.cols() != group.rank) return false;
  const Rational det = determinant(m);
  return group.kind == GroupKind::GL ? det != 0 : det == 1;
}

KaneyamaData::KaneyamaData(Fan fan, GroupTag group, std::vector<std::vector<Character>> xi,
                           std::vector<QMatrix> transitions)
    : fan_(std::move(fan)), group_(group), xi_(std::move(xi)), trans_(std::move(transitions)) {
  const std::size_t k = fan_.num_cones();
  const std::size_t r = group_.rank;
  if (r == 0) throw InputError("group rank must be positive");
  if (xi_.size() != k) {
    throw InputError("xi has " + std::to_string(xi_.size()) + " entries for " + std::to_string(k) + " maximal cones");
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (xi_[c].size() != r) throw InputError("xi of cone " + std::to_string(c) + " does not have rank-many characters");
    for (const auto& u : xi_[c])
      if (u.dim() != fan_.dim()) throw InputError("xi of cone " + std::to_string(c) + " has a character of wrong dimension");
  }
  if (trans_.size() != k * k) throw InputError("transitions must be given for every ordered pair of maximal cones");
  for (const auto& p : trans_)
    if (p.rows() != r || p.cols() != r) throw InputError("transition matrix is not rank x rank");
}

const QMatrix& KaneyamaData::transition(std::size_t tau, std::size_t sigma) const {
  if (tau >= num_cones() || sigma >= num_cones()) throw InputError("cone index out of range");
  return trans_[tau * num_cones() + sigma];
}

namespace {

std::string pair_name(std::size_t tau, std::size_t sigma) {
  return "(" + std::to_string(tau) + "," + std::to_string(sigma) + ")";
}

// First (ray, entry) at which a nonzero entry of `a` fails the pairing inequality between the
// row characters and column characters on the given rays.
struct SupportViolation {
  std::size_t row, col, ray;
  std::int64_t gap;
};

std::optional<SupportViolation> find_support_violation(const Fan& fan, const std::vector<std::size_t>& rays,
                                                      const std::vector<Character>& row_chars,
                                                      const std::vector<Character>& col_chars,
                                                      const QMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (auto g : rays) {
        const std::int64_t gap = pairing(row_chars[i] - col_chars[j], fan.ray(g));
        if (gap < 0) return SupportViolation{i, j, g, gap};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<std::int64_t>> restriction_vectors(const Fan& fan, const std::vector<Character>& chars,
                                                           const std::vector<std::size_t>& rays) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& u : chars) {
    std::vector<std::int64_t> row;
    for (auto g : rays) row.push_back(pairing(u, fan.ray(g)));
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ValidationReport validate(const KaneyamaData& data) {
  ValidationReport report;
  for (const char* rule : {"group_membership", "multiset_condition", "support_condition", "identity_diagonal", "cocycle"})
    report.rule(rule);

  const Fan& fan = data.fan();
  const std::size_t k = data.num_cones();
  const std::size_t r = data.rank();
  const QMatrix id = QMatrix::identity(r);

  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t s = 0; s < k; ++s) {
      const QMatrix& p = data.transition(t, s);
      const Rational det = determinant(p);
      if (det == 0) {
        report.fail("group_membership", "P" + pair_name(t, s) + " is singular");
      } else if (data.group().kind == GroupKind::SL && det != 1) {
        report.fail("group_membership", "P" + pair_name(t, s) + " has determinant " + to_string(det) + " in SL");
      }
    }
  }
  if (data.group().kind == GroupKind::SL) {
    for (std::size_t c = 0; c < k; ++c) {
      Character sum = Character::zero(fan.dim());
      for (const auto& u : data.xi(c)) sum = sum + u;
      if (sum != Character::zero(fan.dim())) {
        report.fail("group_membership", "characters of cone " + std::to_string(c) + " sum to " + to_string(sum) +
                                            ", not the trivial character");
      }
    }
  }

  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t s = t + 1; s < k; ++s) {
      const auto shared = shared_rays(fan, t, s);
      if (restriction_vectors(fan, data.xi(t), shared) != restriction_vectors(fan, data.xi(s), shared)) {
        report.fail("multiset_condition", "cones " + pair_name(t, s) +
                                              ": restrictions of the characters to the shared rays differ as multisets");
      }
    }
  }

  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t s = 0; s < k; ++s) {
      if (t == s) continue;
      const auto shared = shared_rays(fan, t, s);
      if (auto v = find_support_violation(fan, shared, data.xi(t), data.xi(s), data.transition(t, s))) {
        report.fail("support_condition", "P" + pair_name(t, s) + " entry (" + std::to_string(v->row) + "," +
                                             std::to_string(v->col) + ") is nonzero but <xi^tau_i - xi^sigma_j, v> = " +
                                             std::to_string(v->gap) + " on ray " + std::to_string(v->ray));
      }
    }
  }

  bool diagonal_ok = true;
  for (std::size_t c = 0; c < k; ++c) {
    if (data.transition(c, c) != id) {
      report.fail("identity_diagonal", "P" + pair_name(c, c) + " is not the identity");
      diagonal_ok = false;
    }
  }

  // With an identity diagonal, P(t,s) = P(t,0) P(0,s) for all pairs implies every triple; scan triples only
  // when that fails, so the report can name them.
  bool factored = diagonal_ok;
  for (std::size_t t = 0; t < k && factored; ++t)
    for (std::size_t s = 0; s < k && factored; ++s)
      factored = data.transition(t, 0) * data.transition(0, s) == data.transition(t, s);
  if (factored) return report;

  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t d = 0; d < k; ++d) {
        if (data.transition(t, s) * data.transition(s, d) * data.transition(d, t) != id) {
          report.fail("cocycle", "P(" + std::to_string(t) + "," + std::to_string(s) + ") P(" + std::to_string(s) + "," +
                                     std::to_string(d) + ") P(" + std::to_string(d) + "," + std::to_string(t) +
                                     ") is not the identity for the triple (" + std::to_string(t) + "," +
                                     std::to_string(s) + "," + std::to_string(d) + ")");
        }
      }
    }
  }
  return report;
}

bool extends_on_overlap(const KaneyamaData& data, std::size_t tau, std::size_t sigma, const QMatrix& a) {
  if (a.rows() != data.rank() || a.cols() != data.rank()) throw DimensionMismatch("matrix is not rank x rank");
  const auto shared = shared_rays(data.fan(), tau, sigma);
  return !find_support_violation(data.fan(), shared, data.xi(tau), data.xi(sigma), a);
}

KaneyamaData tangent_frame_data(const Fan& fan) {
  const ValidationReport report = validate_fan(fan);
  if (!report.valid()) throw ValidationError("invalid fan: " + report.first_failure()->detail);
  const std::size_t k = fan.num_cones();
  const std::size_t n = fan.dim();
  std::vector<std::vector<Character>> xi(k);
  for (std::size_t c = 0; c < k; ++c) xi[c] = dual_characters(fan.generators(c));
  std::vector<QMatrix> trans;
  trans.reserve(k * k);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t s = 0; s < k; ++s) {
      const auto gens = fan.generators(s);
      QMatrix p(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = pairing(xi[t][i], gens[j]);
      trans.push_back(std::move(p));
    }
  }
  return KaneyamaData(fan, GroupTag{GroupKind::GL, n}, std::move(xi), std::move(trans));
}

KaneyamaData split_data(const Fan& fan, const std::vector<std::vector<std::int64_t>>& m, const GroupTag& group) {
  const std::size_t r = group.rank;
  if (m.size() != fan.num_rays()) throw InputError("split data needs one weight tuple per ray");
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g].size() != r) throw InputError("weight tuple of ray " + std::to_string(g) + " does not have rank entries");
    if (group.kind == GroupKind::SL && std::accumulate(m[g].begin(), m[g].end(), std::int64_t{0}) != 0) {
      throw InputError("SL split data needs the weights of ray " + std::to_string(g) + " to sum to zero");
    }
  }
  const std::size_t k = fan.num_cones();
  std::vector<std::vector<Character>> xi(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto duals = dual_characters(fan.generators(c));
    const auto& idx = fan.cone(c).ray_indices;
    for (std::size_t i = 0; i < r; ++i) {
      Character u = Character::zero(fan.dim());
      for (std::size_t pos = 0; pos < idx.size(); ++pos) u = u + m[idx[pos]][i] * duals[pos];
      xi[c].push_back(std::move(u));
    }
  }
  std::vector<QMatrix> trans(k * k, QMatrix::identity(r));
  return KaneyamaData(fan, group, std::move(xi), std::move(trans));
}

namespace {

struct EmbeddingVisitor {
  const KaneyamaData& data;

  KaneyamaData operator()(const IdentityEmbedding&) const { return data; }

  KaneyamaData operator()(const DeterminantBalancing&) const {
    const std::size_t r = data.rank();
    const std::size_t k = data.num_cones();
    auto xi = data.all_xi();
    for (auto& chars : xi) {
      Character sum = Character::zero(data.fan().dim());
      for (const auto& u : chars) sum = sum + u;
      chars.push_back(-sum);
    }
    std::vector<QMatrix> trans;
    trans.reserve(k * k);
    for (const auto& p : data.all_transitions()) {
      QMatrix q(r + 1, r + 1);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) q(i, j) = p(i, j);
      q(r, r) = 1 / determinant(p);
      trans.push_back(std::move(q));
    }
    return KaneyamaData(data.fan(), GroupTag{GroupKind::SL, r + 1}, std::move(xi), std::move(trans));
  }

  KaneyamaData operator()(const BlockEmbedding& block) const {
    const std::size_t r = data.rank();
    const std::size_t target = block.target_rank;
    if (block.positions.size() != r) throw InputError("block embedding needs one position per source slot");
    if (target < r) throw InputError("block embedding target rank is smaller than the source rank");
    std::vector<bool> used(target, false);
    for (auto p : block.positions) {
      if (p >= target || used[p]) throw InputError("block embedding positions must be distinct and in range");
      used[p] = true;
    }
    std::vector<std::size_t> free_slots;
    for (std::size_t p = 0; p < target; ++p)
      if (!used[p]) free_slots.push_back(p);
    std::vector<Character> fixed = block.fixed;
    if (fixed.empty()) fixed.assign(free_slots.size(), Character::zero(data.fan().dim()));
    if (fixed.size() != free_slots.size()) throw InputError("block embedding needs one fixed character per free slot");
    for (const auto& u : fixed)
      if (u.dim() != data.fan().dim()) throw InputError("block embedding fixed character has wrong dimension");

    std::vector<std::vector<Character>> xi;
    for (const auto& chars : data.all_xi()) {
      std::vector<Character> out(target);
      for (std::size_t i = 0; i < r; ++i) out[block.positions[i]] = chars[i];
      for (std::size_t f = 0; f < free_slots.size(); ++f) out[free_slots[f]] = fixed[f];
      xi.push_back(std::move(out));
    }
    std::vector<QMatrix> trans;
    for (const auto& p : data.all_transitions()) {
      QMatrix q(target, target);
      for (auto f : free_slots) q(f, f) = 1;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) q(block.positions[i], block.positions[j]) = p(i, j);
      trans.push_back(std::move(q));
    }
    return KaneyamaData(data.fan(), GroupTag{GroupKind::GL, target}, std::move(xi), std::move(trans));
  }
};

bool is_permutation_of_range(const std::vector<std::size_t>& p, std::size_t r) {
  if (p.size() != r) return false;
  std::vector<bool> seen(r, false);
  for (auto x : p) {
    if (x >= r || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

KaneyamaData extend_structure_group(const KaneyamaData& data, const Embedding& embedding) {
  return std::visit(EmbeddingVisitor{data}, embedding);
}

KaneyamaData apply_equivalence_witness(const KaneyamaData& data, const EquivalenceWitness& witness) {
  const std::size_t k = data.num_cones();
  const std::size_t r = data.rank();
  if (witness.eta.size() != k || witness.beta.size() != k) throw InputError("witness must cover every maximal cone");
  std::vector<QMatrix> beta_inv(k);
  std::vector<std::vector<Character>> xi(k);
  for (std::size_t c = 0; c < k; ++c) {
    if (!is_permutation_of_range(witness.eta[c], r)) {
      throw InputError("eta of cone " + std::to_string(c) + " is not a permutation of the rank");
    }
    const QMatrix& b = witness.beta[c];
    if (b.rows() != r || b.cols() != r) throw DimensionMismatch("beta of cone " + std::to_string(c) + " has the wrong rank");
    if (!in_group(data.group(), b)) {
      throw ValidationError("beta of cone " + std::to_string(c) + " is not in " + to_string(data.group().kind));
    }
    xi[c].assign(r, Character{});
    for (std::size_t i = 0; i < r; ++i) xi[c][witness.eta[c][i]] = data.xi(c)[i];
    const auto& rays = data.fan().cone(c).ray_indices;
    if (auto v = find_support_violation(data.fan(), rays, data.xi(c), xi[c], b)) {
      throw ValidationError("beta of cone " + std::to_string(c) + " entry (" + std::to_string(v->row) + "," +
                            std::to_string(v->col) + ") is nonzero but the pairing inequality fails by " +
                            std::to_string(-v->gap) + " on ray " + std::to_string(v->ray));
    }
    beta_inv[c] = rational_inverse(b);
  }
  std::vector<QMatrix> trans;
  trans.reserve(k * k);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t s = 0; s < k; ++s) trans.push_back(beta_inv[t] * data.transition(t, s) * witness.beta[s]);
  return KaneyamaData(data.fan(), data.group(), std::move(xi), std::move(trans));
}

bool verify_equivalence_witness(const KaneyamaData& data, const KaneyamaData& target,
                                const EquivalenceWitness& witness) {
  if (data.rank() != target.rank()) throw DimensionMismatch("equivalence between data of different rank");
  try {
    return apply_equivalence_witness(data, witness) == target;
  } catch (const ValidationError&) {
    return false;
  }
}

std::vector<QMatrix> complete_transitions(std::size_t num_cones, std::size_t rank,
                                          const std::map<std::pair<std::size_t, std::size_t>, QMatrix>& given) {
  const std::size_t k = num_cones;
  std::vector<std::optional<QMatrix>> from_root(k);  // P(0, c)
  if (k == 0) return {};
  from_root[0] = QMatrix::identity(rank);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, const QMatrix*>> edges;
  for (const auto& [key, m] : given) {
    if (key.first >= k || key.second >= k) throw InputError("transition key references a cone out of range");
    if (m.rows() != rank || m.cols() != rank) throw InputError("transition matrix is not rank x rank");
    if (determinant(m) == 0) {
      throw ValidationError("P" + pair_name(key.first, key.second) + " is singular");
    }
    edges.push_back({key, &m});
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [key, m] : edges) {
      const auto [a, b] = key;
      if (from_root[a] && !from_root[b]) {
        from_root[b] = *from_root[a] * *m;
        progress = true;
      } else if (from_root[b] && !from_root[a]) {
        from_root[a] = *from_root[b] * rational_inverse(*m);
        progress = true;
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (!from_root[c]) throw ValidationError("transitions do not connect cone " + std::to_string(c) + " to cone 0");
  }
  std::vector<QMatrix> inv(k);
  for (std::size_t c = 0; c < k; ++c) inv[c] = rational_inverse(*from_root[c]);
  std::vector<QMatrix> out;
  out.reserve(k * k);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t s = 0; s < k; ++s) out.push_back(inv[t] * *from_root[s]);
  for (const auto& [key, m] : edges) {
    if (out[key.first * k + key.second] != *m) {
      throw ValidationError("supplied P" + pair_name(key.first, key.second) +
                            " conflicts with the transitions implied by the cocycle rule");
    }
  }
  return out;
}

}  // namespace toricbundle
