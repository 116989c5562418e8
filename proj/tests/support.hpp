#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "toricbundle/analysis.hpp"
#include "toricbundle/json_io.hpp"

namespace support {

using namespace toricbundle;

inline std::string fixture_path(const std::string& name) { return std::string(TORICBUNDLE_FIXTURES_DIR) + "/" + name; }

inline Fan fixture_fan(const std::string& name) { return fan_from_json(read_json_file(fixture_path(name + ".json"))); }

inline KaneyamaData fixture_data(const std::string& name) {
  return data_from_json(read_json_file(fixture_path(name + ".json")));
}

inline const std::vector<std::string>& fan_fixtures() {
  static const std::vector<std::string> names = {
      "p1",          "p2",          "p3",          "p4",          "p5",          "kl_s1_a0",      "kl_s1_a1",
      "kl_s1_a2",    "kl_s1_a3",    "kl_s2_a0",    "kl_s2_a1",    "kl_s2_a2",    "kl_s1_a0_0",    "kl_s1_a0_1",
      "kl_s1_a1_1",  "kl_s1_a1_2",  "kl_s3_a0",    "kl_s3_a1",    "kl_s2_a0_1",  "kl_s1_a0_0_1"};
  return names;
}

inline const std::vector<std::string>& data_fixtures() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& f : fan_fixtures()) v.push_back("tangent_" + f);
    for (const char* extra : {"tangent_p2_sl3", "split_p2", "split_p2_sl3", "split_p3", "split_p4_sl3",
                              "tangent_p2_in_gl3_on_p2"})
      v.emplace_back(extra);
    return v;
  }();
  return names;
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::int64_t bound, double density = 1.0) {
  QMatrix m(r, r);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (keep(rng)) m(i, j) = Rational(uniform(rng, -bound, bound), uniform(rng, 1, 3));
  return m;
}

inline QMatrix random_invertible(std::mt19937_64& rng, std::size_t r, std::int64_t bound) {
  for (;;) {
    QMatrix m = random_matrix(rng, r, bound);
    if (determinant(m) != 0) return m;
  }
}

// Random witness honouring the support rule: beta_ij may be nonzero only where
// <xi_i - xi'_j, v> >= 0 on every ray of the cone, xi'_{eta(i)} = xi_i.
inline EquivalenceWitness random_witness(const KaneyamaData& d, std::mt19937_64& rng) {
  const std::size_t r = d.rank();
  EquivalenceWitness w;
  for (std::size_t c = 0; c < d.num_cones(); ++c) {
    std::vector<std::size_t> eta(r);
    std::iota(eta.begin(), eta.end(), 0);
    std::shuffle(eta.begin(), eta.end(), rng);
    std::vector<Character> moved(r);
    for (std::size_t i = 0; i < r; ++i) moved[eta[i]] = d.xi(c)[i];
    auto allowed = [&](std::size_t i, std::size_t j) {
      for (auto ray : d.fan().cone(c).ray_indices) {
        if (pairing(d.xi(c)[i], d.fan().ray(ray)) < pairing(moved[j], d.fan().ray(ray))) return false;
      }
      return true;
    };
    QMatrix beta(r, r);
    for (;;) {
      beta = QMatrix(r, r);
      for (std::size_t i = 0; i < r; ++i) {
        std::int64_t v = 0;
        while (v == 0) v = uniform(rng, -3, 3);
        beta(i, eta[i]) = v;
      }
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (j != eta[i] && allowed(i, j) && uniform(rng, 0, 2) == 0) beta(i, j) = uniform(rng, -4, 4);
      const Rational det = determinant(beta);
      if (det == 0) continue;
      if (d.group().kind == GroupKind::SL) {
        for (std::size_t i = 0; i < r; ++i) beta(i, eta[0]) /= det;
      }
      break;
    }
    w.eta.push_back(std::move(eta));
    w.beta.push_back(std::move(beta));
  }
  return w;
}

// Per-ray weights whose restriction to each cone is consistent; for SL each weight vector sums to 0.
inline std::vector<std::vector<std::int64_t>> random_m(std::mt19937_64& rng, std::size_t rays, std::size_t r, bool sl) {
  std::vector<std::vector<std::int64_t>> m(rays, std::vector<std::int64_t>(r));
  for (auto& row : m) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < r; ++i) {
      row[i] = uniform(rng, -3, 3);
      sum += row[i];
    }
    if (sl) row[r - 1] -= sum;
  }
  return m;
}

// Valid data drawn from the fixtures, random split data and their extensions, then moved by a random witness.
inline KaneyamaData random_valid_data(std::mt19937_64& rng, std::size_t max_rank = 4) {
  static std::vector<KaneyamaData> pool = [] {
    std::vector<KaneyamaData> p;
    for (const auto& name : data_fixtures()) p.push_back(fixture_data(name));
    return p;
  }();
  KaneyamaData base;
  switch (uniform(rng, 0, 3)) {
    case 0:
    case 1: {
      do {
        base = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
      } while (base.rank() > max_rank);
      break;
    }
    case 2: {
      const auto& names = fan_fixtures();
      const Fan fan = fixture_fan(names[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(names.size()) - 1))]);
      const bool sl = uniform(rng, 0, 1) == 1;
      const std::size_t r = static_cast<std::size_t>(uniform(rng, sl ? 2 : 1, 3));
      base = split_data(fan, random_m(rng, fan.num_rays(), r, sl), GroupTag{sl ? GroupKind::SL : GroupKind::GL, r});
      break;
    }
    default: {
      const auto tangent = pool[static_cast<std::size_t>(uniform(rng, 0, 3))];  // tangent_p1 .. tangent_p4
      if (tangent.rank() + 1 > max_rank) {
        base = tangent;
      } else if (uniform(rng, 0, 1) == 0) {
        base = extend_structure_group(tangent, DeterminantBalancing{});
      } else {
        BlockEmbedding b;
        b.target_rank = tangent.rank() + 1;
        for (std::size_t i = 0; i < tangent.rank(); ++i) b.positions.push_back(i + 1);
        b.fixed = {Character{std::vector<std::int64_t>(tangent.fan().dim(), uniform(rng, -1, 1))}};
        base = extend_structure_group(tangent, b);
      }
    }
  }
  return apply_equivalence_witness(base, random_witness(base, rng));
}

/// Property outcome with the first counterexample.
struct Outcome {
  bool ok = true;
  std::size_t instances = 0;
  std::string failure;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
};

}  // namespace support
