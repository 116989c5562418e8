#include "toricbundle/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace toricbundle {

Fan::Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<Cone> max_cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  if (dim_ == 0) throw InputError("fan dimension must be positive");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].dim() != dim_) {
      throw InputError("ray " + std::to_string(i) + " has " + std::to_string(rays_[i].dim()) +
                       " coordinates, expected " + std::to_string(dim_));
    }
  }
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    const auto& idx = cones_[c].ray_indices;
    if (idx.size() != dim_) {
      throw InputError("maximal cone " + std::to_string(c) + " has " + std::to_string(idx.size()) +
                       " rays, expected " + std::to_string(dim_));
    }
    std::set<std::size_t> seen;
    for (auto r : idx) {
      if (r >= rays_.size()) {
        throw InputError("maximal cone " + std::to_string(c) + " references ray " + std::to_string(r) +
                         " out of range");
      }
      if (!seen.insert(r).second) {
        throw InputError("maximal cone " + std::to_string(c) + " repeats ray " + std::to_string(r));
      }
    }
  }
}

std::vector<LatticeVector> Fan::generators(std::size_t cone) const {
  std::vector<LatticeVector> g;
  for (auto r : cones_.at(cone).ray_indices) g.push_back(rays_[r]);
  return g;
}

std::optional<std::size_t> Fan::position_in_cone(std::size_t cone, std::size_t ray) const {
  const auto& idx = cones_.at(cone).ray_indices;
  const auto it = std::find(idx.begin(), idx.end(), ray);
  if (it == idx.end()) return std::nullopt;
  return static_cast<std::size_t>(it - idx.begin());
}

std::optional<std::size_t> Fan::home_cone(std::size_t ray) const {
  for (std::size_t c = 0; c < cones_.size(); ++c)
    if (position_in_cone(c, ray)) return c;
  return std::nullopt;
}

namespace {

std::string cone_name(std::size_t c) { return "cone " + std::to_string(c); }

// True if the point lies in the closed unimodular cone whose dual rows are `dual`.
bool in_cone(const IntMatrix& dual, const LatticeVector& p) {
  for (std::size_t i = 0; i < dual.rows(); ++i) {
    Character u{std::vector<std::int64_t>(dual.row(i).begin(), dual.row(i).end())};
    if (pairing(u, p) < 0) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_fan(const Fan& fan) {
  ValidationReport report;
  report.rule("primitive_rays");
  report.rule("unimodular_cones");
  report.rule("facet_pairing");
  report.rule("common_faces");

  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    if (!is_primitive(fan.ray(i))) {
      report.fail("primitive_rays", "ray " + std::to_string(i) + " " + to_string(fan.ray(i)) + " is not primitive");
    }
  }

  std::vector<std::optional<IntMatrix>> duals(fan.num_cones());
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    const Rational det = determinant(to_rational(columns_matrix(fan.generators(c))));
    if (det == 1 || det == -1) {
      duals[c] = dual_basis(columns_matrix(fan.generators(c)));
    } else {
      report.fail("unimodular_cones", cone_name(c) + " has generator determinant " + to_string(det));
    }
  }

  std::map<std::vector<std::size_t>, std::vector<std::size_t>> facets;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    const auto& idx = fan.cone(c).ray_indices;
    for (std::size_t drop = 0; drop < idx.size(); ++drop) {
      std::vector<std::size_t> facet;
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != drop) facet.push_back(idx[k]);
      std::sort(facet.begin(), facet.end());
      facets[facet].push_back(c);
    }
  }
  for (const auto& [facet, owners] : facets) {
    if (owners.size() != 2) {
      std::string rays;
      for (auto r : facet) rays += (rays.empty() ? "" : ",") + std::to_string(r);
      report.fail("facet_pairing", "facet {" + rays + "} lies in " + std::to_string(owners.size()) +
                                       " maximal cone(s), expected 2");
    }
  }

  for (std::size_t i = 0; i < fan.num_rays(); ++i)
    for (std::size_t j = i + 1; j < fan.num_rays(); ++j)
      if (fan.ray(i) == fan.ray(j))
        report.fail("common_faces", "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  for (std::size_t a = 0; a < fan.num_cones(); ++a) {
    auto sa = fan.cone(a).ray_indices;
    std::sort(sa.begin(), sa.end());
    for (std::size_t b = 0; b < fan.num_cones(); ++b) {
      if (a == b) continue;
      auto sb = fan.cone(b).ray_indices;
      std::sort(sb.begin(), sb.end());
      if (a < b && sa == sb) {
        report.fail("common_faces", cone_name(a) + " and " + cone_name(b) + " have the same rays");
        continue;
      }
      if (!duals[b]) continue;
      LatticeVector interior{std::vector<std::int64_t>(fan.dim(), 0)};
      for (const auto& g : fan.generators(a)) interior = interior + g;
      if (in_cone(*duals[b], interior)) {
        report.fail("common_faces", "interior of " + cone_name(a) + " meets " + cone_name(b));
      }
    }
  }
  return report;
}

std::vector<std::size_t> shared_rays(const Fan& fan, std::size_t sigma, std::size_t tau) {
  auto a = fan.cone(sigma).ray_indices;
  auto b = fan.cone(tau).ray_indices;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Fan projective_space(std::size_t n) {
  if (n == 0) throw InputError("projective_space needs n >= 1");
  std::vector<LatticeVector> rays;
  rays.push_back(LatticeVector{std::vector<std::int64_t>(n, -1)});
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e{std::vector<std::int64_t>(n, 0)};
    e.coords[i] = 1;
    rays.push_back(std::move(e));
  }
  std::vector<Cone> cones;
  for (std::size_t omit = 0; omit <= n; ++omit) {
    Cone c;
    for (std::size_t k = 0; k <= n; ++k)
      if (k != omit) c.ray_indices.push_back(k);
    cones.push_back(std::move(c));
  }
  return Fan(n, std::move(rays), std::move(cones));
}

Fan kleinschmidt(std::size_t s, const std::vector<std::int64_t>& a) {
  const std::size_t r = a.size();
  if (s == 0 || r == 0) throw InputError("kleinschmidt needs s >= 1 and r >= 1");
  if (a.front() < 0) throw InputError("kleinschmidt needs 0 <= a_1");
  for (std::size_t i = 1; i < r; ++i)
    if (a[i] < a[i - 1]) throw InputError("kleinschmidt needs a_1 <= ... <= a_r");

  const std::size_t n = s + r;
  auto basis = [n](std::size_t k) {
    LatticeVector e{std::vector<std::int64_t>(n, 0)};
    e.coords[k] = 1;
    return e;
  };
  std::vector<LatticeVector> rays;
  LatticeVector v0{std::vector<std::int64_t>(n, 0)};
  for (std::size_t i = 0; i < s; ++i) v0.coords[i] = -1;
  for (std::size_t i = 0; i < r; ++i) v0.coords[s + i] = a[i];
  rays.push_back(v0);
  for (std::size_t i = 0; i < s; ++i) rays.push_back(basis(i));
  LatticeVector e0{std::vector<std::int64_t>(n, 0)};
  for (std::size_t i = 0; i < r; ++i) e0.coords[s + i] = -1;
  rays.push_back(e0);
  for (std::size_t i = 0; i < r; ++i) rays.push_back(basis(s + i));

  std::vector<Cone> cones;
  for (std::size_t j = 0; j <= s; ++j) {
    for (std::size_t i = 0; i <= r; ++i) {
      Cone c;
      for (std::size_t k = 0; k <= s; ++k)
        if (k != j) c.ray_indices.push_back(k);
      for (std::size_t k = 0; k <= r; ++k)
        if (k != i) c.ray_indices.push_back(s + 1 + k);
      cones.push_back(std::move(c));
    }
  }
  return Fan(n, std::move(rays), std::move(cones));
}

}  // namespace toricbundle
