#include "toricbundle/json_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "toricbundle/errors.hpp"

namespace toricbundle {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  throw InputError((where.empty() ? std::string("/") : where) + ": " + msg);
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, "missing key \"" + key + "\"");
  return *it;
}

const Json& array_of(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

std::int64_t int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) bad(where, "integer out of range");
    return static_cast<std::int64_t>(v);
  }
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  const auto v = int_from_json(j, where);
  if (v < 0) bad(where, "expected a nonnegative index");
  return static_cast<std::size_t>(v);
}

std::size_t index_from_key(const std::string& key, const std::string& where) {
  std::size_t v = 0;
  const char* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, v);
  if (key.empty() || ec != std::errc() || ptr != end) bad(where, "key \"" + key + "\" is not a cone index");
  return v;
}

BigInt big_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(int_from_json(j, where));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      bad(where, "expected a decimal integer string");
    }
    return BigInt(s);
  }
  bad(where, "expected an integer");
}

Json big_to_json(const BigInt& v) {
  if (auto small = to_int64(v)) return *small;
  return v.str();
}

std::vector<std::int64_t> int_vector_from_json(const Json& j, const std::string& where) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  for (const auto& e : array_of(j, where)) out.push_back(int_from_json(e, child(where, i++)));
  return out;
}

template <class F>
auto per_cone(const Json& j, std::size_t num_cones, const std::string& where, F parse) {
  using T = decltype(parse(j, where));
  if (!j.is_object()) bad(where, "expected an object keyed by cone index");
  std::vector<std::optional<T>> slots(num_cones);
  for (const auto& [key, value] : j.items()) {
    const std::string w = child(where, key);
    const std::size_t c = index_from_key(key, w);
    if (c >= num_cones) bad(w, "cone index out of range");
    slots[c] = parse(value, w);
  }
  std::vector<T> out;
  for (std::size_t c = 0; c < num_cones; ++c) {
    if (!slots[c]) bad(where, "missing entry for cone " + std::to_string(c));
    out.push_back(std::move(*slots[c]));
  }
  return out;
}

std::pair<std::size_t, std::size_t> pair_from_key(const std::string& key, const std::string& where) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) bad(where, "transition key must look like \"tau,sigma\"");
  return {index_from_key(key.substr(0, comma), where), index_from_key(key.substr(comma + 1), where)};
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json rational_to_json(const Rational& q) {
  return Json::array({big_to_json(numerator_of(q)), big_to_json(denominator_of(q))});
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(int_from_json(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get_ref<const std::string&>());
    } catch (const InputError& e) {
      bad(where, e.what());
    }
  }
  if (j.is_array() && j.size() == 2) {
    const BigInt num = big_from_json(j[0], child(where, 0));
    const BigInt den = big_from_json(j[1], child(where, 1));
    if (den == 0) bad(where, "zero denominator");
    return make_rational(num, den);
  }
  bad(where, "expected a rational: integer, \"p/q\" or [num, den]");
}

Json matrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from_json(const Json& j, const std::string& where) {
  array_of(j, where);
  if (j.empty()) bad(where, "matrix has no rows");
  const std::size_t cols = array_of(j[0], child(where, 0)).size();
  QMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string w = child(where, r);
    if (array_of(j[r], w).size() != cols) bad(w, "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c], child(w, c));
  }
  return m;
}

Json to_json(const Fan& fan) {
  Json rays = Json::array();
  for (const auto& v : fan.rays()) rays.push_back(v.coords);
  Json cones = Json::array();
  for (const auto& c : fan.max_cones()) cones.push_back(c.ray_indices);
  return Json{{"dim", fan.dim()}, {"rays", std::move(rays)}, {"max_cones", std::move(cones)}};
}

Fan fan_from_json(const Json& j, const std::string& where) {
  const std::size_t dim = index_from_json(member(j, "dim", where), child(where, "dim"));
  std::vector<LatticeVector> rays;
  const std::string rw = child(where, "rays");
  std::size_t i = 0;
  for (const auto& r : array_of(member(j, "rays", where), rw)) {
    rays.push_back(LatticeVector{int_vector_from_json(r, child(rw, i++))});
  }
  std::vector<Cone> cones;
  const std::string cw = child(where, "max_cones");
  i = 0;
  for (const auto& c : array_of(member(j, "max_cones", where), cw)) {
    const std::string w = child(cw, i++);
    Cone cone;
    std::size_t k = 0;
    for (const auto& e : array_of(c, w)) cone.ray_indices.push_back(index_from_json(e, child(w, k++)));
    cones.push_back(std::move(cone));
  }
  try {
    return Fan(dim, std::move(rays), std::move(cones));
  } catch (const InputError& e) {
    bad(where, e.what());
  }
}

Json to_json(const GroupTag& group) { return Json{{"kind", to_string(group.kind)}, {"rank", group.rank}}; }

GroupTag group_from_json(const Json& j, const std::string& where) {
  GroupTag g;
  const Json& kind = member(j, "kind", where);
  if (kind == "GL") {
    g.kind = GroupKind::GL;
  } else if (kind == "SL") {
    g.kind = GroupKind::SL;
  } else {
    bad(child(where, "kind"), "expected \"GL\" or \"SL\"");
  }
  g.rank = index_from_json(member(j, "rank", where), child(where, "rank"));
  if (g.rank == 0) bad(child(where, "rank"), "rank must be positive");
  return g;
}

Json to_json(const KaneyamaData& data) {
  Json xi = Json::object();
  for (std::size_t c = 0; c < data.num_cones(); ++c) {
    Json chars = Json::array();
    for (const auto& u : data.xi(c)) chars.push_back(u.coords);
    xi[std::to_string(c)] = std::move(chars);
  }
  Json p = Json::object();
  for (std::size_t t = 0; t < data.num_cones(); ++t)
    for (std::size_t s = 0; s < data.num_cones(); ++s)
      p[std::to_string(t) + "," + std::to_string(s)] = matrix_to_json(data.transition(t, s));
  return Json{{"group", to_json(data.group())}, {"fan", to_json(data.fan())}, {"xi", std::move(xi)}, {"P", std::move(p)}};
}

KaneyamaData data_from_json(const Json& j, const std::string& where) {
  const GroupTag group = group_from_json(member(j, "group", where), child(where, "group"));
  Fan fan = fan_from_json(member(j, "fan", where), child(where, "fan"));
  const std::size_t k = fan.num_cones();
  const std::string xw = child(where, "xi");
  auto xi = per_cone(member(j, "xi", where), k, xw, [](const Json& v, const std::string& w) {
    std::vector<Character> chars;
    std::size_t i = 0;
    for (const auto& u : array_of(v, w)) chars.push_back(Character{int_vector_from_json(u, child(w, i++))});
    return chars;
  });
  const std::string pw = child(where, "P");
  const Json& pj = member(j, "P", where);
  if (!pj.is_object()) bad(pw, "expected an object keyed by \"tau,sigma\"");
  std::map<std::pair<std::size_t, std::size_t>, QMatrix> given;
  for (const auto& [key, value] : pj.items()) {
    const std::string w = child(pw, key);
    const auto idx = pair_from_key(key, w);
    if (idx.first >= k || idx.second >= k) bad(w, "cone index out of range");
    QMatrix m = matrix_from_json(value, w);
    if (m.rows() != group.rank || m.cols() != group.rank) bad(w, "transition matrix is not rank x rank");
    given.emplace(idx, std::move(m));
  }
  std::size_t off_diagonal = 0;
  for (const auto& entry : given)
    if (entry.first.first != entry.first.second) ++off_diagonal;
  std::vector<QMatrix> trans;
  if (off_diagonal == k * (k - 1)) {
    trans.assign(k * k, QMatrix::identity(group.rank));
    for (auto& [idx, m] : given) trans[idx.first * k + idx.second] = m;
  } else {
    trans = complete_transitions(k, group.rank, given);
  }
  try {
    return KaneyamaData(std::move(fan), group, std::move(xi), std::move(trans));
  } catch (const InputError& e) {
    bad(where, e.what());
  }
}

Json to_json(const ValidationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json e{{"rule", c.rule}, {"passed", c.passed}, {"failures", c.failures}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return Json{{"valid", report.valid()}, {"checks", std::move(checks)}};
}

Json to_json(const AutReport& report) {
  Json basis = Json::array();
  for (const auto& b : report.lie_algebra.basis()) basis.push_back(matrix_to_json(b));
  Json per_ray = Json::object();
  for (const auto& [ray, s] : report.per_ray) per_ray[std::to_string(ray)] = s.dim();
  return Json{{"base_cone", report.base_cone},
              {"dim", report.dim()},
              {"basis", std::move(basis)},
              {"per_ray_dims", std::move(per_ray)}};
}

Json to_json(const SplitVerdict& verdict) {
  Json j{{"verdict", to_string(verdict.kind)}};
  if (verdict.certificate) j["certificate"] = matrix_to_json(*verdict.certificate);
  if (!verdict.reason.empty()) j["reason"] = verdict.reason;
  return j;
}

SplitVerdict split_verdict_from_json(const Json& j, const std::string& where) {
  SplitVerdict v;
  const Json& kind = member(j, "verdict", where);
  if (kind == "split") {
    v.kind = SplitVerdict::Kind::Split;
  } else if (kind == "not_split") {
    v.kind = SplitVerdict::Kind::NotSplit;
  } else if (kind == "unknown") {
    v.kind = SplitVerdict::Kind::Unknown;
  } else {
    bad(child(where, "verdict"), "expected \"split\", \"not_split\" or \"unknown\"");
  }
  if (auto it = j.find("certificate"); it != j.end()) v.certificate = matrix_from_json(*it, child(where, "certificate"));
  if (auto it = j.find("reason"); it != j.end()) {
    if (!it->is_string()) bad(child(where, "reason"), "expected a string");
    v.reason = it->get<std::string>();
  }
  return v;
}

SplitSpec split_spec_from_json(const Json& j, std::size_t num_rays, const std::string& where) {
  SplitSpec spec;
  spec.group = group_from_json(member(j, "group", where), child(where, "group"));
  const std::string mw = child(where, "m");
  const Json& m = member(j, "m", where);
  if (m.is_array()) {
    if (m.size() != num_rays) bad(mw, "expected one weight vector per ray");
    for (std::size_t i = 0; i < m.size(); ++i) spec.m.push_back(int_vector_from_json(m[i], child(mw, i)));
  } else {
    spec.m = per_cone(m, num_rays, mw, int_vector_from_json);
  }
  return spec;
}

Json to_json(const EquivalenceWitness& w) {
  Json eta = Json::object(), beta = Json::object();
  for (std::size_t c = 0; c < w.eta.size(); ++c) eta[std::to_string(c)] = w.eta[c];
  for (std::size_t c = 0; c < w.beta.size(); ++c) beta[std::to_string(c)] = matrix_to_json(w.beta[c]);
  return Json{{"kind", "equivalence"}, {"eta", std::move(eta)}, {"beta", std::move(beta)}};
}

EquivalenceWitness equivalence_witness_from_json(const Json& j, std::size_t num_cones, const std::string& where) {
  EquivalenceWitness w;
  w.eta = per_cone(member(j, "eta", where), num_cones, child(where, "eta"), [](const Json& v, const std::string& at) {
    std::vector<std::size_t> perm;
    std::size_t i = 0;
    for (const auto& e : array_of(v, at)) perm.push_back(index_from_json(e, child(at, i++)));
    return perm;
  });
  w.beta = per_cone(member(j, "beta", where), num_cones, child(where, "beta"), matrix_from_json);
  return w;
}

Json to_json(const MorphismWitness& w, std::size_t base) {
  Json g = Json::object();
  for (std::size_t c = 0; c < w.g.size(); ++c) g[std::to_string(c)] = matrix_to_json(w.g[c]);
  return Json{{"kind", "morphism"}, {"base", base}, {"g0", matrix_to_json(w.g0)}, {"g", std::move(g)}};
}

MorphismWitness morphism_witness_from_json(const Json& j, std::size_t num_cones, const std::string& where) {
  MorphismWitness w;
  w.g0 = matrix_from_json(member(j, "g0", where), child(where, "g0"));
  w.g = per_cone(member(j, "g", where), num_cones, child(where, "g"), matrix_from_json);
  return w;
}

Partition partition_from_json(const Json& j, const std::string& where) {
  Partition p;
  std::size_t b = 0;
  for (const auto& block : array_of(j, where)) {
    const std::string w = child(where, b++);
    std::vector<std::size_t> idx;
    std::size_t i = 0;
    for (const auto& e : array_of(block, w)) idx.push_back(index_from_json(e, child(w, i++)));
    p.push_back(std::move(idx));
  }
  return p;
}

Json to_json(const ReductionWitness& w) {
  Json alpha = Json::object(), beta = Json::object();
  for (std::size_t c = 0; c < w.alpha.size(); ++c) alpha[std::to_string(c)] = matrix_to_json(w.alpha[c]);
  for (std::size_t c = 0; c < w.beta.size(); ++c) beta[std::to_string(c)] = matrix_to_json(w.beta[c]);
  return Json{{"kind", "reduction"}, {"partition", w.partition}, {"alpha", std::move(alpha)}, {"beta", std::move(beta)}};
}

ReductionWitness reduction_witness_from_json(const Json& j, std::size_t num_cones, const std::string& where) {
  ReductionWitness w;
  w.partition = partition_from_json(member(j, "partition", where), child(where, "partition"));
  w.alpha = per_cone(member(j, "alpha", where), num_cones, child(where, "alpha"), matrix_from_json);
  w.beta = per_cone(member(j, "beta", where), num_cones, child(where, "beta"), matrix_from_json);
  return w;
}

}  // namespace toricbundle
