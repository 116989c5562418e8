#include "toricbundle/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "toricbundle/analysis.hpp"
#include "toricbundle/errors.hpp"
#include "toricbundle/json_io.hpp"

namespace toricbundle {

namespace fs = std::filesystem;

std::string resolve_input_path(const std::string& path) {
  if (path == "-" || fs::exists(path)) return path;
  const fs::path p(path);
  if (p.is_absolute()) return path;
  if (const char* dir = std::getenv("TORICBUNDLE_FIXTURES"); dir && *dir) {
    const fs::path candidate = fs::path(dir) / p;
    if (fs::exists(candidate)) return candidate.string();
  }
  return path;
}

Embedding parse_embedding(const std::string& spec) {
  if (spec == "identity") return IdentityEmbedding{};
  if (spec == "sl-balance") return DeterminantBalancing{};
  if (spec.rfind("block:", 0) == 0) {
    const std::string rest = spec.substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("block embedding syntax is block:R:p0,p1,...");
    BlockEmbedding b;
    try {
      b.target_rank = std::stoul(rest.substr(0, colon));
      std::stringstream ss(rest.substr(colon + 1));
      std::string item;
      while (std::getline(ss, item, ',')) b.positions.push_back(std::stoul(item));
    } catch (const std::logic_error&) {
      throw InputError("block embedding syntax is block:R:p0,p1,...");
    }
    return b;
  }
  throw InputError("unknown embedding \"" + spec + "\" (identity, sl-balance, block:R:p0,p1,...)");
}

Partition parse_partition(const std::string& spec) {
  const auto first = spec.find_first_not_of(" \t");
  if (first != std::string::npos && spec[first] == '[') return partition_from_json(parse_json_text(spec, "<partition>"));
  Partition p;
  std::stringstream blocks(spec);
  std::string block;
  try {
    while (std::getline(blocks, block, ';')) {
      std::vector<std::size_t> idx;
      std::stringstream items(block);
      std::string item;
      while (std::getline(items, item, ',')) idx.push_back(std::stoul(item));
      p.push_back(std::move(idx));
    }
  } catch (const std::logic_error&) {
    throw InputError("partition syntax is 0,1;2 or a JSON list of lists");
  }
  return p;
}

namespace {

struct Options {
  std::string fan, data, target, witness, matrix, m, embedding, partition, out;
  std::size_t base = 0;
  std::uint64_t seed = 0;
  std::size_t attempts = 32;
  bool pretty = false;
  std::size_t projective = 0;
  std::size_t kl_s = 0;
  std::vector<std::int64_t> a;
};

struct Outcome {
  Json json;
  std::string text;
  int code = kExitOk;
};

Json load(const std::string& path) {
  const std::string resolved = resolve_input_path(path);
  if (resolved == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_json_text(buf.str(), "<stdin>");
  }
  return read_json_file(resolved);
}

// Schema problems are reported against the file they came from.
template <class F>
auto load_as(const std::string& path, F parse) {
  const Json j = load(path);
  try {
    return parse(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Fan load_fan(const std::string& path) {
  return load_as(path, [](const Json& j) { return fan_from_json(j); });
}

KaneyamaData load_data(const std::string& path) {
  return load_as(path, [](const Json& j) { return data_from_json(j); });
}

// Inline JSON when the argument starts with '[' or '{', a file path otherwise.
Json inline_or_file(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return parse_json_text(arg, "<argument>");
  return load(arg);
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string matrix_text(const QMatrix& m, const std::string& indent) {
  std::size_t width = 1;
  for (const auto& q : m.flat()) width = std::max(width, to_string(q).size());
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += indent + "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string e = to_string(m(i, j));
      s += std::string(width - e.size(), ' ') + e + (j + 1 < m.cols() ? " " : "");
    }
    s += "]\n";
  }
  return s;
}

std::string fan_text(const Fan& fan) {
  std::string s = "dim " + std::to_string(fan.dim()) + "\nrays\n";
  for (std::size_t i = 0; i < fan.num_rays(); ++i) s += "  " + pad(std::to_string(i), 4) + to_string(fan.ray(i)) + "\n";
  s += "max_cones\n";
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    std::string idx;
    for (auto r : fan.cone(c).ray_indices) idx += (idx.empty() ? "" : " ") + std::to_string(r);
    s += "  " + pad(std::to_string(c), 4) + "[" + idx + "]\n";
  }
  return s;
}

std::string data_text(const KaneyamaData& d) {
  std::string s = "group " + to_string(d.group().kind) + "(" + std::to_string(d.rank()) + ")\n";
  s += fan_text(d.fan());
  s += "xi\n";
  for (std::size_t c = 0; c < d.num_cones(); ++c) {
    std::string chars;
    for (const auto& u : d.xi(c)) chars += (chars.empty() ? "" : " ") + to_string(u);
    s += "  " + pad(std::to_string(c), 4) + chars + "\n";
  }
  s += "P\n";
  for (std::size_t t = 0; t < d.num_cones(); ++t)
    for (std::size_t c = 0; c < d.num_cones(); ++c) {
      if (t == c) continue;
      s += "  (" + std::to_string(t) + "," + std::to_string(c) + ")\n" + matrix_text(d.transition(t, c), "    ");
    }
  return s;
}

std::string report_text(const ValidationReport& r) {
  std::size_t width = 4;
  for (const auto& c : r.checks) width = std::max(width, c.rule.size() + 2);
  std::string s = pad("rule", width) + pad("status", 8) + pad("count", 7) + "detail\n";
  for (const auto& c : r.checks) {
    s += pad(c.rule, width) + pad(c.passed ? "pass" : "FAIL", 8) + pad(std::to_string(c.failures), 7) + c.detail + "\n";
  }
  s += std::string("valid ") + (r.valid() ? "yes" : "no") + "\n";
  return s;
}

std::string aut_text(const AutReport& r) {
  std::string s = "base_cone " + std::to_string(r.base_cone) + "\ndim " + std::to_string(r.dim()) + "\n";
  s += pad("ray", 6) + "parabolic dim\n";
  for (const auto& [ray, sub] : r.per_ray) s += pad(std::to_string(ray), 6) + std::to_string(sub.dim()) + "\n";
  s += "basis\n";
  const auto basis = r.lie_algebra.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) s += "  #" + std::to_string(i) + "\n" + matrix_text(basis[i], "    ");
  return s;
}

std::string split_text(const SplitVerdict& v) {
  std::string s = "verdict " + to_string(v.kind) + "\n";
  if (!v.reason.empty()) s += "reason " + v.reason + "\n";
  if (v.certificate) s += "certificate\n" + matrix_text(*v.certificate, "  ");
  return s;
}

std::string flat_text(const Json& j) {
  std::string s;
  for (const auto& [key, value] : j.items()) {
    s += pad(key, 14) + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return s;
}

Outcome cmd_fan(const Options& o) {
  Fan fan;
  if (o.projective > 0 && o.kl_s == 0) {
    fan = projective_space(o.projective);
  } else if (o.kl_s > 0 && o.projective == 0) {
    fan = kleinschmidt(o.kl_s, o.a);
  } else {
    throw InputError("fan needs exactly one of --projective N or --kleinschmidt S --a ...");
  }
  return {to_json(fan), fan_text(fan)};
}

Outcome cmd_validate_fan(const Options& o) {
  const ValidationReport r = validate_fan(load_fan(o.fan));
  return {to_json(r), report_text(r), r.valid() ? kExitOk : kExitFailed};
}

Outcome cmd_validate_data(const Options& o) {
  const ValidationReport r = validate(load_data(o.data));
  return {to_json(r), report_text(r), r.valid() ? kExitOk : kExitFailed};
}

Outcome cmd_tangent(const Options& o) {
  const KaneyamaData d = tangent_frame_data(load_fan(o.fan));
  return {to_json(d), data_text(d)};
}

Outcome cmd_split_data(const Options& o) {
  const Fan fan = load_fan(o.fan);
  const SplitSpec spec = load_as(o.m, [&](const Json& j) { return split_spec_from_json(j, fan.num_rays()); });
  const KaneyamaData d = split_data(fan, spec.m, spec.group);
  return {to_json(d), data_text(d)};
}

Outcome cmd_extend(const Options& o) {
  const KaneyamaData d = extend_structure_group(load_data(o.data), parse_embedding(o.embedding));
  return {to_json(d), data_text(d)};
}

Outcome cmd_aut(const Options& o) {
  const AutReport r = aut_lie_algebra(load_data(o.data), o.base);
  return {to_json(r), aut_text(r)};
}

Outcome cmd_is_aut(const Options& o) {
  const KaneyamaData d = load_data(o.data);
  const QMatrix a = matrix_from_json(inline_or_file(o.matrix), "matrix");
  Json j{{"base_cone", o.base}};
  try {
    j["automorphism"] = is_equivariant_automorphism(d, o.base, a);
  } catch (const SingularMatrix&) {
    j["automorphism"] = false;
    j["reason"] = "matrix is singular";
  }
  const bool ok = j["automorphism"].get<bool>();
  return {j, flat_text(j), ok ? kExitOk : kExitFailed};
}

Outcome cmd_levi(const Options& o) {
  const KaneyamaData d = load_data(o.data);
  const Partition p = o.partition.empty() ? torus_partition(d.rank()) : parse_partition(o.partition);
  const bool ok = levi_reduction_check(d, o.base, p);
  Json j{{"base_cone", o.base}, {"partition", p}, {"centre_in_aut", ok}};
  return {j, flat_text(j), ok ? kExitOk : kExitFailed};
}

Outcome cmd_split(const Options& o) {
  SplitOptions so;
  so.seed = o.seed;
  so.attempts = o.attempts;
  const SplitVerdict v = split_check(load_data(o.data), o.base, so);
  return {to_json(v), split_text(v)};
}

Outcome cmd_verify_witness(const Options& o) {
  const KaneyamaData d = load_data(o.data);
  const Json w = load(o.witness);
  if (!w.is_object() || !w.contains("kind") || !w["kind"].is_string()) {
    throw InputError(o.witness + ": witness needs a \"kind\" of equivalence, morphism or reduction");
  }
  const std::string kind = w["kind"].get<std::string>();
  const std::size_t k = d.num_cones();
  auto need_target = [&]() {
    if (o.target.empty()) throw InputError(kind + " witness needs --target");
    return load_data(o.target);
  };
  auto schema = [&](auto parse) {
    try {
      return parse();
    } catch (const InputError& e) {
      throw InputError(o.witness + ": " + e.what());
    }
  };
  bool ok = false;
  Json j{{"kind", kind}};
  if (kind == "equivalence") {
    const auto target = need_target();
    const auto witness = schema([&] { return equivalence_witness_from_json(w, k); });
    try {
      ok = apply_equivalence_witness(d, witness) == target;
      if (!ok) j["reason"] = "transformed data differs from the target";
    } catch (const ValidationError& e) {
      j["reason"] = e.what();
    }
  } else if (kind == "morphism") {
    const auto target = need_target();
    const auto witness = schema([&] { return morphism_witness_from_json(w, k); });
    std::size_t base = o.base;
    if (w.contains("base")) base = schema([&] { return w["base"].get<std::size_t>(); });
    j["base_cone"] = base;
    ok = verify_morphism_witness(d, target, base, witness);
  } else if (kind == "reduction") {
    const auto witness = schema([&] { return reduction_witness_from_json(w, k); });
    ok = verify_reduction_witness(d, witness.partition, witness.alpha, witness.beta);
  } else {
    throw InputError(o.witness + ": unknown witness kind \"" + kind + "\"");
  }
  j["verified"] = ok;
  return {j, flat_text(j), ok ? kExitOk : kExitFailed};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torus-equivariant principal bundles on smooth complete toric varieties", "toricbundle"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the report to this file");
    sub->add_flag("--pretty", o.pretty, "Tabular text instead of JSON");
  };
  auto with_base = [&](CLI::App* sub) { sub->add_option("--base", o.base, "Base cone whose frame is used")->capture_default_str(); };

  auto* fan = app.add_subcommand("fan", "Emit a built-in fan");
  fan->add_option("--projective", o.projective, "Fan of P^N");
  fan->add_option("--kleinschmidt", o.kl_s, "Base dimension S of a Kleinschmidt fan");
  fan->add_option("--a", o.a, "Twists a_1 <= ... <= a_r of the Kleinschmidt fan");
  common(fan);

  auto* vfan = app.add_subcommand("validate-fan", "Check smoothness and fan rules");
  vfan->add_option("--fan", o.fan, "Fan JSON")->required();
  common(vfan);

  auto* vdata = app.add_subcommand("validate-data", "Check Kaneyama data");
  vdata->add_option("--data", o.data, "Kaneyama data JSON")->required();
  common(vdata);

  auto* tangent = app.add_subcommand("tangent", "Frame bundle of the tangent bundle");
  tangent->add_option("--fan", o.fan, "Fan JSON")->required();
  common(tangent);

  auto* sdata = app.add_subcommand("split-data", "Split data from per-ray weights");
  sdata->add_option("--fan", o.fan, "Fan JSON")->required();
  sdata->add_option("--m", o.m, "JSON with group and per-ray weights")->required();
  common(sdata);

  auto* extend = app.add_subcommand("extend", "Extend the structure group");
  extend->add_option("--data", o.data, "Kaneyama data JSON")->required();
  extend->add_option("--embedding", o.embedding, "identity | sl-balance | block:R:p0,p1,...")->required();
  common(extend);

  auto* aut = app.add_subcommand("aut", "Lie algebra of equivariant automorphisms");
  aut->add_option("--data", o.data, "Kaneyama data JSON")->required();
  with_base(aut);
  common(aut);

  auto* isaut = app.add_subcommand("is-aut", "Test a matrix for being an equivariant automorphism");
  isaut->add_option("--data", o.data, "Kaneyama data JSON")->required();
  isaut->add_option("--matrix", o.matrix, "Matrix JSON file or inline JSON")->required();
  with_base(isaut);
  common(isaut);

  auto* levi = app.add_subcommand("levi", "Levi reduction check");
  levi->add_option("--data", o.data, "Kaneyama data JSON")->required();
  levi->add_option("--partition", o.partition, "Blocks such as 0,1;2 (default: singletons)");
  with_base(levi);
  common(levi);

  auto* split = app.add_subcommand("split", "Equivariant splitting verdict");
  split->add_option("--data", o.data, "Kaneyama data JSON")->required();
  split->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  split->add_option("--attempts", o.attempts, "Random candidates to try")->capture_default_str();
  with_base(split);
  common(split);

  auto* verify = app.add_subcommand("verify-witness", "Check an equivalence, morphism or reduction witness");
  verify->add_option("--data", o.data, "Kaneyama data JSON (the source)")->required();
  verify->add_option("--witness", o.witness, "Witness JSON")->required();
  verify->add_option("--target", o.target, "Target data for equivalence and morphism witnesses");
  with_base(verify);
  common(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  const std::vector<std::pair<CLI::App*, Outcome (*)(const Options&)>> table = {
      {fan, cmd_fan},         {vfan, cmd_validate_fan}, {vdata, cmd_validate_data}, {tangent, cmd_tangent},
      {sdata, cmd_split_data}, {extend, cmd_extend},     {aut, cmd_aut},            {isaut, cmd_is_aut},
      {levi, cmd_levi},       {split, cmd_split},       {verify, cmd_verify_witness}};

  Outcome outcome;
  try {
    for (const auto& [sub, handler] : table)
      if (sub->parsed()) outcome = handler(o);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  const std::string payload = o.pretty ? outcome.text : dump_json(outcome.json);
  if (o.out.empty()) {
    out << payload;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: " << o.out << ": cannot write file\n";
      return kExitMalformed;
    }
    file << payload;
  }
  if (outcome.code == kExitFailed) {
    if (outcome.json.contains("reason")) err << "failed: " << outcome.json["reason"].get<std::string>() << "\n";
    if (outcome.json.contains("checks")) {
      for (const auto& c : outcome.json["checks"])
        if (!c["passed"].get<bool>()) err << c["rule"].get<std::string>() << ": " << c.value("detail", "") << "\n";
    }
  }
  return outcome.code;
}

}  // namespace toricbundle
