#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricbundle/analysis.hpp"
#include "toricbundle/fan.hpp"
#include "toricbundle/kaneyama.hpp"
#include "toricbundle/validation.hpp"

namespace toricbundle {

using Json = nlohmann::json;

/// Reads and parses a JSON file. Syntax errors become InputError with "path:line:column: ...".
Json read_json_file(const std::string& path);

/// Parses JSON text; `source` names the input in error messages.
Json parse_json_text(const std::string& text, const std::string& source = "<input>");

/// Sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& j);

// Schema errors raise InputError naming the JSON pointer of the offending value.

/// [num, den]; num and den are JSON integers when they fit in 64 bits, decimal strings otherwise.
Json rational_to_json(const Rational& q);
/// Accepts an integer, "p/q" or "p", or a [num, den] pair.
Rational rational_from_json(const Json& j, const std::string& where = "");

Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j, const std::string& where = "");

Json to_json(const Fan& fan);
Fan fan_from_json(const Json& j, const std::string& where = "");

Json to_json(const GroupTag& group);
GroupTag group_from_json(const Json& j, const std::string& where = "");

/// Emits every ordered transition pair. On input, a complete off-diagonal table is taken as is
/// (missing diagonal entries become the identity); a partial table is completed by the cocycle
/// rule, which throws ValidationError on conflict.
Json to_json(const KaneyamaData& data);
KaneyamaData data_from_json(const Json& j, const std::string& where = "");

/// {"valid": bool, "checks": [{"rule", "passed", "failures", "detail"}]}.
Json to_json(const ValidationReport& report);

/// {"base_cone", "dim", "basis", "per_ray_dims"}; basis is the reduced echelon basis.
Json to_json(const AutReport& report);

/// {"verdict", "certificate"?, "reason"?}.
Json to_json(const SplitVerdict& verdict);
SplitVerdict split_verdict_from_json(const Json& j, const std::string& where = "");

/// {"group": {...}, "m": [[int, ...], ...]} or "m" keyed by ray index.
struct SplitSpec {
  GroupTag group;
  std::vector<std::vector<std::int64_t>> m;
};
SplitSpec split_spec_from_json(const Json& j, std::size_t num_rays, const std::string& where = "");

/// {"kind": "equivalence", "eta": {"c": [...]}, "beta": {"c": matrix}}.
Json to_json(const EquivalenceWitness& w);
EquivalenceWitness equivalence_witness_from_json(const Json& j, std::size_t num_cones, const std::string& where = "");

/// {"kind": "morphism", "base": i, "g0": matrix, "g": {"c": matrix}}.
Json to_json(const MorphismWitness& w, std::size_t base);
MorphismWitness morphism_witness_from_json(const Json& j, std::size_t num_cones, const std::string& where = "");

struct ReductionWitness {
  Partition partition;
  std::vector<QMatrix> alpha;
  std::vector<QMatrix> beta;
};

/// {"kind": "reduction", "partition": [[i, ...], ...], "alpha": {"c": matrix}, "beta": {"c": matrix}}.
Json to_json(const ReductionWitness& w);
ReductionWitness reduction_witness_from_json(const Json& j, std::size_t num_cones, const std::string& where = "");

Partition partition_from_json(const Json& j, const std::string& where = "");

}  // namespace toricbundle
