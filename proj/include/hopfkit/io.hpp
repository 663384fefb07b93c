#pragma once

// JSON serialization of fields, structure constants, YD modules and reports,
// and the `name:key=val,...` specs used by the command line.

#include <map>
#include <optional>

#include "json.hpp"
#include "hopfkit/constructors.hpp"

namespace hk {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json field_to_json(const Field& F);
Field field_from_json(const json& j);
json scalar_to_json(const Field& F, Scalar s);
json vector_to_json(const Field& F, const Vector& v);
json matrix_to_json(const Matrix& m);
json report_to_json(const Report& r);

// {field, dim, basis, mult, unit, comult, counit, antipode}; sparse entries.
json hopf_to_json(const HopfData& H);
HopfData hopf_from_json(const json& j);
// The algebra file plus "module_dim", "action" [[a,i,j,c]] and "coaction" [[i,a,j,c]].
json module_to_json(const YDModule& M);
YDModule module_from_json(const json& j);
// A Hopf algebra in C: its own structure constants with the module file of its object under "object".
json braided_to_json(const BraidedHopf& B);
BraidedHopf braided_from_json(const json& j);

// "p=7,root=6"; p may be Q.
Field parse_field_spec(const std::string& s);

struct AlgebraSpec {
  std::string name;
  std::map<std::string, std::string> params;
  std::string inner;  // for double:<spec>
};
// name[:key=val,...]; keys are validated against the named constructor.
AlgebraSpec parse_algebra_spec(const std::string& s);

struct BuiltAlgebra {
  HopfData H;                         // the algebra named by the spec
  std::optional<FamilyParams> family;  // set for family, sweedler, nichols, radford
  std::optional<ExteriorFactor> ext;   // family with braided = true
};
// Constructs the algebra; braided selects the exterior braided factor of a family.
BuiltAlgebra build_algebra(const AlgebraSpec& a, const Field& F, bool braided = false);

}  // namespace hk
