#pragma once

#include <string>

#include <json.hpp>

#include "cgm/oracle.hpp"
#include "cgm/structure.hpp"
#include "cgm/witnesses.hpp"

namespace cgm {

// Insertion-ordered so output bytes are stable for fixed inputs.
using Json = nlohmann::ordered_json;

// Wraps nlohmann parsing to report failures as parse errors with a
// line/column position instead of a byte offset.
Json parse_json_text(const std::string& text);

Json matrix_to_json(const QMatrix& m);
Json matrix_to_json(const Matrix<Fp>& m);
QMatrix qmatrix_from_json(const Json& j);
Matrix<Fp> fpmatrix_from_json(const Json& j);

Json qpoly_to_json(const QPoly& f);
QPoly qpoly_from_json(const Json& j);

Json structure_report_to_json(const StructureReport& r);
Json witness_to_json(const PathWitness& pw);
PathWitness witness_from_json(const Json& j);
Json verify_report_to_json(const VerifyReport& r);
Json diameter_to_json(const RingSpec& spec, const DiameterResult& d);
Json prop3_to_json(const Prop3Report& r);

} // namespace cgm
