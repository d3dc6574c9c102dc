#ifndef CURVEMODULI_JSON_IO_HPP
#define CURVEMODULI_JSON_IO_HPP

#include "json.hpp"

#include "curvemoduli/blowup.hpp"

namespace curvemoduli {

using Json = nlohmann::json;

// Encodings use bit-exact rational strings for every coefficient.
// Malformed input raises ParseError.

Json form_to_json(const Form& f);
Form form_from_json(const Json& j);

Json biform_to_json(const BiForm& b);
BiForm biform_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json curve_to_json(const Curve& c);
Curve curve_from_json(const Json& j);

Json pair_to_json(const CurvePointPair& p);
CurvePointPair pair_from_json(const Json& j);

Json matrix_to_json(const MatrixA& a);
MatrixA matrix_from_json(const Json& j);

Json tangent_to_json(const TangentVector& b);
TangentVector tangent_from_json(const Json& j);

Json group_to_json(const GroupElement& e);
GroupElement group_from_json(const Json& j);

Json normalization_to_json(const Normalization& n);
Normalization normalization_from_json(const Json& j);

Json phi_to_json(const PhiMatrix& m);
PhiMatrix phi_from_json(const Json& j);

Json automorphism_to_json(const Automorphism& a);
Automorphism automorphism_from_json(const Json& j);

/// Reads and parses a JSON file; ParseError on unreadable or invalid input.
Json load_json_file(const std::string& path);

} // namespace curvemoduli

#endif
