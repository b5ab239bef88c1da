#pragma once

#include <json.hpp>

#include "kassoc/algebra.hpp"
#include "kassoc/combinatorics.hpp"
#include "kassoc/coords.hpp"
#include "kassoc/fan.hpp"
#include "kassoc/tropical.hpp"

namespace kassoc {

using json = nlohmann::ordered_json;

// Malformed or inconsistent JSON input; the message names the location.
struct JsonError : Error {
    using Error::Error;
};

json parse_json_text(const std::string& text, const std::string& source = "input");
json read_json_file(const std::string& path);

// Vertex labels in JSON are shifted by `base` (0 or 1); internal labels are 1-based.
Edge edge_from_json(const json& j, int n, int base, const std::string& where);
Edge edge_from_key(const std::string& key, int n, int base, const std::string& where);
std::string edge_key(const Edge& e, int base);

json to_json(const Edge& e, int base = 1);
json to_json(const EdgeSet& s, int base = 1);
EdgeSet edgeset_from_json(const json& j, int base = 1);

json to_json(const WeightVector& v, int base = 1);
WeightVector weightvector_from_json(const json& j, int base = 1);
// Accepts "-inf" entries in the v basis.
TropicalWeights tropical_weights_from_json(const json& j, int base = 1);
json to_json(const TropicalWeights& v, int base = 1);

json to_json(const TropicalMatrix& m);
TropicalMatrix tropical_matrix_from_json(const json& j);

json to_json(const AntisymmetricMatrix& m, int base = 1);
AntisymmetricMatrix antisymmetric_from_json(const json& j, int base = 1);

json to_json(const Matching& m, int base = 1);
json to_json(const LinearForm& f, int base = 1);
json to_json(const ConeDescription& c, int base = 1);
json to_json(const SparsePolynomial& p, int base = 1);
json to_json(const UgbCertificate& c, int base = 1);
json to_json(const FanDescription& f, int base = 1);
json to_json(const FanReport& r, int base = 1);
json to_json(const PolytopeH& p, int base = 1);

}  // namespace kassoc
