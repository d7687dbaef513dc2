#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qfano/chambers.hpp"
#include "qfano/families.hpp"
#include "qfano/fano.hpp"
#include "qfano/toric.hpp"

namespace qfano::io {

using Json = nlohmann::ordered_json;

// {"n": <int>, "arrows": [[src, dst, mult], ...]}, 0-indexed. Throws ParseError.
Quiver parse_quiver(std::string_view text);
Quiver quiver_from_json(const Json& j);
Json to_json(const Quiver& q);

// Comma-separated integers, e.g. "1,1,-2". Throws ParseError.
std::vector<Int> parse_int_list(std::string_view text);

Json to_json(const DimVector& d);
Json to_json(const LinearForm& theta);

// {"status", "dimension", "picard_rank", "index", "theta", "witness", "notes"} in that order.
Json to_json(const FanoCertificate& cert);

// [[sign, run_length], ...]
Json to_json(const SignVector& signs);

// {"spec": {"n", "arrows"}, "dim", "rank", "index"}
Json to_json(const ToricCatalogEntry& entry);
Json catalog_to_json(const std::vector<ToricCatalogEntry>& catalog);

Json to_json(const SubspacePrediction& p);
Json to_json(const KroneckerPrediction& p);
Json to_json(const ThickenedPrediction& p);
Json to_json(const KroneckerMinDimReport& r);
Json to_json(const MukaiReport& r);

}  // namespace qfano::io
