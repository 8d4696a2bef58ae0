// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// JSON forms of the engine's values.  Scalars are strings ("-3/2",
// "1/2 + 1 i") so nothing is lost in transit; every list is emitted in the
// engine's own deterministic order, and objects keep insertion order, so
// equal values always serialize to identical bytes.

#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "qweb/normalform.hpp"
#include "qweb/qrep.hpp"
#include "qweb/scalar.hpp"
#include "qweb/sergeev.hpp"

namespace qweb::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"matrix": [[..]], "legs": [{"row": i, "col": j, "nu": [..], "eta": [..]}]}
// with 1-based leg positions; only decorated legs are listed.
Json to_json(const ElementaryCFD& c);
ElementaryCFD cfd_from_json(const Json& j);

Json to_json(const NormalMorphism& m);
NormalMorphism normal_from_json(const Json& j);

// Sparse entries [row, col, value] in column-major order.
Json to_json(const SuperLinearMap& m);

Json to_json(const PBWMonomial& m);
Json to_json(const SergeevElement& u);

// {"error": {"kind": .., "message": .., "line": .., "column": ..}}
Json error_json(const std::string& kind, const std::string& message,
                std::optional<std::pair<int, int>> where = std::nullopt);

}  // namespace qweb::cli
