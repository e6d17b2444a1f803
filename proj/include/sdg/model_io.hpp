#pragma once

#include <optional>
#include <string>

#include "sdg/connection.hpp"

namespace sdg {

/// A combinatorial model bundle loaded from JSON. Fields are present when
/// the corresponding keys appear in the file.
struct Model {
    SpacePtr space;
    GroupPtr group;
    std::optional<Form0> form0;
    std::optional<Form1> form1;
    std::optional<GroupConnection> connection;
    std::optional<AffineConnection> lambda;
};

/// Parse the model JSON:
///   {"points": ["a","b",...] | n,
///    "neighbours": [[i,j], ...] | "total",
///    "group": {"name": "S3"} | {"names": [...], "table": [[...]]},
///    "form0": {"0": "g", ...},
///    "form1": {"0,1": "g", ...},
///    "connection": {"0,1": "g", ...},
///    "lambda": {"0,1,2": p, ...}}
Model load_model(const std::string& json_text);
Model load_model_file(const std::string& path);

/// Validate a declared morphism {"source": {...}, "target": {...},
/// "map": [j0, j1, ...]}; rejects maps that fail neighbour preservation.
void check_morphism(const std::string& json_text);

} // namespace sdg
