#pragma once

#include <json.hpp>

#include "incmon/conjugacy.hpp"
#include "incmon/context.hpp"
#include "incmon/idempotent.hpp"
#include "incmon/oracle.hpp"

namespace incmon {

using Json = nlohmann::json;

// Poset files: {"labels": [...], "covers": [[i, j], ...]} with 0-based label
// indices. Serialization emits the stored linear extension and its Hasse
// edges, so parse(serialize(p)) == p.
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);

// Matrices: {"field": "rationals", "entries": [["1", "-2/3"], ...]} with
// string entries, or {"field": "gf", "q": 3, "entries": [[0, 2], ...]} with
// integer residues.
Json matrix_to_json(const ExactMatrix& x);
ExactMatrix matrix_from_json(const Json& j);

Json index_set_to_json(const IndexSet& s);  // 1-based member array

Json context_to_json(const MonoidContext& ctx);
MonoidContext context_from_json(const Json& j);

// Block-element pair files: {"k": 1, "x": <matrix>, "y": <matrix>}.
struct BlockPair {
  BlockElement x;
  BlockElement y;
};
BlockPair block_pair_from_json(const Json& j);

Json verdict_to_json(const ConjugacyVerdict& v);
Json orthodoxy_report_to_json(const OrthodoxyReport& r, const OrthodoxMode& mode);
Json enumeration_to_json(const IdempotentEnumeration& e, bool include_elements);

Json parse_json_text(const std::string& text);  // ParseError on bad input
Json load_json_file(const std::string& path);   // ParseError / FileError

}  // namespace incmon
