#pragma once

// JSON and CSV encodings. A polynomial is a JSON object from doubled
// exponent (as a string) to integer coefficient: t^{-1} is {"-2": 1}.
// Coefficients outside the 64-bit range are written as decimal strings.

#include <string>
#include <vector>

#include "json.hpp"
#include "lsa/blockdata.hpp"
#include "lsa/exthom.hpp"
#include "lsa/solver.hpp"
#include "lsa/weyl.hpp"

namespace lsa {

using nlohmann::json;

json to_json(const HalfLaurent& f);
HalfLaurent half_laurent_from_json(const json& j);

json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const json& j);

json to_json(const CharTable& table);
CharTable char_table_from_json(const json& j);

json to_json(const BlockData& block);
BlockData block_from_json(const json& j);

/// A dataset file is an array of blocks; a lone block object is accepted too.
json dataset_to_json(const std::vector<BlockData>& blocks);
std::vector<BlockData> dataset_from_json(const json& j);

/// Result object; "labels" carries orbit dimensions and duals so the file
/// can be dualized without the dataset.
json to_json(const SolveResult& result, const BlockData& block);
SolveResult result_from_json(const json& j);
/// The labels/orbits skeleton stored in a result object (ω is left empty).
BlockData block_skeleton_from_result_json(const json& j);

json to_json(const GradedDims& dims);

/// Lossy: one line per matrix entry with the polynomial pretty-printed.
std::string results_to_csv(const std::vector<SolveResult>& results);

json read_json_file(const std::string& path);
/// Writes j.dump(2) plus a trailing newline. Throws std::runtime_error on I/O failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lsa
