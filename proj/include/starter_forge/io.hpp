#pragma once

// Text formats.
//
// Partition document (JSON, UTF-8, decimal integers):
//   {
//     "order": 5,
//     "pairs": [[1, 2], [3, 4]],
//     "metadata": {"name": "R5"}
//   }
// Rendering is canonical: pairs sorted ascending by their smaller element and
// written smaller element first, so equal partitions render byte-identically.
//
// Skolem sequences: whitespace-separated integers, one sequence per line.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "starter_forge/generators.hpp"
#include "starter_forge/products.hpp"
#include "starter_forge/zn.hpp"

namespace starter_forge {

using Json = nlohmann::ordered_json;

struct PartitionDocument {
  TwoPartition partition;
  Json metadata = Json::object();
};

// Throws Error(Parse) with line/column for malformed text, or the partition
// constructor's error for well-formed documents describing invalid partitions.
PartitionDocument parse_partition_document(std::string_view text);
PartitionDocument load_partition_document(const std::filesystem::path& path);

std::string render_partition_document(const TwoPartition& p, const Json& metadata = Json::object());

// The same document on a single line, for streams of results.
std::string render_partition_compact(const TwoPartition& p, const Json& metadata = Json::object());

// A product document: the partition plus one provenance record per pair.
std::string render_product_document(const ProductResult& r, const Json& metadata = Json::object());

// "1,2 3,4" -> {{1,2},{3,4}}.
std::vector<std::pair<std::int64_t, std::int64_t>> parse_inline_pairs(std::string_view text);

Json report_to_json(const PropertyReport& r);
std::string render_report(const PropertyReport& r);

std::vector<SkolemSequence> parse_skolem_sequences(std::string_view text);
std::string render_skolem_sequence(const SkolemSequence& s);

}  // namespace starter_forge
