#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sgw/canceling.hpp"
#include "sgw/extremal.hpp"
#include "sgw/graph.hpp"
#include "sgw/labels.hpp"
#include "sgw/path_engine.hpp"

// Structured output: one JSON object per line. Every report type converts
// both ways, so parsing a line reproduces the in-memory value.
namespace sgw {

using Json = nlohmann::json;

void to_json(Json& j, const Edge& e);
void from_json(const Json& j, Edge& e);
void to_json(Json& j, const Graph& g);
void from_json(const Json& j, Graph& g);
void to_json(Json& j, const Signing& s);
void from_json(const Json& j, Signing& s);
void to_json(Json& j, const EdgeColoring& c);
void from_json(const Json& j, EdgeColoring& c);
// A number, or the string "inf".
void to_json(Json& j, const ExtendedCount& x);
void from_json(const Json& j, ExtendedCount& x);
void to_json(Json& j, const VertexSet& s);
void from_json(const Json& j, VertexSet& s);
void to_json(Json& j, const PathWitness& p);
void from_json(const Json& j, PathWitness& p);

void to_json(Json& j, const DistanceResult& r);
void from_json(const Json& j, DistanceResult& r);
void to_json(Json& j, const StructuralReport& r);
void from_json(const Json& j, StructuralReport& r);
void to_json(Json& j, const FailureCertificate& c);
void from_json(const Json& j, FailureCertificate& c);
void to_json(Json& j, const PairWitness& w);
void from_json(const Json& j, PairWitness& w);
void to_json(Json& j, const CancelingVerdict& v);
void from_json(const Json& j, CancelingVerdict& v);
// Also writes "failures"; ignored when reading.
void to_json(Json& j, const NecessaryReport& r);
void from_json(const Json& j, NecessaryReport& r);
void to_json(Json& j, const SoltesReport& r);
void from_json(const Json& j, SoltesReport& r);

void to_json(Json& j, const SearchResult& r);
void from_json(const Json& j, SearchResult& r);
void to_json(Json& j, const MinWienerResult& r);
void from_json(const Json& j, MinWienerResult& r);
void to_json(Json& j, const ThresholdRow& r);
void from_json(const Json& j, ThresholdRow& r);
void to_json(Json& j, const SignedTreeInstance& t);
void from_json(const Json& j, SignedTreeInstance& t);
void to_json(Json& j, const SandwichReport& r);
void from_json(const Json& j, SandwichReport& r);
void to_json(Json& j, const DoubleStarReport& r);
void from_json(const Json& j, DoubleStarReport& r);
void to_json(Json& j, const DyckRecord& r);
void from_json(const Json& j, DyckRecord& r);

// Writes one compact line ending in '\n'.
std::string json_line(const Json& j);
// Parses every non-blank line; ParseError names the offending line.
std::vector<Json> parse_json_lines(std::string_view text);

}  // namespace sgw
