#pragma once

#include <string>

#include "json.hpp"
#include "matrank/constructions.hpp"
#include "matrank/enumerate.hpp"
#include "matrank/matrix.hpp"
#include "matrank/rank_comb.hpp"
#include "matrank/rank_real.hpp"

namespace matrank {

// Insertion-ordered JSON so emitted reports read top-down; indices inside
// certificates are 1-based throughout.
using Json = nlohmann::ordered_json;

// {"rows": [...], "cols": [...]}
Json to_json(const Rectangle& r);
// Array of rectangles.
Json to_json(const PartitionCert& c);
Json to_json(const CoverCert& c);
// [[i, j], ...]
Json to_json(const IsolationCert& c);
// Array of "numerator/denominator" strings, one per coefficient.
Json to_json(const SpanCertificate& c);
// {check, params, shapes: [{n, m, classes}], verdict, evidence,
//  budget: {cap, used}, elapsed_ms}
Json to_json(const SearchReport& r);
// {name, rows, cols, expected (stated values only), checksum}
Json to_json(const CatalogEntry& e);
// {rows, cols, real, binary, boolean, isolation,
//  certificates: {partition, cover, isolation}}
Json rank_report_json(const BinaryMatrix& m, const RankProfile& p);

// 2-space indent plus a trailing newline.
std::string pretty(const Json& j);

}  // namespace matrank
