#include "matrank/serialize.hpp"

#include <cstdio>

namespace matrank {

namespace {

Json index_list(std::uint64_t mask) {
  Json out = Json::array();
  for (int i = 0; i < 64; ++i)
    if ((mask >> i) & 1ull) out.push_back(i + 1);
  return out;
}

Json rectangle_list(const std::vector<Rectangle>& rects) {
  Json out = Json::array();
  for (const Rectangle& r : rects) out.push_back(to_json(r));
  return out;
}

std::string checksum_hex(std::uint64_t value) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "0x%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace

Json to_json(const Rectangle& r) {
  return Json{{"rows", index_list(r.row_set)}, {"cols", index_list(r.col_set)}};
}

Json to_json(const PartitionCert& c) { return rectangle_list(c.rectangles); }

Json to_json(const CoverCert& c) { return rectangle_list(c.rectangles); }

Json to_json(const IsolationCert& c) {
  Json out = Json::array();
  for (const auto& [i, j] : c.entries) out.push_back(Json::array({i + 1, j + 1}));
  return out;
}

Json to_json(const SpanCertificate& c) {
  Json out = Json::array();
  for (const Rational& q : c.coefficients)
    out.push_back(q.get_num().get_str() + "/" + q.get_den().get_str());
  return out;
}

Json to_json(const SearchReport& r) {
  Json shapes = Json::array();
  for (const ShapeCount& s : r.shapes)
    shapes.push_back(Json{{"n", s.rows}, {"m", s.cols}, {"classes", s.classes}});
  Json params = Json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  return Json{{"check", r.check},
              {"params", params},
              {"shapes", shapes},
              {"verdict", to_string(r.verdict)},
              {"evidence", r.evidence},
              {"budget", Json{{"cap", r.budget_cap}, {"used", r.budget_used}}},
              {"elapsed_ms", r.elapsed_ms}};
}

Json to_json(const CatalogEntry& e) {
  Json expected = Json::object();
  if (e.expected.real >= 0) expected["real"] = e.expected.real;
  if (e.expected.binary >= 0) expected["binary"] = e.expected.binary;
  if (e.expected.boolean >= 0) expected["boolean"] = e.expected.boolean;
  if (e.expected.isolation >= 0) expected["isolation"] = e.expected.isolation;
  return Json{{"name", e.name},
              {"rows", e.matrix.rows()},
              {"cols", e.matrix.cols()},
              {"expected", expected},
              {"checksum", checksum_hex(e.checksum)}};
}

Json rank_report_json(const BinaryMatrix& m, const RankProfile& p) {
  return Json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"real", p.real},
              {"binary", p.binary},
              {"boolean", p.boolean},
              {"isolation", p.isolation},
              {"certificates", Json{{"partition", to_json(p.partition)},
                                    {"cover", to_json(p.cover)},
                                    {"isolation", to_json(p.isolation_set)}}}};
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace matrank
