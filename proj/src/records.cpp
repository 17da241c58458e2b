#include "gridhfk/records.hpp"

#include <cmath>

#include "gridhfk/error.hpp"

namespace gridhfk::records {
namespace {

using nlohmann::json;

void expect_kind(const Record& record, std::string_view kind) {
  if (!record.is_object() || !record.contains("kind") || record["kind"] != kind) {
    throw Error(ErrorKind::SyntaxError, "expected a record of kind '" + std::string(kind) + "'");
  }
}

// Guards nlohmann accessors so shape errors surface as SyntaxError.
template <class F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("malformed record: ") + e.what());
  }
}

json half_int_to_json(HalfInt h) {
  if (h.is_integer()) return h.integer();
  return h.to_double();
}

HalfInt half_int_from_json(const json& value) {
  const double twice = value.get<double>() * 2.0;
  if (twice != std::round(twice)) {
    throw Error(ErrorKind::SyntaxError, "Alexander grading is not a half-integer");
  }
  return HalfInt::from_twice(static_cast<long long>(std::llround(twice)));
}

json grading_list(const std::map<Bigrading, long long>& terms, const char* value_key) {
  json list = json::array();
  // Descending Alexander, then descending Maslov, matching the text output.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    list.push_back({{"m", it->first.maslov},
                    {"s", half_int_to_json(it->first.alexander)},
                    {value_key, it->second}});
  }
  return list;
}

}  // namespace

Record to_record(const GridDiagram& grid) {
  return {{"kind", "grid"},
          {"n", grid.size()},
          {"o", std::vector<int>(grid.o_rows().begin(), grid.o_rows().end())},
          {"x", std::vector<int>(grid.x_rows().begin(), grid.x_rows().end())}};
}

GridDiagram grid_from_record(const Record& record) {
  expect_kind(record, "grid");
  return guarded([&] {
    return new_grid(record.at("n").get<int>(), record.at("o").get<std::vector<int>>(),
                    record.at("x").get<std::vector<int>>());
  });
}

Record to_record(const LinkSummary& summary, int grid_size) {
  return {{"kind", "info"},
          {"n", grid_size},
          {"components", summary.component_count},
          {"crossings", summary.crossing_count},
          {"component_of_column", summary.component_of_column}};
}

LinkSummary link_summary_from_record(const Record& record) {
  expect_kind(record, "info");
  return guarded([&] {
    LinkSummary s;
    s.component_count = record.at("components").get<int>();
    s.crossing_count = record.at("crossings").get<int>();
    s.component_of_column = record.at("component_of_column").get<std::vector<int>>();
    return s;
  });
}

Record to_record(const BigradedRanks& ranks, std::string_view kind, int grid_size,
                 int components) {
  std::map<Bigrading, long long> terms;
  for (const auto& [g, r] : ranks.ranks) terms[g] = static_cast<long long>(r);
  return {{"kind", kind},
          {"n", grid_size},
          {"components", components},
          {"ranks", grading_list(terms, "rank")}};
}

BigradedRanks ranks_from_record(const Record& record) {
  if (!record.is_object() || !record.contains("kind") ||
      (record["kind"] != "homology" && record["kind"] != "hfk")) {
    throw Error(ErrorKind::SyntaxError, "expected a record of kind 'homology' or 'hfk'");
  }
  return guarded([&] {
    BigradedRanks ranks;
    for (const auto& entry : record.at("ranks")) {
      ranks.add({entry.at("m").get<int>(), half_int_from_json(entry.at("s"))},
                entry.at("rank").get<std::uint64_t>());
    }
    return ranks;
  });
}

Record alexander_to_record(const LaurentPolynomial& polynomial) {
  json list = json::array();
  const auto& c = polynomial.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    list.push_back({{"e", it->first}, {"c", it->second}});
  }
  return list;
}

LaurentPolynomial alexander_from_record(const Record& coefficients) {
  return guarded([&] {
    std::map<int, long long> c;
    for (const auto& entry : coefficients) c[entry.at("e").get<int>()] += entry.at("c").get<long long>();
    return LaurentPolynomial(std::move(c));
  });
}

Record to_record(const KnotReport& report) {
  return {{"kind", "knot"},
          {"n", report.grid_size},
          {"components", report.components},
          {"total_rank", report.total_rank},
          {"genus", report.genus},
          {"is_unknot", report.is_unknot},
          {"is_fibered", report.is_fibered},
          {"alexander", alexander_to_record(report.alexander)},
          {"poincare", grading_list(report.poincare.terms(), "c")}};
}

KnotReport knot_report_from_record(const Record& record) {
  expect_kind(record, "knot");
  return guarded([&] {
    KnotReport report;
    report.grid_size = record.at("n").get<int>();
    report.components = record.at("components").get<int>();
    report.total_rank = record.at("total_rank").get<std::uint64_t>();
    report.genus = record.at("genus").get<int>();
    report.is_unknot = record.at("is_unknot").get<bool>();
    report.is_fibered = record.at("is_fibered").get<bool>();
    report.alexander = alexander_from_record(record.at("alexander"));
    for (const auto& entry : record.at("poincare")) {
      report.poincare.add({entry.at("m").get<int>(), half_int_from_json(entry.at("s"))},
                          entry.at("c").get<long long>());
    }
    return report;
  });
}

Record to_record(const VerifyReport& r) {
  return {{"kind", "verify"},
          {"n", r.grid_size},
          {"generators", r.generators},
          {"tilde_terms", r.tilde_terms},
          {"minus_terms", r.minus_terms},
          {"rectangles", r.rectangles},
          {"tilde_square_failures", r.tilde_square_failures},
          {"minus_square_failures", r.minus_square_failures},
          {"grading_failures", r.grading_failures},
          {"index_failures", r.index_failures},
          {"ok", r.ok()}};
}

VerifyReport verify_report_from_record(const Record& record) {
  expect_kind(record, "verify");
  return guarded([&] {
    VerifyReport r;
    r.grid_size = record.at("n").get<int>();
    r.generators = record.at("generators").get<std::uint64_t>();
    r.tilde_terms = record.at("tilde_terms").get<std::uint64_t>();
    r.minus_terms = record.at("minus_terms").get<std::uint64_t>();
    r.rectangles = record.at("rectangles").get<std::uint64_t>();
    r.tilde_square_failures = record.at("tilde_square_failures").get<std::uint64_t>();
    r.minus_square_failures = record.at("minus_square_failures").get<std::uint64_t>();
    r.grading_failures = record.at("grading_failures").get<std::uint64_t>();
    r.index_failures = record.at("index_failures").get<std::uint64_t>();
    return r;
  });
}

std::string dump(const Record& record) { return record.dump(); }

Record parse(std::string_view line) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, std::string("malformed record: ") + e.what());
  }
}

}  // namespace gridhfk::records
