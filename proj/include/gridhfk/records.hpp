#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gridhfk/grid.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/invariants.hpp"
#include "gridhfk/verify.hpp"

// Line-delimited record format: one JSON object per line, keys sorted, no
// insignificant whitespace. Every record has a "kind" field. Alexander
// gradings are written as numbers and may be half-integers (e.g. -0.5).
//
//   grid      {"kind":"grid","n":2,"o":[0,1],"x":[1,0]}
//   info      {"components":1,"crossings":0,"component_of_column":[0,0],"kind":"info","n":2}
//   ranks     {"components":1,"kind":"homology","n":2,"ranks":[{"m":-1,"rank":1,"s":-1},...]}
//             (kind "hfk" for the peeled table)
//   knot      {"alexander":[{"c":1,"e":0}],"components":1,"genus":0,"is_fibered":true,
//              "is_unknot":true,"kind":"knot","n":2,"poincare":[...],"total_rank":2}
//   value     {"kind":"genus","n":5,"value":1}   (also unknot, fibered, alexander)
//   verify    {"kind":"verify","n":4,"generators":24,...,"ok":true}
//   error     {"error":"NotAKnot","kind":"error","message":"..."}
namespace gridhfk::records {

using Record = nlohmann::json;

Record to_record(const GridDiagram& grid);
Record to_record(const LinkSummary& summary, int grid_size);
Record to_record(const BigradedRanks& ranks, std::string_view kind, int grid_size, int components);
Record to_record(const KnotReport& report);
Record to_record(const VerifyReport& report);

// Throw Error{SyntaxError} on a record of the wrong kind or shape.
GridDiagram grid_from_record(const Record& record);
LinkSummary link_summary_from_record(const Record& record);
BigradedRanks ranks_from_record(const Record& record);
KnotReport knot_report_from_record(const Record& record);
VerifyReport verify_report_from_record(const Record& record);

Record alexander_to_record(const LaurentPolynomial& polynomial);
LaurentPolynomial alexander_from_record(const Record& coefficients);

// One line, without the trailing newline.
std::string dump(const Record& record);
// Throws Error{SyntaxError} on malformed input.
Record parse(std::string_view line);

}  // namespace gridhfk::records
