#pragma once

#include "closefact/family.hpp"
#include "closefact/model.hpp"
#include "closefact/search.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

// Record schemas for the jsonl/csv/human outputs. Big integers travel as
// decimal strings; offsets and counts as JSON numbers.
namespace closefact::report {

using Json = nlohmann::ordered_json;

enum class Format { jsonl, csv, human };

Format parse_format(std::string_view name);

/// {kind:"triple", n, A, B, a1, b1, a2, b2, C, case}. The case comes from
/// model::classify, so this throws decomposition_failure on a broken triple.
Json triple_record(const model::FactorizationTriple& t);

/// triple_record plus a "witnesses" object.
Json classify_record(const model::FactorizationTriple& t, const model::CaseDecomposition& c);

Json no_solution_record(const model::OffsetQuad& q, std::string_view reason);

Json lattice_json(const model::LatticeTriple& t);

Json family_record(const family::FamilyInstance& f);
Json threshold_record(const family::ThresholdReport& r);

Json scan_record(const search::ScanReport& r);

/// Parses a triple record and re-verifies it: products, offset ordering,
/// the C and case fields. Throws model::invalid_input on any mismatch.
model::FactorizationTriple triple_from_json(const Json& j);

/// Parses a scan record, re-verifying every embedded triple.
search::ScanReport scan_from_json(const Json& j);

/// Buffers records and writes them in one of the three formats. jsonl
/// streams one compact object per line; csv and human need every record to
/// size their columns, so they write on flush().
class RecordWriter {
 public:
  RecordWriter(Format format, std::ostream& out);
  ~RecordWriter();
  RecordWriter(const RecordWriter&) = delete;
  RecordWriter& operator=(const RecordWriter&) = delete;

  void write(Json record);
  void flush();

 private:
  Format format_;
  std::ostream& out_;
  std::vector<Json> pending_;
};

}  // namespace closefact::report
