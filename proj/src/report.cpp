#include "closefact/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace closefact::report {
namespace {

using model::invalid_input;

std::string str(const BigInt& v) { return v.str(); }

template <class T>
Json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, BigInt>)
    return str(*v);
  else
    return *v;
}

BigInt big_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw invalid_input(std::string("record field '") + key + "' must be a decimal string");
  try {
    return parse_bigint(j.at(key).get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw invalid_input(std::string("record field '") + key + "': " + e.what());
  }
}

std::optional<BigInt> opt_big_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return big_field(j, key);
}

std::int64_t int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw invalid_input(std::string("record field '") + key + "' must be an integer");
  return j.at(key).get<std::int64_t>();
}

std::uint64_t uint_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned())
    throw invalid_input(std::string("record field '") + key + "' must be a non-negative integer");
  return j.at(key).get<std::uint64_t>();
}

model::LatticeTriple lattice_from_json(const Json& j) {
  const BigInt n = big_field(j, "n");
  const Json& xs = j.at("x");
  if (!xs.is_array() || xs.size() != 3) throw invalid_input("lattice record needs three x values");
  std::array<BigInt, 3> x;
  for (std::size_t i = 0; i < 3; ++i) x[i] = parse_bigint(xs[i].get<std::string>());
  return model::make_lattice_triple(n, x);
}

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "jsonl") return Format::jsonl;
  if (name == "csv") return Format::csv;
  if (name == "human") return Format::human;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

Json triple_record(const model::FactorizationTriple& t) {
  const model::CaseDecomposition c = model::classify(t);
  Json j;
  j["kind"] = "triple";
  j["n"] = str(t.n);
  j["A"] = str(t.A);
  j["B"] = str(t.B);
  j["a1"] = t.quad.a1;
  j["b1"] = t.quad.b1;
  j["a2"] = t.quad.a2;
  j["b2"] = t.quad.b2;
  j["C"] = t.quad.ceiling();
  j["case"] = std::string(model::to_string(c.tag));
  return j;
}

Json classify_record(const model::FactorizationTriple& t, const model::CaseDecomposition& c) {
  Json j = triple_record(t);
  const model::Witnesses& w = c.witnesses;
  Json wj;
  wj["M"] = opt(w.M);
  wj["A_prime"] = opt(w.A_prime);
  wj["A_dprime"] = opt(w.A_dprime);
  wj["B_prime"] = opt(w.B_prime);
  wj["h"] = opt(w.h);
  wj["k"] = opt(w.k);
  wj["l"] = opt(w.l);
  wj["d"] = opt(w.d);
  wj["split_middle"] = w.split_middle;
  j["witnesses"] = std::move(wj);
  return j;
}

Json no_solution_record(const model::OffsetQuad& q, std::string_view reason) {
  Json j;
  j["kind"] = "no_solution";
  j["a1"] = q.a1;
  j["b1"] = q.b1;
  j["a2"] = q.a2;
  j["b2"] = q.b2;
  j["d"] = str(q.d());
  j["reason"] = std::string(reason);
  return j;
}

Json lattice_json(const model::LatticeTriple& t) {
  Json j;
  j["n"] = str(t.n);
  j["x"] = Json::array({str(t.x[0]), str(t.x[1]), str(t.x[2])});
  j["y"] = Json::array({str(t.y[0]), str(t.y[1]), str(t.y[2])});
  j["gap"] = str(model::gap(t));
  return j;
}

Json family_record(const family::FamilyInstance& f) {
  Json j = triple_record(f.triple);
  j["kind"] = "family";
  j["N"] = f.N;
  const Json lat = lattice_json(f.lattice);
  j["x"] = lat["x"];
  j["y"] = lat["y"];
  j["gap"] = lat["gap"];
  j["attains_bound"] = family::family_attains_bound(f.N);
  const family::Cor1UpperCertificate up = family::cor1_upper_test(model::gap(f.lattice), f.n);
  j["cor1_margin"] = up.holds;
  j["cor1_margin_lhs"] = str(up.lhs);
  j["cor1_margin_rhs"] = str(up.rhs);
  const model::Cor1LowerCertificate low = model::cor1_lower_holds(f.lattice);
  j["cor1_lower"] = low.holds;
  return j;
}

Json threshold_record(const family::ThresholdReport& r) {
  Json j;
  j["kind"] = "family_threshold";
  j["N_max"] = r.N_max;
  j["N0"] = r.N0;
  j["failures"] = r.failures;
  return j;
}

Json scan_record(const search::ScanReport& r) {
  Json j;
  j["kind"] = "scan_report";
  j["scan"] = std::string(search::to_string(r.kind));
  j["range_lo"] = str(r.range_lo);
  j["range_hi"] = str(r.range_hi);
  j["max_A"] = opt(r.max_A);
  j["max_B"] = opt(r.max_B);
  Json at_a = Json::array();
  for (const auto& t : r.attaining_A) at_a.push_back(triple_record(t));
  Json at_b = Json::array();
  for (const auto& t : r.attaining_B) at_b.push_back(triple_record(t));
  j["attaining_A"] = std::move(at_a);
  j["attaining_B"] = std::move(at_b);
  j["within_thm2"] = opt(r.within_thm2);
  if (r.min_margin) {
    Json m = lattice_json(r.min_margin->triple);
    m["margin"] = str(r.min_margin->margin);
    j["min_margin"] = std::move(m);
  } else {
    j["min_margin"] = nullptr;
  }
  j["candidates"] = r.stats.candidates;
  j["solvable"] = r.stats.solvable;
  j["triples_checked"] = r.stats.triples_checked;
  j["violation_count"] = r.violations.size();
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json vj;
    vj["rule"] = v.rule;
    vj["n"] = str(v.n);
    vj["detail"] = v.detail;
    vj["triple"] = v.triple ? triple_record(*v.triple) : Json(nullptr);
    vs.push_back(std::move(vj));
  }
  j["violations"] = std::move(vs);
  return j;
}

model::FactorizationTriple triple_from_json(const Json& j) {
  model::FactorizationTriple t{big_field(j, "A"), big_field(j, "B"), big_field(j, "n"),
                               {int_field(j, "a1"), int_field(j, "b1"), int_field(j, "a2"),
                                int_field(j, "b2")}};
  if (!t.verify()) throw invalid_input("triple record does not re-verify: n=" + t.n.str());
  if (int_field(j, "C") != t.quad.ceiling()) throw invalid_input("triple record has wrong C");
  if (!j.contains("case") || !j.at("case").is_string() ||
      model::parse_case_tag(j.at("case").get<std::string>()) != model::case_of(t.quad)) {
    throw invalid_input("triple record has wrong case");
  }
  return t;
}

search::ScanReport scan_from_json(const Json& j) {
  search::ScanReport r;
  const std::string kind = j.at("scan").get<std::string>();
  if (kind == "quad_scan")
    r.kind = search::ScanKind::quad_scan;
  else if (kind == "gap_scan")
    r.kind = search::ScanKind::gap_scan;
  else if (kind == "cross_check")
    r.kind = search::ScanKind::cross_check;
  else
    throw invalid_input("unknown scan kind: " + kind);
  r.range_lo = big_field(j, "range_lo");
  r.range_hi = big_field(j, "range_hi");
  r.max_A = opt_big_field(j, "max_A");
  r.max_B = opt_big_field(j, "max_B");
  for (const Json& t : j.at("attaining_A")) r.attaining_A.push_back(triple_from_json(t));
  for (const Json& t : j.at("attaining_B")) r.attaining_B.push_back(triple_from_json(t));
  for (const auto& t : r.attaining_A) {
    if (!r.max_A || t.A != *r.max_A) throw invalid_input("attaining_A entry does not attain max_A");
  }
  for (const auto& t : r.attaining_B) {
    if (!r.max_B || t.B != *r.max_B) throw invalid_input("attaining_B entry does not attain max_B");
  }
  if (!j.at("within_thm2").is_null()) r.within_thm2 = j.at("within_thm2").get<bool>();
  if (!j.at("min_margin").is_null()) {
    const Json& m = j.at("min_margin");
    search::MarginRecord rec{lattice_from_json(m), big_field(m, "gap"), big_field(m, "margin")};
    if (model::gap(rec.triple) != rec.gap) throw invalid_input("min_margin gap mismatch");
    const model::Cor1LowerCertificate c = model::cor1_lower_test(rec.gap, rec.triple.n);
    if (c.lhs - c.rhs != rec.margin) throw invalid_input("min_margin margin mismatch");
    r.min_margin = std::move(rec);
  }
  r.stats.candidates = uint_field(j, "candidates");
  r.stats.solvable = uint_field(j, "solvable");
  r.stats.triples_checked = uint_field(j, "triples_checked");
  for (const Json& v : j.at("violations")) {
    search::Violation out{v.at("rule").get<std::string>(), big_field(v, "n"), std::nullopt,
                          v.at("detail").get<std::string>()};
    if (!v.at("triple").is_null()) out.triple = triple_from_json(v.at("triple"));
    r.violations.push_back(std::move(out));
  }
  if (uint_field(j, "violation_count") != r.violations.size())
    throw invalid_input("violation_count does not match violations");
  return r;
}

RecordWriter::RecordWriter(Format format, std::ostream& out) : format_(format), out_(out) {}

RecordWriter::~RecordWriter() {
  try {
    flush();
  } catch (...) {
  }
}

void RecordWriter::write(Json record) {
  if (format_ == Format::jsonl) {
    out_ << record.dump() << '\n';
    return;
  }
  pending_.push_back(std::move(record));
}

void RecordWriter::flush() {
  if (pending_.empty()) {
    out_.flush();
    return;
  }
  // Union of keys in first-seen order.
  std::vector<std::string> columns;
  for (const Json& r : pending_) {
    for (const auto& [key, _] : r.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::vector<std::vector<std::string>> rows;
  for (const Json& r : pending_) {
    std::vector<std::string> row;
    for (const auto& c : columns) row.push_back(r.contains(c) ? cell(r.at(c)) : "");
    rows.push_back(std::move(row));
  }
  pending_.clear();

  if (format_ == Format::csv) {
    for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << csv_escape(columns[i]);
    out_ << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out_ << (i ? "," : "") << csv_escape(row[i]);
      out_ << '\n';
    }
  } else if (rows.size() == 1) {
    std::size_t key_width = 0;
    for (const auto& c : columns) key_width = std::max(key_width, c.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out_ << columns[i] << std::string(key_width - columns[i].size() + 2, ' ') << rows[0][i] << '\n';
    }
  } else {
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
      width[i] = columns[i].size();
      for (const auto& row : rows) width[i] = std::max(width[i], row[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += "  ";
        s += cells[i];
        if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
      }
      out_ << s << '\n';
    };
    line(columns);
    for (const auto& row : rows) line(row);
  }
  out_.flush();
}

}  // namespace closefact::report
