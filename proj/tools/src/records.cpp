#include "paramedial_cli/records.hpp"

#include <charconv>

#include "json.hpp"
#include "paramedial/enum_cyclic.hpp"
#include "paramedial/enum_gl2.hpp"
#include "paramedial/errors.hpp"

namespace paramedial::cli {

using Json = nlohmann::ordered_json;

namespace {

Int parse_int(const std::string& s, const char* what) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw PreconditionViolation(std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
  return v;
}

Json matrix_json(const std::vector<std::vector<Int>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

Json group_json(const GroupDescriptor& g) {
  return Json{{"kind", g.is_cyclic() ? "cyclic" : "elem2"}, {"p", g.prime()}, {"k", g.exponent()}};
}

Json record_json(const Record& r) {
  const auto& f = r.form;
  return Json{{"group", group_json(f.group())},
              {"phi", matrix_json(f.phi_rows())},
              {"psi", matrix_json(f.psi_rows())},
              {"c", f.c_entries()},
              {"simple", r.simple},
              {"case", r.case_label}};
}

std::vector<std::vector<Int>> read_matrix(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_array() || j.size() != dim) throw ParseError(std::string(what) + " must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dim) throw ParseError(std::string(what) + " has a malformed row");
    rows.push_back(row.get<std::vector<Int>>());
  }
  return rows;
}

Record record_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("record must be an object");
  for (const char* key : {"group", "phi", "psi", "c", "simple", "case"}) {
    if (!j.contains(key)) throw ParseError(std::string("record lacks \"") + key + "\"");
  }
  const auto& g = j.at("group");
  const std::string kind = g.at("kind").get<std::string>();
  const Int p = g.at("p").get<Int>();
  const int k = g.at("k").get<int>();
  const auto c = j.at("c").get<std::vector<Int>>();

  Record r{AffineForm::cyclic(2, 1, 1, 1, 0), j.at("simple").get<bool>(), j.at("case").get<std::string>()};
  if (kind == "cyclic") {
    const auto phi = read_matrix(j.at("phi"), 1, "phi");
    const auto psi = read_matrix(j.at("psi"), 1, "psi");
    if (c.size() != 1) throw ParseError("c must have one entry over a cyclic group");
    r.form = AffineForm::cyclic(p, k, phi[0][0], psi[0][0], c[0]);
  } else if (kind == "elem2") {
    if (k != 2) throw ParseError("elem2 groups have k = 2");
    const Modulus f(p);
    const auto phi = read_matrix(j.at("phi"), 2, "phi");
    const auto psi = read_matrix(j.at("psi"), 2, "psi");
    if (c.size() != 2) throw ParseError("c must have two entries over Z_p^2");
    r.form = AffineForm::planar(Mat2(phi[0][0], phi[0][1], phi[1][0], phi[1][1], f),
                                Mat2(psi[0][0], psi[0][1], psi[1][0], psi[1][1], f), Vec2(c[0], c[1], f));
  } else {
    throw ParseError("unknown group kind '" + kind + "'");
  }
  const auto canonical = record_json(r);
  if (canonical.at("phi") != j.at("phi") || canonical.at("psi") != j.at("psi") || canonical.at("c") != j.at("c")) {
    throw ParseError("entries must be reduced residues");
  }
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

GroupDescriptor parse_group(const std::vector<std::string>& args) {
  if (args.empty()) throw PreconditionViolation("--group needs 'cyclic p k' or 'elem2 p'");
  if (args[0] == "cyclic") {
    if (args.size() != 3) throw PreconditionViolation("--group cyclic needs p and k");
    const Int k = parse_int(args[2], "k");
    if (k < 1 || k > 62) throw PreconditionViolation("k out of range");
    return GroupDescriptor::cyclic(parse_int(args[1], "p"), static_cast<int>(k));
  }
  if (args[0] == "elem2") {
    if (args.size() != 2) throw PreconditionViolation("--group elem2 needs p");
    return GroupDescriptor::elem2(parse_int(args[1], "p"));
  }
  throw PreconditionViolation("unknown group kind '" + args[0] + "'; use cyclic or elem2");
}

std::string group_parameters(const GroupDescriptor& g) {
  if (g.is_cyclic()) return "cyclic " + std::to_string(g.prime()) + " " + std::to_string(g.exponent());
  return "elem2 " + std::to_string(g.prime());
}

std::vector<Record> collect_records(const GroupDescriptor& g, bool simple_only) {
  std::vector<Record> out;
  if (g.is_cyclic()) {
    const auto cls = enumerate_cyclic(g.modulus());
    for (std::size_t i = 0; i < cls.forms.size(); ++i) {
      const bool simple = is_simple(cls.forms[i]);
      if (simple_only && !simple) continue;
      out.push_back({cls.forms[i], simple, cls.cases[i]});
    }
    return out;
  }
  const auto cls = enumerate_gl2(g.prime());
  for (const auto& row : cls.rows) {
    if (simple_only && !row.simple) continue;
    for (const auto& c : row.coset_reps) out.push_back({AffineForm::planar(row.phi, row.psi, c), row.simple, row.case_label});
  }
  return out;
}

std::string write_json(const std::vector<Record>& records) {
  if (records.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    out += "  " + record_json(records[i]).dump();
    out += i + 1 < records.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::vector<Record> read_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("expected a JSON array of records");
  std::vector<Record> out;
  try {
    for (const auto& j : doc) out.push_back(record_from_json(j));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
  return out;
}

std::string write_csv(const std::vector<Record>& records) {
  std::string out = "group,phi,psi,c,simple,case\n";
  for (const auto& r : records) {
    const auto j = record_json(r);
    out += csv_field(r.form.group().name()) + ",";
    out += csv_field(j.at("phi").dump()) + ",";
    out += csv_field(j.at("psi").dump()) + ",";
    out += csv_field(j.at("c").dump()) + ",";
    out += std::string(r.simple ? "true" : "false") + ",";
    out += csv_field(r.case_label) + "\n";
  }
  return out;
}

std::string write_tables(const std::vector<Record>& records) {
  std::string out;
  for (const auto& r : records) {
    out += "# " + r.form.to_string() + " simple=" + (r.simple ? "true" : "false") + " case=" + r.case_label + "\n";
    out += materialize(r.form).to_text();
  }
  return out;
}

}  // namespace paramedial::cli
