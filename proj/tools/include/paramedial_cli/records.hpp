#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paramedial/affine.hpp"

namespace paramedial::cli {

/// One exported isomorphism class.
struct Record {
  AffineForm form;
  bool simple = false;
  std::string case_label;

  friend bool operator==(const Record&, const Record&) = default;
};

/// Parses "cyclic p k" or "elem2 p"; throws PreconditionViolation on bad shape.
GroupDescriptor parse_group(const std::vector<std::string>& args);

/// "cyclic 3 2" / "elem2 5": the canonical parameter string of a group.
std::string group_parameters(const GroupDescriptor& g);

/// Class representatives of g in enumeration order.
std::vector<Record> collect_records(const GroupDescriptor& g, bool simple_only);

/// JSON array, one record per line.
std::string write_json(const std::vector<Record>& records);
/// Throws ParseError on malformed input, NotParamedial etc. on invalid forms.
std::vector<Record> read_json(std::string_view text);

/// Header group,phi,psi,c,simple,case.
std::string write_csv(const std::vector<Record>& records);

/// A "# ..." line per record followed by its Cayley table.
std::string write_tables(const std::vector<Record>& records);

}  // namespace paramedial::cli
