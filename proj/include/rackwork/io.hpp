#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rackwork/euler.hpp"
#include "rackwork/structure.hpp"

namespace rackwork::io {

/// On-disk structure: a claimed kind plus both tables. Loading validates
/// shape and ranges only; whether the claim holds is for the checkers.
struct StructureFile {
  Kind kind = Kind::unchecked;
  OpTable dot;
  OpTable diamond;
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return dot.size(); }
  /// The tables as an unverified Structure.
  Structure as_unchecked() const;
  /// The tables with the claimed kind verified (throws verification_failed).
  Structure as_verified() const;
  static StructureFile from(const Structure& s, std::vector<std::string> labels = {});
};

struct GroupFile {
  GroupTable group;
  std::vector<std::string> labels;
};

struct PairMapFile {
  PairMap map;
  std::vector<std::string> labels;
};

// Parsers throw parse_error (malformed JSON, missing or mistyped fields,
// ragged matrices) or the table errors (index_out_of_range, ...).
StructureFile parse_structure(std::string_view json_text);
GroupFile parse_group(std::string_view json_text);
PairMapFile parse_pair_map(std::string_view json_text);

/// True if the document declares "kind": "pair_map".
bool is_pair_map_document(std::string_view json_text);

/// Canonical form: two-space indent, keys kind, n, dot, diamond, labels,
/// one matrix row per line, trailing newline.
std::string serialize(const StructureFile& f);
std::string serialize(const GroupFile& f);
std::string serialize(const PairMapFile& f);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view contents);

}  // namespace rackwork::io
