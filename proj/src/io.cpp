#include "rackwork/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rackwork/error.hpp"

namespace rackwork::io {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

json parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  return doc;
}

const json& field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t read_size(const json& doc) {
  const auto& n = field(doc, "n");
  if (!n.is_number_unsigned() || n.get<std::uint64_t>() == 0) malformed("\"n\" must be a positive integer");
  return n.get<std::size_t>();
}

Element read_element(const json& v, const char* key) {
  if (!v.is_number_unsigned()) malformed(std::string("\"") + key + "\" entries must be non-negative integers");
  return v.get<Element>();
}

OpTable read_matrix(const json& doc, const char* key, std::size_t n) {
  const auto& m = field(doc, key);
  if (!m.is_array() || m.size() != n) malformed(std::string("\"") + key + "\" must have " + std::to_string(n) + " rows");
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != n)
      malformed(std::string("\"") + key + "\" rows must have " + std::to_string(n) + " entries");
    for (const auto& v : row) entries.push_back(read_element(v, key));
  }
  return make_op_table(n, std::move(entries));
}

std::vector<std::string> read_labels(const json& doc, std::size_t n) {
  const auto it = doc.find("labels");
  if (it == doc.end() || it->is_null()) return {};
  if (!it->is_array() || it->size() != n) malformed("\"labels\" must list " + std::to_string(n) + " strings");
  std::vector<std::string> labels;
  for (const auto& l : *it) {
    if (!l.is_string()) malformed("\"labels\" must be strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

void write_matrix(std::ostringstream& os, const char* key, const OpTable& t, bool last) {
  const std::size_t n = t.size();
  os << "  \"" << key << "\": [\n";
  for (Element a = 0; a < n; ++a) {
    os << "    [";
    for (Element b = 0; b < n; ++b) os << (b ? ", " : "") << t(a, b);
    os << (a + 1 < n ? "],\n" : "]\n");
  }
  os << (last ? "  ]\n" : "  ],\n");
}

void write_labels(std::ostringstream& os, const std::vector<std::string>& labels) {
  os << "  \"labels\": [";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : "") << json(labels[i]).dump();
  os << "]\n";
}

}  // namespace

Structure StructureFile::as_unchecked() const { return make_structure(dot, diamond, Kind::unchecked); }

Structure StructureFile::as_verified() const { return make_structure(dot, diamond, kind); }

StructureFile StructureFile::from(const Structure& s, std::vector<std::string> labels) {
  return StructureFile{s.kind(), s.dot(), s.diamond(), std::move(labels)};
}

StructureFile parse_structure(std::string_view text) {
  const json doc = parse_document(text);
  const auto& kind = field(doc, "kind");
  if (!kind.is_string()) malformed("\"kind\" must be a string");
  StructureFile f;
  f.kind = kind_from_string(kind.get<std::string>());
  const std::size_t n = read_size(doc);
  f.dot = read_matrix(doc, "dot", n);
  f.diamond = read_matrix(doc, "diamond", n);
  f.labels = read_labels(doc, n);
  return f;
}

GroupFile parse_group(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t n = read_size(doc);
  GroupFile g{validate_group(read_matrix(doc, "mul", n)), read_labels(doc, n)};
  return g;
}

bool is_pair_map_document(std::string_view text) {
  try {
    const json doc = json::parse(text.begin(), text.end());
    return doc.is_object() && doc.value("kind", json()).is_string() && doc["kind"] == "pair_map";
  } catch (const json::exception&) {
    return false;
  }
}

PairMapFile parse_pair_map(std::string_view text) {
  const json doc = parse_document(text);
  if (field(doc, "kind") != "pair_map") malformed("\"kind\" must be \"pair_map\"");
  const std::size_t n = read_size(doc);
  const auto& rows = field(doc, "out");
  if (!rows.is_array() || rows.size() != n) malformed("\"out\" must have " + std::to_string(n) + " rows");
  std::vector<ElementPair> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) malformed("\"out\" rows must have " + std::to_string(n) + " pairs");
    for (const auto& p : row) {
      if (!p.is_array() || p.size() != 2) malformed("\"out\" entries must be pairs");
      out.push_back({read_element(p[0], "out"), read_element(p[1], "out")});
    }
  }
  return PairMapFile{PairMap(n, std::move(out)), read_labels(doc, n)};
}

std::string serialize(const StructureFile& f) {
  std::ostringstream os;
  os << "{\n  \"kind\": \"" << to_string(f.kind) << "\",\n  \"n\": " << f.size() << ",\n";
  write_matrix(os, "dot", f.dot, false);
  write_matrix(os, "diamond", f.diamond, f.labels.empty());
  if (!f.labels.empty()) write_labels(os, f.labels);
  os << "}\n";
  return os.str();
}

std::string serialize(const GroupFile& f) {
  std::ostringstream os;
  os << "{\n  \"n\": " << f.group.order() << ",\n";
  write_matrix(os, "mul", f.group.mul, f.labels.empty());
  if (!f.labels.empty()) write_labels(os, f.labels);
  os << "}\n";
  return os.str();
}

std::string serialize(const PairMapFile& f) {
  const std::size_t n = f.map.size();
  std::ostringstream os;
  os << "{\n  \"kind\": \"pair_map\",\n  \"n\": " << n << ",\n  \"out\": [\n";
  for (Element x = 0; x < n; ++x) {
    os << "    [";
    for (Element y = 0; y < n; ++y) {
      const auto p = f.map(x, y);
      os << (y ? ", " : "") << "[" << p.first << ", " << p.second << "]";
    }
    os << (x + 1 < n ? "],\n" : "]\n");
  }
  os << (f.labels.empty() ? "  ]\n" : "  ],\n");
  if (!f.labels.empty()) write_labels(os, f.labels);
  os << "}\n";
  return os.str();
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& p, std::string_view contents) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse_error, "cannot write " + p.string());
  out << contents;
  if (!out) throw Error(ErrorCode::parse_error, "write failed for " + p.string());
}

}  // namespace rackwork::io
