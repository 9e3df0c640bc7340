#include <fstream>
#include <sstream>

#include "json.hpp"
#include "upinv/errors.hpp"
#include "upinv/io.hpp"

namespace upinv {

using nlohmann::json;

GroupFile parse_group_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed group document: ") + e.what());
  }
  auto fail = [](const std::string& msg) -> void { throw Error(ErrorCode::ParseError, msg); };
  if (!doc.is_object()) fail("group document must be an object");
  if (!doc.contains("schema") || doc["schema"] != GroupFile::kSchema) {
    fail("group document needs \"schema\": " + std::to_string(GroupFile::kSchema));
  }
  if (!doc.contains("p") || !doc["p"].is_number_integer()) fail("group document needs integer \"p\"");
  if (doc.contains("n") && doc["n"] != 3) fail("only n = 3 is supported");
  if (!doc.contains("generators") || !doc["generators"].is_array()) fail("group document needs \"generators\"");

  GroupFile out;
  out.p = doc["p"].get<std::int64_t>();
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) fail("\"label\" must be a string");
    out.label = doc["label"].get<std::string>();
  }
  for (const auto& gen : doc["generators"]) {
    if (!gen.is_array() || gen.size() != 3) fail("each generator must be a 3x3 array");
    std::array<std::int64_t, 9> entries{};
    for (std::size_t r = 0; r < 3; ++r) {
      if (!gen[r].is_array() || gen[r].size() != 3) fail("each generator row must have 3 entries");
      for (std::size_t c = 0; c < 3; ++c) {
        if (!gen[r][c].is_number_integer()) fail("matrix entries must be integers");
        entries[3 * r + c] = gen[r][c].get<std::int64_t>();
      }
    }
    out.generators.push_back(entries);
  }
  return out;
}

GroupFile read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_document(buf.str());
}

std::string write_group_document(const GroupFile& file) {
  json doc;
  doc["schema"] = GroupFile::kSchema;
  if (!file.label.empty()) doc["label"] = file.label;
  doc["p"] = file.p;
  doc["n"] = 3;
  doc["generators"] = json::array();
  for (const auto& e : file.generators) {
    doc["generators"].push_back({{e[0], e[1], e[2]}, {e[3], e[4], e[5]}, {e[6], e[7], e[8]}});
  }
  return doc.dump(2) + "\n";
}

MatrixGroup build_group(const GroupFile& file, std::size_t cap) {
  const PrimeModulus p(file.p);
  std::vector<Matrix3> gens;
  for (const auto& e : file.generators) gens.emplace_back(p, e);
  return MatrixGroup::closure(p, std::move(gens), cap);
}

MatrixGroup parse_group_file(const std::filesystem::path& path, std::size_t cap) {
  return build_group(read_group_file(path), cap);
}

GroupFile to_group_file(const MatrixGroup& g, std::string label) {
  GroupFile out;
  out.p = g.modulus().value();
  out.label = std::move(label);
  for (const auto& m : g.generators()) {
    std::array<std::int64_t, 9> e{};
    for (std::size_t i = 0; i < 9; ++i) e[i] = m.residues()[i];
    out.generators.push_back(e);
  }
  return out;
}

}  // namespace upinv
