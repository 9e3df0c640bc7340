#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "upinv/group.hpp"
#include "upinv/polynomial.hpp"

namespace upinv {

/// Parses an expression over x, y, z with integer literals and + - * ^ ( ).
/// Multiplication must be written out ("2*x", never "2x"); exponents are
/// non-negative integer literals. U+2212 is accepted as a minus sign.
/// Throws Error(ParseError).
Polynomial parse_poly(std::string_view expr, PrimeModulus p);

/// Splits "f1,f2,f3" on commas and parses each piece.
std::vector<Polynomial> parse_poly_list(std::string_view list, PrimeModulus p);

/// On-disk group description (JSON):
///   {"schema": 1, "label": "...", "p": 3, "n": 3,
///    "generators": [[[1,1,0],[0,-1,0],[0,0,1]], ...]}
/// Entries may be any integers; they are reduced mod p when the group is built.
struct GroupFile {
  static constexpr int kSchema = 1;

  std::int64_t p = 0;
  std::string label;
  std::vector<std::array<std::int64_t, 9>> generators;

  bool operator==(const GroupFile&) const = default;
};

/// Throws Error(ParseError) on malformed documents or schema mismatch.
GroupFile parse_group_document(std::string_view text);
GroupFile read_group_file(const std::filesystem::path& path);
std::string write_group_document(const GroupFile& file);

/// Validates p (EvenCharacteristic / InvalidModulus) and the generators
/// (SingularGenerator), then closes them up (CapExceeded).
MatrixGroup build_group(const GroupFile& file, std::size_t cap = kDefaultClosureCap);
MatrixGroup parse_group_file(const std::filesystem::path& path, std::size_t cap = kDefaultClosureCap);

GroupFile to_group_file(const MatrixGroup& g, std::string label = {});

}  // namespace upinv
