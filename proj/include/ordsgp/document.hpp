#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordsgp/structure.hpp"

namespace ordsgp {

enum class DocumentKind { Osg, Sgp };

/// Syntactic content of an .osg / .sgp file:
///
///   kind: osg
///   elements: 2
///   names: zero one      (optional)
///   table:
///   0 0
///   0 1
///   order:               (osg only, optional when empty)
///   0 1
///
/// '#' starts a comment; blank lines are ignored.
struct StructureDocument {
  DocumentKind kind = DocumentKind::Osg;
  std::size_t size = 0;
  std::vector<std::string> names;
  std::vector<std::vector<Element>> table;
  std::vector<OrderPair> order;
  std::vector<std::size_t> table_lines;  // source line of each table row
};

/// Syntax only. Throws ParseError with the offending line.
StructureDocument read_document(std::string_view text);

using Structure = std::variant<FiniteSemigroup, OrderedSemigroup>;

struct ParseOptions {
  bool close_order = false;  // take the transitive closure of the pairs
};

/// Syntax plus validation: ParseError for syntax and index range (with line),
/// ValidationError for the algebraic axioms.
Structure parse_document(std::string_view text, ParseOptions options = {});

OrderedSemigroup parse_osg(std::string_view text, ParseOptions options = {});
FiniteSemigroup parse_sgp(std::string_view text);

/// Canonical text: single spaces, sorted non-reflexive order pairs, the
/// order block only when non-empty, trailing newline.
std::string serialize_document(const OrderedSemigroup& s);
std::string serialize_document(const FiniteSemigroup& f);

std::string read_file(const std::string& path);

}  // namespace ordsgp
