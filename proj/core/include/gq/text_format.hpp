#ifndef GQ_TEXT_FORMAT_HPP_
#define GQ_TEXT_FORMAT_HPP_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gq/monoid.hpp"
#include "gq/op_table.hpp"
#include "gq/relation.hpp"

// Text formats (UTF-8, LF line endings):
//
//   rel <m> <k>     then one tuple per line, entries separated by spaces
//   fun <n> <k>     then the k^n table entries in mixed-radix order, on one
//                   or more lines
//   mon <k>         then one unary table per line
//
// Blocks in a multi-object document are separated by blank lines. Lines whose
// first non-blank character is '#' are comments. Serialization is canonical:
// tuples and members ascend by code, tables are written k entries per line.

namespace gq {

  using TextObject = std::variant<OpTable, Relation, Monoid>;

  //! Parses exactly one object. Throws ParseError (with a 1-based line) on a
  //! malformed header, an out-of-range entry, a duplicate tuple or member, a
  //! wrong entry count or a member set that is not a monoid.
  TextObject parse(std::string_view text);

  //! Parses a blank-line separated sequence of objects.
  std::vector<TextObject> parse_all(std::string_view text);

  //! A document of `rel` blocks; an empty document is the empty set, which
  //! then needs the universe from the caller.
  RelationSet parse_relation_set(std::string_view text, Universe fallback);

  std::string serialize(OpTable const& f);
  std::string serialize(Relation const& rho);
  std::string serialize(Monoid const& m);
  std::string serialize(TextObject const& x);
  //! Blocks separated by one blank line.
  std::string serialize(RelationSet const& q);

}  // namespace gq

#endif  // GQ_TEXT_FORMAT_HPP_
