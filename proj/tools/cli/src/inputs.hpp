#ifndef GQ_CLI_INPUTS_HPP_
#define GQ_CLI_INPUTS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gq/gq.hpp"

namespace gq::cli {

  //! Contents of a file, or of standard input for "-". Throws ArgumentError
  //! if the file cannot be read.
  std::string read_source(std::string const& path);

  //! Inline literals into the text format:
  //!   rel  "m k: t1 t2 ..."   each token is one tuple, digits or spaced
  //!   fun  "n k: e1 e2 ..."   the tokens are concatenated table digits
  //!   mon  "k: t1 t2 ..."     each token is one member table
  std::string relation_literal(std::string_view lit);
  std::string function_literal(std::string_view lit);
  std::string monoid_literal(std::string_view lit);

  struct Sources {
    std::vector<std::string> files;
    std::vector<std::string> rels;
    std::vector<std::string> funs;
    std::vector<std::string> mons;
    std::optional<std::size_t> cycle;
    std::optional<std::size_t> trivial;
    std::optional<std::size_t> full;
    std::optional<std::size_t> k;
  };

  //! Every parsed object from files and literals, files first.
  std::vector<TextObject> load_objects(Sources const& s);

  //! Exactly one relation.
  Relation load_relation(Sources const& s);
  //! Any number of relations over one universe; an empty set needs --k.
  RelationSet load_relation_set(Sources const& s);
  //! Exactly one monoid from a file, --mon, --cycle, --trivial or --full.
  Monoid load_monoid(Sources const& s);
  //! Any number of operations over one universe; an empty set needs --k.
  OpSet load_op_set(Sources const& s);
  //! Exactly one operation.
  OpTable load_operation(Sources const& s);

}  // namespace gq::cli

#endif  // GQ_CLI_INPUTS_HPP_
