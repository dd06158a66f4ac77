#ifndef GQ_OP_TABLE_HPP_
#define GQ_OP_TABLE_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "gq/universe.hpp"

namespace gq {

  //! Guardrail on the number of entries of an operation table.
  inline constexpr std::size_t kMaxTableSize = std::size_t(1) << 22;

  //! An n-ary operation f: A^n -> A stored as its full value table. The
  //! entry at mixed-radix index code(x_1, ..., x_n) is f(x_1, ..., x_n).
  class OpTable {
   public:
    //! Validates the table length (k^n) and that every entry is < k.
    OpTable(Universe universe, std::size_t arity, std::vector<Element> table);

    static OpTable identity(Universe universe);
    static OpTable constant(Universe universe, Element value);
    //! The projection e^n_i, with 1 <= index <= arity.
    static OpTable projection(Universe universe, std::size_t arity, std::size_t index);

    Universe const& universe() const noexcept {
      return _universe;
    }

    std::size_t arity() const noexcept {
      return _arity;
    }

    std::span<Element const> table() const noexcept {
      return _table;
    }

    std::size_t size() const noexcept {
      return _table.size();
    }

    //! Unchecked lookup by mixed-radix index.
    Element operator[](std::size_t index) const noexcept {
      return _table[index];
    }

    //! Checked evaluation, see gq::evaluate.
    Element operator()(std::span<Element const> args) const;

    bool is_constant() const noexcept;

    friend bool operator==(OpTable const& x, OpTable const& y) noexcept {
      return x._universe == y._universe && x._arity == y._arity && x._table == y._table;
    }

    //! Orders by (k, arity, table) lexicographically.
    friend std::strong_ordering operator<=>(OpTable const& x, OpTable const& y) noexcept;

   private:
    Universe             _universe;
    std::size_t          _arity;
    std::vector<Element> _table;
  };

  enum class BasicKind { identity, constant, projection };

  //! Selector for make_basic.
  struct BasicOp {
    BasicKind   kind  = BasicKind::identity;
    Element     value = 0;  // constant
    std::size_t arity = 1;  // projection
    std::size_t index = 1;  // projection, 1-based

    static BasicOp identity() {
      return {};
    }
    static BasicOp constant(Element a) {
      return {BasicKind::constant, a, 1, 1};
    }
    static BasicOp projection(std::size_t n, std::size_t i) {
      return {BasicKind::projection, 0, n, i};
    }
  };

  //! id_A, the constant c_a or the projection e^n_i.
  OpTable make_basic(Universe universe, BasicOp const& kind);

  //! f(args). Throws ArgumentError on a length or range mismatch.
  Element evaluate(OpTable const& f, std::span<Element const> args);

  //! Componentwise application: coordinate j of the result is
  //! f(r_1(j), ..., r_n(j)). Throws ArgumentError if the number of rows is not
  //! the arity of f or the rows are ragged.
  Tuple apply_to_tuples(OpTable const& f, std::span<Tuple const> rows);

}  // namespace gq

#endif  // GQ_OP_TABLE_HPP_
