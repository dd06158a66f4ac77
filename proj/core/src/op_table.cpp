#include "gq/op_table.hpp"

#include <algorithm>
#include <string>

#include "gq/error.hpp"

namespace gq {

  OpTable::OpTable(Universe universe, std::size_t arity, std::vector<Element> table)
      : _universe(universe), _arity(arity), _table(std::move(table)) {
    if (arity == 0) {
      throw ArgumentError("operations must have positive arity");
    }
    std::uint64_t n = checked_power(universe.size(), arity);
    if (n > kMaxTableSize) {
      throw CapacityError("operation table of " + std::to_string(n) + " entries is too large");
    }
    if (_table.size() != n) {
      throw ArgumentError("operation table has " + std::to_string(_table.size())
                          + " entries, expected " + std::to_string(n));
    }
    for (Element x : _table) {
      if (!universe.contains(x)) {
        throw ArgumentError("operation table entry " + std::to_string(x) + " is out of range");
      }
    }
  }

  OpTable OpTable::identity(Universe universe) {
    std::vector<Element> t(universe.size());
    for (std::size_t x = 0; x < t.size(); ++x) {
      t[x] = static_cast<Element>(x);
    }
    return OpTable(universe, 1, std::move(t));
  }

  OpTable OpTable::constant(Universe universe, Element value) {
    if (!universe.contains(value)) {
      throw ArgumentError("constant " + std::to_string(value) + " is not in the universe");
    }
    return OpTable(universe, 1, std::vector<Element>(universe.size(), value));
  }

  OpTable OpTable::projection(Universe universe, std::size_t arity, std::size_t index) {
    if (arity == 0 || index == 0 || index > arity) {
      throw ArgumentError("projection e^" + std::to_string(arity) + "_" + std::to_string(index)
                          + " does not exist");
    }
    std::size_t const    k      = universe.size();
    std::size_t const    n      = checked_power(k, arity);
    std::size_t const    stride = checked_power(k, arity - index);
    std::vector<Element> t(n);
    for (std::size_t c = 0; c < n; ++c) {
      t[c] = static_cast<Element>((c / stride) % k);
    }
    return OpTable(universe, arity, std::move(t));
  }

  Element OpTable::operator()(std::span<Element const> args) const {
    return evaluate(*this, args);
  }

  bool OpTable::is_constant() const noexcept {
    return std::all_of(_table.begin(), _table.end(), [&](Element x) { return x == _table[0]; });
  }

  std::strong_ordering operator<=>(OpTable const& x, OpTable const& y) noexcept {
    if (auto c = x._universe.size() <=> y._universe.size(); c != 0) {
      return c;
    }
    if (auto c = x._arity <=> y._arity; c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        x._table.begin(), x._table.end(), y._table.begin(), y._table.end());
  }

  OpTable make_basic(Universe universe, BasicOp const& kind) {
    switch (kind.kind) {
      case BasicKind::identity:
        return OpTable::identity(universe);
      case BasicKind::constant:
        return OpTable::constant(universe, kind.value);
      case BasicKind::projection:
        return OpTable::projection(universe, kind.arity, kind.index);
    }
    throw ArgumentError("unknown basic operation");
  }

  Element evaluate(OpTable const& f, std::span<Element const> args) {
    if (args.size() != f.arity()) {
      throw ArgumentError("expected " + std::to_string(f.arity()) + " arguments, got "
                          + std::to_string(args.size()));
    }
    std::size_t const k = f.universe().size();
    for (Element x : args) {
      if (x >= k) {
        throw ArgumentError("argument " + std::to_string(x) + " is out of range");
      }
    }
    return f[encode_tuple(k, args)];
  }

  Tuple apply_to_tuples(OpTable const& f, std::span<Tuple const> rows) {
    if (rows.size() != f.arity()) {
      throw ArgumentError("expected " + std::to_string(f.arity()) + " rows, got "
                          + std::to_string(rows.size()));
    }
    std::size_t const m = rows.front().size();
    for (auto const& r : rows) {
      if (r.size() != m) {
        throw ArgumentError("rows have different lengths");
      }
    }
    Tuple out(m);
    Tuple column(rows.size());
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        column[i] = rows[i][j];
      }
      out[j] = evaluate(f, column);
    }
    return out;
  }

}  // namespace gq
