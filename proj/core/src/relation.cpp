#include "gq/relation.hpp"

#include <algorithm>
#include <string>

#include "gq/error.hpp"

namespace gq {

  namespace {
    constexpr std::uint64_t kMaxRelationSpace = std::uint64_t(1) << 26;

    std::size_t relation_space(Universe const& u, std::size_t arity) {
      if (arity == 0) {
        throw ArgumentError("relations must have positive arity");
      }
      if (arity > kMaxRelationArity) {
        throw CapacityError("relation arity " + std::to_string(arity) + " exceeds the limit of "
                            + std::to_string(kMaxRelationArity));
      }
      std::uint64_t n = checked_power(u.size(), arity);
      if (n > kMaxRelationSpace) {
        throw CapacityError("relation space " + std::to_string(u.size()) + "^"
                            + std::to_string(arity) + " is too large");
      }
      return static_cast<std::size_t>(n);
    }
  }  // namespace

  Relation::Relation(Universe universe, std::size_t arity, std::vector<Code> sorted_codes, int)
      : _universe(universe),
        _arity(arity),
        _codes(std::move(sorted_codes)),
        _bits(relation_space(universe, arity)) {
    for (Code c : _codes) {
      _bits.set(c);
    }
  }

  Relation::Relation(Universe universe, std::size_t arity, std::vector<Tuple> const& tuples)
      : _universe(universe), _arity(arity), _bits(relation_space(universe, arity)) {
    _codes.reserve(tuples.size());
    for (auto const& t : tuples) {
      if (t.size() != arity) {
        throw ArgumentError("tuple of length " + std::to_string(t.size()) + " in a relation of arity "
                            + std::to_string(arity));
      }
      for (Element x : t) {
        if (!universe.contains(x)) {
          throw ArgumentError("tuple entry " + std::to_string(x) + " is out of range");
        }
      }
      Code c = encode_tuple(universe.size(), t);
      if (_bits.insert(c)) {
        _codes.push_back(c);
      }
    }
    std::sort(_codes.begin(), _codes.end());
  }

  Relation Relation::from_codes(Universe universe, std::size_t arity, std::vector<Code> codes) {
    std::size_t space = relation_space(universe, arity);
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    if (!codes.empty() && codes.back() >= space) {
      throw ArgumentError("tuple code out of range");
    }
    return Relation(universe, arity, std::move(codes), 0);
  }

  Relation Relation::empty(Universe universe, std::size_t arity) {
    return Relation(universe, arity, std::vector<Code>{}, 0);
  }

  Relation Relation::full(Universe universe, std::size_t arity) {
    std::size_t       space = relation_space(universe, arity);
    std::vector<Code> codes(space);
    for (std::size_t c = 0; c < space; ++c) {
      codes[c] = static_cast<Code>(c);
    }
    return Relation(universe, arity, std::move(codes), 0);
  }

  Relation Relation::diagonal(Universe universe, std::size_t arity) {
    std::vector<Tuple> ts;
    for (std::size_t a = 0; a < universe.size(); ++a) {
      ts.emplace_back(arity, static_cast<Element>(a));
    }
    return Relation(universe, arity, ts);
  }

  bool Relation::contains(std::span<Element const> t) const noexcept {
    if (t.size() != _arity) {
      return false;
    }
    for (Element x : t) {
      if (x >= _universe.size()) {
        return false;
      }
    }
    return _bits.test(encode_tuple(_universe.size(), t));
  }

  std::vector<Tuple> Relation::tuples() const {
    std::vector<Tuple> out;
    out.reserve(_codes.size());
    for (std::size_t i = 0; i < _codes.size(); ++i) {
      out.push_back(tuple(i));
    }
    return out;
  }

  bool Relation::is_reflexive() const noexcept {
    Code step = 0;
    for (std::size_t j = 0; j < _arity; ++j) {
      step = step * static_cast<Code>(_universe.size()) + 1;
    }
    // (a, ..., a) has code a * (1 + k + ... + k^(m-1)).
    for (std::size_t a = 0; a < _universe.size(); ++a) {
      if (!_bits.test(a * step)) {
        return false;
      }
    }
    return true;
  }

  bool Relation::is_subset_of(Relation const& other) const noexcept {
    if (_universe != other._universe || _arity != other._arity) {
      return false;
    }
    return std::all_of(_codes.begin(), _codes.end(), [&](Code c) { return other._bits.test(c); });
  }

  std::strong_ordering operator<=>(Relation const& x, Relation const& y) noexcept {
    if (auto c = x._universe.size() <=> y._universe.size(); c != 0) {
      return c;
    }
    if (auto c = x._arity <=> y._arity; c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        x._codes.begin(), x._codes.end(), y._codes.begin(), y._codes.end());
  }

  Relation relation_union(Relation const& x, Relation const& y) {
    if (x.universe() != y.universe() || x.arity() != y.arity()) {
      throw ArgumentError("union of relations with different universes or arities");
    }
    std::vector<Code> codes;
    codes.reserve(x.size() + y.size());
    std::set_union(x.codes().begin(), x.codes().end(), y.codes().begin(), y.codes().end(),
                   std::back_inserter(codes));
    return Relation::from_codes(x.universe(), x.arity(), std::move(codes));
  }

  RelationSet::RelationSet(Universe universe, std::vector<Relation> members)
      : _universe(universe) {
    for (auto& rho : members) {
      insert(std::move(rho));
    }
  }

  bool RelationSet::insert(Relation rho) {
    if (rho.universe() != _universe) {
      throw ArgumentError("relation over a different universe");
    }
    auto it = std::lower_bound(_members.begin(), _members.end(), rho);
    if (it != _members.end() && *it == rho) {
      return false;
    }
    _members.insert(it, std::move(rho));
    return true;
  }

  bool RelationSet::contains(Relation const& rho) const {
    return std::binary_search(_members.begin(), _members.end(), rho);
  }

}  // namespace gq
