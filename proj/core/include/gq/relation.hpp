#ifndef GQ_RELATION_HPP_
#define GQ_RELATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gq/universe.hpp"

namespace gq {

  namespace detail {
    //! Fixed-size bitset over tuple codes.
    class CodeSet {
     public:
      CodeSet() = default;
      explicit CodeSet(std::size_t n) : _size(n), _words((n + 63) / 64, 0) {}

      std::size_t size() const noexcept {
        return _size;
      }
      bool test(std::size_t i) const noexcept {
        return (_words[i >> 6] >> (i & 63)) & 1U;
      }
      void set(std::size_t i) noexcept {
        _words[i >> 6] |= std::uint64_t(1) << (i & 63);
      }
      //! Sets bit i and returns true if it was previously clear.
      bool insert(std::size_t i) noexcept {
        bool was = test(i);
        set(i);
        return !was;
      }

     private:
      std::size_t                _size = 0;
      std::vector<std::uint64_t> _words;
    };
  }  // namespace detail

  //! An m-ary relation over a universe. Tuples are kept both as a sorted
  //! list of mixed-radix codes (the interchange form, lexicographic order)
  //! and as a bitset over all k^m codes (the operational form).
  class Relation {
   public:
    //! Sorts and deduplicates. Throws ArgumentError on a coordinate >= k or a
    //! tuple of the wrong length, CapacityError if arity > 8 or k^m is too
    //! large.
    Relation(Universe universe, std::size_t arity, std::vector<Tuple> const& tuples);

    //! From codes < k^m; sorts and deduplicates.
    static Relation from_codes(Universe universe, std::size_t arity, std::vector<Code> codes);

    static Relation empty(Universe universe, std::size_t arity);
    //! A^m.
    static Relation full(Universe universe, std::size_t arity);
    //! Delta_A = {(a, a) | a in A}, and in general {(a, ..., a)}.
    static Relation diagonal(Universe universe, std::size_t arity = 2);

    Universe const& universe() const noexcept {
      return _universe;
    }
    std::size_t arity() const noexcept {
      return _arity;
    }
    std::size_t size() const noexcept {
      return _codes.size();
    }
    bool empty() const noexcept {
      return _codes.empty();
    }
    //! k^m
    std::size_t space_size() const noexcept {
      return _bits.size();
    }

    //! Sorted codes.
    std::span<Code const> codes() const noexcept {
      return _codes;
    }

    bool contains_code(Code c) const noexcept {
      return c < _bits.size() && _bits.test(c);
    }
    //! False for tuples of the wrong length or with out-of-range entries.
    bool contains(std::span<Element const> t) const noexcept;

    Tuple tuple(std::size_t i) const {
      return decode_tuple(_universe.size(), _codes[i], _arity);
    }
    std::vector<Tuple> tuples() const;

    Code encode(std::span<Element const> t) const noexcept {
      return encode_tuple(_universe.size(), t);
    }

    //! Every constant tuple (a, ..., a) belongs to the relation.
    bool is_reflexive() const noexcept;
    bool is_subset_of(Relation const& other) const noexcept;

    friend bool operator==(Relation const& x, Relation const& y) noexcept {
      return x._universe == y._universe && x._arity == y._arity && x._codes == y._codes;
    }
    //! Orders by (k, arity, code sequence).
    friend std::strong_ordering operator<=>(Relation const& x, Relation const& y) noexcept;

   private:
    Relation(Universe universe, std::size_t arity, std::vector<Code> sorted_codes, int);

    Universe          _universe;
    std::size_t       _arity;
    std::vector<Code> _codes;
    detail::CodeSet   _bits;
  };

  //! Relation union; the arguments must share universe and arity.
  Relation relation_union(Relation const& x, Relation const& y);

  //! A set of relations of possibly different arities over one universe,
  //! kept sorted by (arity, code sequence) without duplicates.
  class RelationSet {
   public:
    explicit RelationSet(Universe universe) : _universe(universe) {}
    RelationSet(Universe universe, std::vector<Relation> members);

    Universe const& universe() const noexcept {
      return _universe;
    }
    std::span<Relation const> members() const noexcept {
      return _members;
    }
    std::size_t size() const noexcept {
      return _members.size();
    }
    bool empty() const noexcept {
      return _members.empty();
    }

    //! Returns false if already present.
    bool insert(Relation rho);
    bool contains(Relation const& rho) const;

    auto begin() const noexcept {
      return _members.begin();
    }
    auto end() const noexcept {
      return _members.end();
    }

    friend bool operator==(RelationSet const&, RelationSet const&) = default;

   private:
    Universe              _universe;
    std::vector<Relation> _members;
  };

}  // namespace gq

#endif  // GQ_RELATION_HPP_
