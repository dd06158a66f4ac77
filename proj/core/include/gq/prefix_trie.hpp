#ifndef GQ_PREFIX_TRIE_HPP_
#define GQ_PREFIX_TRIE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gq/relation.hpp"

namespace gq {

  //! Bit mask over the elements of a universe (k <= 9).
  using ElementMask = std::uint16_t;

  //! The prefix tree of a relation, flattened: for every depth d < m and every
  //! prefix code p of length d, the mask of elements e such that p.e is a
  //! prefix of some tuple. The searches over matrices and tensors use it to
  //! prune partial rows and columns.
  class PrefixTrie {
   public:
    explicit PrefixTrie(Relation const& rho);

    std::size_t arity() const noexcept {
      return _arity;
    }
    std::size_t radix() const noexcept {
      return _k;
    }

    //! Valid extensions of a prefix of length `depth` (< arity()).
    ElementMask children(std::size_t depth, Code prefix) const noexcept {
      return _levels[depth][prefix];
    }

    bool empty() const noexcept {
      return _levels.empty() || _levels[0][0] == 0;
    }

   private:
    std::size_t                           _arity;
    std::size_t                           _k;
    std::vector<std::vector<ElementMask>> _levels;
  };

}  // namespace gq

#endif  // GQ_PREFIX_TRIE_HPP_
