#ifndef GQ_SRC_RESIDUAL_TRIE_HPP_
#define GQ_SRC_RESIDUAL_TRIE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gq/prefix_trie.hpp"
#include "gq/relation.hpp"

namespace gq::detail {

  //! The prefix trie of a relation with equivalent subtrees merged: two
  //! prefixes of the same length share a node iff they have the same set of
  //! completions. Searches key their memo tables on node ids, so prefixes
  //! with the same future are explored once.
  class ResidualTrie {
   public:
    using NodeId = std::uint32_t;

    struct Node {
      ElementMask         mask = 0;
      std::vector<NodeId> child;  // indexed by element, valid where mask has the bit
    };

    explicit ResidualTrie(Relation const& rho);

    std::size_t arity() const noexcept {
      return _arity;
    }
    std::size_t radix() const noexcept {
      return _k;
    }
    //! Node at `depth` (0 = root, arity = accepting leaf).
    Node const& node(std::size_t depth, NodeId id) const noexcept {
      return _levels[depth][id];
    }
    NodeId root() const noexcept {
      return 0;
    }
    bool empty() const noexcept {
      return _levels[0].empty();
    }
    //! Number of distinct nodes at a depth.
    std::size_t width(std::size_t depth) const noexcept {
      return _levels[depth].size();
    }

   private:
    std::size_t                    _arity;
    std::size_t                    _k;
    std::vector<std::vector<Node>> _levels;  // _levels[d], d = 0..arity
  };

  //! Hash for small vectors of ids used as memo keys.
  struct IdVectorHash {
    std::size_t operator()(std::vector<std::uint32_t> const& v) const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (std::uint32_t x : v) {
        h ^= x;
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
      }
      return static_cast<std::size_t>(h);
    }
  };

}  // namespace gq::detail

#endif  // GQ_SRC_RESIDUAL_TRIE_HPP_
