#include "gq/prefix_trie.hpp"

namespace gq {

  PrefixTrie::PrefixTrie(Relation const& rho)
      : _arity(rho.arity()), _k(rho.universe().size()), _levels(rho.arity()) {
    std::size_t width = 1;
    for (std::size_t d = 0; d < _arity; ++d) {
      _levels[d].assign(width, 0);
      width *= _k;
    }
    Tuple t(_arity);
    for (Code c : rho.codes()) {
      decode_tuple(_k, c, t);
      Code prefix = 0;
      for (std::size_t d = 0; d < _arity; ++d) {
        _levels[d][prefix] |= ElementMask(1U << t[d]);
        prefix = prefix * static_cast<Code>(_k) + t[d];
      }
    }
  }

}  // namespace gq
