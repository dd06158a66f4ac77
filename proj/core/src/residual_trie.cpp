#include "residual_trie.hpp"

#include <algorithm>
#include <map>

namespace gq::detail {

  namespace {
    constexpr std::uint32_t kNone = 0xffffffffU;
  }

  ResidualTrie::ResidualTrie(Relation const& rho)
      : _arity(rho.arity()), _k(rho.universe().size()), _levels(rho.arity() + 1) {
    if (rho.empty()) {
      return;
    }
    Code const k = static_cast<Code>(_k);
    // Sorted distinct prefixes of the current depth and their node ids.
    std::vector<Code>   prefixes(rho.codes().begin(), rho.codes().end());
    std::vector<NodeId> ids(prefixes.size(), 0);
    _levels[_arity].push_back(Node{0, std::vector<NodeId>(_k, kNone)});

    for (std::size_t d = _arity; d-- > 0;) {
      std::vector<Code>                        up;
      std::vector<NodeId>                      up_ids;
      std::map<std::vector<NodeId>, NodeId>    intern;
      std::size_t i = 0;
      while (i < prefixes.size()) {
        Code const          p = prefixes[i] / k;
        std::vector<NodeId> sig(_k, kNone);
        ElementMask         mask = 0;
        for (; i < prefixes.size() && prefixes[i] / k == p; ++i) {
          auto const e = prefixes[i] % k;
          sig[e]       = ids[i];
          mask |= ElementMask(1U << e);
        }
        auto [it, fresh] = intern.try_emplace(sig, static_cast<NodeId>(_levels[d].size()));
        if (fresh) {
          _levels[d].push_back(Node{mask, sig});
        }
        up.push_back(p);
        up_ids.push_back(it->second);
      }
      prefixes = std::move(up);
      ids      = std::move(up_ids);
    }
  }

}  // namespace gq::detail
