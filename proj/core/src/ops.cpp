#include "gq/ops.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "gq/error.hpp"
#include "gq/prefix_trie.hpp"
#include "gq/relation.hpp"

namespace gq {

  bool OpSet::insert(OpTable f) {
    if (f.universe() != _universe) {
      throw ArgumentError("operation over a different universe");
    }
    std::size_t n = f.arity();
    return _by_arity[n].insert(std::move(f)).second;
  }

  bool OpSet::contains(OpTable const& f) const {
    auto it = _by_arity.find(f.arity());
    return it != _by_arity.end() && it->second.contains(f);
  }

  std::set<OpTable> const& OpSet::arity(std::size_t n) const {
    static std::set<OpTable> const none;
    auto                           it = _by_arity.find(n);
    return it == _by_arity.end() ? none : it->second;
  }

  std::vector<std::size_t> OpSet::arities() const {
    std::vector<std::size_t> out;
    for (auto const& [n, s] : _by_arity) {
      if (!s.empty()) {
        out.push_back(n);
      }
    }
    return out;
  }

  std::size_t OpSet::size() const noexcept {
    std::size_t n = 0;
    for (auto const& [a, s] : _by_arity) {
      n += s.size();
    }
    return n;
  }

  std::vector<OpTable> OpSet::all() const {
    std::vector<OpTable> out;
    for (auto const& [a, s] : _by_arity) {
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  }

  namespace {

    std::size_t ipow(std::size_t b, std::size_t e) {
      return static_cast<std::size_t>(checked_power(b, e));
    }

    // Table of the operation x -> f(perm(x)), where perm builds f's argument
    // list from the decoded arguments of the result.
    template <typename ArgMap>
    OpTable remap(OpTable const& f, std::size_t arity, ArgMap&& args_of) {
      std::size_t const    k = f.universe().size();
      std::size_t const    n = ipow(k, arity);
      std::vector<Element> table(n);
      Tuple                x(arity);
      Tuple                y(f.arity());
      for (std::size_t c = 0; c < n; ++c) {
        decode_tuple(k, static_cast<Code>(c), x);
        args_of(x, y);
        table[c] = f[encode_tuple(k, y)];
      }
      return OpTable(f.universe(), arity, std::move(table));
    }

  }  // namespace

  OpTable preclone_transform(PrecloneOp kind, OpTable const& f) {
    std::size_t const n = f.arity();
    switch (kind) {
      case PrecloneOp::zeta:
        if (n == 1) {
          return f;
        }
        return remap(f, n, [n](Tuple const& x, Tuple& y) {
          for (std::size_t i = 0; i + 1 < n; ++i) {
            y[i] = x[i + 1];
          }
          y[n - 1] = x[0];
        });
      case PrecloneOp::tau:
        if (n == 1) {
          return f;
        }
        return remap(f, n, [](Tuple const& x, Tuple& y) {
          y = x;
          std::swap(y[0], y[1]);
        });
      case PrecloneOp::nabla: {
        std::size_t const    k    = f.universe().size();
        std::size_t const    span = f.size();
        std::vector<Element> table(span * k);
        for (std::size_t c = 0; c < table.size(); ++c) {
          table[c] = f[c % span];
        }
        return OpTable(f.universe(), n + 1, std::move(table));
      }
      case PrecloneOp::delta:
        if (n == 1) {
          return f;
        }
        return remap(f, n - 1, [](Tuple const& x, Tuple& y) {
          y[0] = x[0];
          std::copy(x.begin(), x.end(), y.begin() + 1);
        });
    }
    throw ArgumentError("unknown preclone operation");
  }

  OpTable circ(OpTable const& f, OpTable const& g) {
    if (f.universe() != g.universe()) {
      throw ArgumentError("composition of operations over different universes");
    }
    std::size_t const    k    = f.universe().size();
    std::size_t const    rest = ipow(k, f.arity() - 1);
    std::size_t const    n    = checked_power(k, f.arity() + g.arity() - 1);
    if (n > kMaxTableSize) {
      throw CapacityError("composition result of " + std::to_string(n) + " entries is too large");
    }
    std::vector<Element> table(n);
    for (std::size_t c = 0; c < n; ++c) {
      table[c] = f[g[c / rest] * rest + c % rest];
    }
    return OpTable(f.universe(), f.arity() + g.arity() - 1, std::move(table));
  }

  OpTable compose_with_unaries(OpTable const& f, std::span<OpTable const> gs) {
    if (gs.size() != f.arity()) {
      throw ArgumentError("expected " + std::to_string(f.arity()) + " unary operations, got "
                          + std::to_string(gs.size()));
    }
    for (auto const& g : gs) {
      if (g.arity() != 1 || g.universe() != f.universe()) {
        throw ArgumentError("inner operations must be unary over the same universe");
      }
    }
    std::size_t const    k = f.universe().size();
    std::vector<Element> table(k);
    Tuple                args(f.arity());
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t i = 0; i < gs.size(); ++i) {
        args[i] = gs[i][x];
      }
      table[x] = f[encode_tuple(k, args)];
    }
    return OpTable(f.universe(), 1, std::move(table));
  }

  namespace {
    // Calls fn(code) for the code of every translation of f; stops early when
    // fn returns false.
    template <typename Fn>
    bool each_translation(OpTable const& f, Fn&& fn) {
      std::size_t const k = f.universe().size();
      std::size_t const n = f.arity();
      if (n == 1) {
        return fn(encode_tuple(k, f.table()));
      }
      std::size_t const lines = ipow(k, n - 1);
      std::size_t       low   = lines * k;  // k^(n-1-axis) after the division below
      for (std::size_t axis = 0; axis < n; ++axis) {
        low /= k;
        for (std::size_t which = 0; which < lines; ++which) {
          std::size_t const base = (which / low) * low * k + which % low;
          Code              c    = 0;
          for (std::size_t i = 0; i < k; ++i) {
            c = c * static_cast<Code>(k) + f[base + i * low];
          }
          if (!fn(c)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  std::vector<Code> translation_codes(OpTable const& f) {
    std::vector<Code> out;
    each_translation(f, [&](Code c) {
      out.push_back(c);
      return true;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<OpTable> translations(OpTable const& f) {
    std::vector<OpTable> out;
    for (Code c : translation_codes(f)) {
      out.push_back(unary_from_code(f.universe(), c));
    }
    return out;
  }

  OpTable relabel(OpTable const& f, std::span<Element const> s) {
    std::size_t const k = f.universe().size();
    if (s.size() != k) {
      throw ArgumentError("relabeling needs one image per element");
    }
    Tuple inverse(k, static_cast<Element>(k));
    for (std::size_t x = 0; x < k; ++x) {
      if (s[x] >= k || inverse[s[x]] != k) {
        throw ArgumentError("relabeling is not a permutation");
      }
      inverse[s[x]] = static_cast<Element>(x);
    }
    std::vector<Element> table(f.size());
    Tuple                x(f.arity());
    Tuple                y(f.arity());
    for (std::size_t c = 0; c < table.size(); ++c) {
      decode_tuple(k, static_cast<Code>(c), x);
      for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = inverse[x[i]];
      }
      table[c] = s[f[encode_tuple(k, y)]];
    }
    return OpTable(f.universe(), f.arity(), std::move(table));
  }

  bool in_star(OpTable const& f, Monoid const& m) {
    if (f.universe() != m.universe()) {
      throw ArgumentError("operation and monoid over different universes");
    }
    return each_translation(f, [&](Code c) { return m.contains_code(c); });
  }

  void for_each_star_member(Monoid const& m, std::size_t n,
                            std::function<bool(std::span<Element const>)> const& visit) {
    std::size_t const k = m.universe().size();
    if (n == 0) {
      throw ArgumentError("operations must have positive arity");
    }
    if (n > kMaxStarArity || checked_power(k, n) > kMaxStarTableSize) {
      throw CapacityError("star search over " + std::to_string(k) + "^" + std::to_string(n)
                          + " table entries exceeds the guardrail (n <= 4, k^n <= 4096)");
    }
    std::vector<Code> codes(m.codes().begin(), m.codes().end());
    PrefixTrie const  trie(Relation::from_codes(m.universe(), k, std::move(codes)));

    std::size_t const N     = ipow(k, n);
    std::size_t const lines = N / k;
    // For entry c and axis a: position along the line and the line's index.
    std::vector<std::uint8_t> depth(N * n);
    std::vector<std::size_t>  line(N * n);
    {
      Tuple x(n);
      for (std::size_t c = 0; c < N; ++c) {
        decode_tuple(k, static_cast<Code>(c), x);
        for (std::size_t a = 0; a < n; ++a) {
          std::size_t id = 0;
          for (std::size_t b = 0; b < n; ++b) {
            if (b != a) {
              id = id * k + x[b];
            }
          }
          depth[c * n + a] = x[a];
          line[c * n + a]  = id;
        }
      }
    }
    std::vector<Code>        prefix(n * lines, 0);
    std::vector<Element>     table(N);
    std::vector<ElementMask> remaining(N);
    ElementMask const        full = static_cast<ElementMask>((1U << k) - 1);

    auto allowed = [&](std::size_t c) {
      ElementMask mask = full;
      for (std::size_t a = 0; a < n && mask != 0; ++a) {
        mask &= trie.children(depth[c * n + a], prefix[a * lines + line[c * n + a]]);
      }
      return mask;
    };
    auto assign = [&](std::size_t c, Element v) {
      table[c] = v;
      for (std::size_t a = 0; a < n; ++a) {
        Code& p = prefix[a * lines + line[c * n + a]];
        p       = p * static_cast<Code>(k) + v;
      }
    };
    auto unassign = [&](std::size_t c) {
      for (std::size_t a = 0; a < n; ++a) {
        prefix[a * lines + line[c * n + a]] /= static_cast<Code>(k);
      }
    };

    std::size_t pos = 0;
    remaining[0]    = allowed(0);
    while (true) {
      if (remaining[pos] == 0) {
        if (pos == 0) {
          return;
        }
        --pos;
        unassign(pos);
        continue;
      }
      auto const v = static_cast<Element>(std::countr_zero(remaining[pos]));
      remaining[pos] &= static_cast<ElementMask>(remaining[pos] - 1);
      assign(pos, v);
      if (pos + 1 == N) {
        if (!visit(table)) {
          return;
        }
        unassign(pos);
        continue;
      }
      ++pos;
      remaining[pos] = allowed(pos);
    }
  }

  std::vector<OpTable> star_members(Monoid const& m, std::size_t n, std::size_t max_results) {
    std::vector<OpTable> out;
    bool                 overflow = false;
    for_each_star_member(m, n, [&](std::span<Element const> t) {
      if (max_results != 0 && out.size() == max_results) {
        overflow = true;
        return false;
      }
      out.emplace_back(m.universe(), n, std::vector<Element>(t.begin(), t.end()));
      return true;
    });
    if (overflow) {
      throw CapacityError("more than " + std::to_string(max_results) + " members of arity "
                          + std::to_string(n));
    }
    return out;
  }

  std::size_t count_star_members(Monoid const& m, std::size_t n) {
    std::size_t count = 0;
    for_each_star_member(m, n, [&](std::span<Element const>) {
      ++count;
      return true;
    });
    return count;
  }

  OpSet clone_generate_bounded(OpSet const& f, std::size_t nmax, std::size_t budget) {
    if (nmax == 0 || nmax > kMaxCloneArity) {
      throw CapacityError("bounded clone generation supports 1 <= nmax <= "
                          + std::to_string(kMaxCloneArity));
    }
    Universe const       u = f.universe();
    OpSet                out(u);
    std::deque<OpTable>  queue;
    std::vector<OpTable> done;
    auto add = [&](OpTable g) {
      if (out.contains(g)) {
        return;
      }
      if (out.size() >= budget) {
        throw CapacityError("bounded clone generation exceeded " + std::to_string(budget)
                            + " operations");
      }
      out.insert(g);
      queue.push_back(std::move(g));
    };
    for (auto const& g : f.all()) {
      if (g.arity() > nmax) {
        throw ArgumentError("generator of arity " + std::to_string(g.arity())
                            + " exceeds nmax = " + std::to_string(nmax));
      }
      add(g);
    }
    for (std::size_t n = 1; n <= nmax; ++n) {
      for (std::size_t i = 1; i <= n; ++i) {
        add(OpTable::projection(u, n, i));
      }
    }
    while (!queue.empty()) {
      OpTable h = std::move(queue.front());
      queue.pop_front();
      add(preclone_transform(PrecloneOp::zeta, h));
      add(preclone_transform(PrecloneOp::tau, h));
      add(preclone_transform(PrecloneOp::delta, h));
      if (h.arity() < nmax) {
        add(preclone_transform(PrecloneOp::nabla, h));
      }
      done.push_back(h);
      for (auto const& g : done) {
        if (h.arity() + g.arity() - 1 <= nmax) {
          add(circ(h, g));
          add(circ(g, h));
        }
      }
    }
    return out;
  }

}  // namespace gq
