#include "gq/relations.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "residual_trie.hpp"

namespace gq {

  namespace {

    using detail::IdVectorHash;
    using detail::ResidualTrie;
    using NodeId  = ResidualTrie::NodeId;
    using MemoSet = std::unordered_set<std::vector<std::uint32_t>, IdVectorHash>;

    std::size_t ipow(std::size_t b, std::size_t e) {
      return static_cast<std::size_t>(checked_power(b, e));
    }

    void require_same_universe(OpTable const& f, Relation const& rho) {
      if (f.universe() != rho.universe()) {
        throw ArgumentError("operation and relation over different universes");
      }
    }

    // Depth-first search over m x m matrices with every row and column in
    // rho. Rows are added top to bottom and each state is expanded once. In
    // collect mode the state after i rows is the residual node of every
    // column prefix plus the diagonal so far, and every reachable diagonal
    // is visited. In witness mode the diagonal is only tracked by its
    // residual node (or as dead once it has left rho), and only matrices with
    // a dead diagonal are visited; far fewer states are distinct then.
    class MatrixSearch {
     public:
      enum class Mode { collect, witness };

      MatrixSearch(Relation const& rho, Mode mode, std::size_t budget)
          : _trie(rho),
            _mode(mode),
            _m(rho.arity()),
            _k(rho.universe().size()),
            _budget(budget),
            _seen(_m),
            _cols(_m + 1, std::vector<NodeId>(_m, 0)),
            _rows(_m, Tuple(_m)) {}

      // visit(diag_code, rows) returns false to stop.
      template <typename Visit>
      void run(Visit&& visit) {
        if (_trie.empty()) {
          return;
        }
        _stop = false;
        level(0, 0, _trie.root(), visit);
      }

     private:
      static constexpr NodeId kDead = 0xffffffffU;

      template <typename Visit>
      void level(std::size_t i, Code diag, NodeId dnode, Visit& visit) {
        if (i == _m) {
          if (_mode == Mode::collect || dnode == kDead) {
            _stop = !visit(diag, std::as_const(_rows));
          }
          return;
        }
        std::vector<std::uint32_t> key(_cols[i].begin(), _cols[i].end());
        key.push_back(_mode == Mode::collect ? diag : dnode);
        if (!_seen[i].insert(std::move(key)).second) {
          return;
        }
        if (++_states > _budget) {
          throw CapacityError("matrix search exceeded the budget of " + std::to_string(_budget)
                              + " states");
        }
        row(i, 0, _trie.root(), diag, dnode, visit);
      }

      template <typename Visit>
      void row(std::size_t i, std::size_t j, NodeId rn, Code diag, NodeId dnode, Visit& visit) {
        if (j == _m) {
          Element const d    = _rows[i][i];
          NodeId        next = kDead;
          if (dnode != kDead) {
            auto const& nd = _trie.node(i, dnode);
            next           = ((nd.mask >> d) & 1U) != 0 ? nd.child[d] : kDead;
          }
          level(i + 1, diag * static_cast<Code>(_k) + d, next, visit);
          return;
        }
        auto const& rnode = _trie.node(j, rn);
        auto const& cnode = _trie.node(i, _cols[i][j]);
        ElementMask mask  = rnode.mask & cnode.mask;
        while (mask != 0 && !_stop) {
          auto const e = static_cast<Element>(std::countr_zero(mask));
          mask &= static_cast<ElementMask>(mask - 1);
          _rows[i][j]     = e;
          _cols[i + 1][j] = cnode.child[e];
          row(i, j + 1, rnode.child[e], diag, dnode, visit);
        }
      }

      ResidualTrie                     _trie;
      Mode                             _mode;
      std::size_t                      _m;
      std::size_t                      _k;
      std::size_t                      _budget;
      std::size_t                      _states = 0;
      bool                             _stop   = false;
      std::vector<MemoSet>             _seen;
      std::vector<std::vector<NodeId>> _cols;  // _cols[i]: column nodes after i rows
      std::vector<Tuple>               _rows;
    };

    // Searches for rows r_1..r_n in rho with f(r_1, ..., r_n) outside rho,
    // coordinate by coordinate: the state is the residual node of every row
    // prefix and of the image prefix. An image prefix that leaves the trie
    // already proves a violation.
    class ViolationSearch {
     public:
      ViolationSearch(OpTable const& f, Relation const& rho)
          : _f(f),
            _trie(rho),
            _n(f.arity()),
            _m(rho.arity()),
            _k(rho.universe().size()),
            _seen(_m),
            _nodes(_m + 1, std::vector<NodeId>(_n + 1, 0)),
            _cols(_m, Tuple(_n)) {}

      std::optional<std::vector<Tuple>> run() {
        if (_trie.empty()) {
          return std::nullopt;
        }
        if (dfs(0)) {
          return _witness;
        }
        return std::nullopt;
      }

     private:
      bool dfs(std::size_t j) {
        if (j == _m) {
          return false;
        }
        std::vector<std::uint32_t> key(_nodes[j].begin(), _nodes[j].end());
        if (!_seen[j].insert(std::move(key)).second) {
          return false;
        }
        std::vector<std::vector<Element>> choices(_n);
        for (std::size_t i = 0; i < _n; ++i) {
          ElementMask mask = _trie.node(j, _nodes[j][i]).mask;
          for (; mask != 0; mask &= static_cast<ElementMask>(mask - 1)) {
            choices[i].push_back(static_cast<Element>(std::countr_zero(mask)));
          }
        }
        auto const&              res = _trie.node(j, _nodes[j][_n]);
        std::vector<std::size_t> pos(_n, 0);
        Tuple&                   x = _cols[j];
        while (true) {
          for (std::size_t i = 0; i < _n; ++i) {
            x[i] = choices[i][pos[i]];
          }
          Element const y = _f[encode_tuple(_k, x)];
          if (((res.mask >> y) & 1U) == 0) {
            complete(j);
            return true;
          }
          for (std::size_t i = 0; i < _n; ++i) {
            _nodes[j + 1][i] = _trie.node(j, _nodes[j][i]).child[x[i]];
          }
          _nodes[j + 1][_n] = res.child[y];
          if (dfs(j + 1)) {
            return true;
          }
          std::size_t i = _n;
          while (i > 0 && ++pos[i - 1] == choices[i - 1].size()) {
            pos[i - 1] = 0;
            --i;
          }
          if (i == 0) {
            return false;
          }
        }
      }

      // Rows from the columns chosen up to coordinate j, completed by the
      // smallest continuation in the trie.
      void complete(std::size_t j) {
        _witness.assign(_n, Tuple(_m));
        for (std::size_t i = 0; i < _n; ++i) {
          for (std::size_t c = 0; c <= j; ++c) {
            _witness[i][c] = _cols[c][i];
          }
          NodeId id = _trie.node(j, _nodes[j][i]).child[_cols[j][i]];
          for (std::size_t c = j + 1; c < _m; ++c) {
            auto const& nd = _trie.node(c, id);
            auto const  e  = static_cast<Element>(std::countr_zero(nd.mask));
            _witness[i][c] = e;
            id             = nd.child[e];
          }
        }
      }

      OpTable const&                   _f;
      ResidualTrie                     _trie;
      std::size_t                      _n;
      std::size_t                      _m;
      std::size_t                      _k;
      std::vector<MemoSet>             _seen;
      std::vector<std::vector<NodeId>> _nodes;  // _nodes[j]: row nodes, then the image node
      std::vector<Tuple>               _cols;
      std::vector<Tuple>               _witness;
    };

  }  // namespace

  std::optional<std::vector<Tuple>> find_violation(OpTable const& f, Relation const& rho) {
    require_same_universe(f, rho);
    std::size_t const k = rho.universe().size();
    if (f.arity() == 1) {
      Tuple t(rho.arity());
      for (Code c : rho.codes()) {
        decode_tuple(k, c, t);
        Tuple img(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) {
          img[j] = f[t[j]];
        }
        if (!rho.contains_code(encode_tuple(k, img))) {
          return std::vector<Tuple>{t};
        }
      }
      return std::nullopt;
    }
    return ViolationSearch(f, rho).run();
  }

  bool preserves(OpTable const& f, Relation const& rho) {
    return !find_violation(f, rho).has_value();
  }

  bool models(Relation const& rho, LineTensor const& t) {
    if (t.side() != rho.arity()) {
      throw ArgumentError("tensor side " + std::to_string(t.side())
                          + " differs from the relation arity " + std::to_string(rho.arity()));
    }
    for (std::size_t a = 0; a < t.dims(); ++a) {
      for (std::size_t w = 0; w < t.lines_per_axis(); ++w) {
        if (!rho.contains(t.line(a, w))) {
          return false;
        }
      }
    }
    return true;
  }

  Relation partial(Relation const& rho, std::size_t budget) {
    detail::CodeSet   found(rho.space_size());
    std::vector<Code> out;
    MatrixSearch      search(rho, MatrixSearch::Mode::collect, budget);
    search.run([&](Code diag, std::vector<Tuple> const&) {
      if (found.insert(diag)) {
        out.push_back(diag);
      }
      return true;
    });
    return Relation::from_codes(rho.universe(), rho.arity(), std::move(out));
  }

  Relation partial_naive(Relation const& rho) {
    std::size_t const m = rho.arity();
    std::size_t const k = rho.universe().size();
    std::size_t const r = rho.size();
    std::vector<Code> out;
    if (r == 0) {
      return Relation::empty(rho.universe(), m);
    }
    std::vector<Tuple>       ts = rho.tuples();
    std::vector<std::size_t> pick(m, 0);
    Tuple                    col(m);
    Tuple                    diag(m);
    while (true) {
      bool ok = true;
      for (std::size_t j = 0; j < m && ok; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
          col[i] = ts[pick[i]][j];
        }
        ok = rho.contains(col);
      }
      if (ok) {
        for (std::size_t i = 0; i < m; ++i) {
          diag[i] = ts[pick[i]][i];
        }
        out.push_back(encode_tuple(k, diag));
      }
      std::size_t i = m;
      while (i > 0 && ++pick[i - 1] == r) {
        pick[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
    }
    return Relation::from_codes(rho.universe(), m, std::move(out));
  }

  std::optional<LineTensor> transitivity_witness(Relation const& rho, std::size_t budget) {
    std::optional<LineTensor> out;
    MatrixSearch              search(rho, MatrixSearch::Mode::witness, budget);
    search.run([&](Code, std::vector<Tuple> const& rows) {
      out = LineTensor::matrix(rows);
      return false;
    });
    return out;
  }

  Relation closure(Relation const& rho, ClosureMode mode, std::size_t budget) {
    if (mode == ClosureMode::reflexive) {
      return relation_union(rho, Relation::diagonal(rho.universe(), rho.arity()));
    }
    Relation cur = mode == ClosureMode::gquord ? closure(rho, ClosureMode::reflexive) : rho;
    while (true) {
      Relation p = partial(cur, budget);
      if (p.is_subset_of(cur)) {
        return cur;
      }
      cur = relation_union(cur, p);
    }
  }

  GquordReport is_gquord(Relation const& rho, std::size_t budget) {
    GquordReport r;
    r.reflexive  = rho.is_reflexive();
    r.witness    = transitivity_witness(rho, budget);
    r.transitive = !r.witness.has_value();
    return r;
  }

  bool models_tensor_diagonal_check(Relation const& rho, LineTensor const& t) {
    return !models(rho, t) || rho.contains(t.diagonal());
  }

  Relation diagonal_relation(Universe universe, std::size_t m, Partition const& blocks) {
    std::vector<std::size_t> block_of(m, m);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw ArgumentError("partition has an empty block");
      }
      for (std::size_t i : blocks[b]) {
        if (i >= m || block_of[i] != m) {
          throw ArgumentError("blocks do not partition the coordinates 0.." + std::to_string(m - 1));
        }
        block_of[i] = b;
      }
    }
    if (std::find(block_of.begin(), block_of.end(), m) != block_of.end()) {
      throw ArgumentError("blocks do not cover every coordinate");
    }
    std::size_t const k = universe.size();
    std::size_t const n = ipow(k, blocks.size());
    std::vector<Code> codes;
    Tuple             vals(blocks.size());
    Tuple             t(m);
    for (std::size_t c = 0; c < n; ++c) {
      decode_tuple(k, static_cast<Code>(c), vals);
      for (std::size_t i = 0; i < m; ++i) {
        t[i] = vals[block_of[i]];
      }
      codes.push_back(encode_tuple(k, t));
    }
    return Relation::from_codes(universe, m, std::move(codes));
  }

  Relation tensor_product_rel(Relation const& rho1, Relation const& rho2) {
    if (rho1.arity() != rho2.arity()) {
      throw ArgumentError("tensor product of relations of different arities");
    }
    Universe const    u  = Universe::product(rho1.universe(), rho2.universe());
    std::size_t const k2 = rho2.universe().size();
    std::size_t const m  = rho1.arity();
    std::vector<Code> codes;
    codes.reserve(rho1.size() * rho2.size());
    Tuple t(m);
    for (auto const& a : rho1.tuples()) {
      for (auto const& b : rho2.tuples()) {
        for (std::size_t j = 0; j < m; ++j) {
          t[j] = static_cast<Element>(a[j] * k2 + b[j]);
        }
        codes.push_back(encode_tuple(u.size(), t));
      }
    }
    return Relation::from_codes(u, m, std::move(codes));
  }

  Monoid tensor_product_mon(Monoid const& m1, Monoid const& m2) {
    Universe const    u  = Universe::product(m1.universe(), m2.universe());
    std::size_t const k1 = m1.universe().size();
    std::size_t const k2 = m2.universe().size();
    std::vector<Code> codes;
    codes.reserve(m1.size() * m2.size());
    for (Code c1 : m1.codes()) {
      UnaryMap const g1 = decode_unary(k1, c1);
      for (Code c2 : m2.codes()) {
        UnaryMap const g2 = decode_unary(k2, c2);
        UnaryMap       g{};
        for (std::size_t a = 0; a < k1; ++a) {
          for (std::size_t b = 0; b < k2; ++b) {
            g[a * k2 + b] = static_cast<Element>(g1[a] * k2 + g2[b]);
          }
        }
        codes.push_back(encode_unary(u.size(), g));
      }
    }
    return Monoid(u, std::move(codes), detail::TrustedClosure{});
  }

  namespace {
    // Sorted distinct elements of B and the dense index of every element
    // (or k when outside B).
    std::pair<Tuple, std::vector<std::size_t>> index_subset(Universe const&          u,
                                                            std::span<Element const> b) {
      Tuple sorted(b.begin(), b.end());
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (Element x : sorted) {
        if (!u.contains(x)) {
          throw ArgumentError("subset element " + std::to_string(x) + " is out of range");
        }
      }
      if (sorted.size() < kMinUniverse) {
        throw ArgumentError("a restriction needs at least two elements");
      }
      std::vector<std::size_t> index(u.size(), u.size());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        index[sorted[i]] = i;
      }
      return {sorted, index};
    }

    std::string table_text(std::size_t k, Code c) {
      std::string s = "(";
      for (Element x : decode_tuple(k, c, k)) {
        if (s.size() > 1) {
          s += ",";
        }
        s += std::to_string(x);
      }
      return s + ")";
    }
  }  // namespace

  Relation restrict(Relation const& rho, std::span<Element const> b) {
    auto const [sorted, index] = index_subset(rho.universe(), b);
    Universe const    ub(sorted.size());
    std::size_t const k = rho.universe().size();
    std::vector<Code> codes;
    Tuple             t(rho.arity());
    for (Code c : rho.codes()) {
      decode_tuple(k, c, t);
      bool inside = true;
      for (Element& x : t) {
        if (index[x] == k) {
          inside = false;
          break;
        }
        x = static_cast<Element>(index[x]);
      }
      if (inside) {
        codes.push_back(encode_tuple(ub.size(), t));
      }
    }
    return Relation::from_codes(ub, rho.arity(), std::move(codes));
  }

  bool is_invariant_subset(Monoid const& m, std::span<Element const> b) {
    std::size_t const k = m.universe().size();
    for (Code c : m.codes()) {
      UnaryMap const g = decode_unary(k, c);
      for (Element x : b) {
        if (x >= k || std::find(b.begin(), b.end(), g[x]) == b.end()) {
          return false;
        }
      }
    }
    return true;
  }

  Monoid restrict_mon(Monoid const& m, std::span<Element const> b) {
    auto const [sorted, index] = index_subset(m.universe(), b);
    Universe const    ub(sorted.size());
    std::size_t const k = m.universe().size();
    std::vector<Code> codes;
    for (Code c : m.codes()) {
      UnaryMap const g = decode_unary(k, c);
      UnaryMap       r{};
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        std::size_t const y = index[g[sorted[i]]];
        if (y == k) {
          throw PreconditionError("member " + table_text(k, c) + " maps "
                                  + std::to_string(sorted[i]) + " outside the subset");
        }
        r[i] = static_cast<Element>(y);
      }
      codes.push_back(encode_unary(ub.size(), r));
    }
    return Monoid(ub, std::move(codes), detail::TrustedClosure{});
  }

  Relation cylindrify(Relation const& rho, std::size_t n) {
    std::size_t const m = rho.arity();
    if (n < m) {
      throw ArgumentError("cylindrification to arity " + std::to_string(n)
                          + " below the relation arity " + std::to_string(m));
    }
    if (n > kMaxRelationArity) {
      throw CapacityError("arity " + std::to_string(n) + " exceeds the limit of "
                          + std::to_string(kMaxRelationArity));
    }
    std::size_t const k     = rho.universe().size();
    std::size_t const front = ipow(k, n - m);
    Code const        shift = static_cast<Code>(ipow(k, m));
    std::vector<Code> codes;
    codes.reserve(front * rho.size());
    for (std::size_t a = 0; a < front; ++a) {
      for (Code c : rho.codes()) {
        codes.push_back(static_cast<Code>(a) * shift + c);
      }
    }
    return Relation::from_codes(rho.universe(), n, std::move(codes));
  }

  Relation project(Relation const& rho, std::span<std::size_t const> idx) {
    if (idx.empty()) {
      throw ArgumentError("projection onto no coordinates");
    }
    for (std::size_t i : idx) {
      if (i >= rho.arity()) {
        throw ArgumentError("coordinate " + std::to_string(i) + " out of range for arity "
                            + std::to_string(rho.arity()));
      }
    }
    std::size_t const k = rho.universe().size();
    std::vector<Code> codes;
    Tuple             t(rho.arity());
    Tuple             p(idx.size());
    for (Code c : rho.codes()) {
      decode_tuple(k, c, t);
      for (std::size_t j = 0; j < idx.size(); ++j) {
        p[j] = t[idx[j]];
      }
      codes.push_back(encode_tuple(k, p));
    }
    return Relation::from_codes(rho.universe(), idx.size(), std::move(codes));
  }

  Monoid end_of(RelationSet const& q) {
    Universe const    u = q.universe();
    std::size_t const k = u.size();
    // Tuples bucketed by their largest entry: once g is fixed on 0..x, the
    // images of the bucket-x tuples are known and can be checked.
    struct Bucketed {
      Relation const*    rho;
      std::vector<Tuple> by_max[kMaxProductUniverse];
    };
    std::vector<Bucketed> rels;
    for (auto const& rho : q) {
      Bucketed b{&rho, {}};
      for (auto const& t : rho.tuples()) {
        b.by_max[*std::max_element(t.begin(), t.end())].push_back(t);
      }
      rels.push_back(std::move(b));
    }
    std::vector<Code> out;
    UnaryMap          g{};
    Tuple             img;
    auto ok_at = [&](std::size_t x) {
      for (auto const& b : rels) {
        for (auto const& t : b.by_max[x]) {
          img.resize(t.size());
          for (std::size_t j = 0; j < t.size(); ++j) {
            img[j] = g[t[j]];
          }
          if (!b.rho->contains_code(encode_tuple(k, img))) {
            return false;
          }
        }
      }
      return true;
    };
    // Odometer over g(0), g(1), ... with pruning.
    std::size_t x = 0;
    std::vector<std::size_t> next(k, 0);
    while (true) {
      if (next[x] == k) {
        if (x == 0) {
          break;
        }
        next[x] = 0;
        --x;
        continue;
      }
      g[x] = static_cast<Element>(next[x]++);
      if (!ok_at(x)) {
        continue;
      }
      if (x + 1 == k) {
        out.push_back(encode_unary(k, g));
      } else {
        ++x;
      }
    }
    return Monoid(u, std::move(out), detail::TrustedClosure{});
  }

  Monoid end_of(Relation const& rho) {
    return end_of(RelationSet(rho.universe(), {rho}));
  }

  namespace {

    // A table constraint of the polymorphism search: the entries at `vars`
    // must form one of the rows of `allowed` (flattened, vars.size() wide).
    struct TableConstraint {
      std::vector<std::uint32_t> vars;
      std::vector<Element>       allowed;

      friend auto operator<=>(TableConstraint const&, TableConstraint const&) = default;
    };

    class PolSearch {
     public:
      PolSearch(RelationSet const& q, std::size_t n, std::size_t max_results)
          : _u(q.universe()), _k(_u.size()), _n(n), _max(max_results) {
        _vars = ipow(_k, n);
        _domain.assign(_vars, static_cast<ElementMask>((1U << _k) - 1));
        _value.assign(_vars, 0);
        _assigned.assign(_vars, false);
        _touching.resize(_vars);
        build(q);
      }

      std::vector<OpTable> run() {
        if (!_infeasible) {
          search(0);
        }
        return std::move(_out);
      }

     private:
      void build(RelationSet const& q) {
        constexpr std::size_t kMaxPatterns = 4000000;
        std::set<TableConstraint> unique;
        for (auto const& rho : q) {
          std::size_t const m = rho.arity();
          std::size_t const r = rho.size();
          if (r == 0) {
            // No tuples: every operation preserves the empty relation.
            continue;
          }
          std::size_t patterns = 1;
          for (std::size_t i = 0; i < _n; ++i) {
            patterns *= r;
            if (patterns > kMaxPatterns) {
              throw CapacityError("polymorphism search would need more than "
                                  + std::to_string(kMaxPatterns) + " constraints");
            }
          }
          auto const               ts = rho.tuples();
          std::vector<std::size_t> pick(_n, 0);
          Tuple                    arg(_n);
          for (std::size_t p = 0; p < patterns; ++p) {
            // Variable touched by coordinate j of the pattern.
            std::vector<std::uint32_t> scope(m);
            for (std::size_t j = 0; j < m; ++j) {
              for (std::size_t i = 0; i < _n; ++i) {
                arg[i] = ts[pick[i]][j];
              }
              scope[j] = encode_tuple(_k, arg);
            }
            unique.insert(make_constraint(rho, scope));
            for (std::size_t i = _n; i-- > 0;) {
              if (++pick[i] < r) {
                break;
              }
              pick[i] = 0;
            }
          }
        }
        for (auto const& c : unique) {
          if (c.vars.size() == 1) {
            ElementMask mask = 0;
            for (Element a : c.allowed) {
              mask |= ElementMask(1U << a);
            }
            _domain[c.vars[0]] &= mask;
            if (_domain[c.vars[0]] == 0) {
              _infeasible = true;
            }
            continue;
          }
          std::size_t const id = _cons.size();
          _cons.push_back(c);
          for (std::uint32_t v : c.vars) {
            _touching[v].push_back(id);
          }
        }
      }

      // Distinct variables of the scope and the tuples of rho that agree on
      // repeated variables, projected onto them.
      static TableConstraint make_constraint(Relation const& rho,
                                             std::vector<std::uint32_t> const& scope) {
        TableConstraint          c;
        std::vector<std::size_t> slot(scope.size());
        for (std::size_t j = 0; j < scope.size(); ++j) {
          auto it = std::find(c.vars.begin(), c.vars.end(), scope[j]);
          slot[j] = static_cast<std::size_t>(it - c.vars.begin());
          if (it == c.vars.end()) {
            c.vars.push_back(scope[j]);
          }
        }
        std::size_t const w = c.vars.size();
        Tuple             row(w);
        for (auto const& t : rho.tuples()) {
          std::vector<bool> set(w, false);
          bool              ok = true;
          for (std::size_t j = 0; j < t.size() && ok; ++j) {
            if (set[slot[j]]) {
              ok = row[slot[j]] == t[j];
            } else {
              row[slot[j]] = t[j];
              set[slot[j]] = true;
            }
          }
          if (ok) {
            c.allowed.insert(c.allowed.end(), row.begin(), row.end());
          }
        }
        return c;
      }

      // Narrows the domains of the unassigned variables of every constraint
      // touching v to the values that still have a supporting row.
      bool propagate(std::uint32_t v) {
        for (std::size_t id : _touching[v]) {
          auto const&              c = _cons[id];
          std::size_t const        w = c.vars.size();
          std::vector<ElementMask> support(w, 0);
          bool                     any = false;
          for (std::size_t r = 0; r < c.allowed.size(); r += w) {
            bool ok = true;
            for (std::size_t i = 0; i < w && ok; ++i) {
              std::uint32_t const x = c.vars[i];
              Element const       a = c.allowed[r + i];
              ok = _assigned[x] ? _value[x] == a : ((_domain[x] >> a) & 1U) != 0;
            }
            if (ok) {
              any = true;
              for (std::size_t i = 0; i < w; ++i) {
                support[i] |= ElementMask(1U << c.allowed[r + i]);
              }
            }
          }
          if (!any) {
            return false;
          }
          for (std::size_t i = 0; i < w; ++i) {
            std::uint32_t const x = c.vars[i];
            if (_assigned[x]) {
              continue;
            }
            ElementMask const narrowed = _domain[x] & support[i];
            if (narrowed != _domain[x]) {
              _trail.emplace_back(x, _domain[x]);
              _domain[x] = narrowed;
              if (narrowed == 0) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void search(std::uint32_t v) {
        if (v == _vars) {
          if (_max != 0 && _out.size() == _max) {
            throw CapacityError("more than " + std::to_string(_max) + " polymorphisms of arity "
                                + std::to_string(_n));
          }
          _out.emplace_back(_u, _n, _value);
          return;
        }
        ElementMask mask = _domain[v];
        while (mask != 0) {
          auto const a = static_cast<Element>(std::countr_zero(mask));
          mask &= static_cast<ElementMask>(mask - 1);
          std::size_t const mark = _trail.size();
          _value[v]              = a;
          _assigned[v]           = true;
          if (propagate(v)) {
            search(v + 1);
          }
          _assigned[v] = false;
          while (_trail.size() > mark) {
            _domain[_trail.back().first] = _trail.back().second;
            _trail.pop_back();
          }
        }
      }

      Universe                                         _u;
      std::size_t                                      _k;
      std::size_t                                      _n;
      std::size_t                                      _max;
      std::uint32_t                                    _vars = 0;
      bool                                             _infeasible = false;
      std::vector<ElementMask>                         _domain;
      std::vector<Element>                             _value;
      std::vector<bool>                                _assigned;
      std::vector<TableConstraint>                     _cons;
      std::vector<std::vector<std::size_t>>            _touching;
      std::vector<std::pair<std::uint32_t, ElementMask>> _trail;
      std::vector<OpTable>                             _out;
    };

  }  // namespace

  std::vector<OpTable> pol_arity(RelationSet const& q, std::size_t n, std::size_t max_results) {
    if (n == 0) {
      throw ArgumentError("operations must have positive arity");
    }
    if (n > kMaxPolArity || q.universe().size() > kMaxPolUniverse) {
      throw CapacityError("polymorphism search supports arity <= " + std::to_string(kMaxPolArity)
                          + " and k <= " + std::to_string(kMaxPolUniverse));
    }
    return PolSearch(q, n, max_results).run();
  }

  OpSet pol_bounded(RelationSet const& q, std::size_t nmax, std::size_t max_results) {
    OpSet out(q.universe());
    for (std::size_t n = 1; n <= nmax; ++n) {
      for (auto& f : pol_arity(q, n, max_results)) {
        out.insert(std::move(f));
      }
    }
    return out;
  }

  namespace {
    // Row masks of a binary relation: bit b of rows[a] iff (a, b) in it.
    using RowMasks = std::array<std::uint16_t, kMaxProductUniverse>;

    bool masks_invariant(RowMasks const& rows, std::size_t k, std::vector<UnaryMap> const& maps) {
      for (auto const& g : maps) {
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) {
            if (((rows[a] >> b) & 1U) != 0 && ((rows[g[a]] >> g[b]) & 1U) == 0) {
              return false;
            }
          }
        }
      }
      return true;
    }

    Relation masks_relation(Universe const& u, RowMasks const& rows) {
      std::size_t const k = u.size();
      std::vector<Code> codes;
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (((rows[a] >> b) & 1U) != 0) {
            codes.push_back(static_cast<Code>(a * k + b));
          }
        }
      }
      return Relation::from_codes(u, 2, std::move(codes));
    }

    std::vector<UnaryMap> nonidentity_maps(Monoid const& m) {
      std::size_t const     k = m.universe().size();
      std::vector<UnaryMap> out;
      for (Code c : m.codes()) {
        if (c != identity_code(k)) {
          out.push_back(decode_unary(k, c));
        }
      }
      return out;
    }
  }  // namespace

  RelationSet invariant_quords(Monoid const& m) {
    Universe const    u = m.universe();
    std::size_t const k = u.size();
    if (k > kMaxQuordUniverse) {
      throw CapacityError("quasiorder enumeration supports k <= "
                          + std::to_string(kMaxQuordUniverse));
    }
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (a != b) {
          off.emplace_back(a, b);
        }
      }
    }
    auto const  maps = nonidentity_maps(m);
    RelationSet out(u);
    for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << off.size()); ++bits) {
      RowMasks rows{};
      for (std::size_t a = 0; a < k; ++a) {
        rows[a] = static_cast<std::uint16_t>(1U << a);
      }
      for (std::size_t i = 0; i < off.size(); ++i) {
        if (((bits >> i) & 1U) != 0) {
          rows[off[i].first] |= static_cast<std::uint16_t>(1U << off[i].second);
        }
      }
      bool transitive = true;
      for (std::size_t a = 0; a < k && transitive; ++a) {
        for (std::size_t b = 0; b < k && transitive; ++b) {
          if (((rows[a] >> b) & 1U) != 0) {
            transitive = (rows[b] & ~rows[a]) == 0;
          }
        }
      }
      if (transitive && masks_invariant(rows, k, maps)) {
        out.insert(masks_relation(u, rows));
      }
    }
    return out;
  }

  RelationSet invariant_congruences(Monoid const& m) {
    Universe const    u    = m.universe();
    std::size_t const k    = u.size();
    auto const        maps = nonidentity_maps(m);
    RelationSet       out(u);
    // Restricted growth strings: block[0] = 0, block[i] <= 1 + max(block[0..i-1]).
    std::vector<std::size_t> block(k, 0);
    while (true) {
      RowMasks rows{};
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (block[a] == block[b]) {
            rows[a] |= static_cast<std::uint16_t>(1U << b);
          }
        }
      }
      if (masks_invariant(rows, k, maps)) {
        out.insert(masks_relation(u, rows));
      }
      std::size_t i = k;
      while (i-- > 1) {
        std::size_t const mx = *std::max_element(block.begin(), block.begin() + i);
        if (block[i] <= mx) {
          ++block[i];
          std::fill(block.begin() + i + 1, block.end(), 0);
          break;
        }
      }
      if (i == 0) {
        break;
      }
    }
    return out;
  }

  Relation invariant_gquord_closure(Relation const& rho, Monoid const& m, std::size_t budget) {
    if (rho.universe() != m.universe()) {
      throw ArgumentError("relation and monoid over different universes");
    }
    std::size_t const k    = rho.universe().size();
    std::size_t const ar   = rho.arity();
    auto const        maps = nonidentity_maps(m);
    Relation          cur  = closure(rho, ClosureMode::reflexive);
    while (true) {
      // M-images of the current tuples; one pass suffices since M is closed
      // under composition.
      std::vector<Code> codes(cur.codes().begin(), cur.codes().end());
      Tuple             t(ar);
      Tuple             img(ar);
      for (Code c : cur.codes()) {
        decode_tuple(k, c, t);
        for (auto const& g : maps) {
          for (std::size_t j = 0; j < ar; ++j) {
            img[j] = g[t[j]];
          }
          codes.push_back(encode_tuple(k, img));
        }
      }
      Relation next = Relation::from_codes(cur.universe(), ar, std::move(codes));
      Relation p    = partial(next, budget);
      if (p.is_subset_of(next) && next == cur) {
        return cur;
      }
      cur = relation_union(next, p);
    }
  }

  RelationSet invariant_gquords(Monoid const& m, std::size_t arity, std::size_t budget) {
    if (arity == 0) {
      throw ArgumentError("relations must have positive arity");
    }
    if (arity > kMaxGquordArity) {
      throw CapacityError("invariant generalized quasiorders supported up to arity "
                          + std::to_string(kMaxGquordArity));
    }
    Universe const    u     = m.universe();
    std::size_t const k     = u.size();
    std::size_t const space = ipow(k, arity);

    RelationSet           found(u);
    std::deque<Relation>  queue;
    auto add = [&](Relation rho) {
      if (found.contains(rho)) {
        return;
      }
      if (found.size() >= budget) {
        throw BudgetExceeded("more than " + std::to_string(budget)
                                 + " invariant generalized quasiorders",
                             found);
      }
      found.insert(rho);
      queue.push_back(std::move(rho));
    };

    add(invariant_gquord_closure(Relation::empty(u, arity), m));
    std::vector<Relation> principals;
    {
      RelationSet seen(u);
      for (std::size_t c = 0; c < space; ++c) {
        Relation p = invariant_gquord_closure(
            Relation::from_codes(u, arity, {static_cast<Code>(c)}), m);
        if (seen.insert(p)) {
          principals.push_back(p);
        }
      }
    }
    for (auto const& p : principals) {
      add(p);
    }
    // Every invariant gquord is the join of the principal ones below it, so
    // joining each member with each principal reaches them all.
    while (!queue.empty()) {
      Relation x = std::move(queue.front());
      queue.pop_front();
      for (auto const& p : principals) {
        if (!p.is_subset_of(x)) {
          add(invariant_gquord_closure(relation_union(x, p), m));
        }
      }
    }
    return found;
  }

}  // namespace gq
