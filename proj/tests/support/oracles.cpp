#include "oracles.hpp"

#include <functional>

namespace oracle {

  namespace {

    std::size_t power(std::size_t b, std::size_t e) {
      std::size_t r = 1;
      while (e-- > 0) {
        r *= b;
      }
      return r;
    }

    // Calls body on every tuple of A^n, last coordinate fastest.
    void each_tuple(std::size_t k, std::size_t n, std::function<void(Tuple const&)> const& body) {
      Tuple t(n, 0);
      while (true) {
        body(t);
        std::size_t i = n;
        while (i > 0 && ++t[i - 1] == k) {
          t[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          return;
        }
      }
    }

    Table compose_unary(Table const& f, Table const& g) {
      Table h(g.size());
      for (std::size_t x = 0; x < g.size(); ++x) {
        h[x] = f[g[x]];
      }
      return h;
    }

    // Every choice of `count` items out of `items`, with repetition.
    template <typename T>
    void each_choice(std::vector<T> const& items, std::size_t count,
                     std::function<void(std::vector<T const*> const&)> const& body) {
      if (items.empty()) {
        return;
      }
      std::vector<std::size_t> idx(count, 0);
      std::vector<T const*>    pick(count);
      while (true) {
        for (std::size_t i = 0; i < count; ++i) {
          pick[i] = &items[idx[i]];
        }
        body(pick);
        std::size_t i = count;
        while (i > 0 && ++idx[i - 1] == items.size()) {
          idx[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          return;
        }
      }
    }

  }  // namespace

  TupleSet tuples_of(gq::Relation const& rho) {
    auto const t = rho.tuples();
    return {t.begin(), t.end()};
  }

  gq::Relation relation_of(std::size_t k, std::size_t m, TupleSet const& s) {
    return gq::Relation(gq::Universe(k), m, std::vector<Tuple>(s.begin(), s.end()));
  }

  Element apply(std::size_t k, Table const& f, Tuple const& x) {
    std::size_t idx = 0;
    for (Element e : x) {
      idx = idx * k + e;
    }
    return f[idx];
  }

  bool preserves(std::size_t k, Table const& f, std::size_t n, TupleSet const& rho) {
    std::vector<Tuple> rows(rho.begin(), rho.end());
    if (rows.empty()) {
      return true;
    }
    std::size_t const m  = rows.front().size();
    bool              ok = true;
    each_choice<Tuple>(rows, n, [&](std::vector<Tuple const*> const& pick) {
      if (!ok) {
        return;
      }
      Tuple image(m);
      for (std::size_t j = 0; j < m; ++j) {
        Tuple col(n);
        for (std::size_t i = 0; i < n; ++i) {
          col[i] = (*pick[i])[j];
        }
        image[j] = apply(k, f, col);
      }
      ok = rho.count(image) > 0;
    });
    return ok;
  }

  TupleSet partial(TupleSet const& rho, std::size_t m) {
    std::vector<Tuple> rows(rho.begin(), rho.end());
    TupleSet           out;
    each_choice<Tuple>(rows, m, [&](std::vector<Tuple const*> const& pick) {
      for (std::size_t j = 0; j < m; ++j) {
        Tuple col(m);
        for (std::size_t i = 0; i < m; ++i) {
          col[i] = (*pick[i])[j];
        }
        if (rho.count(col) == 0) {
          return;
        }
      }
      Tuple d(m);
      for (std::size_t i = 0; i < m; ++i) {
        d[i] = (*pick[i])[i];
      }
      out.insert(d);
    });
    return out;
  }

  bool is_transitive(TupleSet const& rho, std::size_t m) {
    for (auto const& d : partial(rho, m)) {
      if (rho.count(d) == 0) {
        return false;
      }
    }
    return true;
  }

  bool is_reflexive(std::size_t k, TupleSet const& rho, std::size_t m) {
    for (std::size_t a = 0; a < k; ++a) {
      if (rho.count(Tuple(m, static_cast<Element>(a))) == 0) {
        return false;
      }
    }
    return true;
  }

  TupleSet gquord_closure(std::size_t k, TupleSet rho, std::size_t m) {
    for (std::size_t a = 0; a < k; ++a) {
      rho.insert(Tuple(m, static_cast<Element>(a)));
    }
    while (true) {
      std::size_t const before = rho.size();
      auto const        d      = partial(rho, m);
      rho.insert(d.begin(), d.end());
      if (rho.size() == before) {
        return rho;
      }
    }
  }

  TupleSet compose(TupleSet const& rho) {
    TupleSet out;
    for (auto const& p : rho) {
      for (auto const& q : rho) {
        if (p[1] == q[0]) {
          out.insert({p[0], q[1]});
        }
      }
    }
    return out;
  }

  std::set<Table> translations(std::size_t k, Table const& f, std::size_t n) {
    std::set<Table> out;
    if (n == 1) {
      out.insert(f);
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
      each_tuple(k, n - 1, [&](Tuple const& rest) {
        Table t(k);
        for (std::size_t x = 0; x < k; ++x) {
          Tuple args;
          for (std::size_t j = 0, r = 0; j < n; ++j) {
            args.push_back(j == i ? static_cast<Element>(x) : rest[r++]);
          }
          t[x] = apply(k, f, args);
        }
        out.insert(t);
      });
    }
    return out;
  }

  bool in_star(std::size_t k, Table const& f, std::size_t n, std::set<Table> const& m) {
    for (auto const& t : translations(k, f, n)) {
      if (m.count(t) == 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<Table> star(std::size_t k, std::set<Table> const& m, std::size_t n) {
    std::vector<Table> out;
    std::size_t const  size = power(k, n);
    each_tuple(k, size, [&](Tuple const& table) {
      if (in_star(k, table, n, m)) {
        out.push_back(table);
      }
    });
    return out;
  }

  std::set<Table> members(gq::Monoid const& m) {
    std::set<Table> out;
    for (auto const& g : m.members()) {
      out.insert(Table(g.table().begin(), g.table().end()));
    }
    return out;
  }

  std::set<Table> monoid_closure(std::size_t k, std::vector<Table> gens) {
    Table id(k);
    for (std::size_t x = 0; x < k; ++x) {
      id[x] = static_cast<Element>(x);
    }
    std::set<Table> out{id};
    std::vector<Table> todo{id};
    while (!todo.empty()) {
      Table const t = todo.back();
      todo.pop_back();
      for (auto const& g : gens) {
        Table const h = compose_unary(g, t);
        if (out.insert(h).second) {
          todo.push_back(h);
        }
      }
    }
    return out;
  }

  std::vector<std::set<Table>> submonoids_by_subsets(std::size_t k) {
    std::vector<Table> all;
    each_tuple(k, k, [&](Tuple const& t) { all.push_back(t); });
    Table id(k);
    for (std::size_t x = 0; x < k; ++x) {
      id[x] = static_cast<Element>(x);
    }
    std::vector<std::set<Table>> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << all.size()); ++mask) {
      std::set<Table> s;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((mask >> i) & 1U) {
          s.insert(all[i]);
        }
      }
      bool ok = s.count(id) > 0;
      for (auto const& a : s) {
        for (auto const& b : s) {
          ok = ok && s.count(compose_unary(a, b)) > 0;
        }
      }
      if (ok) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::set<Table> end_of(std::size_t k, std::vector<TupleSet> const& q, std::size_t m) {
    (void)m;
    std::set<Table> out;
    each_tuple(k, k, [&](Tuple const& g) {
      for (auto const& rho : q) {
        if (!preserves(k, g, 1, rho)) {
          return;
        }
      }
      out.insert(g);
    });
    return out;
  }

  std::vector<Table> pol(std::size_t k, std::vector<std::pair<TupleSet, std::size_t>> const& q,
                         std::size_t n) {
    std::vector<Table> out;
    each_tuple(k, power(k, n), [&](Tuple const& f) {
      for (auto const& [rho, m] : q) {
        (void)m;
        if (!preserves(k, f, n, rho)) {
          return;
        }
      }
      out.push_back(f);
    });
    return out;
  }

  std::vector<TupleSet> preorders(std::size_t k) {
    std::vector<TupleSet> out;
    std::size_t const     bits = k * k;
    for (std::size_t mask = 0; mask < (std::size_t(1) << bits); ++mask) {
      auto in = [&](std::size_t a, std::size_t b) { return ((mask >> (a * k + b)) & 1U) != 0; };
      bool ok = true;
      for (std::size_t a = 0; a < k && ok; ++a) {
        ok = in(a, a);
        for (std::size_t b = 0; b < k && ok; ++b) {
          for (std::size_t c = 0; c < k && ok; ++c) {
            ok = !(in(a, b) && in(b, c)) || in(a, c);
          }
        }
      }
      if (!ok) {
        continue;
      }
      TupleSet s;
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (in(a, b)) {
            s.insert({static_cast<Element>(a), static_cast<Element>(b)});
          }
        }
      }
      out.push_back(s);
    }
    return out;
  }

  std::vector<TupleSet> equivalences(std::size_t k) {
    std::vector<TupleSet> out;
    for (auto const& s : preorders(k)) {
      bool sym = true;
      for (auto const& p : s) {
        sym = sym && s.count({p[1], p[0]}) > 0;
      }
      if (sym) {
        out.push_back(s);
      }
    }
    return out;
  }

  bool invariant(std::size_t k, std::set<Table> const& m, TupleSet const& rho) {
    for (auto const& g : m) {
      if (!preserves(k, g, 1, rho)) {
        return false;
      }
    }
    return true;
  }

  std::vector<TupleSet> invariant_gquords(std::size_t k, std::set<Table> const& m,
                                          std::size_t arity) {
    std::vector<Tuple> nonconst;
    each_tuple(k, arity, [&](Tuple const& t) {
      for (Element x : t) {
        if (x != t.front()) {
          nonconst.push_back(t);
          return;
        }
      }
    });
    std::vector<TupleSet> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << nonconst.size()); ++mask) {
      TupleSet s;
      for (std::size_t a = 0; a < k; ++a) {
        s.insert(Tuple(arity, static_cast<Element>(a)));
      }
      for (std::size_t i = 0; i < nonconst.size(); ++i) {
        if ((mask >> i) & 1U) {
          s.insert(nonconst[i]);
        }
      }
      if (is_transitive(s, arity) && invariant(k, m, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::set<Table> binary_clone(std::size_t k, std::vector<std::pair<Table, std::size_t>> const& f) {
    std::size_t const n = k * k;
    Table             x(n);
    Table             y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<Element>(i / k);
      y[i] = static_cast<Element>(i % k);
    }
    std::set<Table> out{x, y};
    while (true) {
      std::size_t const        before = out.size();
      std::vector<Table> const cur(out.begin(), out.end());
      for (auto const& [g, arity] : f) {
        if (arity == 1) {
          for (auto const& t : cur) {
            Table h(n);
            for (std::size_t i = 0; i < n; ++i) {
              h[i] = g[t[i]];
            }
            out.insert(h);
          }
        } else {
          for (auto const& t1 : cur) {
            for (auto const& t2 : cur) {
              Table h(n);
              for (std::size_t i = 0; i < n; ++i) {
                h[i] = g[t1[i] * k + t2[i]];
              }
              out.insert(h);
            }
          }
        }
      }
      if (out.size() == before) {
        return out;
      }
    }
  }

  bool uclosed_by_binary_star(std::size_t k, std::set<Table> const& m) {
    for (std::size_t a = 0; a < k; ++a) {
      if (m.count(Table(k, static_cast<Element>(a))) == 0) {
        return false;
      }
    }
    std::vector<Table> const rows(m.begin(), m.end());
    bool                     ok = true;
    each_choice<Table>(rows, k, [&](std::vector<Table const*> const& pick) {
      if (!ok) {
        return;
      }
      Table diag(k);
      for (std::size_t j = 0; j < k; ++j) {
        Table col(k);
        for (std::size_t i = 0; i < k; ++i) {
          col[i] = (*pick[i])[j];
        }
        if (m.count(col) == 0) {
          return;
        }
        diag[j] = (*pick[j])[j];
      }
      ok = m.count(diag) > 0;
    });
    return ok;
  }

}  // namespace oracle
