#include "gq_cli/paper_cases.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gq/gq.hpp"

namespace gq::cli {

  namespace {

    using Checks = std::vector<std::string>;

    class Recorder {
     public:
      template <typename T>
      void equal(std::string const& what, T const& expected, T const& got) {
        std::ostringstream s;
        bool const         ok = expected == got;
        s << (ok ? "ok   " : "FAIL ") << what << ": expected " << expected << ", got " << got;
        _ok = _ok && ok;
        _lines.push_back(s.str());
      }
      void check(std::string const& what, bool ok) {
        _ok = _ok && ok;
        _lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
      }
      void note(std::string const& line) {
        _lines.push_back("     " + line);
      }
      bool ok() const noexcept {
        return _ok;
      }
      Checks take() {
        return std::move(_lines);
      }

     private:
      bool   _ok = true;
      Checks _lines;
    };

    std::string table_text(std::span<Element const> t) {
      std::string s;
      for (Element x : t) {
        s += static_cast<char>('0' + x);
      }
      return s;
    }

    std::string members_text(Monoid const& m) {
      std::string s = "{";
      for (auto const& g : m.members()) {
        s += (s.size() > 1 ? " " : "") + table_text(g.table());
      }
      return s + "}";
    }

    void m3a(Recorder& r) {
      Universe const u(3);
      Relation const rho(u, 2, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}});
      OpTable const  f(u, 2, {0, 0, 1, 0, 0, 1, 1, 1, 2});
      Monoid const   e = end_of(rho);
      r.check("f lies in (End rho)*", in_star(f, e));
      OpTable const g = preclone_transform(PrecloneOp::delta, f);
      r.equal<std::string>("delta f", "002", table_text(g.table()));
      r.check("delta f does not preserve rho", !preserves(g, rho));
      auto const rep = is_uclosed(e);
      r.check("End rho is not u-closed", !rep.uclosed);
      r.check("a 3x3 witness matrix is reported", rep.witness && rep.witness->side() == 3);
      if (rep.witness_op) {
        r.check("witness operation lies in (End rho)* with its diagonal outside End rho",
                in_star(*rep.witness_op, e)
                    && !e.contains(preclone_transform(PrecloneOp::delta, *rep.witness_op)));
      }
    }

    void r1(Recorder& r) {
      Universe const    u(3);
      Relation const    rho(u, 3, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {2, 0, 1}, {1, 1, 2}});
      std::size_t const idx[] = {1, 2};
      Relation const    pr    = project(rho, idx);
      Relation const    expected(u, 2, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
      r.check("rho is a generalized quasiorder", is_gquord(rho).is_gquord());
      r.check("pr_23(rho) is the expected 5-tuple relation", pr == expected);
      auto const rep = is_gquord(pr);
      r.check("pr_23(rho) is reflexive", rep.reflexive);
      r.check("pr_23(rho) is not transitive", !rep.transitive);
    }

    Relation tournament(std::size_t n) {
      Universe const     u(n);
      std::vector<Tuple> t;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (j <= i + 1 && j + 1 != i) {
            t.push_back({static_cast<Element>(i), static_cast<Element>(j)});
          }
        }
      }
      return Relation(u, 2, t);
    }

    void tournament_case(Recorder& r) {
      Relation const rho = tournament(5);
      Universe const u   = rho.universe();
      Monoid const   e   = end_of(rho);
      r.check("End rho = T", e == trivial_monoid(u));
      r.check("rho is not a generalized quasiorder", !is_gquord(rho).is_gquord());
      auto const xi = xi_check(RelationSet(u, {rho}), 2);
      r.check("Xi holds up to arity 2", xi.holds);
      std::size_t members = 0;
      std::size_t bad     = 0;
      for_each_star_member(e, 3, [&](std::span<Element const> t) {
        ++members;
        if (!preserves(OpTable(u, 3, {t.begin(), t.end()}), rho)) {
          ++bad;
        }
        return true;
      });
      r.equal<std::size_t>("ternary members of T* not preserving rho", 0, bad);
      r.note("ternary members of T*: " + std::to_string(members));
    }

    void btriv(Recorder& r) {
      for (std::size_t k = 2; k <= 6; ++k) {
        r.check("T is u-closed at k = " + std::to_string(k),
                is_uclosed(trivial_monoid(Universe(k))).uclosed);
      }
    }

    void cycles(Recorder& r) {
      std::size_t const expected[] = {4, 27, 64};
      for (std::size_t k = 2; k <= 4; ++k) {
        auto const c = cycle_ucl_size(k);
        r.equal("|ucl(M_gamma)| at k = " + std::to_string(k), expected[k - 2], c.computed);
        r.equal("formula at k = " + std::to_string(k), expected[k - 2], c.formula);
        r.check("ucl(M_gamma) = End Con M_gamma at k = " + std::to_string(k), c.end_con_agrees);
      }
    }

    void census3(Recorder& r, std::size_t threads) {
      auto const c = census_counts(3, threads);
      r.equal<std::size_t>("submonoids", 699, c.total);
      r.equal<std::size_t>("u-closed", 89, c.uclosed);
      r.equal<std::size_t>("End Quord closed", 71, c.end_quord_closed);
    }

    void b0min(Recorder& r, std::size_t threads) {
      auto const m3 = minimal_uclosed(3, threads);
      r.equal<std::size_t>("minimal u-closed monoids at k = 3", 6,
                           m3.census_route ? m3.census_route->size() : 0);
      r.check("census and classification routes agree", m3.routes_agree);
      auto const m4 = minimal_uclosed(4, threads);
      r.check("every classification-route monoid at k = 4 is u-closed", m4.all_uclosed);
      r.note("classification-route monoids at k = 4: "
             + std::to_string(m4.classification_route.size()));

      Universe const u3(3);
      Universe const u4(4);
      OpTable const  fa(u3, 1, {0, 0, 1});
      OpTable const  ha(u3, 2, {0, 0, 0, 0, 0, 1, 0, 1, 2});
      r.check("f^2 constant at k = 3: ucl(M_f) is not minimal",
              check_nonminimality(fa, {ha}).shows_nonminimal());

      OpTable const fb(u3, 1, {1, 2, 0});
      OpTable const hb(u3, 2, {0, 1, 2, 1, 2, 0, 2, 0, 1});
      OpTable const hp(u3, 2, {0, 0, 0, 0, 1, 2, 0, 2, 1});
      r.check("3-cycle at k = 3: ucl(M_f) is not minimal",
              check_nonminimality(fb, {hb, hp}).shows_nonminimal());

      OpTable const fz(u4, 1, {1, 2, 0, 3});
      OpTable const hz(u4, 2, {0, 1, 2, 3, 1, 2, 0, 3, 2, 0, 1, 3, 3, 3, 3, 3});
      r.check("3-cycle plus fixed point at k = 4: ucl(M_f) is not minimal",
              check_nonminimality(fz, {hz}).shows_nonminimal());

      // (01)(2) is (0)(12) relabelled by 0->2, 1->0, 2->1.
      Element const s[] = {2, 0, 1};
      OpTable const f2(u3, 1, {1, 0, 2});
      r.check("transposition at k = 3: ucl(M_f) is not minimal",
              check_nonminimality(f2, {relabel(hp, s)}).shows_nonminimal());
    }

    void product(Recorder& r) {
      auto const  monoids = enumerate_submonoids(2);
      std::size_t pairs   = 0;
      std::size_t differ  = 0;
      std::size_t inside  = 0;
      std::string first;
      for (auto const& a : monoids) {
        for (auto const& b : monoids) {
          ++pairs;
          Monoid const lhs = ucl(tensor_product_mon(a, b));
          Monoid const rhs = tensor_product_mon(ucl(a), ucl(b));
          if (lhs != rhs) {
            ++differ;
            if (first.empty()) {
              first = members_text(a) + " x " + members_text(b) + ": |ucl(M1 x M2)| = "
                      + std::to_string(lhs.size())
                      + ", |ucl(M1) x ucl(M2)| = " + std::to_string(rhs.size());
            }
          }
          auto const lc = lhs.codes();
          auto const rc = rhs.codes();
          if (std::includes(rc.begin(), rc.end(), lc.begin(), lc.end())) {
            ++inside;
          }
        }
      }
      r.equal<std::size_t>("pairs with ucl(M1 x M2) != ucl(M1) x ucl(M2)", 0, differ);
      r.equal("pairs with ucl(M1 x M2) inside ucl(M1) x ucl(M2)", pairs, inside);
      if (!first.empty()) {
        r.note("first difference: " + first);
      }
    }

    void restriction(Recorder& r) {
      auto const                             monoids = enumerate_submonoids(3);
      std::vector<std::vector<Element>> const subsets{{0, 1}, {0, 2}, {1, 2}};
      std::mt19937                           rng(20240601);
      std::size_t                            tried  = 0;
      std::size_t                            failed = 0;
      while (tried < 50) {
        Monoid const& m = monoids[rng() % monoids.size()];
        auto const&   b = subsets[rng() % subsets.size()];
        if (!is_invariant_subset(m, b)) {
          continue;
        }
        ++tried;
        RelationSet const     lhs  = invariant_gquords(restrict_mon(m, b), 2);
        RelationSet const     full = invariant_gquords(m, 2);
        std::vector<Relation> restricted;
        for (auto const& rho : full.members()) {
          restricted.push_back(restrict(rho, b));
        }
        if (lhs != RelationSet(lhs.universe(), restricted)) {
          ++failed;
        }
      }
      r.equal<std::size_t>("of 50 random (M, B) pairs, restriction law failures", 0, failed);
    }

    struct Case {
      char const*                                    id;
      char const*                                    title;
      std::function<void(Recorder&, std::size_t)> body;
    };

    std::vector<Case> const& cases() {
      static std::vector<Case> const all{
          {"m3a", "order with a gap: M* translation-closed but not a clone",
           [](Recorder& r, std::size_t) { m3a(r); }},
          {"r1", "ternary gquord whose projection is not transitive",
           [](Recorder& r, std::size_t) { r1(r); }},
          {"tournament", "5-element tournament: not a gquord, yet Pol = (End)*",
           [](Recorder& r, std::size_t) { tournament_case(r); }},
          {"btriv", "T = {id} u C is u-closed for k = 2..6",
           [](Recorder& r, std::size_t) { btriv(r); }},
          {"cycles", "u-closure of the cyclic monoid for k = 2, 3, 4",
           [](Recorder& r, std::size_t) { cycles(r); }},
          {"census3", "submonoid census at k = 3: 699 / 89 / 71", census3},
          {"b0min", "minimal u-closed monoids and the non-minimality constructions", b0min},
          {"product", "u-closure commutes with products of 2-element monoids",
           [](Recorder& r, std::size_t) { product(r); }},
          {"restriction", "invariant gquords commute with restriction to invariant subsets",
           [](Recorder& r, std::size_t) { restriction(r); }},
      };
      return all;
    }

  }  // namespace

  std::vector<std::string> case_ids() {
    std::vector<std::string> ids;
    for (auto const& c : cases()) {
      ids.emplace_back(c.id);
    }
    return ids;
  }

  bool is_case_id(std::string const& id) {
    auto const ids = case_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  }

  CaseResult run_case(std::string const& id, std::size_t threads) {
    for (auto const& c : cases()) {
      if (id == c.id) {
        Recorder r;
        c.body(r, threads);
        return {c.id, c.title, r.ok(), r.take()};
      }
    }
    throw std::out_of_range("unknown case " + id);
  }

}  // namespace gq::cli
