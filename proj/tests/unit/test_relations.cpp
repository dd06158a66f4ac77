#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gq;
using fixtures::table_of;

namespace {

  Relation random_gquord(std::mt19937& rng, Universe u, std::size_t m, std::size_t seeds) {
    std::vector<Tuple> t;
    for (std::size_t i = 0; i < seeds; ++i) {
      Tuple x(m);
      for (auto& e : x) {
        e = static_cast<Element>(rng() % u.size());
      }
      t.push_back(x);
    }
    return closure(Relation(u, m, t), ClosureMode::gquord);
  }

}  // namespace

TEST(Preserves, Examples) {
  Universe const u3(3);
  EXPECT_FALSE(preserves(preclone_transform(PrecloneOp::delta, fixtures::m3a_f()),
                         fixtures::m3a_rho()));
  EXPECT_TRUE(preserves(OpTable::constant(u3, 1), fixtures::m3a_rho()));
  EXPECT_TRUE(preserves(OpTable::identity(u3), fixtures::r1_rho()));
  auto const v = find_violation(preclone_transform(PrecloneOp::delta, fixtures::m3a_f()),
                                fixtures::m3a_rho());
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, (std::vector<Tuple>{{1, 2}}));
}

TEST(Preserves, MatchesBruteForce) {
  std::mt19937 rng(101);
  for (std::size_t k = 2; k <= 3; ++k) {
    Universe u(k);
    for (int rep = 0; rep < 150; ++rep) {
      std::size_t const m   = 1 + rng() % 3;
      std::size_t const n   = 1 + rng() % 3;
      Relation const    rho = rep % 2 == 0 ? fixtures::random_relation(rng, u, m, 0.4)
                                           : random_gquord(rng, u, m, 2);
      OpTable const     f   = fixtures::random_op(rng, u, n);
      bool const        got = preserves(f, rho);
      ASSERT_EQ(got, oracle::preserves(k, table_of(f), n, oracle::tuples_of(rho)));
      auto const v = find_violation(f, rho);
      ASSERT_EQ(v.has_value(), !got);
      if (v) {
        ASSERT_EQ(v->size(), n);
        for (auto const& r : *v) {
          ASSERT_TRUE(rho.contains(r));
        }
        ASSERT_FALSE(rho.contains(apply_to_tuples(f, *v)));
      }
    }
  }
}

TEST(Models, Examples) {
  EXPECT_TRUE(models(fixtures::m3a_rho(), LineTensor::matrix({{0, 0}, {0, 1}})));
  EXPECT_TRUE(models(fixtures::r1_rho(), LineTensor(3, 3, std::vector<Element>(27, 2))));
  EXPECT_FALSE(models(Relation::diagonal(Universe(3)), LineTensor::matrix({{0, 1}, {0, 1}})));
  EXPECT_THROW(models(fixtures::m3a_rho(), LineTensor(2, 3, std::vector<Element>(9, 0))),
               ArgumentError);
}

TEST(Partial, Examples) {
  Universe const u3(3);
  Relation const single(u3, 3, {{0, 0, 0}});
  EXPECT_EQ(partial(single), single);
  Relation const d = partial(fixtures::m3a_rho());
  EXPECT_TRUE(d.contains(Tuple{0, 2}));
  EXPECT_EQ(oracle::tuples_of(d), oracle::partial(oracle::tuples_of(fixtures::m3a_rho()), 2));
}

TEST(Partial, MatchesBruteForceAndNaive) {
  std::mt19937 rng(202);
  for (std::size_t k = 2; k <= 3; ++k) {
    Universe u(k);
    for (int rep = 0; rep < 80; ++rep) {
      std::size_t const m   = 1 + rng() % 3;
      Relation const    rho = fixtures::random_relation(rng, u, m, 0.2 + 0.1 * (rep % 5));
      auto const        got = oracle::tuples_of(partial(rho));
      ASSERT_EQ(got, oracle::partial(oracle::tuples_of(rho), m));
      ASSERT_EQ(partial_naive(rho), partial(rho));
    }
  }
}

TEST(Partial, BinaryIsRelationalProduct) {
  std::mt19937 rng(303);
  for (std::size_t k = 2; k <= 4; ++k) {
    for (auto const& q : oracle::preorders(std::min<std::size_t>(k, 3))) {
      Relation const rho = oracle::relation_of(std::min<std::size_t>(k, 3), 2, q);
      ASSERT_EQ(oracle::tuples_of(partial(rho)), oracle::compose(q));
    }
    for (int rep = 0; rep < 30; ++rep) {
      Relation const rho = fixtures::random_relation(rng, Universe(k), 2, 0.4);
      auto const     r   = oracle::tuples_of(rho);
      ASSERT_EQ(oracle::tuples_of(partial(rho)), oracle::compose(r));
    }
  }
}

TEST(Partial, InflationaryOnReflexive) {
  std::mt19937 rng(404);
  for (int rep = 0; rep < 50; ++rep) {
    Relation const rho = closure(fixtures::random_relation(rng, Universe(3), 1 + rep % 3, 0.2),
                                 ClosureMode::reflexive);
    ASSERT_TRUE(rho.is_subset_of(partial(rho)));
  }
}

TEST(Closure, Examples) {
  Universe const u3(3);
  EXPECT_EQ(closure(Relation::empty(u3, 2), ClosureMode::reflexive), Relation::diagonal(u3));
  Relation const g = closure(fixtures::m3a_rho(), ClosureMode::gquord);
  Relation const order(u3, 2, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
  EXPECT_EQ(g, order);
  EXPECT_EQ(closure(order, ClosureMode::transitive), order);
}

TEST(Closure, OperatorLaws) {
  std::mt19937 rng(505);
  for (std::size_t k = 2; k <= 3; ++k) {
    Universe u(k);
    for (int rep = 0; rep < 40; ++rep) {
      std::size_t const m = 1 + rng() % 3;
      Relation const    a = fixtures::random_relation(rng, u, m, 0.15);
      Relation const    b = relation_union(a, fixtures::random_relation(rng, u, m, 0.1));
      Relation const    ta = closure(a, ClosureMode::transitive);
      ASSERT_TRUE(a.is_subset_of(ta));
      ASSERT_EQ(closure(ta, ClosureMode::transitive), ta);
      ASSERT_TRUE(ta.is_subset_of(closure(b, ClosureMode::transitive)));
      Relation const ga = closure(a, ClosureMode::gquord);
      ASSERT_TRUE(is_gquord(ga).is_gquord());
      ASSERT_EQ(oracle::tuples_of(ga), oracle::gquord_closure(k, oracle::tuples_of(a), m));
    }
  }
}

TEST(IsGquord, Examples) {
  EXPECT_TRUE(is_gquord(fixtures::r1_rho()).is_gquord());
  auto const rep = is_gquord(fixtures::m3a_rho());
  EXPECT_TRUE(rep.reflexive);
  EXPECT_FALSE(rep.transitive);
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_TRUE(models(fixtures::m3a_rho(), *rep.witness));
  EXPECT_FALSE(fixtures::m3a_rho().contains(rep.witness->diagonal()));
}

TEST(IsGquord, BinaryCoincidesWithQuasiorders) {
  auto const pre = oracle::preorders(3);
  std::set<oracle::TupleSet> const preset(pre.begin(), pre.end());
  for (std::size_t mask = 0; mask < 512; ++mask) {
    oracle::TupleSet s;
    for (std::size_t i = 0; i < 9; ++i) {
      if ((mask >> i) & 1U) {
        s.insert({static_cast<Element>(i / 3), static_cast<Element>(i % 3)});
      }
    }
    auto const rep = is_gquord(oracle::relation_of(3, 2, s));
    ASSERT_EQ(rep.is_gquord(), preset.count(s) > 0);
    ASSERT_EQ(rep.transitive, oracle::is_transitive(s, 2));
    ASSERT_EQ(rep.witness.has_value(), !rep.transitive);
  }
}

TEST(ModelsTensorDiagonalCheck, TensorsOverGquords) {
  std::mt19937   rng(606);
  Relation const rho = fixtures::r1_rho();
  std::size_t    qualifying = 0;
  // Constant blocks plus random perturbations keep many tensors qualifying.
  for (int rep = 0; rep < 20000 && qualifying < 200; ++rep) {
    std::vector<Element> e(27, static_cast<Element>(rng() % 3));
    for (int i = 0; i < 3; ++i) {
      e[rng() % 27] = static_cast<Element>(rng() % 3);
    }
    LineTensor const t(3, 3, e);
    if (models(rho, t)) {
      ++qualifying;
    }
    ASSERT_TRUE(models_tensor_diagonal_check(rho, t));
  }
  EXPECT_GT(qualifying, 0U);
  for (auto const& q : oracle::preorders(3)) {
    Relation const r = oracle::relation_of(3, 2, q);
    for (Code c = 0; c < 81; ++c) {
      Tuple const t = decode_tuple(3, c, 4);
      ASSERT_TRUE(models_tensor_diagonal_check(r, LineTensor(2, 2, t)));
    }
  }
  auto const w = is_gquord(fixtures::m3a_rho()).witness;
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(models_tensor_diagonal_check(fixtures::m3a_rho(), *w));
}

TEST(DiagonalRelation, Examples) {
  Universe const u2(2);
  Universe const u3(3);
  EXPECT_EQ(diagonal_relation(u2, 2, {{0}, {1}}), Relation::full(u2, 2));
  EXPECT_EQ(diagonal_relation(u3, 2, {{0, 1}}), Relation::diagonal(u3));
  EXPECT_THROW(diagonal_relation(u3, 3, {{0, 1}}), ArgumentError);
  EXPECT_THROW(diagonal_relation(u3, 2, {{0, 1}, {1}}), ArgumentError);
  for (Partition const& p : std::vector<Partition>{{{0}, {1}, {2}}, {{0, 2}, {1}}, {{0, 1, 2}}}) {
    Relation const r = diagonal_relation(u3, 3, p);
    EXPECT_TRUE(is_gquord(r).is_gquord());
  }
}

TEST(TensorProduct, Examples) {
  Universe const u2(2);
  Universe const u3(3);
  Universe const u6 = Universe::product(u2, u3);
  EXPECT_EQ(tensor_product_rel(Relation::diagonal(u2), Relation::diagonal(u3)),
            Relation::diagonal(u6));
  EXPECT_EQ(tensor_product_rel(Relation::full(u2, 2), Relation::full(u3, 2)),
            Relation::full(u6, 2));
  EXPECT_THROW(tensor_product_rel(Relation::full(u2, 2), Relation::full(u3, 3)), ArgumentError);
  Monoid const p = tensor_product_mon(full_monoid(u2), trivial_monoid(u3));
  EXPECT_EQ(p.size(), 4U * 4U);
}

TEST(TensorProduct, GquordIffBothFactors) {
  Universe const u2(2);
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<Relation> rels;
    std::size_t const     space = std::size_t(1) << m;
    for (std::size_t mask = 0; mask < (std::size_t(1) << space); ++mask) {
      std::vector<Code> codes;
      for (std::size_t c = 0; c < space; ++c) {
        if ((mask >> c) & 1U) {
          codes.push_back(static_cast<Code>(c));
        }
      }
      if (!codes.empty()) {
        rels.push_back(Relation::from_codes(u2, m, codes));
      }
    }
    std::mt19937 rng(m);
    for (int rep = 0; rep < 300; ++rep) {
      Relation const& a = rels[rng() % rels.size()];
      Relation const& b = rels[rng() % rels.size()];
      Relation const  p = tensor_product_rel(a, b);
      ASSERT_EQ(p.size(), a.size() * b.size());
      ASSERT_EQ(is_gquord(p).is_gquord(), is_gquord(a).is_gquord() && is_gquord(b).is_gquord());
    }
  }
}

TEST(Restrict, Examples) {
  Universe const u3(3);
  Element const  b01[] = {0, 1};
  Element const  b12[] = {1, 2};
  EXPECT_EQ(restrict(Relation::diagonal(u3), b12), Relation::diagonal(Universe(2)));
  EXPECT_EQ(restrict(fixtures::m3a_rho(), b01),
            Relation(Universe(2), 2, {{0, 0}, {1, 1}, {0, 1}}));
  Relation const g = restrict(fixtures::r1_rho(), b12);
  EXPECT_TRUE(is_gquord(g).is_gquord());
  Monoid const m = principal_monoid(OpTable(u3, 1, {0, 0, 1}));
  EXPECT_THROW(restrict_mon(m, b12), PreconditionError);
  EXPECT_FALSE(is_invariant_subset(m, b12));
  EXPECT_FALSE(is_invariant_subset(trivial_monoid(u3), b12));
  std::vector<OpTable> const gens{OpTable(u3, 1, {0, 2, 1})};
  Monoid const               swap = monoid_generate(u3, gens);
  EXPECT_TRUE(is_invariant_subset(swap, b12));
  std::vector<OpTable> const neg{OpTable(Universe(2), 1, {1, 0})};
  EXPECT_EQ(restrict_mon(swap, b12), monoid_generate(Universe(2), neg));
}

TEST(Restrict, GquordsStayGquords) {
  std::mt19937  rng(707);
  Element const b[] = {0, 2};
  for (int rep = 0; rep < 40; ++rep) {
    Relation const g = random_gquord(rng, Universe(3), 1 + rep % 3, 2);
    ASSERT_TRUE(is_gquord(restrict(g, b)).is_gquord());
  }
}

TEST(Cylindrify, Examples) {
  Universe const u2(2);
  EXPECT_EQ(cylindrify(fixtures::m3a_rho(), 2), fixtures::m3a_rho());
  Relation const c = cylindrify(Relation::diagonal(u2), 3);
  EXPECT_EQ(c.size(), 4U);
  EXPECT_TRUE(c.contains(Tuple{1, 0, 0}));
  EXPECT_THROW(cylindrify(Relation::diagonal(u2), 1), ArgumentError);
  std::mt19937 rng(808);
  for (int rep = 0; rep < 40; ++rep) {
    Relation const r = fixtures::random_relation(rng, Universe(3), 2, 0.5);
    ASSERT_EQ(is_gquord(cylindrify(r, 3)).is_gquord(), is_gquord(r).is_gquord());
  }
}

TEST(Project, Examples) {
  std::size_t const idx23[] = {1, 2};
  Relation const    pr      = project(fixtures::r1_rho(), idx23);
  EXPECT_EQ(pr, fixtures::m3a_rho());
  EXPECT_FALSE(is_gquord(pr).transitive);
  std::size_t const all[] = {0, 1, 2};
  EXPECT_EQ(project(fixtures::r1_rho(), all), fixtures::r1_rho());
  std::size_t const bad[] = {3};
  EXPECT_THROW(project(fixtures::r1_rho(), bad), ArgumentError);
  EXPECT_THROW(project(fixtures::r1_rho(), std::span<std::size_t const>{}), ArgumentError);
}

TEST(EndOf, Examples) {
  Universe const u3(3);
  EXPECT_EQ(end_of(fixtures::tournament(5)), trivial_monoid(Universe(5)));
  EXPECT_EQ(end_of(RelationSet(u3)), full_monoid(u3));
  EXPECT_EQ(end_of(Relation::diagonal(u3)), full_monoid(u3));
}

TEST(EndOf, MatchesBruteForce) {
  std::mt19937 rng(909);
  for (int rep = 0; rep < 40; ++rep) {
    std::size_t const m   = 1 + rng() % 3;
    Relation const    rho = fixtures::random_relation(rng, Universe(3), m, 0.4);
    ASSERT_EQ(oracle::members(end_of(rho)), oracle::end_of(3, {oracle::tuples_of(rho)}, m));
  }
}

TEST(Pol, Examples) {
  Universe const u3(3);
  EXPECT_EQ(pol_arity(RelationSet(u3), 1).size(), 27U);
  Relation const rho = fixtures::m3a_rho();
  OpTable const  f   = fixtures::m3a_f();
  bool const     brute = oracle::preserves(3, table_of(f), 2, oracle::tuples_of(rho));
  EXPECT_FALSE(brute);
  auto const pol2 = pol_arity(RelationSet(u3, {rho}), 2);
  EXPECT_EQ(std::find(pol2.begin(), pol2.end(), f) != pol2.end(), brute);
}

TEST(Pol, MatchesBruteForce) {
  std::mt19937 rng(1001);
  for (std::size_t k = 2; k <= 3; ++k) {
    Universe u(k);
    for (int rep = 0; rep < 12; ++rep) {
      std::size_t const m   = 1 + rng() % 2;
      Relation const    rho = fixtures::random_relation(rng, u, m, 0.5);
      Relation const    sig = fixtures::random_relation(rng, u, 2, 0.6);
      RelationSet const q(u, {rho, sig});
      for (std::size_t n = 1; n <= 2; ++n) {
        auto const got   = pol_arity(q, n);
        auto const brute = oracle::pol(k, {{oracle::tuples_of(rho), m}, {oracle::tuples_of(sig), 2}}, n);
        std::vector<oracle::Table> g;
        for (auto const& f : got) {
          g.push_back(table_of(f));
        }
        std::sort(g.begin(), g.end());
        ASSERT_EQ(g, brute);
      }
      ASSERT_EQ(pol_bounded(q, 1).arity(1).size(), end_of(q).size());
    }
  }
}

TEST(InvariantQuords, Examples) {
  Universe const u3(3);
  Monoid const   id = monoid_generate(u3, {});
  EXPECT_EQ(invariant_quords(id).size(), oracle::preorders(3).size());
  EXPECT_EQ(invariant_quords(id).size(), 29U);
  EXPECT_EQ(invariant_congruences(id).size(), oracle::equivalences(3).size());
  EXPECT_EQ(invariant_congruences(id).size(), 5U);
  RelationSet const full = invariant_quords(full_monoid(u3));
  EXPECT_EQ(full, RelationSet(u3, {Relation::diagonal(u3), Relation::full(u3, 2)}));
  EXPECT_THROW(invariant_quords(monoid_generate(Universe(6), {})), CapacityError);
}

TEST(InvariantQuords, MatchesBruteForceOverCensus) {
  auto const pre = oracle::preorders(3);
  auto const eq  = oracle::equivalences(3);
  for (auto const& m : enumerate_submonoids(3)) {
    auto const       mem = oracle::members(m);
    std::size_t      nq  = 0;
    std::size_t      ne  = 0;
    for (auto const& q : pre) {
      nq += oracle::invariant(3, mem, q) ? 1 : 0;
    }
    for (auto const& q : eq) {
      ne += oracle::invariant(3, mem, q) ? 1 : 0;
    }
    ASSERT_EQ(invariant_quords(m).size(), nq);
    ASSERT_EQ(invariant_congruences(m).size(), ne);
  }
}

TEST(InvariantGquords, BinaryEqualsQuasiorders) {
  std::mt19937 rng(1101);
  for (int rep = 0; rep < 25; ++rep) {
    Monoid const m = fixtures::random_monoid(rng, Universe(3));
    ASSERT_EQ(invariant_gquords(m, 2), invariant_quords(m));
  }
}

TEST(InvariantGquords, MatchesBruteForceAtK2) {
  for (auto const& m : enumerate_submonoids(2)) {
    for (std::size_t arity = 1; arity <= 3; ++arity) {
      auto const                 brute = oracle::invariant_gquords(2, oracle::members(m), arity);
      std::set<oracle::TupleSet> expect(brute.begin(), brute.end());
      std::set<oracle::TupleSet> got;
      for (auto const& r : invariant_gquords(m, arity)) {
        got.insert(oracle::tuples_of(r));
      }
      ASSERT_EQ(got, expect);
    }
  }
}

TEST(InvariantGquords, FullMonoidGivesDiagonalRelations) {
  Universe const         u2(2);
  std::vector<Partition> parts{{{0}, {1}, {2}}, {{0, 1}, {2}}, {{0, 2}, {1}}, {{1, 2}, {0}},
                               {{0, 1, 2}}};
  std::vector<Relation>  expect;
  for (auto const& p : parts) {
    expect.push_back(diagonal_relation(u2, 3, p));
  }
  EXPECT_EQ(invariant_gquords(full_monoid(u2), 3), RelationSet(u2, expect));
}

TEST(InvariantGquords, TernaryExampleIsFound) {
  Monoid const      e = end_of(fixtures::r1_rho());
  RelationSet const g = invariant_gquords(e, 3);
  EXPECT_TRUE(g.contains(fixtures::r1_rho()));
}

TEST(InvariantGquords, BudgetCarriesPartialResult) {
  try {
    invariant_gquords(monoid_generate(Universe(3), {}), 3, 10);
    FAIL() << "expected the budget to be exceeded";
  } catch (BudgetExceeded const& e) {
    EXPECT_GE(e.partial().size(), 1U);
  }
}

TEST(InvariantGquordClosure, Examples) {
  Universe const u3(3);
  Monoid const   id = monoid_generate(u3, {});
  Relation const a  = fixtures::m3a_rho();
  EXPECT_EQ(invariant_gquord_closure(a, id), closure(a, ClosureMode::gquord));
  Relation const r1 = fixtures::r1_rho();
  EXPECT_EQ(invariant_gquord_closure(r1, end_of(r1)), r1);
  Relation const edge(u3, 2, {{1, 2}});
  Relation const got = invariant_gquord_closure(edge, trivial_monoid(u3));
  EXPECT_EQ(got, relation_union(edge, Relation::diagonal(u3)));
}

TEST(InvariantGquordClosure, LeastInvariantGquordAbove) {
  std::mt19937 rng(1201);
  auto const   pre = oracle::preorders(3);
  for (int rep = 0; rep < 40; ++rep) {
    Monoid const   m   = fixtures::random_monoid(rng, Universe(3));
    Relation const rho = fixtures::random_relation(rng, Universe(3), 2, 0.15);
    auto const     mem = oracle::members(m);
    auto const     r   = oracle::tuples_of(rho);
    // Oracle: intersection of all invariant preorders containing rho.
    oracle::TupleSet best;
    bool             first = true;
    for (auto const& q : pre) {
      if (!std::includes(q.begin(), q.end(), r.begin(), r.end()) || !oracle::invariant(3, mem, q)) {
        continue;
      }
      if (first) {
        best  = q;
        first = false;
      } else {
        oracle::TupleSet x;
        std::set_intersection(best.begin(), best.end(), q.begin(), q.end(),
                              std::inserter(x, x.end()));
        best = x;
      }
    }
    ASSERT_EQ(oracle::tuples_of(invariant_gquord_closure(rho, m)), best);
  }
}

TEST(Gquords, PreservationDecidedByTranslations) {
  std::mt19937 rng(1301);
  for (std::size_t k = 2; k <= 3; ++k) {
    Universe u(k);
    for (int rep = 0; rep < 6; ++rep) {
      Relation const rho = random_gquord(rng, u, 2 + rep % 2, 2);
      auto const     r   = oracle::tuples_of(rho);
      auto check = [&](OpTable const& f) {
        bool by_translations = true;
        for (auto const& t : oracle::translations(k, table_of(f), f.arity())) {
          by_translations = by_translations && oracle::preserves(k, t, 1, r);
        }
        return preserves(f, rho) == by_translations;
      };
      std::size_t const size = k == 2 ? 16 : 19683;
      for (std::size_t c = 0; c < size; ++c) {
        ASSERT_TRUE(check(OpTable(u, 2, decode_tuple(k, static_cast<Code>(c), k * k))));
      }
      for (int s = 0; s < 300; ++s) {
        ASSERT_TRUE(check(fixtures::random_op(rng, u, 3)));
      }
    }
  }
}
