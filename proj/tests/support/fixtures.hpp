#ifndef GQ_TESTS_FIXTURES_HPP_
#define GQ_TESTS_FIXTURES_HPP_

#include <random>
#include <string>
#include <vector>

#include "gq/gq.hpp"

namespace fixtures {

  using namespace gq;

  inline Relation m3a_rho() {
    return Relation(Universe(3), 2, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}});
  }

  //! Rows x = 0, 1, 2 of the binary table: 001 / 001 / 112.
  inline OpTable m3a_f() {
    return OpTable(Universe(3), 2, {0, 0, 1, 0, 0, 1, 1, 1, 2});
  }

  inline Relation r1_rho() {
    return Relation(Universe(3), 3, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {2, 0, 1}, {1, 1, 2}});
  }

  //! {(i, j) | j <= i + 1, j != i - 1} on n points.
  inline Relation tournament(std::size_t n) {
    std::vector<Tuple> t;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j <= i + 1 && j + 1 != i) {
          t.push_back({static_cast<Element>(i), static_cast<Element>(j)});
        }
      }
    }
    return Relation(Universe(n), 2, t);
  }

  inline OpTable random_op(std::mt19937& rng, Universe u, std::size_t n) {
    std::vector<Element> t(static_cast<std::size_t>(checked_power(u.size(), n)));
    for (auto& x : t) {
      x = static_cast<Element>(rng() % u.size());
    }
    return OpTable(u, n, std::move(t));
  }

  //! Generated by 0..max_gens random unary maps.
  inline Monoid random_monoid(std::mt19937& rng, Universe u, std::size_t max_gens = 3) {
    std::vector<OpTable> gens;
    std::size_t const    count = rng() % (max_gens + 1);
    for (std::size_t i = 0; i < count; ++i) {
      gens.push_back(random_op(rng, u, 1));
    }
    return monoid_generate(u, gens);
  }

  inline Relation random_relation(std::mt19937& rng, Universe u, std::size_t m, double density) {
    std::size_t const  space = static_cast<std::size_t>(checked_power(u.size(), m));
    std::vector<Code>  codes;
    std::bernoulli_distribution coin(density);
    for (std::size_t c = 0; c < space; ++c) {
      if (coin(rng)) {
        codes.push_back(static_cast<Code>(c));
      }
    }
    return Relation::from_codes(u, m, std::move(codes));
  }

  inline std::vector<Element> table_of(OpTable const& f) {
    return {f.table().begin(), f.table().end()};
  }

  inline std::string data_path(std::string const& name) {
    return std::string(GQ_TEST_DATA_DIR) + "/" + name;
  }

}  // namespace fixtures

#endif  // GQ_TESTS_FIXTURES_HPP_
