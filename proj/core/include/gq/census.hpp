#ifndef GQ_CENSUS_HPP_
#define GQ_CENSUS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "gq/monoid.hpp"
#include "gq/op_table.hpp"

namespace gq {

  inline constexpr std::size_t kMaxCensusUniverse = 3;

  //! Every submonoid of A^A (sharing the identity), in canonical order.
  //! Found breadth first: each known monoid is extended by one missing map
  //! and re-closed. Throws CapacityError if k > 3.
  std::vector<Monoid> enumerate_submonoids(std::size_t k, std::size_t threads = 1);

  struct CensusRecord {
    Monoid monoid;
    bool   uclosed            = false;
    //! M = End Quord M.
    bool end_quord_closed   = false;
    bool contains_constants = false;
    //! u-closed and no u-closed monoid lies strictly between T and M.
    bool minimal_uclosed = false;
  };

  //! Classifies every submonoid of A^A; the order matches
  //! enumerate_submonoids.
  std::vector<CensusRecord> census(std::size_t k, std::size_t threads = 1);

  struct CensusCounts {
    std::size_t total            = 0;
    std::size_t uclosed          = 0;
    std::size_t end_quord_closed = 0;

    friend bool operator==(CensusCounts const&, CensusCounts const&) = default;
  };

  CensusCounts census_counts(std::vector<CensusRecord> const& records);
  CensusCounts census_counts(std::size_t k, std::size_t threads = 1);

  enum class UnaryType { trivial, I, II, III, IIprime, IIIprime, other };

  char const* to_string(UnaryType t) noexcept;

  struct UnaryTypeTag {
    //! The first matching tag in the order trivial, I, II, III, II', III',
    //! other.
    UnaryType tag = UnaryType::other;
    //! Types II' and III' also hold for many maps of types II and III.
    bool iiprime  = false;
    bool iiiprime = false;
    std::size_t              fixed_points = 0;
    //! Cycle lengths of the permutation part (the maps restricted to their
    //! eventual image), ascending.
    std::vector<std::size_t> cycle_lengths;
    std::size_t              image_size = 0;
  };

  //! Type of a unary map f on k elements:
  //!   trivial  f is the identity or a constant
  //!   I        f^2 = f
  //!   II       f^2 is a constant v with at least three preimages of v
  //!   III      f^p = id for a prime p, with at least two p-cycles
  //!   II'      f^2 is a constant and k >= 4
  //!   III'     f^p = id for a prime p with at least two fixed points, or III
  UnaryTypeTag classify_unary(OpTable const& f);

  //! M_f = <f> u C.
  Monoid principal_monoid(OpTable const& f);
  //! The full cycle x -> x + 1 mod k.
  OpTable cycle_map(Universe universe);

  struct MinimalUclosedResult {
    //! Minimal u-closed monoids above T from the census (k = 3 only).
    std::optional<std::vector<Monoid>> census_route;
    //! M_f for every nontrivial f of type I, II' or III'.
    std::vector<Monoid> classification_route;
    //! Whether every classification-route monoid is u-closed.
    bool all_uclosed = false;
    //! Whether both routes agree (true when there is no census route).
    bool routes_agree = false;
  };

  //! Throws CapacityError unless k is 3 or 4.
  MinimalUclosedResult minimal_uclosed(std::size_t k, std::size_t threads = 1);

  struct CycleUclSize {
    std::size_t k        = 0;
    std::size_t computed = 0;
    //! The stated formula: sum over prime powers p^m || k of
    //! p^(p + p^2 + ... + p^m).
    std::size_t formula = 0;
    //! The product of the same terms.
    std::size_t formula_product = 0;
    //! ucl(M_gamma) = End Con M_gamma.
    bool end_con_agrees = false;
  };

  //! |ucl(M_gamma_k)| next to the formula. k <= 4 unless allow_large, which
  //! permits k = 5 and 6.
  CycleUclSize cycle_ucl_size(std::size_t k, bool allow_large = false);

  struct NonMinimalityCheck {
    //! h_i lies in B_i*, where B_0 = M_f and B_i = M_{g_{i-1}}.
    std::vector<bool> h_in_star;
    //! g_i = delta h_i.
    std::vector<OpTable> diagonals;
    //! Every g_i lies in ucl(M_f).
    bool diagonals_in_ucl = false;
    //! Type of the last diagonal g.
    UnaryTypeTag last_type;
    //! M_g is u-closed and strictly inside ucl(M_f).
    bool last_monoid_uclosed = false;
    bool strictly_inside     = false;

    //! The replay shows that ucl(M_f) is not minimal u-closed.
    bool shows_nonminimal() const noexcept;
  };

  //! Replays the argument that ucl(M_f) is not minimal: each h_i is a binary
  //! operation in B_i*, so its diagonal g_i lies in ucl(M_f); the last
  //! diagonal should be of type I, II' or III', making M_g a smaller
  //! u-closed monoid.
  NonMinimalityCheck check_nonminimality(OpTable const& f, std::vector<OpTable> const& hs);

}  // namespace gq

#endif  // GQ_CENSUS_HPP_
