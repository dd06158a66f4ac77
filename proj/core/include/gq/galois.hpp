#ifndef GQ_GALOIS_HPP_
#define GQ_GALOIS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "gq/monoid.hpp"
#include "gq/ops.hpp"
#include "gq/relation.hpp"
#include "gq/relations.hpp"
#include "gq/tensor.hpp"

namespace gq {

  //! Gamma_M: the k-ary relation of the function tables (g(0), ..., g(k-1))
  //! of the members of M. Its codes are exactly the member codes.
  Relation gamma(Monoid const& m);

  struct UclosedReport {
    bool uclosed = false;
    //! Set when some constant map is missing from M.
    std::optional<Element> missing_constant;
    //! Set when Gamma_M is not transitive: a k x k matrix with every row and
    //! column in Gamma_M and its diagonal outside it.
    std::optional<LineTensor> witness;
    //! The same matrix read as a binary operation f(i, j) = a_ij: f lies in
    //! M* while delta f does not lie in M.
    std::optional<OpTable> witness_op;
  };

  //! M is u-closed iff it contains every constant and Gamma_M is a
  //! generalized quasiorder.
  UclosedReport is_uclosed(Monoid const& m);

  struct UclStep {
    //! Unary maps adjoined in this round (before re-closing).
    std::vector<Code> added;
    //! |Gamma_N| after re-closing.
    std::size_t gamma_size = 0;
  };

  struct UclTrace {
    Monoid               start;
    std::vector<UclStep> steps;
    Monoid               result;
  };

  inline constexpr std::size_t kMaxUclUniverse = 6;

  //! The least u-closed monoid containing M. Starting from N = <M u C>, any
  //! transitivity witness of Gamma_N has a diagonal delta f for a binary f in
  //! N*, so it lies in every u-closed monoid containing N; one such diagonal
  //! is adjoined per step and N is re-closed until Gamma_N is a generalized
  //! quasiorder. Throws CapacityError if k > 6.
  UclTrace ucl_trace(Monoid const& m);
  Monoid   ucl(Monoid const& m);

  struct XiReport {
    bool holds = false;
    //! Arities 1..verified_arity were compared.
    std::size_t verified_arity = 0;
    //! Smallest operation of the symmetric difference, if any.
    std::optional<OpTable> counterexample;
    //! Members of (End Q)* outside Pol Q, and vice versa.
    std::vector<OpTable> star_minus_pol;
    std::vector<OpTable> pol_minus_star;
  };

  //! Compares Pol Q with (End Q)* at every arity <= nmax (<= 3).
  XiReport xi_check(RelationSet const& q, std::size_t nmax);

  struct CompletenessReport {
    bool        complete       = false;
    std::size_t verified_arity = 0;
    //! ucl(<trl F u C>), which equals End gQuord(A, F).
    Monoid               monoid;
    std::optional<OpTable> witness{};
    //! Members of M* outside the generated clone, and vice versa.
    std::vector<OpTable> star_minus_clone{};
    std::vector<OpTable> clone_minus_star{};
  };

  //! Bounded-arity evidence for gQuord-completeness of (A, F): compares the
  //! arity <= nmax slices of M* (M = ucl(<trl F u C>)) and of the clone
  //! generated by F u C.
  CompletenessReport gquord_complete_check(OpSet const& f, std::size_t nmax);

}  // namespace gq

#endif  // GQ_GALOIS_HPP_
