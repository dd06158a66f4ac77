#ifndef GQ_RELATIONS_HPP_
#define GQ_RELATIONS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gq/error.hpp"
#include "gq/monoid.hpp"
#include "gq/op_table.hpp"
#include "gq/ops.hpp"
#include "gq/relation.hpp"
#include "gq/tensor.hpp"

namespace gq {

  //! Default cap on the number of distinct search states of one matrix
  //! search (see partial()).
  inline constexpr std::size_t kDefaultStateBudget = std::size_t(1) << 24;

  // --- preservation -------------------------------------------------------

  //! Rows r_1, ..., r_n of rho with f(r_1, ..., r_n) outside rho, if any.
  std::optional<std::vector<Tuple>> find_violation(OpTable const& f, Relation const& rho);
  //! f preserves rho.
  bool preserves(OpTable const& f, Relation const& rho);

  //! Every axis-parallel line of t lies in rho. Throws ArgumentError unless
  //! t.side() == arity(rho).
  bool models(Relation const& rho, LineTensor const& t);

  // --- the diagonal operator and closures -----------------------------------

  //! The set of diagonals of all m x m matrices whose rows and columns lie in
  //! rho. Rows are chosen from rho one at a time; every column prefix must
  //! stay a prefix of a tuple of rho. Search states (the column prefixes) are
  //! deduplicated per level, so the cost is bounded by the number of distinct
  //! prefix configurations rather than |rho|^m. Throws CapacityError when more
  //! than `budget` states are visited.
  Relation partial(Relation const& rho, std::size_t budget = kDefaultStateBudget);

  //! The same set by trying all |rho|^m row choices; for cross-checking.
  Relation partial_naive(Relation const& rho);

  //! A matrix whose lines lie in rho and whose diagonal is outside rho, if
  //! one exists.
  std::optional<LineTensor> transitivity_witness(Relation const& rho,
                                                 std::size_t budget = kDefaultStateBudget);

  enum class ClosureMode { reflexive, transitive, gquord };

  //! reflexive: add every constant tuple; transitive: iterate
  //! rho <- rho u partial(rho) until stable; gquord: transitive closure of the
  //! reflexive closure.
  Relation closure(Relation const& rho, ClosureMode mode,
                   std::size_t budget = kDefaultStateBudget);

  struct GquordReport {
    bool reflexive  = false;
    bool transitive = false;
    //! Present iff !transitive: an m x m matrix with every line in rho and
    //! its diagonal outside rho.
    std::optional<LineTensor> witness;

    bool is_gquord() const noexcept {
      return reflexive && transitive;
    }
  };

  GquordReport is_gquord(Relation const& rho, std::size_t budget = kDefaultStateBudget);

  //! models(rho, t) implies diagonal(t) in rho. Holds for every
  //! n-dimensional tensor when rho is a generalized quasiorder.
  bool models_tensor_diagonal_check(Relation const& rho, LineTensor const& t);

  // --- constructions --------------------------------------------------------

  //! A partition of the coordinates {0, ..., m-1} into blocks.
  using Partition = std::vector<std::vector<std::size_t>>;

  //! {(a_0, ..., a_{m-1}) | i ~ j implies a_i = a_j}. Throws ArgumentError if
  //! the blocks do not partition {0, ..., m-1}.
  Relation diagonal_relation(Universe universe, std::size_t m, Partition const& blocks);

  //! Pairs (a, b) are encoded as a * k2 + b in the product universe.
  Relation tensor_product_rel(Relation const& rho1, Relation const& rho2);
  Monoid   tensor_product_mon(Monoid const& m1, Monoid const& m2);

  //! Tuples of rho inside B^m, with B re-indexed densely in ascending order.
  //! B must have at least two elements.
  Relation restrict(Relation const& rho, std::span<Element const> b);
  //! Members of M restricted to B. Throws PreconditionError naming a member
  //! that maps some element of B outside B.
  Monoid restrict_mon(Monoid const& m, std::span<Element const> b);
  //! Whether every member of M maps B into B.
  bool is_invariant_subset(Monoid const& m, std::span<Element const> b);

  //! A^{n-m} x rho.
  Relation cylindrify(Relation const& rho, std::size_t n);

  //! {(t(i_1), ..., t(i_r)) | t in rho} for 0-based coordinates idx.
  Relation project(Relation const& rho, std::span<std::size_t const> idx);

  // --- End and Pol ----------------------------------------------------------

  //! All unary maps preserving every member of Q.
  Monoid end_of(RelationSet const& q);
  Monoid end_of(Relation const& rho);

  inline constexpr std::size_t kMaxPolArity    = 3;
  inline constexpr std::size_t kMaxPolUniverse = 5;
  inline constexpr std::size_t kDefaultPolResults = 1000000;

  //! Operations of arity n preserving every member of Q, found by a
  //! backtracking search over the table entries. Each pattern of n tuples of
  //! a relation is a constraint on the m table entries it touches; a partial
  //! table is extended only while every touched constraint still has a
  //! supporting tuple. Throws CapacityError if n > 3, k > 5 or more than
  //! max_results operations exist.
  std::vector<OpTable> pol_arity(RelationSet const& q, std::size_t n,
                                 std::size_t max_results = kDefaultPolResults);
  //! The arity <= nmax part of Pol Q.
  OpSet pol_bounded(RelationSet const& q, std::size_t nmax,
                    std::size_t max_results = kDefaultPolResults);

  // --- invariant relations --------------------------------------------------

  inline constexpr std::size_t kMaxQuordUniverse = 5;

  //! Binary reflexive transitive relations preserved by M, by filtering all
  //! reflexive binary relations. Throws CapacityError if k > 5.
  RelationSet invariant_quords(Monoid const& m);
  //! Equivalence relations preserved by M, by enumerating set partitions.
  RelationSet invariant_congruences(Monoid const& m);

  //! Thrown by invariant_gquords when the lattice exceeds the budget; carries
  //! the relations found so far.
  class BudgetExceeded : public CapacityError {
   public:
    BudgetExceeded(std::string const& what, RelationSet partial)
        : CapacityError(what), _partial(std::move(partial)) {}

    RelationSet const& partial() const noexcept {
      return _partial;
    }

   private:
    RelationSet _partial;
  };

  inline constexpr std::size_t kMaxGquordArity     = 4;
  inline constexpr std::size_t kDefaultLatticeBudget = 100000;

  //! The least M-invariant generalized quasiorder containing rho.
  Relation invariant_gquord_closure(Relation const& rho, Monoid const& m,
                                    std::size_t budget = kDefaultStateBudget);

  //! All m-ary M-invariant generalized quasiorders: the join closure of the
  //! principal ones generated by single tuples, with the least one
  //! (the constant tuples) added. Throws CapacityError if m > 4 and
  //! BudgetExceeded when more than `budget` relations are found.
  RelationSet invariant_gquords(Monoid const& m, std::size_t arity,
                                std::size_t budget = kDefaultLatticeBudget);

}  // namespace gq

#endif  // GQ_RELATIONS_HPP_
