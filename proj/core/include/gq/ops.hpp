#ifndef GQ_OPS_HPP_
#define GQ_OPS_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "gq/monoid.hpp"
#include "gq/op_table.hpp"

namespace gq {

  //! A set of operations over one universe, grouped by arity. Each arity's
  //! slice is ordered by table.
  class OpSet {
   public:
    explicit OpSet(Universe universe) : _universe(universe) {}

    Universe const& universe() const noexcept {
      return _universe;
    }

    //! Returns false if already present; throws ArgumentError on a universe
    //! mismatch.
    bool insert(OpTable f);
    bool contains(OpTable const& f) const;

    //! The n-ary slice (empty if there is none).
    std::set<OpTable> const& arity(std::size_t n) const;
    //! Arities with at least one member, ascending.
    std::vector<std::size_t> arities() const;
    std::size_t              size() const noexcept;
    //! All members, by arity then table.
    std::vector<OpTable> all() const;

    friend bool operator==(OpSet const&, OpSet const&) = default;

   private:
    Universe                                _universe;
    std::map<std::size_t, std::set<OpTable>> _by_arity;
  };

  enum class PrecloneOp { zeta, tau, nabla, delta };

  //! zeta: (zeta f)(x_1, ..., x_n) = f(x_2, ..., x_n, x_1)
  //! tau:  swaps the first two arguments
  //! nabla: adds a fictitious first argument
  //! delta: identifies the first two arguments
  //! For unary f, zeta, tau and delta return f.
  OpTable preclone_transform(PrecloneOp kind, OpTable const& f);

  //! (f o g)(x_1, ..., x_{m+n-1}) = f(g(x_1, ..., x_m), x_{m+1}, ..., x_{m+n-1})
  OpTable circ(OpTable const& f, OpTable const& g);

  //! x -> f(g_1(x), ..., g_n(x)).
  OpTable compose_with_unaries(OpTable const& f, std::span<OpTable const> gs);

  //! Codes of the translations of f (rows of the unfolded table along every
  //! axis), sorted and deduplicated. For unary f this is {f}.
  std::vector<Code>    translation_codes(OpTable const& f);
  std::vector<OpTable> translations(OpTable const& f);

  //! The operation conjugated by a permutation s of the universe:
  //! (s f s^-1)(s x_1, ..., s x_n) = s f(x_1, ..., x_n).
  OpTable relabel(OpTable const& f, std::span<Element const> s);

  //! trl(f) is a subset of M.
  bool in_star(OpTable const& f, Monoid const& m);

  inline constexpr std::size_t kMaxStarArity     = 4;
  inline constexpr std::size_t kMaxStarTableSize = 4096;

  //! Calls visit(table) for every n-ary f in M*, in ascending table order,
  //! until visit returns false. The search fills the n-dimensional tensor
  //! entry by entry and keeps every axis-parallel line a prefix of a tuple in
  //! Gamma_M. Throws CapacityError if n > 4 or k^n > 4096.
  void for_each_star_member(Monoid const&                                  m,
                            std::size_t                                    n,
                            std::function<bool(std::span<Element const>)> const& visit);

  //! The n-ary slice of M*. Throws CapacityError when more than max_results
  //! members exist (0 means no limit).
  std::vector<OpTable> star_members(Monoid const& m, std::size_t n, std::size_t max_results = 0);
  std::size_t          count_star_members(Monoid const& m, std::size_t n);

  inline constexpr std::size_t kMaxCloneArity  = 4;
  inline constexpr std::size_t kDefaultCloneBudget = 200000;

  //! A lower approximation of the arity <= nmax part of the clone generated
  //! by F: the least set containing F and all projections of arity <= nmax
  //! that is closed under zeta, tau, delta, nabla and circ as long as the
  //! result has arity <= nmax. Compositions whose intermediate arity would
  //! exceed nmax are missed. Throws ArgumentError if F has a member of arity
  //! > nmax and CapacityError if nmax > 4 or more than `budget` operations
  //! are produced.
  OpSet clone_generate_bounded(OpSet const& f, std::size_t nmax,
                               std::size_t budget = kDefaultCloneBudget);

}  // namespace gq

#endif  // GQ_OPS_HPP_
