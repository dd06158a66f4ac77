#ifndef GQ_MONOID_HPP_
#define GQ_MONOID_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "gq/op_table.hpp"
#include "gq/universe.hpp"

namespace gq {

  //! A unary map in decoded form; only the first k entries are meaningful.
  using UnaryMap = std::array<Element, kMaxProductUniverse>;

  //! The code of a unary table (its function table read as a k-tuple).
  Code     unary_code(OpTable const& f);
  UnaryMap decode_unary(std::size_t k, Code c) noexcept;
  Code     encode_unary(std::size_t k, UnaryMap const& f) noexcept;
  OpTable  unary_from_code(Universe universe, Code c);
  //! Code of the composition x -> f(g(x)).
  Code compose_codes(std::size_t k, Code f, Code g) noexcept;
  Code identity_code(std::size_t k) noexcept;
  Code constant_code(std::size_t k, Element a) noexcept;

  namespace detail {
    //! Passkey for constructing a Monoid from codes already known to be
    //! closed under composition and to contain the identity.
    struct TrustedClosure {
      explicit TrustedClosure() = default;
    };
  }  // namespace detail

  //! A submonoid of A^A. Members are stored as sorted unary codes, which is
  //! the lexicographic order of their tables; the code of a member is also
  //! the code of its row in Gamma_M.
  class Monoid {
   public:
    //! Deduplicates and checks that the members are unary over `universe`,
    //! contain the identity and are closed under composition.
    static Monoid from_members(Universe universe, std::vector<OpTable> const& members);

    Monoid(Universe universe, std::vector<Code> codes, detail::TrustedClosure);

    Universe const& universe() const noexcept {
      return _universe;
    }
    std::size_t size() const noexcept {
      return _codes.size();
    }
    std::span<Code const> codes() const noexcept {
      return _codes;
    }

    std::vector<OpTable> members() const;
    OpTable              member(std::size_t i) const {
      return unary_from_code(_universe, _codes[i]);
    }

    bool contains_code(Code c) const noexcept;
    bool contains(OpTable const& f) const noexcept;
    bool contains_constants() const noexcept;
    bool is_subset_of(Monoid const& other) const noexcept;

    friend bool operator==(Monoid const&, Monoid const&) = default;
    friend std::strong_ordering operator<=>(Monoid const& x, Monoid const& y) noexcept;

   private:
    Universe          _universe;
    std::vector<Code> _codes;
  };

  //! The least composition-closed set containing gens and id_A.
  Monoid monoid_generate(Universe universe, std::span<OpTable const> gens);
  //! As above from unary codes.
  Monoid monoid_generate_codes(Universe universe, std::span<Code const> gens);

  //! A^A.
  Monoid full_monoid(Universe universe);
  //! T = {id_A} u C.
  Monoid trivial_monoid(Universe universe);
  //! <M u extra>.
  Monoid monoid_join(Monoid const& m, std::span<Code const> extra);
  Monoid monoid_intersection(Monoid const& x, Monoid const& y);

}  // namespace gq

#endif  // GQ_MONOID_HPP_
