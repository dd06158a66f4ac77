#ifndef GQ_UNIVERSE_HPP_
#define GQ_UNIVERSE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gq {

  //! An element of a universe, always a dense index 0..k-1.
  using Element = std::uint8_t;
  //! A tuple over a universe; relation tuples, rows, function tables.
  using Tuple = std::vector<Element>;
  //! Mixed-radix code of a tuple: code(t) = sum_j t(j) * k^(m-1-j), i.e. the
  //! first coordinate is the most significant digit. Codes order tuples
  //! lexicographically.
  using Code = std::uint32_t;

  inline constexpr std::size_t kMinUniverse        = 2;
  inline constexpr std::size_t kMaxUniverse        = 7;
  //! Universes built by tensor products may go up to 3 * 3.
  inline constexpr std::size_t kMaxProductUniverse = 9;
  inline constexpr std::size_t kMaxRelationArity   = 8;

  //! The finite base set {0, ..., k-1}.
  class Universe {
   public:
    //! Throws ArgumentError if size < 2 and CapacityError if size > 7.
    explicit Universe(std::size_t size);

    //! The universe of pairs (a, b) encoded as a * size(second) + b. The
    //! result may have up to 9 elements.
    static Universe product(Universe const& first, Universe const& second);

    std::size_t size() const noexcept {
      return _size;
    }

    bool contains(std::size_t x) const noexcept {
      return x < _size;
    }

    friend bool operator==(Universe const&, Universe const&) = default;

   private:
    struct Unchecked {};
    Universe(std::size_t size, Unchecked) noexcept : _size(size) {}

    std::size_t _size;
  };

  //! base^exp; throws CapacityError if the result does not fit in 32 bits.
  std::uint64_t checked_power(std::size_t base, std::size_t exp);

  //! Encodes a tuple with radix k. No range checking.
  inline Code encode_tuple(std::size_t k, std::span<Element const> t) noexcept {
    Code c = 0;
    for (Element x : t) {
      c = c * static_cast<Code>(k) + x;
    }
    return c;
  }

  inline void decode_tuple(std::size_t k, Code c, std::span<Element> out) noexcept {
    for (std::size_t j = out.size(); j-- > 0;) {
      out[j] = static_cast<Element>(c % k);
      c /= static_cast<Code>(k);
    }
  }

  inline Tuple decode_tuple(std::size_t k, Code c, std::size_t arity) {
    Tuple t(arity);
    decode_tuple(k, c, t);
    return t;
  }

}  // namespace gq

#endif  // GQ_UNIVERSE_HPP_
