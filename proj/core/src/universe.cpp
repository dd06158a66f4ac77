#include "gq/universe.hpp"

#include <limits>
#include <string>

#include "gq/error.hpp"

namespace gq {

  Universe::Universe(std::size_t size) : _size(size) {
    if (size < kMinUniverse) {
      throw ArgumentError("universe size must be at least 2, got " + std::to_string(size));
    }
    if (size > kMaxUniverse) {
      throw CapacityError("universe size " + std::to_string(size) + " exceeds the limit of "
                          + std::to_string(kMaxUniverse));
    }
  }

  Universe Universe::product(Universe const& first, Universe const& second) {
    std::size_t n = first.size() * second.size();
    if (n > kMaxProductUniverse) {
      throw CapacityError("product universe of size " + std::to_string(n)
                          + " exceeds the limit of " + std::to_string(kMaxProductUniverse));
    }
    return Universe(n, Unchecked{});
  }

  std::uint64_t checked_power(std::size_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
      r *= base;
      if (r > std::numeric_limits<Code>::max()) {
        throw CapacityError(std::to_string(base) + "^" + std::to_string(exp)
                            + " is too large");
      }
    }
    return r;
  }

}  // namespace gq
