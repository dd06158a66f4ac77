#ifndef GQ_TENSOR_HPP_
#define GQ_TENSOR_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "gq/universe.hpp"

namespace gq {

  //! An n-dimensional m x ... x m array of elements. Entries are stored in
  //! mixed-radix order of the index (i_1, ..., i_n) with radix m, i_1 most
  //! significant; for n = 2 this is row-major.
  class LineTensor {
   public:
    //! Throws ArgumentError unless entries.size() == side^dims.
    LineTensor(std::size_t dims, std::size_t side, std::vector<Element> entries);

    //! The square matrix with the given rows.
    static LineTensor matrix(std::vector<Tuple> const& rows);

    std::size_t dims() const noexcept {
      return _dims;
    }
    std::size_t side() const noexcept {
      return _side;
    }
    std::span<Element const> entries() const noexcept {
      return _entries;
    }

    Element at(std::span<std::size_t const> index) const;

    //! Number of lines parallel to one axis, side^(dims - 1).
    std::size_t lines_per_axis() const noexcept;
    //! The line along `axis` whose other coordinates are the mixed-radix
    //! digits of `which` (in axis order, skipping `axis`).
    Tuple line(std::size_t axis, std::size_t which) const;
    //! (a_{1..1}, ..., a_{m..m})
    Tuple diagonal() const;

    friend bool operator==(LineTensor const&, LineTensor const&) = default;

   private:
    std::size_t          _dims;
    std::size_t          _side;
    std::vector<Element> _entries;
  };

}  // namespace gq

#endif  // GQ_TENSOR_HPP_
