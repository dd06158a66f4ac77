#include "gq/tensor.hpp"

#include <string>

#include "gq/error.hpp"

namespace gq {

  LineTensor::LineTensor(std::size_t dims, std::size_t side, std::vector<Element> entries)
      : _dims(dims), _side(side), _entries(std::move(entries)) {
    if (dims == 0 || side == 0) {
      throw ArgumentError("tensor dimensions must be positive");
    }
    std::uint64_t n = checked_power(side, dims);
    if (_entries.size() != n) {
      throw ArgumentError("tensor has " + std::to_string(_entries.size()) + " entries, expected "
                          + std::to_string(n));
    }
  }

  LineTensor LineTensor::matrix(std::vector<Tuple> const& rows) {
    std::size_t const    m = rows.size();
    std::vector<Element> entries;
    entries.reserve(m * m);
    for (auto const& r : rows) {
      if (r.size() != m) {
        throw ArgumentError("matrix rows must have length equal to the number of rows");
      }
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return LineTensor(2, m, std::move(entries));
  }

  Element LineTensor::at(std::span<std::size_t const> index) const {
    if (index.size() != _dims) {
      throw ArgumentError("tensor index has the wrong number of coordinates");
    }
    std::size_t c = 0;
    for (std::size_t i : index) {
      if (i >= _side) {
        throw ArgumentError("tensor index out of range");
      }
      c = c * _side + i;
    }
    return _entries[c];
  }

  std::size_t LineTensor::lines_per_axis() const noexcept {
    std::size_t n = 1;
    for (std::size_t d = 1; d < _dims; ++d) {
      n *= _side;
    }
    return n;
  }

  Tuple LineTensor::line(std::size_t axis, std::size_t which) const {
    if (axis >= _dims || which >= lines_per_axis()) {
      throw ArgumentError("no such tensor line");
    }
    // Split `which` around the axis position: digits before the axis are the
    // high part, digits after it the low part.
    std::size_t low_span = 1;
    for (std::size_t d = axis + 1; d < _dims; ++d) {
      low_span *= _side;
    }
    std::size_t const high   = which / low_span;
    std::size_t const low    = which % low_span;
    std::size_t const base   = high * low_span * _side + low;
    Tuple             out(_side);
    for (std::size_t i = 0; i < _side; ++i) {
      out[i] = _entries[base + i * low_span];
    }
    return out;
  }

  Tuple LineTensor::diagonal() const {
    std::size_t step = 0;
    for (std::size_t d = 0; d < _dims; ++d) {
      step = step * _side + 1;
    }
    Tuple out(_side);
    for (std::size_t i = 0; i < _side; ++i) {
      out[i] = _entries[i * step];
    }
    return out;
  }

}  // namespace gq
