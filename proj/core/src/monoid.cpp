#include "gq/monoid.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "gq/error.hpp"

namespace gq {

  UnaryMap decode_unary(std::size_t k, Code c) noexcept {
    UnaryMap f{};
    decode_tuple(k, c, std::span<Element>(f.data(), k));
    return f;
  }

  Code encode_unary(std::size_t k, UnaryMap const& f) noexcept {
    return encode_tuple(k, std::span<Element const>(f.data(), k));
  }

  Code unary_code(OpTable const& f) {
    if (f.arity() != 1) {
      throw ArgumentError("expected a unary operation, got arity " + std::to_string(f.arity()));
    }
    return encode_tuple(f.universe().size(), f.table());
  }

  OpTable unary_from_code(Universe universe, Code c) {
    return OpTable(universe, 1, decode_tuple(universe.size(), c, universe.size()));
  }

  Code compose_codes(std::size_t k, Code f, Code g) noexcept {
    UnaryMap ff = decode_unary(k, f);
    UnaryMap gg = decode_unary(k, g);
    UnaryMap h{};
    for (std::size_t x = 0; x < k; ++x) {
      h[x] = ff[gg[x]];
    }
    return encode_unary(k, h);
  }

  Code identity_code(std::size_t k) noexcept {
    UnaryMap f{};
    for (std::size_t x = 0; x < k; ++x) {
      f[x] = static_cast<Element>(x);
    }
    return encode_unary(k, f);
  }

  Code constant_code(std::size_t k, Element a) noexcept {
    UnaryMap f{};
    for (std::size_t x = 0; x < k; ++x) {
      f[x] = a;
    }
    return encode_unary(k, f);
  }

  Monoid::Monoid(Universe universe, std::vector<Code> codes, detail::TrustedClosure)
      : _universe(universe), _codes(std::move(codes)) {
    std::sort(_codes.begin(), _codes.end());
    _codes.erase(std::unique(_codes.begin(), _codes.end()), _codes.end());
  }

  Monoid Monoid::from_members(Universe universe, std::vector<OpTable> const& members) {
    std::vector<Code> codes;
    codes.reserve(members.size());
    for (auto const& f : members) {
      if (f.universe() != universe) {
        throw ArgumentError("monoid member over a different universe");
      }
      codes.push_back(unary_code(f));
    }
    Monoid m(universe, std::move(codes), detail::TrustedClosure{});
    std::size_t const k = universe.size();
    if (!m.contains_code(identity_code(k))) {
      throw PreconditionError("monoid does not contain the identity");
    }
    for (Code f : m._codes) {
      for (Code g : m._codes) {
        if (!m.contains_code(compose_codes(k, f, g))) {
          throw PreconditionError("member set is not closed under composition");
        }
      }
    }
    return m;
  }

  std::vector<OpTable> Monoid::members() const {
    std::vector<OpTable> out;
    out.reserve(_codes.size());
    for (Code c : _codes) {
      out.push_back(unary_from_code(_universe, c));
    }
    return out;
  }

  bool Monoid::contains_code(Code c) const noexcept {
    return std::binary_search(_codes.begin(), _codes.end(), c);
  }

  bool Monoid::contains(OpTable const& f) const noexcept {
    if (f.universe() != _universe || f.arity() != 1) {
      return false;
    }
    return contains_code(encode_tuple(_universe.size(), f.table()));
  }

  bool Monoid::contains_constants() const noexcept {
    for (std::size_t a = 0; a < _universe.size(); ++a) {
      if (!contains_code(constant_code(_universe.size(), static_cast<Element>(a)))) {
        return false;
      }
    }
    return true;
  }

  bool Monoid::is_subset_of(Monoid const& other) const noexcept {
    return _universe == other._universe
           && std::includes(
               other._codes.begin(), other._codes.end(), _codes.begin(), _codes.end());
  }

  std::strong_ordering operator<=>(Monoid const& x, Monoid const& y) noexcept {
    if (auto c = x._universe.size() <=> y._universe.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        x._codes.begin(), x._codes.end(), y._codes.begin(), y._codes.end());
  }

  Monoid monoid_generate_codes(Universe universe, std::span<Code const> gens) {
    std::size_t const        k = universe.size();
    std::vector<UnaryMap>    g;
    std::unordered_set<Code> seen;
    std::vector<Code>        out;
    std::deque<Code>         queue;
    for (Code c : gens) {
      g.push_back(decode_unary(k, c));
    }
    Code id = identity_code(k);
    seen.insert(id);
    out.push_back(id);
    queue.push_back(id);
    // Every product g_1 ... g_r is reached by left multiplication from id.
    while (!queue.empty()) {
      UnaryMap x = decode_unary(k, queue.front());
      queue.pop_front();
      for (auto const& gg : g) {
        UnaryMap y{};
        for (std::size_t i = 0; i < k; ++i) {
          y[i] = gg[x[i]];
        }
        Code c = encode_unary(k, y);
        if (seen.insert(c).second) {
          out.push_back(c);
          queue.push_back(c);
        }
      }
    }
    return Monoid(universe, std::move(out), detail::TrustedClosure{});
  }

  Monoid monoid_generate(Universe universe, std::span<OpTable const> gens) {
    std::vector<Code> codes;
    codes.reserve(gens.size());
    for (auto const& f : gens) {
      if (f.universe() != universe) {
        throw ArgumentError("generator over a different universe");
      }
      codes.push_back(unary_code(f));
    }
    return monoid_generate_codes(universe, codes);
  }

  Monoid full_monoid(Universe universe) {
    std::size_t const k = universe.size();
    std::size_t const n = checked_power(k, k);
    std::vector<Code> codes(n);
    for (std::size_t c = 0; c < n; ++c) {
      codes[c] = static_cast<Code>(c);
    }
    return Monoid(universe, std::move(codes), detail::TrustedClosure{});
  }

  Monoid trivial_monoid(Universe universe) {
    std::size_t const k = universe.size();
    std::vector<Code> codes{identity_code(k)};
    for (std::size_t a = 0; a < k; ++a) {
      codes.push_back(constant_code(k, static_cast<Element>(a)));
    }
    return Monoid(universe, std::move(codes), detail::TrustedClosure{});
  }

  Monoid monoid_join(Monoid const& m, std::span<Code const> extra) {
    std::vector<Code> gens(m.codes().begin(), m.codes().end());
    gens.insert(gens.end(), extra.begin(), extra.end());
    return monoid_generate_codes(m.universe(), gens);
  }

  Monoid monoid_intersection(Monoid const& x, Monoid const& y) {
    if (x.universe() != y.universe()) {
      throw ArgumentError("intersection of monoids over different universes");
    }
    std::vector<Code> codes;
    std::set_intersection(x.codes().begin(), x.codes().end(), y.codes().begin(),
                          y.codes().end(), std::back_inserter(codes));
    return Monoid(x.universe(), std::move(codes), detail::TrustedClosure{});
  }

}  // namespace gq
