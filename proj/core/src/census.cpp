#include "gq/census.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "gq/error.hpp"
#include "gq/galois.hpp"
#include "gq/ops.hpp"
#include "gq/parallel.hpp"
#include "gq/relations.hpp"

namespace gq {

  std::vector<Monoid> enumerate_submonoids(std::size_t k, std::size_t /*threads*/) {
    if (k > kMaxCensusUniverse) {
      throw CapacityError("submonoid enumeration supports k <= "
                          + std::to_string(kMaxCensusUniverse));
    }
    Universe const    u(k);
    std::size_t const n = checked_power(k, k);  // at most 27, so a monoid fits in 32 bits
    std::vector<std::vector<std::uint8_t>> comp(n, std::vector<std::uint8_t>(n));
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t g = 0; g < n; ++g) {
        comp[f][g] = static_cast<std::uint8_t>(
            compose_codes(k, static_cast<Code>(f), static_cast<Code>(g)));
      }
    }
    auto close = [&](std::uint32_t mask) {
      std::vector<std::size_t> members;
      for (std::size_t f = 0; f < n; ++f) {
        if ((mask >> f) & 1U) {
          members.push_back(f);
        }
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          for (auto [a, b] : {std::pair{members[i], members[j]}, std::pair{members[j], members[i]}}) {
            std::size_t const c = comp[a][b];
            if (((mask >> c) & 1U) == 0) {
              mask |= std::uint32_t(1) << c;
              members.push_back(c);
            }
          }
        }
      }
      return mask;
    };

    std::uint32_t const                 id = std::uint32_t(1) << identity_code(k);
    std::unordered_set<std::uint32_t>   seen{id};
    std::deque<std::uint32_t>           frontier{id};
    while (!frontier.empty()) {
      std::uint32_t const m = frontier.front();
      frontier.pop_front();
      for (std::size_t e = 0; e < n; ++e) {
        if (((m >> e) & 1U) == 0) {
          std::uint32_t const next = close(m | (std::uint32_t(1) << e));
          if (seen.insert(next).second) {
            frontier.push_back(next);
          }
        }
      }
    }
    std::vector<Monoid> out;
    out.reserve(seen.size());
    for (std::uint32_t mask : seen) {
      std::vector<Code> codes;
      for (std::size_t f = 0; f < n; ++f) {
        if ((mask >> f) & 1U) {
          codes.push_back(static_cast<Code>(f));
        }
      }
      out.emplace_back(u, std::move(codes), detail::TrustedClosure{});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<CensusRecord> census(std::size_t k, std::size_t threads) {
    auto const                monoids = enumerate_submonoids(k, threads);
    std::vector<CensusRecord> out;
    out.reserve(monoids.size());
    for (auto const& m : monoids) {
      out.push_back(CensusRecord{m});
    }
    parallel_for(out.size(), threads, [&](std::size_t i) {
      auto& r              = out[i];
      r.contains_constants = r.monoid.contains_constants();
      r.uclosed            = is_uclosed(r.monoid).uclosed;
      r.end_quord_closed   = end_of(invariant_quords(r.monoid)) == r.monoid;
    });
    Monoid const t = trivial_monoid(Universe(k));
    for (auto& r : out) {
      if (!r.uclosed || r.monoid == t) {
        continue;
      }
      r.minimal_uclosed = std::none_of(out.begin(), out.end(), [&](CensusRecord const& s) {
        return s.uclosed && s.monoid != t && s.monoid != r.monoid && s.monoid.is_subset_of(r.monoid);
      });
    }
    return out;
  }

  CensusCounts census_counts(std::vector<CensusRecord> const& records) {
    CensusCounts c;
    c.total = records.size();
    for (auto const& r : records) {
      c.uclosed += r.uclosed ? 1 : 0;
      c.end_quord_closed += r.end_quord_closed ? 1 : 0;
    }
    return c;
  }

  CensusCounts census_counts(std::size_t k, std::size_t threads) {
    return census_counts(census(k, threads));
  }

  char const* to_string(UnaryType t) noexcept {
    switch (t) {
      case UnaryType::trivial:
        return "trivial";
      case UnaryType::I:
        return "I";
      case UnaryType::II:
        return "II";
      case UnaryType::III:
        return "III";
      case UnaryType::IIprime:
        return "II'";
      case UnaryType::IIIprime:
        return "III'";
      case UnaryType::other:
        return "other";
    }
    return "?";
  }

  namespace {
    bool is_prime(std::size_t p) {
      if (p < 2) {
        return false;
      }
      for (std::size_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  UnaryTypeTag classify_unary(OpTable const& f) {
    if (f.arity() != 1) {
      throw ArgumentError("classification needs a unary map");
    }
    std::size_t const k = f.universe().size();
    UnaryTypeTag      t;
    std::vector<bool> in_image(k, false);
    for (std::size_t x = 0; x < k; ++x) {
      in_image[f[x]] = true;
      t.fixed_points += f[x] == x ? 1 : 0;
    }
    t.image_size = static_cast<std::size_t>(std::count(in_image.begin(), in_image.end(), true));

    // Points on cycles: x with f^j(x) = x for some j <= k.
    std::vector<bool> seen(k, false);
    for (std::size_t x = 0; x < k; ++x) {
      if (seen[x]) {
        continue;
      }
      std::size_t y = f[x];
      std::size_t j = 1;
      while (y != x && j <= k) {
        y = f[y];
        ++j;
      }
      if (y == x) {
        for (std::size_t z = x, i = 0; i < j; ++i, z = f[z]) {
          seen[z] = true;
        }
        t.cycle_lengths.push_back(j);
      }
    }
    std::sort(t.cycle_lengths.begin(), t.cycle_lengths.end());

    bool const is_perm     = t.image_size == k;
    bool const is_identity = t.fixed_points == k;
    bool const is_const    = t.image_size == 1;
    bool       idempotent  = true;
    bool       sq_const    = true;
    for (std::size_t x = 0; x < k; ++x) {
      idempotent = idempotent && f[f[x]] == f[x];
      sq_const   = sq_const && f[f[x]] == f[f[0]];
    }
    // f^p = id for a prime p: a non-identity permutation whose cycles all
    // have length p or 1.
    std::size_t p           = 0;
    bool        prime_order = false;
    std::size_t p_cycles    = 0;
    if (is_perm && !is_identity) {
      p           = *std::max_element(t.cycle_lengths.begin(), t.cycle_lengths.end());
      prime_order = is_prime(p) && std::all_of(t.cycle_lengths.begin(), t.cycle_lengths.end(),
                                               [&](std::size_t l) { return l == 1 || l == p; });
      p_cycles    = static_cast<std::size_t>(
          std::count(t.cycle_lengths.begin(), t.cycle_lengths.end(), p));
    }
    std::size_t preimages = 0;
    if (sq_const) {
      Element const v = f[f[0]];
      for (std::size_t x = 0; x < k; ++x) {
        preimages += f[x] == v ? 1 : 0;
      }
    }

    bool const type_ii  = sq_const && preimages >= 3;
    bool const type_iii = prime_order && p_cycles >= 2;
    t.iiprime           = sq_const && !is_const && k >= 4;
    t.iiiprime          = prime_order && (t.fixed_points >= 2 || type_iii);

    if (is_identity || is_const) {
      t.tag     = UnaryType::trivial;
      t.iiprime = false;
    } else if (idempotent) {
      t.tag = UnaryType::I;
    } else if (type_ii) {
      t.tag = UnaryType::II;
    } else if (type_iii) {
      t.tag = UnaryType::III;
    } else if (t.iiprime) {
      t.tag = UnaryType::IIprime;
    } else if (t.iiiprime) {
      t.tag = UnaryType::IIIprime;
    } else {
      t.tag = UnaryType::other;
    }
    return t;
  }

  Monoid principal_monoid(OpTable const& f) {
    std::size_t const k = f.universe().size();
    std::vector<Code> gens{unary_code(f)};
    for (std::size_t a = 0; a < k; ++a) {
      gens.push_back(constant_code(k, static_cast<Element>(a)));
    }
    return monoid_generate_codes(f.universe(), gens);
  }

  OpTable cycle_map(Universe universe) {
    std::size_t const    k = universe.size();
    std::vector<Element> t(k);
    for (std::size_t x = 0; x < k; ++x) {
      t[x] = static_cast<Element>((x + 1) % k);
    }
    return OpTable(universe, 1, std::move(t));
  }

  MinimalUclosedResult minimal_uclosed(std::size_t k, std::size_t threads) {
    if (k != 3 && k != 4) {
      throw CapacityError("the minimal u-closed classification runs for k = 3 or 4");
    }
    Universe const       u(k);
    MinimalUclosedResult r;
    std::size_t const    n = checked_power(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      OpTable const      f   = unary_from_code(u, static_cast<Code>(c));
      UnaryTypeTag const tag = classify_unary(f);
      if (tag.tag == UnaryType::I || tag.iiprime || tag.iiiprime) {
        r.classification_route.push_back(principal_monoid(f));
      }
    }
    auto& cls = r.classification_route;
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());

    std::vector<char> ok(cls.size(), 0);
    parallel_for(cls.size(), threads, [&](std::size_t i) { ok[i] = is_uclosed(cls[i]).uclosed; });
    r.all_uclosed = std::all_of(ok.begin(), ok.end(), [](char b) { return b != 0; });

    if (k == 3) {
      std::vector<Monoid> minimal;
      for (auto const& rec : census(k, threads)) {
        if (rec.minimal_uclosed) {
          minimal.push_back(rec.monoid);
        }
      }
      r.routes_agree = minimal == cls;
      r.census_route = std::move(minimal);
    } else {
      r.routes_agree = true;
    }
    return r;
  }

  CycleUclSize cycle_ucl_size(std::size_t k, bool allow_large) {
    if (k < 2 || k > (allow_large ? 6 : 4)) {
      throw CapacityError("the cycle closure runs for 2 <= k <= 4, or up to 6 when enabled");
    }
    Universe const u(k);
    Monoid const   mg = principal_monoid(cycle_map(u));
    Monoid const   cl = ucl(mg);
    CycleUclSize   r;
    r.k               = k;
    r.computed        = cl.size();
    r.formula         = 0;
    r.formula_product = 1;
    std::size_t rest  = k;
    for (std::size_t p = 2; p <= rest; ++p) {
      if (rest % p != 0) {
        continue;
      }
      std::size_t exponent = 0;
      std::size_t power    = 1;
      while (rest % p == 0) {
        rest /= p;
        power *= p;
        exponent += power;
      }
      std::size_t term = 1;
      for (std::size_t i = 0; i < exponent; ++i) {
        term *= p;
      }
      r.formula += term;
      r.formula_product *= term;
    }
    r.end_con_agrees = end_of(invariant_congruences(mg)) == cl;
    return r;
  }

  bool NonMinimalityCheck::shows_nonminimal() const noexcept {
    bool const all_in_star = !h_in_star.empty()
                             && std::all_of(h_in_star.begin(), h_in_star.end(),
                                            [](bool b) { return b; });
    bool const good_type
        = last_type.tag == UnaryType::I || last_type.iiprime || last_type.iiiprime;
    return all_in_star && diagonals_in_ucl && good_type && last_monoid_uclosed && strictly_inside;
  }

  NonMinimalityCheck check_nonminimality(OpTable const& f, std::vector<OpTable> const& hs) {
    if (hs.empty()) {
      throw ArgumentError("at least one binary operation is needed");
    }
    Monoid const       closure = ucl(principal_monoid(f));
    Monoid             base    = principal_monoid(f);
    NonMinimalityCheck r;
    r.diagonals_in_ucl = true;
    for (auto const& h : hs) {
      if (h.arity() != 2 || h.universe() != f.universe()) {
        throw ArgumentError("expected binary operations over the universe of f");
      }
      r.h_in_star.push_back(in_star(h, base));
      OpTable g = preclone_transform(PrecloneOp::delta, h);
      r.diagonals_in_ucl = r.diagonals_in_ucl && closure.contains(g);
      base               = principal_monoid(g);
      r.diagonals.push_back(std::move(g));
    }
    r.last_type           = classify_unary(r.diagonals.back());
    r.last_monoid_uclosed = is_uclosed(base).uclosed;
    r.strictly_inside     = base.is_subset_of(closure) && base != closure;
    return r;
  }

}  // namespace gq
