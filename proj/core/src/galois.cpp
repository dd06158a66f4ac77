#include "gq/galois.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "gq/error.hpp"

namespace gq {

  Relation gamma(Monoid const& m) {
    std::vector<Code> codes(m.codes().begin(), m.codes().end());
    return Relation::from_codes(m.universe(), m.universe().size(), std::move(codes));
  }

  UclosedReport is_uclosed(Monoid const& m) {
    UclosedReport     r;
    std::size_t const k = m.universe().size();
    for (std::size_t a = 0; a < k; ++a) {
      if (!m.contains_code(constant_code(k, static_cast<Element>(a)))) {
        r.missing_constant = static_cast<Element>(a);
        return r;
      }
    }
    r.witness = transitivity_witness(gamma(m));
    if (r.witness) {
      std::vector<Element> table(r.witness->entries().begin(), r.witness->entries().end());
      r.witness_op = OpTable(m.universe(), 2, std::move(table));
    }
    r.uclosed = !r.witness.has_value();
    return r;
  }

  UclTrace ucl_trace(Monoid const& m) {
    std::size_t const k = m.universe().size();
    if (k > kMaxUclUniverse) {
      throw CapacityError("u-closure supports k <= " + std::to_string(kMaxUclUniverse));
    }
    std::vector<Code> constants;
    for (std::size_t a = 0; a < k; ++a) {
      constants.push_back(constant_code(k, static_cast<Element>(a)));
    }
    UclTrace trace{m, {}, monoid_join(m, constants)};
    while (true) {
      auto const w = transitivity_witness(gamma(trace.result));
      if (!w) {
        return trace;
      }
      std::vector<Code> added{encode_tuple(k, w->diagonal())};
      trace.result = monoid_join(trace.result, added);
      trace.steps.push_back({std::move(added), trace.result.size()});
    }
  }

  Monoid ucl(Monoid const& m) {
    return ucl_trace(m).result;
  }

  namespace {
    std::vector<OpTable> difference(std::vector<OpTable> const& x, std::vector<OpTable> const& y) {
      std::vector<OpTable> out;
      std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      return out;
    }

    constexpr std::size_t kMaxCompared = 1000000;
  }  // namespace

  XiReport xi_check(RelationSet const& q, std::size_t nmax) {
    if (nmax == 0 || nmax > kMaxPolArity) {
      throw CapacityError("the property check supports 1 <= nmax <= "
                          + std::to_string(kMaxPolArity));
    }
    Monoid const e = end_of(q);
    XiReport     r;
    for (std::size_t n = 1; n <= nmax; ++n) {
      auto const pol  = pol_arity(q, n, kMaxCompared);
      auto const star = star_members(e, n, kMaxCompared);
      auto       sp   = difference(star, pol);
      auto       ps   = difference(pol, star);
      r.verified_arity = n;
      if (!sp.empty() || !ps.empty()) {
        if (sp.empty()) {
          r.counterexample = ps.front();
        } else if (ps.empty()) {
          r.counterexample = sp.front();
        } else {
          r.counterexample = std::min(sp.front(), ps.front());
        }
        r.star_minus_pol = std::move(sp);
        r.pol_minus_star = std::move(ps);
        return r;
      }
    }
    r.holds = true;
    return r;
  }

  CompletenessReport gquord_complete_check(OpSet const& f, std::size_t nmax) {
    if (nmax == 0 || nmax > kMaxPolArity) {
      throw CapacityError("the completeness check supports 1 <= nmax <= "
                          + std::to_string(kMaxPolArity));
    }
    Universe const    u = f.universe();
    std::size_t const k = u.size();
    std::vector<Code> gens;
    OpSet             with_constants = f;
    for (auto const& g : f.all()) {
      auto t = translation_codes(g);
      gens.insert(gens.end(), t.begin(), t.end());
    }
    for (std::size_t a = 0; a < k; ++a) {
      gens.push_back(constant_code(k, static_cast<Element>(a)));
      with_constants.insert(OpTable::constant(u, static_cast<Element>(a)));
    }
    CompletenessReport r{.monoid = ucl(monoid_generate_codes(u, gens))};
    OpSet const        clone = clone_generate_bounded(with_constants, nmax);
    for (std::size_t n = 1; n <= nmax; ++n) {
      auto const&                star = star_members(r.monoid, n, kMaxCompared);
      std::vector<OpTable> const gen(clone.arity(n).begin(), clone.arity(n).end());
      auto                       sc = difference(star, gen);
      auto                       cs = difference(gen, star);
      r.verified_arity              = n;
      if (!sc.empty() || !cs.empty()) {
        r.witness          = sc.empty() ? cs.front() : sc.front();
        r.star_minus_clone = std::move(sc);
        r.clone_minus_star = std::move(cs);
        return r;
      }
    }
    r.complete = true;
    return r;
  }

}  // namespace gq
