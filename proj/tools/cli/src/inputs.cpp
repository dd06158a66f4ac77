#include "inputs.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace gq::cli {

  namespace {

    struct Literal {
      std::vector<std::string> header;
      std::vector<std::string> body;
    };

    std::vector<std::string> words(std::string_view s) {
      std::istringstream       in{std::string(s)};
      std::vector<std::string> out{std::istream_iterator<std::string>(in), {}};
      return out;
    }

    Literal split_literal(std::string_view lit, std::size_t header_words, char const* kind) {
      auto const colon = lit.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(0, std::string(kind) + " literal needs a ':' after its header");
      }
      Literal l{words(lit.substr(0, colon)), words(lit.substr(colon + 1))};
      if (l.header.size() != header_words) {
        throw ParseError(0, std::string(kind) + " literal header needs "
                                + std::to_string(header_words) + " numbers");
      }
      return l;
    }

    std::string spaced(std::string const& digits) {
      std::string s;
      for (char c : digits) {
        if (!s.empty()) {
          s += ' ';
        }
        s += c;
      }
      return s;
    }

    template <typename T>
    std::vector<T> only(std::vector<TextObject> const& objs) {
      std::vector<T> out;
      for (auto const& o : objs) {
        if (auto const* x = std::get_if<T>(&o)) {
          out.push_back(*x);
        }
      }
      return out;
    }

    template <typename T>
    void require_same_universe(std::vector<T> const& xs) {
      for (auto const& x : xs) {
        if (x.universe() != xs.front().universe()) {
          throw ArgumentError("inputs are over different universes");
        }
      }
    }

  }  // namespace

  std::string read_source(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ArgumentError("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::string relation_literal(std::string_view lit) {
    auto const  l    = split_literal(lit, 2, "rel");
    std::string text = "rel " + l.header[0] + " " + l.header[1] + "\n";
    for (auto const& t : l.body) {
      text += spaced(t) + "\n";
    }
    return text;
  }

  std::string function_literal(std::string_view lit) {
    auto const  l    = split_literal(lit, 2, "fun");
    std::string text = "fun " + l.header[0] + " " + l.header[1] + "\n";
    std::string digits;
    for (auto const& t : l.body) {
      digits += t;
    }
    return text + spaced(digits) + "\n";
  }

  std::string monoid_literal(std::string_view lit) {
    auto const  l    = split_literal(lit, 1, "mon");
    std::string text = "mon " + l.header[0] + "\n";
    for (auto const& t : l.body) {
      text += spaced(t) + "\n";
    }
    return text;
  }

  std::vector<TextObject> load_objects(Sources const& s) {
    std::vector<TextObject> out;
    auto                    add = [&](std::string const& text) {
      auto objs = parse_all(text);
      out.insert(out.end(), objs.begin(), objs.end());
    };
    for (auto const& f : s.files) {
      add(read_source(f));
    }
    for (auto const& r : s.rels) {
      add(relation_literal(r));
    }
    for (auto const& f : s.funs) {
      add(function_literal(f));
    }
    for (auto const& m : s.mons) {
      add(monoid_literal(m));
    }
    return out;
  }

  Relation load_relation(Sources const& s) {
    auto const rels = only<Relation>(load_objects(s));
    if (rels.size() != 1) {
      throw ArgumentError("expected exactly one relation, got " + std::to_string(rels.size()));
    }
    return rels.front();
  }

  RelationSet load_relation_set(Sources const& s) {
    auto const rels = only<Relation>(load_objects(s));
    if (rels.empty()) {
      if (!s.k) {
        throw ArgumentError("an empty relation set needs --k");
      }
      return RelationSet(Universe(*s.k));
    }
    require_same_universe(rels);
    return RelationSet(rels.front().universe(), rels);
  }

  Monoid load_monoid(Sources const& s) {
    std::vector<Monoid> found = only<Monoid>(load_objects(s));
    if (s.cycle) {
      found.push_back(principal_monoid(cycle_map(Universe(*s.cycle))));
    }
    if (s.trivial) {
      found.push_back(trivial_monoid(Universe(*s.trivial)));
    }
    if (s.full) {
      found.push_back(full_monoid(Universe(*s.full)));
    }
    if (found.size() != 1) {
      throw ArgumentError("expected exactly one monoid, got " + std::to_string(found.size()));
    }
    return found.front();
  }

  OpSet load_op_set(Sources const& s) {
    auto const ops = only<OpTable>(load_objects(s));
    if (ops.empty()) {
      if (!s.k) {
        throw ArgumentError("an empty operation set needs --k");
      }
      return OpSet(Universe(*s.k));
    }
    require_same_universe(ops);
    OpSet set(ops.front().universe());
    for (auto const& f : ops) {
      set.insert(f);
    }
    return set;
  }

  OpTable load_operation(Sources const& s) {
    auto const ops = only<OpTable>(load_objects(s));
    if (ops.size() != 1) {
      throw ArgumentError("expected exactly one operation, got " + std::to_string(ops.size()));
    }
    return ops.front();
  }

}  // namespace gq::cli
