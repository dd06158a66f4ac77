#include "gq/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "gq/error.hpp"

namespace gq {

  namespace {

    struct Line {
      std::size_t      number;
      std::string_view text;
    };

    std::string_view trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    // Non-blank, non-comment lines with their 1-based numbers.
    std::vector<Line> content_lines(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      while (!text.empty() || number == 0) {
        ++number;
        auto const       nl  = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text                 = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        auto const t         = trim(raw);
        if (!t.empty() && t.front() != '#') {
          out.push_back({number, t});
        }
        if (nl == std::string_view::npos) {
          break;
        }
      }
      return out;
    }

    std::vector<std::string_view> words(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
          ++j;
        }
        if (j > i) {
          out.push_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    std::size_t header_number(Line const& line, std::string_view w) {
      std::size_t v   = 0;
      auto [ptr, ec]  = std::from_chars(w.data(), w.data() + w.size(), v);
      if (ec != std::errc{} || ptr != w.data() + w.size()) {
        throw ParseError(line.number, "malformed header '" + std::string(line.text) + "'");
      }
      return v;
    }

    // Entries of a data line: single digits, optionally separated by blanks.
    Tuple digits(Line const& line, std::size_t k) {
      Tuple out;
      for (char ch : line.text) {
        if (ch == ' ' || ch == '\t') {
          continue;
        }
        if (ch < '0' || ch > '9') {
          throw ParseError(line.number, std::string("unexpected character '") + ch + "'");
        }
        std::size_t v = static_cast<std::size_t>(ch - '0');
        if (v >= k) {
          throw ParseError(line.number, "entry " + std::to_string(v) + " is out of range for k = "
                                            + std::to_string(k));
        }
        out.push_back(static_cast<Element>(v));
      }
      return out;
    }

    template <typename Fn>
    auto wrap_errors(std::size_t line, Fn&& fn) -> decltype(fn()) {
      try {
        return fn();
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(line, e.what());
      }
    }

    bool is_header(std::string_view t) {
      auto w = words(t);
      return !w.empty() && (w[0] == "rel" || w[0] == "fun" || w[0] == "mon");
    }

    // Parses the object whose header is lines[pos]; advances pos past it.
    TextObject parse_block(std::vector<Line> const& lines, std::size_t& pos) {
      Line const& head = lines[pos++];
      auto const  w    = words(head.text);
      std::size_t end  = pos;
      while (end < lines.size() && !is_header(lines[end].text)) {
        ++end;
      }
      std::size_t const first = pos;
      pos                     = end;

      if (w[0] == "rel") {
        if (w.size() != 3) {
          throw ParseError(head.number, "expected 'rel <m> <k>'");
        }
        std::size_t const m = header_number(head, w[1]);
        std::size_t const k = header_number(head, w[2]);
        Universe const    u = wrap_errors(head.number, [&] { return Universe(k); });
        if (m == 0 || m > kMaxRelationArity) {
          throw ParseError(head.number, "relation arity " + std::to_string(m) + " is not supported");
        }
        std::vector<Code>        codes;
        std::unordered_set<Code> seen;
        for (std::size_t i = first; i < end; ++i) {
          Tuple t = digits(lines[i], k);
          if (t.size() != m) {
            throw ParseError(lines[i].number, "tuple has " + std::to_string(t.size())
                                                  + " entries, expected " + std::to_string(m));
          }
          Code c = encode_tuple(k, t);
          if (!seen.insert(c).second) {
            throw ParseError(lines[i].number, "duplicate tuple");
          }
          codes.push_back(c);
        }
        return wrap_errors(head.number, [&] { return Relation::from_codes(u, m, codes); });
      }

      if (w[0] == "fun") {
        if (w.size() != 3) {
          throw ParseError(head.number, "expected 'fun <n> <k>'");
        }
        std::size_t const n = header_number(head, w[1]);
        std::size_t const k = header_number(head, w[2]);
        Universe const    u = wrap_errors(head.number, [&] { return Universe(k); });
        if (n == 0) {
          throw ParseError(head.number, "operations must have positive arity");
        }
        std::uint64_t const expected = wrap_errors(head.number, [&] { return checked_power(k, n); });
        std::vector<Element> table;
        for (std::size_t i = first; i < end; ++i) {
          Tuple t = digits(lines[i], k);
          table.insert(table.end(), t.begin(), t.end());
        }
        if (table.size() != expected) {
          std::size_t at = end > first ? lines[end - 1].number : head.number;
          throw ParseError(at, "operation table has " + std::to_string(table.size())
                                   + " entries, expected " + std::to_string(expected));
        }
        return wrap_errors(head.number, [&] { return OpTable(u, n, std::move(table)); });
      }

      if (w.size() != 2) {
        throw ParseError(head.number, "expected 'mon <k>'");
      }
      std::size_t const        k = header_number(head, w[1]);
      Universe const           u = wrap_errors(head.number, [&] { return Universe(k); });
      std::vector<OpTable>     members;
      std::unordered_set<Code> seen;
      for (std::size_t i = first; i < end; ++i) {
        Tuple t = digits(lines[i], k);
        if (t.size() != k) {
          throw ParseError(lines[i].number, "monoid member has " + std::to_string(t.size())
                                                + " entries, expected " + std::to_string(k));
        }
        if (!seen.insert(encode_tuple(k, t)).second) {
          throw ParseError(lines[i].number, "duplicate monoid member");
        }
        members.emplace_back(u, 1, std::move(t));
      }
      return wrap_errors(head.number, [&] { return Monoid::from_members(u, members); });
    }

    void write_entries(std::ostringstream& os, std::span<Element const> xs) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) {
          os << ' ';
        }
        os << static_cast<int>(xs[i]);
      }
      os << '\n';
    }

  }  // namespace

  std::vector<TextObject> parse_all(std::string_view text) {
    auto const              lines = content_lines(text);
    std::vector<TextObject> out;
    std::size_t             pos = 0;
    while (pos < lines.size()) {
      if (!is_header(lines[pos].text)) {
        throw ParseError(lines[pos].number, "expected a 'rel', 'fun' or 'mon' header");
      }
      out.push_back(parse_block(lines, pos));
    }
    return out;
  }

  TextObject parse(std::string_view text) {
    auto objs = parse_all(text);
    if (objs.size() != 1) {
      throw ParseError(0, "expected exactly one object, found " + std::to_string(objs.size()));
    }
    return std::move(objs.front());
  }

  RelationSet parse_relation_set(std::string_view text, Universe fallback) {
    auto        objs = parse_all(text);
    RelationSet out(fallback);
    for (auto& o : objs) {
      auto* rho = std::get_if<Relation>(&o);
      if (rho == nullptr) {
        throw ParseError(0, "a relation set may only contain 'rel' blocks");
      }
      if (rho->universe() != fallback) {
        if (out.empty() && &o == &objs.front()) {
          out = RelationSet(rho->universe());
        } else {
          throw ParseError(0, "relations over different universes");
        }
      }
      out.insert(*rho);
    }
    return out;
  }

  std::string serialize(OpTable const& f) {
    std::ostringstream os;
    std::size_t const  k = f.universe().size();
    os << "fun " << f.arity() << ' ' << k << '\n';
    for (std::size_t i = 0; i < f.size(); i += k) {
      write_entries(os, f.table().subspan(i, k));
    }
    return os.str();
  }

  std::string serialize(Relation const& rho) {
    std::ostringstream os;
    os << "rel " << rho.arity() << ' ' << rho.universe().size() << '\n';
    for (std::size_t i = 0; i < rho.size(); ++i) {
      write_entries(os, rho.tuple(i));
    }
    return os.str();
  }

  std::string serialize(Monoid const& m) {
    std::ostringstream os;
    std::size_t const  k = m.universe().size();
    os << "mon " << k << '\n';
    for (Code c : m.codes()) {
      write_entries(os, decode_tuple(k, c, k));
    }
    return os.str();
  }

  std::string serialize(TextObject const& x) {
    return std::visit([](auto const& v) { return serialize(v); }, x);
  }

  std::string serialize(RelationSet const& q) {
    std::string out;
    for (auto const& rho : q) {
      if (!out.empty()) {
        out += '\n';
      }
      out += serialize(rho);
    }
    return out;
  }

}  // namespace gq
