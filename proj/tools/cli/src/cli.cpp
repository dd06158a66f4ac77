#include "gq_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "gq/gq.hpp"
#include "gq_cli/paper_cases.hpp"
#include "inputs.hpp"
#include "json.hpp"

namespace gq::cli {

  namespace {

    using nlohmann::json;

    struct Globals {
      bool        json      = false;
      std::size_t max_arity = 2;
      std::size_t budget    = kDefaultStateBudget;
      std::size_t threads   = 1;
    };

    // --- formatting ---------------------------------------------------------

    std::string spaced(std::span<Element const> t) {
      std::string s;
      for (Element x : t) {
        if (!s.empty()) {
          s += ' ';
        }
        s += static_cast<char>('0' + x);
      }
      return s;
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    json tuple_json(std::span<Element const> t) {
      json a = json::array();
      for (Element x : t) {
        a.push_back(x);
      }
      return a;
    }

    json to_json(Relation const& rho) {
      json tuples = json::array();
      for (auto const& t : rho.tuples()) {
        tuples.push_back(tuple_json(t));
      }
      return {{"type", "rel"}, {"arity", rho.arity()}, {"k", rho.universe().size()},
              {"tuples", tuples}};
    }

    json to_json(OpTable const& f) {
      return {{"type", "fun"}, {"arity", f.arity()}, {"k", f.universe().size()},
              {"table", tuple_json(f.table())}};
    }

    json to_json(Monoid const& m) {
      json members = json::array();
      for (auto const& g : m.members()) {
        members.push_back(tuple_json(g.table()));
      }
      return {{"type", "mon"}, {"k", m.universe().size()}, {"members", members}};
    }

    json to_json(LineTensor const& t) {
      json rows = json::array();
      for (std::size_t i = 0; i < t.lines_per_axis(); ++i) {
        rows.push_back(tuple_json(t.line(1, i)));
      }
      return rows;
    }

    json to_json(std::vector<OpTable> const& ops) {
      json a = json::array();
      for (auto const& f : ops) {
        a.push_back(to_json(f));
      }
      return a;
    }

    void print_matrix(std::ostream& out, LineTensor const& t) {
      for (std::size_t i = 0; i < t.lines_per_axis(); ++i) {
        out << spaced(t.line(1, i)) << '\n';
      }
    }

    void print_ops(std::ostream& out, std::vector<OpTable> const& ops) {
      for (std::size_t i = 0; i < ops.size(); ++i) {
        out << (i == 0 ? "" : "\n") << serialize(ops[i]);
      }
    }

    // --- commands -----------------------------------------------------------

    class Commands {
     public:
      Commands(Globals const& g, Sources const& s, std::ostream& out)
          : _g(g), _s(s), _out(out) {}

      int check_gquord() {
        Relation const rho = load_relation(_s);
        auto const     rep = is_gquord(rho, _g.budget);
        std::optional<Element> missing;
        for (std::size_t a = 0; a < rho.universe().size() && !rep.reflexive; ++a) {
          Tuple const t(rho.arity(), static_cast<Element>(a));
          if (!rho.contains(t)) {
            missing = static_cast<Element>(a);
            break;
          }
        }
        if (_g.json) {
          json j{{"reflexive", rep.reflexive}, {"transitive", rep.transitive},
                 {"gquord", rep.is_gquord()}};
          if (missing) {
            j["missing_constant"] = *missing;
          }
          if (rep.witness) {
            j["witness"]  = to_json(*rep.witness);
            j["diagonal"] = tuple_json(rep.witness->diagonal());
          }
          _out << j.dump(2) << '\n';
        } else {
          _out << "reflexive: " << yes_no(rep.reflexive)
               << ", transitive: " << yes_no(rep.transitive) << '\n';
          if (missing) {
            _out << "missing constant tuple: " << spaced(Tuple(rho.arity(), *missing)) << '\n';
          }
          if (rep.witness) {
            _out << "witness (rows and columns in the relation, diagonal outside):\n";
            print_matrix(_out, *rep.witness);
            _out << "diagonal: " << spaced(rep.witness->diagonal()) << '\n';
          }
        }
        return rep.is_gquord() ? kOk : kFalse;
      }

      int check_uclosed() {
        Monoid const m   = load_monoid(_s);
        auto const   rep = is_uclosed(m);
        if (_g.json) {
          json j{{"uclosed", rep.uclosed}, {"size", m.size()}};
          if (rep.missing_constant) {
            j["missing_constant"] = *rep.missing_constant;
          }
          if (rep.witness_op) {
            j["witness"] = to_json(*rep.witness_op);
            j["delta"]   = to_json(preclone_transform(PrecloneOp::delta, *rep.witness_op));
          }
          _out << j.dump(2) << '\n';
        } else {
          _out << "uclosed: " << yes_no(rep.uclosed) << '\n';
          if (rep.missing_constant) {
            _out << "missing constant: c" << int(*rep.missing_constant) << '\n';
          }
          if (rep.witness_op) {
            auto const d = preclone_transform(PrecloneOp::delta, *rep.witness_op);
            _out << "witness (binary f in M* whose diagonal is not in M):\n"
                 << serialize(*rep.witness_op) << "delta f: " << spaced(d.table()) << '\n';
          }
        }
        return rep.uclosed ? kOk : kFalse;
      }

      int check_xi() {
        RelationSet const q   = load_relation_set(_s);
        auto const        rep = xi_check(q, _g.max_arity);
        if (_g.json) {
          json j{{"holds", rep.holds},
                 {"verified_arity", rep.verified_arity},
                 {"star_minus_pol", to_json(rep.star_minus_pol)},
                 {"pol_minus_star", to_json(rep.pol_minus_star)}};
          if (rep.counterexample) {
            j["counterexample"] = to_json(*rep.counterexample);
          }
          _out << j.dump(2) << '\n';
        } else if (rep.holds) {
          _out << "xi: holds up to arity " << rep.verified_arity << '\n';
        } else {
          _out << "xi: fails at arity " << rep.verified_arity << '\n'
               << "(End Q)* minus Pol Q: " << rep.star_minus_pol.size() << '\n'
               << "Pol Q minus (End Q)*: " << rep.pol_minus_star.size() << '\n'
               << "counterexample:\n"
               << serialize(*rep.counterexample);
        }
        return rep.holds ? kOk : kFalse;
      }

      int check_complete() {
        OpSet const f   = load_op_set(_s);
        auto const  rep = gquord_complete_check(f, _g.max_arity);
        if (_g.json) {
          json j{{"complete", rep.complete},
                 {"verified_arity", rep.verified_arity},
                 {"monoid", to_json(rep.monoid)},
                 {"star_minus_clone", rep.star_minus_clone.size()},
                 {"clone_minus_star", rep.clone_minus_star.size()}};
          if (rep.witness) {
            j["witness"] = to_json(*rep.witness);
          }
          _out << j.dump(2) << '\n';
        } else {
          _out << "u-closure of the translations: " << rep.monoid.size() << " members\n";
          if (rep.complete) {
            _out << "complete: yes, verified up to arity " << rep.verified_arity << '\n';
          } else {
            _out << "complete: no, differs at arity " << rep.verified_arity << '\n'
                 << "M* minus generated clone: " << rep.star_minus_clone.size() << '\n'
                 << "generated clone minus M*: " << rep.clone_minus_star.size() << '\n'
                 << "witness:\n"
                 << serialize(*rep.witness);
          }
        }
        return rep.complete ? kOk : kFalse;
      }

      int close(ClosureMode mode) {
        return emit(closure(load_relation(_s), mode, _g.budget));
      }

      int partial_cmd() {
        return emit(partial(load_relation(_s), _g.budget));
      }

      int gamma_cmd() {
        return emit(gamma(load_monoid(_s)));
      }

      int ucl_cmd(bool trace) {
        auto const t = ucl_trace(load_monoid(_s));
        if (_g.json) {
          json j = to_json(t.result);
          if (trace) {
            json steps = json::array();
            for (auto const& st : t.steps) {
              json added = json::array();
              for (Code c : st.added) {
                added.push_back(tuple_json(decode_unary(t.result.universe().size(), c)));
              }
              steps.push_back({{"added", added}, {"gamma_size", st.gamma_size}});
            }
            j["start_size"] = t.start.size();
            j["steps"]      = steps;
          }
          _out << j.dump(2) << '\n';
          return kOk;
        }
        if (trace) {
          std::size_t const k = t.result.universe().size();
          _out << "# start: " << t.start.size() << " members\n";
          for (std::size_t i = 0; i < t.steps.size(); ++i) {
            _out << "# step " << i + 1 << ": added";
            for (Code c : t.steps[i].added) {
              _out << ' ' << spaced(decode_tuple(k, c, k));
            }
            _out << ", |Gamma| = " << t.steps[i].gamma_size << '\n';
          }
        }
        _out << serialize(t.result);
        return kOk;
      }

      int star_cmd(std::optional<std::size_t> arity, bool count, std::string const& test) {
        Monoid const m = load_monoid(_s);
        if (!test.empty()) {
          return star_test(m, test);
        }
        std::vector<std::size_t> arities;
        for (std::size_t n = arity.value_or(1); n <= arity.value_or(_g.max_arity); ++n) {
          arities.push_back(n);
        }
        json                 j = json::object();
        std::vector<OpTable> all;
        for (std::size_t n : arities) {
          if (count) {
            std::size_t const c = count_star_members(m, n);
            if (_g.json) {
              j[std::to_string(n)] = c;
            } else {
              _out << "arity " << n << ": " << c << '\n';
            }
          } else {
            auto ops = star_members(m, n);
            all.insert(all.end(), ops.begin(), ops.end());
          }
        }
        if (!count) {
          if (_g.json) {
            j = to_json(all);
          } else {
            print_ops(_out, all);
          }
        }
        if (_g.json) {
          _out << j.dump(2) << '\n';
        }
        return kOk;
      }

      int end_cmd() {
        return emit(end_of(load_relation_set(_s)));
      }

      int pol_cmd(std::optional<std::size_t> arity, bool count) {
        RelationSet const    q = load_relation_set(_s);
        json                 j = json::object();
        std::vector<OpTable> all;
        for (std::size_t n = arity.value_or(1); n <= arity.value_or(_g.max_arity); ++n) {
          auto ops = pol_arity(q, n);
          if (count) {
            if (_g.json) {
              j[std::to_string(n)] = ops.size();
            } else {
              _out << "arity " << n << ": " << ops.size() << '\n';
            }
          } else {
            all.insert(all.end(), ops.begin(), ops.end());
          }
        }
        if (_g.json) {
          _out << (count ? j : to_json(all)).dump(2) << '\n';
        } else if (!count) {
          print_ops(_out, all);
        }
        return kOk;
      }

      int census_cmd(std::size_t k, bool dump) {
        auto const  records = census(k, _g.threads);
        auto const  counts  = census_counts(records);
        std::size_t minimal = std::count_if(records.begin(), records.end(),
                                            [](auto const& r) { return r.minimal_uclosed; });
        if (dump) {
          std::size_t i = 0;
          for (auto const& r : records) {
            ++i;
            if (_g.json) {
              json j = to_json(r.monoid);
              j["index"]              = i;
              j["uclosed"]            = r.uclosed;
              j["end_quord_closed"]   = r.end_quord_closed;
              j["contains_constants"] = r.contains_constants;
              j["minimal_uclosed"]    = r.minimal_uclosed;
              _out << j.dump() << '\n';
            } else {
              _out << "# monoid " << i << ": uclosed=" << yes_no(r.uclosed)
                   << " end_quord_closed=" << yes_no(r.end_quord_closed)
                   << " constants=" << yes_no(r.contains_constants)
                   << " minimal=" << yes_no(r.minimal_uclosed) << '\n'
                   << serialize(r.monoid) << '\n';
            }
          }
        }
        if (_g.json) {
          json j{{"k", k},
                 {"total", counts.total},
                 {"uclosed", counts.uclosed},
                 {"end_quord_closed", counts.end_quord_closed},
                 {"minimal_uclosed", minimal}};
          _out << j.dump() << '\n';
        } else {
          _out << "k = " << k << '\n'
               << "submonoids        " << counts.total << '\n'
               << "u-closed          " << counts.uclosed << '\n'
               << "End Quord closed  " << counts.end_quord_closed << '\n'
               << "minimal u-closed  " << minimal << '\n';
        }
        return kOk;
      }

      int paper_verify(std::vector<std::string> ids, std::ostream& err) {
        if (ids.empty() || std::find(ids.begin(), ids.end(), "all") != ids.end()) {
          ids = case_ids();
        }
        for (auto const& id : ids) {
          if (!is_case_id(id)) {
            err << "unknown case '" << id << "'; known cases: all";
            for (auto const& c : case_ids()) {
              err << ' ' << c;
            }
            err << '\n';
            return kUsage;
          }
        }
        std::size_t passed  = 0;
        json        results = json::array();
        for (auto const& id : ids) {
          auto const r = run_case(id, _g.threads);
          passed += r.pass ? 1 : 0;
          if (_g.json) {
            results.push_back(
                {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"details", r.details}});
          } else {
            _out << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.title << '\n';
            for (auto const& line : r.details) {
              _out << "  " << line << '\n';
            }
          }
        }
        if (_g.json) {
          _out << json{{"cases", results}, {"passed", passed}, {"total", ids.size()}}.dump(2)
               << '\n';
        } else {
          _out << passed << " of " << ids.size() << " cases passed\n";
        }
        return passed == ids.size() ? kOk : kFalse;
      }

     private:
      template <typename T>
      int emit(T const& x) {
        if (_g.json) {
          _out << to_json(x).dump(2) << '\n';
        } else {
          _out << serialize(x);
        }
        return kOk;
      }

      int star_test(Monoid const& m, std::string const& test) {
        Sources src;
        if (test.find(':') != std::string::npos) {
          src.funs.push_back(test);
        } else {
          src.files.push_back(test);
        }
        OpTable const        f = load_operation(src);
        std::vector<OpTable> outside;
        for (auto const& t : translations(f)) {
          if (!m.contains(t)) {
            outside.push_back(t);
          }
        }
        bool const member = outside.empty();
        if (_g.json) {
          _out << json{{"member", member}, {"translations_outside", to_json(outside)}}.dump(2)
               << '\n';
        } else {
          _out << "in M*: " << yes_no(member) << '\n';
          for (auto const& t : outside) {
            _out << "translation outside M: " << spaced(t.table()) << '\n';
          }
        }
        return member ? kOk : kFalse;
      }

      Globals const& _g;
      Sources const& _s;
      std::ostream&  _out;
    };

    void add_sources(CLI::App* cmd, Sources& s, bool monoid_flags) {
      cmd->add_option("inputs", s.files, "input files in the text format ('-' for stdin)");
      cmd->add_option("--rel", s.rels, "inline relation, e.g. \"2 3: 00 01 11\"");
      cmd->add_option("--fun", s.funs, "inline operation, e.g. \"2 2: 01 11\"");
      cmd->add_option("--mon", s.mons, "inline monoid, e.g. \"3: 012 000 111 222\"");
      cmd->add_option("--k", s.k, "universe size for empty inputs");
      if (monoid_flags) {
        cmd->add_option("--cycle", s.cycle, "the monoid <gamma_k> u C");
        cmd->add_option("--trivial", s.trivial, "the monoid T = {id} u C");
        cmd->add_option("--full", s.full, "the full monoid A^A");
      }
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized quasiorders, M* and u-closure on finite sets", "gq"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    Sources s;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--max-arity", g.max_arity, "arity bound for star, pol, xi and complete")
        ->check(CLI::Range(1, 4));
    app.add_option("--budget", g.budget, "search state budget");
    app.add_option("--threads", g.threads, "worker threads for census sweeps")
        ->check(CLI::Range(1, 256));

    Commands                  cmds(g, s, out);
    std::function<int()>      action;
    std::optional<std::size_t> arity;
    bool                       count = false;
    bool                       trace = false;
    bool                       dump  = false;
    std::string                test;
    std::size_t                census_k = 3;
    std::vector<std::string>   cases;

    auto* check = app.add_subcommand("check", "decide a property, printing a witness if false");
    check->require_subcommand(1);
    auto* c_gq = check->add_subcommand("gquord", "is the relation a generalized quasiorder");
    add_sources(c_gq, s, false);
    c_gq->callback([&] { action = [&] { return cmds.check_gquord(); }; });
    auto* c_uc = check->add_subcommand("uclosed", "is the monoid u-closed");
    add_sources(c_uc, s, true);
    c_uc->callback([&] { action = [&] { return cmds.check_uclosed(); }; });
    auto* c_xi = check->add_subcommand("xi", "compare Pol Q with (End Q)* up to --max-arity");
    add_sources(c_xi, s, false);
    c_xi->callback([&] { action = [&] { return cmds.check_xi(); }; });
    auto* c_co = check->add_subcommand("complete", "gquord-completeness evidence for operations");
    add_sources(c_co, s, false);
    c_co->callback([&] { action = [&] { return cmds.check_complete(); }; });

    auto* close = app.add_subcommand("close", "closure of a relation");
    close->require_subcommand(1);
    std::pair<char const*, ClosureMode> const modes[] = {
        {"ref", ClosureMode::reflexive},
        {"tra", ClosureMode::transitive},
        {"gqu", ClosureMode::gquord},
    };
    for (auto const& [name, mode] : modes) {
      auto* c = close->add_subcommand(name, std::string(name) + " closure");
      add_sources(c, s, false);
      c->callback([&, mode = mode] { action = [&, mode] { return cmds.close(mode); }; });
    }

    auto* part = app.add_subcommand("partial", "diagonals of all matrices with lines in rho");
    add_sources(part, s, false);
    part->callback([&] { action = [&] { return cmds.partial_cmd(); }; });

    auto* gam = app.add_subcommand("gamma", "the relation of member tables of a monoid");
    add_sources(gam, s, true);
    gam->callback([&] { action = [&] { return cmds.gamma_cmd(); }; });

    auto* u = app.add_subcommand("ucl", "u-closure of a monoid");
    add_sources(u, s, true);
    u->add_flag("--trace", trace, "print the maps adjoined at each step");
    u->callback([&] { action = [&] { return cmds.ucl_cmd(trace); }; });

    auto* st = app.add_subcommand("star", "members of M* by arity");
    add_sources(st, s, true);
    st->add_option("--arity", arity, "a single arity instead of 1..--max-arity")
        ->check(CLI::Range(1, 4));
    st->add_flag("--count", count, "print counts only");
    st->add_option("--test", test, "operation (file or inline literal) to test for membership");
    st->callback([&] { action = [&] { return cmds.star_cmd(arity, count, test); }; });

    auto* en = app.add_subcommand("end", "unary maps preserving every input relation");
    add_sources(en, s, false);
    en->callback([&] { action = [&] { return cmds.end_cmd(); }; });

    auto* po = app.add_subcommand("pol", "operations preserving every input relation");
    add_sources(po, s, false);
    po->add_option("--arity", arity, "a single arity instead of 1..--max-arity")
        ->check(CLI::Range(1, 3));
    po->add_flag("--count", count, "print counts only");
    po->callback([&] { action = [&] { return cmds.pol_cmd(arity, count); }; });

    auto* ce = app.add_subcommand("census", "classify every submonoid of A^A");
    ce->add_option("--k", census_k, "universe size")->check(CLI::Range(2, 3));
    ce->add_flag("--dump", dump, "print every monoid with its flags");
    ce->callback([&] { action = [&] { return cmds.census_cmd(census_k, dump); }; });

    auto* pv = app.add_subcommand("paper-verify", "replay the bundled worked examples");
    pv->add_option("cases", cases, "case ids or 'all'");
    pv->callback([&] { action = [&] { return cmds.paper_verify(cases, err); }; });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return kUsage;
    }

    try {
      return action ? action() : kUsage;
    } catch (CapacityError const& e) {
      err << "capacity: " << e.what() << '\n';
      return kCapacity;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }

}  // namespace gq::cli
