// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include "app.hpp"

#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "munnlab/error.hpp"
#include "munnlab/group_algebra.hpp"
#include "munnlab/module_cat.hpp"
#include "munnlab/rep_type.hpp"
#include "munnlab/valued_graph.hpp"

#include "problem_spec.hpp"

namespace munnlab::cli {

  using nlohmann::json;

  namespace {

    struct Options {
      std::string   problem_path;
      std::string   raw;
      bool          as_json = false;
      bool          as_dot  = false;
      std::uint64_t seed    = 0;
      std::string   characteristic;
      bool          split = false;
      std::string   caps  = "3/2";
      std::uint64_t census_field = 2;
      std::uint64_t budget       = default_census_budget;
      bool          force        = false;
    };

    // Everything the subcommands report on, computed once.
    struct Pipeline {
      ProblemSpec                                 spec;
      std::optional<std::uint64_t>                characteristic;
      std::vector<ReesSemigroup>                  semigroups;
      std::vector<std::vector<ComponentInvariants>> invariants;
      std::vector<TripleSet>                      part_triples;
      TripleSet                                   triples;
      std::optional<WedderburnData>               bare_group;
    };

    ProblemSpec read_problem(Options const& o) {
      if (o.problem_path.empty() == o.raw.empty()) {
        fail(ErrorKind::InvalidInput,
             "give exactly one of a problem file and --raw");
      }
      ProblemSpec spec;
      if (!o.raw.empty()) {
        spec.raw_triples = parse_triple_list(o.raw);
      } else {
        spec = load_problem(o.problem_path);
      }
      if (o.split) {
        spec.field = {CharMode::Split, std::nullopt};
      } else if (o.characteristic == "auto") {
        spec.field = {CharMode::Auto, std::nullopt};
      } else if (!o.characteristic.empty()) {
        if (o.characteristic.find_first_not_of("0123456789") != std::string::npos) {
          fail(ErrorKind::InvalidInput,
               "--char takes a prime or 'auto', got '" + o.characteristic + "'");
        }
        spec.field = {CharMode::Explicit, std::stoull(o.characteristic)};
      }
      return spec;
    }

    std::uint64_t smallest_prime(std::function<bool(std::uint64_t)> const& ok) {
      for (std::uint64_t p = 2;; ++p) {
        if (gf::is_prime(p) && ok(p)) {
          return p;
        }
      }
    }

    std::uint64_t choose_characteristic(FieldSpec const&                f,
                                        std::vector<FiniteGroup> const& groups) {
      if (f.mode == CharMode::Explicit) {
        if (!gf::is_prime(*f.characteristic)) {
          fail(ErrorKind::InvalidInput,
               "characteristic " + std::to_string(*f.characteristic)
                   + " is not prime");
        }
        return *f.characteristic;
      }
      if (groups.size() == 1) {
        return f.mode == CharMode::Auto ? auto_characteristic(groups[0])
                                        : split_characteristic(groups[0]);
      }
      std::uint64_t order = 1, exponent = 1;
      for (auto const& G : groups) {
        order    = std::lcm(order, G.order());
        exponent = std::lcm(exponent, G.exponent());
      }
      if (f.mode == CharMode::Auto) {
        return smallest_prime([&](std::uint64_t p) { return order % p != 0; });
      }
      return smallest_prime([&](std::uint64_t p) { return p % exponent == 1; });
    }

    Pipeline run_pipeline(Options const& o, bool group_only = false) {
      Pipeline pl{read_problem(o), std::nullopt, {}, {}, {}, {}, std::nullopt};
      if (pl.spec.raw_triples) {
        pl.triples = TripleSet(*pl.spec.raw_triples);
        return pl;
      }
      if (pl.spec.parts.size() == 1 && pl.spec.parts[0].sandwich.empty()) {
        if (!group_only) {
          build_semigroup(pl.spec.parts[0]);  // raises: no sandwich
        }
        FiniteGroup G     = build_group(pl.spec.parts[0].group);
        pl.characteristic = choose_characteristic(pl.spec.field, {G});
        pl.bare_group     = wedderburn(
            G, gf::Field::prime(*pl.characteristic), o.seed);
        return pl;
      }
      std::vector<FiniteGroup> groups;
      for (auto const& part : pl.spec.parts) {
        pl.semigroups.push_back(build_semigroup(part));
        groups.push_back(pl.semigroups.back().group());
      }
      std::uint64_t p   = choose_characteristic(pl.spec.field, groups);
      pl.characteristic = p;
      gf::Field F       = gf::Field::prime(p);
      for (auto const& S : pl.semigroups) {
        auto W = wedderburn(S.group(), F, o.seed);
        pl.invariants.push_back(component_invariants(S, W));
        pl.part_triples.push_back(triples(S, W));
        pl.triples.append(pl.part_triples.back());
      }
      return pl;
    }

    json triples_json(TripleSet const& T) {
      json out = json::array();
      for (auto const& t : T.triples()) {
        out.push_back({t.d, t.m, t.n});
      }
      return out;
    }

    json verdict_json(RepTypeVerdict const& v) {
      json out{{"kind", to_string(v.kind)}, {"case", v.evidence}};
      if (!v.notes.empty()) {
        out["notes"] = v.notes;
      }
      return out;
    }

    json graph_json(TripleSet const& T) {
      auto g = graph_from_triples(T);
      json vertices = json::array();
      for (std::size_t v = 0; v < g.labels().size(); ++v) {
        vertices.push_back({{"label", g.labels()[v]}, {"weight", g.weights()[v]}});
      }
      json edges = json::array();
      for (auto const& e : g.edges()) {
        edges.push_back({{"from", g.labels()[e.from]},
                         {"to", g.labels()[e.to]},
                         {"valuation", {e.d_from_to, e.d_to_from}}});
      }
      json components = json::array();
      for (auto const& c : classify_components(g)) {
        json labels = json::array();
        for (auto v : c.vertices) {
          labels.push_back(g.labels()[v]);
        }
        components.push_back({{"vertices", labels},
                              {"kind", to_string(c.kind)},
                              {"name", c.name},
                              {"corank", c.corank},
                              {"null_root", c.null_root ? json(*c.null_root)
                                                        : json(nullptr)}});
      }
      return {{"vertices", vertices}, {"edges", edges}, {"components", components}};
    }

    json base_report(std::string const& command, Pipeline const& pl,
                     Options const& o) {
      json r{{"schema_version", report_schema_version},
             {"command", command},
             {"problem", to_json(pl.spec)},
             {"seed", o.seed}};
      r["field"] = pl.characteristic
                       ? json{{"mode", to_string(pl.spec.field.mode)},
                              {"characteristic", *pl.characteristic}}
                       : json(nullptr);
      json parts = json::array();
      for (std::size_t i = 0; i < pl.semigroups.size(); ++i) {
        auto const& S    = pl.semigroups[i];
        json        comps = json::array();
        for (auto const& c : pl.invariants[i]) {
          comps.push_back({{"d", c.d}, {"c", c.c}, {"u", c.u},
                           {"r", c.r}, {"m", c.m}, {"n", c.n}});
        }
        parts.push_back({{"group", S.group().name()},
                         {"order", S.group().order()},
                         {"P", S.P()},
                         {"Q", S.Q()},
                         {"components", comps},
                         {"triples", triples_json(pl.part_triples[i])}});
      }
      r["parts"]   = parts;
      r["triples"] = triples_json(pl.triples);
      return r;
    }

    struct Verdicts {
      json json_value;
      bool agreement;
    };

    Verdicts verdicts(Pipeline const& pl) {
      auto const graph = classify_by_graph(pl.triples);
      auto const munn  = classify_munn(pl.triples);
      json       v{{"graph", {{"kind", to_string(graph.kind)}}},
                   {"munn", verdict_json(munn)},
                   {"munn_literal",
                    verdict_json(classify_munn(pl.triples, Reading::Literal))}};
      std::vector<RepType> kinds{graph.kind, munn.kind};
      if (pl.spec.raw_triples) {
        v["theorem"] = verdict_json(munn);
      } else if (!pl.spec.is_union) {
        auto rees    = classify_rees(pl.triples, pl.semigroups[0].group().order());
        v["theorem"] = verdict_json(rees);
        kinds.push_back(rees.kind);
      } else {
        std::vector<std::pair<ReesSemigroup, TripleSet>> parts;
        for (std::size_t i = 0; i < pl.semigroups.size(); ++i) {
          parts.emplace_back(pl.semigroups[i], pl.part_triples[i]);
        }
        auto U       = union_data(std::move(parts));
        auto un      = classify_union(U);
        v["theorem"] = verdict_json(un);
        v["union_literal"] = verdict_json(classify_union(U, Reading::Literal));
        kinds.push_back(un.kind);
      }
      bool agree = std::all_of(kinds.begin(), kinds.end(), [&](RepType k) {
        return k == kinds.front();
      });
      return {std::move(v), agree};
    }

    void print_components(Pipeline const& pl, std::ostream& out) {
      for (std::size_t i = 0; i < pl.semigroups.size(); ++i) {
        auto const& S = pl.semigroups[i];
        out << "part " << i + 1 << ": " << S.group().name() << ", order "
            << S.group().order() << ", " << S.P() << "x" << S.Q()
            << " sandwich\n";
        out << "  component   d   c   u   r   m   n\n";
        for (std::size_t k = 0; k < pl.invariants[i].size(); ++k) {
          auto const& c = pl.invariants[i][k];
          char        line[96];
          std::snprintf(line, sizeof line,
                        "  %9zu %3zu %3zu %3zu %3zu %3zu %3zu\n",
                        k + 1, c.d, c.c, c.u, c.r, c.m, c.n);
          out << line;
        }
      }
    }

    std::string field_line(Pipeline const& pl) {
      return "field: F_" + std::to_string(*pl.characteristic) + " ("
             + to_string(pl.spec.field.mode) + ")";
    }

    int cmd_decompose(Options const& o, std::ostream& out) {
      auto pl = run_pipeline(o, true);
      if (pl.spec.raw_triples) {
        fail(ErrorKind::InvalidInput, "decompose needs a group");
      }
      if (o.as_json) {
        auto r = base_report("decompose", pl, o);
        if (pl.bare_group) {
          auto const& G     = pl.bare_group->algebra->group();
          json        comps = json::array();
          for (auto const& c : pl.bare_group->components) {
            comps.push_back({{"d", c.d}, {"c", c.c}, {"u", c.u}});
          }
          r["parts"] = json::array({{{"group", G.name()},
                                     {"order", G.order()},
                                     {"components", comps}}});
        }
        out << r.dump(2) << "\n";
        return exit_ok;
      }
      out << field_line(pl) << "\n";
      if (pl.bare_group) {
        auto const& G = pl.bare_group->algebra->group();
        out << G.name() << ", order " << G.order() << ", "
            << pl.bare_group->class_count << " classes\n"
            << "  component   d   c   u\n";
        for (std::size_t k = 0; k < pl.bare_group->components.size(); ++k) {
          auto const& c = pl.bare_group->components[k];
          char        line[64];
          std::snprintf(line, sizeof line, "  %9zu %3zu %3zu %3zu\n", k + 1,
                        c.d, c.c, c.u);
          out << line;
        }
      }
      print_components(pl, out);
      return exit_ok;
    }

    int cmd_classify(Options const& o, std::ostream& out) {
      auto pl = run_pipeline(o);
      auto v  = verdicts(pl);
      if (o.as_json) {
        auto r         = base_report("classify", pl, o);
        r["graph"]     = graph_json(pl.triples);
        r["verdicts"]  = v.json_value;
        r["agreement"] = v.agreement;
        out << r.dump(2) << "\n";
      } else {
        if (pl.characteristic) {
          out << field_line(pl) << "\n";
          print_components(pl, out);
        }
        out << "triples: " << pl.triples.to_string() << "\n";
        auto g = graph_from_triples(pl.triples);
        for (auto const& c : classify_components(g)) {
          out << "graph component";
          for (auto x : c.vertices) {
            out << " " << g.labels()[x];
          }
          out << ": " << c.name << " (" << to_string(c.kind) << ")\n";
        }
        auto const& th = v.json_value["theorem"];
        out << "theorem " << th["case"].get<std::string>() << ": "
            << th["kind"].get<std::string>() << "\n";
        if (th.contains("notes")) {
          out << "  note: " << th["notes"].get<std::string>() << "\n";
        }
        out << "graph: " << v.json_value["graph"]["kind"].get<std::string>()
            << "\n";
        out << "agreement: " << (v.agreement ? "yes" : "no") << "\n";
      }
      return v.agreement ? exit_ok : exit_disagreement;
    }

    int cmd_graph(Options const& o, std::ostream& out) {
      auto pl = run_pipeline(o);
      if (o.as_dot) {
        out << to_dot(graph_from_triples(pl.triples));
      } else if (o.as_json) {
        auto r     = base_report("graph", pl, o);
        r["graph"] = graph_json(pl.triples);
        out << r.dump(2) << "\n";
      } else {
        auto g = graph_from_triples(pl.triples);
        for (auto const& e : g.edges()) {
          out << g.labels()[e.from] << " -> " << g.labels()[e.to] << " ("
              << e.d_from_to << "," << e.d_to_from << ")\n";
        }
        for (auto const& c : classify_components(g)) {
          out << c.name << " " << to_string(c.kind) << " corank " << c.corank
              << "\n";
        }
      }
      return exit_ok;
    }

    DimCaps parse_caps(std::string const& text) {
      auto slash = text.find('/');
      if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()
          || text.find_first_not_of("0123456789/") != std::string::npos
          || text.find('/', slash + 1) != std::string::npos) {
        fail(ErrorKind::InvalidInput, "--caps takes V0/Vk, e.g. 3/2");
      }
      return {std::stoul(text.substr(0, slash)), std::stoul(text.substr(slash + 1))};
    }

    int cmd_census(Options const& o, std::ostream& out) {
      auto    pl   = run_pipeline(o);
      DimCaps caps = parse_caps(o.caps);
      auto    g    = graph_from_triples(pl.triples);
      bool    dynkin = true;
      for (auto const& c : classify_components(g)) {
        dynkin = dynkin && c.kind == GraphKind::Dynkin;
      }
      if (!dynkin && !o.force) {
        fail(ErrorKind::InvalidInput,
             "census refused: the graph of " + pl.triples.to_string()
                 + " is not a union of Dynkin diagrams (use --force)");
      }
      auto census = enumerate_indecomposables(pl.triples, caps, o.census_field,
                                              o.budget);
      auto roots  = positive_real_roots(g);
      std::optional<std::size_t> expected;
      if (!roots.truncated) {
        expected = roots.roots.size() - 2 + 1;
      }
      bool match = expected && *expected == census.size();
      if (o.as_json) {
        json dims = json::array();
        for (auto const& V : census) {
          json d = json::array({V.v0_dim});
          for (auto t : V.vk_dim) {
            d.push_back(t);
          }
          dims.push_back(d);
        }
        auto r      = base_report("census", pl, o);
        r["census"] = {{"field", o.census_field},
                       {"caps", {caps.v0, caps.vk}},
                       {"count", census.size()},
                       {"expected", expected ? json(*expected) : json(nullptr)},
                       {"match", match},
                       {"dimension_vectors", dims}};
        out << r.dump(2) << "\n";
      } else {
        out << "triples: " << pl.triples.to_string() << "\n"
            << "census over F_" << o.census_field << ", caps " << caps.v0 << "/"
            << caps.vk << ": " << census.size() << " indecomposables\n";
        for (auto const& V : census) {
          out << "  dim V_0 = " << V.v0_dim;
          for (std::size_t k = 0; k < V.vk_dim.size(); ++k) {
            out << ", V_" << k + 1 << " = " << V.vk_dim[k];
          }
          out << "\n";
        }
        out << "expected from roots: "
            << (expected ? std::to_string(*expected) : std::string("n/a"))
            << (match ? " (match)" : " (no match)") << "\n";
      }
      return exit_ok;
    }

    int cmd_selfcheck(std::ostream& out) {
      bool all = true;
      auto line = [&](bool ok, std::string const& what) {
        out << (ok ? "ok   " : "FAIL ") << what << "\n";
        all = all && ok;
      };
      std::size_t disagreements = 0, sets = 0;
      for (auto const& T : enumerate_triple_sets(6, 3)) {
        ++sets;
        disagreements += classify_munn(T).kind != classify_by_graph(T).kind;
      }
      line(disagreements == 0,
           "classifier agreement on " + std::to_string(sets) + " triple sets");
      line(enumerate_indecomposables(TripleSet({{1, 1, 1}}), {3, 2}, 2).size() == 5,
           "census {(1,1,1)} = 5");
      line(enumerate_indecomposables(TripleSet({{1, 1, 0}}), {2, 2}, 2).size() == 3,
           "census {(1,1,0)} = 3");
      auto cs = classify_components(graph_from_triples(TripleSet({{2, 1, 1}})));
      line(cs.size() == 1 && cs[0].kind == GraphKind::Euclidean
               && cs[0].null_root == std::vector<std::int64_t>{1, 1, 1},
           "Euclidean witness {(2,1,1)}");
      return all ? exit_ok : exit_disagreement;
    }

    int exit_code_for(ErrorKind kind) {
      switch (kind) {
        case ErrorKind::ModularCase:
          return exit_modular;
        case ErrorKind::BudgetExceeded:
          return exit_budget;
        case ErrorKind::InternalInvariantViolation:
          return exit_internal;
        default:
          return exit_invalid_input;
      }
    }

    void add_common(CLI::App* sub, Options& o, bool dot) {
      sub->add_option("problem", o.problem_path, "problem file (.toml or .json)");
      sub->add_option("--raw", o.raw, "raw triple set, e.g. \"(1,1,1),(2,1,0)\"");
      sub->add_flag("--json", o.as_json, "machine-readable report");
      sub->add_option("--seed", o.seed, "seed for all randomness");
      sub->add_option("--char", o.characteristic, "characteristic: a prime or auto");
      sub->add_flag("--split", o.split,
                    "smallest prime congruent to 1 mod the group exponent");
      if (dot) {
        sub->add_flag("--dot", o.as_dot, "Graphviz output");
      }
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"munnlab - representation types of Munn algebras and Rees "
                 "matrix semigroups",
                 "munnlab"};
    app.require_subcommand(1);
    Options o;
    auto*   decompose = app.add_subcommand("decompose", "Wedderburn components");
    auto*   classify  = app.add_subcommand("classify", "representation type");
    auto*   graph     = app.add_subcommand("graph", "valued graph");
    auto*   census    = app.add_subcommand("census", "indecomposables over F_2 or F_3");
    auto*   selfcheck = app.add_subcommand("selfcheck", "quick internal checks");
    add_common(decompose, o, false);
    add_common(classify, o, false);
    add_common(graph, o, true);
    add_common(census, o, false);
    census->add_option("--caps", o.caps, "dimension caps V0/Vk")
        ->capture_default_str();
    census->add_option("--census-field", o.census_field, "2 or 3")
        ->capture_default_str();
    census->add_option("--budget", o.budget, "maximum map tuples")
        ->capture_default_str();
    census->add_flag("--force", o.force, "run on non-Dynkin graphs");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << e.what() << "\n";
      return exit_invalid_input;
    }

    try {
      if (decompose->parsed()) {
        return cmd_decompose(o, out);
      }
      if (classify->parsed()) {
        return cmd_classify(o, out);
      }
      if (graph->parsed()) {
        return cmd_graph(o, out);
      }
      if (census->parsed()) {
        return cmd_census(o, out);
      }
      if (selfcheck->parsed()) {
        return cmd_selfcheck(out);
      }
    } catch (Error const& e) {
      err << "munnlab: " << e.what() << "\n";
      return exit_code_for(e.kind());
    } catch (std::exception const& e) {
      err << "munnlab: " << e.what() << "\n";
      return exit_internal;
    }
    return exit_internal;
  }

}  // namespace munnlab::cli
