// munnlab - representation types of Munn algebras and Rees matrix semigroups

#include <fstream>
#include <random>
#include <sstream>

#include "catch_amalgamated.hpp"

#include "app.hpp"
#include "json.hpp"
#include "problem_spec.hpp"

#include "munnlab/error.hpp"

namespace munnlab::cli {

  namespace {
    using nlohmann::json;

    struct Outcome {
      int         code;
      std::string out;
      std::string err;
    };

    Outcome invoke(std::vector<std::string> const& args) {
      std::ostringstream out, err;
      int                code = run(args, out, err);
      return {code, out.str(), err.str()};
    }

    std::string worked(std::string const& name) {
      return std::string(MUNNLAB_SOURCE_DIR) + "/worked/" + name;
    }

    std::string write_temp(std::string const& name, std::string const& text) {
      auto path = std::string(MUNNLAB_BINARY_DIR) + "/" + name;
      std::ofstream(path) << text;
      return path;
    }

    json report(std::vector<std::string> args) {
      args.push_back("--json");
      auto o = invoke(args);
      INFO(o.err);
      REQUIRE(o.code == exit_ok);
      return json::parse(o.out);
    }

    json random_problem(std::mt19937_64& rng) {
      std::vector<std::string> groups{"cyclic(1)", "cyclic(2)", "cyclic(3)",
                                      "symmetric(3)", "dihedral(4)"};
      auto sandwich = [&] {
        std::size_t P = 1 + rng() % 3, Q = 1 + rng() % 3;
        json        rows = json::array();
        for (std::size_t i = 0; i < P; ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < Q; ++j) {
            row.push_back(rng() % 2 ? "e" : "0");
          }
          rows.push_back(row);
        }
        rows[0][0] = "e";
        return rows;
      };
      json f;
      switch (rng() % 3) {
        case 0:
          f = {{"char", 7}};
          break;
        case 1:
          f = {{"mode", "split"}};
          break;
        default:
          f = json::object();
      }
      json doc{{"field", f}};
      switch (rng() % 3) {
        case 0:
          doc["group"]    = {{"builtin", groups[rng() % groups.size()]}};
          doc["sandwich"] = sandwich();
          break;
        case 1: {
          json parts = json::array();
          for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) {
            parts.push_back({{"group", {{"builtin", groups[rng() % groups.size()]}}},
                             {"sandwich", sandwich()}});
          }
          doc["parts"] = parts;
          break;
        }
        default: {
          json ts = json::array();
          for (std::size_t i = 0, n = rng() % 4; i < n; ++i) {
            ts.push_back({1 + rng() % 3, 1 + rng() % 2, rng() % 3});
          }
          doc["raw_triples"] = ts;
        }
      }
      return doc;
    }
  }  // namespace

  TEST_CASE("problem specs re-serialize canonically", "[cli][property]") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
      auto doc       = random_problem(rng);
      auto canonical = to_json(parse_json(doc));
      CHECK(to_json(parse_json(canonical)) == canonical);
      CHECK(canonical.dump() == to_json(parse_json(json::parse(canonical.dump()))).dump());
    }
  }

  TEST_CASE("TOML and JSON inputs agree", "[cli]") {
    auto from_toml = to_json(load_problem(worked("c2_tame.toml")));
    auto json_path = write_temp("c2_tame.json", from_toml.dump());
    CHECK(to_json(load_problem(json_path)) == from_toml);
    CHECK(from_toml["field"] == json{{"mode", "explicit"}, {"char", 5}});
    CHECK(from_toml["group"]["builtin"] == "cyclic(2)");
  }

  TEST_CASE("malformed problems are rejected", "[cli]") {
    auto kind_of = [](json const& doc) {
      try {
        parse_json(doc);
      } catch (Error const& e) {
        return e.kind();
      }
      return ErrorKind::InternalInvariantViolation;
    };
    CHECK(kind_of({{"raw_triples", {{1, 1, 1}}}, {"extra", 1}})
          == ErrorKind::InvalidInput);
    CHECK(kind_of({{"raw_triples", {{1, 1, 1}}},
                   {"group", {{"builtin", "cyclic(2)"}}},
                   {"sandwich", {{"e"}}}})
          == ErrorKind::InvalidInput);
    CHECK(kind_of({{"raw_triples", {{1, 0, 0}}}}) == ErrorKind::InvalidInput);
    CHECK(kind_of({{"field", {{"mode", "auto"}, {"char", 5}}},
                   {"raw_triples", json::array()}})
          == ErrorKind::InvalidInput);

    auto bad_entry = write_temp(
        "bad_entry.toml",
        "sandwich = [[\"x\"]]\n[group]\nbuiltin = \"cyclic(2)\"\n");
    CHECK(invoke({"classify", bad_entry}).code == exit_invalid_input);
    auto bad_toml = write_temp("bad.toml", "sandwich = [[\n");
    CHECK(invoke({"classify", bad_toml}).code == exit_invalid_input);
    CHECK(invoke({"classify", "/nonexistent.toml"}).code == exit_invalid_input);
    CHECK(invoke({"classify", "--raw", "(1,1"}).code == exit_invalid_input);
    CHECK(invoke({}).code == exit_invalid_input);
  }

  TEST_CASE("triple lists", "[cli]") {
    CHECK(parse_triple_list("{(1,1,1),(2,1,0)}") == std::vector<Triple>{{1, 1, 1}, {2, 1, 0}});
    CHECK(parse_triple_list(" ( 1 , 2 , 2 ) ") == std::vector<Triple>{{1, 2, 2}});
    CHECK(parse_triple_list("{}").empty());
    CHECK_THROWS_AS(parse_triple_list("(1,1)"), Error);
    CHECK_THROWS_AS(parse_triple_list("(0,1,1)"), Error);
  }

  TEST_CASE("decompose examples", "[cli]") {
    auto c3 = write_temp("c3.toml", "[group]\nbuiltin = \"cyclic(3)\"\n[field]\nchar = 5\n");
    auto r  = report({"decompose", c3});
    auto const& comps = r["parts"][0]["components"];
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == json{{"d", 1}, {"c", 1}, {"u", 1}});
    CHECK(comps[1] == json{{"d", 2}, {"c", 1}, {"u", 2}});

    auto split = report({"decompose", c3, "--split"});
    CHECK(split["field"]["characteristic"] == 7);
    CHECK(split["parts"][0]["components"].size() == 3);

    auto s3 = write_temp("s3.toml", "[group]\nbuiltin = \"symmetric(3)\"\n[field]\nchar = 3\n");
    CHECK(invoke({"decompose", s3}).code == exit_modular);
    CHECK(invoke({"decompose", "--raw", "(1,1,1)"}).code == exit_invalid_input);
    CHECK(invoke({"classify", c3}).code == exit_invalid_input);
  }

  TEST_CASE("classify examples", "[cli]") {
    auto c1 = report({"classify", worked("c1_finite.toml")});
    CHECK(c1["verdicts"]["theorem"] == json{{"kind", "Finite"}, {"case", "3.3(1a)"}});
    CHECK(c1["graph"]["components"][0]["name"] == "A3");
    CHECK(c1["agreement"] == true);

    auto c2 = report({"classify", worked("c2_tame.toml")});
    CHECK(c2["verdicts"]["theorem"] == json{{"kind", "Tame"}, {"case", "3.3(2a)"}});
    CHECK(c2["triples"] == json{{1, 1, 1}, {1, 1, 1}});

    auto wild = report({"classify", worked("raw_wild.toml")});
    CHECK(wild["verdicts"]["theorem"]["kind"] == "Wild");
    CHECK(wild["verdicts"]["graph"]["kind"] == "Wild");

    auto gap = report({"classify", "--raw", "(1,2,0),(1,0,1)"});
    CHECK(gap["verdicts"]["theorem"]["case"] == "2.3(2a*)");
    CHECK(gap["verdicts"]["munn_literal"]["kind"] == "Wild");
    CHECK(gap["agreement"] == true);

    auto text = invoke({"classify", worked("c1_finite.toml")});
    CHECK(text.code == exit_ok);
    CHECK(text.out.find("theorem 3.3(1a): Finite") != std::string::npos);
  }

  TEST_CASE("unions classify through the union case analysis", "[cli]") {
    auto path = write_temp("union.toml",
                           "[field]\nchar = 5\n"
                           "[[parts]]\nsandwich = [[\"e\", \"e\"]]\n"
                           "[parts.group]\nbuiltin = \"cyclic(1)\"\n"
                           "[[parts]]\nsandwich = [[\"e\"], [\"e\"]]\n"
                           "[parts.group]\nbuiltin = \"cyclic(2)\"\n");
    auto r = report({"classify", path});
    CHECK(r["parts"].size() == 2);
    CHECK(r["verdicts"]["theorem"]["case"].get<std::string>().rfind("3.4", 0) == 0);
    CHECK(r["agreement"] == true);
  }

  TEST_CASE("graph examples", "[cli]") {
    auto a3 = invoke({"graph", "--raw", "(1,1,1)", "--dot"});
    CHECK(a3.out
          == "digraph munn {\n"
             "  \"+\" [label=\"+\", weight_f=1];\n"
             "  \"-\" [label=\"-\", weight_f=1];\n"
             "  \"k1\" [label=\"k1\", weight_f=1];\n"
             "  \"k1\" -> \"+\" [label=\"(1,1)\"];\n"
             "  \"-\" -> \"k1\" [label=\"(1,1)\"];\n"
             "}\n");
    auto b = invoke({"graph", "--raw", "(2,1,1)", "--dot"});
    CHECK(b.out.find("[label=\"(1,2)\"]") != std::string::npos);
    CHECK(b.out.find("[label=\"(2,1)\"]") != std::string::npos);
    auto empty = report({"graph", "--raw", "{}"});
    CHECK(empty["graph"]["vertices"].size() == 2);
    CHECK(empty["graph"]["edges"].empty());
    CHECK(empty["graph"]["components"].size() == 2);
  }

  TEST_CASE("census examples", "[cli]") {
    auto a3 = report({"census", "--raw", "(1,1,1)", "--caps", "3/2"});
    CHECK(a3["census"]["count"] == 5);
    CHECK(a3["census"]["expected"] == 5);
    CHECK(a3["census"]["match"] == true);
    auto a2 = report({"census", "--raw", "(1,1,0)", "--caps", "2/2"});
    CHECK(a2["census"]["count"] == 3);
    CHECK(a2["census"]["expected"] == 3);
    CHECK(invoke({"census", "--raw", "(2,1,1)"}).code == exit_invalid_input);
    CHECK(invoke({"census", "--raw", "(2,1,1)", "--force", "--caps", "3/3"}).code
          == exit_budget);
    CHECK(invoke({"census", "--raw", "(1,1,1)", "--caps", "3"}).code
          == exit_invalid_input);
  }

  TEST_CASE("reports are byte-stable and seed-independent in content",
            "[cli][property]") {
    for (auto const& name : {"c1_finite.toml", "c2_tame.toml", "raw_wild.toml"}) {
      auto first  = invoke({"classify", worked(name), "--json"});
      auto second = invoke({"classify", worked(name), "--json"});
      CHECK(first.out == second.out);
      auto seeded = json::parse(invoke({"classify", worked(name), "--json", "--seed", "9"}).out);
      auto plain  = json::parse(first.out);
      CHECK(seeded["verdicts"] == plain["verdicts"]);
      CHECK(seeded["triples"] == plain["triples"]);
      CHECK(seeded["seed"] == 9);
    }
  }

  TEST_CASE("selfcheck passes", "[cli]") {
    auto o = invoke({"selfcheck"});
    CHECK(o.code == exit_ok);
    CHECK(o.out.find("FAIL") == std::string::npos);
  }

}  // namespace munnlab::cli
