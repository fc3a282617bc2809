#include <catch2/catch_amalgamated.hpp>

#include "k3cover/run.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace k3cover;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string scn(const std::string& file) {
    return std::string(K3COVER_SCENARIO_DIR) + "/" + file;
}

const std::vector<std::string> shipped = {
    "six-a2.scn",        "ten-curve-chi4.scn", "case-kn-32.scn",
    "base-change-n3.scn", "split-tower.scn",    "bundle-312.scn",
};

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + K3COVER_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    CliResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, n);
    int status = pclose(p);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("scenario parsing: sections, keys, and values") {
    Scenario sc = parse_scenario(
        "# a comment-only line\n"
        "[scenario]\n"
        "name = tiny\n"
        "description = one hyperbolic plane\n"
        "[lattice]\n"
        "basis = U1 U2\n"
        "row.U1 = 0 1   # inline comment\n"
        "row.U2 = 1 0\n");
    REQUIRE(sc.name == "tiny");
    REQUIRE(sc.description == "one hyperbolic plane");
    REQUIRE(sc.has_model);
    REQUIRE(sc.model.ns.rank() == 2);
    REQUIRE(det(sc.model.ns) == -1);
    REQUIRE(sc.model.curves.empty());
    REQUIRE_FALSE(sc.cover.has_value());
}

TEST_CASE("scenario expressions: coefficients, fractions, ranges") {
    Scenario sc = parse_scenario(
        "[lattice]\n"
        "basis = H N1 N2 N3\n"
        "row.H = 2 0 0 0\n"
        "row.N1 = 0 -2 0 0\n"
        "row.N2 = 0 0 -2 0\n"
        "row.N3 = 0 0 0 -2\n"
        "glue.g = 1/2 1/2 0 0\n"
        "[divisors]\n"
        "D = 3/2 H - 1/2 N1..N3\n"
        "E = 2*D + N2\n"
        "Z = D - D\n");
    REQUIRE(sc.model.ns.glue.size() == 1);
    QVec d = {Rat(3, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)};
    REQUIRE(sc.divisors.at("D") == d);
    QVec e = {Rat(3), Rat(-1), Rat(0), Rat(-1)};
    REQUIRE(sc.divisors.at("E") == e);
    for (const Rat& c : sc.divisors.at("Z")) REQUIRE(c == 0);
}

TEST_CASE("scenario parsing errors carry their line number") {
    REQUIRE_THROWS_WITH(parse_scenario(""),
                        ContainsSubstring("missing [lattice] section"));
    REQUIRE_THROWS_WITH(parse_scenario("[misc]\n"),
                        ContainsSubstring("line 1") &&
                            ContainsSubstring("unknown section"));
    REQUIRE_THROWS_WITH(parse_scenario("x = 1\n"),
                        ContainsSubstring("inside a section"));
    REQUIRE_THROWS_WITH(parse_scenario("[lattice\n"),
                        ContainsSubstring("unterminated section header"));
    REQUIRE_THROWS_WITH(parse_scenario("[scenario]\nfoo = 1\n"),
                        ContainsSubstring("line 2") &&
                            ContainsSubstring("unknown key 'foo'"));

    const std::string base =
        "[lattice]\n"
        "basis = N1 N2\n"
        "row.N1 = -2 0\n"
        "row.N2 = 0 -2\n";
    REQUIRE_THROWS_WITH(parse_scenario(base + "[divisors]\nD = N2..N1\n"),
                        ContainsSubstring("runs backwards"));
    REQUIRE_THROWS_WITH(parse_scenario(base + "[divisors]\nD = N1..M2\n"),
                        ContainsSubstring("mixes prefixes"));
    REQUIRE_THROWS_WITH(parse_scenario(base + "[divisors]\nD = -\n"),
                        ContainsSubstring("dangling sign"));
    REQUIRE_THROWS_WITH(parse_scenario(base + "[divisors]\nD = 2 + 3\n"),
                        ContainsSubstring("expected a name"));
    REQUIRE_THROWS_WITH(parse_scenario(base + "[divisors]\nD = Q1\n"),
                        ContainsSubstring("unknown name 'Q1'"));
    REQUIRE_THROWS_WITH(
        parse_scenario(base + "[curves]\nA = N1 | bumpy\n"),
        ContainsSubstring("unknown curve flag 'bumpy'"));
    REQUIRE_THROWS_WITH(
        parse_scenario(base +
                       "[curves]\nA = N1 | rational irreducible smooth\n"
                       "A = N2\n"),
        ContainsSubstring("defined twice"));
    REQUIRE_THROWS_WITH(
        parse_scenario(base +
                       "[curves]\nA = N1 | rational irreducible smooth\n"
                       "[cover]\nB = A X\n"),
        ContainsSubstring("'X' is not a declared curve"));
    REQUIRE_THROWS_WITH(parse_scenario(base + "[facts]\nh0 = 2 over N1\n"),
                        ContainsSubstring("h0 = <count> on <expr>"));
    REQUIRE_THROWS_WITH(parse_scenario(base + "[fibers]\nfiber = I2 b3\n"),
                        ContainsSubstring("must be b1 or b2"));
    REQUIRE_THROWS_WITH(parse_scenario(base + "[extension]\nideal = 2 1 nearby\n"),
                        ContainsSubstring("unknown point geometry"));

    REQUIRE_THROWS_WITH(parse_scenario("[lattice]\nbasis = U1 U2\nrow.U1 = 0 1\n"),
                        ContainsSubstring("missing row.U2"));
    REQUIRE_THROWS_WITH(
        parse_scenario("[lattice]\nbasis = U1\nrow.U1 = 0 1\n"),
        ContainsSubstring("expected 1"));
    REQUIRE_THROWS_WITH(
        parse_scenario("[lattice]\nbasis = U1\nrow.U1 = 2\nrow.U9 = 2\n"),
        ContainsSubstring("does not match any basis name"));
}

TEST_CASE("shipped scenarios round-trip through the serializer") {
    for (const auto& file : shipped) {
        INFO(file);
        Scenario sc = load_scenario(scn(file));
        std::string text = serialize_scenario(sc);
        Scenario back = parse_scenario(text);
        REQUIRE(back == sc);
        // Serialization is a fixed point: re-serializing changes nothing.
        REQUIRE(serialize_scenario(back) == text);
    }
}

TEST_CASE("run_operation reproduces the worked six-fold configuration") {
    Scenario sc = load_scenario(scn("six-a2.scn"));

    Report inv = run_operation("cover-invariants", sc);
    REQUIRE(inv["cover"]["L2"] == -4);
    REQUIRE(inv["cover"]["M2"] == -4);
    REQUIRE(inv["cover"]["LM"] == -2);
    REQUIRE(inv["minimal_resolution"]["chi"] == 2);
    REQUIRE(inv["minimal_resolution"]["K2"] == -18);
    REQUIRE(inv["minimal_resolution"]["e"] == 42);
    REQUIRE(inv["minimal_resolution"]["q"] == 0);
    REQUIRE(inv["minimal_resolution"]["pg"] == 1);
    REQUIRE(inv["ledger"]["total"] == 18);
    REQUIRE(inv["ledger"]["complete"] == true);
    REQUIRE(inv["minimal_model"]["K2"] == 0);
    REQUIRE(inv["minimal_model"]["e"] == 24);
    REQUIRE(inv["minimal_model"]["certified"] == true);
    REQUIRE(inv["picard"]["a2_configs"] == 6);
    REQUIRE(inv["picard"]["delta_resolution"] == 18);
    REQUIRE(inv["picard"]["delta_intermediate"] == 12);

    Report cls = run_operation("cover-classify", sc);
    REQUIRE(cls["classification"]["valid"] == true);
    REQUIRE(cls["classification"]["kodaira_dimension"] == 0);
    REQUIRE(cls["classification"]["minimal_model_kind"] == "K3");

    Report li = run_operation("lattice-info", sc);
    REQUIRE(li["lattice"]["rank"] == 14);
    REQUIRE(li["lattice"]["det"] == -81);
    REQUIRE(li["lattice"]["even"] == true);
    REQUIRE(li["lattice"]["signature"] == "(1,13)");

    REQUIRE_THROWS_WITH(run_operation("no-such-op", sc),
                        ContainsSubstring("unknown operation"));
    Scenario bare = parse_scenario("[lattice]\nbasis = H\nrow.H = 2\n");
    REQUIRE_THROWS_WITH(run_operation("cover-invariants", bare),
                        ContainsSubstring("needs a [cover] or [family] section"));
}

TEST_CASE("CLI: scenario subcommands, formats, and exit codes") {
    SECTION("text output ends with a machine block that equals the json output") {
        CliResult text = run_cli("lattice-info --scenario " + scn("six-a2.scn"));
        REQUIRE(text.code == 0);
        REQUIRE_THAT(text.out, ContainsSubstring("rank"));
        std::size_t pos = text.out.rfind("machine: ");
        REQUIRE(pos != std::string::npos);
        std::string machine = text.out.substr(pos + 9);

        CliResult json = run_cli("lattice-info --format json --scenario " +
                                 scn("six-a2.scn"));
        REQUIRE(json.code == 0);
        REQUIRE(machine == json.out);

        Report rep = Report::parse(json.out);
        REQUIRE(rep["lattice"]["rank"] == 14);
        REQUIRE(rep["lattice"]["discriminant_order"] == 81);
    }

    SECTION("repeated runs are byte-identical") {
        const std::string cmd = "cover-invariants --scenario " + scn("ten-curve-chi4.scn");
        CliResult a = run_cli(cmd);
        CliResult b = run_cli(cmd);
        REQUIRE(a.code == 0);
        REQUIRE(a.out == b.out);
        REQUIRE_THAT(a.out, ContainsSubstring("minimal_model"));
    }

    SECTION("the long-form format name is an alias for json") {
        CliResult a = run_cli("base-change --format json --scenario " +
                              scn("base-change-n3.scn"));
        CliResult b = run_cli("base-change --format json-like-structured --scenario " +
                              scn("base-change-n3.scn"));
        REQUIRE(a.code == 0);
        REQUIRE(a.out == b.out);
        Report rep = Report::parse(a.out);
        REQUIRE(rep["invariants"]["chi"] == 6);
        REQUIRE(rep["invariants"]["q"] == 1);
        REQUIRE(rep["invariants"]["pg"] == 6);
        REQUIRE(rep["euler_upstairs"] == 72);
    }

    SECTION("bundle-check on the shipped extension scenario") {
        CliResult r = run_cli("bundle-check --format json --scenario " +
                              scn("bundle-312.scn"));
        REQUIRE(r.code == 0);
        Report rep = Report::parse(r.out);
        REQUIRE(rep["bundle"]["h0"] == 4);
        REQUIRE(rep["bundle"]["h1"] == 2);
        REQUIRE(rep["bundle"]["cover_verdict"] == "exists");
        REQUIRE(rep["fiber_extension"]["verdict"] == "exists (unique)");
        REQUIRE(rep["ideal_sheaf"]["h0"] == 0);
        REQUIRE(rep["ideal_sheaf"]["h1"] == 0);
    }

    SECTION("split branch data goes through cover-validate") {
        CliResult r = run_cli("cover-validate --format json --scenario " +
                              scn("split-tower.scn"));
        REQUIRE(r.code == 0);
        Report rep = Report::parse(r.out);
        REQUIRE(rep["operation"] == "cover-validate (split non-Galois)");
        REQUIRE(rep["valid"] == true);
        REQUIRE(rep["tower"].size() == 3);
    }

    SECTION("--strict turns needs-input values into failure") {
        const std::string arg = " --scenario " + scn("case-kn-32.scn");
        REQUIRE(run_cli("cover-invariants" + arg).code == 0);
        REQUIRE(run_cli("cover-invariants --strict" + arg).code == 1);
    }

    SECTION("missing and malformed inputs exit 2; failed operations exit 1") {
        REQUIRE(run_cli("lattice-info --scenario /no/such/file.scn").code == 2);

        auto bad = std::filesystem::temp_directory_path() / "k3cover-bad.scn";
        std::ofstream(bad) << "[nonsense]\n";
        REQUIRE(run_cli("lattice-info --scenario " + bad.string()).code == 2);
        std::filesystem::remove(bad);

        // Parses fine, but the operation has nothing to work on: exit 1 with
        // the error in the report.
        CliResult r = run_cli("cover-invariants --format json --scenario " +
                              scn("bundle-312.scn"));
        REQUIRE(r.code == 1);
        Report rep = Report::parse(r.out);
        REQUIRE(rep["valid"] == false);
        REQUIRE_THAT(rep["error"].get<std::string>(),
                     ContainsSubstring("[cover] or [family]"));

        REQUIRE(run_cli("frobnicate").code == 2);
        REQUIRE(run_cli("").code == 2);
    }
}

TEST_CASE("CLI: catalog subcommands") {
    SECTION("catalog-list names every entry") {
        CliResult r = run_cli("catalog-list --format json");
        REQUIRE(r.code == 0);
        Report rep = Report::parse(r.out);
        REQUIRE(rep["entries"].size() == 16);
        bool found = false;
        for (const auto& e : rep["entries"])
            if (e["name"] == "six-a2-k3") found = true;
        REQUIRE(found);
    }

    SECTION("prefix selection picks the unique match") {
        CliResult r = run_cli("catalog-run s16 --format json");
        REQUIRE(r.code == 0);
        Report rep = Report::parse(r.out);
        REQUIRE(rep["entries"].size() == 1);
        REQUIRE(rep["entries"][0]["entry"] == "s16-irregular");
        REQUIRE(rep["ok"] == true);
    }

    SECTION("ambiguous and unknown prefixes exit 2") {
        REQUIRE(run_cli("catalog-run case-kn").code == 2);
        REQUIRE(run_cli("catalog-run zz-nothing").code == 2);
    }

    SECTION("the whole catalog runs clean") {
        CliResult r = run_cli("catalog-run --all --format json");
        Report rep = Report::parse(r.out);
        REQUIRE(rep["entries"].size() == 16);
        for (const auto& e : rep["entries"])
            for (const auto& c : e["checks"]) {
                INFO(e["entry"].get<std::string>()
                     << ": " << c["check"].get<std::string>() << " "
                     << c.value("detail", ""));
                REQUIRE(c["status"] == "pass");
            }
        REQUIRE(rep["ok"] == true);
        REQUIRE(r.code == 0);
    }
}
