#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hntau/cli.hpp>

#include <sstream>
#include <string>

using namespace hntau;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(RunConfig cfg) {
    std::ostringstream out, err;
    int code = dispatch(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig base(Command cmd, Format fmt = Format::Json) {
    RunConfig cfg;
    cfg.kupisch = {1, 2};
    cfg.d = 2;
    cfg.command = cmd;
    cfg.format = fmt;
    return cfg;
}

}  // namespace

TEST_CASE("class selector parsing") {
    CHECK(parse_class_selector("(0,0,1);(0,1,1)") ==
          std::vector<Tuple>{{0, 0, 1}, {0, 1, 1}});
    CHECK(parse_class_selector("0,0,1;0,1,1") == std::vector<Tuple>{{0, 0, 1}, {0, 1, 1}});
    CHECK(parse_class_selector(" (1, 1, 1) ") == std::vector<Tuple>{{1, 1, 1}});
    CHECK(parse_class_selector("").empty());
    CHECK_THROWS(parse_class_selector("(0,x,1)"));
}

TEST_CASE("markdown table for the running example matches the frozen layout") {
    RunConfig cfg = base(Command::Table, Format::Md);
    RunResult r = run(cfg);
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "| class | minimal torsion class | pair | complex |\n"
          "|---|---|---|---|\n"
          "| 0 | 0 | (0, 3⊕2/3⊕1/2) | 3⊕2/3⊕1/2 → 0 → 0 |\n"
          "| 1 | 1 | (1, 3⊕2/3) | 3⊕3⊕2/3 → 2/3 → 1/2 |\n"
          "| 1/2⊕1 | 1/2⊕1 | (1/2⊕1, 3) | 3⊕3 → 2/3 → 1/2⊕1/2 |\n"
          "| 2/3⊕1/2⊕1 | 2/3⊕2⊕1/2⊕1 | (2/3⊕1/2⊕1, 0) | 3 → 2/3 → 2/3⊕1/2⊕1/2 |\n"
          "| 3 | 3 | (3, 2/3⊕1/2) | 2/3⊕1/2 → 0 → 3 |\n"
          "| 3⊕2/3⊕1/2⊕1 | 3⊕2/3⊕2⊕1/2⊕1 | (3⊕2/3⊕1/2, 0) | 0 → 0 → 3⊕2/3⊕1/2 |\n");
}

TEST_CASE("silting markdown reproduces the six complexes") {
    RunResult r = run(base(Command::Silting, Format::Md));
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("| 1 | (1, 3⊕2/3) | 3⊕3⊕2/3 → 2/3 → 1/2 |") != std::string::npos);
    CHECK(r.out.find("| 3 | (3, 2/3⊕1/2) | 2/3⊕1/2 → 0 → 3 |") != std::string::npos);
    CHECK(r.out.find("| 0 | (0, 3⊕2/3⊕1/2) | 3⊕2/3⊕1/2 → 0 → 0 |") != std::string::npos);
}

TEST_CASE("dot output lists nodes and cover edges only") {
    RunResult r = run(base(Command::Enumerate, Format::Dot));
    CHECK(r.code == kExitOk);
    CHECK(r.out.substr(0, 16) == "digraph lattice ");
    // 6 nodes; covers are the two chains 0<{1}<{1/2,1}<{2/3,1/2,1}<M and
    // 0<{3}<M, giving 6 edges
    int nodes = 0, edges = 0;
    std::istringstream is(r.out);
    std::string line;
    while (std::getline(is, line)) {
        if (line.find("label=") != std::string::npos) ++nodes;
        if (line.find("->") != std::string::npos) ++edges;
    }
    CHECK(nodes == 6);
    CHECK(edges == 6);
}

TEST_CASE("csv output carries pairs per class") {
    RunResult r = run(base(Command::Enumerate, Format::Csv));
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("index,size,members,module_part,proj_part\n") == 0);
    CHECK(r.out.find("\"(0,1,1);(1,1,1)\",\"(0,1,1);(1,1,1)\",\"(0,0,0)\"") !=
          std::string::npos);
}

TEST_CASE("json enumerate output round-trips through the class selector") {
    RunResult enumerated = run(base(Command::Enumerate, Format::Json));
    REQUIRE(enumerated.code == kExitOk);
    Json lattice = Json::parse(enumerated.out);
    CHECK(lattice["algebra"]["kupisch"] == Json::array({1, 2}));
    CHECK(lattice["algebra"]["d"] == 2);
    REQUIRE(lattice["nodes"].size() == 6);

    RunResult all = run(base(Command::Silting, Format::Json));
    REQUIRE(all.code == kExitOk);
    Json all_json = Json::parse(all.out);
    REQUIRE(all_json["classes"].size() == 6);

    for (size_t i = 0; i < lattice["nodes"].size(); ++i) {
        RunConfig cfg = base(Command::Silting, Format::Json);
        cfg.cls = tuples_from_json(lattice["nodes"][i]);
        RunResult one = run(cfg);
        REQUIRE(one.code == kExitOk);
        Json one_json = Json::parse(one.out);
        REQUIRE(one_json["classes"].size() == 1);
        CHECK(one_json["classes"][0] == all_json["classes"][i]);
    }
}

TEST_CASE("complex json exposes per-degree tuples and rational differentials") {
    RunConfig cfg = base(Command::Silting, Format::Json);
    cfg.cls = std::vector<Tuple>{{0, 1, 1}, {1, 1, 1}};
    RunResult r = run(cfg);
    REQUIRE(r.code == kExitOk);
    Json j = Json::parse(r.out);
    const Json& cpx = j["classes"][0]["complex"];
    CHECK(cpx["degrees"]["-2"] == Json::parse("[[0,0,0],[0,0,0]]"));
    CHECK(cpx["degrees"]["-1"] == Json::parse("[[0,0,1]]"));
    CHECK(cpx["degrees"]["0"] == Json::parse("[[0,1,1],[0,1,1]]"));
    CHECK(cpx["display"] == "3⊕3 → 2/3 → 1/2⊕1/2");
    CHECK(cpx["diffs"].size() == 2);
}

TEST_CASE("deterministic output across runs") {
    for (Format fmt : {Format::Json, Format::Csv, Format::Dot, Format::Md}) {
        RunResult a = run(base(Command::Enumerate, fmt));
        RunResult b = run(base(Command::Enumerate, fmt));
        CHECK(a.out == b.out);
    }
}

TEST_CASE("usage errors exit with code 2") {
    RunConfig cfg = base(Command::Enumerate);
    cfg.kupisch = {2, 1};
    CHECK(run(cfg).code == kExitUsage);

    cfg = base(Command::Enumerate);
    cfg.d = 1;
    CHECK(run(cfg).code == kExitUsage);
    cfg.allow_d1 = true;
    CHECK(run(cfg).code == kExitOk);

    cfg = base(Command::Enumerate);
    cfg.d = 0;
    CHECK(run(cfg).code == kExitUsage);

    cfg = base(Command::Pair, Format::Dot);
    CHECK(run(cfg).code == kExitUsage);

    cfg = base(Command::Enumerate);
    cfg.kupisch = {1, 2, 3};
    cfg.tiny = true;  // branching quiver
    CHECK(run(cfg).code == kExitUsage);

    cfg = base(Command::Pair);
    cfg.cls = std::vector<Tuple>{{9, 9, 9}};
    CHECK(run(cfg).code == kExitUsage);
}

TEST_CASE("a non-closed class selector is a verification failure") {
    RunConfig cfg = base(Command::Pair);
    cfg.cls = std::vector<Tuple>{{0, 0, 0}, {0, 0, 1}};
    RunResult r = run(cfg);
    CHECK(r.code == kExitVerifyFail);
    CHECK(r.err.find("T1") != std::string::npos);
}

TEST_CASE("degenerate but legal input: d = 3 over kupisch (1,2)") {
    RunConfig cfg = base(Command::Enumerate);
    cfg.d = 3;
    RunResult r = run(cfg);
    CHECK(r.code == kExitOk);
    Json j = Json::parse(r.out);
    CHECK(j["algebra"]["d"] == 3);
    CHECK(j["nodes"].size() >= 1);
}

TEST_CASE("verify passes on the running example and supports workers") {
    RunConfig cfg = base(Command::Verify);
    cfg.tiny = true;
    RunResult r = run(cfg);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("verify: all checks passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    cfg.jobs = 4;
    RunResult r2 = run(cfg);
    CHECK(r2.code == kExitOk);
    CHECK(r2.out == r.out);
}

TEST_CASE("verify passes on a branching algebra") {
    RunConfig cfg = base(Command::Verify);
    cfg.kupisch = {1, 2, 3};
    RunResult r = run(cfg);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("verify: all checks passed") != std::string::npos);
}
