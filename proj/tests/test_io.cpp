#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "algroup/io.hpp"
#include "algroup/report.hpp"

using namespace algroup;

namespace {

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("builtin specs") {
  SUBCASE("u:3:2") {
    Algebra A = parse_builtin("u:3:2");
    CHECK(A.dim() == 3);
    CHECK(A.field().q() == 2);
    CHECK(A.name() == "u3(2)");
  }
  SUBCASE("u:3:4 picks up the prime power") {
    Algebra A = parse_builtin("u:3:4");
    CHECK(A.field().p() == 2);
    CHECK(A.field().e() == 2);
  }
  SUBCASE("trunc:3:3") {
    Algebra A = parse_builtin("trunc:3:3");
    CHECK(A.dim() == 2);
    CHECK(A.field().q() == 3);
  }
  SUBCASE("pattern:2:1-2,2-4,1-4,3-4") {
    Algebra A = parse_builtin("pattern:2:1-2,2-4,1-4,3-4");
    CHECK(A.dim() == 4);
  }
  SUBCASE("rejects") {
    CHECK_THROWS_AS(parse_builtin("u:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_builtin("u:3:6"), std::invalid_argument);  // 6 not a prime power
    CHECK_THROWS_AS(parse_builtin("ring:3:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_builtin("pattern:2:1-2,2-3"), std::invalid_argument);  // not closed
  }
  CHECK(looks_like_builtin("u:2:2"));
  CHECK(!looks_like_builtin("algebra.alg"));
}

TEST_CASE("algebra file: happy path") {
  TempFile file("io_ok.alg",
                "# truncated polynomial algebra\n"
                "name trunc 3 3\n"
                "p 3\n"
                "e 1\n"
                "dim 2\n"
                "1 1 -> 2:1\n");
  Algebra A = parse_algebra_file(file.path);
  CHECK(A.dim() == 2);
  CHECK(A.name() == "trunc 3 3");
  CHECK(A.mul(FqVec{1, 0}, FqVec{1, 0}) == FqVec{0, 1});
  CHECK(A.mul(FqVec{0, 1}, FqVec{0, 1}) == A.zero());
}

TEST_CASE("algebra file: u_3(2) with explicit products") {
  TempFile file("io_u32.alg",
                "p 2\n"
                "e 1\n"
                "dim 3\n"
                "1 2 -> 3:1\n"
                "2 1 ->\n");
  Algebra A = parse_algebra_file(file.path);
  CHECK(A.mul(FqVec{1, 0, 0}, FqVec{0, 1, 0}) == FqVec{0, 0, 1});
}

TEST_CASE("algebra file: custom modulus for F_4") {
  TempFile file("io_f4.alg",
                "p 2\n"
                "e 2\n"
                "modulus 1 1 1\n"
                "dim 1\n");
  Algebra A = parse_algebra_file(file.path);
  CHECK(A.field().q() == 4);
}

TEST_CASE("algebra file errors carry line context") {
  SUBCASE("bad index") {
    TempFile file("io_badidx.alg", "p 2\ne 1\ndim 2\n1 5 -> 1:1\n");
    CHECK_THROWS_WITH_AS(parse_algebra_file(file.path), doctest::Contains("io_badidx.alg:4"),
                         std::invalid_argument);
  }
  SUBCASE("bad coefficient") {
    TempFile file("io_badcoeff.alg", "p 2\ne 1\ndim 2\n1 1 -> 2:5\n");
    CHECK_THROWS_WITH_AS(parse_algebra_file(file.path), doctest::Contains("out of range"),
                         std::invalid_argument);
  }
  SUBCASE("not nilpotent") {
    TempFile file("io_idem.alg", "p 2\ne 1\ndim 1\n1 1 -> 1:1\n");
    CHECK_THROWS_WITH_AS(parse_algebra_file(file.path), doctest::Contains("not nilpotent"),
                         std::invalid_argument);
  }
  SUBCASE("missing dim") {
    TempFile file("io_nodim.alg", "p 2\ne 1\n");
    CHECK_THROWS_AS(parse_algebra_file(file.path), std::invalid_argument);
  }
  SUBCASE("malformed line") {
    TempFile file("io_junk.alg", "p 2\ne 1\ndim 1\nwhat is this\n");
    CHECK_THROWS_WITH_AS(parse_algebra_file(file.path), doctest::Contains("io_junk.alg:4"),
                         std::invalid_argument);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_WITH_AS(parse_algebra_file("no_such_file.alg"), doctest::Contains("cannot open"),
                         std::invalid_argument);
  }
}

TEST_CASE("load_algebra dispatches between builtin and file") {
  CHECK(load_algebra("trunc:2:3").dim() == 2);
  TempFile file("io_dispatch.alg", "p 2\ne 1\ndim 1\n");
  CHECK(load_algebra(file.path).dim() == 1);
}

TEST_CASE("rendering is deterministic across fresh sessions") {
  Context a(parse_builtin("u:3:2"));
  Context b(parse_builtin("u:3:2"));
  CHECK(render_orbits_text(a) == render_orbits_text(b));
  CHECK(render_table_text(a) == render_table_text(b));
  CHECK(table_csv(a) == table_csv(b));
  CHECK(report_json(a, "table", nullptr, nullptr, true) ==
        report_json(b, "table", nullptr, nullptr, true));
}

TEST_CASE("threaded character computation matches single-threaded output") {
  Options threaded;
  threaded.threads = 4;
  Context a(parse_builtin("u:4:2"));
  Context b(parse_builtin("u:4:2"), threaded);
  CHECK(render_table_text(a) == render_table_text(b));
}

TEST_CASE("JSON report structure and cell consistency") {
  Context ctx(parse_builtin("u:3:2"));
  CertifiedTable cert = certify_irreducible_table(ctx);
  auto doc = nlohmann::json::parse(report_json(ctx, "verify", &cert, nullptr, true));
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "verify");
  CHECK(doc["algebra"]["dim"] == 3);
  CHECK(doc["algebra"]["group_order"] == 8);
  CHECK(doc["classes"].size() == 5);
  CHECK(doc["orbits"].size() == 5);
  REQUIRE(doc.contains("table"));
  CHECK(doc["table"].size() == 5);
  // cells are the exact cyclotomic strings used by the text and CSV writers
  for (std::size_t oi = 0; oi < 5; ++oi)
    for (std::size_t c = 0; c < 5; ++c)
      CHECK(doc["table"][oi][c] == ctx.phi(oi).v[c].str());
  CHECK(doc["certification"]["passed"] == true);
  CHECK(doc["certification"]["stages"].size() == 11);
  CHECK(doc["certification"]["witnesses"].size() == 5);
  std::string csv = table_csv(ctx);
  CHECK(csv.find(ctx.phi(4).v[1].str()) != std::string::npos);
}

TEST_CASE("branch report JSON carries subgroup certification status") {
  Context ctx(parse_builtin("u:3:2"));
  BranchReport branch = clifford_branching_check(ctx);
  auto doc = nlohmann::json::parse(report_json(ctx, "branch", nullptr, &branch, false));
  REQUIRE(doc.contains("branching"));
  CHECK(doc["branching"]["subgroups"].size() == 3);
  CHECK(doc["branching"]["entries"].size() == 15);
  int certified = 0;
  for (const auto& sub : doc["branching"]["subgroups"])
    if (sub["certified"].get<bool>()) ++certified;
  CHECK(certified == 2);
  CHECK(!doc.contains("table"));
}

TEST_CASE("orbit listing shows sizes, ranks and degrees") {
  Context ctx(parse_builtin("u:3:2"));
  std::string text = render_orbits_text(ctx);
  CHECK(text.find("conjugacy classes: 5; coadjoint orbits: 5") != std::string::npos);
  CHECK(text.find("[0,0,1]") != std::string::npos);
}
