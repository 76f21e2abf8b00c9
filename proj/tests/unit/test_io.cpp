#include <doctest.h>

#include <matsolve/errors.hpp>
#include <matsolve/io.hpp>

#include <cstdio>
#include <filesystem>

using namespace matsolve;

TEST_CASE("rational matrices round-trip through JSON") {
  RatMatrix m = RatMatrix::from_rows({{Rat(1, 2), Rat(-3)}, {Rat(0), Rat(22, 7)}});
  Json j = rat_matrix_to_json(m);
  CHECK(j[0][0] == "1/2");
  CHECK(j[0][1] == "-3");
  CHECK(rat_matrix_from_json(j) == m);

  // Plain integers are accepted on input.
  Json ints = Json::parse("[[1, 2], [3, 4]]");
  RatMatrix mi = rat_matrix_from_json(ints);
  CHECK(mi.at(1, 0) == 3);
}

TEST_CASE("malformed matrices are parse errors") {
  CHECK_THROWS_AS(rat_matrix_from_json(Json::parse("[[1],[2,3]]")), Error);
  CHECK_THROWS_AS(rat_matrix_from_json(Json::parse("[]")), Error);
  CHECK_THROWS_AS(rat_matrix_from_json(Json::parse("[[\"x\"]]")), Error);
  try {
    rat_matrix_from_json(Json::parse("{\"not\": \"a matrix\"}"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}

TEST_CASE("complex numbers serialize as re/im pairs") {
  Json j = complex_to_json(Complex(1.5, -2.25));
  CHECK(j["re"] == 1.5);
  CHECK(j["im"] == -2.25);
  CMatrix m(1, 2);
  m << Complex(0, 1), Complex(3, 0);
  Json jm = cmatrix_to_json(m);
  CHECK(jm[0][0]["im"] == 1.0);
  CHECK(jm[0][1]["re"] == 3.0);
}

TEST_CASE("equations round-trip preserving semantics") {
  EquationSpec spec;
  spec.n = 2;
  spec.words = {{EquationSpec::x(), EquationSpec::c("A"), EquationSpec::x()},
                {EquationSpec::c("B"), EquationSpec::x()}};
  spec.constants = {{"A", RatMatrix::from_rows({{Rat(0), Rat(1)}, {Rat(1), Rat(1)}})},
                    {"B", RatMatrix::from_rows({{Rat(2), Rat(0)}, {Rat(0), Rat(-1)}})}};
  spec.constant_term = RatMatrix::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});

  Json j = equation_to_json(spec);
  CHECK(j["type"] == "equation");
  EquationSpec back = equation_from_json(j);
  CHECK(back.n == 2);
  REQUIRE(back.words.size() == 2);
  RatMatrix x = RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(-1), Rat(3)}});
  CHECK(eval_equation(back, x) == eval_equation(spec, x));
}

TEST_CASE("the unknown name is reserved in equation constants") {
  Json j = Json::parse(R"({"type":"equation","n":1,
    "terms":[{"word":["X"]}],
    "constants":{"X":[["1"]]},
    "F":[["0"]]})");
  CHECK_THROWS_AS(equation_from_json(j), Error);
}

TEST_CASE("instances round-trip byte-identically") {
  Instance inst = random_instance(Shape::Riccati, 2, 2, 42);
  Json j = instance_to_json(inst);
  Instance back = instance_from_json(j);
  CHECK(instance_to_json(back).dump() == j.dump());
  CHECK(back.seed == 42);
  CHECK(back.n == 2);

  Instance uni = random_instance(Shape::Unilateral, 2, 3, 7);
  Json ju = instance_to_json(uni);
  CHECK(instance_from_json(ju).coeffs.size() == uni.coeffs.size());
}

TEST_CASE("either file flavor loads as an equation") {
  Instance inst = random_instance(Shape::Plex2, 2, 2, 5);
  EquationSpec via_instance = load_equation(instance_to_json(inst));
  EquationSpec direct = load_equation(equation_to_json(to_equation_spec(inst)));
  RatMatrix x = RatMatrix::from_rows({{Rat(1), Rat(1, 2)}, {Rat(0), Rat(-2)}});
  CHECK(eval_equation(via_instance, x) == eval_equation(direct, x));
  CHECK_THROWS_AS(load_equation(Json::parse("{\"type\":\"mystery\"}")), Error);
}

TEST_CASE("ideal files parse into the requested order") {
  Json j = Json::parse(R"({"vars":["x","y"],"polys":["x^2 - 1","x*y - 2"]})");
  auto [ring, polys] = ideal_from_json(j, MonomialOrder::Lex);
  CHECK(ring->order == MonomialOrder::Lex);
  REQUIRE(polys.size() == 2);
  CHECK(polys[0].eval({Rat(1), Rat(0)}) == 0);
  CHECK_THROWS_AS(ideal_from_json(Json::parse("{\"vars\":[],\"polys\":[]}"), MonomialOrder::Lex),
                  Error);
}

TEST_CASE("digest matches the published reference vectors") {
  CHECK(digest_hex("") == "cbf29ce484222325");
  CHECK(digest_hex("a") == "af63dc4c8601ec8c");
  CHECK(digest_hex("hello") != digest_hex("hellp"));
}

TEST_CASE("json files write and load through the filesystem") {
  std::string path = (std::filesystem::temp_directory_path() / "matsolve_io_test.json").string();
  Json j;
  j["alpha"] = "1/3";
  j["beta"] = Json::array({1, 2, 3});
  write_json_file(path, j);
  Json back = load_json_file(path);
  CHECK(back == j);
  // Trailing newline keeps the files terminal-friendly.
  std::string raw = read_text_file(path);
  REQUIRE_FALSE(raw.empty());
  CHECK(raw.back() == '\n');
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_json_file("/nonexistent/really/not/here.json"), Error);
  std::string bad = (std::filesystem::temp_directory_path() / "matsolve_bad.json").string();
  {
    FILE* f = fopen(bad.c_str(), "w");
    REQUIRE(f);
    fputs("{ not json", f);
    fclose(f);
  }
  CHECK_THROWS_AS(load_json_file(bad), Error);
  std::remove(bad.c_str());
}

TEST_CASE("instance generation is deterministic per seed") {
  for (Shape s : {Shape::Unilateral, Shape::Riccati, Shape::Plex1, Shape::Plex2, Shape::Degmax,
                  Shape::Commuting, Shape::Symmetric, Shape::Binome}) {
    Instance a = random_instance(s, 2, 2, 99);
    Instance b = random_instance(s, 2, 2, 99);
    CHECK(instance_to_json(a).dump() == instance_to_json(b).dump());
    Instance c = random_instance(s, 2, 2, 100);
    CHECK(instance_to_json(a).dump() != instance_to_json(c).dump());
  }
}

TEST_CASE("shape names round-trip") {
  for (Shape s : {Shape::Unilateral, Shape::Riccati, Shape::Plex1, Shape::Plex2, Shape::Degmax,
                  Shape::Commuting, Shape::Symmetric, Shape::Binome})
    CHECK(shape_from_name(shape_name(s)) == s);
  CHECK_THROWS_AS(shape_from_name("heptagonal"), Error);
}

TEST_CASE("generated commuting families commute by construction") {
  Instance inst = random_instance(Shape::Commuting, 3, 2, 11);
  CommutingFamily fam = to_commuting(inst);
  REQUIRE(fam.b.size() == 2);
  CHECK(fam.b[0] * fam.b[1] == fam.b[1] * fam.b[0]);
}

TEST_CASE("shape views reject mismatched instances") {
  Instance ric = random_instance(Shape::Riccati, 2, 2, 1);
  CHECK_THROWS_AS(to_unilateral(ric), Error);
  CHECK_THROWS_AS(to_commuting(ric), Error);
  CHECK(to_riccati(ric).n() == 2);
  Instance uni = random_instance(Shape::Unilateral, 2, 2, 1);
  CHECK_THROWS_AS(to_riccati(uni), Error);
  CHECK(to_unilateral(uni).k() == 2);
}

TEST_CASE("generated riccati instances have invertible leading blocks") {
  for (unsigned long long seed = 1; seed <= 10; ++seed) {
    Instance inst = random_instance(Shape::Riccati, 2, 2, seed);
    CHECK(to_riccati(inst).a.det() != 0);
  }
}

TEST_CASE("solution sets serialize with counts and subsets") {
  SolutionSet sols;
  sols.n = 1;
  sols.expected_count = 2;
  sols.method = "test";
  Solvent s;
  s.x = CMatrix(1, 1);
  s.x << Complex(2, 0);
  s.subset = {0};
  s.residual = 1e-16;
  sols.solutions.push_back(s);
  Json j = solution_set_to_json(sols);
  CHECK(j["expected_count"] == 2);
  CHECK(j["found_count"] == 1);
  CHECK(j["method"] == "test");
  CHECK(j["solutions"][0]["x"][0][0]["re"] == 2.0);
  CHECK(j["solutions"][0]["subset"][0] == 0);
}
