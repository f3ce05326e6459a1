#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "symf/io.hpp"

using namespace symf;
using namespace symf::testing;

namespace {

struct Run {
  int code;
  std::string out;
  Json doc() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  int code = cli::run(args, out);
  return {code, out.str()};
}

std::string write_temp(const std::string& name, const Json& doc) {
  auto dir = std::filesystem::temp_directory_path() / "symf_test_io_cli";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << doc.dump();
  return path.string();
}

}  // namespace

TEST_CASE("coefficients round trip") {
  CoefPoly c = CoefPoly(ratio(-1, 2)) + t_() * Rat(3) * CoefPoly::param(kParamBeta) - t_().pow(2);
  CHECK(coef_from_json(coef_to_json(c)) == c);
  CHECK(coef_from_json(Json("6/4")) == CoefPoly(ratio(3, 2)));
  CHECK(coef_from_json(Json(-7)) == CoefPoly(-7));
  CHECK(coef_from_json(Json("a")) == CoefPoly::param("a"));
  CHECK(coef_to_json(CoefPoly(1)).dump() == R"([{"params":{},"value":"1"}])");
  CHECK_THROWS_AS(coef_from_json(Json(1.5)), ParseError);
  CHECK_THROWS_AS(coef_from_json(Json::parse(R"([{"params":{"t":-1},"value":"1"}])")), ParseError);
}

TEST_CASE("symmetric functions round trip") {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 20; ++trial) {
    SymFun f = random_symfun(rng, 5, 6) * (CoefPoly(1) - t_());
    Json j = symfun_to_json(f);
    CHECK(symfun_from_json(j) == f);
    CHECK(symfun_to_json(symfun_from_json(j)).dump() == j.dump());
  }
  CHECK(symfun_to_json(SymFun()).dump() == R"({"terms":[]})");
  CHECK(symfun_from_json(Json::parse(R"({"terms":[{"pmono":[1,2],"coef":"1"}]})")) == SymFun::p(Partition{2, 1}));
  CHECK_THROWS_AS(symfun_from_json(Json::parse(R"({"terms":[{"pmono":[0],"coef":"1"}]})")), ParseError);
  CHECK_THROWS_AS(symfun_from_json(Json::parse(R"({"nope":1})")), ParseError);
}

TEST_CASE("charged states") {
  ChargedState s{-2, gen_h(2)};
  CHECK(state_from_json(state_to_json(s)) == s);
  CHECK(state_to_json(s).dump().rfind(R"({"charge":-2,"body":)", 0) == 0);
  ChargedState bare = state_from_json(symfun_to_json(gen_e(2)));
  CHECK(bare.charge == 0);
  CHECK(bare.body == gen_e(2));
}

TEST_CASE("tensor serialization") {
  TensorBuilder b;
  b.add_outer({1, SymFun::p(Partition{2, 1})}, {-1, SymFun::p(1)}, CoefPoly(3));
  Json j = tensor_to_json(b.finish());
  CHECK(j.dump() ==
        R"({"terms":[{"left":{"charge":1,"pmono":[2,1]},"right":{"charge":-1,"pmono":[1]},"coef":[{"params":{},"value":"3"}]}]})");
}

TEST_CASE("matrix specs") {
  auto same = [](const RowFiniteMatrix& a, const RowFiniteMatrix& b) {
    for (int i = -5; i <= 5; ++i)
      for (int j = -5; j <= 5; ++j)
        if (!(a.entry(i, j) == b.entry(i, j))) return false;
    return true;
  };
  CHECK(same(matrix_from_json(Json::parse(R"({"kind":"explicit"})")), identity_matrix()));
  RowFiniteMatrix e = matrix_from_json(Json::parse(
      R"({"kind":"explicit","default":"identity","rows":[{"i":-2,"entries":[{"j":-2,"coef":"1"},{"j":0,"coef":"a"}]}]})"));
  CHECK(e.entry(-2, 0) == CoefPoly::param("a"));
  CHECK(e.entry(3, 3) == CoefPoly(1));
  CHECK(same(matrix_from_json(Json::parse(R"({"kind":"toeplitz","params":{"a":{"0":"1","1":"1/2","2":"-3"}}})")),
             gallery_matrices()[0].a));
  CHECK(same(matrix_from_json(Json::parse(R"({"kind":"toeplitz","params":{"a":[{"k":0,"coef":"1"}]}})")),
             identity_matrix()));
  CHECK(same(matrix_from_json(Json::parse(R"({"kind":"cumulative"})")), cumulative_matrix()));
  CHECK(same(matrix_from_json(Json::parse(R"({"kind":"pascal"})")), pascal_matrix()));
  CHECK(same(matrix_from_json(Json::parse(R"({"kind":"multiparameter","params":{"a":["1","1","1","1","1","1"]}})")),
             pascal_matrix()));
  CHECK(same(matrix_from_json(Json::parse(R"({"kind":"grothendieck-dual","params":{"lambda":[2,1]}})")),
             grothendieck_dual_matrix({2, 1})));
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"kind":"mystery"})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"kind":"explicit","default":"ones"})")), ParseError);
  // a window reads back as an explicit matrix
  Json w = matrix_window_to_json(pascal_matrix(), -3, 3, 3);
  RowFiniteMatrix back = matrix_from_json({{"kind", "explicit"}, {"default", "zero"}, {"rows", w["rows"]}});
  for (int i = -3; i <= 3; ++i)
    for (int j = -5; j <= 3; ++j) CHECK(back.entry(i, j) == pascal_matrix().entry(i, j));
}

TEST_CASE("flag parsers") {
  CHECK(parse_intvec("3,-1,2") == IntVec{3, -1, 2});
  CHECK(parse_intvec("").empty());
  CHECK(parse_rat_list("1/2,-3") == std::vector<Rat>{ratio(1, 2), Rat(-3)});
  CHECK(parse_range("-4:5") == std::pair{-4, 5});
  CHECK(parse_assignment("t=-1/2") == std::pair<std::string, Rat>{"t", ratio(-1, 2)});
  CHECK_THROWS_AS(parse_intvec("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_intvec("x"), ParseError);
  CHECK_THROWS_AS(parse_range("3"), ParseError);
  CHECK_THROWS_AS(parse_range(""), ParseError);
  CHECK_THROWS_AS(parse_assignment("t"), ParseError);
  CHECK_THROWS_AS(parse_json_text("{"), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("cli: computing commands") {
  Run hl = run({"hl", "--lambda", "1"});
  CHECK(hl.code == cli::kOk);
  CHECK(hl.out == R"({"terms":[{"pmono":[1],"coef":[{"params":{},"value":"1"},{"params":{"t":1},"value":"-1"}]}]})"
                  "\n");
  CHECK(symfun_from_json(run({"hl", "--lambda", "3,1"}).doc()) == iterate_field(FieldKind::gamma_plus(), {3, 1}));
  CHECK(symfun_from_json(run({"hl", "--lambda", "2,1", "--t", "0"}).doc()) == schur_jt({2, 1}));
  CHECK(symfun_from_json(run({"schur", "--lambda", "-1,3"}).doc()) == -gen_h(2));
  CHECK(symfun_from_json(run({"schurq", "--lambda", "2,1"}).doc()) ==
        iterate_field(FieldKind::gamma_plus_at(-1), {2, 1}));

  std::string m = write_temp("pascal.json", {{"kind", "pascal"}});
  SymFun st = transformed_family(pascal_matrix(), {2, 1}, FieldKind::gamma_plus_at(0));
  CHECK(symfun_from_json(run({"transform", "--matrix", m, "--lambda", "2,1", "--t", "0"}).doc()) == st);
  CHECK(symfun_from_json(run({"jt", "--matrix", m, "--lambda", "2,1"}).doc()) == st);
  CHECK(symfun_from_json(run({"pf", "--kind", "pascal", "--lambda", "3,1"}).doc()) ==
        transformed_family(pascal_matrix(), {3, 1}, FieldKind::gamma_plus_at(-1)));
  CHECK(symfun_from_json(run({"transform", "--kind", "multiparameter", "--params", R"({"a":["1","1","1","1","1","1","1"]})",
                              "--lambda", "2"})
                             .doc()) == transformed_family(pascal_matrix(), {2}, FieldKind::gamma_plus()));

  Json o = run({"oracle", "hl-eval", "--lambda", "2,1", "--x", "1/2,1/3,2", "--t", "-1"}).doc();
  CHECK(o["value"] == "175/9");
  EvalPoint pt{{ratio(1, 2), ratio(1, 3), Rat(2)}, {{kParamT, Rat(-1)}}};
  CHECK(parse_rat(o["value"].get<std::string>()) == hl_symmetrized_eval({2, 1}, pt));
  CHECK(run({"oracle", "schur-tableaux", "--lambda", "2,1", "--x", "1/2,1/3"}).doc()["value"] == "5/36");
  CHECK(run({"oracle", "grothendieck-alt", "--lambda", "1", "--x", "1,2", "--beta", "3"}).doc()["value"] == "9");

  std::string f = write_temp("f.json", symfun_to_json(SymFun::p(1) * t_()));
  CHECK(run({"eval", "--file", f, "--x", "2,3", "--assign", "t=-1"}).doc()["value"] == "-5");
  CHECK(run({"eval", "--file", f, "--x", "2,3"}).doc().contains("coef"));

  Json g = run({"gallery", "--kind", "cumulative", "--window", "-2:2", "--cols", "3", "--kmax", "3"}).doc();
  CHECK(g["shape_ok"] == true);
  CHECK(g.contains("inverse"));
}

TEST_CASE("cli: verification exit codes") {
  std::string vac = write_temp("vacuum.json", state_to_json({0, SymFun(1)}));
  Run ok = run({"verify", "kp", "--tau-file", vac});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out == "{\"tau\":true}\n");
  CHECK(run({"verify", "bkp", "--tau-file", vac}).code == cli::kOk);

  std::string bad = write_temp("bad.json", symfun_to_json(SymFun::p(Partition{3, 1})));
  Run no = run({"verify", "bkp", "--tau-file", bad});
  CHECK(no.code == cli::kFalsified);
  CHECK(no.doc()["tau"] == false);
  CHECK(no.doc().contains("first"));
  CHECK(!no.doc()["residue"]["terms"].empty());
  CHECK(run({"verify", "kp", "--tau-file", bad}).code == cli::kFalsified);
  CHECK(run({"verify", "bkp", "--tau-file", write_temp("even.json", symfun_to_json(SymFun::p(2)))}).code == cli::kUsage);

  Run rel = run({"relations", "--field", "gamma", "--window", "-2:2", "--max-degree", "2"});
  CHECK(rel.code == cli::kOk);
  CHECK(rel.doc()["ok"] == true);
  CHECK(run({"relations", "--field", "charged", "--window", "-2:2", "--max-degree", "1"}).code == cli::kOk);
  CHECK(run({"relations", "--field", "neutral", "--window", "-2:2", "--max-degree", "3"}).code == cli::kOk);
}

TEST_CASE("cli: usage errors") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"hl"},
           {"hl", "--lambda", "1,x"},
           {"hl", "--lambda", "1", "--t", "1/0"},
           {"transform", "--lambda", "1"},
           {"verify", "kp", "--tau-file", "/nonexistent.json"},
           {"relations", "--field", "weird"},
           {"relations", "--window", "3"},
           {"oracle", "nope", "--x", "1"},
           {"eval", "--file", "/nonexistent.json"},
       }) {
    Run r = run(args);
    const std::string label = args.empty() ? std::string("<none>") : args[0];
    INFO(label);
    CHECK(r.code == cli::kUsage);
    CHECK(r.doc().contains("error"));
  }
}

TEST_CASE("cli: byte-stable output") {
  std::vector<std::string> args{"transform", "--kind", "cumulative", "--lambda", "3,2,1"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> h{"hl", "--lambda", "2,2,1"};
  CHECK(run(h).out == run(h).out);
}
