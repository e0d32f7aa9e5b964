#include <doctest.h>

#include <sstream>

#include "zfr/commands.hpp"
#include "zfr/hypergraph_io.hpp"

using namespace zfr;
using namespace zfr::cli;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

template <typename F>
Run run(const std::string& stdin_text, F&& f) {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = f(Streams{in, out, err});
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string kTriangle = R"({"n":3,"edges":[[0,1],[0,2],[1,2]]})";

}  // namespace

TEST_SUITE("commands") {
  TEST_CASE("gen-h") {
    const Run r = run("", [](Streams io) { return cmd_gen_h(2, 2, io); });
    CHECK(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["edges"] == Json::parse("[[0,2],[0,3],[1,2],[1,3]]"));
    CHECK(j["meta"]["p"] == 2);
    CHECK_THROWS_AS(run("", [](Streams io) { return cmd_gen_h(1, 3, io); }), UsageError);
    CHECK_THROWS_AS(run("", [](Streams io) { return cmd_gen_h(3, 2, io); }), UsageError);
  }

  TEST_CASE("counterexample") {
    const Run r = run("", [](Streams io) { return cmd_counterexample(3, 4, io); });
    CHECK(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["n"] == 25);
    CHECK(j["meta"]["n_H"] == 9);
    CHECK(j["meta"]["removed_vertex"] == 9);
    CHECK(j["meta"]["n_SG"] == 25);
    // The output parses back as a hypergraph.
    CHECK(parse_hypergraph(r.out).vertex_count() == 25);
    CHECK_THROWS_AS(run("", [](Streams io) { return cmd_counterexample(2, 4, io); }), UsageError);
  }

  TEST_CASE("transform and poly") {
    const Run t = run(kTriangle, [](Streams io) { return cmd_transform("-", io); });
    CHECK(t.out == R"({"n":6,"edges":[[0,1,3],[0,2,4],[1,2,5]]})" "\n");

    const Run closed = run(kTriangle, [](Streams io) { return cmd_poly("-", PolySource::ClosedForm, io); });
    CHECK(Json::parse(closed.out)["coeffs"] == Json::parse(R"(["1","6","15","17","6"])"));

    const Run brute = run(t.out, [](Streams io) { return cmd_poly("-", PolySource::BruteForce, io); });
    CHECK(brute.out == closed.out);

    const Run plain = run(kTriangle, [](Streams io) { return cmd_poly("-", PolySource::BruteForce, io); });
    CHECK(Json::parse(plain.out)["coeffs"] == Json::parse(R"(["1","3"])"));
  }

  TEST_CASE("malformed input is a usage error") {
    CHECK_THROWS_AS(run(R"({"n":2,"edges":[[0,2]]})", [](Streams io) { return cmd_poly("-", PolySource::ClosedForm, io); }),
                    HypergraphError);
    CHECK_THROWS_AS(run("", [](Streams io) { return cmd_poly("/nonexistent/file.json", PolySource::ClosedForm, io); }),
                    std::runtime_error);
  }

  TEST_CASE("eval") {
    const Run exact = run(kTriangle, [](Streams io) { return cmd_eval("-", "-1/2", PolySource::ClosedForm, false, io); });
    const Json e = Json::parse(exact.out);
    CHECK(e["value"] == "0");
    CHECK(e["mode"] == "exact");

    const Run one = run(kTriangle, [](Streams io) { return cmd_eval("-", "1", PolySource::ClosedForm, false, io); });
    CHECK(Json::parse(one.out)["value"] == "45");

    const Run fl = run(kTriangle, [](Streams io) { return cmd_eval("-", "-1", PolySource::ClosedForm, true, io); });
    const Json f = Json::parse(fl.out);
    CHECK(f["value"].get<double>() == doctest::Approx(-1.0));
    CHECK(f["rigorous"] == false);

    CHECK_THROWS_AS(run(kTriangle, [](Streams io) { return cmd_eval("-", "1/0", PolySource::ClosedForm, false, io); }),
                    UsageError);
  }

  TEST_CASE("roots") {
    RootsRequest req;
    req.input = "-";
    req.complex = true;
    req.real_interval = std::make_pair(std::string("-1"), std::string("0"));
    const Run r = run(kTriangle, [&](Streams io) { return cmd_roots(req, io); });
    CHECK(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["real"]["bracket"]["exact_root"] == "-1/2");
    CHECK(j["complex"]["roots"].size() == 4);
    CHECK(j["delta"] == 2);
    CHECK(j["zfr"]["pass"] == true);
    CHECK(j["zfr"]["gmpst_radius"] == "4/27");

    RootsRequest bad = req;
    bad.real_interval = std::make_pair(std::string("0"), std::string("-1"));
    CHECK_THROWS_AS(run(kTriangle, [&](Streams io) { return cmd_roots(bad, io); }), UsageError);
  }

  TEST_CASE("certify exit codes") {
    const Run ok = run("", [](Streams io) { return cmd_certify(3, 1000, "analytic", io); });
    CHECK(ok.code == kExitOk);
    CHECK(Json::parse(ok.out)["certified"] == true);

    const Run fail = run("", [](Streams io) { return cmd_certify(3, 10, "explicit", io); });
    CHECK(fail.code == kExitHypothesis);
    CHECK(fail.err.find("alpha_ge_3ln_n") != std::string::npos);
    CHECK(Json::parse(fail.out)["certified"] == false);

    CHECK_THROWS_AS(run("", [](Streams io) { return cmd_certify(2, 1000, "analytic", io); }), UsageError);
    CHECK_THROWS_AS(run("", [](Streams io) { return cmd_certify(3, 1000, "fast", io); }), UsageError);
  }

  TEST_CASE("certify --verify round trip") {
    const Run issued = run("", [](Streams io) { return cmd_certify(3, 1000, "analytic", io); });
    const Run good = run(issued.out, [](Streams io) { return cmd_verify_certificate("-", io); });
    CHECK(good.code == kExitOk);
    CHECK(Json::parse(good.out)["valid"] == true);

    Json tampered = Json::parse(issued.out);
    tampered["n"] = 2019;
    const Run bad = run(tampered.dump(), [](Streams io) { return cmd_verify_certificate("-", io); });
    CHECK(bad.code == kExitHypothesis);

    CHECK_THROWS_AS(run("{", [](Streams io) { return cmd_verify_certificate("-", io); }), UsageError);
  }

  TEST_CASE("sweep CSV") {
    const Run r = run("", [](Streams io) { return cmd_sweep(3, {10000, 100000}, "1", io); });
    CHECK(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string header;
    std::string first;
    std::string second;
    std::getline(lines, header);
    std::getline(lines, first);
    std::getline(lines, second);
    CHECK(header == sweep_csv_header());
    CHECK(first.rfind("3,10000,10007,", 0) == 0);
    CHECK(first.find(",false,") != std::string::npos);
    CHECK(second.find(",true,") != std::string::npos);

    const Run fail = run("", [](Streams io) { return cmd_sweep(3, {10}, "1", io); });
    CHECK(fail.code == kExitHypothesis);
    CHECK_THROWS_AS(run("", [](Streams io) { return cmd_sweep(3, {10000}, "0", io); }), UsageError);
  }

  TEST_CASE("selftest and its mutation") {
    const Run ok = run("", [](Streams io) { return cmd_selftest(false, io); });
    CHECK(ok.code == kExitOk);
    const Run mutated = run("", [](Streams io) { return cmd_selftest(true, io); });
    CHECK(mutated.code != kExitOk);
    CHECK(mutated.out.find("oracle mismatch") != std::string::npos);
  }
}
