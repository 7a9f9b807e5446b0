#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmzv/cli.hpp"
#include "qmzv/powerseries.hpp"
#include "qmzv/words.hpp"

#include <sstream>

using namespace qmzv;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand renders the weight-one q-shuffle square") {
    RunResult r = run_cli({"expand", "--product", "qshuffle", "p y", "p y"});
    CHECK(r.code == 0);
    CHECK(r.out == "2*p y p y - p y y\n");
}

TEST_CASE("expand handles the quasi-shuffle on classical words") {
    RunResult r = run_cli({"expand", "--product", "quasishuffle", "y(2)", "y(2)"});
    CHECK(r.code == 0);
    CHECK(r.out == "y(4) + 2*y(2,2)\n");
}

TEST_CASE("expand graded product shows h coefficients") {
    RunResult r = run_cli({"expand", "--product", "qshuffle-graded", "z(1)", "z(1)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("h") != std::string::npos);
}

TEST_CASE("series prints the weight-zero value") {
    RunResult r = run_cli({"series", "--word", "z(0)", "--order", "4", "--pathway", "both"});
    CHECK(r.code == 0);
    CHECK(r.out.find("coeffs [0,1,1,1,1]") != std::string::npos);
}

TEST_CASE("series JSON round-trips byte-identically") {
    RunResult r = run_cli({"--format", "json", "series", "--word", "z(2)", "--order", "6"});
    CHECK(r.code == 0);
    std::string body = r.out.substr(0, r.out.find('\n'));
    QSeries s = QSeries::from_json(body);
    CHECK(s.to_json() == body);
}

TEST_CASE("expand JSON round-trips byte-identically") {
    RunResult r = run_cli({"--format", "json", "expand", "--product", "qquasishuffle", "z(1)", "z(2)"});
    CHECK(r.code == 0);
    std::string body = r.out.substr(0, r.out.find('\n'));
    CHECK(lincomb_to_json(lincomb_from_json(body)) == body);
}

TEST_CASE("verify runs a small suite deterministically") {
    std::vector<std::string> args = {"verify", "--suite", "word-laws", "--max-depth", "1",
                                     "--range", "-1..1",    "--seed",  "7"};
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("[PASS]") != std::string::npos);
}

TEST_CASE("verify emits one JSON document") {
    RunResult r = run_cli({"--format", "json", "verify", "--suite", "word-laws", "--max-depth", "1", "--range",
                           "-1..1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("{", 0) == 0);
    CHECK(r.out.find("\"checks\"") != std::string::npos);
    CHECK(r.out.find("\"pass\"") != std::string::npos);
}

TEST_CASE("limit subcommand") {
    RunResult r = run_cli({"limit", "--word", "z(2)", "--target", "1.644934", "--grid", "0.9,0.99", "--tol", "0.1"});
    CHECK(r.code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"expand", "--product", "nosuch", "z(1)", "z(1)"}).code == 2);
    CHECK(run_cli({"verify", "--nonsense"}).code == 2);
    CHECK(run_cli({"series", "--word", "z(2,)"}).code == 2);
    CHECK(run_cli({"verify", "--suite", "nosuch"}).code == 2);
    CHECK(run_cli({"series", "--word", "z(2)", "--model", "schlesinger"}).code == 2);
}
