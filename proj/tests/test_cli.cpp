#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "lebesgue/cli.hpp"
#include "lebesgue/serialize.hpp"

using namespace lebesgue;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli trace") {
    auto r = run({"trace", "--alpha", "6,5,3,1", "--beta", "4,3,1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("steps: 4") != std::string::npos);
    CHECK(r.out.find("output: mu=3,2 nu=8,6,4") != std::string::npos);

    r = run({"trace", "--alpha", "4", "--beta", ""});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("steps: 0") != std::string::npos);
    CHECK(r.out.find("output: mu=4 nu=\n") != std::string::npos);

    r = run({"trace", "--alpha", "3", "--beta", "4"});
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("largest part of beta exceeds length of alpha") != std::string::npos);

    r = run({"trace", "--alpha", "1,3", "--beta", ""});
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("non-increasing") != std::string::npos);
}

TEST_CASE("cli trace json matches the library serialization") {
    auto r = run({"trace", "--alpha", "6,5,3,1", "--beta", "4,3,1", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto expected = forward_trace_to_json(trace_forward(PairP::make({6, 5, 3, 1}, {4, 3, 1}))).dump() + "\n";
    CHECK(r.out == expected);
}

TEST_CASE("cli trace ascii") {
    auto r = run({"trace", "--alpha", "3,2,1", "--beta", "3,1", "--format", "ascii"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("-+-") != std::string::npos);
    CHECK(r.out.find("output: mu= nu=6,4") != std::string::npos);
}

TEST_CASE("cli invert") {
    auto r = run({"invert", "--mu", "3,2", "--nu", "8,6,4"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("output: alpha=6,5,3,1 beta=4,3,1") != std::string::npos);

    r = run({"invert", "--mu", "", "--nu", "6,4"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("output: alpha=3,2,1 beta=3,1") != std::string::npos);

    r = run({"invert", "--mu", "2", "--nu", "3"});
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("nu has an odd part") != std::string::npos);
}

TEST_CASE("cli enumerate") {
    auto r = run({"enumerate", "--n", "4", "--side", "P"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("count: 4") != std::string::npos);

    r = run({"enumerate", "--n", "4", "--side", "Q", "--histogram"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "n,k,j,count\n4,0,1,1\n4,2,0,1\n4,2,1,1\n4,4,0,1\n");

    r = run({"enumerate", "--n", "0", "--side", "P"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "alpha=∅ beta=∅\ncount: 1\n");

    r = run({"enumerate", "--n", "2", "--side", "Q", "--format", "json"});
    CHECK(r.out == "[{\"mu\":[2],\"nu\":[]},{\"mu\":[],\"nu\":[2]}]\n");

    r = run({"enumerate", "--n", "30", "--side", "P"});
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("cap") != std::string::npos);

    r = run({"enumerate", "--n", "3", "--side", "R"});
    CHECK(r.code == kExitInvalid);
}

TEST_CASE("cli enumerate honors the cap override") {
    ::setenv(kMaxNEnv, "27", 1);
    auto r = run({"enumerate", "--n", "26", "--side", "P", "--histogram"});
    CHECK(r.code == kExitOk);
    ::setenv(kMaxNEnv, "oops", 1);
    r = run({"enumerate", "--n", "3", "--side", "P"});
    CHECK(r.code == kExitInvalid);
    ::unsetenv(kMaxNEnv);
}

TEST_CASE("cli verify and check") {
    auto r = run({"verify", "--identity", "lebesgue", "--order", "30"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("lebesgue order=30: equal", 0) == 0);

    r = run({"verify", "--identity", "rowell", "--order", "20", "--L", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("lhs: 1 + q + a*q^2\nrhs: 1 + q + a*q^2\n") != std::string::npos);

    r = run({"verify", "--identity", "euler", "--order", "10"});
    CHECK(r.code == kExitInvalid);

    r = run({"verify", "--identity", "fu", "--order", "12", "--format", "json"});
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out)["equal"] == true);

    r = run({"check", "--max-n", "20"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("for n <= 20: passed") != std::string::npos);

    r = run({"check", "--max-n", "99"});
    CHECK(r.code == kExitInvalid);
}

TEST_CASE("cli argument errors") {
    CHECK(run({}).code == kExitInvalid);
    CHECK(run({"frobnicate"}).code == kExitInvalid);
    CHECK(run({"trace", "--alpha", "3"}).code == kExitInvalid);
    CHECK(run({"trace", "--alpha", "3", "--beta", "", "--format", "xml"}).code == kExitInvalid);
    CHECK(run({"--help"}).code == kExitOk);
}
