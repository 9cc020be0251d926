#include "doctest.h"

#include "cli.hpp"
#include "totalparts/exotica.hpp"
#include "totalparts/serialize.hpp"

#include <cstdlib>
#include <sstream>

using namespace totalparts;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    args.insert(args.begin(), "totalparts");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("counts and exit codes")
{
    CHECK(call({"fair-enum", "--order", "6", "--count-only"}).out == "51\n");
    CHECK(call({"fair-enum", "--order", "20", "--count-only"}).out == "128996853\n");
    CHECK(call({"fair-enum", "--order", "6", "--count-only", "--real-only"}).out == "3\n");
    CHECK(call({"exotic", "--orders", "12,12", "--count-only"}).out == "3\n");
    CHECK(call({"selftest"}).code == 0);

    CHECK(call({}).code == 2);
    CHECK(call({"fair-enum", "--order", "1"}).code == 2);
    CHECK(call({"exotic", "--orders", "10"}).code == 2);
    CHECK(call({"fair-enum", "--format", "xml"}).code == 2);
    CHECK(call({"total", "--sack", "{not json"}).code == 2);
    CHECK(call({"craps"}).code == 2);
    CHECK(call({"s3scan", "--kmin", "50", "--kmax", "10"}).code == 2);

    auto bad = call({"craps", "--totals", "1/2,1/2,1/2,0,0,0,0,0,0,0,0"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("sum to 1") != std::string::npos);
    CHECK(call({"total", "--sack", R"({"dice":[{"probs":["1/2","1/3"]}]})"}).code == 1);
    CHECK(call({"solve", "--total", R"(["1/4","1/2","1/4"])", "--type", "2,3"}).code == 1);
}

TEST_CASE("precision from the environment")
{
    ::setenv("TOTALPARTS_PRECISION", "64", 1);
    CHECK(cli::config_from_environment().precision_start_bits == 64);
    CHECK(call({"exotic", "--orders", "13,13", "--count-only"}).code == 0);
    ::setenv("TOTALPARTS_PRECISION", "16", 1);
    CHECK_THROWS(cli::config_from_environment());
    CHECK(call({"selftest"}).code == 2);
    ::setenv("TOTALPARTS_PRECISION", "abc", 1);
    CHECK(call({"selftest"}).code == 2);
    ::unsetenv("TOTALPARTS_PRECISION");
    CHECK(cli::config_from_environment().precision_start_bits == 128);
    default_sign_policy() = SignPolicy{};
}

TEST_CASE("solve finds the three sacks")
{
    const std::string total = R"(["1/9","7/18","7/18","1/9"])";
    auto r = call({"solve", "--total", total, "--type", "2,3", "--factors",
                   R"([{"root":"-1"},{"root":"-2"},{"root":"-1/2"}])"});
    REQUIRE(r.code == 0);
    auto sacks = Json::parse(r.out);
    CHECK(sacks.size() == 3);
    // without factors the rational roots are found automatically
    CHECK(call({"solve", "--total", total, "--type", "2,3"}).out == r.out);
    CHECK(call({"solve", "--total", total, "--type", "2,3", "--count-only"}).out == "3\n");
    // every emitted sack is accepted back and reproduces the total
    for (const auto& s : sacks) {
        auto t = call({"total", "--sack", s.dump()});
        CHECK(Json::parse(t.out)["probs"] == Json::parse(total));
    }
    CHECK(call({"solve", "--total", total, "--type", "2,3", "--factors", R"([{"root":"-1","mult":3}])"}).code == 1);
}

TEST_CASE("json round trips")
{
    auto pairs = Json::parse(call({"fair-enum", "--order", "6", "--format", "json"}).out);
    REQUIRE(pairs.size() == 51);
    const std::string fair_total = call({"total", "--sack", pairs[0]["sack"].dump()}).out;
    for (const auto& p : pairs) {
        auto t = call({"total", "--sack", p["sack"].dump()});
        CHECK(t.code == 0);
        CHECK(t.out == fair_total);
        CHECK(sack_from_json(p["sack"]).size() == 2);
    }

    auto ten = Json::parse(call({"exotic", "--orders", "10,10", "--format", "json"}).out);
    REQUIRE(ten["sacks"].size() == 1);
    CHECK(ten["sacks"][0]["sack"]["dice"][0]["conductor"] == 10);
    CHECK(sack_from_json(ten["sacks"][0]["sack"]) == exotic_search(10, 10).sacks[0].sack);

    auto twelve = Json::parse(call({"exotic", "--orders", "12,12", "--format", "json"}).out);
    CHECK(sack_from_json(twelve["sacks"][2]["sack"]) == exotic_search(12, 12).sacks[2].sack);
    auto craps = call({"craps", "--sack", twelve["sacks"][2]["sack"].dump(), "--format", "json"});
    CHECK(craps.code == 1); // type (12, 12)

    auto fair66 = R"({"dice":[{"order":6,"probs":["1/6","1/6","1/6","1/6","1/6","1/6"]},
                              {"order":6,"probs":["1/6","1/6","1/6","1/6","1/6","1/6"]}]})";
    auto c = Json::parse(call({"craps", "--sack", fair66, "--format", "json"}).out);
    CHECK(c["p_win"] == "244/495");
    CHECK(c["differs_from_printed"] == true);
}

TEST_CASE("output does not depend on workers")
{
    for (const std::vector<std::string>& cmd :
         {std::vector<std::string>{"scatter", "--kmax", "300"}, {"s4scan", "--kmax", "120"},
          {"fair-enum", "--order", "7", "--format", "json"}, {"swaps", "--order", "18"},
          {"exotic", "--orders", "5,9", "--format", "json"}, {"ramify", "--order", "12"}}) {
        auto one = cmd, four = cmd;
        one.insert(one.end(), {"--workers", "1"});
        four.insert(four.end(), {"--workers", "4"});
        auto a = call(one), b = call(four);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("scan summaries")
{
    auto s3 = call({"s3scan", "--kmax", "800"});
    REQUIRE(s3.code == 0);
    CHECK(s3.out.find("max R3\t60/143 at k = 143,286,429,572,715") != std::string::npos);
    CHECK(s3.out.find("k = 603\tdifference 59\ta = 1\tb = 0") != std::string::npos);
    auto csv = call({"scatter", "--kmin", "143", "--kmax", "144", "--decimal", "3"});
    CHECK(csv.out == "k,M3,R3_num,R3_den,R3_decimal\n143,60,60,143,0.420\n144,60,5,12,0.417\n");
    auto s4 = call({"s4scan", "--kmin", "12", "--kmax", "12"});
    CHECK(s4.out == "k,S4_min,S4_max,size,interval\n12,2,4,3,yes\n");
    CHECK(call({"sicherman", "--order", "6"}).out == "1 2 2 3 3 4  |  1 3 4 5 6 8\n1 2 3 4 5 6  |  1 2 3 4 5 6  standard\n");
}
