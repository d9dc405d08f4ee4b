#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "nearcentral/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = nearcentral::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("genchar") {
    auto r = call({"genchar", "--n", "3", "--mu", "2,1", "--j", "2", "--lambda", "2,1", "--i", "2"});
    CHECK(r.code == nearcentral::cli::kExitOk);
    CHECK(r.json()["value"] == "1/2");
    for (std::string method : {"table", "strahov", "oracle"}) {
        auto m = call({"genchar", "--n", "3", "--mu", "3", "--j", "3", "--lambda", "2,1", "--i", "2", "--method", method});
        CHECK(m.json()["value"] == "1");
    }
}

TEST_CASE("starfact") {
    auto r = call({"starfact", "count", "--lambda", "2,1", "--i", "2", "--r", "3"});
    CHECK(r.code == 0);
    CHECK(r.json()["count"] == "3");
    for (std::string method : {"oracle", "enumerate"}) {
        CHECK(call({"starfact", "count", "--lambda", "2,1", "--i", "2", "--r", "3", "--method", method}).json()["count"] == "3");
    }
    CHECK(call({"starfact", "class", "--lambda", "2,1", "--r", "3"}).json()["count"] == "8");
    CHECK(call({"starfact", "cycles", "--n", "3", "--k", "3", "--r", "2"}).json()["count"] == "2");
    CHECK(call({"starfact", "closed", "--case", "full-cycle", "--n", "3", "--r", "2"}).json()["count"] == "1");
}

TEST_CASE("oracle") {
    auto r = call({"oracle", "verify", "--max-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.json()["status"] == "ok");
    auto jm = call({"oracle", "jm-power", "--n", "3", "--r", "3"}).json();
    CHECK(jm["coefficients"]["2,1@2"] == "3");
    CHECK(jm["coefficients"]["2,1@1"] == "2");
    CHECK(call({"oracle", "factorizations", "--perm", "(1 2)", "--n", "3", "--r", "3"}).json()["count"] == "2");
    CHECK(call({"oracle", "factorizations", "--perm", "1,3,2", "--r", "3"}).json()["count"] == "3");
}

TEST_CASE("other subcommands") {
    CHECK(call({"partitions", "--n", "5"}).json()["count"] == "7");
    CHECK(call({"partitions", "--n", "5", "--marked"}).json()["count"] == "12");
    CHECK(call({"tableaux", "--lambda", "3,2"}).json()["dimension"] == "5");
    CHECK(call({"connection", "--lambda", "2,1", "--i", "2", "--mu", "2,1", "--j", "2", "--nu", "3", "--k", "3"})
              .json()["value"] == "1");
    auto csv = call({"chartable", "--n", "3", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("\"2,1\",-1,0,2") != std::string::npos);
}

TEST_CASE("exit codes") {
    auto domain = call({"genchar", "--n", "3", "--mu", "2,2", "--j", "2", "--lambda", "2,1", "--i", "2"});
    CHECK(domain.code == nearcentral::cli::kExitDomain);
    CHECK(domain.json()["status"] == "error");
    CHECK_FALSE(domain.err.empty());
    auto guard = call({"genchar", "--n", "10", "--mu", "10", "--j", "10", "--lambda", "9,1", "--i", "1", "--method", "strahov"});
    CHECK(guard.code == nearcentral::cli::kExitGuard);
    CHECK(call({"nonsense"}).code == nearcentral::cli::kExitUsage);
    CHECK(call({"genchar", "--n", "3"}).code == nearcentral::cli::kExitUsage);
    CHECK(call({"starfact", "closed", "--case", "sideways", "--n", "3", "--r", "2"}).code == nearcentral::cli::kExitDomain);
    CHECK(call({"--help"}).code == nearcentral::cli::kExitOk);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args{"oracle", "jm-power", "--n", "5", "--r", "4"};
    auto first = call(args);
    for (int k = 0; k < 3; ++k) CHECK(call(args).out == first.out);
}
