#include <doctest.h>

#include "cli.hpp"

#include "projdim/common.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace projdim;
using namespace projdim::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("projdim-test-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("count table") {
    const auto r = call({"count", "--p", "1", "--q", "2", "--n", "8", "--method", "all", "--no-cache"});
    CHECK(r.code == kOk);
    CHECK(r.out.rfind("n,oracle,paths,cocycle,agree\n1,3,3,3,true\n2,13,13,13,true\n3,59,59,59,true\n", 0) == 0);
    CHECK(r.out.find("8,116461,116461,116461,true\n") != std::string::npos);

    const auto j = nlohmann::json::parse(
        call({"count", "--p", "1", "--q", "1", "--n", "3", "--method", "cocycle", "--format", "json", "--no-cache"}).out);
    CHECK(j["command"] == "count");
    CHECK(j["rows"][0]["cocycle"] == "5");
    CHECK(j["columns"].size() == 2);
}

TEST_CASE("exit codes") {
    auto r = call({"count", "--p", "2", "--q", "4", "--no-cache"});
    CHECK(r.code == kUsageError);
    CHECK(r.err.find("NotCoprime") != std::string::npos);
    CHECK(call({"count", "--p", "0", "--q", "1", "--no-cache"}).code == kUsageError);
    CHECK(call({"count", "--p", "3", "--q", "2", "--no-cache"}).code == kUsageError);
    CHECK(call({"nonsense"}).code == kUsageError);
    CHECK(call({}).code == kUsageError);
    CHECK(call({"count", "--p", "1", "--q", "2", "--n", "11", "--method", "oracle", "--no-cache"}).code ==
          kComputationError);
    r = call({"--version"});
    CHECK(r.code == kOk);
    CHECK(r.out.find(kVersion) != std::string::npos);
    CHECK(call({"--help"}).code == kOk);
}

TEST_CASE("dimension JSON") {
    const auto r = call({"dimension", "--p", "1", "--q", "1", "--no-cache"});
    REQUIRE(r.code == kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["dim_lower"].get<double>() - 0.848002) < 1e-5);
    CHECK(j["singular"] == true);
    const auto csv = call({"dimension", "--p", "1", "--q", "1", "--format", "csv", "--no-cache"});
    CHECK(csv.out.rfind("p,q,N_upper,P_upper,h_rw,dim_estimate,dim_lower,singular\n1,1,", 0) == 0);
}

TEST_CASE("deterministic output") {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"pressure", "--p", "1", "--q", "3", "--n", "12", "--no-cache"},
          {"contraction", "--samples", "1000", "--seed", "5"},
          {"gibbs", "--p", "2", "--q", "5", "--n", "10", "--no-cache"},
          {"automaton-export", "--p", "2", "--q", "3", "--kind", "subshift", "--no-cache"}}) {
        const auto a = call(args), b = call(args);
        CHECK(a.code == kOk);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("cache round trip") {
    const auto dir = scratch("cache");
    const auto first = call({"dimension", "--p", "1", "--q", "2", "--cache-dir", dir.string()});
    REQUIRE(first.code == kOk);
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
    CHECK(files >= 1);
    const auto second = call({"dimension", "--p", "1", "--q", "2", "--cache-dir", dir.string()});
    CHECK(second.out == first.out);
    CHECK(second.out == call({"dimension", "--p", "1", "--q", "2", "--no-cache"}).out);

    const ResultCache cache(dir);
    CacheKey key{1, 2, "count-paths", 5, kVersion};
    cache.store(key, "1227");
    REQUIRE(cache.lookup(key).has_value());
    CHECK(*cache.lookup(key) == "1227");
    CacheKey bumped = key;
    bumped.version = "99.0.0";
    CHECK(!cache.lookup(bumped).has_value());
    CHECK(cache.path_for(bumped) != cache.path_for(key));

    // a corrupt entry reads as a miss and is overwritten by the next run
    {
        std::ofstream(cache.path_for(key)) << "{not json";
    }
    CHECK(!cache.lookup(key).has_value());
    const auto r = call({"count", "--p", "1", "--q", "2", "--n", "5", "--method", "paths", "--cache-dir", dir.string()});
    CHECK(r.code == kOk);
    CHECK(r.out.find("5,1227") != std::string::npos);
    CHECK(cache.lookup(key).has_value());

    // hits are served without recomputation
    cache.store(key, "7");
    CHECK(call({"count", "--p", "1", "--q", "2", "--n", "5", "--method", "paths", "--cache-dir", dir.string()})
              .out.find("5,7\n") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("run config") {
    auto c = parse_run_config(R"({"slopes": [[1, 2], [2, 3]], "computations": ["count", "entropy"], "count_n": 6})");
    CHECK(c.slopes.size() == 2);
    CHECK(c.count_n == 6);
    CHECK(parse_run_config(R"({"q_max": 3})").slopes.size() == 4);
    CHECK_THROWS_AS(parse_run_config("[1, 2]"), Error);
    CHECK_THROWS_AS(parse_run_config(R"({"slopes": [[2, 4]]})"), Error);
    CHECK_THROWS_AS(parse_run_config(R"({"computations": ["teleport"]})"), Error);
    CHECK_THROWS_AS(parse_run_config(R"({"tolerance": -1})"), Error);
}

TEST_CASE("batch") {
    const auto dir = scratch("batch");
    std::ostringstream out, err;

    RunConfig empty;
    empty.output_dir = (dir / "empty").string();
    CHECK(batch_run(empty, ResultCache{}, out, err) == kOk);
    CHECK(slurp(dir / "empty" / "summary.csv") == "p,q,N,P,dim_lower,singular,gap_ok,status\n");

    RunConfig cfg = parse_run_config(R"({"slopes": [[1, 1], [1, 2]], "computations": ["count", "entropy"],
                                         "count_n": 6, "entropy_n": 12})");
    cfg.output_dir = (dir / "capped").string();
    out.str("");
    err.str("");
    // entropy past the brute-force cap fails per slope; counts still land
    CHECK(batch_run(cfg, ResultCache{}, out, err) == kComputationError);
    CHECK(err.str().find("entropy") != std::string::npos);
    const auto doc = nlohmann::json::parse(slurp(dir / "capped" / "slope_1_2.json"));
    CHECK(doc["count"][5]["N_n"] == "5597");
    CHECK(doc["errors"].contains("entropy"));
    CHECK(slurp(dir / "capped" / "summary.csv").find("1,2,") != std::string::npos);

    cfg = parse_run_config(R"({"q_max": 3, "computations": ["dimension"], "format": "csv", "jobs": 3})");
    cfg.output_dir = (dir / "par").string();
    CHECK(batch_run(cfg, ResultCache{}, out, err) == kOk);
    const auto par = slurp(dir / "par" / "summary.csv");
    cfg.jobs = 1;
    cfg.output_dir = (dir / "seq").string();
    CHECK(batch_run(cfg, ResultCache{}, out, err) == kOk);
    CHECK(slurp(dir / "seq" / "summary.csv") == par);
    CHECK(fs::exists(dir / "seq" / "slope_2_3.csv"));
    fs::remove_all(dir);
}
