#include <cstdlib>
#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "kepler/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"kepler"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = kepler::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("solve") {
    const auto r = run({"solve", "--e", "0", "--m-raw", "1.0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("E=1\n") != std::string::npos);
    CHECK(r.out.find("certified=true") != std::string::npos);

    const auto d = run({"solve", "--e", "0.5", "--m-raw", "1", "--digits", "15"});
    CHECK(d.code == 0);
    CHECK(d.out.find("iterations=6") != std::string::npos);
}

TEST_CASE("solve --json is one line") {
    const auto r = run({"solve", "--e", "0.9", "--m-raw", "0.5", "--json"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find('\n') == r.out.size() - 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["E"].get<double>() == doctest::Approx(1.3844127202021625769).epsilon(1e-12));
    CHECK(j["certified"].get<bool>());
    CHECK(j["e"].get<double>() == 0.9);
    CHECK(j["m_raw"].get<double>() == 0.5);
    CHECK(j["iterations"].get<int>() <= 10);
    CHECK(j.contains("residual"));
    CHECK(j.contains("starter_branch"));
}

TEST_CASE("argument and domain errors exit 2") {
    CHECK(run({"solve", "--e", "1", "--m-raw", "1"}).code == 2);
    CHECK(run({"solve", "--e", "0.5", "--m-raw", "1", "--bogus"}).code == 2);
    CHECK(run({"solve", "--e", "0.5", "--m-raw", "1", "--digits", "5", "--tol", "1e-9"}).code == 2);
    CHECK(run({"alpha", "--e", "0.5", "--m", "1", "--starter", "s99"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("alpha") {
    const auto r = run({"alpha", "--e", "0.9", "--m", "1.0", "--starter", "two-pi-over-3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("passes=true") != std::string::npos);
    const auto f = run({"alpha", "--e", "0.999", "--m", "0.00314", "--starter", "s1"});
    CHECK(f.code == 0);
    CHECK(f.out.find("passes=false") != std::string::npos);
}

TEST_CASE("sweep writes csv and pgm") {
    const auto csv = temp_path("kepler_cli_sweep.csv");
    CHECK(run({"sweep", "--starter", "thm1", "--grid", "8", "--out", csv.c_str()}).code == 0);
    CHECK(std::filesystem::file_size(csv) > 0);
    const auto pgm = temp_path("kepler_cli_sweep.pgm");
    CHECK(run({"sweep", "--starter", "s10", "--grid", "8", "--out", pgm.c_str(), "--format", "pgm"}).code == 0);
    CHECK(std::filesystem::file_size(pgm) == std::string("P5\n9 8\n255\n").size() + 72);
    std::filesystem::remove(csv);
    std::filesystem::remove(pgm);
}

TEST_CASE("table gen and query") {
    const auto path = temp_path("kepler_cli_table.bin");
    CHECK(run({"table", "gen", "--eps", "0.5", "--out", path.c_str()}).code == 0);
    CHECK(std::filesystem::file_size(path) == 29304);
    const auto q = run({"table", "query", "--table", path.c_str(), "--e", "0.3", "--m", "1.0"});
    CHECK(q.code == 0);
    CHECK(q.out.find("passes=true") != std::string::npos);
    CHECK(run({"table", "query", "--table", path.c_str(), "--e", "0.9", "--m", "0.1"}).code == 2);
    CHECK(run({"table", "query", "--table", "/nonexistent/table.bin", "--e", "0.3", "--m", "1"}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("verify") {
    const auto r = run({"verify", "--suite", "thm1", "--samples", "20000"});
    CHECK(r.code == 0);
    CHECK(run({"verify", "--suite", "corner"}).code == 0);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("installed binary") {
    const std::string cmd = std::string(KEPLER_CLI_PATH) + " solve --e 0.5 --m-raw 1 > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
}
