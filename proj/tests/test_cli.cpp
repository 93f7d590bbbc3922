#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "charpoly/geometry.hpp"
#include "charpoly/json_io.hpp"
#include "charpoly/m0n.hpp"

using namespace charpoly;

namespace {

#ifndef CHARPOLY_CLI_PATH
#error "CHARPOLY_CLI_PATH must point at the command-line binary"
#endif

struct RunResult {
    int exit_code = -1;
    std::string out;
};

int decode_status(int status) {
#ifdef _WIN32
    return status;
#else
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
#endif
}

RunResult run_cli(const std::string& args, const std::string& tag) {
    const std::string out_file = "cli_test_" + tag + ".out";
    const std::string cmd =
        std::string(CHARPOLY_CLI_PATH) + " " + args + " > " + out_file + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream is(out_file, std::ios::binary);
    std::stringstream buf;
    buf << is.rdbuf();
    std::remove(out_file.c_str());
    return RunResult{decode_status(status), buf.str()};
}

}  // namespace

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli("m0n --max-n 2", "u1").exit_code == 2);
    CHECK(run_cli("m0n", "u2").exit_code == 2);
    CHECK(run_cli("no-such-command", "u3").exit_code == 2);
    CHECK(run_cli("m0n --max-n 5 --format yaml", "u4").exit_code == 2);
    CHECK(run_cli("examples git --n 6", "u5").exit_code == 2);          // even n
    CHECK(run_cli("examples nosuch --n 3", "u6").exit_code == 2);
    CHECK(run_cli("examples hessenberg --h 2,1,3", "u7").exit_code == 2);
    CHECK(run_cli("asymp --mode value --k 5 --max-n 6", "u8").exit_code == 2);
    CHECK(run_cli("", "u9").exit_code == 2);
}

TEST_CASE("help exits with status 0") {
    CHECK(run_cli("--help", "h1").exit_code == 0);
    CHECK(run_cli("m0n --help", "h2").exit_code == 0);
}

TEST_CASE("table output round-trips through the serialized form") {
    const RunResult r = run_cli("m0n --max-n 5 --format json", "j1");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json payload = nlohmann::json::parse(r.out);
    CHECK(payload.at("command") == "m0n");
    const auto& results = payload.at("results");
    REQUIRE(results.size() == 3);  // n = 3, 4, 5

    const M0nTable table = compute_m0n_table(5);
    for (const auto& row : results) {
        const int n = row.at("n").get<int>();
        CHECK(bivar_from_json(row.at("P")) == table.P(n));
        CHECK(bivar_from_json(row.at("Q")) == table.Q(n));
        CHECK(bivar_from_json(row.at("Qplus")) == table.Qplus(n));
    }
    CHECK(results[1].at("betti_Q") == nlohmann::json::array({"1", "5", "1"}));
}

TEST_CASE("output is byte-identical across thread counts") {
    const RunResult a = run_cli("--threads 1 m0n --max-n 7 --format json", "t1");
    const RunResult b = run_cli("--threads 3 m0n --max-n 7 --format json", "t2");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("csv and text formats produce output") {
    const RunResult csv = run_cli("m0n --max-n 4 --format csv", "c1");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("series,n,t,m,num,den\n", 0) == 0);
    const RunResult text = run_cli("m0n --max-n 4", "c2");
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("n = 4") != std::string::npos);
}

TEST_CASE("verification sweeps succeed on small ranges") {
    CHECK(run_cli("verify --max-n 6", "v1").exit_code == 0);
    CHECK(run_cli("verify --max-n 7 --checks oracle,exponential", "v2").exit_code == 0);
    const RunResult r = run_cli("verify --max-n 6 --checks wallcrossing --format json", "v3");
    REQUIRE(r.exit_code == 0);
    const auto payload = nlohmann::json::parse(r.out);
    for (const auto& row : payload.at("results")) CHECK(row.at("pass") == true);
    CHECK(run_cli("verify --max-n 6 --checks nosuch", "v4").exit_code == 2);
}

TEST_CASE("example families through the command line") {
    const RunResult git = run_cli("examples git --n 7 --format json", "e1");
    REQUIRE(git.exit_code == 0);
    const auto payload = nlohmann::json::parse(git.out);
    const BivarPoly y7 = bivar_from_json(payload.at("results")[0].at("char_poly"));
    CHECK(y7 == git_char_poly(7));

    const RunResult nf = run_cli("examples nfold --betti 1,1 --n 3 --format json", "e2");
    REQUIRE(nf.exit_code == 0);
    const auto nfp = nlohmann::json::parse(nf.out);
    BettiProfile p1{{Int(1), Int(1)}};
    CHECK(bivar_from_json(nfp.at("results")[0].at("char_poly")) == nfold_char_poly(p1, 3));

    const RunResult hess = run_cli("examples hessenberg --h 2,3,3 --format json", "e3");
    REQUIRE(hess.exit_code == 0);
    const auto hp = nlohmann::json::parse(hess.out);
    CHECK(hp.at("results")[0].at("chromatic_check") == true);

    // graph family needs a file
    {
        std::ofstream g("cli_test_graph.txt");
        g << "3\n1 2\n2 3\n";
    }
    const RunResult graph = run_cli("examples graph --file cli_test_graph.txt --format json", "e4");
    std::remove("cli_test_graph.txt");
    REQUIRE(graph.exit_code == 0);
    const auto gp = nlohmann::json::parse(graph.out);
    const UniPoly chrom = unipoly_m_from_json(gp.at("results")[0].at("chromatic"));
    const UniPoly m = UniPoly::variable();
    CHECK(chrom == m * (m - UniPoly::constant(Rat(1))) * (m - UniPoly::constant(Rat(1))));

    CHECK(run_cli("examples graph --file does_not_exist.txt", "e5").exit_code == 2);
}

TEST_CASE("trend tables through the command line") {
    const RunResult r = run_cli("asymp --mode value --k 0 --m0 1 --max-n 8 --format json", "a1");
    REQUIRE(r.exit_code == 0);
    const auto payload = nlohmann::json::parse(r.out);
    REQUIRE(payload.at("results").size() == 2);
    for (const auto& rep : payload.at("results"))
        if (rep.at("side") == "Q")
            for (const auto& row : rep.at("rows"))
                CHECK(rat_from_json(row.at("ratio")) == Rat(1));

    const RunResult csv = run_cli("asymp --mode coeff --k 1 --j 0 --max-n 8 --format csv", "a2");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("side,n,k,j,", 0) == 0);
}

TEST_CASE("output redirection to a file") {
    const RunResult r = run_cli("--out cli_test_redirect.json m0n --max-n 4 --format json", "o1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream is("cli_test_redirect.json");
    REQUIRE(is.good());
    const auto payload = nlohmann::json::parse(is);
    CHECK(payload.at("command") == "m0n");
    is.close();
    std::remove("cli_test_redirect.json");
}
