// End-to-end checks of the command-line tool: spawns the built binary,
// inspects exit codes and emitted files.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "csusy/io.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(CSUSY_CLI_PATH) + " " + args + " >cli_stdout.txt 2>cli_stderr.txt";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

struct TempDir {
    fs::path prev;
    TempDir() : prev(fs::current_path()) {
        fs::create_directories("cli_test_out");
        fs::current_path("cli_test_out");
    }
    ~TempDir() { fs::current_path(prev); }
};

} // namespace

TEST_CASE("partner: default box run emits CSV plus sidecar") {
    TempDir td;
    REQUIRE(run("partner --model box --out partner.csv") == 0);

    const auto series = csusy::io::read_csv("partner.csv");
    REQUIRE(series.x.size() == 501);
    REQUIRE(series.columns.size() == 4); // V_partner + 3 states
    CHECK(series.x.front() == 0.0);
    CHECK(std::abs(series.columns[0].second.front()) < 1e-12); // V~(0) = 0

    const auto meta = load_json("partner.csv.json");
    CHECK(meta["model"] == "box");
    // ray endpoints are computed limits: 0 within 1e-10 and exactly-printed 0.5
    const std::string krange = meta["admissible_K"].get<std::string>();
    CHECK(krange.find("(-inf, ") == 0);
    CHECK(krange.find("U [0.5, inf)") != std::string::npos);
    CHECK(meta["regular"] == true);
    REQUIRE(meta["states"].size() == 3);
    CHECK(meta["states"][0]["rule"] == "phi");
    CHECK(meta["states"][1]["rule"] == "missing");
    CHECK(meta["states"][2]["rule"] == "phi");
    for (const auto& s : meta["states"]) CHECK(s["max_residual"].get<double>() < 1e-5);
}

TEST_CASE("partner: irregular K exits 2 and reports the zero; --force overrides") {
    TempDir td;
    CHECK(run("partner --model box --k 0.25 --out x.csv") == 2);
    CHECK(slurp("cli_stderr.txt").find("Wronskian zero") != std::string::npos);
    CHECK(run("partner --model box --k 0.25 --force --out x.csv") == 0);
}

TEST_CASE("partner and regularity are rejected for the energy-dependent model") {
    TempDir td;
    CHECK(run("partner --model edho --out y.csv") == 1);
    CHECK(run("regularity --model edho") == 1);
}

TEST_CASE("verify output is deterministic for a fixed seed") {
    TempDir td;
    REQUIRE(run("verify --seed 7 --out v1.json") == 0);
    REQUIRE(run("verify --seed 7 --out v2.json") == 0);
    CHECK(slurp("v1.json") == slurp("v2.json"));
}

TEST_CASE("partner: radial oscillator reference parameters") {
    TempDir td;
    REQUIRE(run("partner --model radial_osc --ell 1 --lambda 8 --k -0.01 "
                "--grid 0.05:6:301 --out rosc.csv") == 0);
    const auto meta = load_json("rosc.csv.json");
    CHECK(meta["regular"] == true);
    for (const auto& s : meta["states"]) CHECK(s["max_residual"].get<double>() < 1e-5);
    // second state is the new level at the factorization energy
    CHECK(meta["states"][1]["rule"] == "missing");
    CHECK(meta["states"][1]["energy"].get<double>() == 8.0);
}

TEST_CASE("partner: integral representation with the mapped constant") {
    TempDir td;
    // default omega0 = K + W_{u,u_lambda}(x0) reproduces the df transform
    REQUIRE(run("partner --model box --rep vc --out vc.csv") == 0);
    const auto meta = load_json("vc.csv.json");
    CHECK(meta["representation"] == "vc");
    CHECK(meta["regular"] == true);
    for (const auto& s : meta["states"]) CHECK(s["max_residual"].get<double>() < 1e-5);

    const auto vc = csusy::io::read_csv("vc.csv");
    REQUIRE(run("partner --model box --rep df --out df.csv") == 0);
    const auto df = csusy::io::read_csv("df.csv");
    double worst = 0.0;
    for (std::size_t i = 0; i < vc.x.size(); ++i)
        worst = std::max(worst, std::abs(vc.columns[0].second[i] - df.columns[0].second[i]));
    CHECK(worst < 1e-6);
}

TEST_CASE("partner: JSON format embeds data and metadata in one file") {
    TempDir td;
    REQUIRE(run("partner --model box --format json --out partner.json") == 0);
    const auto doc = load_json("partner.json");
    CHECK(doc["data"]["x"].size() == 501);
    CHECK(doc["data"]["V_partner"].size() == 501);
}

TEST_CASE("verify: exit codes track failures") {
    TempDir td;
    CHECK(run("verify --seed 42 --out verify.json") == 0);
    const auto doc = load_json("verify.json");
    CHECK(doc["failures"] == 0);
    // unattainable tolerance forces controlled failures
    CHECK(run("verify --residual-tol 1e-30") == 1);
    // model filter keeps the energy-dependent norm check
    REQUIRE(run("verify --model edho --out verify_edho.json") == 0);
    const auto edho_doc = load_json("verify_edho.json");
    bool has_norm_check = false;
    for (const auto& c : edho_doc["checks"])
        if (c["name"] == "wronskid.edho_norm_wronskian") has_norm_check = true;
    CHECK(has_norm_check);
}

TEST_CASE("norm: box amplitude and energy-dependent ground state") {
    TempDir td;
    REQUIRE(run("norm --model box --n 1 --out norm_box.json") == 0);
    auto doc = load_json("norm_box.json");
    CHECK(std::abs(doc["norm_wronskian"].get<double>() - 0.5) < 1e-10);
    CHECK(std::abs(doc["A"].get<double>() - std::sqrt(2.0)) < 1e-10);

    REQUIRE(run("norm --model edho --out norm_edho.json") == 0);
    doc = load_json("norm_edho.json");
    const double target = 0.8862269254527580;
    CHECK(std::abs(doc["norm_wronskian"].get<double>() - target) < 1e-7);
    CHECK(std::abs(doc["norm_quadrature"].get<double>() - target) < 1e-7);
    CHECK(doc["difference"].get<double>() < 1e-7);

    // oscillator eigenstates report quadrature only (parameter-derivative pole)
    REQUIRE(run("norm --model radial_osc --n 0 --out norm_rosc.json") == 0);
    doc = load_json("norm_rosc.json");
    CHECK(doc["norm_wronskian"].is_null());
    CHECK(doc["norm_quadrature"].get<double>() > 0.0);
}

TEST_CASE("integrate: box quarter integral") {
    TempDir td;
    REQUIRE(run("integrate --model box --family u1 --x0 0 --x 0.5 "
                "--lambda 9.8696044010893586 --out int.json") == 0);
    const auto doc = load_json("int.json");
    CHECK(std::abs(doc["wronskian"].get<double>() - 0.25) < 1e-12);
    CHECK(doc["difference"].get<double>() < 1e-9);
}

TEST_CASE("regularity: reports rays and located zeros") {
    TempDir td;
    REQUIRE(run("regularity --model box --k 0.25 --out reg.json") == 0);
    auto doc = load_json("reg.json");
    CHECK(doc["regular"] == false);
    CHECK(std::abs(doc["wronskian_zero"].get<double>() - 0.5) < 1e-5);
    CHECK(std::abs(doc["K_left_max"].get<double>()) < 1e-10);
    CHECK(std::abs(doc["K_right_min"].get<double>() - 0.5) < 1e-10);

    REQUIRE(run("regularity --model radial_osc --out reg2.json") == 0);
    doc = load_json("reg2.json");
    CHECK(doc["K_right_min"].is_null()); // no right ray: u diverges at infinity
    CHECK(doc["regular"] == true);
}

TEST_CASE("config file provides defaults, flags override") {
    TempDir td;
    {
        std::ofstream cfg("run.cfg");
        cfg << "model=box\n" << "k=0.25\n";
    }
    CHECK(run("partner --config run.cfg --out c.csv") == 2);     // config K irregular
    CHECK(run("partner --config run.cfg --k 0.555 --out c.csv") == 0); // flag wins
}

TEST_CASE("emitted CSV re-serializes byte-identically") {
    TempDir td;
    REQUIRE(run("partner --model box --out rt.csv") == 0);
    const auto series = csusy::io::read_csv("rt.csv");
    csusy::io::write_csv("rt2.csv", series);
    CHECK(slurp("rt.csv") == slurp("rt2.csv"));
}
