#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "csusy/io.hpp"
#include "csusy/rng.hpp"

using namespace csusy;

TEST_CASE("CSV round-trips doubles bit-exactly") {
    Lcg64 rng(42);
    GridSeries s;
    for (int i = 0; i < 200; ++i) {
        s.x.push_back(rng.uniform(-10.0, 10.0));
    }
    std::vector<double> a, b;
    for (int i = 0; i < 200; ++i) {
        a.push_back(rng.uniform(-1e8, 1e8));
        b.push_back(rng.uniform(-1e-8, 1e-8));
    }
    s.add_column("a", a);
    s.add_column("b", b);

    const std::string path = "io_roundtrip_test.csv";
    io::write_csv(path, s);
    const GridSeries r = io::read_csv(path);
    REQUIRE(r.x.size() == s.x.size());
    REQUIRE(r.columns.size() == 2);
    CHECK(r.columns[0].first == "a");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        CHECK(r.x[i] == s.x[i]);
        CHECK(r.columns[0].second[i] == a[i]);
        CHECK(r.columns[1].second[i] == b[i]);
    }

    // re-serialization is byte-identical
    const std::string path2 = "io_roundtrip_test2.csv";
    io::write_csv(path2, r);
    std::ifstream f1(path, std::ios::binary), f2(path2, std::ios::binary);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    std::filesystem::remove(path);
    std::filesystem::remove(path2);
}

TEST_CASE("format_double keeps 17 significant digits") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(1.0) == "1");
    const double pi2 = 4.0 * M_PI * M_PI;
    CHECK(std::strtod(io::format_double(pi2).c_str(), nullptr) == pi2);
}

TEST_CASE("JSON writer emits parseable documents") {
    nlohmann::json j;
    j["value"] = std::sqrt(M_PI) / 2.0;
    const std::string path = "io_json_test.json";
    io::write_json(path, j);
    std::ifstream in(path);
    nlohmann::json back = nlohmann::json::parse(in);
    CHECK(back["value"].get<double>() == std::sqrt(M_PI) / 2.0);
    std::filesystem::remove(path);
}
