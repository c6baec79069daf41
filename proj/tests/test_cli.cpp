#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "spectable/cli.hpp"

using namespace spectable;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("spectable_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

fs::path copy_catalog(const std::string& name) {
    const fs::path dir = scratch(name);
    for (const auto& e : fs::directory_iterator(SPECTABLE_DEFAULT_CATALOG))
        if (e.path().extension() == ".grp") fs::copy_file(e.path(), dir / e.path().filename());
    return dir;
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("molien on the trivial group") {
    const auto r = call({"molien", "--group", "trivial2", "--irrep", "A", "--terms", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("coefficients: 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11\n") != std::string::npos);
    CHECK(r.out.find("closed form: 1/(1-x)^2\n") != std::string::npos);
}

TEST_CASE("unknown names exit 2 and list the alternatives") {
    auto r = call({"table", "--group", "NOPE"});
    CHECK(r.code == 2);
    CHECK(r.err.find("2D3") != std::string::npos);
    r = call({"molien", "--group", "2D3", "--irrep", "Q", "--terms", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("E_1/2") != std::string::npos);
    r = call({"table", "--group", "2D3", "--rep", "nope"});
    CHECK(r.code == 2);
    CHECK(call({"table"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"table", "--group", "2D3", "--format", "xml"}).code == 2);
    CHECK(call({"dinf", "--jmax", "1/3"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("table formats carry the same numbers") {
    const auto text = call({"table", "--group", "2O", "--terms", "10"});
    const auto csv = call({"--format", "csv", "table", "--group", "2O", "--terms", "10"});
    const auto json = call({"--format", "json", "table", "--group", "2O", "--terms", "10"});
    REQUIRE(text.code == 0);
    REQUIRE(csv.code == 0);
    REQUIRE(json.code == 0);
    const auto j = nlohmann::json::parse(json.out);
    const auto rows = split_lines(csv.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].rfind("n,j,", 0) == 0);
    for (int n = 0; n <= 10; ++n) {
        std::string expect = std::to_string(n) + "," + j["j"][n].get<std::string>();
        for (const auto& c : j["columns"]) expect += "," + std::to_string(c["counts"][n].get<long>());
        CHECK(rows[static_cast<size_t>(n) + 1] == expect);
    }
    for (const auto& c : j["columns"])
        CHECK(text.out.find(c["irrep"].get<std::string>() + ": " + c["closed_form"].get<std::string>()) !=
              std::string::npos);
}

TEST_CASE("continuous table") {
    const auto r = call({"dinf", "--jmax", "3"});
    CHECK(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 8);
    CHECK(lines[5] == "  2  1      0    1      0    1      0    0");
    CHECK(lines[6] == "5/2  0      1    0      1    0      1    0");
}

TEST_CASE("basis listing") {
    const auto r = call({"basis", "--j", "3/2"});
    CHECK(r.code == 0);
    CHECK(split_lines(r.out) == std::vector<std::string>{"3/2 3/2 +i E_3/2^L", "3/2 3/2 -i E_3/2^R",
                                                         "3/2 1/2 +1 E_1/2", "3/2 1/2 -1 E_1/2"});
    CHECK(split_lines(call({"basis", "--j", "1", "--upto"}).out).size() == 6);
}

TEST_CASE("combined ladders") {
    const auto r = call({"combine", "--group", "D3", "--blocks", "A1,A2,E", "--terms", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("specialization to A1+A2+E: matches") != std::string::npos);
    CHECK(call({"combine", "--group", "O", "--blocks", "A1g,Eg,T1u", "--terms", "3"}).code == 0);
}

TEST_CASE("verification report and corrupted tables") {
    const auto ok = call({"verify", "--group", "2D3", "--max-degree", "8"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const fs::path dir = copy_catalog("corrupt");
    {
        std::ifstream in(dir / "2O.grp");
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        const std::string from = "irrep E_1/2 spinor : 2, -2,";
        const auto pos = text.find(from);
        REQUIRE(pos != std::string::npos);
        text.replace(pos, from.size(), "irrep E_1/2 spinor : 2, -1,");
        std::ofstream(dir / "2O.grp") << text;
    }
    const auto bad = call({"--catalog", dir.string(), "verify", "--group", "2O", "--max-degree", "12"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL 2O character table") != std::string::npos);
    CHECK(call({"--catalog", dir.string(), "table", "--group", "2O", "--terms", "4"}).code == 1);
}

TEST_CASE("config file and environment") {
    const fs::path dir = scratch("config");
    std::ofstream(dir / "run.conf") << "# options\nformat = json\n";
    const auto r = call({"--config", (dir / "run.conf").string(), "molien", "--group", "2D3", "--irrep", "A_0",
                         "--terms", "8"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["coefficients"][8] == 2);
    CHECK(call({"--config", (dir / "missing.conf").string(), "list-groups"}).code == 2);

    const fs::path cat = scratch("env");
    fs::copy_file(fs::path(SPECTABLE_DEFAULT_CATALOG) / "trivial1.grp", cat / "trivial1.grp");
    ::setenv("SPECTABLE_CATALOG", cat.c_str(), 1);
    const auto l = call({"list-groups"});
    ::unsetenv("SPECTABLE_CATALOG");
    CHECK(l.code == 0);
    CHECK(split_lines(l.out).size() == 2);
    CHECK(l.out.find("trivial1") != std::string::npos);
}

TEST_CASE("oeis matching from the command line") {
    const std::string fixture = std::string(SPECTABLE_TEST_DATA) + "/stripped_fixture";
    const auto r = call({"oeis", "match", "--stripped", fixture, "--group", "2D3", "--irrep", "A_0", "--terms", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("A999901") != std::string::npos);
    const auto none =
        call({"oeis", "match", "--stripped", fixture, "--group", "2O", "--irrep", "G_3/2", "--terms", "20"});
    CHECK(none.code == 0);
    CHECK(none.out.find("no matches") != std::string::npos);
    CHECK(call({"oeis", "match", "--stripped", fixture, "--group", "2D3", "--irrep", "A_0", "--terms", "3"}).code == 2);
    CHECK(call({"oeis", "match", "--stripped", "/nonexistent", "--group", "2D3", "--irrep", "A_0"}).code == 2);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::string> args{"verify", "--group", "2T", "--max-degree", "10"};
    CHECK(call(args).out == call(args).out);
    const std::vector<std::string> serial{"--serial", "verify", "--group", "2T", "--max-degree", "10"};
    CHECK(call(args).out == call(serial).out);
}
