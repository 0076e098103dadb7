#include "gwlp/cli.hpp"
#include "gwlp/fraction_file.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace gwlp;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_command(args, out, err);
    return {status, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("gwlp_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return file(name);
    }
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("make-latin, gwlp and dist on the cyclic 5^3 OA") {
    TempDir tmp;
    const auto path = tmp.file("regular5.txt");
    auto r = run({"make-latin", "--cyclic", "5", "-o", path});
    REQUIRE(r.status == kExitOk);
    CHECK(contains(r.out, "wrote 25 runs"));

    r = run({"gwlp", path});
    CHECK(r.status == kExitOk);
    CHECK(contains(r.out, "A = (0, 0, 4)\n"));
    CHECK(contains(r.out, "route: mean (exact)"));
    r = run({"gwlp", path, "--classic"});
    CHECK(contains(r.out, "A = (0, 0, 4)\n"));
    CHECK(contains(r.out, "route: classic (exact)"));
    CHECK(run({"gwlp", path, "--mean", "--classic"}).status == kExitUsage);

    r = run({"dist", path, "--order", "3"});
    CHECK(r.status == kExitOk);
    CHECK(contains(r.out, "order 3 mean aberrations (64 terms)"));
    CHECK(contains(r.out, "0 : 60\n"));
    CHECK(contains(r.out, "1 : 4\n"));

    r = run({"dist", path, "--order", "3", "--format", "csv"});
    CHECK(r.out == "value_exact,value_decimal,count\n0,0.0000,60\n1,1.0000,4\n");

    r = run({"dist", path, "--order", "3", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["gwlp"]["values"] == nlohmann::json::array({"0", "0", "4"}));
    CHECK(j["distributions"]["3"]["total"] == 64);
    CHECK(j["design"]["levels"] == nlohmann::json::array({5, 5, 5}));
}

TEST_CASE("make-regular and make-latin with an explicit square") {
    TempDir tmp;
    const auto regular = tmp.file("r.txt");
    CHECK(run({"make-regular", "--levels", "3,3,3", "--word", "1,1,1:0", "--word", "1,1,2:0", "-o", regular}).status ==
          kExitOk);
    CHECK(read_fraction_file(regular).size() == 3);
    const auto latin = tmp.file("l.txt");
    CHECK(run({"make-latin", "--square", "0 1 2 3 4;1 0 3 4 2;2 3 4 0 1;3 4 1 2 0;4 2 0 1 3", "-o", latin}).status ==
          kExitOk);
    const auto r = run({"dist", latin, "--order", "3"});
    CHECK(r.status == kExitOk);
    CHECK(contains(r.out, "(64 terms)"));

    auto bad = run({"make-latin", "--square", "0 1;0 1", "-o", tmp.file("x.txt")});
    CHECK(bad.status == kExitValidation);
    CHECK(contains(bad.err, "column"));
    CHECK(run({"make-latin", "-o", tmp.file("x.txt")}).status == kExitUsage);
    CHECK(run({"make-regular", "--levels", "4,4", "--word", "1,1:0", "-o", tmp.file("x.txt")}).status ==
          kExitValidation);
}

TEST_CASE("coeff") {
    TempDir tmp;
    const auto path = tmp.write("parity.txt", "4 3\n2 2 2\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n");
    auto r = run({"coeff", path, "--alpha", "1,1,1", "--check-convolution"});
    CHECK(r.status == kExitOk);
    CHECK(contains(r.out, "counts = (4, 0)"));
    CHECK(contains(r.out, "c_alpha = 0.5 + 0i"));
    CHECK(contains(r.out, "a_alpha = 1\n"));
    CHECK(contains(r.out, "mean a_alpha = 1\n"));
    CHECK(contains(r.out, "convolution: holds"));

    const auto four = tmp.write("four.txt", "6 1\n4\n0\n1\n1\n2\n3\n3\n");
    r = run({"coeff", four, "--alpha", "2"});
    CHECK(contains(r.out, "t = 2"));
    CHECK(contains(r.out, "a_alpha = 1/9 (0.1111)"));
    r = run({"coeff", four, "--alpha", "1"});
    CHECK(contains(r.out, "mean a_alpha = 1/27 (0.0370)"));
    CHECK(run({"coeff", four, "--alpha", "1", "--check-convolution"}).status == kExitValidation);
    CHECK(run({"coeff", four, "--alpha", "4"}).status == kExitValidation);
    CHECK(run({"coeff", four, "--alpha", "x"}).status == kExitValidation);
    CHECK(run({"gwlp", four}).out == "A = (1/9)\nroute: classic (exact)\n");
    CHECK(run({"gwlp", four, "--mean"}).status == kExitValidation);
}

TEST_CASE("compare") {
    TempDir tmp;
    const auto a = tmp.file("a.txt");
    REQUIRE(run({"make-latin", "--cyclic", "5", "-o", a}).status == kExitOk);
    const auto b = tmp.file("b.txt");
    fs::copy_file(a, b);
    auto r = run({"compare", a, b});
    CHECK(r.status == kExitOk);
    CHECK(contains(r.out, "GMA: equal"));
    CHECK(contains(r.out, "order 3 mean aberrations (identical)"));
    CHECK(r.out.find(" 60 |") != std::string::npos);
    CHECK(r.out.find("|", r.out.find(" 60 |") + 5) != std::string::npos);

    const auto full = tmp.write("full.txt", "8 3\n2 2 2\n0 0 0\n0 0 1\n0 1 0\n0 1 1\n1 0 0\n1 0 1\n1 1 0\n1 1 1\n");
    const auto half = tmp.write("half.txt", "4 3\n2 2 2\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n");
    r = run({"compare", half, full});
    CHECK(contains(r.out, "GMA ranking (best first):\n  1. " + full + "\n  2. " + half + "\n"));
    CHECK(run({"compare", a}).status == kExitUsage);
    const auto two = tmp.write("two.txt", "2 2\n2 2\n0 0\n1 1\n");
    CHECK(run({"compare", a, two}).status == kExitValidation);
}

TEST_CASE("admissible and enum-admissible") {
    TempDir tmp;
    const auto a = tmp.file("a.txt");
    REQUIRE(run({"make-latin", "--cyclic", "3", "-o", a}).status == kExitOk);
    auto r = run({"admissible", a});
    CHECK(r.status == kExitOk);
    CHECK(contains(r.out, "admissible: yes"));
    CHECK(contains(r.out, "equations checked: 27"));
    r = run({"admissible", a, "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["admissibility"]["admissible"] == true);

    const auto dup = tmp.write("dup.txt", "2 2\n3 3\n0 0\n0 0\n");
    r = run({"admissible", dup});
    CHECK(contains(r.out, "admissible: no"));
    CHECK(contains(r.out, "violated at alpha"));
    CHECK(run({"admissible", dup, "--require-single-replicate"}).status == kExitValidation);

    r = run({"enum-admissible", "--levels", "3,3,3", "--runs", "9", "--strength", "2", "--free", "1,1,1"});
    CHECK(r.status == kExitOk);
    CHECK(contains(r.out, "4 admissible configurations"));
    for (const auto* c : {"n(1,1,1) = (3, 3, 3)", "n(1,1,1) = (9, 0, 0)", "n(1,1,1) = (0, 9, 0)", "n(1,1,1) = (0, 0, 9)"})
        CHECK(contains(r.out, c));
    CHECK(contains(r.out, "n(2,2,2) = (9, 0, 0)"));

    r = run({"enum-admissible", "--levels", "5,5,5", "--runs", "25", "--strength", "2", "--free", "1,1,1", "--free",
             "1,2,3", "--budget", "1000"});
    CHECK(r.status == kExitValidation);
    CHECK(contains(r.err, "budget"));
    CHECK(run({"enum-admissible", "--levels", "3,3,3", "--runs", "8", "--strength", "2", "--free", "1,1,1"}).status ==
          kExitValidation);
}

TEST_CASE("usage and file errors") {
    CHECK(run({}).status == kExitUsage);
    CHECK(run({"bogus"}).status == kExitUsage);
    CHECK(run({"gwlp"}).status == kExitUsage);
    CHECK(run({"dist", "x.txt", "--order", "3", "--format", "xml"}).status == kExitUsage);
    CHECK(run({"gwlp", "/nonexistent/x.txt"}).status == kExitValidation);
    const auto help = run({"--help"});
    CHECK(help.status == kExitOk);
    CHECK(contains(help.out, "enum-admissible"));

    TempDir tmp;
    const auto bad = tmp.write("bad.txt", "2 2\n3 3\n0 0\n0 3\n");
    const auto r = run({"gwlp", bad});
    CHECK(r.status == kExitValidation);
    CHECK(contains(r.err, "line 4"));
}
