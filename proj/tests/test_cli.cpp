#include "opint/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

using namespace opint;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "opint");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

int run_binary(const std::string& args) {
    const char* bin = std::getenv("OPINT_BIN");
    if (!bin) return -1;
    const std::string cmd = std::string(bin) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("hom lists the parameters and the terminal one") {
    auto r = run({"hom", "--operad", "nat:20", "--src", "5", "--dst", "2"});
    CHECK(r.code == ExitPass);
    CHECK(r.out.find("18 1-cells") != std::string::npos);
    CHECK(r.out.find("terminal: ") != std::string::npos);
}

TEST_CASE("validate passes on builtins") {
    CHECK(run({"validate", "--operad", "trees:3"}).code == ExitPass);
    CHECK(run({"validate", "--operad", "nat", "--bound", "4"}).code == ExitPass);
}

TEST_CASE("trees prints the counts") {
    auto r = run({"trees", "--bound", "4"});
    CHECK(r.code == ExitPass);
    CHECK(r.out.find("4 leaves: 11 trees") != std::string::npos);
}

TEST_CASE("roundtrip writes a certificate") {
    auto path = (std::filesystem::temp_directory_path() / "opint_cert_test.json").string();
    auto r = run({"roundtrip", "--operad", "trees:2", "--out", path});
    CHECK(r.code == ExitPass);
    CHECK(std::filesystem::exists(path));
    std::filesystem::remove(path);
}

TEST_CASE("lift and factor") {
    auto l = run({"lift", "--operad", "trees:3", "--surjection", "3->2:[1,1,2]", "--dst", "2,(L,L)", "--fibers", "(L,L);L"});
    CHECK(l.code == ExitPass);
    CHECK(l.out.find("[3,") != std::string::npos);
    auto f = run({"factor", "--operad", "nat:3", "--src", "3", "--dst", "1"});
    CHECK(f.code == ExitPass);
    CHECK(f.out.find(" = ") != std::string::npos);
}

TEST_CASE("export-dot emits graphviz") {
    auto t = run({"export-dot", "--entity", "tree", "--tree", "((L,L),L)"});
    CHECK(t.code == ExitPass);
    CHECK(t.out.rfind("digraph", 0) == 0);
    auto c = run({"export-dot", "--entity", "cut", "--operad", "trees:3", "--src", "3,((L,L),L)", "--dst", "2,(L,L)", "--index", "0"});
    CHECK(c.code == ExitPass);
    CHECK(c.out.find("cut") != std::string::npos);
}

TEST_CASE("bad input gives usage errors") {
    CHECK(run({"hom", "--operad", "nat:3", "--src", "9", "--dst", "1"}).code == ExitUsage);
    CHECK(run({"frobnicate"}).code == ExitUsage);
    CHECK(run({"validate", "--operad", "/nonexistent.json"}).code == ExitUsage);
}

TEST_CASE("binary exit codes") {
    if (!std::getenv("OPINT_BIN")) return;
    CHECK(run_binary("trees --bound 3") == ExitPass);
    CHECK(run_binary("validate --operad terminal:2") == ExitPass);
    CHECK(run_binary("nonsense") == ExitUsage);
    CHECK(run_binary("validate --operad trees:4 --cap 5") == ExitCapped);
}
