#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_bin;

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = "'" + g_bin + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("torus knot")
{
    auto r = run("bounds --op torus --data '{\"p\":3,\"q\":5}'");
    CHECK(r.code == 0);
    auto j = parse(r);
    CHECK(j["slope"] == 15);
    CHECK(j["genus"] == 4);
    CHECK(j["corollary"]["status"] == "holds");
    CHECK(run("bounds --op torus --data '{\"p\":2,\"q\":4}'").code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run("--bogus").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("corpus --suite nope").code == 2);
    CHECK(run("--digits 5 bounds --op phi --data '{\"tau\":13,\"n\":5}'").code == 2);
    CHECK(run("bounds --op theorem --data '{\"which\":\"easy\",\"g1\":2,\"m1\":1,\"g2\":1,\"m2\":1,\"q1\":1,\"delta\":2}'")
              .code == 2);
}

TEST_CASE("tree oracle")
{
    auto r = run("tree --field p:3 --op oracle --matrix '[[0,-1],[1,\"1/9\"]]'");
    CHECK(r.code == 0);
    auto j = parse(r);
    CHECK(j["oracle"] == 4);
    CHECK(j["formula"] == 4);
    CHECK(j["certified"] == true);
    CHECK(run("tree --field p:3 --op length --matrix '[[2,0],[0,1]]'").code == 2);
}

TEST_CASE("failed checks exit with 1")
{
    std::string chain = "{\"alpha1\":[1,1],\"alpha2\":[1,-1],\"mu\":[1,0],\"t\":\"1/2\"";
    auto ok = run("norms --op chain --data '" + chain + "}'");
    CHECK(ok.code == 0);
    CHECK(parse(ok)["report"]["status"] == "holds");
    CHECK(run("norms --op chain --data '" + chain + ",\"factor\":\"1/100\"}'").code == 1);
}

TEST_CASE("corpus output is deterministic")
{
    auto a = run("--count 12 --seed 3 corpus --suite tree-length");
    auto b = run("--count 12 --seed 3 corpus --suite tree-length --serial");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = parse(a);
    CHECK(j["summary"]["passed"] == 12);
    auto dir = std::filesystem::temp_directory_path() / "slopebound_cli_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto out = (dir / "r.json").string();
    CHECK(run("--count 5 --out '" + out + "' corpus --suite minkowski").code == 0);
    CHECK(std::filesystem::exists(out));
    CHECK(std::filesystem::exists(dir / "r.csv"));
    auto one = run("--count 5 corpus --suite minkowski --index 3");
    CHECK(one.code == 0);
    std::filesystem::remove_all(dir);
}

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <slopebound binary> [doctest options]\n");
        return 2;
    }
    g_bin = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
