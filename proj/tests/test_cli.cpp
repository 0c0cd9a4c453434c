#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const char* redirect = "2>/dev/null") {
    const std::string cmd = std::string(PIPKIT_BIN) + " " + args + " " + redirect;
    Run r;
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    const int status = pclose(f);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Run run_stderr(const std::string& args) {
    return run(args, "2>&1 1>/dev/null");
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("pipkit_cli_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        const auto p = path / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("certify") {
    TempDir dir;
    const Run t1 = run("construct --family fibonacci --params 1");
    REQUIRE(t1.code == 0);
    const auto file = dir.write("t1.json", t1.out);
    const Run c = run("certify " + file);
    CHECK(c.code == 0);
    const Json j = Json::parse(c.out);
    CHECK(j["command"] == "certify");
    CHECK(j["result"]["is_pip"] == true);
    CHECK(j["result"]["i"] == 1);
    CHECK(j["result"]["b"] == 9);
    CHECK(j["result"]["period"] == 2);

    const auto oct = dir.write("oct.json",
                               R"({"vertices": [["1/2","0"],["1","1/2"],["1","1"],["1/2","3/2"],)"
                               R"(["0","3/2"],["-1/2","1"],["-1/2","1/2"],["0","0"]]})");
    CHECK(run("certify " + oct).code == 1);

    CHECK(run("certify " + dir.write("empty.json", "")).code == 2);
    CHECK(run("certify " + (dir.path / "missing.json").string()).code == 2);
    CHECK(run_stderr("certify " + dir.write("bad.json", "{\"vertices\": 1}")).out.find("error:") == 0);
}

TEST_CASE("count") {
    TempDir dir;
    const auto file = dir.write("t.json", R"({"vertices": [[-3,2],[0,-1],[3,-1]]})");
    const Run r = run("count " + file + " --t 2");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out)["result"];
    CHECK(j["total"] == 28);
    CHECK(j["boundary"] == 18);
    CHECK(j["interior"] == 10);
    CHECK(run("count " + file + " --t -1").code == 2);
}

TEST_CASE("vieta") {
    const Run reduced = run("vieta --b 1 --reduced");
    CHECK(reduced.code == 0);
    CHECK(Json::parse(reduced.out)["result"] == Json::parse("[[5,20,25,1],[6,12,18,1],[8,8,16,1],[9,9,9,1]]"));

    const Run table = run("vieta --b 1 --reduced --format table");
    CHECK(table.out.find("1  9   9   9") != std::string::npos);

    const Run fam = run("vieta --b 9 --family 1,1,1 --depth 4");
    CHECK(fam.code == 0);
    const Json fj = Json::parse(fam.out)["result"];
    REQUIRE(fj.size() == 5);
    const long zs[] = {1, 4, 25, 169, 1156};
    for (int k = 0; k < 5; ++k) CHECK(fj[k]["solution"][2] == zs[k]);

    const Run seven = run("vieta --b 7 --reduced");
    CHECK(seven.code == 0);
    CHECK(Json::parse(seven.out)["result"] == Json::array());

    const Run forest = run("vieta --b 9 --forest --max-z 200");
    CHECK(forest.code == 0);
    CHECK(Json::parse(forest.out)["result"]["roots"] == Json::parse(R"(["1,1,1"])"));

    CHECK(run("vieta --b 10 --reduced").code == 2);
    CHECK(run("vieta --b 1").code == 2);
    CHECK(run("vieta --b 1 --reduced --forest --max-z 5").code == 2);
    CHECK(run("vieta --b 9 --family 1,1,2 --depth 2").code == 2);
}

TEST_CASE("construct") {
    const Run p10 = run("construct --family p10 --params 2,14");
    CHECK(p10.code == 0);
    CHECK(Json::parse(p10.out)["vertices"].size() == 4);

    const Run bad = run_stderr("construct --family t-xyz --params 4,5,81");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("NotConstructible") != std::string::npos);

    const Run range = run_stderr("construct --family p10 --params 2,15");
    CHECK(range.code == 2);
    CHECK(range.out.find("5i + 4") != std::string::npos);

    CHECK(run("construct --family nope --params 1").code == 2);
}

TEST_CASE("construct reflexive range writes files") {
    TempDir dir;
    const Run r = run("construct --family reflexive --params 0..15 --out-dir " + dir.path.string());
    CHECK(r.code == 0);
    int json = 0, svg = 0;
    for (const auto& e : fs::directory_iterator(dir.path)) {
        json += e.path().extension() == ".json";
        svg += e.path().extension() == ".svg";
    }
    CHECK(json == 16);
    CHECK(svg == 16);
    for (const auto& e : fs::directory_iterator(dir.path)) {
        if (e.path().extension() != ".json") continue;
        const Run c = run("certify " + e.path().string());
        CHECK(c.code == 0);
        CHECK(Json::parse(c.out)["result"]["i"] == 1);
    }
}

TEST_CASE("construct then certify round trip") {
    TempDir dir;
    struct Case {
        const char* family;
        const char* params;
        int i, b;
    };
    const Case cases[] = {
        {"example-b1", "3", 3, 1}, {"example-b2", "4", 4, 2}, {"t-xyz", "1,4,25", 1, 9},
        {"t-xyz", "3,6,9", 1, 2},  {"fibonacci", "3", 1, 9},  {"scott-grid", "3,12", 3, 12},
        {"p3", "3,14", 3, 14},     {"p4", "2,12", 2, 12},     {"p10", "1,9", 1, 9},
    };
    for (const auto& c : cases) {
        CAPTURE(c.family);
        CAPTURE(c.params);
        const std::string args = std::string("construct --family ") + c.family + " --params " + c.params;
        const Run first = run(args);
        REQUIRE(first.code == 0);
        CHECK(run(args).out == first.out);
        const Run cert = run("certify " + dir.write("p.json", first.out));
        CHECK(cert.code == 0);
        const Json j = Json::parse(cert.out)["result"];
        CHECK(j["i"] == c.i);
        CHECK(j["b"] == c.b);
    }
}

TEST_CASE("construct svg") {
    TempDir dir;
    const auto path = dir.path / "t.svg";
    CHECK(run("construct --family t-xyz --params 1,1,1 --svg " + path.string()).code == 0);
    const std::string a = slurp(path);
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(run("construct --family t-xyz --params 1,1,1 --svg " + path.string()).code == 0);
    CHECK(slurp(path) == a);
}

TEST_CASE("verify") {
    const Run table = run("verify --suite thm-5.6");
    CHECK(table.code == 0);
    CHECK(table.out.find("FAIL") == std::string::npos);

    CHECK(run("verify --suite lemma-1.2 --bound 300").code == 0);

    const Run general = run("verify --suite appendix --n 4 --bound 40 --json");
    CHECK(general.code == 0);
    CHECK(general.out.find("16") != std::string::npos);

    CHECK(run("verify --suite counterexamples").code == 0);
    CHECK(run("verify --suite reflexive").code == 0);
    CHECK(run("verify --suite no-such-suite").code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("--help").code == 0);
}
