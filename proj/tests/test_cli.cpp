#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(MAXSYM_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("classify P432 alpha up to index 8 gives four rows") {
    const auto r = run("classify P432 alpha --max-index 8 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 4);
    std::vector<long> idx;
    for (const auto& row : j["rows"]) idx.push_back(row["lattice_index"].get<long>());
    CHECK(idx == std::vector<long>{1, 2, 4, 8});
    CHECK(j["rows"][0]["series"] == "T_{n^3}");
    CHECK(j["rows"][3]["family"]["n"] == 2);

    const auto csv = run("classify P432 a --max-index 8 --format csv");
    CHECK(csv.code == 0);
    CHECK(count_lines(csv.out) == 5);
}

TEST_CASE("genus 65 has five actions") {
    const auto r = run("table --max-genus 65 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "maxsym/1");
    bool seen = false;
    for (const auto& g : j["genera"]) {
        if (g["genus"] != 65) continue;
        seen = true;
        CHECK(g["count"] == 5);
        CHECK(g["unknotted"] == 3);
        CHECK(g["knotted"] == 2);
        CHECK(g["group_order"] == 768);
    }
    CHECK(seen);
}

TEST_CASE("verify passes with nine rows") {
    const auto r = run("verify --max-index 0");
    CHECK(r.code == 0);
    std::size_t pass = 0, pos = 0;
    while ((pos = r.out.find("PASS ", pos)) != std::string::npos) {
        ++pass;
        ++pos;
    }
    CHECK(pass == 9);
    CHECK(r.out.find("overall: PASS") != std::string::npos);
}

TEST_CASE("inspection subcommands") {
    const auto groups = run("groups --format json");
    CHECK(groups.code == 0);
    CHECK(nlohmann::json::parse(groups.out)["groups"].size() == 6);

    const auto sg = run("singular-graph I4_132 --format json");
    CHECK(sg.code == 0);
    CHECK(nlohmann::json::parse(sg.out)["edges"].size() > 0);

    const auto edges = run("edges P4232 --format json");
    CHECK(edges.code == 0);
    CHECK(nlohmann::json::parse(edges.out)["edges"].size() == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("classify P999 alpha").code == 2);
    CHECK(run("classify P432 delta").code == 2);
    CHECK(run("classify P432 beta").code == 2);
    CHECK(run("table --max-genus 1").code == 2);
    CHECK(run("groups --format csv").code == 2);
    CHECK(run("--help").code == 0);
}
