#include <doctest.h>

#include <array>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(WCC_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t nread;
    while ((nread = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), nread);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<json> parse_lines(const std::string& out) {
    std::vector<json> rows;
    std::size_t pos = 0;
    while (pos < out.size()) {
        std::size_t nl = out.find('\n', pos);
        if (nl == std::string::npos) nl = out.size();
        std::string line = out.substr(pos, nl - pos);
        if (!line.empty()) rows.push_back(json::parse(line));
        pos = nl + 1;
    }
    return rows;
}

// (n, k, d_exact or -1) triples present in the output
std::multiset<std::array<int, 3>> triples(const std::vector<json>& rows) {
    std::multiset<std::array<int, 3>> t;
    for (const auto& r : rows)
        t.insert({r["n"].get<int>(), r["k"].get<int>(),
                  r.contains("d_exact") ? r["d_exact"].get<int>() : -1});
    return t;
}

}  // namespace

TEST_CASE("table reproduces the m=3,4 parameter rows") {
    RunResult r = run("table --family mod3 --m 3..4");
    CHECK(r.code == 0);
    auto rows = parse_lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(triples(rows) == std::multiset<std::array<int, 3>>{
                               {7, 7, 1}, {7, 4, 3}, {7, 4, 3},
                               {15, 11, 3}, {15, 11, 3}, {15, 9, 4}});

    RunResult rd = run("table --family mod3-dual --m 3..4");
    CHECK(rd.code == 0);
    auto drows = parse_lines(rd.out);
    REQUIRE(drows.size() == 6);
    CHECK(triples(drows) == std::multiset<std::array<int, 3>>{
                                {7, 0, -1}, {7, 3, 4}, {7, 3, 4},
                                {15, 4, 8}, {15, 4, 8}, {15, 6, 6}});
}

TEST_CASE("table lists the duadic pair and its duals at m = 5") {
    RunResult r = run("table --family duadic --m 5");
    CHECK(r.code == 0);
    auto rows = parse_lines(r.out);
    REQUIRE(rows.size() == 4);
    auto t = triples(rows);
    CHECK(t.count({31, 16, 7}) == 2);
    CHECK(t.count({31, 15, 8}) == 2);
}

TEST_CASE("generator polynomial text forms are available") {
    RunResult r = run("table --family mod3 --m 3 --with-gen");
    CHECK(r.code == 0);
    auto rows = parse_lines(r.out);
    REQUIRE(rows.size() == 3);
    bool saw_hamming = false;
    for (const auto& row : rows) {
        if (row["family"] == "mod3:1") {
            CHECK(row["gen_bits"] == "1101");
            CHECK(row["gen"] == "x^3+x+1");
            saw_hamming = true;
        }
    }
    CHECK(saw_hamming);
}

TEST_CASE("verify subcommands pass and exit 0") {
    CHECK(run("verify lemmas --m-max 12").code == 0);
    CHECK(run("verify theorems --m-max 12").code == 0);
    RunResult r = run("verify duadic --m 5");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    REQUIRE(rep.is_array());
    CHECK(rep.size() == 9);
    for (const auto& item : rep) CHECK(item["status"] != "fail");
    CHECK(run("verify certificates --m-max 7").code == 0);
}

TEST_CASE("mindist engines") {
    RunResult ex = run("mindist --family mod3 --m 5 --i 1 --method exhaustive");
    CHECK(ex.code == 0);
    auto rows = parse_lines(ex.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["d_exact"] == 5);
    CHECK(rows[0]["k"] == 21);

    RunResult mm = run("mindist --family mod3 --m 6 --i 0 --method mitm --wmax 8");
    CHECK(mm.code == 0);
    auto mrows = parse_lines(mm.out);
    REQUIRE(mrows.size() == 1);
    CHECK(mrows[0]["d_exact"] == 6);
    CHECK(mrows[0]["k"] == 43);

    RunResult rnd = run("mindist --family duadic --m 7 --member 0 --method randomized "
                        "--target 15 --seed 42");
    CHECK(rnd.code == 0);
    auto rrows = parse_lines(rnd.out);
    REQUIRE(rrows.size() == 1);
    CHECK(rrows[0]["family"] == "duadic:01");
    CHECK(rrows[0]["d_upper"] == 15);
    CHECK(rrows[0]["d_lower"] == 11);
    CHECK(rrows[0]["seed"] == 42);
}

TEST_CASE("exit codes: usage and engine limits") {
    CHECK(run("table --family nosuch --m 3").code == 2);
    CHECK(run("table --m 9..3").code == 2);
    CHECK(run("nosuchcommand").code == 2);
    CHECK(run("mindist --family mod3 --m 6 --i 0 --method randomized --target 6").code == 2);
    // k = 43 exceeds the exhaustive limit
    CHECK(run("mindist --family mod3 --m 6 --i 0 --method exhaustive").code == 3);
}

TEST_CASE("identical run configs give byte-identical output") {
    std::string cmd = "mindist --family duadic --m 7 --member 1 --method randomized "
                      "--target 15 --seed 9 --iterations 5000";
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("--out writes the same bytes as stdout") {
    std::string path = "/tmp/wcc_cli_out_test.jsonl";
    std::remove(path.c_str());
    RunResult direct = run("table --family duadic --m 5");
    RunResult filed = run("table --family duadic --m 5 --out " + path);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string content;
    std::array<char, 4096> buf;
    std::size_t nread;
    while ((nread = fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), nread);
    fclose(f);
    std::remove(path.c_str());
    CHECK(content == direct.out);
}

TEST_CASE("CSV and JSON projections carry the same values") {
    RunResult js = run("table --family mod3 --m 4");
    RunResult cs = run("table --family mod3 --m 4 --format csv");
    CHECK(js.code == 0);
    CHECK(cs.code == 0);
    auto rows = parse_lines(js.out);

    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < cs.out.size()) {
        std::size_t nl = cs.out.find('\n', pos);
        if (nl == std::string::npos) nl = cs.out.size();
        if (nl > pos) lines.push_back(cs.out.substr(pos, nl - pos));
        pos = nl + 1;
    }
    REQUIRE(lines.size() == rows.size() + 1);  // header
    CHECK(lines[0].starts_with("family,m,n,k,d_lower,d_exact,d_upper,method,seed"));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& r = rows[i];
        std::string expect = r["family"].get<std::string>() + "," +
                             std::to_string(r["m"].get<int>()) + "," +
                             std::to_string(r["n"].get<int>()) + "," +
                             std::to_string(r["k"].get<int>()) + "," +
                             std::to_string(r["d_lower"].get<int>()) + "," +
                             std::to_string(r["d_exact"].get<int>()) + ",";
        CHECK(lines[i + 1].starts_with(expect));
    }
}
