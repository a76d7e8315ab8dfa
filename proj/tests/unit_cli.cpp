#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(INTSPACE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::string> cells(const std::string& row) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : row) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct TempCsv {
    std::string path;
    explicit TempCsv(const std::string& content) {
        static int counter = 0;
        path = "unit_cli_tmp_" + std::to_string(counter++) + ".csv";
        std::ofstream out(path);
        out << content;
    }
    ~TempCsv() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("moments closed uniform") {
    const RunResult r = run("moments --dist uniform:0,1 --n 9 --i 5 --w 2");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "dist,n,i,w,method,mean,variance,error_estimate");
    const auto row = cells(rows[1]);
    REQUIRE(row.size() == 8);
    CHECK(std::stod(row[5]) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("moments closed exponential") {
    const RunResult r = run("moments --dist exp:1 --n 50 --i 25 --w 5 --method closed");
    CHECK(r.exit_code == 0);
    double expected = 0.0;
    for (int j = 26; j <= 30; ++j) expected += 1.0 / j;
    const auto row = cells(lines(r.out)[1]);
    CHECK(std::stod(row[5]) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(std::stod(row[6]) > 0.0);
}

TEST_CASE("moments closed logistic leaves variance empty") {
    const RunResult r = run("moments --dist logistic:0,1 --n 12 --i 7 --w 3");
    CHECK(r.exit_code == 0);
    const auto row = cells(lines(r.out)[1]);
    REQUIRE(row.size() == 8);
    CHECK(row[6].empty());
    CHECK(std::stod(row[5]) > 0.0);
}

TEST_CASE("moments quad agrees with closed") {
    const RunResult closed = run("moments --dist exp:1 --n 6 --i 5 --w 2 --method closed");
    const RunResult quad = run("moments --dist exp:1 --n 6 --i 5 --w 2 --method quad");
    CHECK(quad.exit_code == 0);
    const double mc = std::stod(cells(lines(closed.out)[1])[5]);
    const double mq = std::stod(cells(lines(quad.out)[1])[5]);
    CHECK(mq == doctest::Approx(mc).epsilon(1e-6));
}

TEST_CASE("moments sim is seeded and plausible") {
    const RunResult a = run("moments --dist uniform:0,1 --n 9 --i 5 --w 2 --method sim "
                            "--reps 2000 --seed 7");
    const RunResult b = run("moments --dist uniform:0,1 --n 9 --i 5 --w 2 --method sim "
                            "--reps 2000 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const double m = std::stod(cells(lines(a.out)[1])[5]);
    CHECK(m == doctest::Approx(0.2).epsilon(0.1));
}

TEST_CASE("exit codes") {
    CHECK(run("moments --dist exp:1 --n 50 --i 5 --w 10").exit_code == 1);
    CHECK(run("moments --dist gauss:0,1 --n 9 --i 5 --w 2").exit_code == 1);
    CHECK(run("moments --dist exp:1 --n 9 --i 5").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("moments --help").exit_code == 0);
}

TEST_CASE("precision env override is validated") {
    const std::string cmd = std::string("INTSPACE_PRECISION_BITS=1 ") + INTSPACE_CLI_PATH +
                            " moments --dist exp:1 --n 9 --i 5 --w 2 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (fread(buf, 1, sizeof(buf), pipe) > 0) {
    }
    CHECK(WEXITSTATUS(pclose(pipe)) == 1);
}

TEST_CASE("density grid") {
    const RunResult r = run("density --dist uniform:0,1 --n 9 --i 5 --w 2 "
                            "--y-min 0 --y-max 1 --points 5");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "y,f");
    CHECK(std::stod(cells(rows[1])[0]) == 0.0);
    CHECK(std::stod(cells(rows[5])[0]) == 1.0);
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(std::stod(cells(rows[k])[1]) >= 0.0);
    CHECK(run("density --dist uniform:0,1 --n 9 --i 5 --w 2 --y-max 1 --points 1")
              .exit_code == 1);
}

TEST_CASE("simulate summaries") {
    const RunResult r = run("simulate --dist uniform:0,1 --n 8 --w-list 2,3 --i-list 5 "
                            "--reps 300 --seed 3");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "i,w,emp_mean,emp_var,q25,median,q75,closed_mean");
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto row = cells(rows[k]);
        REQUIRE(row.size() == 8);
        const double emp = std::stod(row[2]);
        const double closed = std::stod(row[7]);
        CHECK(emp == doctest::Approx(closed).epsilon(0.25));
    }
}

TEST_CASE("verify suite") {
    const RunResult r = run("verify --max-n 8 --max-w 3");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "check,cases,max_abs_err,status");
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto row = cells(rows[k]);
        REQUIRE(row.size() == 4);
        CHECK(row[3] == "pass");
    }
    const RunResult canary = run("verify --max-n 6 --max-w 2 --canary");
    CHECK(canary.exit_code == 1);
    CHECK(cells(lines(canary.out)[1])[3] == "fail");
}

TEST_CASE("spectrum output") {
    const RunResult r = run("spectrum --n 20 --w 3 --seed 1");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 33);  // header + next power of two above 21
    CHECK(rows[0] == "freq,spacing_spectrum,interval_spectrum,ratio,kernel_response,retained");
}

TEST_CASE("autocov output") {
    const RunResult r = run("autocov --n 30 --w 3 --i 20 --reps 100 --seed 2 --max-lag 5");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "lag,empirical_cov,predicted,se");
    CHECK(std::stod(cells(rows[1])[1]) > 0.0);
    CHECK(run("autocov --n 30 --w 3 --i 20 --reps 100 --seed 2 --max-lag 12").exit_code == 1);
}

TEST_CASE("profile command") {
    TempCsv f("depth\n0\n1\n3\n6\n");
    const RunResult byname = run("profile --input " + f.path + " --column depth --w-list 1,2");
    CHECK(byname.exit_code == 0);
    const auto rows = lines(byname.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "w,i,spacing");
    CHECK(rows[1] == "1,2,1");
    CHECK(rows[3] == "1,4,3");
    CHECK(rows[4] == "2,3,3");
    const RunResult byindex = run("profile --input " + f.path + " --column 0 --w-list 1,2");
    CHECK(byindex.out == byname.out);
    CHECK(run("profile --input no_such.csv --w-list 1").exit_code == 1);
}
