#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "ranktau/ranktau.hpp"

namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        std::string(RANKTAU_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    CommandResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("ranktau_cli_test_" + std::to_string(getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
};

}  // namespace

TEST_CASE("cli: version flag") {
    const auto res = run_command("--version");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find(ranktau::kVersion) != std::string::npos);
}

TEST_CASE("cli: tau value, precision and breakdown") {
    TempDir tmp;
    const std::string a = tmp.file("a.txt", "3\n2\n1\n");
    const std::string b = tmp.file("b.txt", "3\n1\n2\n");

    auto res = run_command("tau " + a + " " + b +
                           " --measure tau --weight hyperbolic --combine add --rank symmetric");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "0.545455\n");

    res = run_command("tau " + a + " " + b + " --precision 9");
    CHECK(res.output == "0.545454545\n");

    res = run_command("tau " + a + " " + b + " --breakdown");
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "0.545455");
    CHECK(lines[1].rfind("# rho-first", 0) == 0);
    CHECK(lines[2].rfind("# rho-second", 0) == 0);
    CHECK(lines[1].find("T=3.666667") != std::string::npos);
    CHECK(lines[1].find("D=0.833333") != std::string::npos);
}

TEST_CASE("cli: rank file equals the one-sided lexicographic ranking") {
    TempDir tmp;
    const std::string a = tmp.file("a.txt", "3\n2\n1\n");
    const std::string b = tmp.file("b.txt", "3\n1\n2\n");
    const std::string ranks = tmp.file("ranks.txt", "0\n1\n2\n");

    const auto from_file = run_command("tau " + a + " " + b + " --rank file:" + ranks);
    const auto one_sided = run_command("tau " + a + " " + b + " --rank first");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.output == one_sided.output);
}

TEST_CASE("cli: rank file accepts inf entries, length mismatch is exit 2") {
    TempDir tmp;
    const std::string a = tmp.file("a.txt", "3\n2\n1\n");
    const std::string b = tmp.file("b.txt", "3\n1\n2\n");
    const std::string ranks = tmp.file("ranks.txt", "0\n1\ninf\n");
    const std::string expected = [&] {
        using namespace ranktau;
        const ScoreVector r{3, 2, 1}, s{3, 1, 2};
        const double v = weighted_tau(r, s, {0, 1, kInfiniteRank},
                                      WeightScheme::hyperbolic(Combiner::Additive))
                             .value;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f\n", v);
        return std::string(buf);
    }();
    const auto res = run_command("tau " + a + " " + b + " --rank file:" + ranks);
    CHECK(res.exit_code == 0);
    CHECK(res.output == expected);

    const std::string short_ranks = tmp.file("short.txt", "0\n1\n");
    CHECK(run_command("tau " + a + " " + b + " --rank file:" + short_ranks).exit_code == 2);
}

TEST_CASE("cli: top-k matches the library") {
    using namespace ranktau;
    TempDir tmp;
    const std::string a = tmp.file("a.txt", "5\n4\n3\n2\n1\n");
    const std::string b = tmp.file("b.txt", "3\n5\n1\n2\n4\n");
    const ScoreVector r{5, 4, 3, 2, 1}, s{3, 5, 1, 2, 4};
    const auto w = WeightScheme::hyperbolic(Combiner::Additive);
    const double expected =
        (weighted_tau(r, s, truncate_ranks(lex_rank(r, s), 3), w, RankSource::LexByFirst).value +
         weighted_tau(r, s, truncate_ranks(lex_rank(s, r), 3), w, RankSource::LexBySecond).value) /
        2.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f\n", expected);

    const auto res = run_command("tau " + a + " " + b + " --top-k 3");
    CHECK(res.exit_code == 0);
    CHECK(res.output == std::string(buf));
}

TEST_CASE("cli: oracle flag verifies without changing output, and is capped") {
    TempDir tmp;
    const std::string a = tmp.file("a.txt", "3\n2\n1\n");
    const std::string b = tmp.file("b.txt", "3\n1\n2\n");
    const auto plain = run_command("tau " + a + " " + b + " --measure gamma --weight quadratic");
    const auto checked =
        run_command("tau " + a + " " + b + " --measure gamma --weight quadratic --oracle");
    CHECK(checked.exit_code == 0);
    CHECK(checked.output == plain.output);

    std::string big;
    for (int i = 0; i < 5001; ++i) big += std::to_string(i) + "\n";
    const std::string big_path = tmp.file("big.txt", big);
    CHECK(run_command("tau " + big_path + " " + big_path + " --oracle").exit_code == 64);
}

TEST_CASE("cli: column and delimiter options") {
    TempDir tmp;
    const std::string a = tmp.file("a.csv", "id,3\nid,2\nid,1\n");
    const std::string b = tmp.file("b.csv", "id,3\nid,1\nid,2\n");
    const auto res =
        run_command("tau " + a + " " + b + " --column 1 --delimiter , --weight hyperbolic");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "0.545455\n");
}

TEST_CASE("cli: ap command directions and tie handling") {
    TempDir tmp;
    const std::string a = tmp.file("a.txt", "3\n1\n2\n");
    const std::string b = tmp.file("b.txt", "3\n2\n1\n");

    auto res = run_command("ap " + a + " " + b + " --rank second");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "0.500000\n");

    res = run_command("ap " + b + " " + a + " --rank first");
    CHECK(res.output == "0.500000\n");

    const std::string tied = tmp.file("tied.txt", "1\n1\n2\n");
    res = run_command("ap " + tied + " " + a, true);
    CHECK(res.exit_code == 4);
    CHECK(res.output.find("tied.txt") != std::string::npos);

    res = run_command("ap " + tied + " " + a + " --allow-ties", true);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("non-standard") != std::string::npos);
}

TEST_CASE("cli: ap with oracle verification") {
    TempDir tmp;
    const std::string a = tmp.file("a.txt", "4\n9\n2\n7\n1\n");
    const std::string b = tmp.file("b.txt", "5\n8\n1\n6\n3\n");
    const auto res = run_command("ap " + a + " " + b + " --oracle");
    CHECK(res.exit_code == 0);
}

TEST_CASE("cli: matrix of two identical files is all ones") {
    TempDir tmp;
    const std::string a = tmp.file("a.txt", "5\n1\n3\n");
    const std::string b = tmp.file("b.txt", "5\n1\n3\n");
    const auto res = run_command("matrix " + a + " " + b);
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 3);
    CHECK(lines[1] == a + "\t1.000000\t1.000000");
    CHECK(lines[2] == b + "\t1.000000\t1.000000");
}

TEST_CASE("cli: matrix output shape, determinism across thread counts") {
    TempDir tmp;
    const std::string a = tmp.file("a.txt", "1\n2\n3\n4\n");
    const std::string b = tmp.file("b.txt", "1\n3\n2\n4\n");
    const std::string c = tmp.file("c.txt", "4\n3\n2\n1\n");

    const auto one = run_command("matrix " + a + " " + b + " " + c + " --threads 1");
    const auto four = run_command("matrix " + a + " " + b + " " + c + " --threads 4");
    CHECK(one.exit_code == 0);
    CHECK(one.output == four.output);

    const auto lines = lines_of(one.output);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == a + "\t" + b + "\t" + c);
    CHECK(lines[1].rfind(a + "\t1.000000\t", 0) == 0);

    // Every off-diagonal cell equals a pairwise tau run.
    const std::string files[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        std::istringstream row(lines[i + 1]);
        std::string cell;
        std::getline(row, cell, '\t');  // label
        for (int j = 0; j < 3; ++j) {
            std::getline(row, cell, '\t');
            if (i == j) continue;
            const auto pairwise = run_command("tau " + files[i] + " " + files[j]);
            CHECK(pairwise.output == cell + "\n");
        }
    }
}

TEST_CASE("cli: bench is deterministic for a fixed seed") {
    const auto first = run_command("bench -n 400 --reps 1 --seed 9");
    const auto second = run_command("bench -n 400 --reps 1 --seed 9");
    REQUIRE(first.exit_code == 0);

    auto tau_column = [](const std::string& text) {
        std::vector<std::string> taus;
        for (const auto& line : lines_of(text)) {
            const auto first_tab = line.find('\t');
            const auto last_tab = line.rfind('\t');
            if (line.rfind("ratio", 0) == 0 || line.rfind("n\t", 0) == 0) continue;
            if (first_tab == std::string::npos || last_tab <= first_tab) continue;
            taus.push_back(line.substr(last_tab + 1));
        }
        return taus;
    };
    const auto taus = tau_column(first.output);
    REQUIRE(taus.size() == 3);
    CHECK(taus == tau_column(second.output));

    // Header, three sizes, two ratio rows.
    CHECK(lines_of(first.output).size() == 6);
}

TEST_CASE("cli: bench completes at n=1e6 and reports positive durations") {
    const auto res = run_command("bench -n 1000000 --reps 1");
    REQUIRE(res.exit_code == 0);
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 6);
    for (int row = 1; row <= 3; ++row) {
        std::istringstream in(lines[row]);
        std::string n, ms;
        std::getline(in, n, '\t');
        std::getline(in, ms, '\t');
        CHECK(std::stod(ms) > 0.0);
    }
}

TEST_CASE("cli: scatter permutations") {
    const auto res = run_command("scatter permutations --size 3");
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 6);
    bool identity = false, reversal = false;
    for (const auto& line : lines) {
        if (line == "1.000000\t1.000000") identity = true;
        if (line == "-1.000000\t-1.000000") reversal = true;
    }
    CHECK(identity);
    CHECK(reversal);
}

TEST_CASE("cli: scatter with constant weights collapses both columns") {
    const auto res = run_command("scatter permutations --size 5 --weight constant");
    CHECK(res.exit_code == 0);
    for (const auto& line : lines_of(res.output)) {
        const auto tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        CHECK(line.substr(0, tab) == line.substr(tab + 1));
    }
}

TEST_CASE("cli: scatter skewed enumerates the multiset") {
    const auto res = run_command("scatter skewed --size 3");
    CHECK(res.exit_code == 0);
    // multiset {0, 1, 1, 2, 2, 2}: 6!/(1! 2! 3!) = 60 arrangements
    CHECK(lines_of(res.output).size() == 60);
}

TEST_CASE("cli: scatter size caps are refusals") {
    CHECK(run_command("scatter permutations --size 12", true).exit_code == 64);
    CHECK(run_command("scatter skewed --size 6", true).exit_code == 64);
    CHECK(run_command("scatter nonsense", true).exit_code == 64);
}
