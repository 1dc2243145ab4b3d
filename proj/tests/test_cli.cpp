#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using std::string;

namespace {

struct Run {
    int code;
    string out;
};

Run run(const string& args) {
    string command = string(KACQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    string out;
    std::array<char, 4096> buffer{};
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
        out.append(buffer.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool ends_with(const string& s, const string& tail) {
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("kac") {
    auto r = run("kac --quiver kronecker:3 --dim 2,3");
    CHECK(r.code == 0);
    CHECK(r.out == "q^6+q^5+3*q^4+4*q^3+5*q^2+3*q+2\na(1)=19\n");
    auto point = run("kac --quiver path:1 --dim 1");
    CHECK(point.out == "1\na(1)=1\n");
    auto machine = run("--machine kac --quiver star:4 --dim 2,1,1,1,1");
    CHECK(machine.out == "kac\t2,1,1,1,1\tq+4\t5\n");
}

TEST_CASE("root") {
    CHECK(run("root --quiver kronecker:3 --dim 2,3").out == "imaginary tits=-5\n");
    CHECK(run("root --quiver path:2 --dim 1,1").out == "real tits=1\n");
    CHECK(run("root --quiver path:2 --dim 2,1 --machine").out == "root\t2,1\tnot_a_root\t3\n");
}

TEST_CASE("cover") {
    auto e = run("cover enumerate --quiver kronecker:3 --dim 1,1");
    CHECK(e.code == 0);
    CHECK(ends_with(e.out, "classes=3\n"));
    auto v = run("cover verify --quiver kronecker:4 --dim 2,4 --threads 4");
    CHECK(v.code == 0);
    CHECK(ends_with(v.out, "lhs=125 rhs=125 OK\n"));
    auto m = run("--machine cover verify --quiver kronecker:3 --dim 2,3");
    CHECK(ends_with(m.out, "total\t19\t19\t19\tOK\n"));
}

TEST_CASE("machine output is byte-stable") {
    const string args = "--machine cover verify --quiver kronecker:3 --dim 2,3 --threads 3";
    CHECK(run(args).out == run(args).out);
    CHECK(run(args).out == run("--machine cover verify --quiver kronecker:3 --dim 2,3").out);
}

TEST_CASE("trees and oracle commands") {
    CHECK(run("trees spanning --quiver cycle:5").out == "spanning_trees=5\n");
    CHECK(run("trees thin-check --quiver kronecker:3").out == "a(1)=3 spanning_trees=3 OK\n");
    CHECK(run("trees coverthin --m 3 --d 2 --e 3").out == "ct=18\n");
    auto g = run("trees growth --m 3 --k 1 --dmax 4");
    CHECK(g.code == 0);
    CHECK(g.out.rfind("d\tct\tln(ct)/d\tbound\n1\t3\t", 0) == 0);
    CHECK(run("oracle brute --quiver kronecker:2 --dim 1,1 --p 2").out == "oracle=3 engine=3 OK\n");
    CHECK(run("oracle trees --m 3 --d 2 --e 3").out == "trees=18 formula=18 OK\n");
    auto s = run("oracle sweep --max-dim 2 --primes 2");
    CHECK(s.code == 0);
    CHECK(ends_with(s.out, "mismatches=0\n"));
}

TEST_CASE("cache file") {
    auto path = std::filesystem::temp_directory_path() / "kacq_cli_cache.tsv";
    std::filesystem::remove(path);
    auto first = run("--cache " + path.string() + " kac --quiver kronecker:3 --dim 2,3");
    auto second = run("--cache " + path.string() + " kac --quiver kronecker:3 --dim 2,3");
    CHECK(first.out == second.out);
    std::ifstream in(path);
    string line;
    int lines = 0;
    while (std::getline(in, line))
        ++lines;
    CHECK(lines == 1);
    std::filesystem::remove(path);
}

TEST_CASE("quiver files") {
    auto path = std::filesystem::temp_directory_path() / "kacq_cli_quiver.txt";
    {
        std::ofstream out(path);
        out << "# D4 tilde\nvertex c\nvertex 1\nvertex 2\nvertex 3\nvertex 4\n"
               "arrow a1 1 c\narrow a2 2 c\narrow a3 3 c\narrow a4 4 c\n";
    }
    CHECK(run("kac --quiver " + path.string() + " --dim 2,1,1,1,1").out == "q+4\na(1)=5\n");
    {
        std::ofstream out(path);
        out << "vertex i\narrow a i j\n";
    }
    CHECK(run("kac --quiver " + path.string() + " --dim 1").code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(run("kac --quiver kronecker:3").code == 2);
    CHECK(run("kac --quiver kronecker:3 --dim 1,2,3").code == 2);
    CHECK(run("kac --quiver nowhere:3 --dim 1").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("cover enumerate --quiver kronecker:3 --dim 2,3 --node-cap 5").code == 3);
    CHECK(run("oracle brute --quiver kronecker:3 --dim 2,3 --p 3").code == 3);
    CHECK(run("trees growth --m 3 --k 3 --dmax 4").code == 2);
}

}
