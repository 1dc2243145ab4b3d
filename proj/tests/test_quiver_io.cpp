#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "kacq/errors.hpp"
#include "kacq/families.hpp"
#include "kacq/quiver_io.hpp"

using namespace kacq;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_quiver(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_SUITE("quiver_io") {

TEST_CASE("parsing") {
    auto a2 = parse_quiver("vertex i\nvertex j\narrow a i j");
    CHECK(a2.vertices() == std::vector<std::string>{"i", "j"});
    REQUIRE(a2.num_arrows() == 1);
    CHECK(a2.arrows()[0] == Arrow{"a", 0, 1});

    auto commented = parse_quiver("# a loop\n\nvertex v   # the only vertex\n  arrow l v v\n");
    CHECK(commented.num_vertices() == 1);
    CHECK(commented.loops_at(0) == 1);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_of("arrow a i j").rfind("line 1:", 0) == 0);
    CHECK(error_of("vertex i\nvertex i\n").rfind("line 2:", 0) == 0);
    CHECK(error_of("vertex i\nvertex j\narrow a i j\narrow a j i\n").rfind("line 4:", 0) == 0);
    CHECK(error_of("vertex i\n\n# note\nedge a i i\n").rfind("line 4:", 0) == 0);
    CHECK(error_of("vertex i j\n").rfind("line 1:", 0) == 0);
    CHECK(error_of("vertex i\narrow a i\n").rfind("line 2:", 0) == 0);
    CHECK(error_of("arrow a i j\nvertex i\nvertex j\n").rfind("line 1:", 0) == 0);
    CHECK_FALSE(error_of("").empty());
}

TEST_CASE("rendering round trips") {
    for (const auto& q : connected_quivers(3, 3, true)) {
        auto text = render_quiver(q);
        auto back = parse_quiver(text);
        CHECK(back == q);
        CHECK(render_quiver(back) == text);
    }
    CHECK(render_quiver(builtin_quiver("kronecker:2")) == "vertex i\nvertex j\narrow a1 i j\narrow a2 i j\n");
}

TEST_CASE("builtin families") {
    auto k3 = builtin_quiver("kronecker:3");
    CHECK(k3.num_vertices() == 2);
    CHECK(k3.num_arrows() == 3);
    for (const auto& a : k3.arrows())
        CHECK((a.source == 0 && a.target == 1));
    CHECK(builtin_quiver("loops:2").loops_at(0) == 2);
    CHECK(builtin_quiver("cycle:4").num_arrows() == 4);
    CHECK(builtin_quiver("cycle:1").loops_at(0) == 1);
    CHECK(builtin_quiver("path:1").num_arrows() == 0);
    CHECK(builtin_quiver("path:4").num_arrows() == 3);
    auto star = builtin_quiver("star:4");
    CHECK(star.num_vertices() == 5);
    CHECK(star.vertices()[0] == "c");
    for (const auto& a : star.arrows())
        CHECK(a.target == 0);
    CHECK(is_builtin_spec("star:4"));
    CHECK_FALSE(is_builtin_spec("quivers/star.txt"));
    for (const char* bad : {"kronecker:", "kronecker:x", "path:0", "cycle:-1", "torus:2", "loops:2x"})
        CHECK_THROWS_AS(builtin_quiver(bad), InputError);
}

TEST_CASE("loading from files") {
    auto path = std::filesystem::temp_directory_path() / "kacq_test_quiver.txt";
    {
        std::ofstream out(path);
        out << "vertex i\nvertex j\narrow a i j\narrow b i j\n";
    }
    CHECK(load_quiver(path.string()) == parse_quiver("vertex i\nvertex j\narrow a i j\narrow b i j\n"));
    CHECK(load_quiver(path.string()).num_arrows() == 2);
    CHECK(load_quiver("kronecker:2").num_arrows() == 2);
    CHECK_THROWS_AS(load_quiver("/nonexistent/kacq.txt"), InputError);
    std::filesystem::remove(path);
}

}
