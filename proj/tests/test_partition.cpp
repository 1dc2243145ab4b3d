#include <doctest.h>

#include <algorithm>

#include "kacq/errors.hpp"
#include "kacq/partition.hpp"

using namespace kacq;

namespace {

long min_sum_pairing(const Partition& a, const Partition& b) {
    long s = 0;
    for (int x : a.parts())
        for (int y : b.parts())
            s += std::min(x, y);
    return s;
}

} // namespace

TEST_SUITE("partition") {

TEST_CASE("partition lists") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].parts().empty());
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    auto three = partitions_of(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0].parts() == std::vector<int>{1, 1, 1});
    CHECK(three[1].parts() == std::vector<int>{2, 1});
    CHECK(three[2].parts() == std::vector<int>{3});
    const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        auto ps = partitions_of(n);
        CHECK(ps.size() == counts[n]);
        CHECK(std::is_sorted(ps.begin(), ps.end()));
        for (const auto& p : ps)
            CHECK(p.weight() == n);
    }
    CHECK_THROWS_AS(partitions_of(-1), InputError);
    CHECK_THROWS_AS(Partition({2, 0}), InputError);
}

TEST_CASE("conjugates and multiplicities") {
    Partition p({3, 1, 1});
    CHECK(p.conjugate().parts() == std::vector<int>{3, 1, 1});
    CHECK(Partition({4, 2}).conjugate().parts() == std::vector<int>{2, 2, 1, 1});
    auto m = Partition({2, 2, 1}).multiplicities();
    CHECK(m[1] == 1);
    CHECK(m[2] == 2);
    for (int n = 0; n <= 8; ++n)
        for (const auto& l : partitions_of(n))
            CHECK(l.conjugate().conjugate() == l);
}

TEST_CASE("pairing matches the min-sum formula") {
    CHECK(hua_pairing(Partition({1}), Partition({1})) == 1);
    CHECK(hua_pairing(Partition({2, 1}), Partition({2, 1})) == 5);
    CHECK(hua_pairing(Partition(), Partition({3, 2})) == 0);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 6; ++k)
            for (const auto& a : partitions_of(n))
                for (const auto& b : partitions_of(k)) {
                    CHECK(hua_pairing(a, b) == min_sum_pairing(a, b));
                    CHECK(hua_pairing(a, b) == hua_pairing(b, a));
                }
}

TEST_CASE("b polynomials") {
    CHECK(b_poly(Partition()) == QPolynomial(1));
    auto t = QPolynomial::q();
    auto one = QPolynomial(1);
    CHECK(b_poly(Partition({1, 1})) == (one - t) * (one - t * t));
    CHECK(b_poly(Partition({2, 1})) == (one - t) * (one - t));
}

}
