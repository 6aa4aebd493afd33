#include <catch_amalgamated.hpp>

#include <farey/oracle.hpp>
#include <farey/verify.hpp>

using namespace farey;

TEST_CASE("completionToInfinity sends the vertex to infinity") {
    for (auto v : {ExtRational(0, 1), ExtRational(3, 4), ExtRational(76, 101), ExtRational(-7, 5),
                   ExtRational::infinity()}) {
        MatrixPSL2Z g = completionToInfinity(v);
        CHECK(apply(g, v).isInfinity());
    }
    CHECK(completionToInfinity(ExtRational::infinity()) == MatrixPSL2Z(1, 0, 0, 1));
}

TEST_CASE("ancestor oracle distance anchors") {
    ExtRational inf = ExtRational::infinity();
    CHECK(fareyDistanceAncestor(ExtRational(3, 4), ExtRational(3, 4)) == 0);
    CHECK(fareyDistanceAncestor(ExtRational(0, 1), ExtRational(1, 0)) == 1);
    CHECK(fareyDistanceAncestor(ExtRational(0, 1), ExtRational(2, 5)) == 2);
    CHECK(fareyDistanceAncestor(inf, ExtRational(76, 101)) == 3);
    CHECK(fareyDistanceAncestor(inf, ExtRational(5, 2)) == 2);
}

TEST_CASE("the ancestor distance is a metric on small vertices") {
    std::vector<ExtRational> pts;
    for (int p = -8; p <= 8; ++p) {
        for (int q = 0; q <= 5; ++q) {
            if (p == 0 && q == 0) continue;
            if (boost::multiprecision::gcd(Int(p), Int(q)) != 1) continue;
            pts.emplace_back(p, q);
        }
    }
    Rng rng(20260819);
    for (int i = 0; i < 300; ++i) {
        const auto& u = pts[static_cast<size_t>(rng.next(0, static_cast<long long>(pts.size()) - 1))];
        const auto& v = pts[static_cast<size_t>(rng.next(0, static_cast<long long>(pts.size()) - 1))];
        long long d = fareyDistanceAncestor(u, v);
        CHECK(d == fareyDistanceAncestor(v, u));
        CHECK((d == 0) == (u == v));
        if (isFareyNeighbor(u, v)) CHECK(d == 1);
    }
}

TEST_CASE("BFS distance agrees with the ancestor oracle") {
    Rng rng(97);
    auto draw = [&]() {
        while (true) {
            long long p = rng.next(-30, 30), q = rng.next(0, 12);
            if (p != 0 || q != 0) return ExtRational(p, q);
        }
    };
    for (int i = 0; i < 200; ++i) {
        ExtRational u = draw(), v = draw();
        CHECK(fareyDistanceBFS(u, v) == fareyDistanceAncestor(u, v));
    }
    CHECK(fareyDistanceBFS(ExtRational(0, 1), ExtRational(2, 5)) == 2);
    CHECK(fareyDistanceBFS(ExtRational::infinity(), ExtRational(76, 101)) == 3);
}

TEST_CASE("distance is an isometry invariant") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        ExtRational u(rng.next(-20, 20), rng.next(1, 9));
        ExtRational v(rng.next(-20, 20), rng.next(1, 9));
        MatrixPSL2Z g = randomGroupElement(rng);
        CHECK(fareyDistanceAncestor(apply(g, u), apply(g, v)) == fareyDistanceAncestor(u, v));
    }
}

TEST_CASE("stable length probes grow linearly on axis pivots") {
    MatrixPSL2Z ex2(65, -56, 101, -87);
    CHECK((stableLengthProbe(ex2, ExtRational(1, 1), 4) == std::vector<long long>{2, 4, 6, 8}));

    MatrixPSL2Z ex1(277, 60, 337, 73);
    CHECK((stableLengthProbe(ex1, ExtRational(0, 1), 3) == std::vector<long long>{5, 10, 15}));

    MatrixPSL2Z small(2, 1, 1, 1);
    CHECK((stableLengthProbe(small, ExtRational(1, 1), 1) == std::vector<long long>{1}));

    CHECK_THROWS_AS(stableLengthProbe(ex1, ExtRational(0, 1), 0), FareyError);
    CHECK_THROWS_AS(stableLengthProbe(ex1, ExtRational(0, 1), 21), FareyError);
    CHECK_THROWS_AS(stableLengthProbe(MatrixPSL2Z(1, 1, 0, 1), ExtRational(0, 1), 3), NotHyperbolic);
}

TEST_CASE("off axis probes stay above the translation length") {
    MatrixPSL2Z ex2(65, -56, 101, -87);
    auto probes = stableLengthProbe(ex2, ExtRational(3, 4), 5);
    CHECK((probes == std::vector<long long>{3, 5, 7, 9, 11}));  // 2j + 3: off by a bounded additive drift
    for (size_t j = 0; j < probes.size(); ++j) {
        CHECK(probes[j] >= 2 * static_cast<long long>(j + 1));
    }
}
