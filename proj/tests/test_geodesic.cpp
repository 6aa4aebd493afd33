#include <catch_amalgamated.hpp>

#include <farey/geodesic.hpp>

using namespace farey;

namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("efficient path anchors on a finite block list") {
    std::vector<Int> s = ints({2, 3, 4, 1, 1, 1});
    CHECK(efficientPath(s, 0, 7).moves == "tttpp");
    CHECK(efficientPath(s, 1, 6).moves == "ttpt");
    CHECK(efficientPath(ints({5, 4}), 0, 2).moves == "tt");
    CHECK(efficientPath(ints({5, 4}), 1, 3).moves == "tt");
    CHECK(efficientPath(ints({1, 1}), 0, 2).moves == "p");
    CHECK(efficientPath(ints({1, 1}), 0, 3).moves == "pt");
    CHECK(efficientPath(ints({3}), 0, 1).moves == "t");
    CHECK(efficientPath(s, 2, 2).moves.empty());
    CHECK_THROWS_AS(efficientPath(ints({1, 0}), 0, 2), NonpositiveEntry);
    CHECK_THROWS_AS(efficientPath(s, 0, 9), FareyError);
}

TEST_CASE("finite efficient geodesics traverse the whole ladder") {
    MatrixPSL2Z m(277, 60, 337, 73);
    FareyEdge e0(ExtRational(0, 1), ExtRational(1, 0));
    Ladder l = generateLadder(e0, apply(m, e0));
    MoveSequence g0 = efficientGeodesicFinite(l, 0);
    MoveSequence g1 = efficientGeodesicFinite(l, 1);
    CHECK(g0.startPivotIndex == 0);
    CHECK(g1.startPivotIndex == 1);
    CHECK(!g0.moves.empty());
    CHECK(!g1.moves.empty());
    CHECK_THROWS_AS(efficientGeodesicFinite(l, 2), FareyError);
}

TEST_CASE("cyclic translation length anchors") {
    CHECK(cyclicTranslationLength(ints({4, 1, 1, 1, 1, 1, 1, 5})) == 5);
    CHECK(cyclicTranslationLength(ints({5, 4})) == 2);
    CHECK(cyclicTranslationLength(ints({1, 1})) == 1);
    CHECK(cyclicTranslationLength(ints({2, 2})) == 2);
    CHECK(cyclicTranslationLength(ints({1, 1, 1, 1})) == 2);
    CHECK(cyclicTranslationLength(ints({1, 1, 1, 1, 1, 1})) == 3);  // all ones: n pairs -> n
    CHECK(cyclicTranslationLength(ints({1, 7})) == 1);
    CHECK(cyclicTranslationLength(ints({1, 2})) == 1);
    CHECK(cyclicTranslationLength(ints({2, 3, 4, 1, 1, 1})) == 4);
    CHECK_THROWS_AS(cyclicTranslationLength({}), OddLength);
    CHECK_THROWS_AS(cyclicTranslationLength(ints({1, 1, 1})), OddLength);
    CHECK_THROWS_AS(cyclicTranslationLength(ints({1, -1})), NonpositiveEntry);
}

TEST_CASE("cyclic length is rotation invariant") {
    std::vector<Int> s = ints({2, 3, 4, 1, 1, 1});
    long long base = cyclicTranslationLength(s);
    for (size_t r = 1; r < s.size(); ++r) {
        std::vector<Int> rot(s.begin() + r, s.end());
        rot.insert(rot.end(), s.begin(), s.begin() + r);
        CHECK(cyclicTranslationLength(rot) == base);
    }
}

TEST_CASE("translation length of the worked examples") {
    AxisResult r1 = translationLength(MatrixPSL2Z(277, 60, 337, 73));
    CHECK(r1.length == 5);
    CHECK(r1.window.types == ints({4, 1, 1, 1, 1, 1, 1, 5}));
    CHECK(r1.moves.moves == "tpppt");
    REQUIRE(r1.axis.size() == 5);
    CHECK(r1.axis[0] == ExtRational(0, 1));
    CHECK(r1.axis[1] == ExtRational(1, 1));
    CHECK(r1.axis[2] == ExtRational(5, 6));
    CHECK(r1.axis[3] == ExtRational(14, 17));
    CHECK(r1.axis[4] == ExtRational(37, 45));

    AxisResult r2 = translationLength(MatrixPSL2Z(65, -56, 101, -87));
    CHECK(r2.length == 2);
    CHECK(r2.moves.moves == "tt");
    REQUIRE(r2.axis.size() == 2);
    CHECK(r2.axis[0] == ExtRational(1, 1));
    CHECK(r2.axis[1] == ExtRational(2, 3));
}

TEST_CASE("axis pivots are consecutive neighbors wrapping by the map") {
    for (auto m : {MatrixPSL2Z(277, 60, 337, 73), MatrixPSL2Z(65, -56, 101, -87),
                   MatrixPSL2Z(5, 2, 2, 1), MatrixPSL2Z(2, 1, 1, 1)}) {
        AxisResult r = translationLength(m);
        ExtRational wrapped = apply(m, r.axis.front());
        std::vector<ExtRational> closed = r.axis;
        closed.push_back(wrapped);
        for (size_t i = 0; i + 1 < closed.size(); ++i) {
            CHECK(isFareyNeighbor(closed[i], closed[i + 1]));
        }
        CHECK(Int(r.moves.moves.size()) == Int(r.length));
    }
}

TEST_CASE("non hyperbolic input is rejected up front") {
    CHECK_THROWS_AS(translationLength(MatrixPSL2Z(1, 1, 0, 1)), NotHyperbolic);
    CHECK_THROWS_AS(translationLength(MatrixPSL2Z(0, -1, 1, 0)), NotHyperbolic);
}

TEST_CASE("length of small canonical matrices") {
    CHECK(translationLength(MatrixPSL2Z(2, 1, 1, 1)).length == 1);   // M(1,1)
    CHECK(translationLength(MatrixPSL2Z(5, 2, 2, 1)).length == 2);   // M(2,2)
    CHECK(translationLength(MatrixPSL2Z(5, 3, 3, 2)).length == 2);   // M(1,1,1,1)
    CHECK(translationLength(MatrixPSL2Z(3, 1, 2, 1)).length == 1);   // M(1,2)
    CHECK(translationLength(MatrixPSL2Z(13, 8, 8, 5)).length == 3);  // M(1)^6
}
