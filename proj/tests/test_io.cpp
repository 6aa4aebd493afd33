#include <catch_amalgamated.hpp>

#include <farey/io.hpp>
#include <farey/svg.hpp>

using namespace farey;

namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("intOrString keeps 64-bit values numeric") {
    CHECK(intOrString(42).is_number());
    CHECK(intOrString(Int("9223372036854775807")).is_number());
    CHECK(intOrString(Int("-9223372036854775808")).is_number());
    CHECK(intOrString(Int("9223372036854775808")).is_string());
    CHECK(intOrString(Int("9223372036854775808")).get<std::string>() == "9223372036854775808");
    CHECK(intOrString(Int("-9223372036854775809")).is_string());
}

TEST_CASE("twenty digit decimals") {
    CHECK(dilatationDecimal(6) == "5.8284271247461900976");
    CHECK(dilatationDecimal(3) == "2.6180339887498948482");
    CHECK(ratioDecimal(6, 2) == "0.88137358701954302523");
}

TEST_CASE("continued fraction strings") {
    CHECK((cfToString(CFExpansion{ints({1, 2, 3, 4}), {}}) == "[1; 2, 3, 4]"));
    CHECK((cfToString(CFExpansion{ints({2}), {}}) == "[2]"));
    CHECK((cfToString(CFExpansion{ints({1, 1}), ints({1, 11, 1, 2, 5, 1, 5, 2})}) ==
           "[1; 1, (1, 11, 1, 2, 5, 1, 5, 2)]"));
    CHECK((cfToString(CFExpansion{{}, ints({1})}) == "[(1)]"));
    CHECK((cfToString(CFExpansion{ints({0, 1, 1, 1, 4}), ints({4, 5})}) == "[0; 1, 1, 1, 4, (4, 5)]"));
    CHECK((cfToString(CFExpansion{ints({1}), ints({2})}) == "[1; (2)]"));
}

TEST_CASE("surd strings") {
    CHECK(toString(QuadraticSurd(1, 5, 2)) == "(1 + sqrt(5)) / 2");
    CHECK(toString(QuadraticSurd(-152, 480, -202)) == "(-152 + sqrt(480)) / -202");
}

TEST_CASE("class records render to CSV rows") {
    auto classes = enumerateClasses(7);
    std::string csv = spectrumCsv(classes);
    std::string expected =
        "trace,normal_form,translation_length,dilatation_decimal,ratio\n"
        "3,1-1,1,2.6180339887498948482,0.962423650119206895\n"
        "4,1-2,1,3.7320508075688772935,1.3169578969248167086\n"
        "5,1-3,1,4.7912878474779200033,1.5667992369724110787\n"
        "6,1-4,1,5.8284271247461900976,1.7627471740390860505\n"
        "6,2-2,2,5.8284271247461900976,0.88137358701954302523\n"
        "7,1-1-1-1,2,6.8541019662496845446,0.962423650119206895\n"
        "7,1-5,1,6.8541019662496845446,1.92484730023841379\n";
    CHECK(csv == expected);
}

TEST_CASE("census CSV rows") {
    CHECK(censusCsvHeader() == "R,k,numerator,denominator,ratio");
    CensusResult r{4, 5, 0.8};  // as computed for R = 6.5, k = 2
    CHECK(censusCsvRow("6.5", 2, r) == "6.5,2,4,5,0.8");
    CensusResult full{193, 193, 1.0};
    CHECK(censusCsvRow("50", 2, full) == "50,2,193,193,1");
}

TEST_CASE("decimal labels parse to exact fractions") {
    Int num, den;
    parseDecimal("6.5", num, den);
    CHECK(num == 13);
    CHECK(den == 2);
    parseDecimal("50", num, den);
    CHECK(num == 50);
    CHECK(den == 1);
    parseDecimal("0.25", num, den);
    CHECK(num == 1);
    CHECK(den == 4);
    parseDecimal("3.0", num, den);
    CHECK(num == 3);
    CHECK(den == 1);
    CHECK_THROWS_AS(parseDecimal("", num, den), FareyError);
    CHECK_THROWS_AS(parseDecimal("a.b", num, den), FareyError);
    CHECK_THROWS_AS(parseDecimal("1.2.3", num, den), FareyError);
    CHECK_THROWS_AS(parseDecimal("-4", num, den), FareyError);
}

TEST_CASE("JSON emitters expose the documented keys") {
    MatrixPSL2Z m(277, 60, 337, 73);
    AxisResult r = translationLength(m);
    Json j = jsonOfAxisResult(r);
    REQUIRE(j.size() == 4);
    CHECK(j.contains("length"));
    CHECK(j.contains("types"));
    CHECK(j.contains("axis"));
    CHECK(j.contains("moves"));
    CHECK(j["length"] == 5);
    CHECK(j["moves"] == "tpppt");
    CHECK(j["axis"][0] == "0/1");

    Json l = jsonOfLadder(r.window);
    REQUIRE(l.size() == 4);
    CHECK(l.contains("pivots"));
    CHECK(l.contains("types"));
    CHECK(l.contains("start"));
    CHECK(l.contains("end"));

    Json mat = jsonOfMatrix(m);
    REQUIRE(mat.is_array());
    REQUIRE(mat.size() == 4);
    CHECK(mat[0] == 277);
}

TEST_CASE("emitted strings parse back to equal values") {
    for (auto v : {ExtRational(3, 4), ExtRational(-77, 45), ExtRational::infinity()}) {
        CHECK(parseExtRational(toString(v)) == v);
    }
    MatrixPSL2Z m(65, -56, 101, -87);
    CHECK(MatrixPSL2Z(parseMat2(toString(m))) == m);
}

TEST_CASE("axis SVG is well formed") {
    MatrixPSL2Z m(65, -56, 101, -87);
    AxisResult r = translationLength(m);
    std::string svg = axisSvg(m, r);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    size_t paths = 0, at = 0;
    while ((at = svg.find("<path", at)) != std::string::npos) {
        ++paths;
        at += 5;
    }
    // three periods of ladder edges plus the axis segments
    CHECK(paths == 3 * ladderEdges(r.window).size() + 3 * r.axis.size());
}
