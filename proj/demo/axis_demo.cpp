// Translation-length report for one matrix, plus an SVG of its invariant
// ladder in the upper half-plane.
//
// usage: axis_demo [a,b,c,d] [out.svg]
#include <fstream>
#include <iostream>
#include <string>

#include <farey/farey.hpp>

int main(int argc, char** argv) {
    using namespace farey;
    std::string matrixArg = argc > 1 ? argv[1] : "277,60,337,73";
    std::string svgPath = argc > 2 ? argv[2] : "axis.svg";
    try {
        MatrixPSL2Z m(parseMat2(matrixArg));
        AxisResult res = translationLength(m);
        std::cout << jsonOfAxisResult(res).dump(2) << "\n";
        std::ofstream out(svgPath, std::ios::binary);
        out << axisSvg(m, res);
        if (!out) {
            std::cerr << "cannot write " << svgPath << "\n";
            return 1;
        }
        std::cout << "ladder written to " << svgPath << "\n";
    } catch (const FareyError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
