#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <farey/farey.hpp>

namespace {

using namespace farey;

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::ios_base::failure("cannot write " + path);
}

int runLength(const std::string& matrixFlag) {
    MatrixPSL2Z m(parseMat2(matrixFlag));
    bool standard = isStandard(m);
    FareyEdge rung = findRung(m);
    Ladder raw = generateLadder(rung, apply(m, rung));
    AxisResult res = translationLength(m);

    Json out;
    out["matrix"] = jsonOfMatrix(m);
    out["trace"] = intOrString(m.trace());
    out["standard"] = standard;
    out["rung"] = jsonOfEdge(rung);
    out["window_types"] = jsonOfInts(raw.types);
    out["calibrated_types"] = jsonOfInts(res.window.types);
    out["length"] = res.length;
    out["axis"] = jsonOfVertices(res.axis);
    out["moves"] = res.moves.moves;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int runAxis(const std::string& matrixFlag, const std::string& svgPath) {
    MatrixPSL2Z m(parseMat2(matrixFlag));
    AxisResult res = translationLength(m);
    std::cout << jsonOfAxisResult(res).dump(2) << "\n";
    if (!svgPath.empty()) writeFile(svgPath, axisSvg(m, res));
    return 0;
}

int runSpectrum(long long maxTrace, long long k, const std::string& outPath,
                const std::vector<std::string>& censusR) {
    auto classes = enumerateClasses(maxTrace);
    std::string table = spectrumCsv(classes);
    if (!outPath.empty())
        writeFile(outPath, table);
    else if (censusR.empty())
        std::cout << table;
    if (!censusR.empty()) {
        std::cout << censusCsvHeader() << "\n";
        for (const auto& label : censusR) {
            Int num, den;
            parseDecimal(label, num, den);
            std::cout << censusCsvRow(label, k, census(num, den, k)) << "\n";
        }
    }
    return 0;
}

int runRatio(const std::string& matrixFlag) {
    MatrixPSL2Z m(parseMat2(matrixFlag));
    AxisResult res = translationLength(m);
    Json out;
    out["matrix"] = jsonOfMatrix(m);
    out["trace"] = intOrString(m.trace());
    out["length"] = res.length;
    out["dilatation_decimal"] = dilatationDecimal(m.absTrace());
    out["ratio"] = ratioDecimal(m.absTrace(), res.length);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int runWord(const std::string& word, const std::string& tableFlag) {
    if (!word.empty()) {
        MatrixPSL2Z m = wordToMatrix(word);
        AxisResult res = translationLength(m);
        Json out;
        out["word"] = word;
        out["matrix"] = jsonOfMatrix(m);
        out["trace"] = intOrString(m.trace());
        out["length"] = res.length;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    size_t comma = tableFlag.find(',');
    if (comma == std::string::npos) throw FareyError("--table expects m,n");
    long long m = std::stoll(tableFlag.substr(0, comma));
    long long n = std::stoll(tableFlag.substr(comma + 1));
    auto rows = minimalWordExperiment(m, n);
    long long minimum = rows.front().length;
    for (const auto& row : rows) minimum = std::min(minimum, row.length);
    Json out;
    out["m"] = m;
    out["n"] = n;
    out["block_word"] = std::string(static_cast<size_t>(m), 'T') + std::string(static_cast<size_t>(n), 'U');
    out["minimum"] = minimum;
    out["rows"] = Json::array();
    for (const auto& row : rows) {
        Json r;
        r["word"] = row.word;
        r["length"] = row.length;
        out["rows"].push_back(r);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int runCf(const std::string& rational, const std::string& surdFlag, const std::string& matrixFlag) {
    int given = (rational.empty() ? 0 : 1) + (surdFlag.empty() ? 0 : 1) + (matrixFlag.empty() ? 0 : 1);
    if (given != 1) throw FareyError("cf needs exactly one of --rational, --surd, --matrix");
    if (!rational.empty()) {
        std::cout << cfToString(cfOfRational(parseExtRational(rational))) << "\n";
    } else if (!surdFlag.empty()) {
        std::vector<Int> parts;
        std::string item;
        std::istringstream in(surdFlag);
        while (std::getline(in, item, ',')) {
            if (item.empty()) throw FareyError("--surd expects P,D,Q");
            try {
                parts.push_back(Int(item));
            } catch (const std::exception&) {
                throw FareyError("cannot parse surd entry: " + item);
            }
        }
        if (parts.size() != 3) throw FareyError("--surd expects P,D,Q");
        std::cout << cfToString(cfOfSurd(QuadraticSurd(parts[0], parts[1], parts[2]))) << "\n";
    } else {
        MatrixPSL2Z m(parseMat2(matrixFlag));
        QuadraticSurd fixed = attractingFixedPoint(m);
        std::cout << toString(fixed) << "\n";
        std::cout << cfToString(cfOfSurd(fixed)) << "\n";
    }
    return 0;
}

int runVerifyCmd(std::uint64_t seed, long long cases, const std::vector<std::string>& only) {
    auto results = runVerify(seed, cases, only);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << r.name << ": cases=" << r.cases << " failures=" << r.failures << "\n";
        if (!r.passed()) {
            std::cout << "  repro: seed=" << seed << " " << r.firstRepro << "\n";
            ok = false;
        }
    }
    std::cout << (ok ? "all suites passed" : "FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geodesic translation lengths on the Farey graph"};
    app.require_subcommand(1);

    std::string matrixFlag, svgPath, outPath, wordFlag, tableFlag, rationalFlag, surdFlag;
    long long maxTrace = 0, k = 1, cases = 200;
    std::uint64_t seed = 7;
    std::vector<std::string> censusR, only;

    auto* lengthCmd = app.add_subcommand("length", "translation length report for one matrix");
    lengthCmd->add_option("--matrix", matrixFlag, "a,b,c,d")->required();

    auto* axisCmd = app.add_subcommand("axis", "axis pivots, moves, optional SVG");
    axisCmd->add_option("--matrix", matrixFlag, "a,b,c,d")->required();
    axisCmd->add_option("--svg", svgPath, "write an SVG of the invariant ladder");

    auto* spectrumCmd = app.add_subcommand("spectrum", "class table and census rows");
    spectrumCmd->add_option("--max-trace", maxTrace, "largest trace to enumerate")
        ->required()
        ->check(CLI::Range(3LL, 2000LL));
    spectrumCmd->add_option("--k", k, "census multiplicity threshold")->check(CLI::Range(1LL, 1000000LL));
    spectrumCmd->add_option("--out", outPath, "write the class table CSV here");
    spectrumCmd->add_option("--census-r", censusR, "dilatation bounds, e.g. 6.5,50")->delimiter(',');

    auto* ratioCmd = app.add_subcommand("ratio", "log(dilatation) / translation length");
    ratioCmd->add_option("--matrix", matrixFlag, "a,b,c,d")->required();

    auto* wordCmd = app.add_subcommand("word", "T/U word tools");
    auto* wordOpt = wordCmd->add_option("--word", wordFlag, "word in letters T and U");
    wordCmd->add_option("--table", tableFlag, "m,n: all cyclic classes with m T's and n U's")
        ->excludes(wordOpt);

    auto* cfCmd = app.add_subcommand("cf", "continued fraction expansions");
    cfCmd->add_option("--rational", rationalFlag, "p/q");
    cfCmd->add_option("--surd", surdFlag, "P,D,Q for (P + sqrt(D))/Q");
    cfCmd->add_option("--matrix", matrixFlag, "a,b,c,d: expand the attracting fixed point");

    auto* verifyCmd = app.add_subcommand("verify", "randomized property suites");
    verifyCmd->add_option("--seed", seed, "RNG seed");
    verifyCmd->add_option("--cases", cases, "cases per suite")->check(CLI::Range(1LL, 1000000LL));
    verifyCmd->add_option("--only", only, "subset of suites")
        ->delimiter(',')
        ->check(CLI::IsMember({"oracle", "power", "conjugation", "type", "homomorphism", "tracebound"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    }

    try {
        if (lengthCmd->parsed()) return runLength(matrixFlag);
        if (axisCmd->parsed()) return runAxis(matrixFlag, svgPath);
        if (spectrumCmd->parsed()) return runSpectrum(maxTrace, k, outPath, censusR);
        if (ratioCmd->parsed()) return runRatio(matrixFlag);
        if (wordCmd->parsed()) {
            if (wordFlag.empty() && tableFlag.empty()) throw FareyError("word needs --word or --table");
            return runWord(wordFlag, tableFlag);
        }
        if (cfCmd->parsed()) return runCf(rationalFlag, surdFlag, matrixFlag);
        if (verifyCmd->parsed()) return runVerifyCmd(seed, cases, only);
    } catch (const NotHyperbolic& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const BadDeterminant& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const FareyError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const std::ios_base::failure& e) {
        std::cerr << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 4;
    }
    return 4;
}
