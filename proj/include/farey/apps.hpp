#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"

namespace farey {

namespace detail {

using Float50 = boost::multiprecision::cpp_bin_float_50;

inline Float50 toFloat50(const Int& x) { return Float50(x); }

// log of the dilatation (t + sqrt(t^2 - 4)) / 2 for |t| = trace > 2.
inline Float50 logDilatation(const Int& trace) {
    Float50 t = toFloat50(trace);
    return log((t + sqrt(t * t - 4)) / 2);
}

}  // namespace detail

/// Lexicographically minimal cyclic rotation.
inline std::vector<Int> minimalCyclicRotation(const std::vector<Int>& s) {
    size_t n = s.size();
    if (n == 0) throw EmptySequence();
    std::vector<Int> best, rot;
    for (size_t i = 0; i < n; ++i) {
        rot.assign(s.begin() + i, s.end());
        rot.insert(rot.end(), s.begin(), s.begin() + i);
        if (i == 0 || rot < best) best = rot;
    }
    return best;
}

/// One PSL(2,Z) conjugacy class of hyperbolic elements.
struct ClassRecord {
    std::vector<Int> normalForm;  // minimal cyclic rotation, even length
    Int trace;                    // > 2
    long long length;             // translation length on the Farey graph
    QuadraticSurd dilatation;     // (trace + sqrt(trace^2 - 4)) / 2
    double ratio;                 // log(dilatation) / length, presentation only
};

inline QuadraticSurd dilatationOfTrace(const Int& t) { return QuadraticSurd(t, t * t - 4, 2); }

/// All hyperbolic conjugacy classes with trace <= maxTrace, via pruned DFS
/// over positive integer sequences (componentwise monotonicity of M(S)
/// makes the minimal completion a valid cut), deduplicated by minimal
/// cyclic rotation. Sorted by (trace, normalForm).
inline std::vector<ClassRecord> enumerateClasses(const Int& maxTrace) {
    if (maxTrace < 3) throw TraceBoundTooSmall();
    std::set<std::vector<Int>> forms;
    const Mat2 M1{1, 1, 1, 0};
    const Mat2 M11 = M1 * M1;

    std::vector<Int> seq;
    auto rec = [&](auto&& self, const Mat2& P) -> void {
        if (!seq.empty() && seq.size() % 2 == 0 && P.trace() <= maxTrace)
            forms.insert(minimalCyclicRotation(seq));
        if (!seq.empty() && seq.size() % 2 == 0 && (P * M11).trace() > maxTrace)
            return;
        for (Int a = 1;; ++a) {
            Mat2 Pa = P * Mat2{a, 1, 1, 0};
            Int minCompletion = seq.size() % 2 == 1 ? Pa.trace() : (Pa * M1).trace();
            if (minCompletion > maxTrace) break;
            seq.push_back(a);
            self(self, Pa);
            seq.pop_back();
        }
    };
    rec(rec, Mat2::identity());

    std::vector<ClassRecord> out;
    out.reserve(forms.size());
    for (const auto& s : forms) {
        Int t = matrixOfSequence(s).trace();
        long long l = cyclicTranslationLength(s);
        double r = static_cast<double>(detail::logDilatation(t) / l);
        out.push_back(ClassRecord{s, t, l, dilatationOfTrace(t), r});
    }
    std::sort(out.begin(), out.end(), [](const ClassRecord& x, const ClassRecord& y) {
        if (x.trace != y.trace) return x.trace < y.trace;
        return x.normalForm < y.normalForm;
    });
    return out;
}

/// Number of classes with trace exactly t.
inline long long classCount(const Int& t) {
    if (t < 3) throw TraceBoundTooSmall();
    auto classes = enumerateClasses(t);
    long long n = 0;
    for (const auto& c : classes) {
        if (c.trace == t) ++n;
    }
    return n;
}

/// Classes with dilatation < R = num/den, bucketed by translation length.
/// Exact test: lambda(t) < R iff t < R + 1/R iff t*num*den < num^2 + den^2.
inline std::map<long long, long long> censusTable(const Int& num, const Int& den) {
    if (den <= 0 || num <= 3 * den) throw EmptyRange();
    Int bound = detail::floordiv(num * num + den * den, num * den) + 1;
    std::map<long long, long long> byLength;
    for (const auto& c : enumerateClasses(bound)) {
        if (c.trace * num * den < num * num + den * den) byLength[c.length] += 1;
    }
    return byLength;
}

struct CensusResult {
    long long numerator;    // classes whose length value has multiplicity >= k
    long long denominator;  // N(R): all classes with dilatation < R
    double ratio;
};

inline CensusResult census(const Int& num, const Int& den, long long k) {
    if (k < 1) throw FareyError("census multiplicity threshold must be positive");
    auto table = censusTable(num, den);
    CensusResult res{0, 0, 0.0};
    for (const auto& [length, count] : table) {
        (void)length;
        res.denominator += count;
        if (count >= k) res.numerator += count;
    }
    if (res.denominator == 0) throw EmptyRange();
    res.ratio = static_cast<double>(res.numerator) / static_cast<double>(res.denominator);
    return res;
}

/// log(dilatation) / translation length; floating point enters only here.
inline double ratio(const MatrixPSL2Z& m) {
    AxisResult r = translationLength(m);
    return static_cast<double>(detail::logDilatation(m.absTrace()) / r.length);
}

struct WordRow {
    std::string word;  // canonical rotation: starts at a T-block, ends in U
    long long length;
};

namespace detail {

inline std::string canonicalNecklaceWord(uint32_t mask, int L) {
    std::string best;
    for (int i = 0; i < L; ++i) {
        bool isT = (mask >> i) & 1u;
        bool prevU = !((mask >> ((i + L - 1) % L)) & 1u);
        if (!(isT && prevU)) continue;
        std::string w;
        w.reserve(static_cast<size_t>(L));
        for (int j = 0; j < L; ++j) w.push_back(((mask >> ((i + j) % L)) & 1u) ? 'T' : 'U');
        if (best.empty() || w < best) best = w;
    }
    return best;
}

}  // namespace detail

/// All cyclic classes of words with m T's and n U's, each with its
/// translation length. Checks the two expected extremal facts: the block
/// word T^m U^n attains the minimum, and the minimum is at most 2.
inline std::vector<WordRow> minimalWordExperiment(long long m, long long n) {
    if (m < 1 || n < 1) throw FareyError("block exponents must be positive");
    if (m + n > 24) throw BudgetExceeded();
    int L = static_cast<int>(m + n);
    uint32_t full = (1u << L) - 1u;

    std::set<uint32_t> canonical;
    for (uint32_t mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) != static_cast<int>(m)) continue;
        uint32_t best = mask;
        for (int i = 1; i < L; ++i) {
            uint32_t rot = ((mask >> i) | (mask << (L - i))) & full;
            if (rot < best) best = rot;
        }
        canonical.insert(best);
    }

    std::vector<WordRow> rows;
    for (uint32_t mask : canonical) {
        std::string w = detail::canonicalNecklaceWord(mask, L);
        std::vector<Int> blocks;
        char current = 0;
        for (char ch : w) {
            if (ch == current) {
                ++blocks.back();
            } else {
                blocks.push_back(1);
                current = ch;
            }
        }
        rows.push_back(WordRow{w, cyclicTranslationLength(blocks)});
    }
    std::sort(rows.begin(), rows.end(), [](const WordRow& a, const WordRow& b) { return a.word < b.word; });

    std::string blockWord = std::string(static_cast<size_t>(m), 'T') + std::string(static_cast<size_t>(n), 'U');
    long long blockLength = -1, minimum = -1;
    for (const auto& row : rows) {
        if (minimum < 0 || row.length < minimum) minimum = row.length;
        if (row.word == blockWord) blockLength = row.length;
    }
    if (blockLength != minimum) throw InternalError("block word does not attain the minimal length");
    if (minimum > 2) throw InternalError("minimal word length exceeds 2");
    return rows;
}

}  // namespace farey
