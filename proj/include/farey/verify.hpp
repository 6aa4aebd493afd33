#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "io.hpp"

namespace farey {

/// Deterministic case generator; modulo bounding is fine for test data.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long long next(long long lo, long long hi) {
        return lo + static_cast<long long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 gen_;
};

inline std::vector<Int> randomSequence(Rng& rng, int minLen, int maxLen, long long maxEntry) {
    int n = static_cast<int>(rng.next(minLen, maxLen));
    std::vector<Int> s;
    s.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) s.push_back(rng.next(1, maxEntry));
    return s;
}

inline std::vector<Int> randomEvenSequence(Rng& rng, int maxPairs, long long maxEntry) {
    int pairs = static_cast<int>(rng.next(1, maxPairs));
    std::vector<Int> s;
    s.reserve(static_cast<size_t>(2 * pairs));
    for (int i = 0; i < 2 * pairs; ++i) s.push_back(rng.next(1, maxEntry));
    return s;
}

/// Random word in T^e, U^e with small exponents.
inline MatrixPSL2Z randomGroupElement(Rng& rng) {
    MatrixPSL2Z g(1, 0, 0, 1);
    int n = static_cast<int>(rng.next(1, 4));
    for (int i = 0; i < n; ++i) {
        Int e = 0;
        while (e == 0) e = rng.next(-3, 3);
        g = g * (rng.next(0, 1) == 1 ? MatrixPSL2Z(1, e, 0, 1) : MatrixPSL2Z(1, 0, e, 1));
    }
    return g;
}

/// Hyperbolic element with all |entries| <= maxEntry: a small even word,
/// conjugated a few times, rejection-sampled on the entry bound.
inline MatrixPSL2Z randomHyperbolic(Rng& rng, const Int& maxEntry) {
    using boost::multiprecision::abs;
    while (true) {
        MatrixPSL2Z m(matrixOfSequence(randomEvenSequence(rng, 2, 5)));
        int conjugations = static_cast<int>(rng.next(0, 3));
        for (int i = 0; i < conjugations; ++i) {
            MatrixPSL2Z g = randomGroupElement(rng);
            m = g * m * g.inverse();
        }
        if (abs(m.a()) <= maxEntry && abs(m.b()) <= maxEntry && abs(m.c()) <= maxEntry &&
            abs(m.d()) <= maxEntry)
            return m;
    }
}

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::string firstRepro;

    bool passed() const { return failures == 0; }
};

namespace detail {

inline void recordFailure(SuiteResult& r, const std::string& repro) {
    r.failures += 1;
    if (r.firstRepro.empty()) r.firstRepro = repro;
}

template <typename Check>
inline SuiteResult runSuite(const std::string& name, long long cases, Check&& check) {
    SuiteResult result{name, cases, 0, ""};
    for (long long i = 0; i < cases; ++i) {
        try {
            check(result, i);
        } catch (const FareyError& e) {
            recordFailure(result, std::string("case ") + std::to_string(i) + ": " + e.what());
        }
    }
    return result;
}

}  // namespace detail

/// Axis distances from the independent ancestor-map oracle: d(v, M^j v)
/// must equal j times the computed translation length for j = 1..10.
inline SuiteResult suiteOracle(std::uint64_t seed, long long cases) {
    Rng rng(seed);
    return detail::runSuite("oracle", cases, [&](SuiteResult& r, long long) {
        MatrixPSL2Z m = randomHyperbolic(rng, 500);
        AxisResult axis = translationLength(m);
        ExtRational v = axis.axis.front();
        MatrixPSL2Z power = m;
        for (int j = 1; j <= 10; ++j) {
            if (fareyDistanceAncestor(v, apply(power, v)) != j * axis.length) {
                detail::recordFailure(r, "matrix=" + toString(m) + " j=" + std::to_string(j));
                return;
            }
            if (j < 10) power = power * m;
        }
    });
}

/// Power linearity l(M^n) = n l(M) for n <= 5, plus inverse invariance.
inline SuiteResult suitePower(std::uint64_t seed, long long cases) {
    Rng rng(seed);
    return detail::runSuite("power", cases, [&](SuiteResult& r, long long) {
        MatrixPSL2Z m = randomHyperbolic(rng, 500);
        long long l = translationLength(m).length;
        long long n = rng.next(2, 5);
        if (translationLength(m.power(n)).length != n * l)
            detail::recordFailure(r, "matrix=" + toString(m) + " n=" + std::to_string(n));
        else if (translationLength(m.inverse()).length != l)
            detail::recordFailure(r, "matrix=" + toString(m) + " inverse");
    });
}

/// Conjugation invariance of the translation length.
inline SuiteResult suiteConjugation(std::uint64_t seed, long long cases) {
    Rng rng(seed);
    return detail::runSuite("conjugation", cases, [&](SuiteResult& r, long long) {
        MatrixPSL2Z m = randomHyperbolic(rng, 500);
        MatrixPSL2Z g = randomGroupElement(rng);
        if (translationLength(g * m * g.inverse()).length != translationLength(m).length)
            detail::recordFailure(r, "matrix=" + toString(m) + " g=" + toString(g));
    });
}

/// The pipeline applied to M(S) recovers S up to cyclic rotation, also
/// after conjugation.
inline SuiteResult suiteType(std::uint64_t seed, long long cases) {
    Rng rng(seed);
    return detail::runSuite("type", cases, [&](SuiteResult& r, long long) {
        std::vector<Int> s = randomEvenSequence(rng, 4, 8);
        std::vector<Int> expected = minimalCyclicRotation(s);
        MatrixPSL2Z m(matrixOfSequence(s));
        MatrixPSL2Z g = randomGroupElement(rng);
        for (const MatrixPSL2Z& candidate : {m, g * m * g.inverse()}) {
            Ladder window = invariantLadderWindow(candidate);
            if (minimalCyclicRotation(window.types) != expected) {
                detail::recordFailure(r, "sequence=" + normalFormDashed(s) + " matrix=" + toString(candidate));
                return;
            }
        }
    });
}

/// matrixOfSequence is a monoid homomorphism on concatenation, and its
/// entries grow componentwise in each coefficient.
inline SuiteResult suiteHomomorphism(std::uint64_t seed, long long cases) {
    Rng rng(seed);
    return detail::runSuite("homomorphism", cases, [&](SuiteResult& r, long long) {
        std::vector<Int> s1 = randomSequence(rng, 1, 6, 6);
        std::vector<Int> s2 = randomSequence(rng, 1, 6, 6);
        std::vector<Int> joined = s1;
        joined.insert(joined.end(), s2.begin(), s2.end());
        if (!(matrixOfSequence(joined) == matrixOfSequence(s1) * matrixOfSequence(s2))) {
            detail::recordFailure(r, "s1=" + normalFormDashed(s1) + " s2=" + normalFormDashed(s2));
            return;
        }
        std::vector<Int> bumped = s1;
        size_t at = static_cast<size_t>(rng.next(0, static_cast<long long>(s1.size()) - 1));
        bumped[at] += rng.next(1, 3);
        Mat2 lo = matrixOfSequence(s1), hi = matrixOfSequence(bumped);
        if (hi.a < lo.a || hi.b < lo.b || hi.c < lo.c || hi.d < lo.d)
            detail::recordFailure(r, "s1=" + normalFormDashed(s1) + " bumped index " + std::to_string(at));
    });
}

/// Every class with trace <= 200 has trace at least that of M(2)^length.
inline SuiteResult suiteTraceBound(std::uint64_t, long long) {
    auto classes = enumerateClasses(200);
    SuiteResult result{"tracebound", static_cast<long long>(classes.size()), 0, ""};
    for (const auto& c : classes) {
        if (c.trace < matPow(Mat2{2, 1, 1, 0}, c.length).trace())
            detail::recordFailure(result, "class=" + normalFormDashed(c.normalForm));
    }
    return result;
}

inline std::vector<SuiteResult> runVerify(std::uint64_t seed, long long cases,
                                          const std::vector<std::string>& only = {}) {
    auto wanted = [&](const std::string& name) {
        if (only.empty()) return true;
        for (const auto& o : only) {
            if (o == name) return true;
        }
        return false;
    };
    std::vector<SuiteResult> out;
    if (wanted("oracle")) out.push_back(suiteOracle(seed, cases));
    if (wanted("power")) out.push_back(suitePower(seed, cases));
    if (wanted("conjugation")) out.push_back(suiteConjugation(seed, cases));
    if (wanted("type")) out.push_back(suiteType(seed, cases));
    if (wanted("homomorphism")) out.push_back(suiteHomomorphism(seed, cases));
    if (wanted("tracebound")) out.push_back(suiteTraceBound(seed, cases));
    return out;
}

}  // namespace farey
