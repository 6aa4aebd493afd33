#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace farey {

/// Continued fraction [a0; a1, a2, ...], optionally with an eventually
/// periodic tail. Finite expansions keep the canonical form whose last
/// coefficient is >= 2 (when there is more than one), and have empty period.
struct CFExpansion {
    std::vector<Int> preperiod;
    std::vector<Int> period;

    bool operator==(const CFExpansion& o) const {
        return preperiod == o.preperiod && period == o.period;
    }
};

inline CFExpansion cfOfRational(const ExtRational& v) {
    if (v.isInfinity()) throw InfinityHasNoCF();
    CFExpansion cf;
    Int p = v.num(), q = v.den();
    while (q != 0) {
        Int a = detail::floordiv(p, q);
        cf.preperiod.push_back(a);
        Int r = p - a * q;
        p = q;
        q = r;
    }
    return cf;
}

/// Evaluates a finite expansion [a0; a1, ..., an] back to a vertex.
inline ExtRational evaluateCF(const std::vector<Int>& coeffs) {
    if (coeffs.empty()) throw EmptySequence();
    Int p = coeffs.back(), q = 1;
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
        // x -> a + 1/x
        Int np = *it * p + q;
        q = p;
        p = np;
    }
    return ExtRational(p, q);
}

/// Real quadratic irrational (P + sqrt(D)) / Q with D > 0 not a perfect
/// square, stored in the reduced form where Q divides D - P^2.
class QuadraticSurd {
   public:
    QuadraticSurd(Int P, Int D, Int Q) : p_(std::move(P)), d_(std::move(D)), q_(std::move(Q)) {
        if (q_ == 0) throw FareyError("surd denominator is zero");
        if (d_ <= 0) throw FareyError("surd radicand must be positive");
        Int r = boost::multiprecision::sqrt(d_);
        if (r * r == d_) throw FareyError("surd radicand is a perfect square");
        if ((d_ - p_ * p_) % q_ != 0) {
            Int aq = boost::multiprecision::abs(q_);
            p_ *= aq;
            d_ *= q_ * q_;
            q_ *= aq;
        }
    }

    const Int& P() const { return p_; }
    const Int& D() const { return d_; }
    const Int& Q() const { return q_; }

   private:
    Int p_, d_, q_;
};

namespace detail {

// Shrinks a repeating block to its primitive root (e.g. (1,2,1,2) -> (1,2)).
inline std::vector<Int> primitivePeriod(const std::vector<Int>& period) {
    size_t n = period.size();
    for (size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = period[i] == period[i - d];
        if (ok) return std::vector<Int>(period.begin(), period.begin() + d);
    }
    return period;
}

}  // namespace detail

/// Exact surd iteration: floor, invert, repeat; the (P, Q) state repeats
/// exactly at the start of the period.
inline CFExpansion cfOfSurd(const QuadraticSurd& x) {
    Int P = x.P(), D = x.D(), Q = x.Q();
    Int r = boost::multiprecision::sqrt(D);
    std::map<std::pair<Int, Int>, size_t> seen;
    std::vector<Int> coeffs;
    while (true) {
        auto state = std::make_pair(P, Q);
        auto it = seen.find(state);
        if (it != seen.end()) {
            CFExpansion cf;
            cf.preperiod.assign(coeffs.begin(), coeffs.begin() + it->second);
            cf.period.assign(coeffs.begin() + it->second, coeffs.end());
            cf.period = detail::primitivePeriod(cf.period);
            return cf;
        }
        seen.emplace(state, coeffs.size());
        // floor((P + sqrt(D)) / Q), exact: sqrt(D) is irrational, so for
        // negative Q the ceiling shifts by exactly one.
        Int a = Q > 0 ? detail::floordiv(P + r, Q) : detail::floordiv(P + r + 1, Q);
        coeffs.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

/// The attracting boundary fixed point of a hyperbolic element. On the
/// trace-positive representative the root ((a-d) + sqrt(t^2-4)) / (2c) has
/// Mobius derivative 1/lambda^2 < 1, so it is always the attracting one.
inline QuadraticSurd attractingFixedPoint(const MatrixPSL2Z& m) {
    if (classify(m) != MapClass::Hyperbolic) throw NotHyperbolic();
    Mat2 r = m.rep();
    if (r.trace() < 0) { r.a = -r.a; r.b = -r.b; r.c = -r.c; r.d = -r.d; }
    Int t = r.trace();
    return QuadraticSurd(r.a - r.d, t * t - 4, 2 * r.c);
}

/// M(a1)...M(an) with M(a) = [[a,1],[1,0]]. Determinant is (-1)^n.
inline Mat2 matrixOfSequence(const std::vector<Int>& s) {
    if (s.empty()) throw EmptySequence();
    Mat2 acc = Mat2::identity();
    for (const Int& a : s) {
        if (a < 1) throw NonpositiveEntry();
        acc = acc * Mat2{a, 1, 1, 0};
    }
    return acc;
}

/// Product over the blocks of w with T = [[1,1],[0,1]], U = [[1,0],[1,1]].
/// Requires the alternating block form T^c1 U^c2 ... U^c2k, so that
/// wordToMatrix(T^a1 U^a2 ... U^a2n) = matrixOfSequence(a1, ..., a2n).
inline MatrixPSL2Z wordToMatrix(const std::string& w) {
    if (w.empty()) throw EmptyWord();
    std::vector<Int> blocks;
    char current = 0;
    for (char ch : w) {
        if (ch != 'T' && ch != 'U') throw FareyError("word must use letters T and U");
        if (ch == current) {
            ++blocks.back();
        } else {
            blocks.push_back(1);
            current = ch;
        }
    }
    if (w.front() != 'T' || w.back() != 'U' || blocks.size() % 2 != 0) throw OddBlockCount();
    return MatrixPSL2Z(matrixOfSequence(blocks));
}

}  // namespace farey
