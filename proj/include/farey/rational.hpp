#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace farey {

using Int = boost::multiprecision::cpp_int;

namespace detail {

// Floor division, b != 0 (cpp_int's operator/ truncates toward zero).
inline Int floordiv(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Nonnegative remainder of a mod m, m > 0.
inline Int posmod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Returns gcd(a, b) and writes Bezout coefficients with x*a + y*b = gcd.
inline Int extendedGcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int oldR = a, r = b;
    Int oldS = 1, s = 0;
    Int oldT = 0, t = 1;
    while (r != 0) {
        Int q = oldR / r;
        Int tmp = oldR - q * r; oldR = r; r = tmp;
        tmp = oldS - q * s; oldS = s; s = tmp;
        tmp = oldT - q * t; oldT = t; t = tmp;
    }
    if (oldR < 0) { oldR = -oldR; oldS = -oldS; oldT = -oldT; }
    x = oldS;
    y = oldT;
    return oldR;
}

inline Int modInverse(const Int& a, const Int& m) {
    Int x, y;
    Int g = extendedGcd(posmod(a, m), m, x, y);
    if (g != 1) throw InternalError("modular inverse of non-unit");
    return posmod(x, m);
}

}  // namespace detail

/// Vertex of the Farey graph: a rational p/q in lowest terms with q >= 0,
/// where 1/0 is the point at infinity.
class ExtRational {
   public:
    ExtRational() : p_(0), q_(1) {}

    ExtRational(Int p, Int q) {
        if (q == 0) {
            if (p == 0) throw FareyError("0/0 is not a vertex");
            p_ = 1;
            q_ = 0;
            return;
        }
        if (q < 0) { p = -p; q = -q; }
        Int g = boost::multiprecision::gcd(boost::multiprecision::abs(p), q);
        p_ = p / g;
        q_ = q / g;
    }

    static ExtRational infinity() { return ExtRational(1, 0); }

    const Int& num() const { return p_; }
    const Int& den() const { return q_; }
    bool isInfinity() const { return q_ == 0; }

    bool operator==(const ExtRational& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const ExtRational& o) const { return !(*this == o); }

    // Numeric order on the extended reals, with infinity greatest.
    bool operator<(const ExtRational& o) const {
        if (*this == o) return false;
        if (isInfinity()) return false;
        if (o.isInfinity()) return true;
        return p_ * o.q_ < o.p_ * q_;
    }

   private:
    Int p_, q_;
};

/// p_u q_v - q_u p_v. Zero iff u == v (both canonical).
inline Int cross(const ExtRational& u, const ExtRational& v) {
    return u.num() * v.den() - u.den() * v.num();
}

inline bool isFareyNeighbor(const ExtRational& u, const ExtRational& v) {
    Int c = cross(u, v);
    return c == 1 || c == -1;
}

/// Unordered pair of Farey neighbors.
class FareyEdge {
   public:
    FareyEdge(const ExtRational& u, const ExtRational& v) {
        if (!isFareyNeighbor(u, v)) throw FareyError("endpoints are not Farey neighbors");
        if (v < u) { a_ = v; b_ = u; } else { a_ = u; b_ = v; }
    }

    const ExtRational& a() const { return a_; }
    const ExtRational& b() const { return b_; }

    bool contains(const ExtRational& x) const { return x == a_ || x == b_; }
    bool operator==(const FareyEdge& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const FareyEdge& o) const { return !(*this == o); }

   private:
    ExtRational a_, b_;
};

/// The two triangle apexes over an edge: mediant and difference vertex.
inline std::pair<ExtRational, ExtRational> triangleApexes(const FareyEdge& e) {
    const ExtRational& u = e.a();
    const ExtRational& v = e.b();
    return {ExtRational(u.num() + v.num(), u.den() + v.den()),
            ExtRational(u.num() - v.num(), u.den() - v.den())};
}

/// Orientation sign of an ordered vertex triple: +1 or -1 when the three
/// vertices are distinct, 0 when two coincide.
inline int orientation(const ExtRational& a, const ExtRational& b, const ExtRational& c) {
    Int s = cross(a, b) * cross(b, c) * cross(c, a);
    if (s > 0) return 1;
    if (s < 0) return -1;
    return 0;
}

/// Which side of edge e the vertex x lies on (0 iff x is an endpoint).
inline int sideOf(const FareyEdge& e, const ExtRational& x) {
    return orientation(e.a(), x, e.b());
}

/// Minimal Farey neighbor of v in (denominator, numerator) lexicographic order.
inline ExtRational ancestor(const ExtRational& v) {
    if (v.isInfinity()) throw AncestorOfInfinity();
    const Int& p = v.num();
    const Int& q = v.den();
    if (q == 1) return ExtRational::infinity();
    Int sPlus = detail::modInverse(p, q);
    Int s = sPlus < q - sPlus ? sPlus : q - sPlus;
    bool found = false;
    Int best = 0;
    for (int sign = -1; sign <= 1; sign += 2) {
        Int num = p * s + sign;
        if (num % q == 0) {
            Int r = num / q;
            if (!found || r < best) { best = r; found = true; }
        }
    }
    if (!found) throw InternalError("ancestor candidate search failed");
    return ExtRational(best, s);
}

/// Ancestor iteration from v to infinity, both endpoints included.
/// Denominators strictly decrease, so this is a geodesic to infinity.
inline std::vector<ExtRational> ancestorPath(const ExtRational& v) {
    std::vector<ExtRational> path{v};
    while (!path.back().isInfinity()) path.push_back(ancestor(path.back()));
    return path;
}

inline std::string toString(const ExtRational& v) {
    return v.num().str() + "/" + v.den().str();
}

inline ExtRational parseExtRational(const std::string& s) {
    auto slash = s.find('/');
    // cpp_int reads "" as 0, so reject empty parts before converting
    if (s.empty() || slash == 0 || slash == s.size() - 1)
        throw FareyError("cannot parse vertex: " + s);
    try {
        if (slash == std::string::npos) return ExtRational(Int(s), 1);
        return ExtRational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw FareyError("cannot parse vertex: " + s);
    }
}

}  // namespace farey
