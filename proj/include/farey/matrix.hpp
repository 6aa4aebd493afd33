#pragma once

#include <cstdint>
#include <string>

#include "rational.hpp"

namespace farey {

/// Plain 2x2 integer matrix, row major. No determinant constraint; used for
/// raw products such as M(a1)...M(an) with odd n.
struct Mat2 {
    Int a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Int trace() const { return a + d; }
    Int det() const { return a * d - b * c; }

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

inline Mat2 matPow(Mat2 base, long long n) {
    Mat2 acc = Mat2::identity();
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

/// Element of PSL(2, Z): determinant +1 matrix up to sign, stored with the
/// first nonzero entry of (a, b, c, d) positive.
class MatrixPSL2Z {
   public:
    MatrixPSL2Z(Int a, Int b, Int c, Int d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
        if (m_.det() != 1) throw BadDeterminant();
        normalize();
    }

    explicit MatrixPSL2Z(const Mat2& m) : MatrixPSL2Z(m.a, m.b, m.c, m.d) {}

    const Int& a() const { return m_.a; }
    const Int& b() const { return m_.b; }
    const Int& c() const { return m_.c; }
    const Int& d() const { return m_.d; }
    const Mat2& rep() const { return m_; }

    Int trace() const { return m_.trace(); }
    Int absTrace() const { return boost::multiprecision::abs(m_.trace()); }

    MatrixPSL2Z operator*(const MatrixPSL2Z& o) const { return MatrixPSL2Z(m_ * o.m_); }
    bool operator==(const MatrixPSL2Z& o) const { return m_ == o.m_; }
    bool operator!=(const MatrixPSL2Z& o) const { return !(*this == o); }

    MatrixPSL2Z inverse() const { return MatrixPSL2Z(m_.d, -m_.b, -m_.c, m_.a); }

    MatrixPSL2Z power(long long n) const {
        if (n < 0) return inverse().power(-n);
        return MatrixPSL2Z(matPow(m_, n));
    }

   private:
    void normalize() {
        const Int* entries[4] = {&m_.a, &m_.b, &m_.c, &m_.d};
        for (const Int* e : entries) {
            if (*e == 0) continue;
            if (*e < 0) { m_.a = -m_.a; m_.b = -m_.b; m_.c = -m_.c; m_.d = -m_.d; }
            break;
        }
    }

    Mat2 m_;
};

enum class MapClass { Elliptic, Parabolic, Hyperbolic };

inline MapClass classify(const MatrixPSL2Z& m) {
    Int t = m.absTrace();
    if (t > 2) return MapClass::Hyperbolic;
    if (t == 2) return MapClass::Parabolic;
    return MapClass::Elliptic;
}

inline ExtRational apply(const MatrixPSL2Z& m, const ExtRational& v) {
    return ExtRational(m.a() * v.num() + m.b() * v.den(),
                       m.c() * v.num() + m.d() * v.den());
}

inline FareyEdge apply(const MatrixPSL2Z& m, const FareyEdge& e) {
    return FareyEdge(apply(m, e.a()), apply(m, e.b()));
}

/// Coefficients of the fixed point equation of a hyperbolic element,
/// c x^2 + (d - a) x - b = 0, as the form A p^2 + B p q + C q^2.
struct AxisQuadratic {
    Int A, B, C;
    Int discriminant() const { return B * B - 4 * A * C; }
};

inline AxisQuadratic fixedPointQuadratic(const MatrixPSL2Z& m) {
    if (classify(m) != MapClass::Hyperbolic) throw NotHyperbolic();
    return {m.c(), m.d() - m.a(), -m.b()};
}

/// True iff x lies strictly between the two real roots of Q. Infinity is
/// never strictly between two finite roots.
inline bool strictlyBetweenRoots(const AxisQuadratic& Q, const ExtRational& x) {
    const Int& p = x.num();
    const Int& q = x.den();
    Int value = Q.A * p * p + Q.B * p * q + Q.C * q * q;
    return Q.A > 0 ? value < 0 : value > 0;
}

inline std::string toString(const Mat2& m) {
    return m.a.str() + "," + m.b.str() + "," + m.c.str() + "," + m.d.str();
}

inline std::string toString(const MatrixPSL2Z& m) { return toString(m.rep()); }

/// Parses "a,b,c,d" into a raw matrix (no determinant check).
inline Mat2 parseMat2(const std::string& s) {
    Int parts[4];
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        size_t comma = s.find(',', pos);
        bool last = i == 3;
        if (last != (comma == std::string::npos)) throw FareyError("matrix needs exactly 4 comma-separated entries");
        std::string tok = s.substr(pos, last ? std::string::npos : comma - pos);
        if (tok.empty()) throw FareyError("matrix entry is empty");
        try {
            parts[i] = Int(tok);
        } catch (const std::exception&) {
            throw FareyError("cannot parse matrix entry: " + tok);
        }
        pos = comma + 1;
    }
    return {parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace farey
