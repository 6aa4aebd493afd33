#pragma once

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "apps.hpp"

namespace farey {

using Json = nlohmann::ordered_json;

/// JSON number when the value fits in 64 bits, decimal string otherwise.
inline Json intOrString(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(x));
    return Json(x.str());
}

/// 20 significant digits; the only place irrational values become text.
inline std::string decimal20(const detail::Float50& x) { return x.str(20); }

inline std::string dilatationDecimal(const Int& trace) {
    detail::Float50 t = detail::toFloat50(trace);
    return decimal20((t + sqrt(t * t - 4)) / 2);
}

inline std::string ratioDecimal(const Int& trace, long long length) {
    return decimal20(detail::logDilatation(trace) / length);
}

inline Json jsonOfMatrix(const MatrixPSL2Z& m) {
    return Json::array({intOrString(m.a()), intOrString(m.b()), intOrString(m.c()), intOrString(m.d())});
}

inline Json jsonOfVertices(const std::vector<ExtRational>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(toString(v));
    return out;
}

inline Json jsonOfInts(const std::vector<Int>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(intOrString(x));
    return out;
}

inline Json jsonOfEdge(const FareyEdge& e) {
    return Json::array({toString(e.a()), toString(e.b())});
}

inline Json jsonOfLadder(const Ladder& l) {
    Json out;
    out["pivots"] = jsonOfVertices(l.pivots);
    out["types"] = jsonOfInts(l.types);
    out["start"] = jsonOfEdge(l.start);
    out["end"] = jsonOfEdge(l.end);
    return out;
}

inline Json jsonOfAxisResult(const AxisResult& r) {
    Json out;
    out["length"] = r.length;
    out["types"] = jsonOfInts(r.window.types);
    out["axis"] = jsonOfVertices(r.axis);
    out["moves"] = r.moves.moves;
    return out;
}

/// "[a0; a1, a2]" for finite expansions, "[a0; a1, (p1, p2)]" with the
/// parenthesized repeating block for periodic ones, "[(p1, p2)]" when
/// purely periodic.
inline std::string cfToString(const CFExpansion& cf) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < cf.preperiod.size(); ++i) {
        out << cf.preperiod[i];
        bool more = i + 1 < cf.preperiod.size() || !cf.period.empty();
        if (more) out << (i == 0 ? "; " : ", ");
    }
    if (!cf.period.empty()) {
        out << "(";
        for (size_t i = 0; i < cf.period.size(); ++i) {
            if (i > 0) out << ", ";
            out << cf.period[i];
        }
        out << ")";
    }
    out << "]";
    return out.str();
}

inline std::string toString(const QuadraticSurd& s) {
    std::ostringstream out;
    out << "(" << s.P() << " + sqrt(" << s.D() << ")) / " << s.Q();
    return out.str();
}

inline std::string normalFormDashed(const std::vector<Int>& s) {
    std::ostringstream out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out << "-";
        out << s[i];
    }
    return out.str();
}

inline std::string spectrumCsvHeader() {
    return "trace,normal_form,translation_length,dilatation_decimal,ratio";
}

inline std::string spectrumCsvRow(const ClassRecord& c) {
    std::ostringstream out;
    out << c.trace << "," << normalFormDashed(c.normalForm) << "," << c.length << ","
        << dilatationDecimal(c.trace) << "," << ratioDecimal(c.trace, c.length);
    return out.str();
}

inline std::string spectrumCsv(const std::vector<ClassRecord>& classes) {
    std::ostringstream out;
    out << spectrumCsvHeader() << "\n";
    for (const auto& c : classes) out << spectrumCsvRow(c) << "\n";
    return out.str();
}

inline std::string censusCsvHeader() { return "R,k,numerator,denominator,ratio"; }

inline std::string censusCsvRow(const std::string& rLabel, long long k, const CensusResult& res) {
    std::ostringstream out;
    detail::Float50 ratio = detail::Float50(res.numerator) / detail::Float50(res.denominator);
    out << rLabel << "," << k << "," << res.numerator << "," << res.denominator << "," << decimal20(ratio);
    return out.str();
}

/// Parses a nonnegative decimal literal like "50" or "6.5" to an exact
/// fraction num/den.
inline void parseDecimal(const std::string& text, Int& num, Int& den) {
    std::string intPart, fracPart;
    size_t dot = text.find('.');
    if (dot == std::string::npos) {
        intPart = text;
    } else {
        intPart = text.substr(0, dot);
        fracPart = text.substr(dot + 1);
        if (fracPart.find('.') != std::string::npos) throw FareyError("malformed decimal: " + text);
    }
    if (intPart.empty() && fracPart.empty()) throw FareyError("malformed decimal: " + text);
    for (char ch : intPart + fracPart) {
        if (ch < '0' || ch > '9') throw FareyError("malformed decimal: " + text);
    }
    num = 0;
    for (char ch : intPart + fracPart) num = num * 10 + (ch - '0');
    den = 1;
    for (size_t i = 0; i < fracPart.size(); ++i) den *= 10;
    Int g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

}  // namespace farey
