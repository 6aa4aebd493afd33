#pragma once

#include <utility>
#include <vector>

#include "contfrac.hpp"

namespace farey {

/// A finite ladder: the chain of Farey triangles crossed between two edges.
/// pivots = first entry vertex, one pivot per block of triangles sharing it,
/// then the final apex; types = the block sizes (|pivots| == |types| + 2).
struct Ladder {
    std::vector<ExtRational> pivots;
    std::vector<Int> types;
    FareyEdge start, end;
};

namespace detail {

// The apex of edge (x, y) equal to ref or on the same side as ref.
inline ExtRational apexOnSideOf(const ExtRational& x, const ExtRational& y, const ExtRational& ref) {
    FareyEdge e(x, y);
    auto [med, dif] = triangleApexes(e);
    if (med == ref || dif == ref) return ref;
    if (sideOf(e, med) == sideOf(e, ref)) return med;
    if (sideOf(e, dif) == sideOf(e, ref)) return dif;
    throw InternalError("no apex on the requested side");
}

// True iff every endpoint of target lies on E itself or strictly on the
// side of E away from opp. Exact separation test for choosing exit edges.
inline bool beyond(const FareyEdge& E, const ExtRational& opp, const FareyEdge& target) {
    int away = sideOf(E, opp);
    for (const ExtRational& z : {target.a(), target.b()}) {
        if (E.contains(z)) continue;
        if (sideOf(E, z) == away) return false;
    }
    return true;
}

// Walks the triangle chain from e0 to e1, visiting each triangle in order.
// visit(x, y, w, keep, first, done): (x, y) is the entry rung, w the apex,
// (keep, w) the exit rung; on the first triangle the non-kept entry vertex
// is the ladder's first pivot-list entry.
template <class Visit>
inline void walkLadder(const FareyEdge& e0, const FareyEdge& e1, Visit&& visit) {
    if (e0 == e1) throw EqualEdges();
    ExtRational x = e0.a(), y = e0.b();
    bool first = true;
    while (true) {
        ExtRational ref = (e1.a() != x && e1.a() != y) ? e1.a() : e1.b();
        ExtRational w = apexOnSideOf(x, y, ref);
        FareyEdge exitX(x, w), exitY(y, w);
        bool done = true;
        ExtRational keep = x, other = y;
        if (exitX == e1) {
            keep = x; other = y;
        } else if (exitY == e1) {
            keep = y; other = x;
        } else {
            done = false;
            bool viaX = beyond(exitX, y, e1);
            bool viaY = beyond(exitY, x, e1);
            if (viaX == viaY) throw InternalError("exit edge is ambiguous");
            if (viaX) { keep = x; other = y; } else { keep = y; other = x; }
        }
        if (first && done) throw AdjacentEdges();
        visit(x, y, w, keep, other, first, done);
        if (done) return;
        first = false;
        x = keep;
        y = w;
    }
}

}  // namespace detail

inline Ladder generateLadder(const FareyEdge& e0, const FareyEdge& e1) {
    std::vector<ExtRational> pivots;
    std::vector<Int> types;
    detail::walkLadder(e0, e1, [&](const ExtRational&, const ExtRational&, const ExtRational& w,
                                   const ExtRational& keep, const ExtRational& other, bool first, bool done) {
        if (first) pivots.push_back(other);
        if (pivots.back() == keep) {
            types.back() += 1;
        } else {
            pivots.push_back(keep);
            types.push_back(1);
        }
        if (done) pivots.push_back(w);
    });
    return Ladder{std::move(pivots), std::move(types), e0, e1};
}

/// Every vertex of the ladder, in walk order (entry rung, then each apex).
inline std::vector<ExtRational> ladderVertices(const Ladder& L) {
    std::vector<ExtRational> verts;
    detail::walkLadder(L.start, L.end, [&](const ExtRational& x, const ExtRational& y, const ExtRational& w,
                                           const ExtRational&, const ExtRational&, bool first, bool) {
        if (first) {
            verts.push_back(x);
            verts.push_back(y);
        }
        verts.push_back(w);
    });
    return verts;
}

/// Every edge of the ladder, each exactly once.
inline std::vector<FareyEdge> ladderEdges(const Ladder& L) {
    std::vector<FareyEdge> edges;
    detail::walkLadder(L.start, L.end, [&](const ExtRational& x, const ExtRational& y, const ExtRational& w,
                                           const ExtRational&, const ExtRational&, bool first, bool) {
        if (first) edges.push_back(FareyEdge(x, y));
        edges.push_back(FareyEdge(x, w));
        edges.push_back(FareyEdge(y, w));
    });
    return edges;
}

/// The spine: the path through all pivot points, endpoints included.
inline std::vector<ExtRational> spine(const Ladder& L) { return L.pivots; }

/// Shifts an odd window into the even one with cyclic type
/// (a1 + an, a2, ..., a_{n-1}): drop the first block, extend the far end by
/// a1 fan steps around the last pivot. Even windows pass through unchanged.
inline Ladder calibrateLadder(const Ladder& L) {
    size_t n = L.types.size();
    if (n % 2 == 0) return L;
    if (n < 3) throw FareyError("cannot calibrate a single-block window");
    Int a1 = L.types[0];
    std::vector<Int> types(L.types.begin() + 1, L.types.end());
    types.back() += a1;

    const auto& piv = L.pivots;
    const ExtRational& pn = piv[piv.size() - 2];
    const ExtRational& pprev = piv[piv.size() - 3];
    ExtRational prev = detail::apexOnSideOf(pn, piv.back(), pprev);
    ExtRational x = piv.back();
    for (Int i = 0; i < a1; ++i) {
        auto [med, dif] = triangleApexes(FareyEdge(pn, x));
        ExtRational next = med == prev ? dif : med;
        prev = x;
        x = next;
    }

    std::vector<ExtRational> pivots(piv.begin() + 1, piv.end() - 1);
    pivots.push_back(x);
    return Ladder{std::move(pivots), std::move(types), FareyEdge(piv[1], piv[2]), FareyEdge(pn, x)};
}

inline bool isStandard(const MatrixPSL2Z& m) {
    if (classify(m) != MapClass::Hyperbolic) throw NotHyperbolic();
    return m.b() * m.c() > 0;
}

/// A rung of the invariant bi-infinite ladder of a hyperbolic element:
/// (0, infinity) for standard elements; otherwise the first ancestor-path
/// edge crossing out of the fixed-point interval, starting from the
/// midpoint (a - d) / (2c) of the two fixed points.
inline FareyEdge findRung(const MatrixPSL2Z& m) {
    if (!isStandard(m)) {
        AxisQuadratic Q = fixedPointQuadratic(m);
        ExtRational mid(m.a() - m.d(), 2 * m.c());
        auto path = ancestorPath(mid);
        for (size_t k = 0; k + 1 < path.size(); ++k) {
            if (strictlyBetweenRoots(Q, path[k]) && !strictlyBetweenRoots(Q, path[k + 1]))
                return FareyEdge(path[k], path[k + 1]);
        }
        throw InternalError("ancestor path never leaves the root interval");
    }
    return FareyEdge(ExtRational(0, 1), ExtRational::infinity());
}

/// An even fundamental window of the invariant ladder: one application of M
/// translates it onto the adjacent copy (apply(M, start) == end).
inline Ladder invariantLadderWindow(const MatrixPSL2Z& m) {
    FareyEdge e = findRung(m);
    Ladder raw = generateLadder(e, apply(m, e));
    if (raw.types.size() != 1) return calibrateLadder(raw);

    // Single-block window: calibration's index arithmetic is undefined, so
    // regenerate across two periods and halve, verifying the halves agree.
    Ladder two = calibrateLadder(generateLadder(e, apply(m.power(2), e)));
    size_t N2 = two.types.size();
    if (N2 % 2 != 0) throw InternalError("doubled window has odd type count");
    size_t half = N2 / 2;
    for (size_t i = 0; i < half; ++i) {
        if (two.types[i] != two.types[i + half]) throw InternalError("doubled window halves disagree");
    }
    std::vector<Int> types(two.types.begin(), two.types.begin() + half);
    std::vector<ExtRational> pivots(two.pivots.begin(), two.pivots.begin() + half + 2);
    FareyEdge end(pivots[half], pivots[half + 1]);
    if (apply(m, two.start) != end) throw InternalError("halved window does not translate");
    return Ladder{std::move(pivots), std::move(types), two.start, end};
}

}  // namespace farey
