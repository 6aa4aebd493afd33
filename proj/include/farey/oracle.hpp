#pragma once

#include <deque>
#include <map>
#include <vector>

#include "geodesic.hpp"

namespace farey {

/// A determinant-1 matrix sending u to infinity, chosen deterministically
/// (the Bezout completion with minimal |top-left| entry).
inline MatrixPSL2Z completionToInfinity(const ExtRational& u) {
    if (u.isInfinity()) return MatrixPSL2Z(1, 0, 0, 1);
    const Int& p = u.num();
    const Int& q = u.den();
    Int x, y;
    Int g = detail::extendedGcd(p, q, x, y);
    if (g != 1) throw InternalError("vertex not in lowest terms");
    if (q != 0) {
        // x + k q stays a solution; minimize |x|, ties toward the larger.
        Int x0 = detail::posmod(x, q);
        Int x1 = x0 - q;
        Int best = (x0 <= -x1) ? x0 : x1;
        y = y - ((best - x) / q) * p;
        x = best;
    }
    return MatrixPSL2Z(x, y, -q, p);
}

/// Exact Farey distance via the ancestor map: move u to infinity by an
/// isometry, then count ancestor steps from the image of v to infinity
/// (the ancestor path is a geodesic).
inline long long fareyDistanceAncestor(const ExtRational& u, const ExtRational& v) {
    if (u == v) return 0;
    ExtRational w = apply(completionToInfinity(u), v);
    long long steps = 0;
    while (!w.isInfinity()) {
        w = ancestor(w);
        ++steps;
    }
    return steps;
}

/// Exact Farey distance via breadth-first search over an explicit finite
/// vertex set: u is moved to infinity, the Stern-Brocot descent from the
/// enclosing integer interval down to the image of v supplies every vertex
/// of the connecting ladder, and all Farey-neighbor pairs among them are the
/// edges. Independent of the ancestor oracle.
inline long long fareyDistanceBFS(const ExtRational& u, const ExtRational& v) {
    if (u == v) return 0;
    if (isFareyNeighbor(u, v)) return 1;
    ExtRational w = apply(completionToInfinity(u), v);
    ExtRational inf = ExtRational::infinity();
    // w is finite and not an integer here: infinity is u's image, and
    // integers are its neighbors (handled above through isometry).
    std::vector<ExtRational> verts{inf};
    Int fl = detail::floordiv(w.num(), w.den());
    ExtRational lo(fl, 1), hi(fl + 1, 1);
    verts.push_back(lo);
    verts.push_back(hi);
    while (true) {
        ExtRational mid(lo.num() + hi.num(), lo.den() + hi.den());
        verts.push_back(mid);
        if (mid == w) break;
        if (w < mid) hi = mid; else lo = mid;
    }

    size_t n = verts.size();
    std::vector<std::vector<size_t>> adj(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (isFareyNeighbor(verts[i], verts[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    size_t source = 0, sink = n - 1;  // infinity and w
    std::vector<long long> dist(n, -1);
    std::deque<size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        size_t at = queue.front();
        queue.pop_front();
        if (at == sink) return dist[at];
        for (size_t next : adj[at]) {
            if (dist[next] < 0) {
                dist[next] = dist[at] + 1;
                queue.push_back(next);
            }
        }
    }
    throw InternalError("BFS graph is disconnected");
}

/// d(v, M^j v) for j = 1..J. On an axis pivot this is exactly j times the
/// translation length.
inline std::vector<long long> stableLengthProbe(const MatrixPSL2Z& m, const ExtRational& v, int J) {
    if (classify(m) != MapClass::Hyperbolic) throw NotHyperbolic();
    if (J < 1 || J > 20) throw FareyError("probe exponent must be in 1..20");
    std::vector<long long> out;
    MatrixPSL2Z power = m;
    for (int j = 1; j <= J; ++j) {
        out.push_back(fareyDistanceAncestor(v, apply(power, v)));
        if (j < J) power = power * m;
    }
    return out;
}

}  // namespace farey
