#pragma once

#include <string>
#include <vector>

#include "ladder.hpp"

namespace farey {

/// An efficient move word over {t, p} with its starting pivot index.
/// A t-move advances the pivot index by 1, a p-move by 2.
struct MoveSequence {
    long long startPivotIndex = 0;
    std::string moves;

    bool operator==(const MoveSequence& o) const {
        return startPivotIndex == o.startPivotIndex && moves == o.moves;
    }
};

/// The greedy efficient path along a block list from pivot index start to
/// pivot index final: pass a block only when it has size 1 and the passing
/// move would not overshoot the final point.
inline MoveSequence efficientPath(const std::vector<Int>& types, long long start, long long final) {
    for (const Int& t : types) {
        if (t < 1) throw NonpositiveEntry();
    }
    if (start < 0 || final > static_cast<long long>(types.size()) + 1 || start > final)
        throw FareyError("path endpoints outside the pivot range");
    MoveSequence seq;
    seq.startPivotIndex = start;
    long long i = start;
    while (i < final) {
        if (i + 1 == final) {
            seq.moves.push_back('t');
            i += 1;
        } else if (types[static_cast<size_t>(i)] == 1) {
            seq.moves.push_back('p');
            i += 2;
        } else {
            seq.moves.push_back('t');
            i += 1;
        }
    }
    return seq;
}

/// Efficient geodesic across a whole finite ladder. startSide 0 runs from
/// the first pivot-list entry to the final apex (indices 0 to n+1);
/// startSide 1 runs between the two interior-anchored endpoints (1 to n).
inline MoveSequence efficientGeodesicFinite(const Ladder& L, int startSide) {
    if (startSide != 0 && startSide != 1) throw FareyError("startSide must be 0 or 1");
    long long n = static_cast<long long>(L.types.size());
    return efficientPath(L.types, startSide, n + 1 - startSide);
}

namespace detail {

struct CycleInfo {
    long long length;          // moves per period
    long long startPosition;   // first position of the detected cycle
    std::string moves;         // one period of moves, from startPosition
};

// Residue dynamics of the bi-infinite efficient rule: from position r the
// move is p (advance 2) iff the block after pivot r has size 1, else t.
// Every cycle of the map advances by exactly one full period.
inline CycleInfo efficientCycle(const std::vector<Int>& types) {
    size_t N = types.size();
    if (N == 0 || N % 2 != 0) throw OddLength();
    for (const Int& t : types) {
        if (t < 1) throw NonpositiveEntry();
    }
    std::vector<long long> firstVisit(N, -1);
    std::vector<char> move(N, 0);
    long long step = 0;
    size_t r = 0;
    while (firstVisit[r] < 0) {
        firstVisit[r] = step++;
        if (types[r] == 1) {
            move[r] = 'p';
            r = (r + 2) % N;
        } else {
            move[r] = 't';
            r = (r + 1) % N;
        }
    }
    CycleInfo info;
    info.startPosition = static_cast<long long>(r);
    info.length = step - firstVisit[r];
    size_t cur = r;
    long long advance = 0;
    for (long long k = 0; k < info.length; ++k) {
        info.moves.push_back(move[cur]);
        advance += move[cur] == 'p' ? 2 : 1;
        cur = (cur + (move[cur] == 'p' ? 2 : 1)) % N;
    }
    if (advance != static_cast<long long>(N)) throw InternalError("cycle advance is not one period");
    return info;
}

}  // namespace detail

/// Translation length determined by a cyclic even type list alone: the move
/// count of the cycle of the residue dynamics. All cycles of the map must
/// agree (the invariant geodesic length is unique); disagreement would be a
/// broken invariant and throws.
inline long long cyclicTranslationLength(const std::vector<Int>& types) {
    detail::CycleInfo first = detail::efficientCycle(types);
    size_t N = types.size();
    std::vector<char> seen(N, 0);
    for (size_t r0 = 0; r0 < N; ++r0) {
        if (seen[r0]) continue;
        // Walk into the cycle reachable from r0, then measure it.
        size_t r = r0;
        std::vector<long long> visit(N, -1);
        long long step = 0;
        while (visit[r] < 0 && !seen[r]) {
            visit[r] = step++;
            r = (r + (types[r] == 1 ? 2 : 1)) % N;
        }
        if (visit[r] >= 0) {
            long long cycleLen = step - visit[r];
            if (cycleLen != first.length) throw InternalError("residue cycles of unequal length");
        }
        for (size_t i = 0; i < N; ++i) {
            if (visit[i] >= 0) seen[i] = 1;
        }
    }
    return first.length;
}

/// Full translation data of a hyperbolic element.
struct AxisResult {
    long long length = 0;
    Ladder window;
    std::vector<ExtRational> axis;  // one period of axis pivots
    MoveSequence moves;             // one period of moves, cycle-aligned
};

/// Main pipeline: rung, window, cyclic length, then one period of axis
/// pivots materialized from the window's pivot list, wrapping through
/// apply(M, .) past the window's end.
inline AxisResult translationLength(const MatrixPSL2Z& m) {
    Ladder window = invariantLadderWindow(m);
    detail::CycleInfo cycle = detail::efficientCycle(window.types);
    cyclicTranslationLength(window.types);  // multi-cycle consistency check
    long long N = static_cast<long long>(window.types.size());

    AxisResult result{cycle.length, window, {}, {cycle.startPosition, cycle.moves}};
    long long index = cycle.startPosition;
    for (long long k = 0; k < cycle.length; ++k) {
        if (index <= N + 1) {
            result.axis.push_back(window.pivots[static_cast<size_t>(index)]);
        } else {
            result.axis.push_back(apply(m, window.pivots[static_cast<size_t>(index - N)]));
        }
        index += cycle.moves[static_cast<size_t>(k)] == 'p' ? 2 : 1;
    }
    return result;
}

}  // namespace farey
