#ifndef ANS_PELL_HPP
#define ANS_PELL_HPP

#include <utility>
#include <vector>

#include "ans/bigint.hpp"
#include "ans/errors.hpp"

namespace ans {

// Minimal non-trivial solution (u,v) of U^2 - alpha V^2 = 1, the one with
// the smallest u > 1, via the continued-fraction expansion of sqrt(alpha).
inline std::pair<Int, Int> pell_fundamental(const Int& alpha) {
    if (alpha < 2 || is_perfect_square(alpha))
        throw DomainError("pell_fundamental: alpha must be a non-square integer >= 2");
    Int a0 = isqrt(alpha);
    Int m = 0, d = 1, a = a0;
    Int h_prev = 1, h = a0, k_prev = 0, k = 1;
    for (long guard = 0; guard < 1'000'000; ++guard) {
        if (h * h - alpha * k * k == 1) return {h, k};
        m = d * a - m;
        d = (alpha - m * m) / d;
        a = (a0 + m) / d;
        Int h_next = a * h + h_prev, k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    throw Error("pell_fundamental: convergent search did not terminate");
}

// One class of solutions of X^2 - alpha Y^2 = N, generated from its
// fundamental member by the matrix (u, alpha v; v, u).
struct PellClass {
    Int x0, y0;
    std::vector<std::pair<Int, Int>> terms;
};

struct PellSolutionSet {
    Int alpha;
    Int n;
    Int u, v;  // fundamental solution of the unit equation
    std::vector<PellClass> classes;
};

// All natural solutions of X^2 - alpha Y^2 = N: one generating member per
// ascending sequence, iterated `count` terms each. Members are searched
// exhaustively in 0 < X0 <= u*sqrt(N) (compared exactly as X0^2 <= u^2 N)
// when that range is small; for large unit solutions the same set of
// generators is obtained from class representatives within the classical
// |x| <= sqrt((u+1)N/2) window, pushed into the natural quadrant.
inline PellSolutionSet pell_solutions(const Int& alpha, const Int& n, int count) {
    if (n <= 0) throw DomainError("pell_solutions: N must be positive");
    auto [u, v] = pell_fundamental(alpha);
    PellSolutionSet out{alpha, n, u, v, {}};
    std::vector<std::pair<Int, Int>> seeds;
    Int bound2 = u * u * n;
    if (bound2 <= Int(1'000'000) * Int(1'000'000)) {
        for (Int x0 = 1; x0 * x0 <= bound2; ++x0) {
            Int num = x0 * x0 - n;
            if (num < 0 || num % alpha != 0) continue;
            Int y2 = num / alpha;
            Int y0 = isqrt(y2);
            if (y0 * y0 != y2) continue;
            seeds.emplace_back(x0, y0);
        }
    } else {
        // class representatives satisfy 2(u+1) alpha y^2 <= (u^2-1) N;
        // each natural-quadrant sequence starts at the normalization of a
        // representative or of its conjugate
        auto normalize = [&](Int x, Int y) {
            while (y < 0) {
                Int xn = u * x + alpha * v * y, yn = v * x + u * y;
                x = xn;
                y = yn;
            }
            for (;;) {
                Int xp = u * x - alpha * v * y, yp = u * y - v * x;
                if (yp < 0 || xp <= 0) break;
                x = xp;
                y = yp;
            }
            return std::make_pair(x, y);
        };
        std::set<std::pair<Int, Int>> found;
        for (Int y = 0; 2 * (u + 1) * alpha * y * y <= (u * u - 1) * n; ++y) {
            Int x2 = n + alpha * y * y;
            Int x = isqrt(x2);
            if (x * x != x2) continue;
            found.insert(normalize(x, y));
            found.insert(normalize(x, -y));
        }
        seeds.assign(found.begin(), found.end());
        for (const auto& [x0, y0] : seeds)
            if (x0 * x0 > bound2) throw Error("pell_solutions: seed outside the u*sqrt(N) bound");
    }
    for (const auto& [x0, y0] : seeds) {
        PellClass cls{x0, y0, {}};
        Int x = x0, y = y0;
        for (int i = 0; i < count; ++i) {
            cls.terms.emplace_back(x, y);
            Int xn = u * x + alpha * v * y;
            Int yn = v * x + u * y;
            x = xn;
            y = yn;
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

}  // namespace ans

#endif
