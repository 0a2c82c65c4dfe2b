// Alexander polynomials by two independent routes: Seifert matrices built
// from even continued fractions, and the closed forms for the family
// Delta_{m,n}.  The two routes cross-validate each other on the test grids.
//
// Closed forms (m >= 1, and the twist-knot row m = 0):
//     Delta_{m,n}(t) = n(t^{m+1} + t^{-m-1}) - 3n(t^m + t^{-m})
//                      + (4n+1) * sum_{i=-m+1}^{m-1} (-1)^{i-m+1} t^i
//     Delta_{0,n}(t) = n(t + t^{-1}) - (2n - 1)
// with Delta_{-1,n} reduced to Delta_{0,n+1}.  Both are symmetric with
// value 1 at t = 1, i.e. already Conway-normalized.
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "corkal/errors.hpp"
#include "corkal/laurent.hpp"
#include "corkal/matrix.hpp"
#include "corkal/twobridge.hpp"

namespace corkal {

struct SeifertMatrix {
    IntMatrix v;  // 2g x 2g, det(v - v^T) = 1
};

// Bidiagonal Seifert matrix of the plumbing chain presented by an even CF:
// the i-th band carries (-1)^{i+1} e_i/2 full twists; linking of consecutive
// bands puts 1 on the superdiagonal.  The alternating sign on the diagonal
// is forced by the trefoil anchor [2,-2] together with the plus-CF fraction
// convention (see twobridge.hpp); both unit off-diagonal choices give the
// same Alexander polynomial.
inline SeifertMatrix seifert_from_cf(const EvenContinuedFraction& cf) {
    validate_cf(cf);
    const size_t n = cf.entries.size();
    IntMatrix v(n, n);
    for (size_t i = 0; i < n; ++i) {
        long long b = cf.entries[i] / 2;
        v.at(i, i) = (i % 2 == 0) ? b : -b;
        if (i + 1 < n) v.at(i, i + 1) = 1;
    }
    return {std::move(v)};
}

// Exact determinant of a matrix with Laurent polynomial entries, by
// fraction-free elimination (divisions are exact in Z[t,t^-1]).
inline LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return LaurentPoly::one();
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant of non-square matrix");
    LaurentPoly prev = LaurentPoly::one();
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return LaurentPoly();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = exact_divide(num, prev);
                if (!q) throw Error("non-exact division in fraction-free elimination");
                m[i][j] = std::move(*q);
            }
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Delta(t) = det(V - t V^T), returned as the canonical unit-normal
// representative (min exponent 0, positive top coefficient).
inline LaurentPoly alex_from_seifert(const SeifertMatrix& sm) {
    const size_t n = sm.v.rows();
    if (n == 0) return LaurentPoly::one();
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            a[r][c] = LaurentPoly::constant(sm.v.at(r, c)) - t * LaurentPoly::constant(sm.v.at(c, r));
    LaurentPoly det = laurent_det(std::move(a));
    if (det.is_zero()) throw Error("Seifert determinant vanished; invalid Seifert matrix");
    return unit_normalize(det).poly;
}

// Closed form for Delta_{m,n}, exactly as printed (symmetric, value 1 at 1).
inline LaurentPoly delta_closed(long long m, long long n) {
    if (m == -1) return delta_closed(0, n + 1);
    if (m < -1) throw UnsupportedParams("Delta_{m,n} is only defined for m >= -1");
    LaurentPoly p;
    if (m == 0) {
        p.add_term(1, n);
        p.add_term(-1, n);
        p.add_term(0, -(2 * n - 1));
        return p;
    }
    p.add_term(m + 1, n);
    p.add_term(-(m + 1), n);
    p.add_term(m, -3 * n);
    p.add_term(-m, -3 * n);
    for (long long i = -m + 1; i <= m - 1; ++i) {
        const long long sgn = ((i - m + 1) % 2 == 0) ? 1 : -1;
        p.add_term(i, Int(4 * n + 1) * sgn);
    }
    return p;
}

// The representative with p(t) = p(1/t) and p(1) = 1.
inline LaurentPoly conway_normalize(const LaurentPoly& p) {
    if (p.is_zero()) throw NotSymmetrizable();
    const auto [lo, hi] = degree_span(p);
    if ((hi - lo) % 2 != 0) throw NotSymmetrizable();
    LaurentPoly q = p.shifted(-(hi + lo) / 2);
    if (q != q.reciprocal()) throw NotSymmetrizable();
    Int at_one = evaluate_int(q, 1);
    if (at_one == 1) return q;
    if (at_one == -1) return -q;
    throw NotSymmetrizable();
}

// Pairwise unit-equivalence collisions among Delta_{m,n} over a grid.
// Empty for m_lo >= 1 (the distinctness lemma); grids touching m = 0 pick up
// the torus-row coincidences and the report must show them.
struct DistinctnessReport {
    long long m_lo = 0, m_hi = 0, n_lo = 0, n_hi = 0;
    size_t count = 0;
    // groups of parameter pairs sharing one polynomial up to units
    std::vector<std::vector<std::pair<long long, long long>>> collisions;

    bool distinct() const { return collisions.empty(); }
};

inline DistinctnessReport delta_family_distinct(long long m_lo, long long m_hi,
                                                long long n_lo, long long n_hi) {
    if (m_lo < 0) throw UnsupportedParams("distinctness grid needs m >= 0");
    if (m_hi < m_lo || n_hi < n_lo) throw UnsupportedParams("empty grid");
    DistinctnessReport rep{m_lo, m_hi, n_lo, n_hi, 0, {}};
    std::vector<std::pair<std::string, std::pair<long long, long long>>> keyed;
    for (long long m = m_lo; m <= m_hi; ++m)
        for (long long n = n_lo; n <= n_hi; ++n) {
            keyed.emplace_back(to_text(unit_normalize(delta_closed(m, n)).poly),
                               std::make_pair(m, n));
            ++rep.count;
        }
    std::sort(keyed.begin(), keyed.end());
    for (size_t i = 0; i < keyed.size();) {
        size_t j = i;
        while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
        if (j - i > 1) {
            std::vector<std::pair<long long, long long>> group;
            for (size_t k = i; k < j; ++k) group.push_back(keyed[k].second);
            std::sort(group.begin(), group.end());
            rep.collisions.push_back(std::move(group));
        }
        i = j;
    }
    std::sort(rep.collisions.begin(), rep.collisions.end());
    return rep;
}

// |Delta_{m,n}(-1)|: knot determinant of the family member.
inline Int family_determinant(long long m, long long n) {
    using boost::multiprecision::abs;
    return abs(evaluate_int(delta_closed(m, n), -1));
}

}  // namespace corkal
