// Bounded search over even continued fractions for members of the K_{m,n}
// family.  This is the derivation machinery behind the fixed pattern in
// family_cf: enumerate CFs, keep those whose Alexander polynomial matches
// the closed form up to units AND whose fraction has the right determinant,
// then confirm the pattern is the unique match up to mirrors and reversal.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "corkal/alexander.hpp"
#include "corkal/twobridge.hpp"

namespace corkal {

// det(V - tV^T) for the bidiagonal Seifert matrix of a CF, by the
// three-term continuant recursion D_k = b_k (1-t) D_{k-1} + t D_{k-2}.
// Fast path used by the search; agrees with alex_from_seifert (tested).
inline LaurentPoly delta_from_cf(const EvenContinuedFraction& cf) {
    validate_cf(cf);
    LaurentPoly prev2 = LaurentPoly::one();  // D_0
    LaurentPoly prev1 = LaurentPoly::one();
    const LaurentPoly one_minus_t = LaurentPoly::constant(1) - LaurentPoly::monomial(1, 1);
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    for (size_t i = 0; i < cf.entries.size(); ++i) {
        const long long b = (i % 2 == 0) ? cf.entries[i] / 2 : -cf.entries[i] / 2;
        LaurentPoly cur = one_minus_t * LaurentPoly::constant(b);
        cur = cur * prev1;
        if (i >= 1) cur += t * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

// Canonical key of the knot class of a fraction with mirrors identified:
// the minimum of q, q^-1, p-q, p-q^-1 mod p.
inline std::string mirror_class_key(const TwoBridgeFraction& f) {
    if (f.p == 1) return "1/0";
    Int qinv = 0;
    for (Int x = 1; x < f.p; ++x)
        if ((x * f.q) % f.p == 1) {
            qinv = x;
            break;
        }
    Int best = f.q;
    for (const Int& cand : {qinv, Int(f.p - f.q), Int(f.p - qinv)})
        if (cand < best) best = cand;
    return f.p.str() + "/" + best.str();
}

struct FamilySearchResult {
    std::vector<EvenContinuedFraction> matches;
    // matches grouped by knot class (unoriented, mirrors identified)
    std::map<std::string, std::vector<EvenContinuedFraction>> classes;

    bool unique_up_to_mirror() const { return classes.size() <= 1; }
};

// Enumerates even CFs of even length <= max_len with entries in
// [-entry_bound, entry_bound] and keeps those matching delta_closed(m, n) up
// to units with the right determinant.  Defaults follow the derivation
// recipe: max_len = 2(m+2), entry_bound = 2|n| + 4.
inline FamilySearchResult family_cf_search(long long m, long long n, long long max_len = -1,
                                           long long entry_bound = -1) {
    if (m < 0) throw UnsupportedParams("search expects reduced parameters m >= 0");
    if (max_len < 0) max_len = 2 * (m + 2);
    if (entry_bound < 0) entry_bound = 2 * (n < 0 ? -n : n) + 4;

    const LaurentPoly target = delta_closed(m, n);
    const LaurentPoly target_key = target.is_zero() ? target : unit_normalize(target).poly;
    const Int det = family_determinant(m, n);

    FamilySearchResult res;
    if (det == 1) {  // unknot: only the empty CF qualifies at genus 0
        res.matches.push_back({});
        res.classes["1/0"].push_back({});
    }

    std::vector<long long> entries;
    for (long long e = -entry_bound; e <= entry_bound; e += 2)
        if (e != 0) entries.push_back(e);

    EvenContinuedFraction cf;
    auto emit = [&]() {
        const auto frac = fraction_from_cf(cf);
        if (frac.p != det) return;
        const LaurentPoly d = delta_from_cf(cf);
        if (d.is_zero() || unit_normalize(d).poly != target_key) return;
        res.matches.push_back(cf);
        res.classes[mirror_class_key(frac)].push_back(cf);
    };
    // depth-first over all entry sequences, emitting at even lengths
    auto dfs = [&](auto&& self, long long remaining) -> void {
        if (cf.entries.size() % 2 == 0 && !cf.entries.empty()) emit();
        if (remaining == 0) return;
        for (long long e : entries) {
            cf.entries.push_back(e);
            self(self, remaining - 1);
            cf.entries.pop_back();
        }
    };
    dfs(dfs, max_len);
    return res;
}

}  // namespace corkal
