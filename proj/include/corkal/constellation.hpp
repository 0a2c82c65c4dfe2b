// Formal Seiberg-Witten products for E(k) knot-surgeries and the tuple
// recovery behind Z^k-effectiveness: the product of family Alexander
// polynomials prod_{i=1..k} Delta_{i,n_i} determines (n_1,...,n_k).
//
// The common factor SW_{E(k)} is carried as an opaque tag and never
// expanded: distinguishability of two surgeries reduces to unit-equivalence
// of the Delta products.
#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corkal/alexander.hpp"
#include "corkal/errors.hpp"
#include "corkal/laurent.hpp"
#include "corkal/parallel.hpp"

namespace corkal {

struct ConstellationSignature {
    int k = 1;
    std::vector<long long> tuple;
    LaurentPoly product;        // prod Delta_{i,n_i}, symmetric with value 1 at t=1
    std::string common_factor;  // opaque, e.g. "SW_E(2)"
};

inline ConstellationSignature sw_product(int k, std::span<const long long> tuple) {
    if (k < 1) throw UnsupportedParams("sw_product needs k >= 1");
    if (tuple.size() != static_cast<size_t>(k)) throw UnsupportedParams("tuple length must equal k");
    ConstellationSignature sig;
    sig.k = k;
    sig.tuple.assign(tuple.begin(), tuple.end());
    sig.product = LaurentPoly::one();
    for (int i = 1; i <= k; ++i) sig.product = sig.product * delta_closed(i, tuple[i - 1]);
    sig.common_factor = "SW_E(" + std::to_string(k) + ")";
    return sig;
}

inline ConstellationSignature sw_product(int k, std::initializer_list<long long> tuple) {
    return sw_product(k, std::span<const long long>(tuple.begin(), tuple.size()));
}

// Surgeries with different products are distinguishable; by the injectivity
// theorem this must coincide with tuple inequality.
inline bool distinguishable(const ConstellationSignature& a, const ConstellationSignature& b) {
    if (a.k != b.k) throw KMismatch();
    return !doteq(a.product, b.product);
}

// ---------------------------------------------------------------------------
// Tuple recovery
// ---------------------------------------------------------------------------

struct RecoverResult {
    enum Status { Found, NoSolution, Ambiguous };
    Status status = NoSolution;
    std::vector<long long> tuple;            // when Found or Ambiguous (first witness)
    std::vector<long long> second_witness;   // when Ambiguous
};

namespace detail {

// degree-span width of Delta_{i,n}
inline long long delta_width(long long i, long long n) {
    return n != 0 ? 2 * (i + 1) : 2 * (i - 1);
}

struct RecoverSearch {
    int k;
    long long bound;
    LaurentPoly target;  // unit-normalized
    long long target_width;
    Int target_top_abs;
    std::vector<long long> current;
    std::vector<LaurentPoly> partial;  // partial[i] = product of first i factors
    std::vector<long long> min_rest, max_rest;
    std::vector<std::vector<long long>>* hits;
    size_t hit_cap;

    void run() {
        partial.assign(1, LaurentPoly::one());
        current.clear();
        dfs(1, 0, Int(1));
    }

    void dfs(int i, long long width_so_far, const Int& top_so_far) {
        if (hits->size() >= hit_cap) return;
        if (i > k) {
            if (doteq(partial.back(), target)) hits->push_back(current);
            return;
        }
        for (long long n = -bound; n <= bound; ++n) {
            const long long w = width_so_far + delta_width(i, n);
            if (w + min_rest[i + 1] > target_width || w + max_rest[i + 1] < target_width)
                continue;
            Int top = top_so_far;
            if (n != 0) {
                top *= n < 0 ? -n : n;
                if (top == 0 || target_top_abs % top != 0) continue;
            }
            current.push_back(n);
            partial.push_back(partial.back() * delta_closed(i, n));
            dfs(i + 1, w, top);
            partial.pop_back();
            current.pop_back();
        }
    }
};

}  // namespace detail

// Exhaustive search over [-bound, bound]^k for tuples whose product matches
// `product` up to units.  Pruned by degree-span additivity and by
// divisibility of the top coefficient (the product of the nonzero n_i).
// Two matches yield Ambiguous with both witnesses; this would contradict
// the injectivity claim and is surfaced, never resolved silently.
inline RecoverResult recover_tuple(int k, const LaurentPoly& product, long long bound) {
    if (k < 1) throw UnsupportedParams("recover_tuple needs k >= 1");
    if (bound < 0) throw UnsupportedParams("recover_tuple needs bound >= 0");
    RecoverResult res;
    if (product.is_zero()) return res;  // products of Deltas are never zero

    detail::RecoverSearch s;
    s.k = k;
    s.bound = bound;
    const auto unf = unit_normalize(product);
    s.target = unf.poly;
    s.target_width = s.target.max_exp();
    s.target_top_abs = boost::multiprecision::abs(s.target.leading_coeff());
    s.min_rest.assign(k + 2, 0);
    s.max_rest.assign(k + 2, 0);
    for (int i = k; i >= 1; --i) {
        // width over the box: n = 0 gives 2(i-1), any n != 0 gives 2(i+1)
        const long long wmin = detail::delta_width(i, 0);
        const long long wmax = bound >= 1 ? detail::delta_width(i, 1) : wmin;
        s.min_rest[i] = s.min_rest[i + 1] + std::min(wmin, wmax);
        s.max_rest[i] = s.max_rest[i + 1] + std::max(wmin, wmax);
    }
    std::vector<std::vector<long long>> hits;
    s.hits = &hits;
    s.hit_cap = 2;
    s.run();

    if (hits.empty()) return res;
    if (hits.size() == 1) {
        res.status = RecoverResult::Found;
        res.tuple = hits[0];
        return res;
    }
    res.status = RecoverResult::Ambiguous;
    res.tuple = hits[0];
    res.second_witness = hits[1];
    return res;
}

// ---------------------------------------------------------------------------
// Symmetric-function validator (the generic branch of the recovery claim)
// ---------------------------------------------------------------------------

// Values read off the top coefficients of prod_{i=p+1..k} Delta_{i,n_i} when
// every n_i in the block is nonzero:
//   sigma[j] = sigma_{k-p-j}, the (k-p-j)-th elementary symmetric polynomial
//              of (n_{p+1},...,n_k), for j = 0..min(p+1, k-p-1);
//   trailing_product = n_{p+2} * ... * n_k;
//   first_parameter  = n_{p+1}.
struct SymmetricFunctionTrace {
    int k = 0;
    int p = 0;
    std::vector<Int> sigma;
    Int trailing_product = 1;
    Int first_parameter = 0;
};

namespace detail {

// [u^order] of (1-u)^(2a) * (1+u)^(-r), exact
inline Int top_series_weight(long long a, long long r, long long order) {
    // (1+u)^(-r) = sum_m (-1)^m C(r+m-1, m) u^m
    std::vector<Int> inv(order + 1);
    inv[0] = 1;
    for (long long mm = 1; mm <= order; ++mm)
        inv[mm] = -inv[mm - 1] * (r + mm - 1) / mm;
    Int tot = 0;
    Int binom = 1;  // C(2a, j)
    for (long long j = 0; j <= order && j <= 2 * a; ++j) {
        Int term = (j % 2 == 0) ? binom : Int(-binom);
        tot += term * inv[order - j];
        binom = binom * (2 * a - j) / (j + 1);
    }
    return tot;
}

}  // namespace detail

// Each factor of the block expands as t^{i+1} (n_i - 3 n_i u + (4n_i+1)u^2/(1+u))
// in u = 1/t, valid above the factor's bottom region, so the product's top
// coefficients are those of
//     G(u) = prod_i (n_i (1-u)^2 + u^2) / (1+u)^{k-p}
//          = sum_a sigma_a (1-u)^{2a} u^{2(r-a)} / (1+u)^r.
// Reading the coefficients at degree d-2j for j = 0..p+1 gives a triangular
// system for sigma_r, sigma_{r-1}, ...; the first deviation of the actual
// coefficient from G(u) sits at degree d-2p-3 and equals
// (n_{p+1}+1) * n_{p+2}...n_k, which pins the trailing product and hence
// n_{p+1} = sigma_r / (n_{p+2}...n_k).
inline SymmetricFunctionTrace sigma_extract(int k, int p, const LaurentPoly& product) {
    if (k < 1 || p < 0 || p >= k) throw UnsupportedParams("sigma_extract needs 0 <= p < k");
    if (product.is_zero()) throw GenericityFailure("zero product");
    const long long r = k - p;
    long long expected_top = 0;
    for (long long i = p + 1; i <= k; ++i) expected_top += i + 1;
    const long long d = product.max_exp();
    if (d != expected_top)
        throw GenericityFailure("top degree " + std::to_string(d) + " does not match " +
                                std::to_string(expected_top) + "; some parameter must be zero");

    SymmetricFunctionTrace tr;
    tr.k = k;
    tr.p = p;
    // sigma_a indexed a = 0..r, sigma_0 = 1
    std::vector<Int> sig(r + 1);
    sig[0] = 1;
    const long long jmax = std::min<long long>(p + 1, r - 1);
    for (long long j = 0; j <= jmax; ++j) {
        Int acc = 0;
        for (long long a = r - j + 1; a <= r; ++a)
            acc += sig[a] * detail::top_series_weight(a, r, 2 * (j - r + a));
        sig[r - j] = product.coeff(d - 2 * j) - acc;  // own weight is 1
        tr.sigma.push_back(sig[r - j]);
    }

    if (r == 1) {
        tr.trailing_product = 1;
        tr.first_parameter = sig[1];
        return tr;
    }
    // [u^{2p+3}] G needs sigma_a for a >= r-p-1, all recovered above
    Int g = 0;
    const long long order = 2 * p + 3;
    for (long long a = 0; a <= r; ++a) {
        const long long shift = 2 * (r - a);
        if (shift > order) continue;
        g += sig[a] * detail::top_series_weight(a, r, order - shift);
    }
    const Int correction = product.coeff(d - order) - g;  // = (n_{p+1}+1) * trailing
    tr.trailing_product = correction - sig[r];
    if (tr.trailing_product == 0)
        throw GenericityFailure("trailing product vanished; some parameter must be zero");
    if (sig[r] % tr.trailing_product != 0)
        throw GenericityFailure("leading symmetric value not divisible by trailing product");
    tr.first_parameter = sig[r] / tr.trailing_product;
    return tr;
}

// ---------------------------------------------------------------------------
// Injectivity over a box
// ---------------------------------------------------------------------------

struct InjectivityReport {
    int k = 1;
    long long bound = 0;
    size_t count = 0;  // tuples examined
    // groups of distinct tuples sharing one product up to units (expected none)
    std::vector<std::vector<std::vector<long long>>> collisions;

    bool injective() const { return collisions.empty(); }
};

inline constexpr size_t kDefaultInjectivityBudget = 2'000'000;

// Computes every product over [-bound, bound]^k and groups tuples by the
// canonical form of the product.  Deterministic output: groups and their
// members are sorted before reporting.
inline InjectivityReport verify_injectivity(int k, long long bound, unsigned jobs = 0,
                                            size_t budget = kDefaultInjectivityBudget) {
    if (k < 1) throw UnsupportedParams("verify_injectivity needs k >= 1");
    if (bound < 0) throw UnsupportedParams("verify_injectivity needs bound >= 0");
    const size_t side = static_cast<size_t>(2 * bound + 1);
    size_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > budget / side + 1) throw BudgetExceeded("injectivity box too large");
        total *= side;
    }
    if (static_cast<size_t>(k) * total > budget)
        throw BudgetExceeded("injectivity box exceeds configured budget");

    auto decode = [&](size_t idx) {
        std::vector<long long> tuple(k);
        for (int i = 0; i < k; ++i) {
            tuple[i] = static_cast<long long>(idx % side) - bound;
            idx /= side;
        }
        return tuple;
    };

    std::map<std::string, std::vector<std::vector<long long>>> groups;
    std::mutex merge_mutex;
    parallel_chunks(total, jobs, [&](size_t begin, size_t end) {
        std::vector<std::pair<std::string, std::vector<long long>>> local;
        local.reserve(end - begin);
        for (size_t idx = begin; idx < end; ++idx) {
            auto tuple = decode(idx);
            auto sig = sw_product(k, std::span<const long long>(tuple));
            local.emplace_back(to_text(unit_normalize(sig.product).poly), std::move(tuple));
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (auto& [key, tuple] : local) groups[key].push_back(std::move(tuple));
    });

    InjectivityReport rep;
    rep.k = k;
    rep.bound = bound;
    rep.count = total;
    for (auto& [key, members] : groups)
        if (members.size() > 1) {
            std::sort(members.begin(), members.end());
            rep.collisions.push_back(std::move(members));
        }
    std::sort(rep.collisions.begin(), rep.collisions.end());
    return rep;
}

}  // namespace corkal
