#pragma once

#include "gwt/cohomology.hpp"
#include "gwt/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace gwt {

// Descendent insertion tau_a(gamma): a psi-class power and a cohomology
// class. Mixed (non-homogeneous) classes are split by linearity before
// evaluation.
struct Insertion {
    int psi_power = 0;
    SurfaceClass cls;
};

// Monomial insertion after linear splitting: psi power and codimension of a
// basis class H^codim, with any rational multiple factored out.
struct MonoInsertion {
    int a = 0;
    int codim = 0;

    friend bool operator==(const MonoInsertion& x, const MonoInsertion& y) {
        return x.a == y.a && x.codim == y.codim;
    }
    // canonical order: descending a, then descending codim
    friend bool operator<(const MonoInsertion& x, const MonoInsertion& y) {
        if (x.a != y.a) return x.a > y.a;
        return x.codim > y.codim;
    }
};

// Memoization key for a genus-zero bracket: degree plus the canonically
// sorted insertion multiset. Construction is permutation-invariant.
struct CorrelatorKey {
    int degree = 0;
    std::vector<MonoInsertion> ins; // sorted canonically

    static CorrelatorKey make(int degree, std::vector<MonoInsertion> ins);

    int points() const { return static_cast<int>(ins.size()); }
    int total_psi() const;
    int total_codim() const;

    friend bool operator==(const CorrelatorKey& x, const CorrelatorKey& y) {
        return x.degree == y.degree && x.ins == y.ins;
    }
    friend bool operator<(const CorrelatorKey& x, const CorrelatorKey& y);

    std::string str() const; // "<tau_1(H) tau_0(H^2)^3>_{0,2}"
};

// Genus-zero descendent Gromov-Witten invariants of the projective plane.
//
// Every bracket reduces deterministically:
//   1. dimension gate: sum(a_i + codim_i) must equal 3d - 1 + n, else 0;
//   2. degree 0: the bracket is a pure psi-class integral over the
//      three-pointed-or-more moduli of curves times an integral over the
//      surface, i.e. multinomial(n-3; a_1..a_n) * integral of the classes;
//   3. tau_0(1) strips by the string equation, tau_1(1) by the dilaton
//      equation, tau_0(H) by the divisor equation (the latter only when it
//      lowers complexity: remaining points stay >= 3 or no psi powers left);
//   4. brackets with psi powers and >= 3 points expand by the genus-zero
//      topological recursion relation at the canonically largest insertion;
//   5. brackets with psi powers and < 3 points bootstrap through the inverse
//      divisor equation, which adds a tau_0(H) insertion;
//   6. pure primary brackets are the classical rational-curve counts N_d.
//
// Values are memoized by CorrelatorKey; the cache allows concurrent lookups
// with at-most-once insertion per key (duplicate recomputation is harmless).
class CorrelatorEngine {
public:
    struct CacheStats {
        long long lookups = 0;
        long long hits = 0;
        long long entries = 0;
        int max_depth = 0;
    };

    // One node of the reduction tree, recorded when tracing is requested.
    struct TraceNode {
        std::string bracket;
        std::string rule;
        Rational value;
        std::vector<std::unique_ptr<TraceNode>> children;

        int depth() const;
    };

    struct TrrTerm {
        Rational coefficient;
        CorrelatorKey left;  // carries the lowered pivot
        CorrelatorKey right; // carries the two companions
    };

    explicit CorrelatorEngine(int max_depth = 512) : max_depth_(max_depth) {}

    // General entry point; splits mixed classes by linearity.
    Rational correlator(int degree, const std::vector<Insertion>& insertions,
                        TraceNode* trace = nullptr);

    // Monomial entry point.
    Rational eval(const CorrelatorKey& key, TraceNode* trace = nullptr);

    // Count of degree-d rational plane curves through 3d-1 general points,
    // by the quadratic recursion
    //   N_d = sum_{dA+dB=d} N_dA N_dB dA^2 dB (dB C(3d-4,3dA-2) - dA C(3d-4,3dA-1))
    // with N_1 = 1.
    Rational primary_point_count(int degree);

    // <tau_a(H^b)>_{0,d}; zero unless a + b = 3d.
    Rational one_point_descendent(int degree, int a, int b);

    // Independent route to N_d for d >= 2: combine the divisor equation
    //   <tau_0(H) tau_1(H) P> = d <tau_1(H) P> + <tau_0(H^2) P>,
    // P = tau_0(H^2)^{3d-2}, with a topological recursion expansion of the
    // left side whose companion pair is chosen so that no factor of full
    // degree survives. Every term then only involves degrees below d, so the
    // value re-derives N_d without consulting the closed recursion at d.
    Rational primary_point_count_via_trr(int degree);

    // Full topological recursion expansion of the key at the given pivot
    // (psi power >= 1 required, n >= 3). Companions default to the two
    // canonically first non-pivot insertions; pass explicit indices to check
    // companion independence. Terms with an unstable factor (degree 0 with
    // fewer than 3 points) are dropped. Aggregated by key pair.
    std::vector<TrrTerm> trr_expand(const CorrelatorKey& key, int pivot_index,
                                    int companion1 = -1, int companion2 = -1) const;

    CacheStats stats() const;
    void clear_cache();

private:
    Rational eval_inner(const CorrelatorKey& key, TraceNode* trace, int depth);
    Rational reduce(const CorrelatorKey& key, TraceNode* trace, int depth, std::string& rule);

    mutable std::mutex mu_;
    std::map<CorrelatorKey, Rational> memo_;
    std::vector<Rational> point_counts_{Rational(0)}; // N_d, index d; N_0 unused
    CacheStats stats_;
    int max_depth_;
};

} // namespace gwt
