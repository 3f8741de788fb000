#pragma once

// From a d-torsion class to its maximal tau_d-rigid pair: the combinatorial
// Ext^d-projective / support-projective sets, rigidity and maximality
// certificates, minimal U-coresolutions as an independent oracle,
// Fac-intersection, weak d-APR tilting modules, and slices.

#include "approx.hpp"
#include "torsion.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hntau {

// I_1: members x that are projective or admit no member y with y ~> tau_d(x).
inline std::vector<Tuple> ext_d_projective_set(const Algebra& alg,
                                               const std::vector<Tuple>& I) {
    std::vector<Tuple> out;
    for (const Tuple& x : I) {
        if (alg.is_projective(x)) {
            out.push_back(x);
            continue;
        }
        Tuple t = Algebra::shifted(x, -1);
        bool hit = false;
        for (const Tuple& y : I)
            if (Algebra::leads_to(y, t)) { hit = true; break; }
        if (!hit) out.push_back(x);
    }
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

// I_2: projectives outside I with no relation into any member.
inline std::vector<Tuple> support_projective_set(const Algebra& alg,
                                                 const std::vector<Tuple>& I) {
    std::vector<char> in(alg.indecs().size(), 0);
    for (const Tuple& t : I) in[static_cast<size_t>(alg.indec_index(t))] = 1;
    std::vector<Tuple> out;
    for (const Tuple& x : alg.indecs()) {
        if (!alg.is_projective(x) || in[static_cast<size_t>(alg.indec_index(x))]) continue;
        bool hit = false;
        for (const Tuple& y : I)
            if (Algebra::leads_to(x, y)) { hit = true; break; }
        if (!hit) out.push_back(x);
    }
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

struct TauRigidPair {
    std::vector<Tuple> module_part;  // sorted (colex)
    std::vector<Tuple> proj_part;    // sorted (colex), projective tuples
};

// Combinatorial rigidity: no m ~> tau_d(m') among module members (skipping
// projective m'), and no p ~> m.
inline bool is_rigid_pair(const Algebra& alg, const std::vector<Tuple>& module_part,
                          const std::vector<Tuple>& proj_part) {
    for (const Tuple& m : module_part)
        for (const Tuple& mp : module_part) {
            if (alg.is_projective(mp)) continue;
            if (Algebra::leads_to(m, Algebra::shifted(mp, -1))) return false;
        }
    for (const Tuple& p : proj_part)
        for (const Tuple& m : module_part)
            if (Algebra::leads_to(p, m)) return false;
    return true;
}

inline TauRigidPair pair_of(const Algebra& alg, const std::vector<Tuple>& I) {
    TauRigidPair pair{ext_d_projective_set(alg, I), support_projective_set(alg, I)};
    if (!is_rigid_pair(alg, pair.module_part, pair.proj_part))
        throw std::logic_error("pair_of: produced pair is not tau_d-rigid");
    if (pair.module_part.size() + pair.proj_part.size() != alg.vertices().size())
        throw std::logic_error("pair_of: |M_U| + |P_U| != |A|");
    return pair;
}

struct MaximalityResult {
    bool ok = true;
    std::string reason;  // which biconditional failed
    Tuple witness;       // offending N or Q
};

// Exhaustive evaluation of the maximality definition: (i) over every
// indecomposable N of the d-cluster tilting subcategory, (ii) over every
// indecomposable projective Q.
inline MaximalityResult is_maximal_pair(const Algebra& alg,
                                        const std::vector<Tuple>& module_part,
                                        const std::vector<Tuple>& proj_part) {
    auto in = [](const std::vector<Tuple>& set, const Tuple& t) {
        for (const Tuple& s : set)
            if (s == t) return true;
        return false;
    };
    for (const Tuple& N : alg.indecs()) {
        bool rhs = true;
        if (!alg.is_projective(N)) {
            Tuple tN = Algebra::shifted(N, -1);
            for (const Tuple& m : module_part)
                if (Algebra::leads_to(m, tN)) rhs = false;
        }
        for (const Tuple& m : module_part) {
            if (alg.is_projective(m)) continue;
            if (Algebra::leads_to(N, Algebra::shifted(m, -1))) rhs = false;
        }
        for (const Tuple& p : proj_part)
            if (Algebra::leads_to(p, N)) rhs = false;
        if (rhs != in(module_part, N))
            return MaximalityResult{false, "condition (i) fails", N};
    }
    for (const Tuple& Q : alg.indecs()) {
        if (!alg.is_projective(Q)) continue;
        bool rhs = true;
        for (const Tuple& m : module_part)
            if (Algebra::leads_to(Q, m)) rhs = false;
        if (rhs != in(proj_part, Q))
            return MaximalityResult{false, "condition (ii) fails", Q};
    }
    return MaximalityResult{};
}

struct ResolutionTooLongError : std::runtime_error {
    explicit ResolutionTooLongError(const std::string& w) : std::runtime_error(w) {}
};

inline int map_rank(const RepMap& f) {
    int r = 0;
    for (const QMat& m : f) r += m.rank();
    return r;
}

struct CoresolveResult {
    std::vector<std::vector<Tuple>> terms;  // U_0, U_1, ... (at most d+1)
    std::vector<QuiverRep> term_reps;
    RepMap aug;                // M -> U_0 (minimal left U-approximation)
    std::vector<RepMap> conn;  // U_i -> U_{i+1}
    QuiverRep kernel;          // of the first map
};

// Minimal U-coresolution M -> U_0 -> ... -> U_k -> 0 (k <= d) by iterated
// minimal left approximations of cokernels, with exactness certified by
// composite-vanishing and rank bookkeeping.
inline CoresolveResult coresolve(const QuiverRep& M, const Algebra& alg,
                                 const std::vector<Tuple>& I) {
    std::vector<std::pair<Tuple, QuiverRep>> gens;
    gens.reserve(I.size());
    for (const Tuple& x : I) gens.emplace_back(x, realize_module(alg, x));
    Coresolution cores = left_coresolution(M, gens, alg.d() + 1);
    if (!cores.exact_end)
        throw ResolutionTooLongError("coresolve: coresolution does not terminate in d+1 steps");
    CoresolveResult out;
    out.terms = std::move(cores.terms);
    out.term_reps = std::move(cores.term_reps);
    out.aug = std::move(cores.aug);
    out.conn = std::move(cores.conn);
    if (out.terms.empty()) {
        out.kernel = M;  // M -> 0, kernel is all of M (only for M = 0)
        return out;
    }
    Factorization f0 = factorize(M, out.term_reps[0], out.aug);
    out.kernel = f0.kernel;
    // Exactness certificates at every inner term.
    for (size_t i = 0; i < out.conn.size(); ++i) {
        const RepMap& in_map = i == 0 ? out.aug : out.conn[i - 1];
        if (!map_is_zero(compose(out.conn[i], in_map)))
            throw std::logic_error("coresolve: consecutive maps do not compose to zero");
        if (map_rank(in_map) + map_rank(out.conn[i]) != out.term_reps[i].total_dim())
            throw std::logic_error("coresolve: sequence not exact at an inner term");
    }
    // Exactness at the last term: the final map (or the first, if only one
    // term) must be surjective onto it.
    const RepMap& last = out.conn.empty() ? out.aug : out.conn.back();
    if (map_rank(last) != out.term_reps.back().total_dim())
        throw std::logic_error("coresolve: last map not surjective");
    return out;
}

// Fac(add M) intersected with the d-cluster tilting subcategory, membership
// via trace surjectivity in the rep backend.
inline std::vector<Tuple> fac_intersect(const Algebra& alg,
                                        const std::vector<Tuple>& module_part) {
    std::vector<QuiverRep> reps;
    std::vector<const QuiverRep*> ptrs;
    reps.reserve(module_part.size());
    for (const Tuple& m : module_part) reps.push_back(realize_module(alg, m));
    for (const QuiverRep& r : reps) ptrs.push_back(&r);
    std::vector<Tuple> out;
    for (const Tuple& y : alg.indecs())
        if (covered_by(ptrs, realize_module(alg, y))) out.push_back(y);
    return out;
}

struct NotSimpleProjectiveError : std::runtime_error {
    explicit NotSimpleProjectiveError(const std::string& w) : std::runtime_error(w) {}
};
struct IsInjectiveError : std::runtime_error {
    explicit IsInjectiveError(const std::string& w) : std::runtime_error(w) {}
};

// Weak d-APR tilting module at a simple projective P: tau_d^{-1}(P) together
// with the remaining indecomposable projectives.
inline std::vector<Tuple> weak_d_APR(const Algebra& alg, const Tuple& P) {
    if (!alg.in_os(P) || !alg.is_projective(P) || alg.support(P).size() != 1)
        throw NotSimpleProjectiveError("weak_d_APR: " + tuple_to_string(P) +
                                       " is not a simple projective");
    auto ti = alg.tau_inverse(P);
    if (!ti) throw IsInjectiveError("weak_d_APR: " + tuple_to_string(P) + " is injective");
    std::vector<Tuple> out;
    out.push_back(*ti);
    for (const Tuple& x : alg.indecs())
        if (alg.is_projective(x) && x != P) out.push_back(x);
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

namespace detail {

// reach[i][j]: a path of nonzero maps between distinct indecomposables leads
// from indec i to indec j (transitive closure of the leads-to relation with
// the diagonal removed).
inline std::vector<std::vector<char>> reachability(const Algebra& alg) {
    const auto& xs = alg.indecs();
    const size_t m = xs.size();
    std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (i != j && Algebra::leads_to(xs[i], xs[j])) reach[i][j] = 1;
    for (size_t k = 0; k < m; ++k)
        for (size_t i = 0; i < m; ++i)
            if (reach[i][k])
                for (size_t j = 0; j < m; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    return reach;
}

}  // namespace detail

// Slice test: (1) every injective has a nonzero tau_d-power in S; (2) for
// non-projective x, at most one of x and tau_d(x) is in S; (3) any path
// starting and ending in S stays in S.
inline bool is_slice(const Algebra& alg, const std::vector<Tuple>& S) {
    const auto& xs = alg.indecs();
    std::vector<char> in(xs.size(), 0);
    for (const Tuple& t : S) {
        int i = alg.indec_index(t);
        if (i < 0) throw std::invalid_argument("is_slice: tuple outside os_l^{d+1}");
        in[static_cast<size_t>(i)] = 1;
    }
    for (const Tuple& x : xs) {
        if (!alg.is_injective(x)) continue;
        bool hit = false;
        Tuple cur = x;
        while (true) {
            if (in[static_cast<size_t>(alg.indec_index(cur))]) { hit = true; break; }
            auto t = alg.tau(cur);
            if (!t) break;
            cur = *t;
        }
        if (!hit) return false;
    }
    for (const Tuple& x : xs) {
        if (alg.is_projective(x)) continue;
        Tuple t = Algebra::shifted(x, -1);
        int ti = alg.indec_index(t);
        if (ti >= 0 && in[static_cast<size_t>(alg.indec_index(x))] &&
            in[static_cast<size_t>(ti)])
            return false;
    }
    auto reach = detail::reachability(alg);
    for (size_t y = 0; y < xs.size(); ++y) {
        if (in[y]) continue;
        bool from_S = false, to_S = false;
        for (size_t s = 0; s < xs.size(); ++s) {
            if (!in[s]) continue;
            if (reach[s][y]) from_S = true;
            if (reach[y][s]) to_S = true;
        }
        if (from_S && to_S) return false;
    }
    return true;
}

// Brute-force slice enumeration over all subsets, feasible while the number
// of indecomposables stays small.
inline std::vector<std::vector<Tuple>> enumerate_slices(const Algebra& alg) {
    const auto& xs = alg.indecs();
    const size_t m = xs.size();
    if (m > 24)
        throw std::invalid_argument("enumerate_slices: too many indecomposables; "
                                    "pass an explicit candidate to is_slice instead");
    // Bitmask data for the three conditions.
    std::vector<uint32_t> orbit_masks;  // per injective: its tau_d-orbit
    for (const Tuple& x : xs) {
        if (!alg.is_injective(x)) continue;
        uint32_t mask = 0;
        Tuple cur = x;
        while (true) {
            mask |= 1u << alg.indec_index(cur);
            auto t = alg.tau(cur);
            if (!t) break;
            cur = *t;
        }
        orbit_masks.push_back(mask);
    }
    std::vector<uint32_t> pair_masks;  // per non-projective: {x, tau x}
    for (const Tuple& x : xs) {
        if (alg.is_projective(x)) continue;
        int ti = alg.indec_index(Algebra::shifted(x, -1));
        if (ti >= 0)
            pair_masks.push_back((1u << alg.indec_index(x)) | (1u << ti));
    }
    auto reach = detail::reachability(alg);
    std::vector<uint32_t> reach_to(m, 0), reach_from(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (reach[i][j]) {
                reach_to[i] |= 1u << j;
                reach_from[j] |= 1u << i;
            }
    std::vector<std::vector<Tuple>> out;
    for (uint32_t S = 0; S < (1u << m); ++S) {
        bool ok = true;
        for (uint32_t om : orbit_masks)
            if (!(S & om)) { ok = false; break; }
        if (!ok) continue;
        for (uint32_t pm : pair_masks)
            if (__builtin_popcount(S & pm) > 1) { ok = false; break; }
        if (!ok) continue;
        uint32_t fwd = 0, bwd = 0;
        for (size_t i = 0; i < m; ++i)
            if (S & (1u << i)) {
                fwd |= reach_to[i];
                bwd |= reach_from[i];
            }
        if (fwd & bwd & ~S) continue;
        std::vector<Tuple> slice;
        for (size_t i = 0; i < m; ++i)
            if (S & (1u << i)) slice.push_back(xs[i]);
        out.push_back(std::move(slice));
    }
    return out;
}

}  // namespace hntau
