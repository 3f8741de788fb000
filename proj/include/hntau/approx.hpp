#pragma once

// Minimal left approximations by an additive subcategory add(G) where every
// generator is a brick and distinct generators are non-isomorphic. The
// multiplicity of G_j in the minimal target is the codimension of the
// radical composites inside Hom(M, G_j); minimality is then certified by
// checking that every endomorphism psi of the target with psi*f = 0 has
// vanishing diagonal blocks (the linear form of the Fitting-lemma
// invertibility criterion).

#include "rep.hpp"

#include <stdexcept>
#include <vector>

namespace hntau {

struct ApproxPlan {
    std::vector<int> mult;                             // per generator
    std::vector<std::vector<std::vector<Rat>>> comps;  // comps[j][t]: coords in Hom(M,G_j) basis
};

// dim_hom[j] = dim Hom(M, G_j); radical_image[j] has dim_hom[j] rows and one
// column per composite (radical map into G_j) after (any map M -> G_k).
inline ApproxPlan plan_left_approximation(const std::vector<int>& dim_hom,
                                          const std::vector<QMat>& radical_image) {
    ApproxPlan plan;
    const size_t nG = dim_hom.size();
    plan.mult.resize(nG, 0);
    plan.comps.resize(nG);
    for (size_t j = 0; j < nG; ++j) {
        if (dim_hom[j] == 0) continue;
        QMat rad = radical_image[j].columns(radical_image[j].independent_columns());
        plan.mult[j] = dim_hom[j] - rad.cols();
        if (plan.mult[j] == 0) continue;
        QMat full = complete_basis(rad, dim_hom[j]);
        for (int c = rad.cols(); c < full.cols(); ++c) {
            std::vector<Rat> coeffs(static_cast<size_t>(dim_hom[j]));
            for (int i = 0; i < dim_hom[j]; ++i) coeffs[static_cast<size_t>(i)] = full(i, c);
            plan.comps[j].push_back(coeffs);
        }
    }
    return plan;
}

struct LeftApproximation {
    std::vector<Tuple> target_summands;  // generator labels with multiplicity
    QuiverRep target;
    RepMap map;  // M -> target
};

inline LeftApproximation minimal_left_approximation(
    const QuiverRep& M, const std::vector<std::pair<Tuple, QuiverRep>>& generators) {
    const Algebra& alg = *M.alg;
    const size_t nG = generators.size();

    std::vector<std::vector<RepMap>> homMG(nG);
    std::vector<int> dim_hom(nG, 0);
    for (size_t j = 0; j < nG; ++j) {
        homMG[j] = hom_basis(M, generators[j].second);
        dim_hom[j] = static_cast<int>(homMG[j].size());
    }
    std::vector<QMat> radical_image(nG);
    for (size_t j = 0; j < nG; ++j) {
        std::vector<std::vector<Rat>> cols;
        for (size_t k = 0; k < nG; ++k) {
            if (k == j || homMG[k].empty()) continue;
            for (const RepMap& h : hom_basis(generators[k].second, generators[j].second))
                for (const RepMap& g : homMG[k]) {
                    auto coord = express_in_span(homMG[j], compose(h, g));
                    if (!coord)
                        throw std::logic_error("minimal_left_approximation: composite outside Hom basis");
                    cols.push_back(*coord);
                }
        }
        QMat m(dim_hom[j], static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (int i = 0; i < dim_hom[j]; ++i) m(i, static_cast<int>(c)) = cols[c][static_cast<size_t>(i)];
        radical_image[j] = m;
    }
    ApproxPlan plan = plan_left_approximation(dim_hom, radical_image);

    LeftApproximation out;
    std::vector<const QuiverRep*> parts;
    std::vector<size_t> part_class;
    std::vector<RepMap> part_maps;
    for (size_t j = 0; j < nG; ++j)
        for (int t = 0; t < plan.mult[j]; ++t) {
            out.target_summands.push_back(generators[j].first);
            parts.push_back(&generators[j].second);
            part_class.push_back(j);
            RepMap comp = zero_map(M, generators[j].second);
            for (int i = 0; i < dim_hom[j]; ++i) {
                const Rat& c = plan.comps[j][static_cast<size_t>(t)][static_cast<size_t>(i)];
                if (c != 0) comp = map_add(comp, map_scale(homMG[j][static_cast<size_t>(i)], c));
            }
            part_maps.push_back(comp);
        }
    DirectSum ds = direct_sum(alg, parts);
    out.target = ds.rep;
    out.map = zero_map(M, out.target);
    for (size_t p = 0; p < parts.size(); ++p)
        out.map = map_add(out.map, compose(ds.incl[p], part_maps[p]));

    // Minimality certificate: every psi with psi*f = 0 has zero diagonal blocks.
    std::vector<RepMap> endos = hom_basis(out.target, out.target);
    if (!endos.empty()) {
        QMat sys(static_cast<int>(flatten_map(out.map).size()), static_cast<int>(endos.size()));
        for (size_t k = 0; k < endos.size(); ++k) {
            std::vector<Rat> col = flatten_map(compose(endos[k], out.map));
            for (size_t i = 0; i < col.size(); ++i) sys(static_cast<int>(i), static_cast<int>(k)) = col[i];
        }
        QMat annih = sys.nullspace();
        for (int c = 0; c < annih.cols(); ++c) {
            RepMap psi = zero_map(out.target, out.target);
            for (size_t k = 0; k < endos.size(); ++k)
                if (annih(static_cast<int>(k), c) != 0)
                    psi = map_add(psi, map_scale(endos[k], annih(static_cast<int>(k), c)));
            for (size_t p = 0; p < parts.size(); ++p)
                for (size_t q = 0; q < parts.size(); ++q) {
                    if (part_class[p] != part_class[q]) continue;
                    RepMap block = compose(ds.proj[p], compose(psi, ds.incl[q]));
                    if (!map_is_zero(block))
                        throw std::logic_error(
                            "minimal_left_approximation: minimality certificate failed");
                }
        }
    }
    return out;
}

// Fac membership: M lies in Fac(add G) iff the trace of G in M is all of M
// (equivalently, the minimal right add(G)-approximation is surjective).
inline bool covered_by(const std::vector<const QuiverRep*>& G, const QuiverRep& M) {
    return trace_subrep(G, M).rep.total_dim() == M.total_dim();
}

// Iterated minimal left add(G)-coresolution of W:
//   W -g1-> E_1 -> E_2 -> ... with E_{i+1} the minimal left approximation of
// coker(g_i). Stops when a cokernel vanishes or max_steps terms were built.
struct Coresolution {
    std::vector<std::vector<Tuple>> terms;  // summand labels of E_1, E_2, ...
    std::vector<QuiverRep> term_reps;
    RepMap aug;                 // g_1 : W -> E_1 (empty when W = 0)
    std::vector<RepMap> conn;   // E_i -> E_{i+1}
    bool exact_end = false;     // final cokernel vanished within max_steps
};

inline Coresolution left_coresolution(const QuiverRep& W,
                                      const std::vector<std::pair<Tuple, QuiverRep>>& generators,
                                      int max_steps) {
    Coresolution out;
    QuiverRep cur = W;
    RepMap prev_proj;  // previous target -> its cokernel
    for (int step = 0; step < max_steps; ++step) {
        if (cur.total_dim() == 0) {
            out.exact_end = true;
            return out;
        }
        LeftApproximation ap = minimal_left_approximation(cur, generators);
        if (step == 0)
            out.aug = ap.map;
        else
            out.conn.push_back(compose(ap.map, prev_proj));
        Factorization fac = factorize(cur, ap.target, ap.map);
        prev_proj = fac.coker_proj;
        cur = fac.cokernel;
        out.terms.push_back(std::move(ap.target_summands));
        out.term_reps.push_back(std::move(ap.target));
    }
    out.exact_end = cur.total_dim() == 0;
    return out;
}

// The d-cokernel of a map f : A -> B between members of the d-cluster
// tilting subcategory: the terms C^1..C^d completing A -> B -> C^1 -> ... ->
// C^d -> 0 to a right d-exact sequence, built by iterated minimal left
// M-approximations of cokernels. Throws when the sequence does not close
// after d steps.
struct DCokernel {
    std::vector<std::vector<Tuple>> terms;  // summands of C^1..C^d (trailing terms may be empty)
    std::vector<QuiverRep> term_reps;
    RepMap from_B;              // B -> C^1 (empty when coker f = 0)
    std::vector<RepMap> conn;   // C^i -> C^{i+1}
};

inline DCokernel d_cokernel(const QuiverRep& A, const QuiverRep& B, const RepMap& f,
                            const std::vector<std::pair<Tuple, QuiverRep>>& generators) {
    const Algebra& alg = *A.alg;
    Factorization fac = factorize(A, B, f);
    Coresolution cores = left_coresolution(fac.cokernel, generators, alg.d());
    if (!cores.exact_end)
        throw std::logic_error("d_cokernel: right d-exact sequence does not close in d steps");
    DCokernel out;
    out.terms = cores.terms;
    out.term_reps = cores.term_reps;
    out.conn = cores.conn;
    if (!cores.terms.empty()) out.from_B = compose(cores.aug, fac.coker_proj);
    while (out.terms.size() < static_cast<size_t>(alg.d())) {
        out.terms.emplace_back();
        out.term_reps.push_back(zero_rep(alg));
    }
    return out;
}

}  // namespace hntau
