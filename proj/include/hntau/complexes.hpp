#pragma once

// (d+1)-term complexes of projectives: minimal d-presentations, assembly
// from a tau_d-rigid pair, Hom in the homotopy category, presilting checks,
// and the silting generation witness built by minimal left approximations in
// the chain-map category with contractible complexes as extra generators.

#include "tau_tilting.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hntau {

// A complex concentrated in degrees -d..0; index k stores degree k - d.
// Differentials raise the degree: diffs[k] : reps[k] -> reps[k+1].
struct RepComplex {
    std::vector<QuiverRep> reps;
    std::vector<RepMap> diffs;

    int total_dim() const {
        int s = 0;
        for (const QuiverRep& r : reps) s += r.total_dim();
        return s;
    }
};

// Degreewise map of complexes; cm[k] : X.reps[k] -> Y.reps[k].
using ChainMap = std::vector<RepMap>;

inline RepComplex zero_complex(const Algebra& alg) {
    RepComplex c;
    for (int k = 0; k <= alg.d(); ++k) c.reps.push_back(zero_rep(alg));
    for (int k = 0; k < alg.d(); ++k)
        c.diffs.push_back(zero_map(c.reps[static_cast<size_t>(k)],
                                   c.reps[static_cast<size_t>(k) + 1]));
    return c;
}

inline ChainMap chain_zero_map(const RepComplex& X, const RepComplex& Y) {
    ChainMap f;
    for (size_t k = 0; k < X.reps.size(); ++k) f.push_back(zero_map(X.reps[k], Y.reps[k]));
    return f;
}

inline ChainMap chain_compose(const RepComplex&, const ChainMap& g, const ChainMap& f) {
    ChainMap h;
    for (size_t k = 0; k < f.size(); ++k) h.push_back(compose(g[k], f[k]));
    return h;
}

inline ChainMap chain_add(const ChainMap& a, const ChainMap& b) {
    ChainMap h;
    for (size_t k = 0; k < a.size(); ++k) h.push_back(map_add(a[k], b[k]));
    return h;
}

inline ChainMap chain_scale(const ChainMap& a, const Rat& s) {
    ChainMap h;
    for (size_t k = 0; k < a.size(); ++k) h.push_back(map_scale(a[k], s));
    return h;
}

inline bool chain_is_zero(const ChainMap& f) {
    for (const RepMap& m : f)
        if (!map_is_zero(m)) return false;
    return true;
}

inline std::vector<Rat> chain_flatten(const ChainMap& f) {
    std::vector<Rat> out;
    for (const RepMap& m : f) {
        std::vector<Rat> part = flatten_map(m);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline int chain_rank(const ChainMap& f) {
    int r = 0;
    for (const RepMap& m : f) r += map_rank(m);
    return r;
}

inline bool is_chain_map(const RepComplex& X, const RepComplex& Y, const ChainMap& f) {
    for (size_t k = 0; k < X.reps.size(); ++k)
        if (!is_rep_map(X.reps[k], Y.reps[k], f[k])) return false;
    for (size_t k = 0; k + 1 < X.reps.size(); ++k) {
        RepMap lhs = compose(f[k + 1], X.diffs[k]);
        RepMap rhs = compose(Y.diffs[k], f[k]);
        for (size_t v = 0; v < lhs.size(); ++v)
            if (!(lhs[v] + rhs[v] * Rat(-1)).is_zero()) return false;
    }
    return true;
}

// Basis of the space of chain maps X -> Y, from the nullspace of the
// commuting constraints over degreewise Hom bases.
inline std::vector<ChainMap> chain_hom_basis(const RepComplex& X, const RepComplex& Y) {
    const size_t nterms = X.reps.size();
    std::vector<std::vector<RepMap>> blocks(nterms);
    std::vector<size_t> offset(nterms + 1, 0);
    for (size_t k = 0; k < nterms; ++k) {
        blocks[k] = hom_basis(X.reps[k], Y.reps[k]);
        offset[k + 1] = offset[k] + blocks[k].size();
    }
    size_t nvars = offset[nterms];
    // Constraint rows: flattened entries of maps X.reps[k] -> Y.reps[k+1].
    std::vector<size_t> row_offset(nterms, 0);
    size_t nrows = 0;
    for (size_t k = 0; k + 1 < nterms; ++k) {
        row_offset[k] = nrows;
        nrows += flatten_map(zero_map(X.reps[k], Y.reps[k + 1])).size();
    }
    QMat sys(static_cast<int>(nrows), static_cast<int>(nvars));
    for (size_t m = 0; m < nterms; ++m)
        for (size_t e = 0; e < blocks[m].size(); ++e) {
            size_t col = offset[m] + e;
            if (m + 1 < nterms) {  // -d_Y * f^m at constraint m
                std::vector<Rat> v = flatten_map(compose(Y.diffs[m], blocks[m][e]));
                for (size_t i = 0; i < v.size(); ++i)
                    sys(static_cast<int>(row_offset[m] + i), static_cast<int>(col)) -= v[i];
            }
            if (m >= 1) {  // +f^m * d_X at constraint m-1
                std::vector<Rat> v = flatten_map(compose(blocks[m][e], X.diffs[m - 1]));
                for (size_t i = 0; i < v.size(); ++i)
                    sys(static_cast<int>(row_offset[m - 1] + i), static_cast<int>(col)) += v[i];
            }
        }
    QMat null = sys.nullspace();
    std::vector<ChainMap> out;
    for (int c = 0; c < null.cols(); ++c) {
        ChainMap f = chain_zero_map(X, Y);
        for (size_t m = 0; m < nterms; ++m)
            for (size_t e = 0; e < blocks[m].size(); ++e) {
                const Rat& co = null(static_cast<int>(offset[m] + e), c);
                if (co != 0) f[m] = map_add(f[m], map_scale(blocks[m][e], co));
            }
        out.push_back(std::move(f));
    }
    return out;
}

inline std::optional<std::vector<Rat>> chain_express_in_span(
    const std::vector<ChainMap>& basis, const ChainMap& target) {
    std::vector<Rat> t = chain_flatten(target);
    QMat sys(static_cast<int>(t.size()), static_cast<int>(basis.size()));
    for (size_t b = 0; b < basis.size(); ++b) {
        std::vector<Rat> col = chain_flatten(basis[b]);
        for (size_t i = 0; i < col.size(); ++i)
            sys(static_cast<int>(i), static_cast<int>(b)) = col[i];
    }
    return sys.solve(t);
}

struct ComplexSum {
    RepComplex cpx;
    std::vector<ChainMap> incl, proj;
};

inline ComplexSum complex_direct_sum(const Algebra& alg,
                                     const std::vector<const RepComplex*>& parts) {
    ComplexSum out;
    std::vector<DirectSum> per_degree;
    for (int k = 0; k <= alg.d(); ++k) {
        std::vector<const QuiverRep*> reps;
        for (const RepComplex* p : parts) reps.push_back(&p->reps[static_cast<size_t>(k)]);
        per_degree.push_back(direct_sum(alg, reps));
        out.cpx.reps.push_back(per_degree.back().rep);
    }
    for (int k = 0; k < alg.d(); ++k) {
        RepMap dsum = zero_map(out.cpx.reps[static_cast<size_t>(k)],
                               out.cpx.reps[static_cast<size_t>(k) + 1]);
        for (size_t p = 0; p < parts.size(); ++p)
            dsum = map_add(dsum,
                           compose(per_degree[static_cast<size_t>(k) + 1].incl[p],
                                   compose(parts[p]->diffs[static_cast<size_t>(k)],
                                           per_degree[static_cast<size_t>(k)].proj[p])));
        out.cpx.diffs.push_back(dsum);
    }
    for (size_t p = 0; p < parts.size(); ++p) {
        ChainMap in, pr;
        for (int k = 0; k <= alg.d(); ++k) {
            in.push_back(per_degree[static_cast<size_t>(k)].incl[p]);
            pr.push_back(per_degree[static_cast<size_t>(k)].proj[p]);
        }
        out.incl.push_back(std::move(in));
        out.proj.push_back(std::move(pr));
    }
    return out;
}

struct ChainCokernel {
    RepComplex coker;
    ChainMap proj;  // Y -> coker
};

// Degreewise cokernel of a chain map, with induced differentials.
inline ChainCokernel chain_cokernel(const RepComplex& X, const RepComplex& Y,
                                    const ChainMap& f) {
    ChainCokernel out;
    std::vector<Factorization> facs;
    for (size_t k = 0; k < Y.reps.size(); ++k) {
        facs.push_back(factorize(X.reps[k], Y.reps[k], f[k]));
        out.coker.reps.push_back(facs.back().cokernel);
        out.proj.push_back(facs.back().coker_proj);
    }
    for (size_t k = 0; k + 1 < Y.reps.size(); ++k) {
        // induced differential: proj_{k+1} o d_Y o sect_k (well-defined since
        // d_Y preserves the image of f)
        RepMap ind = compose(facs[k + 1].coker_proj, compose(Y.diffs[k], facs[k].coker_sect));
        out.coker.diffs.push_back(ind);
        RepMap lhs = compose(out.coker.diffs[k], out.proj[k]);
        RepMap rhs = compose(out.proj[k + 1], Y.diffs[k]);
        for (size_t v = 0; v < lhs.size(); ++v)
            if (!(lhs[v] + rhs[v] * Rat(-1)).is_zero())
                throw std::logic_error("chain_cokernel: induced differential ill-defined");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Labeled (d+1)-term complexes of projectives.

struct ProjComplex {
    const Algebra* alg = nullptr;
    std::vector<std::vector<Tuple>> comps;  // per index 0..d: sorted projective tuples
    RepComplex cpx;
};

// Stalk of the projective P_x placed at the given index (degree index - d).
inline ProjComplex stalk_complex(const Algebra& alg, const Tuple& x, int index) {
    if (!alg.is_projective(x))
        throw std::invalid_argument("stalk_complex: tuple is not projective");
    ProjComplex out;
    out.alg = &alg;
    out.comps.resize(static_cast<size_t>(alg.d()) + 1);
    out.cpx = zero_complex(alg);
    out.comps[static_cast<size_t>(index)] = {x};
    out.cpx.reps[static_cast<size_t>(index)] = realize_module(alg, x);
    for (int k = 0; k < alg.d(); ++k)
        out.cpx.diffs[static_cast<size_t>(k)] =
            zero_map(out.cpx.reps[static_cast<size_t>(k)],
                     out.cpx.reps[static_cast<size_t>(k) + 1]);
    return out;
}

// Contractible two-term complex P --id--> P at indices (index, index+1).
inline ProjComplex contractible_complex(const Algebra& alg, const Tuple& x, int index) {
    ProjComplex out = stalk_complex(alg, x, index);
    out.comps[static_cast<size_t>(index) + 1] = {x};
    out.cpx.reps[static_cast<size_t>(index) + 1] = realize_module(alg, x);
    for (int k = 0; k < alg.d(); ++k)
        out.cpx.diffs[static_cast<size_t>(k)] =
            zero_map(out.cpx.reps[static_cast<size_t>(k)],
                     out.cpx.reps[static_cast<size_t>(k) + 1]);
    out.cpx.diffs[static_cast<size_t>(index)] =
        identity_map(out.cpx.reps[static_cast<size_t>(index)]);
    return out;
}

// Minimal projective d-presentation of M_x: one indecomposable projective
// per degree, with vertex tuples y^i_j = x_{j-1} - 1 for j <= i and x_j
// otherwise; projective x gives the degree-0 stalk. Differentials are the
// basis morphisms between the realized projectives.
inline ProjComplex min_presentation(const Algebra& alg, const Tuple& x) {
    if (alg.is_projective(x)) return stalk_complex(alg, x, alg.d());
    const int d = alg.d();
    ProjComplex out;
    out.alg = &alg;
    out.comps.resize(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        Tuple y(static_cast<size_t>(d));
        for (int j = 1; j <= d; ++j)
            y[static_cast<size_t>(j - 1)] =
                j <= i ? x[static_cast<size_t>(j - 1)] - 1 : x[static_cast<size_t>(j)];
        if (alg.vertex_index(y) < 0)
            throw std::logic_error("min_presentation: vertex tuple outside os");
        // degree -i sits at index d - i
        out.comps[static_cast<size_t>(d - i)] = {alg.projective_of(y)};
    }
    for (int k = 0; k <= d; ++k)
        out.cpx.reps.push_back(
            realize_module(alg, out.comps[static_cast<size_t>(k)][0]));
    for (int k = 0; k < d; ++k) {
        std::vector<RepMap> maps = hom_basis(out.cpx.reps[static_cast<size_t>(k)],
                                             out.cpx.reps[static_cast<size_t>(k) + 1]);
        if (maps.size() != 1)
            throw std::logic_error("min_presentation: differential Hom space not 1-dimensional");
        out.cpx.diffs.push_back(maps[0]);
    }
    for (int k = 0; k + 1 < d; ++k)
        if (!map_is_zero(compose(out.cpx.diffs[static_cast<size_t>(k) + 1],
                                 out.cpx.diffs[static_cast<size_t>(k)])))
            throw std::logic_error("min_presentation: d^2 != 0");
    return out;
}

inline ProjComplex complex_sum_labeled(const Algebra& alg,
                                       const std::vector<ProjComplex>& parts) {
    ProjComplex out;
    out.alg = &alg;
    out.comps.resize(static_cast<size_t>(alg.d()) + 1);
    std::vector<const RepComplex*> ptrs;
    for (const ProjComplex& p : parts) {
        ptrs.push_back(&p.cpx);
        for (size_t k = 0; k < p.comps.size(); ++k)
            out.comps[k].insert(out.comps[k].end(), p.comps[k].begin(), p.comps[k].end());
    }
    for (auto& degree : out.comps) std::sort(degree.begin(), degree.end(), colex_less);
    out.cpx = complex_direct_sum(alg, ptrs).cpx;
    return out;
}

// Summand complexes of the assembled pair: presentations of the module part
// plus degree -d stalks of the projective part.
inline std::vector<ProjComplex> summand_complexes(const Algebra& alg,
                                                  const TauRigidPair& pair) {
    std::vector<ProjComplex> out;
    for (const Tuple& x : pair.module_part) out.push_back(min_presentation(alg, x));
    for (const Tuple& y : pair.proj_part) out.push_back(stalk_complex(alg, y, 0));
    return out;
}

inline ProjComplex assemble(const Algebra& alg, const TauRigidPair& pair) {
    return complex_sum_labeled(alg, summand_complexes(alg, pair));
}

// ---------------------------------------------------------------------------
// Hom in the homotopy category.

struct HomotopyHom {
    int dim = 0;
    int chain_dim = 0;     // dim of the chain-map space
    int boundary_dim = 0;  // dim of the null-homotopic subspace
};

// dim Hom_{K^b(proj A)}(S, T[shift]): chain maps f^k : S^k -> T^{k+shift}
// modulo maps of the form d h + h d. Signs from the shift rescale the
// variable spaces and do not affect dimensions.
inline HomotopyHom hom_K(const ProjComplex& S, const ProjComplex& T, int shift) {
    const Algebra& alg = *S.alg;
    const int n = alg.d() + 1;
    auto trep = [&](int k) -> const QuiverRep* {
        return (k >= 0 && k < n) ? &T.cpx.reps[static_cast<size_t>(k)] : nullptr;
    };
    std::vector<std::vector<RepMap>> blocks(static_cast<size_t>(n));
    std::vector<size_t> offset(static_cast<size_t>(n) + 1, 0);
    for (int k = 0; k < n; ++k) {
        if (trep(k + shift))
            blocks[static_cast<size_t>(k)] =
                hom_basis(S.cpx.reps[static_cast<size_t>(k)], *trep(k + shift));
        offset[static_cast<size_t>(k) + 1] =
            offset[static_cast<size_t>(k)] + blocks[static_cast<size_t>(k)].size();
    }
    const size_t nvars = offset[static_cast<size_t>(n)];
    // constraint block k: maps S^k -> T^{k+shift+1}, k = 0..n-2
    std::vector<size_t> row_offset(static_cast<size_t>(n), 0);
    size_t nrows = 0;
    for (int k = 0; k + 1 < n; ++k) {
        row_offset[static_cast<size_t>(k)] = nrows;
        if (trep(k + shift + 1))
            nrows += flatten_map(zero_map(S.cpx.reps[static_cast<size_t>(k)],
                                          *trep(k + shift + 1)))
                         .size();
    }
    QMat sys(static_cast<int>(nrows), static_cast<int>(nvars));
    for (int m = 0; m < n; ++m)
        for (size_t e = 0; e < blocks[static_cast<size_t>(m)].size(); ++e) {
            size_t col = offset[static_cast<size_t>(m)] + e;
            const RepMap& g = blocks[static_cast<size_t>(m)][e];
            if (m + 1 < n && m + shift >= 0 && m + shift + 1 < n) {
                std::vector<Rat> v = flatten_map(
                    compose(T.cpx.diffs[static_cast<size_t>(m + shift)], g));
                for (size_t i = 0; i < v.size(); ++i)
                    sys(static_cast<int>(row_offset[static_cast<size_t>(m)] + i),
                        static_cast<int>(col)) -= v[i];
            }
            if (m >= 1 && trep(m + shift)) {
                std::vector<Rat> v =
                    flatten_map(compose(g, S.cpx.diffs[static_cast<size_t>(m) - 1]));
                for (size_t i = 0; i < v.size(); ++i)
                    sys(static_cast<int>(row_offset[static_cast<size_t>(m) - 1] + i),
                        static_cast<int>(col)) += v[i];
            }
        }
    QMat cycles = sys.nullspace();

    // boundaries: h^m : S^m -> T^{m+shift-1} contributes d_T h to f^m and
    // h d_S to f^{m-1}
    std::vector<std::vector<Rat>> bcols;
    for (int m = 0; m < n; ++m) {
        if (!trep(m + shift - 1)) continue;
        for (const RepMap& h :
             hom_basis(S.cpx.reps[static_cast<size_t>(m)], *trep(m + shift - 1))) {
            std::vector<Rat> col(nvars, Rat(0));
            bool nonzero = false;
            if (m + shift - 1 >= 0 && m + shift < n && trep(m + shift)) {
                RepMap piece = compose(T.cpx.diffs[static_cast<size_t>(m + shift - 1)], h);
                auto coord = express_in_span(blocks[static_cast<size_t>(m)], piece);
                if (!coord) throw std::logic_error("hom_K: boundary outside Hom basis");
                for (size_t e = 0; e < coord->size(); ++e) {
                    col[offset[static_cast<size_t>(m)] + e] += (*coord)[e];
                    if ((*coord)[e] != 0) nonzero = true;
                }
            }
            if (m >= 1 && trep(m - 1 + shift)) {
                RepMap piece = compose(h, S.cpx.diffs[static_cast<size_t>(m) - 1]);
                auto coord = express_in_span(blocks[static_cast<size_t>(m) - 1], piece);
                if (!coord) throw std::logic_error("hom_K: boundary outside Hom basis");
                for (size_t e = 0; e < coord->size(); ++e) {
                    col[offset[static_cast<size_t>(m) - 1] + e] += (*coord)[e];
                    if ((*coord)[e] != 0) nonzero = true;
                }
            }
            if (nonzero) bcols.push_back(std::move(col));
        }
    }
    QMat B(static_cast<int>(nvars), static_cast<int>(bcols.size()));
    for (size_t c = 0; c < bcols.size(); ++c)
        for (size_t i = 0; i < nvars; ++i)
            B(static_cast<int>(i), static_cast<int>(c)) = bcols[c][i];

    HomotopyHom out;
    out.chain_dim = cycles.cols();
    out.boundary_dim = B.rank();
    out.dim = out.chain_dim - out.boundary_dim;
    return out;
}

inline bool is_presilting(const ProjComplex& S) {
    for (int i = 1; i <= 2 * S.alg->d(); ++i)
        if (hom_K(S, S, i).dim != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Homology.

inline QuiverRep h0(const ProjComplex& S) {
    const int d = S.alg->d();
    return factorize(S.cpx.reps[static_cast<size_t>(d) - 1],
                     S.cpx.reps[static_cast<size_t>(d)],
                     S.cpx.diffs[static_cast<size_t>(d) - 1])
        .cokernel;
}

inline bool is_inner_acyclic(const ProjComplex& S) {
    const int d = S.alg->d();
    for (int k = 1; k <= d - 1; ++k) {  // degree -d + k, i.e. -1..-(d-1)
        if (!map_is_zero(compose(S.cpx.diffs[static_cast<size_t>(k)],
                                 S.cpx.diffs[static_cast<size_t>(k) - 1])))
            return false;
        if (map_rank(S.cpx.diffs[static_cast<size_t>(k) - 1]) +
                map_rank(S.cpx.diffs[static_cast<size_t>(k)]) !=
            S.cpx.reps[static_cast<size_t>(k)].total_dim())
            return false;
    }
    return true;
}

inline bool in_P_d_M(const ProjComplex& S) {
    if (!is_inner_acyclic(S)) return false;
    QuiverRep H = h0(S);
    if (H.total_dim() == 0) return true;
    std::vector<std::pair<Tuple, QuiverRep>> cands;
    for (const Tuple& x : S.alg->indecs()) cands.emplace_back(x, realize_module(*S.alg, x));
    try {
        decompose(H, cands);
        return true;
    } catch (const DecompositionError&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Minimal left approximations in the chain-map category, and the silting
// generation witness.

struct WitnessNotFoundError : std::runtime_error {
    explicit WitnessNotFoundError(const std::string& w) : std::runtime_error(w) {}
};

struct ChainApproximation {
    std::vector<size_t> summand_gen;  // generator index per target summand
    RepComplex target;
    ChainMap map;
};

inline ChainApproximation minimal_left_chain_approximation(
    const Algebra& alg, const RepComplex& W, const std::vector<RepComplex>& gens) {
    const size_t nG = gens.size();
    std::vector<std::vector<ChainMap>> homWG(nG);
    std::vector<int> dim_hom(nG, 0);
    for (size_t j = 0; j < nG; ++j) {
        homWG[j] = chain_hom_basis(W, gens[j]);
        dim_hom[j] = static_cast<int>(homWG[j].size());
    }
    std::vector<QMat> radical_image(nG);
    for (size_t j = 0; j < nG; ++j) {
        std::vector<std::vector<Rat>> cols;
        for (size_t k = 0; k < nG; ++k) {
            if (k == j || homWG[k].empty()) continue;
            for (const ChainMap& h : chain_hom_basis(gens[k], gens[j]))
                for (const ChainMap& g : homWG[k]) {
                    auto coord = chain_express_in_span(homWG[j], chain_compose(W, h, g));
                    if (!coord)
                        throw std::logic_error(
                            "minimal_left_chain_approximation: composite outside Hom basis");
                    cols.push_back(*coord);
                }
        }
        QMat m(dim_hom[j], static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (int i = 0; i < dim_hom[j]; ++i)
                m(i, static_cast<int>(c)) = cols[c][static_cast<size_t>(i)];
        radical_image[j] = m;
    }
    ApproxPlan plan = plan_left_approximation(dim_hom, radical_image);

    ChainApproximation out;
    std::vector<const RepComplex*> parts;
    std::vector<ChainMap> part_maps;
    for (size_t j = 0; j < nG; ++j)
        for (int t = 0; t < plan.mult[j]; ++t) {
            out.summand_gen.push_back(j);
            parts.push_back(&gens[j]);
            ChainMap comp = chain_zero_map(W, gens[j]);
            for (int i = 0; i < dim_hom[j]; ++i) {
                const Rat& c = plan.comps[j][static_cast<size_t>(t)][static_cast<size_t>(i)];
                if (c != 0)
                    comp = chain_add(comp, chain_scale(homWG[j][static_cast<size_t>(i)], c));
            }
            part_maps.push_back(std::move(comp));
        }
    ComplexSum ds = complex_direct_sum(alg, parts);
    out.target = ds.cpx;
    out.map = chain_zero_map(W, out.target);
    for (size_t p = 0; p < parts.size(); ++p)
        out.map = chain_add(out.map, chain_compose(W, ds.incl[p], part_maps[p]));

    // Minimality certificate (Fitting): every endomorphism psi of the target
    // with psi * f = 0 must have vanishing same-class diagonal blocks.
    std::vector<ChainMap> endos = chain_hom_basis(out.target, out.target);
    if (!endos.empty()) {
        std::vector<Rat> probe = chain_flatten(out.map);
        QMat sys(static_cast<int>(probe.size()), static_cast<int>(endos.size()));
        for (size_t k = 0; k < endos.size(); ++k) {
            std::vector<Rat> col = chain_flatten(chain_compose(W, endos[k], out.map));
            for (size_t i = 0; i < col.size(); ++i)
                sys(static_cast<int>(i), static_cast<int>(k)) = col[i];
        }
        QMat annih = sys.nullspace();
        for (int c = 0; c < annih.cols(); ++c) {
            ChainMap psi = chain_zero_map(out.target, out.target);
            for (size_t k = 0; k < endos.size(); ++k)
                if (annih(static_cast<int>(k), c) != 0)
                    psi = chain_add(psi, chain_scale(endos[k], annih(static_cast<int>(k), c)));
            for (size_t p = 0; p < parts.size(); ++p)
                for (size_t q = 0; q < parts.size(); ++q) {
                    if (out.summand_gen[p] != out.summand_gen[q]) continue;
                    ChainMap block = chain_compose(
                        out.target, ds.proj[p], chain_compose(out.target, psi, ds.incl[q]));
                    if (!chain_is_zero(block))
                        throw std::logic_error(
                            "minimal_left_chain_approximation: minimality certificate failed");
                }
        }
    }
    return out;
}

// One step of the witness sequence, labeled by generator provenance.
struct WitnessTerm {
    std::vector<std::vector<Tuple>> comps;  // per-degree projective multiset
    std::vector<int> generator_index;       // which generator each summand came from
};

struct SiltingCertificate {
    bool presilting = false;
    int summand_count = 0;
    bool count_matches = false;
    bool silting = false;
    std::vector<WitnessTerm> witness;  // S^0..S^d of 0 -> A -> S^0 -> ... -> S^d -> 0
};

// Certify that S generates: build 0 -> A -> S^0 -> ... -> S^d -> 0 with each
// S^i in add(S + contractibles) by iterated minimal left approximations in
// the chain-map category, exactness certified degreewise.
inline SiltingCertificate is_silting(const Algebra& alg, const ProjComplex& S,
                                     const std::vector<ProjComplex>& summands) {
    SiltingCertificate cert;
    cert.presilting = is_presilting(S);
    cert.summand_count = static_cast<int>(summands.size());
    cert.count_matches = summands.size() == alg.vertices().size();

    // generators: the summands of S plus all contractibles D(P_y) at each
    // adjacent index pair
    std::vector<RepComplex> gens;
    std::vector<std::vector<std::vector<Tuple>>> gen_comps;
    for (const ProjComplex& p : summands) {
        gens.push_back(p.cpx);
        gen_comps.push_back(p.comps);
    }
    for (int k = 0; k < alg.d(); ++k)
        for (const Tuple& y : alg.indecs()) {
            if (!alg.is_projective(y)) continue;
            ProjComplex c = contractible_complex(alg, y, k);
            gens.push_back(c.cpx);
            gen_comps.push_back(c.comps);
        }

    // A as a stalk complex in degree 0
    RepComplex W = zero_complex(alg);
    {
        std::vector<QuiverRep> projs;
        for (const Tuple& x : alg.indecs())
            if (alg.is_projective(x)) projs.push_back(realize_module(alg, x));
        std::vector<const QuiverRep*> ptrs;
        for (const QuiverRep& r : projs) ptrs.push_back(&r);
        W.reps[static_cast<size_t>(alg.d())] = direct_sum(alg, ptrs).rep;
        for (int k = 0; k < alg.d(); ++k)
            W.diffs[static_cast<size_t>(k)] = zero_map(W.reps[static_cast<size_t>(k)],
                                                       W.reps[static_cast<size_t>(k) + 1]);
    }
    // Exactness of 0 -> A -> S^0 -> ... -> S^d -> 0 is equivalent to every
    // approximation map (of A, then of each successive cokernel) being
    // injective and the final cokernel vanishing.
    for (int step = 0; step <= alg.d() && W.total_dim() > 0; ++step) {
        ChainApproximation ap = minimal_left_chain_approximation(alg, W, gens);
        if (chain_rank(ap.map) != W.total_dim())
            throw WitnessNotFoundError("is_silting: witness sequence not exact at step " +
                                       std::to_string(step));
        WitnessTerm term;
        term.comps.resize(static_cast<size_t>(alg.d()) + 1);
        for (size_t s = 0; s < ap.summand_gen.size(); ++s) {
            term.generator_index.push_back(static_cast<int>(ap.summand_gen[s]));
            const auto& gc = gen_comps[ap.summand_gen[s]];
            for (size_t k = 0; k < gc.size(); ++k)
                term.comps[k].insert(term.comps[k].end(), gc[k].begin(), gc[k].end());
        }
        for (auto& degree : term.comps) std::sort(degree.begin(), degree.end(), colex_less);
        cert.witness.push_back(std::move(term));
        W = chain_cokernel(W, ap.target, ap.map).coker;
    }
    if (W.total_dim() != 0)
        throw WitnessNotFoundError("is_silting: witness sequence does not terminate");
    cert.silting = cert.presilting && cert.count_matches;
    return cert;
}

}  // namespace hntau
