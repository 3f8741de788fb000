#pragma once

// Exact-rational quiver representation backend: the independent linear
// algebra oracle against which every combinatorial formula is checked.
//
// Orientation note: the quiver data lists arrows source -> target with
// target = source + e_i. The module action runs against the arrows: the
// matrix attached to an arrow maps the fibre at the target to the fibre at
// the source (rows = dim source, cols = dim target). With this convention
// hom_basis reproduces the leads-to Hom formula; the opposite convention
// does not.

#include "kupisch.hpp"
#include "matrix.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hntau {

struct QuiverRep {
    const Algebra* alg = nullptr;
    std::vector<int> dims;  // per vertex
    std::vector<QMat> act;  // per arrow: fibre(target) -> fibre(source)

    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
    bool is_zero() const { return total_dim() == 0; }
};

// Per-vertex matrices f_v : M_v -> N_v commuting with the action.
using RepMap = std::vector<QMat>;

inline QuiverRep zero_rep(const Algebra& alg) {
    QuiverRep r;
    r.alg = &alg;
    r.dims.assign(alg.vertices().size(), 0);
    for (const auto& a : alg.arrows()) {
        (void)a;
        r.act.emplace_back(0, 0);
    }
    return r;
}

inline QuiverRep realize_module(const Algebra& alg, const Tuple& x) {
    QuiverRep r = zero_rep(alg);
    std::vector<char> supp(alg.vertices().size(), 0);
    for (int v : alg.support(x)) supp[static_cast<size_t>(v)] = 1;
    for (size_t v = 0; v < supp.size(); ++v) r.dims[v] = supp[v] ? 1 : 0;
    for (size_t a = 0; a < alg.arrows().size(); ++a) {
        const auto& ar = alg.arrows()[a];
        int s = r.dims[static_cast<size_t>(ar.source)], t = r.dims[static_cast<size_t>(ar.target)];
        r.act[a] = QMat(s, t);
        if (s == 1 && t == 1) r.act[a](0, 0) = 1;
    }
    return r;
}

inline bool is_rep_map(const QuiverRep& M, const QuiverRep& N, const RepMap& f) {
    for (size_t a = 0; a < M.alg->arrows().size(); ++a) {
        const auto& ar = M.alg->arrows()[a];
        size_t s = static_cast<size_t>(ar.source), t = static_cast<size_t>(ar.target);
        if (f[s] * M.act[a] != N.act[a] * f[t]) return false;
    }
    return true;
}

inline RepMap zero_map(const QuiverRep& M, const QuiverRep& N) {
    RepMap f;
    for (size_t v = 0; v < M.dims.size(); ++v) f.emplace_back(N.dims[v], M.dims[v]);
    return f;
}

inline RepMap identity_map(const QuiverRep& M) {
    RepMap f;
    for (int d : M.dims) f.push_back(QMat::identity(d));
    return f;
}

inline RepMap compose(const RepMap& g, const RepMap& f) {
    RepMap h;
    for (size_t v = 0; v < f.size(); ++v) h.push_back(g[v] * f[v]);
    return h;
}

inline RepMap map_add(const RepMap& a, const RepMap& b) {
    RepMap h;
    for (size_t v = 0; v < a.size(); ++v) h.push_back(a[v] + b[v]);
    return h;
}

inline RepMap map_scale(const RepMap& a, const Rat& s) {
    RepMap h;
    for (size_t v = 0; v < a.size(); ++v) h.push_back(a[v] * s);
    return h;
}

inline bool map_is_zero(const RepMap& f) {
    for (const QMat& m : f)
        if (!m.is_zero()) return false;
    return true;
}

inline std::vector<Rat> flatten_map(const RepMap& f) {
    std::vector<Rat> out;
    for (const QMat& m : f)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

struct DirectSum {
    QuiverRep rep;
    std::vector<RepMap> incl;  // summand -> sum
    std::vector<RepMap> proj;  // sum -> summand
};

inline DirectSum direct_sum(const Algebra& alg, const std::vector<const QuiverRep*>& parts) {
    DirectSum ds;
    ds.rep = zero_rep(alg);
    std::vector<int> offset(alg.vertices().size(), 0);
    std::vector<std::vector<int>> starts(parts.size(), std::vector<int>(alg.vertices().size(), 0));
    for (size_t p = 0; p < parts.size(); ++p)
        for (size_t v = 0; v < alg.vertices().size(); ++v) {
            starts[p][v] = ds.rep.dims[v];
            ds.rep.dims[v] += parts[p]->dims[v];
        }
    for (size_t a = 0; a < alg.arrows().size(); ++a) {
        const auto& ar = alg.arrows()[a];
        size_t s = static_cast<size_t>(ar.source), t = static_cast<size_t>(ar.target);
        QMat m(ds.rep.dims[s], ds.rep.dims[t]);
        for (size_t p = 0; p < parts.size(); ++p) {
            const QMat& blk = parts[p]->act[a];
            for (int i = 0; i < blk.rows(); ++i)
                for (int j = 0; j < blk.cols(); ++j)
                    m(starts[p][s] + i, starts[p][t] + j) = blk(i, j);
        }
        ds.rep.act[a] = m;
    }
    for (size_t p = 0; p < parts.size(); ++p) {
        RepMap in, pr;
        for (size_t v = 0; v < alg.vertices().size(); ++v) {
            QMat mi(ds.rep.dims[v], parts[p]->dims[v]);
            QMat mp(parts[p]->dims[v], ds.rep.dims[v]);
            for (int i = 0; i < parts[p]->dims[v]; ++i) {
                mi(starts[p][v] + i, i) = 1;
                mp(i, starts[p][v] + i) = 1;
            }
            in.push_back(mi);
            pr.push_back(mp);
        }
        ds.incl.push_back(in);
        ds.proj.push_back(pr);
    }
    return ds;
}

// Basis of Hom(M, N): nullspace of the commuting-square constraints.
inline std::vector<RepMap> hom_basis(const QuiverRep& M, const QuiverRep& N) {
    const Algebra& alg = *M.alg;
    const size_t nv = alg.vertices().size();
    // Unknown layout: entries of f_v, vertex by vertex, row-major.
    std::vector<int> start(nv + 1, 0);
    for (size_t v = 0; v < nv; ++v) start[v + 1] = start[v] + N.dims[v] * M.dims[v];
    int unknowns = start[nv];
    int n_constraints = 0;
    for (const auto& ar : alg.arrows())
        n_constraints += N.dims[static_cast<size_t>(ar.source)] * M.dims[static_cast<size_t>(ar.target)];
    QMat sys(n_constraints, unknowns);
    int row = 0;
    for (size_t a = 0; a < alg.arrows().size(); ++a) {
        const auto& ar = alg.arrows()[a];
        size_t s = static_cast<size_t>(ar.source), t = static_cast<size_t>(ar.target);
        // (f_s * M.act[a] - N.act[a] * f_t)(i,j) = 0 for all i < N.dims[s], j < M.dims[t]
        for (int i = 0; i < N.dims[s]; ++i)
            for (int j = 0; j < M.dims[t]; ++j) {
                for (int k = 0; k < M.dims[s]; ++k)
                    if (M.act[a](k, j) != 0)
                        sys(row, start[s] + i * M.dims[s] + k) += M.act[a](k, j);
                for (int k = 0; k < N.dims[t]; ++k)
                    if (N.act[a](i, k) != 0)
                        sys(row, start[t] + k * M.dims[t] + j) -= N.act[a](i, k);
                ++row;
            }
    }
    QMat null = sys.nullspace();
    std::vector<RepMap> basis;
    for (int c = 0; c < null.cols(); ++c) {
        RepMap f;
        for (size_t v = 0; v < nv; ++v) {
            QMat m(N.dims[v], M.dims[v]);
            for (int i = 0; i < N.dims[v]; ++i)
                for (int j = 0; j < M.dims[v]; ++j) m(i, j) = null(start[v] + i * M.dims[v] + j, c);
            f.push_back(m);
        }
        basis.push_back(f);
    }
    return basis;
}

inline int hom_dim_rep(const QuiverRep& M, const QuiverRep& N) {
    return static_cast<int>(hom_basis(M, N).size());
}

// Coordinates of `target` in the span of `basis`; nullopt when outside.
inline std::optional<std::vector<Rat>> express_in_span(const std::vector<RepMap>& basis,
                                                       const RepMap& target) {
    std::vector<Rat> t = flatten_map(target);
    QMat sys(static_cast<int>(t.size()), static_cast<int>(basis.size()));
    for (size_t b = 0; b < basis.size(); ++b) {
        std::vector<Rat> col = flatten_map(basis[b]);
        for (size_t i = 0; i < col.size(); ++i) sys(static_cast<int>(i), static_cast<int>(b)) = col[i];
    }
    return sys.solve(t);
}

struct Factorization {
    QuiverRep kernel;
    RepMap kernel_incl;  // kernel -> M
    QuiverRep image;
    RepMap image_incl;    // image -> N
    RepMap corestriction; // M -> image
    QuiverRep cokernel;
    RepMap coker_proj;    // N -> cokernel
    RepMap coker_sect;    // cokernel -> N, vertex-wise section of coker_proj
};

// Vertex-wise rank factorization of f : M -> N with induced arrow actions.
inline Factorization factorize(const QuiverRep& M, const QuiverRep& N, const RepMap& f) {
    const Algebra& alg = *M.alg;
    const size_t nv = alg.vertices().size();
    Factorization r;
    r.kernel = zero_rep(alg);
    r.image = zero_rep(alg);
    r.cokernel = zero_rep(alg);

    std::vector<QMat> kbasis(nv), ibasis(nv), qproj(nv), qsect(nv);
    for (size_t v = 0; v < nv; ++v) {
        kbasis[v] = f[v].nullspace();
        ibasis[v] = f[v].columns(f[v].independent_columns());
        r.kernel.dims[v] = kbasis[v].cols();
        r.image.dims[v] = ibasis[v].cols();
        int c = N.dims[v] - ibasis[v].cols();
        r.cokernel.dims[v] = c;
        QMat full = complete_basis(ibasis[v], N.dims[v]);
        QMat inv = full.inverse();
        QMat q(c, N.dims[v]), s(N.dims[v], c);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < N.dims[v]; ++j) {
                q(i, j) = inv(ibasis[v].cols() + i, j);
                s(j, i) = full(j, ibasis[v].cols() + i);
            }
        qproj[v] = q;
        qsect[v] = s;
    }
    r.kernel_incl = kbasis;
    r.image_incl = ibasis;
    r.coker_proj = qproj;
    r.coker_sect = qsect;
    r.corestriction.clear();
    for (size_t v = 0; v < nv; ++v) {
        auto c = ibasis[v].solve_matrix(f[v]);
        if (!c) throw std::logic_error("factorize: corestriction inconsistent");
        r.corestriction.push_back(*c);
    }

    for (size_t a = 0; a < alg.arrows().size(); ++a) {
        const auto& ar = alg.arrows()[a];
        size_t s = static_cast<size_t>(ar.source), t = static_cast<size_t>(ar.target);
        auto kact = kbasis[s].solve_matrix(M.act[a] * kbasis[t]);
        if (!kact) throw std::logic_error("factorize: kernel not arrow-stable");
        r.kernel.act[a] = *kact;
        auto iact = ibasis[s].solve_matrix(N.act[a] * ibasis[t]);
        if (!iact) throw std::logic_error("factorize: image not arrow-stable");
        r.image.act[a] = *iact;
        r.cokernel.act[a] = qproj[s] * (N.act[a] * qsect[t]);
        if (r.cokernel.act[a] * qproj[t] != qproj[s] * N.act[a])
            throw std::logic_error("factorize: cokernel action ill-defined");
    }
    assert(is_rep_map(r.kernel, M, r.kernel_incl));
    assert(is_rep_map(r.image, N, r.image_incl));
    assert(is_rep_map(M, r.image, r.corestriction));
    assert(is_rep_map(N, r.cokernel, r.coker_proj));
    return r;
}

// Image of the sum of all maps from members of G into M, as a subrepresentation.
struct SubRep {
    QuiverRep rep;
    RepMap incl;
};

inline SubRep trace_subrep(const std::vector<const QuiverRep*>& G, const QuiverRep& M) {
    const Algebra& alg = *M.alg;
    const size_t nv = alg.vertices().size();
    SubRep out;
    out.rep = zero_rep(alg);
    std::vector<QMat> basis(nv);
    for (size_t v = 0; v < nv; ++v) basis[v] = QMat(M.dims[v], 0);
    for (const QuiverRep* g : G)
        for (const RepMap& f : hom_basis(*g, M))
            for (size_t v = 0; v < nv; ++v) basis[v] = QMat::hstack(basis[v], f[v]);
    for (size_t v = 0; v < nv; ++v) {
        basis[v] = basis[v].columns(basis[v].independent_columns());
        out.rep.dims[v] = basis[v].cols();
    }
    for (size_t a = 0; a < alg.arrows().size(); ++a) {
        const auto& ar = alg.arrows()[a];
        size_t s = static_cast<size_t>(ar.source), t = static_cast<size_t>(ar.target);
        auto act = basis[s].solve_matrix(M.act[a] * basis[t]);
        if (!act) throw std::logic_error("trace_subrep: trace not arrow-stable");
        out.rep.act[a] = *act;
    }
    out.incl = basis;
    assert(is_rep_map(out.rep, M, out.incl));
    return out;
}

// ---------------------------------------------------------------------------
// Projective covers and minimal projective resolutions
// ---------------------------------------------------------------------------

struct ProjCover {
    std::vector<Tuple> projectives;  // indecomposable projective (d+1)-tuples, with multiplicity
    QuiverRep rep;                   // their direct sum
    RepMap cover;                    // rep -> M, surjective with superfluous kernel
};

// Map from the indecomposable projective with top at vertex v into M, sending
// the generator to the column vector `gen` in the fibre M_v. Values propagate
// along the action; well-definedness is asserted via is_rep_map.
inline RepMap projective_map_from_generator(const Algebra& alg, const QuiverRep& P,
                                            const QuiverRep& M, int v_top,
                                            const std::vector<Rat>& gen) {
    const size_t nv = alg.vertices().size();
    RepMap f = zero_map(P, M);
    std::vector<char> have(nv, 0);
    std::vector<int> supp;
    for (size_t v = 0; v < nv; ++v)
        if (P.dims[v] == 1) supp.push_back(static_cast<int>(v));
    // Process supported vertices from the top downwards (decreasing colex).
    std::sort(supp.begin(), supp.end(), [&](int a, int b) {
        return colex_less(alg.vertices()[static_cast<size_t>(b)], alg.vertices()[static_cast<size_t>(a)]);
    });
    for (size_t i = 0; i < gen.size(); ++i) f[static_cast<size_t>(v_top)](static_cast<int>(i), 0) = gen[i];
    have[static_cast<size_t>(v_top)] = 1;
    for (int w : supp) {
        if (have[static_cast<size_t>(w)]) continue;
        bool found = false;
        for (size_t a = 0; a < alg.arrows().size() && !found; ++a) {
            const auto& ar = alg.arrows()[a];
            if (ar.source != w) continue;
            size_t t = static_cast<size_t>(ar.target);
            if (P.dims[t] == 1 && have[t]) {
                f[static_cast<size_t>(w)] = M.act[a] * f[t];
                have[static_cast<size_t>(w)] = 1;
                found = true;
            }
        }
        if (!found) throw std::logic_error("projective_map_from_generator: disconnected support");
    }
    if (!is_rep_map(P, M, f))
        throw std::logic_error("projective_map_from_generator: propagation not a map");
    return f;
}

inline ProjCover projective_cover(const QuiverRep& M) {
    const Algebra& alg = *M.alg;
    const size_t nv = alg.vertices().size();
    // Radical: span of all incoming action images; top lifts complete it.
    std::vector<std::vector<std::vector<Rat>>> lifts(nv);
    for (size_t v = 0; v < nv; ++v) {
        QMat rad(M.dims[v], 0);
        for (size_t a = 0; a < alg.arrows().size(); ++a)
            if (static_cast<size_t>(alg.arrows()[a].source) == v)
                rad = QMat::hstack(rad, M.act[a]);
        rad = rad.columns(rad.independent_columns());
        QMat full = complete_basis(rad, M.dims[v]);
        for (int c = rad.cols(); c < full.cols(); ++c) {
            std::vector<Rat> lift(static_cast<size_t>(M.dims[v]));
            for (int i = 0; i < M.dims[v]; ++i) lift[static_cast<size_t>(i)] = full(i, c);
            lifts[v].push_back(lift);
        }
    }
    ProjCover out;
    std::vector<QuiverRep> preps;
    std::vector<std::pair<int, std::vector<Rat>>> gens;  // (top vertex, generator value)
    for (size_t v = 0; v < nv; ++v)
        for (const auto& g : lifts[v]) {
            out.projectives.push_back(alg.projective_of(alg.vertices()[v]));
            preps.push_back(realize_module(alg, out.projectives.back()));
            gens.emplace_back(static_cast<int>(v), g);
        }
    std::vector<const QuiverRep*> ptr;
    for (const auto& p : preps) ptr.push_back(&p);
    DirectSum ds = direct_sum(alg, ptr);
    out.rep = ds.rep;
    out.cover = zero_map(out.rep, M);
    for (size_t p = 0; p < preps.size(); ++p) {
        RepMap comp = projective_map_from_generator(alg, preps[p], M, gens[p].first, gens[p].second);
        out.cover = map_add(out.cover, compose(comp, ds.proj[p]));
    }
    // Surjectivity of the cover.
    for (size_t v = 0; v < nv; ++v)
        if (out.cover[v].rank() != M.dims[v])
            throw std::logic_error("projective_cover: cover not surjective");
    return out;
}

struct ProjResolution {
    std::vector<std::vector<Tuple>> terms;  // terms[i] = projectives of P_i
    std::vector<QuiverRep> reps;            // realized direct sums
    std::vector<RepMap> diffs;              // diffs[i] : P_{i+1} -> P_i
    RepMap augment;                         // P_0 -> M
};

inline ProjResolution minimal_proj_resolution(const QuiverRep& M, int length) {
    ProjResolution res;
    ProjCover cover = projective_cover(M);
    res.terms.push_back(cover.projectives);
    res.reps.push_back(cover.rep);
    res.augment = cover.cover;
    QuiverRep current_domain = cover.rep;
    RepMap current_map = cover.cover;
    const QuiverRep* codomain = &M;
    for (int i = 0; i < length; ++i) {
        Factorization f = factorize(current_domain, *codomain, current_map);
        if (f.kernel.is_zero()) break;
        QuiverRep syzygy = f.kernel;
        RepMap incl = f.kernel_incl;
        ProjCover next = projective_cover(syzygy);
        res.terms.push_back(next.projectives);
        res.reps.push_back(next.rep);
        res.diffs.push_back(compose(incl, next.cover));
        codomain = &res.reps[res.reps.size() - 2];
        current_domain = res.reps.back();
        current_map = res.diffs.back();
        // Hold the syzygy alive only through the composed differential.
    }
    return res;
}

inline int ext_dim(const QuiverRep& M, const QuiverRep& N, int i) {
    if (i < 0) throw std::invalid_argument("ext_dim: negative degree");
    if (i == 0) return hom_dim_rep(M, N);
    ProjResolution res = minimal_proj_resolution(M, i + 1);
    auto hom_space = [&](size_t k) -> std::vector<RepMap> {
        if (k >= res.reps.size()) return {};
        return hom_basis(res.reps[k], N);
    };
    std::vector<RepMap> Hi = hom_space(static_cast<size_t>(i));
    if (Hi.empty()) return 0;
    std::vector<RepMap> Hprev = hom_space(static_cast<size_t>(i - 1));
    std::vector<RepMap> Hnext = hom_space(static_cast<size_t>(i + 1));
    // d_in : Hom(P_{i-1}, N) -> Hom(P_i, N), precomposition with diffs[i-1]
    QMat d_in(static_cast<int>(flatten_map(Hi[0]).size()), static_cast<int>(Hprev.size()));
    for (size_t c = 0; c < Hprev.size(); ++c) {
        std::vector<Rat> col = flatten_map(compose(Hprev[c], res.diffs[static_cast<size_t>(i - 1)]));
        for (size_t r2 = 0; r2 < col.size(); ++r2) d_in(static_cast<int>(r2), static_cast<int>(c)) = col[r2];
    }
    int rank_in = d_in.rank();
    int ker_out;
    if (Hnext.empty() || res.diffs.size() < static_cast<size_t>(i) + 1) {
        ker_out = static_cast<int>(Hi.size());
    } else {
        QMat d_out(static_cast<int>(flatten_map(Hnext[0]).size()), static_cast<int>(Hi.size()));
        for (size_t c = 0; c < Hi.size(); ++c) {
            std::vector<Rat> col = flatten_map(compose(Hi[c], res.diffs[static_cast<size_t>(i)]));
            for (size_t r2 = 0; r2 < col.size(); ++r2) d_out(static_cast<int>(r2), static_cast<int>(c)) = col[r2];
        }
        ker_out = static_cast<int>(Hi.size()) - d_out.rank();
    }
    return ker_out - rank_in;
}

// ---------------------------------------------------------------------------
// Decomposition into indecomposables (idempotent peeling)
// ---------------------------------------------------------------------------

struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Splits X into copies of the named candidates (which must be bricks).
// Errors out when a nonzero remainder admits no split — never guesses.
inline std::vector<Tuple> decompose(const QuiverRep& X,
                                    const std::vector<std::pair<Tuple, QuiverRep>>& candidates) {
    std::vector<Tuple> found;
    QuiverRep cur = X;
    while (!cur.is_zero()) {
        bool split = false;
        for (const auto& [label, C] : candidates) {
            bool fits = true;
            for (size_t v = 0; v < cur.dims.size(); ++v)
                if (C.dims[v] > cur.dims[v]) { fits = false; break; }
            if (!fits || C.is_zero()) continue;
            std::vector<RepMap> in = hom_basis(C, cur);
            if (in.empty()) continue;
            std::vector<RepMap> out = hom_basis(cur, C);
            for (const RepMap& f : in) {
                for (const RepMap& g : out) {
                    RepMap s = compose(g, f);  // endo of the brick C: a scalar
                    Rat lambda = 0;
                    for (size_t v = 0; v < s.size() && lambda == 0; ++v)
                        if (s[v].rows() > 0) lambda = s[v](0, 0);
                    if (lambda == 0) continue;
                    RepMap e = map_scale(compose(f, g), Rat(1) / lambda);  // idempotent on cur
                    Factorization fac = factorize(cur, cur, e);
                    // ker(e) is a complement of a summand isomorphic to C.
                    found.push_back(label);
                    cur = fac.kernel;
                    split = true;
                    break;
                }
                if (split) break;
            }
            if (split) break;
        }
        if (!split)
            throw DecompositionError("decompose: nonzero remainder admits no candidate summand");
    }
    std::sort(found.begin(), found.end(), colex_less);
    return found;
}

}  // namespace hntau
