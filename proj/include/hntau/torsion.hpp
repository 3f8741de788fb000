#pragma once

// T1/T2 axiom checking, the closure operator they generate, NextClosure
// enumeration of all d-torsion classes, and split-class detection.

#include "kupisch.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hntau {

struct AxiomViolation {
    enum Axiom { T1, T2 };
    Axiom axiom;
    Tuple x, z, missing;
};

// Precomputed implication structure of the T1/T2 Horn clauses over the
// canonical indec index order. Immutable after construction.
class TorsionContext {
public:
    explicit TorsionContext(const Algebra& alg) : alg_(&alg) {
        const auto& xs = alg.indecs();
        const size_t m = xs.size();
        t1_.resize(m);
        t2_.assign(m, std::vector<std::vector<int>>(m));
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                bool leq = true;
                for (size_t c = 0; c < xs[i].size(); ++c)
                    if (xs[i][c] > xs[j][c]) { leq = false; break; }
                if (leq && xs[i].back() == xs[j].back()) t1_[i].push_back(static_cast<int>(j));
            }
            for (size_t k = 0; k < m; ++k) {
                if (!Algebra::leads_to(xs[i], Algebra::shifted(xs[k], -1))) continue;
                // All mixtures y with y_c in {x_c, z_c}, filtered by os.
                const int arity = static_cast<int>(xs[i].size());
                for (int bits = 0; bits < (1 << arity); ++bits) {
                    Tuple y(static_cast<size_t>(arity));
                    for (int c = 0; c < arity; ++c)
                        y[static_cast<size_t>(c)] =
                            (bits >> c) & 1 ? xs[k][static_cast<size_t>(c)] : xs[i][static_cast<size_t>(c)];
                    int idx = alg.indec_index(y);
                    if (idx >= 0 && idx != static_cast<int>(i) && idx != static_cast<int>(k)) {
                        auto& lst = t2_[i][k];
                        bool dup = false;
                        for (int e : lst)
                            if (e == idx) { dup = true; break; }
                        if (!dup) lst.push_back(idx);
                    }
                }
                t2_pairs_[i].push_back(static_cast<int>(k));
            }
        }
    }

    const Algebra& algebra() const { return *alg_; }
    size_t size() const { return alg_->indecs().size(); }

    std::vector<char> to_mask(const std::vector<Tuple>& members) const {
        std::vector<char> mask(size(), 0);
        for (const Tuple& t : members) {
            int i = alg_->indec_index(t);
            if (i < 0) throw std::invalid_argument("tuple outside os_l^{d+1}: " + tuple_to_string(t));
            mask[static_cast<size_t>(i)] = 1;
        }
        return mask;
    }

    std::vector<Tuple> to_members(const std::vector<char>& mask) const {
        std::vector<Tuple> out;
        for (size_t i = 0; i < mask.size(); ++i)
            if (mask[i]) out.push_back(alg_->indecs()[i]);
        return out;  // indecs are stored in canonical order already
    }

    std::optional<AxiomViolation> check(const std::vector<char>& mask) const {
        const auto& xs = alg_->indecs();
        for (size_t i = 0; i < mask.size(); ++i) {
            if (!mask[i]) continue;
            for (int j : t1_[i])
                if (!mask[static_cast<size_t>(j)])
                    return AxiomViolation{AxiomViolation::T1, xs[i], xs[static_cast<size_t>(j)],
                                          xs[static_cast<size_t>(j)]};
        }
        for (size_t i = 0; i < mask.size(); ++i) {
            if (!mask[i]) continue;
            for (size_t p = 0; p < t2_pairs(i).size(); ++p) {
                size_t k = static_cast<size_t>(t2_pairs(i)[p]);
                if (!mask[k]) continue;
                for (int y : t2_[i][k])
                    if (!mask[static_cast<size_t>(y)])
                        return AxiomViolation{AxiomViolation::T2, xs[i], xs[k],
                                              xs[static_cast<size_t>(y)]};
            }
        }
        return std::nullopt;
    }

    std::vector<char> close(std::vector<char> mask) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < mask.size(); ++i) {
                if (!mask[i]) continue;
                for (int j : t1_[i])
                    if (!mask[static_cast<size_t>(j)]) {
                        mask[static_cast<size_t>(j)] = 1;
                        changed = true;
                    }
                for (int k : t2_pairs(i)) {
                    if (!mask[static_cast<size_t>(k)]) continue;
                    for (int y : t2_[i][static_cast<size_t>(k)])
                        if (!mask[static_cast<size_t>(y)]) {
                            mask[static_cast<size_t>(y)] = 1;
                            changed = true;
                        }
                }
            }
        }
        return mask;
    }

private:
    const std::vector<int>& t2_pairs(size_t i) const {
        static const std::vector<int> empty;
        auto it = t2_pairs_.find(i);
        return it == t2_pairs_.end() ? empty : it->second;
    }

    const Algebra* alg_;
    std::vector<std::vector<int>> t1_;               // t1_[i] = indices forced by x_i
    std::vector<std::vector<std::vector<int>>> t2_;  // t2_[i][k] = mixture indices
    std::map<size_t, std::vector<int>> t2_pairs_;    // i -> all k with x_i ~> tau(x_k)
};

inline std::optional<AxiomViolation> check_axioms(const Algebra& alg,
                                                  const std::vector<Tuple>& members) {
    TorsionContext ctx(alg);
    return ctx.check(ctx.to_mask(members));
}

inline std::vector<Tuple> closure(const Algebra& alg, const std::vector<Tuple>& seed) {
    TorsionContext ctx(alg);
    return ctx.to_members(ctx.close(ctx.to_mask(seed)));
}

struct TorsionLattice {
    std::vector<std::vector<Tuple>> nodes;      // each in canonical order
    std::vector<std::pair<int, int>> edges;     // cover relations: first < second (inclusion)
};

namespace detail {

inline bool mask_subset(const std::vector<char>& a, const std::vector<char>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

}  // namespace detail

// Ganter's NextClosure over the T1/T2 closure operator, in lectic order.
inline TorsionLattice enumerate_classes(const Algebra& alg) {
    TorsionContext ctx(alg);
    const size_t m = ctx.size();
    std::vector<std::vector<char>> closed;
    std::vector<char> A = ctx.close(std::vector<char>(m, 0));
    closed.push_back(A);
    while (true) {
        bool advanced = false;
        for (size_t ii = m; ii-- > 0;) {
            if (A[ii]) continue;
            std::vector<char> seed(m, 0);
            for (size_t j = 0; j < ii; ++j) seed[j] = A[j];
            seed[ii] = 1;
            std::vector<char> B = ctx.close(seed);
            bool lectic = true;
            for (size_t j = 0; j < ii; ++j)
                if (B[j] && !A[j]) { lectic = false; break; }
            if (lectic) {
                A = B;
                closed.push_back(A);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    TorsionLattice lat;
    for (const auto& mask : closed) lat.nodes.push_back(ctx.to_members(mask));
    // Hasse edges: covers under inclusion.
    for (size_t i = 0; i < closed.size(); ++i)
        for (size_t j = 0; j < closed.size(); ++j) {
            if (i == j || !detail::mask_subset(closed[i], closed[j]) ||
                closed[i] == closed[j])
                continue;
            bool cover = true;
            for (size_t k = 0; k < closed.size() && cover; ++k) {
                if (k == i || k == j) continue;
                if (detail::mask_subset(closed[i], closed[k]) &&
                    detail::mask_subset(closed[k], closed[j]) && closed[k] != closed[i] &&
                    closed[k] != closed[j])
                    cover = false;
            }
            if (cover) lat.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return lat;
}

// Split criterion on indecomposables: no nonzero map from a member to a
// non-member.
inline bool is_split(const Algebra& alg, const std::vector<Tuple>& members) {
    std::vector<char> in(alg.indecs().size(), 0);
    for (const Tuple& t : members) {
        int i = alg.indec_index(t);
        if (i < 0) throw std::invalid_argument("is_split: tuple outside os_l^{d+1}");
        in[static_cast<size_t>(i)] = 1;
    }
    for (const Tuple& u : members)
        for (size_t j = 0; j < alg.indecs().size(); ++j)
            if (!in[j] && Algebra::leads_to(u, alg.indecs()[j])) return false;
    return true;
}

}  // namespace hntau
