#pragma once

// Tiny mode: when the quiver of the algebra is a single path, the algebra is
// a classical Nakayama algebra and every indecomposable of mod A is an
// interval module along the path. This header enumerates the classical
// torsion classes of mod A, computes the minimal torsion class containing a
// set of M-members, and checks the induction conditions (torsion subobjects
// stay in M, Ext^{d-1}(tM, fM') vanishes).

#include "rep.hpp"
#include "torsion.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hntau {

struct NotNakayamaError : std::runtime_error {
    explicit NotNakayamaError(const std::string& what) : std::runtime_error(what) {}
};

// Positions along the path order, inclusive. The top (generator) of the
// module sits at position b; submodules are lower segments [a, c].
struct Interval {
    int a = 0;
    int b = 0;
    bool operator==(const Interval& o) const { return a == o.a && b == o.b; }
    bool operator<(const Interval& o) const { return a != o.a ? a < o.a : b < o.b; }
};

class TinyModel {
public:
    explicit TinyModel(const Algebra& alg) : alg_(&alg) {
        if (!alg.linear_quiver())
            throw NotNakayamaError("tiny mode requires a linear quiver (the quiver branches)");
        order_ = alg.path_order();
        pos_of_vertex_.assign(order_.size(), -1);
        for (size_t p = 0; p < order_.size(); ++p)
            pos_of_vertex_[static_cast<size_t>(order_[p])] = static_cast<int>(p);
        // kappa[p] = dim of the projective with top at position p; intervals
        // are the [a, b] with b - a + 1 <= kappa[b].
        kappa_.resize(order_.size());
        for (size_t p = 0; p < order_.size(); ++p) {
            Tuple proj = alg.projective_of(alg.vertices()[static_cast<size_t>(order_[p])]);
            kappa_[p] = static_cast<int>(alg.support(proj).size());
        }
        for (int b = 0; b < static_cast<int>(order_.size()); ++b)
            for (int a = b; a >= 0 && b - a + 1 <= kappa_[static_cast<size_t>(b)]; --a)
                intervals_.push_back(Interval{a, b});
        std::sort(intervals_.begin(), intervals_.end());
    }

    const Algebra& algebra() const { return *alg_; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    int path_length() const { return static_cast<int>(order_.size()); }

    QuiverRep realize(const Interval& iv) const {
        QuiverRep r = zero_rep(*alg_);
        for (int p = iv.a; p <= iv.b; ++p)
            r.dims[static_cast<size_t>(order_[static_cast<size_t>(p)])] = 1;
        for (size_t ai = 0; ai < alg_->arrows().size(); ++ai) {
            const auto& ar = alg_->arrows()[ai];
            int ps = pos_of_vertex_[static_cast<size_t>(ar.source)];
            int pt = pos_of_vertex_[static_cast<size_t>(ar.target)];
            r.act[ai] = QMat(r.dims[static_cast<size_t>(ar.source)],
                             r.dims[static_cast<size_t>(ar.target)]);
            if (iv.a <= ps && pt <= iv.b && pt == ps + 1) r.act[ai](0, 0) = 1;
        }
        return r;
    }

    // The interval of an M-member (every M_x is an interval module here).
    Interval interval_of_indec(const Tuple& x) const {
        std::vector<int> supp = alg_->support(x);
        if (supp.empty()) throw std::logic_error("interval_of_indec: empty support");
        int lo = path_length(), hi = -1;
        for (int v : supp) {
            lo = std::min(lo, pos_of_vertex_[static_cast<size_t>(v)]);
            hi = std::max(hi, pos_of_vertex_[static_cast<size_t>(v)]);
        }
        if (hi - lo + 1 != static_cast<int>(supp.size()))
            throw std::logic_error("interval_of_indec: support not contiguous");
        return Interval{lo, hi};
    }

    // Identify a representation with one-dimensional contiguous fibres as an
    // interval (returns nullopt for the zero module; throws otherwise).
    std::optional<Interval> identify(const QuiverRep& r) const {
        int lo = path_length(), hi = -1;
        for (size_t p = 0; p < order_.size(); ++p) {
            int dim = r.dims[static_cast<size_t>(order_[p])];
            if (dim == 0) continue;
            if (dim != 1) throw std::logic_error("identify: fibre dimension exceeds 1");
            lo = std::min(lo, static_cast<int>(p));
            hi = std::max(hi, static_cast<int>(p));
        }
        if (hi < 0) return std::nullopt;
        if (r.total_dim() != hi - lo + 1)
            throw std::logic_error("identify: support not contiguous");
        return Interval{lo, hi};
    }

    // Display label, numbering vertices path_length()..1 from the path's
    // source, with the top written first: e.g. "2/3" for the length-two
    // module with top 2 and socle 3.
    std::string label(const Interval& iv) const {
        std::string s;
        for (int p = iv.b; p >= iv.a; --p) {
            if (!s.empty()) s += "/";
            s += std::to_string(path_length() - p);
        }
        return s;
    }

private:
    const Algebra* alg_;
    std::vector<int> order_;          // vertex index at each path position
    std::vector<int> pos_of_vertex_;  // inverse of order_
    std::vector<int> kappa_;          // projective dimensions along the path
    std::vector<Interval> intervals_;
};

namespace detail {

// Torsion-class test: quotient closure (quotients of [a,b] are the upper
// segments [c,b]) plus, via the rep backend, that the trace of the class in
// every interval module is a class member (or zero) whose cokernel admits no
// nonzero map from the class.
inline bool tiny_is_torsion_class(const TinyModel& tm, const std::vector<char>& mask,
                                  const std::vector<QuiverRep>& reps) {
    const auto& ivs = tm.intervals();
    auto index_of = [&](const Interval& iv) {
        for (size_t i = 0; i < ivs.size(); ++i)
            if (ivs[i] == iv) return static_cast<int>(i);
        return -1;
    };
    for (size_t i = 0; i < ivs.size(); ++i) {
        if (!mask[i]) continue;
        for (int c = ivs[i].a + 1; c <= ivs[i].b; ++c)
            if (!mask[static_cast<size_t>(index_of(Interval{c, ivs[i].b}))]) return false;
    }
    std::vector<const QuiverRep*> gens;
    for (size_t i = 0; i < ivs.size(); ++i)
        if (mask[i]) gens.push_back(&reps[i]);
    for (size_t m = 0; m < ivs.size(); ++m) {
        SubRep t = trace_subrep(gens, reps[m]);
        auto tm_iv = tm.identify(t.rep);
        if (tm_iv) {
            int ti = index_of(*tm_iv);
            if (ti < 0 || !mask[static_cast<size_t>(ti)]) return false;
        }
        Factorization f = factorize(t.rep, reps[m], t.incl);
        SubRep tf = trace_subrep(gens, f.cokernel);
        if (tf.rep.total_dim() != 0) return false;
    }
    return true;
}

}  // namespace detail

// All torsion classes of mod A, each as a sorted interval list, ordered by
// (size, member order) for determinism.
inline std::vector<std::vector<Interval>> classical_torsion_tiny(const TinyModel& tm) {
    const auto& ivs = tm.intervals();
    if (ivs.size() > 20)
        throw std::invalid_argument("classical_torsion_tiny: too many interval modules");
    std::vector<QuiverRep> reps;
    reps.reserve(ivs.size());
    for (const Interval& iv : ivs) reps.push_back(tm.realize(iv));
    std::vector<std::vector<Interval>> out;
    for (unsigned long bits = 0; bits < (1ul << ivs.size()); ++bits) {
        std::vector<char> mask(ivs.size(), 0);
        for (size_t i = 0; i < ivs.size(); ++i) mask[i] = (bits >> i) & 1;
        if (!detail::tiny_is_torsion_class(tm, mask, reps)) continue;
        std::vector<Interval> cls;
        for (size_t i = 0; i < ivs.size(); ++i)
            if (mask[i]) cls.push_back(ivs[i]);
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

// Least torsion class of mod A containing the given M-members: the
// intersection of all torsion classes containing them (torsion classes form
// a closure system).
inline std::vector<Interval> minimal_containing(const TinyModel& tm,
                                                const std::vector<Tuple>& members) {
    std::vector<Interval> want;
    for (const Tuple& x : members) want.push_back(tm.interval_of_indec(x));
    std::vector<char> meet(tm.intervals().size(), 1);
    bool found = false;
    for (const auto& cls : classical_torsion_tiny(tm)) {
        std::vector<char> mask(tm.intervals().size(), 0);
        for (const Interval& iv : cls)
            for (size_t i = 0; i < tm.intervals().size(); ++i)
                if (tm.intervals()[i] == iv) mask[i] = 1;
        bool contains = true;
        for (const Interval& iv : want) {
            bool in = false;
            for (const Interval& c : cls)
                if (c == iv) { in = true; break; }
            if (!in) { contains = false; break; }
        }
        if (!contains) continue;
        found = true;
        for (size_t i = 0; i < meet.size(); ++i) meet[i] = meet[i] && mask[i];
    }
    if (!found) throw std::logic_error("minimal_containing: no torsion class contains U");
    std::vector<Interval> out;
    for (size_t i = 0; i < meet.size(); ++i)
        if (meet[i]) out.push_back(tm.intervals()[i]);
    return out;
}

struct InduceCheck {
    bool ok = true;
    Interval bad_m, bad_mprime;  // offending pair when !ok
    std::string reason;
};

// Induction test for a classical torsion class T: for every M in the d-cluster
// tilting subcategory, the torsion subobject tM (trace of T in M) must again
// lie in that subcategory, and Ext^{d-1}(tM, fM') must vanish for all pairs.
inline InduceCheck check_induces(const TinyModel& tm, const std::vector<Interval>& T) {
    const Algebra& alg = tm.algebra();
    std::vector<QuiverRep> gens;
    std::vector<const QuiverRep*> gp;
    gens.reserve(T.size());
    for (const Interval& iv : T) gens.push_back(tm.realize(iv));
    for (const QuiverRep& g : gens) gp.push_back(&g);

    struct Piece {
        std::optional<Interval> t;  // torsion part
        QuiverRep trep, frep;       // tM and fM = M/tM
        Interval m;
    };
    std::vector<Piece> pieces;
    for (const Tuple& x : alg.indecs()) {
        Piece p;
        p.m = tm.interval_of_indec(x);
        QuiverRep rep = realize_module(alg, x);
        SubRep tr = trace_subrep(gp, rep);
        p.t = tm.identify(tr.rep);
        Factorization f = factorize(tr.rep, rep, tr.incl);
        p.trep = tr.rep;
        p.frep = f.cokernel;
        if (p.t) {
            bool in_M = false;
            for (const Tuple& y : alg.indecs())
                if (tm.interval_of_indec(y) == *p.t) { in_M = true; break; }
            if (!in_M)
                return InduceCheck{false, p.m, p.m,
                                   "torsion subobject leaves the d-cluster tilting subcategory"};
        }
        pieces.push_back(std::move(p));
    }
    for (const Piece& p : pieces)
        for (const Piece& q : pieces) {
            if (p.trep.total_dim() == 0 || q.frep.total_dim() == 0) continue;
            if (ext_dim(p.trep, q.frep, alg.d() - 1) != 0)
                return InduceCheck{false, p.m, q.m, "Ext^{d-1}(tM, fM') does not vanish"};
        }
    return InduceCheck{};
}

}  // namespace hntau
