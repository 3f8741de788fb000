#pragma once

// Combinatorial skeleton of the higher Nakayama algebras A_l^d: Kupisch
// series, os-tuples, the leads-to relation, tau_d, and the quiver data
// handed to the representation backend.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hntau {

using Tuple = std::vector<int>;

// Colexicographic order: compare last coordinates first.
inline bool colex_less(const Tuple& a, const Tuple& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

inline std::string tuple_to_string(const Tuple& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

struct KupischError {
    enum Kind { FirstEntryNotOne, GrowthViolation };
    Kind kind;
    int index;

    std::string message() const {
        if (kind == FirstEntryNotOne) return "Kupisch series must start with 1";
        return "Kupisch entry at index " + std::to_string(index) +
               " violates 2 <= l_i <= l_{i-1}+1";
    }
};

class KupischSeries {
public:
    static std::variant<KupischSeries, KupischError> validate(const std::vector<int>& entries) {
        if (entries.empty() || entries[0] != 1)
            return KupischError{KupischError::FirstEntryNotOne, 0};
        for (size_t i = 1; i < entries.size(); ++i) {
            if (entries[i] < 2 || entries[i] > entries[i - 1] + 1)
                return KupischError{KupischError::GrowthViolation, static_cast<int>(i)};
        }
        KupischSeries s;
        s.entries_ = entries;
        return s;
    }

    explicit KupischSeries(const std::vector<int>& entries) {
        auto v = validate(entries);
        if (auto* err = std::get_if<KupischError>(&v))
            throw std::invalid_argument(err->message());
        entries_ = entries;
    }

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const KupischSeries& o) const { return entries_ == o.entries_; }

private:
    KupischSeries() = default;
    std::vector<int> entries_;
};

// All tuples of os_l^k in colexicographic order.
inline std::vector<Tuple> enumerate_os(const KupischSeries& ell, int k) {
    if (k < 1) throw std::invalid_argument("enumerate_os: arity must be >= 1");
    const int n = ell.size();
    std::vector<Tuple> out;
    Tuple cur(static_cast<size_t>(k));
    // Depth-first over weakly increasing tuples; the ll filter only involves
    // the first and last coordinates.
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == k) {
            if (cur[static_cast<size_t>(k - 1)] - cur[0] + 1 <= ell[cur[static_cast<size_t>(k - 1)]])
                out.push_back(cur);
            return;
        }
        for (int v = low; v < n; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

class Algebra {
public:
    struct Arrow {
        int source;  // vertex index
        int target;  // vertex index; target tuple = source tuple + e_coord
        int coord;
    };

    Algebra(KupischSeries ell, int d)
        : ell_(std::move(ell)), d_(d) {
        if (d_ < 1) throw std::invalid_argument("Algebra: d must be >= 1");
        vertices_ = enumerate_os(ell_, d_);
        indecs_ = enumerate_os(ell_, d_ + 1);
        for (size_t i = 0; i < vertices_.size(); ++i) vindex_[vertices_[i]] = static_cast<int>(i);
        for (size_t i = 0; i < indecs_.size(); ++i) xindex_[indecs_[i]] = static_cast<int>(i);
        for (size_t s = 0; s < vertices_.size(); ++s) {
            for (int c = 0; c < d_; ++c) {
                Tuple t = vertices_[s];
                t[static_cast<size_t>(c)] += 1;
                auto it = vindex_.find(t);
                if (it != vindex_.end())
                    arrows_.push_back(Arrow{static_cast<int>(s), it->second, c});
            }
        }
    }

    const KupischSeries& kupisch() const { return ell_; }
    int d() const { return d_; }
    int n() const { return ell_.size(); }
    const std::vector<Tuple>& vertices() const { return vertices_; }
    const std::vector<Tuple>& indecs() const { return indecs_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_index(const Tuple& y) const {
        auto it = vindex_.find(y);
        return it == vindex_.end() ? -1 : it->second;
    }
    int indec_index(const Tuple& x) const {
        auto it = xindex_.find(x);
        return it == xindex_.end() ? -1 : it->second;
    }

    // Membership in os_l^k for the tuple's own arity.
    bool in_os(const Tuple& t) const {
        if (t.empty()) return false;
        for (size_t i = 0; i < t.size(); ++i) {
            if (t[i] < 0 || t[i] >= n()) return false;
            if (i && t[i] < t[i - 1]) return false;
        }
        return t.back() - t.front() + 1 <= ell_[t.back()];
    }

    // x_0 <= y_0 <= x_1 <= y_1 <= ... <= x_k <= y_k. Defined on plain integer
    // tuples so tau_d shifts below zero are legal arguments.
    static bool leads_to(const Tuple& x, const Tuple& y) {
        if (x.size() != y.size()) throw std::invalid_argument("leads_to: arity mismatch");
        for (size_t i = 0; i < x.size(); ++i) {
            if (!(x[i] <= y[i])) return false;
            if (i + 1 < x.size() && !(y[i] <= x[i + 1])) return false;
        }
        return true;
    }

    int hom_dim(const Tuple& x, const Tuple& y) const { return leads_to(x, y) ? 1 : 0; }

    static Tuple shifted(const Tuple& x, int delta) {
        Tuple t = x;
        for (int& c : t) c += delta;
        return t;
    }

    bool is_projective(const Tuple& x) const {
        return x.front() == x.back() + 1 - ell_[x.back()];
    }

    // Vertex (arity d) -> its projective (d+1)-tuple.
    Tuple projective_of(const Tuple& y) const {
        if (static_cast<int>(y.size()) != d_)
            throw std::invalid_argument("projective_of: expected a vertex tuple");
        Tuple x;
        x.reserve(y.size() + 1);
        x.push_back(y.back() + 1 - ell_[y.back()]);
        x.insert(x.end(), y.begin(), y.end());
        return x;
    }

    // Projective (d+1)-tuple -> its vertex.
    Tuple vertex_of_projective(const Tuple& x) const {
        if (!is_projective(x))
            throw std::invalid_argument("vertex_of_projective: tuple is not projective");
        return Tuple(x.begin() + 1, x.end());
    }

    // M_x is injective in mod A iff it is not in the image of tau_d, i.e.
    // x+(1,...,1) is outside os or indexes a projective. (The bare
    // "x+(1,...,1) outside os" test undercounts, e.g. for l=(1,2,2) where
    // (0,0,1)+(1,1,1) = (1,1,2) is projective; the count of injectives must
    // equal |A|.)
    bool is_injective(const Tuple& x) const {
        Tuple t = shifted(x, +1);
        return !in_os(t) || is_projective(t);
    }

    std::optional<Tuple> tau(const Tuple& x) const {
        if (is_projective(x)) return std::nullopt;
        return shifted(x, -1);
    }

    std::optional<Tuple> tau_inverse(const Tuple& x) const {
        if (is_injective(x)) return std::nullopt;
        return shifted(x, +1);
    }

    // dim Ext^d(M_x, M_y) via higher AR duality: Hom(M_y, tau_d(M_x)) modulo
    // maps factoring through injectives. A composite of basis maps along
    // y -> z -> w is nonzero exactly when y leads to w (support boxes of a
    // leads-to chain always share a vertex in that case), so the map
    // factors through an injective iff some injective z sits between.
    int ext_d_dim(const Tuple& x, const Tuple& y) const {
        auto t = tau(x);
        if (!t || !leads_to(y, *t)) return 0;
        for (const Tuple& z : indecs_)
            if (is_injective(z) && leads_to(y, z) && leads_to(z, *t)) return 0;
        return 1;
    }

    // Vertices supporting M_x: the box x_0 <= y_0 <= x_1 <= y_1 <= ... <= x_d.
    std::vector<int> support(const Tuple& x) const {
        std::vector<int> out;
        for (size_t v = 0; v < vertices_.size(); ++v) {
            const Tuple& y = vertices_[v];
            bool ok = true;
            for (int i = 0; i < d_; ++i) {
                if (!(x[static_cast<size_t>(i)] <= y[static_cast<size_t>(i)] &&
                      y[static_cast<size_t>(i)] <= x[static_cast<size_t>(i) + 1])) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(static_cast<int>(v));
        }
        return out;
    }

    // True when the quiver is a single path (A_l^d itself is then a classical
    // Nakayama algebra; used by tiny mode).
    bool linear_quiver() const {
        std::vector<int> outdeg(vertices_.size(), 0), indeg(vertices_.size(), 0);
        for (const Arrow& a : arrows_) {
            ++outdeg[static_cast<size_t>(a.source)];
            ++indeg[static_cast<size_t>(a.target)];
        }
        for (size_t v = 0; v < vertices_.size(); ++v)
            if (outdeg[v] > 1 || indeg[v] > 1) return false;
        return true;
    }

    // Vertex indices in path order (source of the path first); requires a
    // linear quiver.
    std::vector<int> path_order() const {
        if (!linear_quiver()) throw std::invalid_argument("path_order: quiver branches");
        std::vector<int> next(vertices_.size(), -1);
        std::vector<int> indeg(vertices_.size(), 0);
        for (const Arrow& a : arrows_) {
            next[static_cast<size_t>(a.source)] = a.target;
            ++indeg[static_cast<size_t>(a.target)];
        }
        int start = -1;
        for (size_t v = 0; v < vertices_.size(); ++v)
            if (indeg[v] == 0) start = static_cast<int>(v);
        std::vector<int> order;
        for (int v = start; v != -1; v = next[static_cast<size_t>(v)]) order.push_back(v);
        if (order.size() != vertices_.size())
            throw std::invalid_argument("path_order: quiver is not connected as a path");
        return order;
    }

private:
    KupischSeries ell_;
    int d_;
    std::vector<Tuple> vertices_;
    std::vector<Tuple> indecs_;
    std::map<Tuple, int> vindex_, xindex_;
    std::vector<Arrow> arrows_;
};

}  // namespace hntau
