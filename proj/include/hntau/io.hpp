#pragma once

// Serialization of algebras, lattices, pairs and complexes: JSON (stable
// field order), CSV, DOT (Hasse covers only) and markdown tables with
// socle-series labels whenever the quiver is linear.

#include "complexes.hpp"
#include "tiny.hpp"
#include "torsion.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hntau {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Labels

// Renders indecomposables through the socle-series dictionary ("2/3") when
// the quiver is linear, tuple notation otherwise.
class Labeler {
public:
    explicit Labeler(const Algebra& alg) : alg_(&alg) {
        if (alg.linear_quiver()) tiny_.emplace(alg);
    }

    std::string indec(const Tuple& x) const {
        if (tiny_) return tiny_->label(tiny_->interval_of_indec(x));
        return tuple_to_string(x);
    }

    std::string module_list(const std::vector<Tuple>& xs) const {
        if (xs.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) s += "⊕";  // oplus
            s += indec(xs[i]);
        }
        return s;
    }

    std::string complex(const ProjComplex& S) const {
        std::string s;
        for (size_t k = 0; k < S.comps.size(); ++k) {
            if (k) s += " → ";  // rightwards arrow
            s += module_list(S.comps[k]);
        }
        return s;
    }

private:
    const Algebra* alg_;
    std::optional<TinyModel> tiny_;
};

// ---------------------------------------------------------------------------
// JSON

inline Json tuple_json(const Tuple& t) {
    Json a = Json::array();
    for (int v : t) a.push_back(v);
    return a;
}

inline Json tuples_json(const std::vector<Tuple>& ts) {
    Json a = Json::array();
    for (const Tuple& t : ts) a.push_back(tuple_json(t));
    return a;
}

inline Tuple tuple_from_json(const Json& j) {
    Tuple t;
    for (const auto& v : j) t.push_back(v.get<int>());
    return t;
}

inline std::vector<Tuple> tuples_from_json(const Json& j) {
    std::vector<Tuple> out;
    for (const auto& e : j) out.push_back(tuple_from_json(e));
    return out;
}

inline Json algebra_json(const Algebra& alg) {
    Json j;
    j["kupisch"] = alg.kupisch().entries();
    j["d"] = alg.d();
    return j;
}

inline Json pair_json(const Algebra& alg, const std::vector<Tuple>& members,
                      const TauRigidPair& pair) {
    Labeler lab(alg);
    Json j;
    j["class"] = tuples_json(members);
    j["module_part"] = tuples_json(pair.module_part);
    j["proj_part"] = tuples_json(pair.proj_part);
    j["display"] = "(" + lab.module_list(pair.module_part) + ", " +
                   lab.module_list(pair.proj_part) + ")";
    return j;
}

inline Json matrix_json(const QMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

// degrees: entry k describes degree k - d; diff k maps degree k - d to k - d + 1.
inline Json complex_json(const Algebra& alg, const ProjComplex& S) {
    Labeler lab(alg);
    Json j;
    Json degs = Json::object();
    for (size_t k = 0; k < S.comps.size(); ++k)
        degs[std::to_string(static_cast<int>(k) - alg.d())] = tuples_json(S.comps[k]);
    j["degrees"] = degs;
    Json diffs = Json::array();
    for (const RepMap& dmap : S.cpx.diffs) {
        Json per_vertex = Json::array();
        for (const QMat& m : dmap) per_vertex.push_back(matrix_json(m));
        diffs.push_back(per_vertex);
    }
    j["diffs"] = diffs;
    j["display"] = lab.complex(S);
    return j;
}

inline Json lattice_json(const Algebra& alg, const TorsionLattice& lat) {
    Json j;
    j["algebra"] = algebra_json(alg);
    Json nodes = Json::array();
    for (const auto& members : lat.nodes) nodes.push_back(tuples_json(members));
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const auto& [a, b] : lat.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = edges;
    return j;
}

// ---------------------------------------------------------------------------
// DOT (cover relations only)

inline std::string lattice_dot(const Algebra& alg, const TorsionLattice& lat) {
    Labeler lab(alg);
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n";
    for (size_t i = 0; i < lat.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << lab.module_list(lat.nodes[i]) << "\"];\n";
    for (const auto& [a, b] : lat.edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// CSV

inline std::string tuples_csv_field(const std::vector<Tuple>& ts) {
    std::string s;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i) s += ";";
        s += tuple_to_string(ts[i]);
    }
    return s;
}

inline std::string lattice_csv(const Algebra& alg, const TorsionLattice& lat) {
    std::ostringstream os;
    os << "index,size,members,module_part,proj_part\n";
    for (size_t i = 0; i < lat.nodes.size(); ++i) {
        TauRigidPair pair = pair_of(alg, lat.nodes[i]);
        os << i << "," << lat.nodes[i].size() << ",\"" << tuples_csv_field(lat.nodes[i])
           << "\",\"" << tuples_csv_field(pair.module_part) << "\",\""
           << tuples_csv_field(pair.proj_part) << "\"\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Markdown tables

inline std::string pairs_md(const Algebra& alg, const TorsionLattice& lat) {
    Labeler lab(alg);
    std::ostringstream os;
    os << "| class | module part | projective part |\n|---|---|---|\n";
    for (const auto& members : lat.nodes) {
        TauRigidPair pair = pair_of(alg, members);
        os << "| " << lab.module_list(members) << " | " << lab.module_list(pair.module_part)
           << " | " << lab.module_list(pair.proj_part) << " |\n";
    }
    return os.str();
}

inline std::string silting_md(const Algebra& alg, const TorsionLattice& lat) {
    Labeler lab(alg);
    std::ostringstream os;
    os << "| class | pair | complex |\n|---|---|---|\n";
    for (const auto& members : lat.nodes) {
        TauRigidPair pair = pair_of(alg, members);
        ProjComplex S = assemble(alg, pair);
        os << "| " << lab.module_list(members) << " | (" << lab.module_list(pair.module_part)
           << ", " << lab.module_list(pair.proj_part) << ") | " << lab.complex(S) << " |\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Class-selector parsing: semicolon-separated tuples, each a comma-separated
// integer list, parentheses optional: "(0,0,1);(0,1,1)" or "0,0,1;0,1,1".

inline std::vector<Tuple> parse_class_selector(const std::string& text) {
    std::vector<Tuple> out;
    std::string cur;
    auto flush = [&]() {
        std::string body;
        for (char c : cur)
            if (c != '(' && c != ')' && c != ' ') body += c;
        if (body.empty()) return;
        Tuple t;
        std::istringstream is(body);
        std::string item;
        while (std::getline(is, item, ',')) {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("bad tuple entry: " + item);
            t.push_back(v);
        }
        out.push_back(t);
        cur.clear();
    };
    for (char c : text) {
        if (c == ';') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

}  // namespace hntau
