#pragma once

// Command dispatch shared by the command-line tool and the test suites:
// enumerate / pair / silting / slices / table emitters plus the `verify`
// invariant battery.

#include "io.hpp"

#include <future>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hntau {

enum class Command { Enumerate, Pair, Silting, Verify, Slices, Table };
enum class Format { Json, Csv, Dot, Md };

struct RunConfig {
    std::vector<int> kupisch;
    int d = 2;
    Command command = Command::Enumerate;
    Format format = Format::Json;
    std::optional<std::vector<Tuple>> cls;  // explicit class selector
    bool allow_d1 = false;
    bool tiny = false;
    int jobs = 1;
};

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariantBreach = 3;

namespace detail {

inline QuiverRep regular_representation(const Algebra& alg, std::vector<QuiverRep>& storage) {
    storage.clear();
    for (const Tuple& x : alg.indecs())
        if (alg.is_projective(x)) storage.push_back(realize_module(alg, x));
    std::vector<const QuiverRep*> ptrs;
    for (const QuiverRep& r : storage) ptrs.push_back(&r);
    return direct_sum(alg, ptrs).rep;
}

// Validates a user-supplied class selector: known tuples, T1/T2-closed.
// Returns the canonical sorted member list.
inline std::vector<Tuple> resolve_class(const Algebra& alg, const std::vector<Tuple>& sel,
                                        std::ostream& err, int& exit_code) {
    std::vector<char> mask(alg.indecs().size(), 0);
    for (const Tuple& t : sel) {
        int i = alg.indec_index(t);
        if (i < 0) {
            err << "error: tuple " << tuple_to_string(t) << " is not in os_l^" << alg.d() + 1
                << "\n";
            exit_code = kExitUsage;
            return {};
        }
        mask[static_cast<size_t>(i)] = 1;
    }
    std::vector<Tuple> members;
    for (size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) members.push_back(alg.indecs()[i]);
    if (auto v = check_axioms(alg, members)) {
        err << "error: class violates axiom " << (v->axiom == AxiomViolation::T1 ? "T1" : "T2")
            << ": x=" << tuple_to_string(v->x) << " z=" << tuple_to_string(v->z)
            << " requires " << tuple_to_string(v->missing) << "\n";
        exit_code = kExitVerifyFail;
        return {};
    }
    exit_code = kExitOk;
    return members;
}

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string witness;
};

// The cross-module invariant battery behind `verify`.
inline std::vector<CheckResult> run_verify(const Algebra& alg, bool tiny, int jobs) {
    std::vector<CheckResult> results;
    auto add = [&](const std::string& name, bool ok, const std::string& witness = "") {
        results.push_back(CheckResult{name, ok, witness});
    };

    TorsionLattice lat = enumerate_classes(alg);

    // Every node satisfies the axioms; top and bottom are present.
    {
        bool ok = true;
        std::string w;
        for (const auto& I : lat.nodes)
            if (auto v = check_axioms(alg, I)) {
                ok = false;
                w = "node violates axioms at " + tuple_to_string(v->x);
                break;
            }
        bool top = false, bottom = false;
        std::vector<Tuple> empty_closed = closure(alg, {});
        for (const auto& I : lat.nodes) {
            if (I == alg.indecs()) top = true;
            if (I == empty_closed) bottom = true;
        }
        add("lattice: nodes closed, top and bottom present", ok && top && bottom, w);
    }

    // Exhaustive subset cross-check on small algebras.
    if (alg.indecs().size() <= 16) {
        TorsionContext ctx(alg);
        const size_t m = ctx.size();
        std::set<std::vector<Tuple>> brute;
        for (uint32_t bits = 0; bits < (1u << m); ++bits) {
            std::vector<char> mask(m, 0);
            for (size_t i = 0; i < m; ++i) mask[i] = (bits >> i) & 1 ? 1 : 0;
            if (!ctx.check(mask)) brute.insert(ctx.to_members(mask));
        }
        std::set<std::vector<Tuple>> enumd(lat.nodes.begin(), lat.nodes.end());
        add("lattice: NextClosure equals exhaustive subset filter", brute == enumd);
    }

    // Per-class pair laws.
    {
        bool count_ok = true, rigid_ok = true, maximal_ok = true, fac_ok = true;
        std::string w_count, w_rigid, w_max, w_fac;
        for (const auto& I : lat.nodes) {
            TauRigidPair pair = pair_of(alg, I);
            if (pair.module_part.size() + pair.proj_part.size() != alg.vertices().size()) {
                count_ok = false;
                w_count = "class " + tuples_csv_field(I);
            }
            if (!is_rigid_pair(alg, pair.module_part, pair.proj_part)) {
                rigid_ok = false;
                w_rigid = "class " + tuples_csv_field(I);
            }
            MaximalityResult mr = is_maximal_pair(alg, pair.module_part, pair.proj_part);
            if (!mr.ok) {
                maximal_ok = false;
                w_max = mr.reason + " at " + tuple_to_string(mr.witness);
            }
            if (fac_intersect(alg, pair.module_part) != I) {
                fac_ok = false;
                w_fac = "class " + tuples_csv_field(I);
            }
        }
        add("pairs: |M_U| + |P_U| = |A|", count_ok, w_count);
        add("pairs: tau_d-rigidity", rigid_ok, w_rigid);
        add("pairs: maximality biconditionals", maximal_ok, w_max);
        add("pairs: Fac(M_U) recovers the class", fac_ok, w_fac);
    }

    // Coresolution of A: distinct summands equal the Ext^d-projective set.
    {
        bool ok = true;
        std::string w;
        std::vector<QuiverRep> storage;
        QuiverRep A = regular_representation(alg, storage);
        for (const auto& I : lat.nodes) {
            CoresolveResult c = coresolve(A, alg, I);
            std::set<Tuple> seen;
            for (const auto& term : c.terms) seen.insert(term.begin(), term.end());
            std::vector<Tuple> got(seen.begin(), seen.end());
            std::sort(got.begin(), got.end(), colex_less);
            if (got != ext_d_projective_set(alg, I)) {
                ok = false;
                w = "class " + tuples_csv_field(I);
                break;
            }
        }
        add("coresolution: summands of coresolve(A, U) = I1", ok, w);
    }

    // Combinatorial oracle vs representation oracle on indecomposable pairs.
    if (alg.indecs().size() <= 10) {
        bool ok = true;
        std::string w;
        std::vector<QuiverRep> reps;
        for (const Tuple& x : alg.indecs()) reps.push_back(realize_module(alg, x));
        for (size_t i = 0; i < reps.size() && ok; ++i)
            for (size_t j = 0; j < reps.size() && ok; ++j) {
                const Tuple &x = alg.indecs()[i], &y = alg.indecs()[j];
                if (alg.hom_dim(x, y) != hom_dim_rep(reps[i], reps[j])) {
                    ok = false;
                    w = "hom mismatch at " + tuple_to_string(x) + " -> " + tuple_to_string(y);
                }
                if (alg.ext_d_dim(x, y) != ext_dim(reps[i], reps[j], alg.d())) {
                    ok = false;
                    w = "ext^d mismatch at " + tuple_to_string(x) + " -> " + tuple_to_string(y);
                }
            }
        add("oracles: combinatorial Hom/Ext^d agree with representations", ok, w);
    }

    // Silting: presilting + count + generation witness for every class.
    {
        auto one = [&](size_t idx) -> std::string {
            const auto& I = lat.nodes[idx];
            TauRigidPair pair = pair_of(alg, I);
            std::vector<ProjComplex> parts = summand_complexes(alg, pair);
            ProjComplex S = complex_sum_labeled(alg, parts);
            if (!in_P_d_M(S)) return "assembled complex outside P_d(M) for class " +
                                     tuples_csv_field(I);
            try {
                SiltingCertificate cert = is_silting(alg, S, parts);
                if (!cert.silting) return "certificate failed for class " + tuples_csv_field(I);
            } catch (const WitnessNotFoundError& e) {
                return std::string("witness failed: ") + e.what();
            }
            return "";
        };
        std::string w;
        int njobs = jobs < 1 ? 1 : jobs;
        if (njobs == 1) {
            for (size_t i = 0; i < lat.nodes.size() && w.empty(); ++i) w = one(i);
        } else {
            for (size_t base = 0; base < lat.nodes.size() && w.empty();
                 base += static_cast<size_t>(njobs)) {
                std::vector<std::future<std::string>> futs;
                for (size_t i = base;
                     i < lat.nodes.size() && i < base + static_cast<size_t>(njobs); ++i)
                    futs.push_back(std::async(std::launch::async, one, i));
                for (auto& f : futs) {
                    std::string r = f.get();
                    if (!r.empty() && w.empty()) w = r;
                }
            }
        }
        add("silting: presilting + count + witness for every class", w.empty(), w);
    }

    // Slice consequences on small algebras.
    if (alg.indecs().size() <= 24) {
        bool ok = true;
        std::string w;
        for (const auto& S : enumerate_slices(alg)) {
            if (!is_rigid_pair(alg, S, {})) {
                ok = false;
                w = "slice not rigid: " + tuples_csv_field(S);
                break;
            }
            if (S.size() != alg.vertices().size()) {
                ok = false;
                w = "slice summand count off: " + tuples_csv_field(S);
                break;
            }
        }
        add("slices: every slice is tau_d-rigid with |A| summands", ok, w);
    }

    // Tiny-mode bridge on linear quivers.
    if (tiny && alg.linear_quiver()) {
        bool ok = true;
        std::string w;
        TinyModel tm(alg);
        for (const auto& I : lat.nodes) {
            try {
                std::vector<Interval> T = minimal_containing(tm, I);
                InduceCheck ic = check_induces(tm, T);
                if (!ic.ok) {
                    ok = false;
                    w = "induction check failed for class " + tuples_csv_field(I) + ": " +
                        ic.reason;
                    break;
                }
            } catch (const std::logic_error& e) {
                ok = false;
                w = e.what();
                break;
            }
        }
        add("tiny: minimal containing torsion class induces each class", ok, w);
    }

    return results;
}

}  // namespace detail

// Executes a run configuration, writing the artifact to `out` and
// diagnostics to `err`; returns the process exit code.
inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::unique_ptr<Algebra> alg_holder;
    try {
        if (cfg.d < 1) {
            err << "error: d must be >= 1\n";
            return kExitUsage;
        }
        if (cfg.d == 1 && !cfg.allow_d1) {
            err << "error: d = 1 is the classical case; pass --allow-d1 to proceed\n";
            return kExitUsage;
        }
        KupischSeries ell(cfg.kupisch);
        alg_holder = std::make_unique<Algebra>(ell, cfg.d);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const Algebra& alg = *alg_holder;
    if (cfg.tiny && !alg.linear_quiver()) {
        err << "error: --tiny requires a linear quiver\n";
        return kExitUsage;
    }
    if (cfg.format == Format::Dot && cfg.command != Command::Enumerate) {
        err << "error: dot output is only available for enumerate\n";
        return kExitUsage;
    }

    try {
        Labeler lab(alg);

        // Resolve the class selection once; empty optional means "all".
        std::vector<std::vector<Tuple>> selection;
        if (cfg.cls) {
            int code = kExitOk;
            std::vector<Tuple> members = detail::resolve_class(alg, *cfg.cls, err, code);
            if (code != kExitOk) return code;
            selection.push_back(members);
        }

        switch (cfg.command) {
            case Command::Enumerate: {
                TorsionLattice lat = enumerate_classes(alg);
                switch (cfg.format) {
                    case Format::Json: {
                        Json j = lattice_json(alg, lat);
                        if (cfg.tiny) {
                            TinyModel tm(alg);
                            Json mins = Json::array();
                            for (const auto& I : lat.nodes) {
                                Json labels = Json::array();
                                for (const Interval& iv : minimal_containing(tm, I))
                                    labels.push_back(tm.label(iv));
                                mins.push_back(labels);
                            }
                            j["minimal_torsion_classes"] = mins;
                        }
                        out << j.dump(2) << "\n";
                        break;
                    }
                    case Format::Csv:
                        out << lattice_csv(alg, lat);
                        break;
                    case Format::Dot:
                        out << lattice_dot(alg, lat);
                        break;
                    case Format::Md:
                        if (cfg.tiny) {
                            TinyModel tm(alg);
                            out << "| class | minimal torsion class | module part | "
                                   "projective part |\n|---|---|---|---|\n";
                            for (const auto& I : lat.nodes) {
                                TauRigidPair pair = pair_of(alg, I);
                                std::string mid;
                                for (const Interval& iv : minimal_containing(tm, I)) {
                                    if (!mid.empty()) mid += "⊕";
                                    mid += tm.label(iv);
                                }
                                if (mid.empty()) mid = "0";
                                out << "| " << lab.module_list(I) << " | " << mid << " | "
                                    << lab.module_list(pair.module_part) << " | "
                                    << lab.module_list(pair.proj_part) << " |\n";
                            }
                        } else {
                            out << pairs_md(alg, enumerate_classes(alg));
                        }
                        break;
                }
                return kExitOk;
            }

            case Command::Pair:
            case Command::Silting: {
                if (selection.empty()) {
                    TorsionLattice lat = enumerate_classes(alg);
                    selection = lat.nodes;
                }
                const bool with_complex = cfg.command == Command::Silting;
                switch (cfg.format) {
                    case Format::Json: {
                        Json arr = Json::array();
                        for (const auto& I : selection) {
                            TauRigidPair pair = pair_of(alg, I);
                            Json j = pair_json(alg, I, pair);
                            if (with_complex)
                                j["complex"] = complex_json(alg, assemble(alg, pair));
                            arr.push_back(j);
                        }
                        Json root;
                        root["algebra"] = algebra_json(alg);
                        root["classes"] = arr;
                        out << root.dump(2) << "\n";
                        break;
                    }
                    case Format::Csv: {
                        out << (with_complex
                                    ? "members,module_part,proj_part,complex\n"
                                    : "members,module_part,proj_part\n");
                        for (const auto& I : selection) {
                            TauRigidPair pair = pair_of(alg, I);
                            out << "\"" << tuples_csv_field(I) << "\",\""
                                << tuples_csv_field(pair.module_part) << "\",\""
                                << tuples_csv_field(pair.proj_part) << "\"";
                            if (with_complex)
                                out << ",\"" << lab.complex(assemble(alg, pair)) << "\"";
                            out << "\n";
                        }
                        break;
                    }
                    case Format::Md: {
                        out << (with_complex ? "| class | pair | complex |\n|---|---|---|\n"
                                             : "| class | module part | projective part "
                                               "|\n|---|---|---|\n");
                        for (const auto& I : selection) {
                            TauRigidPair pair = pair_of(alg, I);
                            if (with_complex)
                                out << "| " << lab.module_list(I) << " | ("
                                    << lab.module_list(pair.module_part) << ", "
                                    << lab.module_list(pair.proj_part) << ") | "
                                    << lab.complex(assemble(alg, pair)) << " |\n";
                            else
                                out << "| " << lab.module_list(I) << " | "
                                    << lab.module_list(pair.module_part) << " | "
                                    << lab.module_list(pair.proj_part) << " |\n";
                        }
                        break;
                    }
                    case Format::Dot:
                        break;  // rejected above
                }
                return kExitOk;
            }

            case Command::Slices: {
                std::vector<std::vector<Tuple>> slices = enumerate_slices(alg);
                switch (cfg.format) {
                    case Format::Json: {
                        Json root;
                        root["algebra"] = algebra_json(alg);
                        Json arr = Json::array();
                        for (const auto& S : slices) arr.push_back(tuples_json(S));
                        root["slices"] = arr;
                        out << root.dump(2) << "\n";
                        break;
                    }
                    case Format::Csv:
                        out << "index,members\n";
                        for (size_t i = 0; i < slices.size(); ++i)
                            out << i << ",\"" << tuples_csv_field(slices[i]) << "\"\n";
                        break;
                    case Format::Md:
                        out << "| slice |\n|---|\n";
                        for (const auto& S : slices)
                            out << "| " << lab.module_list(S) << " |\n";
                        break;
                    case Format::Dot:
                        break;  // rejected above
                }
                return kExitOk;
            }

            case Command::Table: {
                TorsionLattice lat = enumerate_classes(alg);
                if (alg.linear_quiver()) {
                    TinyModel tm(alg);
                    out << "| class | minimal torsion class | pair | complex "
                           "|\n|---|---|---|---|\n";
                    for (const auto& I : lat.nodes) {
                        TauRigidPair pair = pair_of(alg, I);
                        std::string mid;
                        for (const Interval& iv : minimal_containing(tm, I)) {
                            if (!mid.empty()) mid += "⊕";
                            mid += tm.label(iv);
                        }
                        if (mid.empty()) mid = "0";
                        out << "| " << lab.module_list(I) << " | " << mid << " | ("
                            << lab.module_list(pair.module_part) << ", "
                            << lab.module_list(pair.proj_part) << ") | "
                            << lab.complex(assemble(alg, pair)) << " |\n";
                    }
                } else {
                    out << silting_md(alg, lat);
                }
                return kExitOk;
            }

            case Command::Verify: {
                std::vector<detail::CheckResult> checks =
                    detail::run_verify(alg, cfg.tiny || alg.linear_quiver(), cfg.jobs);
                bool all_ok = true;
                for (const auto& c : checks) {
                    out << (c.ok ? "ok   " : "FAIL ") << c.name;
                    if (!c.ok && !c.witness.empty()) out << " — " << c.witness;
                    out << "\n";
                    all_ok = all_ok && c.ok;
                }
                out << (all_ok ? "verify: all checks passed\n" : "verify: FAILURES above\n");
                return all_ok ? kExitOk : kExitVerifyFail;
            }
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "internal invariant breach: " << e.what() << "\n";
        return kExitInvariantBreach;
    }
}

}  // namespace hntau
