#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hntau/tau_tilting.hpp>
#include <hntau/tiny.hpp>

#include <algorithm>
#include <map>
#include <set>

using namespace hntau;

namespace {

const std::vector<std::vector<int>> kTestSeries = {{1, 2}, {1, 2, 2}, {1, 2, 3}, {1, 2, 3, 2, 3}};

QuiverRep regular_rep(const Algebra& alg, std::vector<QuiverRep>& storage) {
    storage.clear();
    for (const Tuple& x : alg.indecs())
        if (alg.is_projective(x)) storage.push_back(realize_module(alg, x));
    std::vector<const QuiverRep*> ptrs;
    for (const QuiverRep& r : storage) ptrs.push_back(&r);
    return direct_sum(alg, ptrs).rep;
}

std::vector<Tuple> sorted_summands(const CoresolveResult& c) {
    std::vector<Tuple> out;
    for (const auto& term : c.terms) out.insert(out.end(), term.begin(), term.end());
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

}  // namespace

TEST_CASE("I1/I2 formulas on the frozen Table examples") {
    Algebra alg(KupischSeries({1, 2}), 2);
    CHECK(ext_d_projective_set(alg, {{0, 1, 1}, {1, 1, 1}}) ==
          std::vector<Tuple>{{0, 1, 1}, {1, 1, 1}});
    CHECK(support_projective_set(alg, {{0, 1, 1}, {1, 1, 1}}) ==
          std::vector<Tuple>{{0, 0, 0}});
    CHECK(ext_d_projective_set(alg, {{1, 1, 1}}) == std::vector<Tuple>{{1, 1, 1}});
    CHECK(support_projective_set(alg, {{1, 1, 1}}) ==
          std::vector<Tuple>{{0, 0, 0}, {0, 0, 1}});
    CHECK(ext_d_projective_set(alg, {}).empty());
    CHECK(support_projective_set(alg, {}) ==
          std::vector<Tuple>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}});
}

TEST_CASE("pair_of on Table rows and the count law everywhere") {
    Algebra alg(KupischSeries({1, 2}), 2);
    TauRigidPair row2 = pair_of(alg, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    CHECK(row2.module_part == std::vector<Tuple>{{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    CHECK(row2.proj_part.empty());
    TauRigidPair top = pair_of(alg, alg.indecs());
    CHECK(top.module_part == std::vector<Tuple>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}});
    CHECK(top.proj_part.empty());
    TauRigidPair row5 = pair_of(alg, {{0, 0, 0}});
    CHECK(row5.module_part == std::vector<Tuple>{{0, 0, 0}});
    CHECK(row5.proj_part == std::vector<Tuple>{{0, 0, 1}, {0, 1, 1}});

    for (const auto& s : kTestSeries) {
        Algebra a(KupischSeries(s), 2);
        CAPTURE(s);
        for (const auto& node : enumerate_classes(a).nodes) {
            TauRigidPair p = pair_of(a, node);  // asserts rigidity + count law
            CHECK(p.module_part.size() + p.proj_part.size() == a.vertices().size());
        }
    }
}

TEST_CASE("rigidity on frozen examples") {
    Algebra alg(KupischSeries({1, 2}), 2);
    CHECK(is_rigid_pair(alg, {{0, 0, 0}, {0, 0, 1}}, {{0, 1, 1}}));
    CHECK_FALSE(is_rigid_pair(alg, alg.indecs(), {}));
    CHECK(is_rigid_pair(alg, {}, {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}}));
}

TEST_CASE("maximality: certificates, counterexamples, non-surjectivity") {
    Algebra alg(KupischSeries({1, 2}), 2);
    CHECK(is_maximal_pair(alg, {{0, 0, 0}, {0, 0, 1}}, {{0, 1, 1}}).ok);
    MaximalityResult bad = is_maximal_pair(alg, {{0, 0, 0}, {0, 0, 1}}, {});
    CHECK_FALSE(bad.ok);
    CHECK(bad.witness == Tuple{0, 1, 1});

    // every pair produced from an enumerated class is maximal
    for (const auto& s : kTestSeries) {
        Algebra a(KupischSeries(s), 2);
        CAPTURE(s);
        for (const auto& node : enumerate_classes(a).nodes) {
            TauRigidPair p = pair_of(a, node);
            CHECK(is_maximal_pair(a, p.module_part, p.proj_part).ok);
        }
    }

    // ...but the maximal pair above is not in the image of pair_of
    for (const auto& node : enumerate_classes(alg).nodes) {
        TauRigidPair p = pair_of(alg, node);
        bool same = p.module_part == std::vector<Tuple>{{0, 0, 0}, {0, 0, 1}} &&
                    p.proj_part == std::vector<Tuple>{{0, 1, 1}};
        CHECK_FALSE(same);
    }
}

TEST_CASE("pair_of is injective across each lattice") {
    for (const auto& s : kTestSeries) {
        Algebra a(KupischSeries(s), 2);
        CAPTURE(s);
        std::set<std::pair<std::vector<Tuple>, std::vector<Tuple>>> seen;
        auto lat = enumerate_classes(a);
        for (const auto& node : lat.nodes) {
            TauRigidPair p = pair_of(a, node);
            seen.insert({p.module_part, p.proj_part});
        }
        CHECK(seen.size() == lat.nodes.size());
    }
}

TEST_CASE("coresolve: the running-example coresolution of A") {
    Algebra alg(KupischSeries({1, 2}), 2);
    std::vector<QuiverRep> storage;
    QuiverRep A = regular_rep(alg, storage);
    std::vector<Tuple> row2 = {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    CoresolveResult c = coresolve(A, alg, row2);
    REQUIRE(c.terms.size() == 3);
    CHECK(c.terms[0] == std::vector<Tuple>{{0, 0, 1}, {0, 0, 1}, {0, 1, 1}});  // 2/3+2/3+1/2
    CHECK(c.terms[1] == std::vector<Tuple>{{0, 1, 1}});                        // 1/2
    CHECK(c.terms[2] == std::vector<Tuple>{{1, 1, 1}});                        // 1
    CHECK(c.kernel.total_dim() == 0);  // this class is faithful
}

TEST_CASE("coresolve: support tau-tilting module in tiny mode") {
    Algebra alg(KupischSeries({1, 2}), 2);
    TinyModel tm(alg);
    // T = 2/3 + 2 + 1/2 (the middle summand is an interval module outside M)
    QuiverRep s23 = realize_module(alg, {0, 0, 1});
    QuiverRep s2 = tm.realize(Interval{1, 1});
    QuiverRep s12 = realize_module(alg, {0, 1, 1});
    QuiverRep T = direct_sum(alg, {&s23, &s2, &s12}).rep;
    CoresolveResult c = coresolve(T, alg, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    REQUIRE(c.terms.size() == 2);
    CHECK(c.terms[0] == std::vector<Tuple>{{0, 0, 1}, {0, 1, 1}, {0, 1, 1}});  // 2/3+1/2+1/2
    CHECK(c.terms[1] == std::vector<Tuple>{{1, 1, 1}});                        // 1
    CHECK(c.kernel.total_dim() == 0);
}

TEST_CASE("coresolve: member of add(U) resolves in one identity step") {
    Algebra alg(KupischSeries({1, 2}), 2);
    std::vector<Tuple> row2 = {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    CoresolveResult c = coresolve(realize_module(alg, {0, 0, 1}), alg, row2);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0] == std::vector<Tuple>{{0, 0, 1}});
    CHECK(c.conn.empty());
    CHECK(c.kernel.total_dim() == 0);
}

TEST_CASE("coresolution oracle agrees with the I1 formula on every class") {
    for (const auto& s : kTestSeries) {
        Algebra a(KupischSeries(s), 2);
        CAPTURE(s);
        std::vector<QuiverRep> storage;
        QuiverRep A = regular_rep(a, storage);
        for (const auto& node : enumerate_classes(a).nodes) {
            CoresolveResult c = coresolve(A, a, node);
            std::set<Tuple> distinct;
            for (const auto& term : c.terms) distinct.insert(term.begin(), term.end());
            std::vector<Tuple> i1 = ext_d_projective_set(a, node);
            CHECK(distinct == std::set<Tuple>(i1.begin(), i1.end()));
        }
    }
}

TEST_CASE("Ext^d-projectivity of I1 members") {
    // rep-backend Ext on the small algebras, combinatorial Ext on the big one
    for (const auto& s : kTestSeries) {
        Algebra a(KupischSeries(s), 2);
        CAPTURE(s);
        bool use_rep = a.indecs().size() <= 10;
        std::map<Tuple, QuiverRep> reps;
        if (use_rep)
            for (const Tuple& x : a.indecs()) reps.emplace(x, realize_module(a, x));
        for (const auto& node : enumerate_classes(a).nodes) {
            for (const Tuple& u : ext_d_projective_set(a, node))
                for (const Tuple& v : node) {
                    if (use_rep)
                        CHECK(ext_dim(reps.at(u), reps.at(v), a.d()) == 0);
                    else
                        CHECK(a.ext_d_dim(u, v) == 0);
                }
        }
    }
}

TEST_CASE("d-tilting consequences of the Ext^d-projective generator") {
    Algebra alg(KupischSeries({1, 2}), 2);
    std::vector<QuiverRep> storage;
    QuiverRep A = regular_rep(alg, storage);
    for (const auto& node : enumerate_classes(alg).nodes) {
        TauRigidPair p = pair_of(alg, node);
        if (p.module_part.empty()) continue;
        std::vector<QuiverRep> parts;
        for (const Tuple& m : p.module_part) parts.push_back(realize_module(alg, m));
        std::vector<const QuiverRep*> ptrs;
        for (const QuiverRep& r : parts) ptrs.push_back(&r);
        QuiverRep MU = direct_sum(alg, ptrs).rep;
        for (int i = 1; i <= alg.d(); ++i) CHECK(ext_dim(MU, MU, i) == 0);
        // 0 -> A/ker -> U_0 -> ... -> 0 is exact: certified inside coresolve
        CHECK_NOTHROW(coresolve(A, alg, node));
    }
}

TEST_CASE("fac_intersect: examples and partial-inverse law") {
    Algebra alg(KupischSeries({1, 2}), 2);
    CHECK(fac_intersect(alg, {{0, 0, 0}, {0, 0, 1}}) ==
          std::vector<Tuple>{{0, 0, 0}, {0, 0, 1}});
    CHECK(fac_intersect(alg, {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}}) == alg.indecs());
    for (const auto& s : kTestSeries) {
        Algebra a(KupischSeries(s), 2);
        CAPTURE(s);
        for (const auto& node : enumerate_classes(a).nodes)
            CHECK(fac_intersect(a, pair_of(a, node).module_part) == node);
    }
}

TEST_CASE("weak d-APR tilting modules") {
    Algebra alg(KupischSeries({1, 2}), 2);
    std::vector<Tuple> t = weak_d_APR(alg, {0, 0, 0});
    CHECK(t == std::vector<Tuple>{{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    // the induced class is Fac(T) in M, and its pair recovers T
    std::vector<Tuple> cls = fac_intersect(alg, t);
    CHECK_FALSE(check_axioms(alg, cls).has_value());
    TauRigidPair p = pair_of(alg, cls);
    CHECK(p.module_part == t);
    CHECK(p.proj_part.empty());

    CHECK_THROWS_AS(weak_d_APR(alg, {0, 0, 1}), NotSimpleProjectiveError);   // not simple
    CHECK_THROWS_AS(weak_d_APR(alg, {1, 1, 1}), NotSimpleProjectiveError);   // not projective
    Algebra point(KupischSeries({1}), 2);
    CHECK_THROWS_AS(weak_d_APR(point, {0, 0, 0}), IsInjectiveError);         // injective
}

TEST_CASE("slices: frozen examples") {
    Algebra a122(KupischSeries({1, 2, 2}), 2);
    std::vector<Tuple> slice1 = {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}};
    CHECK(is_slice(a122, slice1));

    Algebra big(KupischSeries({1, 2, 3, 2, 3}), 2);
    std::vector<Tuple> slice2 = {{2, 2, 2}, {1, 1, 2}, {1, 2, 2}, {2, 2, 3}, {2, 3, 3},
                                 {0, 0, 2}, {0, 1, 2}, {0, 2, 2}, {2, 2, 4}, {2, 3, 4},
                                 {2, 4, 4}};
    CHECK(is_slice(big, slice2));
    // slice2's distinguishing feature: it contains a non-projective together
    // with no tau-translate clash, yet (2,2,2) and its translate are both
    // non-projective
    CHECK_FALSE(big.is_projective({2, 2, 2}));
    CHECK_FALSE(big.is_projective({1, 1, 1}));

    // violating condition (2): both x and tau x present
    Algebra alg(KupischSeries({1, 2}), 2);
    CHECK_FALSE(is_slice(alg, {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
}

TEST_CASE("slice enumeration and d-tilting consequences") {
    Algebra alg(KupischSeries({1, 2}), 2);
    auto found = enumerate_slices(alg);
    // exactly two slices: A itself and the weak d-APR tilt at (0,0,0)
    std::set<std::vector<Tuple>> got(found.begin(), found.end());
    CHECK(got == std::set<std::vector<Tuple>>{
                     {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}},
                     {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}},
                 });

    Algebra a122(KupischSeries({1, 2, 2}), 2);
    auto slices122 = enumerate_slices(a122);
    std::vector<Tuple> slice1 = {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}};
    bool contains = false;
    for (const auto& s : slices122)
        if (s == slice1) contains = true;
    CHECK(contains);

    // every enumerated slice passes the checkable d-tilting consequences
    for (const Algebra* ap : {&alg, &a122}) {
        std::vector<QuiverRep> storage;
        QuiverRep A = regular_rep(*ap, storage);
        for (const auto& S : enumerate_slices(*ap)) {
            CAPTURE(S.size());
            CHECK(is_slice(*ap, S));
            CHECK(is_rigid_pair(*ap, S, {}));
            std::vector<QuiverRep> parts;
            for (const Tuple& m : S) parts.push_back(realize_module(*ap, m));
            std::vector<const QuiverRep*> ptrs;
            for (const QuiverRep& r : parts) ptrs.push_back(&r);
            QuiverRep Srep = direct_sum(*ap, ptrs).rep;
            for (int i = 1; i <= ap->d(); ++i) CHECK(ext_dim(Srep, Srep, i) == 0);
            // A embeds into add(S) via the coresolution of the class S generates
            std::vector<Tuple> cls = closure(*ap, S);
            CoresolveResult c = coresolve(A, *ap, cls);
            CHECK(c.kernel.total_dim() == 0);
            std::set<Tuple> in_S(S.begin(), S.end());
            for (const auto& term : c.terms)
                for (const Tuple& t : term) CHECK(in_S.count(t));
        }
    }
}
