#include <doctest.h>

#include "homhom/census.hpp"
#include "homhom/classifier.hpp"
#include "homhom/configurations.hpp"
#include "homhom/homogeneity.hpp"

using namespace homhom;

TEST_CASE("labels on the named examples") {
    HHLabel i5 = classify_hh_finite(OrientedGraph(5));
    CHECK(i5.cls == HHClass::empty_graph);
    CHECK(i5.k == 5);

    HHLabel two = classify_hh_finite(k_copies(cycle_c3(), 2));
    CHECK(two.cls == HHClass::disjoint_c3);
    CHECK(two.k == 2);

    HHLabel one = classify_ph_finite(cycle_c3());
    CHECK(one.cls == HHClass::disjoint_c3);
    CHECK(one.k == 1);

    HHLabel mixed = classify_hh_finite(disjoint_union({cycle_c3(), OrientedGraph(1)}));
    REQUIRE(mixed.cls == HHClass::not_hh);
    CHECK(std::holds_alternative<ReasonComponentAgesDiffer>(*mixed.reason));

    HHLabel s5 = classify_ph_finite(circular_tournament(2));
    REQUIRE(s5.cls == HHClass::not_hh);
    CHECK(std::holds_alternative<ReasonWitness>(*s5.reason));

    HHLabel p2 = classify_hh_finite(get_config(ConfigName::P2));
    REQUIRE(p2.cls == HHClass::not_hh);
    CHECK(std::holds_alternative<ReasonInducedP2>(*p2.reason));

    // two copies of an arc: no induced 2-path, components are isomorphic
    // tournaments, so the certificate is non-homogeneity of the component
    HHLabel twol2 = classify_ph_finite(k_copies(transitive_tournament(2), 2));
    REQUIRE(twol2.cls == HHClass::not_hh);
    CHECK(std::holds_alternative<ReasonComponentNotHomogeneous>(*twol2.reason));

    // disconnected with a non-tournament component and no induced 2-path
    HHLabel twol1 = classify_hh_finite(k_copies(get_config(ConfigName::L1), 2));
    REQUIRE(twol1.cls == HHClass::not_hh);
    CHECK(std::holds_alternative<ReasonComponentNotTournament>(*twol1.reason));
}

TEST_CASE("reasons re-verify") {
    std::vector<OrientedGraph> graphs = {
        get_config(ConfigName::P2),
        disjoint_union({cycle_c3(), OrientedGraph(1)}),
        k_copies(transitive_tournament(2), 2),
        k_copies(get_config(ConfigName::L1), 2),
        circular_tournament(2),
        blowup(cycle_c3(), {2, 1, 1}),
        transitive_tournament(4),
    };
    for (const auto& g : graphs) {
        HHLabel l = classify_hh_finite(g);
        REQUIRE(l.cls == HHClass::not_hh);
        CHECK(verify_reason(g, *l.reason));
    }
}

TEST_CASE("every not-hh certificate re-verifies across the small census") {
    for (int n = 1; n <= 4; ++n)
        for (const OrientedGraph& g : enumerate_oriented_graphs(n)) {
            HHLabel l = classify_hh_finite(g);
            if (l.cls == HHClass::not_hh) CHECK(verify_reason(g, *l.reason));
        }
}

TEST_CASE("classifier agrees with brute force up to 5 vertices") {
    auto bad = verify_against_bruteforce(5);
    CHECK(bad.empty());
    for (const auto& d : bad)
        MESSAGE("disagreement at ", to_string(d.graph), " classifier=", d.classifier_hh,
                " brute=", d.bruteforce_hh);
}

TEST_CASE("hh census graphs pass the bounded ph check") {
    for (int n = 1; n <= 5; ++n)
        for (const OrientedGraph& g : enumerate_oriented_graphs(n))
            if (classify_hh_finite(g).hh()) CHECK(is_ph_up_to(g, 2));
}

TEST_CASE("describe renders every label shape") {
    CHECK(describe(classify_hh_finite(OrientedGraph(2))) == "empty-graph k=2");
    CHECK(describe(classify_hh_finite(cycle_c3())) == "disjoint-c3 k=1");
    CHECK(describe(classify_hh_finite(get_config(ConfigName::P2))).find("induced 2-path") !=
          std::string::npos);
}
