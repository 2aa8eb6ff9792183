#include <doctest.h>

#include <map>

#include "multieuler/errors.hpp"
#include "multieuler/period.hpp"
#include "multieuler/rotor.hpp"

#include "fixtures.hpp"
#include "generators.hpp"

using namespace multieuler;
using namespace multieuler::tests;

TEST_CASE("rotor_step advances then moves") {
    // forced steps around the 3-cycle
    RotorState s = default_rotor_state(c3(), 0);
    for (int expected_edge : {0, 1, 2, 0, 1, 2}) {
        auto [next, e] = rotor_step(c3(), s);
        CHECK(e == expected_edge);
        CHECK(next.walker == c3().edge(expected_edge).head);
        s = next;
    }

    // at b with order (1,2) pointing at edge 1, the next exit is edge 2
    RotorState at_b;
    at_b.cyclic_orders = {{0}, {1, 2}};
    at_b.positions = {0, 0}; // index 0 = edge 1
    at_b.walker = 1;
    auto [after, edge] = rotor_step(g2(), at_b);
    CHECK(edge == 2);
    CHECK(after.positions[1] == 1);
    CHECK(after.walker == 0);

    // a loop keeps the walker in place
    auto [stay, loop_edge] = rotor_step(loop_graph(), default_rotor_state(loop_graph()));
    CHECK(loop_edge == 0);
    CHECK(stay.walker == 0);
}

TEST_CASE("rotor_step validates its input") {
    RotorState bad;
    bad.cyclic_orders = {{0}, {1, 1}}; // not a permutation
    bad.positions = {0, 0};
    bad.walker = 0;
    CHECK_THROWS_AS(rotor_step(g2(), bad), Error);
    CHECK_THROWS_AS(rotor_step(g2(), default_rotor_state(c3())), DimensionMismatch);
}

TEST_CASE("run_until_periodic on the fixtures") {
    SettlingReport c = run_until_periodic(c3(), default_rotor_state(c3()));
    CHECK(c.period == 3);
    CHECK(c.transient_length == 0);
    CHECK(c.periodic_tour.edge_ids.size() == 3);
    CHECK(c.is_multi_eulerian);

    // the worked two-vertex example: rotors (0) at a, (1,2) at b, walker a
    RotorState s;
    s.cyclic_orders = {{0}, {1, 2}};
    s.positions = {0, 1};
    s.walker = 0;
    SettlingReport r = run_until_periodic(g2(), s);
    CHECK(r.period == 4);
    CHECK(r.is_multi_eulerian);

    SettlingReport l = run_until_periodic(loop_graph(), default_rotor_state(loop_graph()));
    CHECK(l.transient_length == 0);
    CHECK(l.period == 1);
    CHECK(l.periodic_tour.edge_ids == std::vector<int>{0});
    CHECK(l.is_multi_eulerian);
}

TEST_CASE("period equals the length of the periodic tour") {
    SplitMix64 rng(71);
    for (int i = 0; i < 20; ++i) {
        DirectedMultigraph g = random_scc_graph(rng, 4, 7);
        SettlingReport r = run_until_periodic(g, default_rotor_state(g));
        CHECK(r.period == static_cast<std::int64_t>(r.periodic_tour.edge_ids.size()));
        CHECK(Int(r.period) == minimal_tour_length(g));
        CHECK(r.is_multi_eulerian);
    }
}

TEST_CASE("the settled window uses each exit pi_tail times") {
    RotorState s;
    s.cyclic_orders = {{0}, {2, 1}};
    s.positions = {0, 0};
    s.walker = 1;
    SettlingReport r = run_until_periodic(g2(), s);
    std::vector<Int> pi = primitive_period_vector(g2()).entries;
    std::map<int, int> uses;
    for (int e : r.periodic_tour.edge_ids) {
        ++uses[e];
    }
    for (int e = 0; e < g2().edge_count(); ++e) {
        CHECK(Int(uses[e]) == pi[g2().edge(e).tail]);
    }
}

TEST_CASE("the full state sequence repeats with the settled period") {
    RotorState s = default_rotor_state(t3(), 1);
    SettlingReport r = run_until_periodic(t3(), s);

    // step transient + 2*period times; edges after the transient must repeat
    std::vector<int> edges;
    RotorState cur = s;
    for (std::int64_t i = 0; i < r.transient_length + 2 * r.period; ++i) {
        auto [next, e] = rotor_step(t3(), cur);
        edges.push_back(e);
        cur = next;
    }
    for (std::int64_t i = r.transient_length; i + r.period <
         static_cast<std::int64_t>(edges.size()); ++i) {
        CHECK(edges[i] == edges[i + r.period]);
    }
}

TEST_CASE("cap exhaustion reports CapExceeded") {
    CHECK_THROWS_AS(run_until_periodic(c3(), default_rotor_state(c3()), 2), CapExceeded);
}

TEST_CASE("check_settles on the fixtures") {
    SettlingAggregate c = check_settles(c3(), 10, 1234);
    CHECK(c.trials == 10);
    CHECK(c.passes == 10);
    CHECK(c.failures == 0);
    CHECK(c.expected_period == 3);

    SettlingAggregate g = check_settles(g2(), 50, 7);
    CHECK(g.passes == 50);
    CHECK(g.expected_period == 4);

    SettlingAggregate t = check_settles(t3(), 50, 7);
    CHECK(t.passes == 50);
    CHECK(t.expected_period == 6);
}

TEST_CASE("check_settles is deterministic per seed") {
    SettlingAggregate a = check_settles(t3(), 25, 99);
    SettlingAggregate b = check_settles(t3(), 25, 99);
    CHECK(a.passes == b.passes);
    CHECK(a.failures == b.failures);
    CHECK(a.max_transient == b.max_transient);
    CHECK(a.expected_period == b.expected_period);
}

TEST_CASE("settling errors") {
    CHECK_THROWS_AS(run_until_periodic(build_graph({"a"}, {}), RotorState{{{}}, {0}, 0}),
                    NoEdges);
    CHECK_THROWS_AS(check_settles(build_graph({"a", "b"}, {{"a", "b"}}), 5, 1),
                    NotStronglyConnected);
}
