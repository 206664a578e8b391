#include "gwt/correlator.hpp"

#include "gwt/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace gwt;

namespace {

Insertion tau(int a, int hpow) { return Insertion{a, SurfaceClass::h_power(hpow)}; }

CorrelatorEngine& shared_engine() {
    static CorrelatorEngine engine;
    return engine;
}

std::vector<MonoInsertion> random_monos(std::mt19937& rng, int n, int max_a) {
    std::uniform_int_distribution<int> a_dist(0, max_a), c_dist(0, 2);
    std::vector<MonoInsertion> out;
    for (int i = 0; i < n; ++i) out.push_back(MonoInsertion{a_dist(rng), c_dist(rng)});
    return out;
}

} // namespace

TEST_CASE("canonical keys are permutation invariant") {
    auto k1 = CorrelatorKey::make(2, {{0, 2}, {1, 1}, {0, 2}});
    auto k2 = CorrelatorKey::make(2, {{1, 1}, {0, 2}, {0, 2}});
    CHECK(k1 == k2);
    CHECK(k1.ins.front() == MonoInsertion{1, 1});
    CHECK(k1.str() == "<tau_1(H) tau_0(H^2)^2>_{0,2}");
}

TEST_CASE("point counts through the quadratic recursion") {
    auto& engine = shared_engine();
    CHECK(engine.primary_point_count(1) == Rational(1));
    CHECK(engine.primary_point_count(2) == Rational(1));
    CHECK(engine.primary_point_count(3) == Rational(12));
    CHECK(engine.primary_point_count(4) == Rational(620));
    CHECK(engine.primary_point_count(5) == Rational(87304));
    CHECK_THROWS_AS(engine.primary_point_count(0), std::domain_error);
}

TEST_CASE("degree-one worked values") {
    auto& engine = shared_engine();
    CHECK(engine.correlator(1, {tau(0, 2), tau(0, 2)}) == Rational(1)); // lines through 2 points
    CHECK(engine.correlator(1, {tau(1, 1), tau(0, 2)}) == Rational(-1));
    CHECK(engine.correlator(1, {tau(1, 1), tau(0, 2), tau(0, 1)}) == Rational(0));
}

TEST_CASE("degree-two worked values") {
    auto& engine = shared_engine();
    CHECK(engine.correlator(2, {tau(0, 2), tau(0, 2), tau(0, 2), tau(0, 2), tau(0, 2)}) ==
          Rational(1));
    CHECK(engine.correlator(2, {tau(1, 1), tau(0, 2), tau(0, 2), tau(0, 2), tau(0, 2)}) ==
          Rational(1));
    CHECK(engine.correlator(2, {tau(1, 2), tau(0, 2), tau(0, 2), tau(0, 2)}) == Rational(1));
    CHECK(engine.correlator(2, {tau(1, 1), tau(1, 1), tau(0, 2), tau(0, 2), tau(0, 2)}) ==
          Rational(2));
    // the remaining mixed psi-powers of the five-fold tangency bracket vanish
    for (int j = 3; j <= 5; ++j) {
        std::vector<Insertion> ins;
        for (int i = 0; i < j; ++i) ins.push_back(tau(1, 1));
        for (int i = 0; i < 5 - j; ++i) ins.push_back(tau(0, 2));
        CHECK(engine.correlator(2, ins) == Rational(0));
    }
}

TEST_CASE("one-point descendents match the pencil-of-lines geometry") {
    auto& engine = shared_engine();
    CHECK(engine.one_point_descendent(1, 1, 2) == Rational(1));
    CHECK(engine.one_point_descendent(1, 2, 1) == Rational(-3));
    CHECK(engine.one_point_descendent(1, 3, 0) == Rational(6));
    CHECK(engine.one_point_descendent(1, 0, 2) == Rational(0)); // dimension gate
}

TEST_CASE("dimension gate returns zero on violating brackets") {
    auto& engine = shared_engine();
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> d_dist(0, 3), n_dist(1, 6);
    int checked = 0;
    while (checked < 100) {
        int d = d_dist(rng);
        auto monos = random_monos(rng, n_dist(rng), 3);
        auto key = CorrelatorKey::make(d, monos);
        if (key.total_psi() + key.total_codim() == 3 * d - 1 + key.points()) continue;
        CHECK(engine.eval(key) == Rational(0));
        ++checked;
    }
}

TEST_CASE("insertion order never matters") {
    auto& engine = shared_engine();
    std::mt19937 rng(202);
    std::uniform_int_distribution<int> d_dist(0, 2), n_dist(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        int d = d_dist(rng);
        int n = n_dist(rng);
        auto monos = random_monos(rng, n, 2);
        // make roughly half the trials satisfy the dimension gate
        int deficit = 3 * d - 1 + n;
        for (const auto& m : monos) deficit -= m.a + m.codim;
        if (trial % 2 == 0 && deficit > 0) monos[0].a += deficit;

        std::vector<Insertion> ins;
        for (const auto& m : monos) ins.push_back(tau(m.a, m.codim));
        Rational reference = engine.correlator(d, ins);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            std::shuffle(ins.begin(), ins.end(), rng);
            CHECK(engine.correlator(d, ins) == reference);
        }
    }
}

TEST_CASE("string, dilaton and divisor equations hold as post-hoc identities") {
    auto& engine = shared_engine();
    std::mt19937 rng(303);
    std::uniform_int_distribution<int> d_dist(1, 2), n_dist(2, 5);
    for (int trial = 0; trial < 40; ++trial) {
        int d = d_dist(rng);
        auto monos = random_monos(rng, n_dist(rng), 2);
        auto key = CorrelatorKey::make(d, monos);

        // string: <tau_0(1) P> = sum_j <... tau_{a_j - 1} ...>
        {
            Rational lhs = engine.eval(CorrelatorKey::make(
                d, [&] { auto v = monos; v.push_back({0, 0}); return v; }()));
            Rational rhs(0);
            for (std::size_t j = 0; j < monos.size(); ++j) {
                if (monos[j].a == 0) continue;
                auto v = monos;
                v[j].a -= 1;
                rhs += engine.eval(CorrelatorKey::make(d, v));
            }
            CHECK(lhs == rhs);
        }
        // dilaton: <tau_1(1) P> = (n - 2) <P>
        {
            Rational lhs = engine.eval(CorrelatorKey::make(
                d, [&] { auto v = monos; v.push_back({1, 0}); return v; }()));
            CHECK(lhs == Rational(static_cast<int>(monos.size()) - 2) * engine.eval(key));
        }
        // divisor: <tau_0(H) P> = d <P> + sum_j <... tau_{a_j-1}(H g_j) ...>
        {
            Rational lhs = engine.eval(CorrelatorKey::make(
                d, [&] { auto v = monos; v.push_back({0, 1}); return v; }()));
            Rational rhs = Rational(d) * engine.eval(key);
            for (std::size_t j = 0; j < monos.size(); ++j) {
                if (monos[j].a == 0 || monos[j].codim + 1 > 2) continue;
                auto v = monos;
                v[j].a -= 1;
                v[j].codim += 1;
                rhs += engine.eval(CorrelatorKey::make(d, v));
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("trr expansion reproduces the worked instances") {
    auto& engine = shared_engine();
    // <tau_1(H) tau_0(H^2) tau_0(H)>_{0,1} expands to zero
    auto key1 = CorrelatorKey::make(1, {{1, 1}, {0, 2}, {0, 1}});
    Rational total(0);
    for (const auto& t : engine.trr_expand(key1, 0))
        total += t.coefficient * engine.eval(t.left) * engine.eval(t.right);
    CHECK(total == Rational(0));

    // <tau_1(H) tau_0(H^2)^4>_{0,2} expands to one
    auto key2 = CorrelatorKey::make(2, {{1, 1}, {0, 2}, {0, 2}, {0, 2}, {0, 2}});
    total = Rational(0);
    for (const auto& t : engine.trr_expand(key2, 0))
        total += t.coefficient * engine.eval(t.left) * engine.eval(t.right);
    CHECK(total == Rational(1));
}

TEST_CASE("trr companion choice does not matter") {
    auto& engine = shared_engine();
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> d_dist(0, 2), n_dist(3, 6);
    int done = 0;
    while (done < 20) {
        int d = d_dist(rng);
        auto monos = random_monos(rng, n_dist(rng), 2);
        auto key = CorrelatorKey::make(d, monos);
        if (key.ins[0].a < 1) continue;

        auto value_with = [&](int c1, int c2) {
            Rational v(0);
            for (const auto& t : engine.trr_expand(key, 0, c1, c2))
                v += t.coefficient * engine.eval(t.left) * engine.eval(t.right);
            return v;
        };
        auto coeff_sum_with = [&](int c1, int c2) {
            Rational v(0);
            for (const auto& t : engine.trr_expand(key, 0, c1, c2)) v += t.coefficient;
            return v;
        };
        int n = key.points();
        Rational canonical = value_with(1, 2);
        CHECK(canonical == value_with(n - 2, n - 1));
        CHECK(canonical == value_with(1, n - 1));
        CHECK(coeff_sum_with(1, 2) == coeff_sum_with(n - 2, n - 1));
        ++done;
    }
}

TEST_CASE("trr preconditions") {
    auto& engine = shared_engine();
    auto too_few = CorrelatorKey::make(1, {{1, 1}, {0, 2}});
    CHECK_THROWS_AS(engine.trr_expand(too_few, 0), std::domain_error);
    auto no_psi = CorrelatorKey::make(1, {{0, 2}, {0, 2}, {0, 1}});
    CHECK_THROWS_AS(engine.trr_expand(no_psi, 0), std::domain_error);
}

TEST_CASE("pure-correlator route equals the recursion") {
    auto& engine = shared_engine();
    for (int d = 1; d <= 4; ++d) {
        std::vector<Insertion> points(static_cast<std::size_t>(3 * d - 1), tau(0, 2));
        CHECK(engine.correlator(d, points) == engine.primary_point_count(d));
    }
}

TEST_CASE("topological-recursion route re-derives the point counts") {
    auto& engine = shared_engine();
    for (int d = 2; d <= 4; ++d)
        CHECK(engine.primary_point_count_via_trr(d) == engine.primary_point_count(d));
}

TEST_CASE("mixed classes split by linearity") {
    auto& engine = shared_engine();
    SurfaceClass mixed = SurfaceClass::hyperplane() + SurfaceClass::point_class();
    // <tau_1(H + H^2) tau_0(H^2)> at d=1 picks out the H part only
    CHECK(engine.correlator(1, {Insertion{1, mixed}, tau(0, 2)}) == Rational(-1));
    Rational lhs = engine.correlator(1, {Insertion{1, mixed}, Insertion{0, mixed}});
    // tau_1(H)tau_0(H^2) + tau_1(H^2)tau_0(H): -1 + tau_1(H^2)tau_0(H)
    Rational expected = Rational(-1) + engine.correlator(1, {tau(1, 2), tau(0, 1)});
    CHECK(lhs == expected);
}

TEST_CASE("degenerate brackets evaluate to zero by convention") {
    auto& engine = shared_engine();
    CHECK(engine.eval(CorrelatorKey::make(0, {{0, 2}, {0, 2}})) == Rational(0)); // unstable
    CHECK(engine.eval(CorrelatorKey::make(0, {{1, 0}, {0, 2}, {0, 0}, {0, 0}})) == Rational(1));
    CHECK(engine.correlator(0, {tau(0, 2), tau(0, 1), tau(0, 0)}) == Rational(0)); // H^3
}

TEST_CASE("trace reports rules and cache statistics") {
    CorrelatorEngine engine;
    CorrelatorEngine::TraceNode root;
    engine.correlator(1, {tau(1, 1), tau(0, 2)}, &root);
    REQUIRE(!root.children.empty());
    CHECK(root.children[0]->rule == "inverse-divisor");
    CHECK(root.depth() > 2);
    auto stats = engine.stats();
    CHECK(stats.lookups > 0);
    CHECK(stats.entries > 0);
}
