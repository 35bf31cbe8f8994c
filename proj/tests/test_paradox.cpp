#include <doctest.h>

#include "paradoxkit/errors.hpp"
#include "paradoxkit/paradox.hpp"

using namespace paradoxkit;
using namespace paradoxkit::paradox;

namespace {

// Z4 acting on 4 points by rotation.
FiniteActionModel z4()
{
    FiniteActionModel m(4);
    m.add_action("r", {1, 2, 3, 0});
    m.add_action("r2", {2, 3, 0, 1});
    m.add_action("r3", {3, 0, 1, 2});
    m.add_composition("r", "r", "r2");
    m.add_composition("r", "r2", "r3");
    m.add_composition("r", "r3", "e");
    return m;
}

} // namespace

TEST_CASE("action model errors")
{
    FiniteActionModel m(3);
    CHECK_THROWS_AS(m.add_action("x", {0, 1}), ModelError);
    CHECK_THROWS_AS(m.add_action("x", {0, 0, 1}), ModelError);
    CHECK_THROWS_AS(m.add_action("x", {0, 1, 3}), ModelError);
    CHECK_THROWS_AS(m.add_action("e", {1, 0, 2}), ModelError);
    CHECK_THROWS_AS(m.add_composition("e", "nope", "e"), ModelError);
    CHECK_THROWS_AS(m.apply("nope", PointId{0}), ModelError);
    CHECK_THROWS_AS(m.apply("e", PointId{3}), ModelError);
    CHECK(m.apply("e", PointId{2}) == 2);
}

TEST_CASE("audit catches a wrong composition")
{
    auto m = z4();
    CHECK(m.audit().all_passed());
    m.add_composition("r", "r", "r3");
    const auto checks = m.audit();
    REQUIRE(checks.first_failure() != nullptr);
    CHECK(checks.first_failure()->name == "composition");
    CHECK_THROWS_AS(m.require_valid(), ModelError);
}

TEST_CASE("equidecomposition of a half onto the other half")
{
    const auto m = z4();
    EquidecompWitness w{{{0}, {1}}, {"r2", "r2"}};
    CHECK(verify_equidecomp(m, {0, 1}, {2, 3}, w).passed());

    EquidecompWitness clash{{{0}, {1}}, {"r2", "r"}};
    const auto bad = verify_equidecomp(m, {0, 1}, {2, 3}, clash);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.first_violation().empty());

    EquidecompWitness overlap{{{0, 1}, {1}}, {"e", "r"}};
    CHECK_FALSE(verify_equidecomp(m, {0, 1}, {0, 1, 2}, overlap).passed());
}

TEST_CASE("a finite bijective model is never paradoxical")
{
    // Any attempt has to reuse points: here the B pieces overlap the A pieces.
    const auto m = z4();
    ParadoxWitness w{{{0, 1}}, {{2, 3}}, {"e"}, {"e"}};
    const auto r = verify_paradox_witness(m, {0, 1, 2, 3}, w);
    CHECK_FALSE(r.passed());
    ParadoxWitness overlap{{{0, 1, 2, 3}}, {{0, 1, 2, 3}}, {"e"}, {"r"}};
    const auto r2 = verify_paradox_witness(m, {0, 1, 2, 3}, overlap);
    CHECK_FALSE(r2.passed());
    CHECK(r2.first_violation().find("pieces_disjoint") != std::string::npos);
    CHECK_THROWS_AS(verify_paradox_witness(m, {0}, ParadoxWitness{{{0}}, {{0}}, {"zz"}, {"e"}}), ModelError);
}

TEST_CASE("truncated witness bookkeeping")
{
    // Points 0..3 on a line; the mover shifts left, 0 leaves the truncation.
    TruncatedWitness w;
    w.point_count = 4;
    w.e = {0, 1, 2, 3};
    w.interior = {0, 1, 2};
    w.pieces_a = {TruncatedPiece{{0, 1, 2, 3}, "s", {{0, std::nullopt}, {1, 0}, {2, 1}, {3, 2}}}};
    w.pieces_b = {};
    const auto r = verify_truncated_witness(w);
    CHECK(r.leaked == 1);
}

TEST_CASE("F2 transported to the orbit of (0, 1, 0)")
{
    const auto cert = freeness::certify();
    REQUIRE(cert.certificate);
    const auto t = orbit_transport(4, *cert.certificate);
    CHECK(t.passed());
    CHECK(t.words.size() == words::ball_size(4));
    CHECK(t.distinct_points == t.words.size());
    CHECK_THROWS_AS(orbit_transport(0, *cert.certificate), DomainError);
}

TEST_CASE("orbit transport preconditions")
{
    auto m = freeness::build_matrix_certificate();
    REQUIRE(std::holds_alternative<freeness::FreenessCertificate>(m));
    CHECK_THROWS_AS(orbit_transport(3, std::get<freeness::FreenessCertificate>(m)), PreconditionError);

    auto cert = *freeness::certify().certificate;
    cert.transitions.pop_back();
    CHECK_THROWS_AS(orbit_transport(3, cert), PreconditionError);
}
