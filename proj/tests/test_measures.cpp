#include <doctest.h>

#include "paradoxkit/errors.hpp"
#include "paradoxkit/measures.hpp"

using namespace paradoxkit;
using namespace paradoxkit::measures;
using exactlin::ratio;

namespace {

const Check* find(const CheckList& l, const std::string& name)
{
    for (const auto& c : l.checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

// Z2 swapping two points.
GroupAction swap2() { return GroupAction{2, {{0, 1}, {1, 0}}}; }

} // namespace

TEST_CASE("Boolean axioms hold in the canonical models")
{
    CHECK(verify_boolean_axioms(FiniteBooleanAlgebra::power_set(3)).all_passed());
    CHECK(verify_boolean_axioms(FiniteBooleanAlgebra::two_element()).all_passed());
    CHECK(verify_boolean_axioms(FiniteBooleanAlgebra::power_set(0)).all_passed());
    CHECK_THROWS_AS(FiniteBooleanAlgebra::power_set(9), ResourceError);
}

TEST_CASE("a corrupted complement breaks axiom iii")
{
    auto ba = FiniteBooleanAlgebra::power_set(3);
    ba.set_complement(1, 2);
    const auto checks = verify_boolean_axioms(ba);
    const auto* bad = checks.first_failure();
    REQUIRE(bad != nullptr);
    CHECK(bad->name == "axiom_iii_complement");
    CHECK_FALSE(bad->detail.empty());
    CHECK_THROWS_AS(construct_probability_measure(ba), PreconditionError);
}

TEST_CASE("probability measure on atoms")
{
    const auto ba = FiniteBooleanAlgebra::power_set(3);
    const auto mu = construct_probability_measure(ba);
    CHECK(mu.atoms.size() == 3);
    for (Element s : {1, 2, 4})
        CHECK(mu.values[s] == ratio(1, 3));
    CHECK(mu.values[7] == 1);
    CHECK(mu.values[6] == ratio(2, 3));
    CHECK(audit_measure(ba, mu).all_passed());

    const auto two = FiniteBooleanAlgebra::two_element();
    const auto m2 = construct_probability_measure(two);
    CHECK(m2.values[two.one()] == 1);
    CHECK(m2.values[two.zero()] == 0);

    auto broken = mu;
    broken.values[6] = ratio(1, 2);
    CHECK_FALSE(audit_measure(ba, broken).all_passed());
}

TEST_CASE("point masses")
{
    PointMassMeasure mu{{ratio(1, 2), ratio(1, 3), ratio(1, 6)}};
    CHECK(mu(0b101) == ratio(2, 3));
    CHECK(audit_measure(mu).all_passed());
    mu.mass[0] = ratio(1, 3);
    CHECK(find(audit_measure(mu), "total_mass_one")->passed == false);
}

TEST_CASE("uniform measure on finite groups")
{
    const auto z3 = uniform_group_measure(GroupTable::cyclic(3));
    CHECK(z3.measure(0b011) == ratio(2, 3));
    CHECK(z3.checks.all_passed());
    CHECK(z3.subsets_checked == 8);

    const auto trivial = uniform_group_measure(GroupTable::cyclic(1));
    CHECK(trivial.measure(1) == 1);

    for (const auto& g : GroupTable::small_groups()) {
        CHECK(g.audit().all_passed());
        CHECK(uniform_group_measure(g).checks.all_passed());
    }
    CHECK_THROWS_AS(uniform_group_measure(GroupTable(2, {0, 0, 0, 0})), ModelError);
}

TEST_CASE("group tables")
{
    const auto s3 = GroupTable::symmetric3();
    CHECK(s3.order() == 6);
    bool abelian = true;
    for (Element g = 0; g < 6; ++g)
        for (Element h = 0; h < 6; ++h)
            abelian = abelian && s3.mul(g, h) == s3.mul(h, g);
    CHECK_FALSE(abelian);
    const auto z4 = GroupTable::cyclic(4);
    CHECK(z4.left(1, 0b0011) == 0b0110);
    CHECK(z4.right(0b1000, 1) == 0b0001);
    CHECK(z4.inverse(1) == 3);
    CHECK_THROWS_AS(GroupTable(2, {0, 1, 1}), ModelError);
}

TEST_CASE("density windows")
{
    DensityWindow evens{10, {0, 2, 4, 6, 8, 10}};
    CHECK(density_measure(evens) == ratio(1, 2));
    CHECK(shift_defect(evens) == 0);

    DensityWindow block{10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
    CHECK(density_measure(block) == 1);
    CHECK(shift_defect(block) == ratio(1, 10));

    CHECK_THROWS_AS(validate(DensityWindow{0, {}}), DomainError);
    CHECK_THROWS_AS(validate(DensityWindow{5, {7}}), DomainError);
}

TEST_CASE("sigma for Z2 swapping two points")
{
    const auto g = GroupTable::cyclic(2);
    const PointMassMeasure mu{{ratio(1, 2), ratio(1, 2)}};
    const Sigma sigma(g, swap2(), mu);
    CHECK(sigma(0b01) == ratio(1, 2));
    CHECK(sigma(0b11) == 1);
    CHECK(sigma.f(0b01, 0) == ratio(1, 2));
    const auto r = sigma_report(g, swap2(), mu);
    CHECK(r.passed());
    CHECK(r.orbits == 1);
    CHECK(r.mu_invariant);
    CHECK(r.sigma_singletons == std::vector<Rational>{ratio(1, 2), ratio(1, 2)});
}

TEST_CASE("sigma for Z3 on three orbits with a skewed mu")
{
    const auto g = GroupTable::cyclic(3);
    GroupAction act{9, {}};
    for (Element k = 0; k < 3; ++k) {
        std::vector<Element> row(9);
        for (Element x = 0; x < 9; ++x)
            row[x] = (x / 3) * 3 + (x % 3 + k) % 3;
        act.images.push_back(row);
    }
    CHECK(audit_action(g, act).all_passed());
    PointMassMeasure mu{{ratio(1, 10), ratio(1, 20), ratio(1, 20), ratio(1, 5), ratio(1, 10), ratio(1, 10),
                         ratio(1, 30), ratio(1, 5), ratio(1, 6)}};
    REQUIRE(audit_measure(mu).all_passed());
    const auto r = sigma_report(g, act, mu);
    CHECK(r.passed());
    CHECK(r.orbits == 3);
    CHECK_FALSE(r.mu_invariant);
}

TEST_CASE("sigma preconditions")
{
    const auto g = GroupTable::cyclic(2);
    const PointMassMeasure uniform{{ratio(1, 2), ratio(1, 2)}};
    CHECK_THROWS_AS(sigma_report(g, GroupAction{2, {{0, 1}, {0, 1}}}, uniform), PreconditionError);
    CHECK_THROWS_AS(sigma_report(g, GroupAction{2, {{0, 1}, {0, 0}}}, uniform), ModelError);
    CHECK_THROWS_AS(sigma_report(g, swap2(), PointMassMeasure{{ratio(1, 2), ratio(1, 3)}}), PreconditionError);
    CHECK_THROWS_AS(sigma_report(GroupTable::cyclic(17), GroupAction{17, {}}, uniform), Error);
}

TEST_CASE("contradiction chain on the F2 cell witness")
{
    const auto w = f2_cell_witness();
    REQUIRE(w.cells() == 5);
    const std::vector<Rational> nu(5, ratio(1, 5));

    const auto assumed = paradox_contradiction(w, nu, true);
    CHECK(assumed.chain_closes);
    CHECK(assumed.contradiction);
    CHECK_FALSE(assumed.failing_link);
    CHECK(assumed.nu_x == 1);

    const auto measured = paradox_contradiction(w, nu, false);
    CHECK_FALSE(measured.chain_closes);
    REQUIRE(measured.failing_link);
    CHECK(*measured.failing_link == "invariance");
    CHECK(measured.links[1].lhs == ratio(4, 5));
    CHECK(measured.links[1].rhs == 2);

    auto uncovered = w;
    uncovered.moved_a[1] &= ~Subset{1};
    const auto bad = paradox_contradiction(uncovered, nu, true);
    REQUIRE(bad.failing_link);
    CHECK(*bad.failing_link == "covering");

    CHECK_THROWS_AS(paradox_contradiction(w, std::vector<Rational>(4, ratio(1, 4)), true), DomainError);
}

TEST_CASE("contradiction on a model: the zero measure closes without contradiction")
{
    const auto w = f2_cell_witness();
    const auto r = paradox_contradiction(w, std::vector<Rational>(5, Rational(0)), false);
    CHECK(r.chain_closes);
    CHECK_FALSE(r.contradiction);
}

TEST_CASE("ergodic averages")
{
    const StepFunction one{{Rational(0)}, {Rational(1)}};
    const auto r1 = ergodic_average(ratio(1, 7), ratio(1, 2), one, 20);
    CHECK(r1.value == 1);
    CHECK(r1.defect == 0);

    const StepFunction third{{Rational(0), ratio(1, 3)}, {Rational(1), Rational(0)}};
    const auto r3 = ergodic_average(ratio(1, 3), Rational(0), third, 3);
    CHECK(r3.value == ratio(1, 3));
    CHECK(r3.defect == 0);
    CHECK(r3.within_bound());

    const auto r4 = ergodic_average(ratio(1, 3), Rational(0), third, 4);
    CHECK(r4.value == ratio(1, 2));
    CHECK(r4.within_bound());

    CHECK_THROWS_AS(ergodic_average(ratio(1, 3), Rational(0), third, 0), DomainError);
    CHECK_THROWS_AS((StepFunction{{ratio(1, 2)}, {Rational(1)}}.validate()), DomainError);
}
