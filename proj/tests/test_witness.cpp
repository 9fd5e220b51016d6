#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqdepth/constructions.hpp"
#include "sqdepth/corpus.hpp"
#include "sqdepth/errors.hpp"
#include "sqdepth/koszul.hpp"

using namespace sqdepth;

namespace {

Monomial m(std::initializer_list<int> idx) { return Monomial::from_indices({idx}); }

int depth_mod_extra(const Instance& inst, Monomial extra, FieldSpec field) {
    MonomialIdeal bottom = ideal_sum(inst.J, minimalize(inst.n, {extra}));
    return depth_of(SqModule{inst.n, inst.I, bottom}, field);
}

void check_witness_shape(const Instance& inst, const CycleWitness& w) {
    REQUIRE(w.r_index >= 1);
    REQUIRE(w.r_index <= inst.r());
    REQUIRE(int(w.coefficients.size()) == inst.r());
    CHECK(w.coefficients[w.r_index - 1] == "0");
    REQUIRE(w.m_index >= 1);
    CHECK(w.m_index != w.r_index);
    CHECK(w.coefficients[w.m_index - 1] != "0");
    Monomial fr = inst.F[w.r_index - 1], fm = inst.F[w.m_index - 1];
    CHECK(fr.has_var(w.j));
    CHECK(!fm.has_var(w.j));
    CHECK(w.boundary_vanishes);
    CHECK(w.nonzero);
    CHECK(w.nonzero_in_homology);
}

}  // namespace

TEST_CASE("cycle descent on the five-generator quotient") {
    Instance e2 = example_instance("e2");
    // removing the last generator drops the depth to d
    REQUIRE(depth_mod_extra(e2, e2.F[4], e2.field) == 2);

    CycleWitness w = witness_cycle_descent(e2, 5, e2.field);
    check_witness_shape(e2, w);

    // the same descent certifies depth <= d+1, which is attained
    CHECK(depth_of(SqModule::quotient(e2), e2.field) == 3);
}

TEST_CASE("cycle descent works over small prime fields too") {
    Instance e2 = example_instance("e2", make_field(2));
    CycleWitness w = witness_cycle_descent(e2, 5, e2.field);
    check_witness_shape(e2, w);
}

TEST_CASE("descent refuses a generator that does not drop the depth") {
    // removing f2 = x3*x4 from I = (x1*x2, x3*x4) leaves a quotient of
    // depth 3, not d = 2
    Instance inst = make_instance(4, {m({1, 2}), m({3, 4})}, {}, FieldSpec{});
    REQUIRE(depth_mod_extra(inst, inst.F[1], inst.field) == 3);
    CHECK_THROWS_AS(witness_cycle_descent(inst, 2, inst.field), InapplicableError);
}

TEST_CASE("descent requires at least two generators") {
    Instance single = make_instance(2, {m({1, 2})}, {}, FieldSpec{});
    CHECK_THROWS_AS(witness_cycle_descent(single, 1, FieldSpec{}), InapplicableError);
}

TEST_CASE("descent validates the generator index") {
    Instance e2 = example_instance("e2");
    try {
        witness_cycle_descent(e2, 6, e2.field);
        FAIL("expected InputError");
    } catch (const InputError& err) {
        CHECK(err.rule == "generator_index");
    }
}

TEST_CASE("random depth-drop witnesses verify") {
    int verified = 0;
    for (std::uint64_t seed = 0; verified < 6 && seed < 60; ++seed) {
        Instance inst;
        try {
            inst = random_instance(5, 2, 4, seed, GenMode::Pathological);
        } catch (const Error&) {
            continue;
        }
        if (inst.r() < 2) continue;
        for (int ri = 1; ri <= inst.r(); ++ri) {
            if (depth_mod_extra(inst, inst.F[ri - 1], inst.field) != inst.d) continue;
            CAPTURE(serialize_instance(inst));
            CAPTURE(ri);
            CycleWitness w = witness_cycle_descent(inst, ri, inst.field);
            check_witness_shape(inst, w);
            ++verified;
            break;
        }
    }
    CHECK(verified == 6);
}
