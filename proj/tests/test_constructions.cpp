#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqdepth/constructions.hpp"
#include "sqdepth/corpus.hpp"
#include "sqdepth/errors.hpp"

using namespace sqdepth;

namespace {

Monomial m(std::initializer_list<int> idx) { return Monomial::from_indices({idx}); }

std::vector<std::string> names(const std::vector<Monomial>& xs) {
    std::vector<std::string> out;
    for (Monomial x : xs) out.push_back(to_string(x));
    return out;
}

}  // namespace

TEST_CASE("derived sets of the five-generator quotient") {
    Instance e2 = example_instance("e2");
    DerivedSets ds = derive_sets(e2);

    CHECK(names(ds.B) == std::vector<std::string>{"x1*x2*x3", "x1*x2*x4", "x1*x3*x4",
                                                  "x1*x3*x5", "x2*x3*x5"});
    CHECK(ds.s() == 5);
    CHECK(ds.C.empty());
    CHECK(ds.W.size() == 10);  // all generator pairs
    CHECK(ds.w_monomials.size() == 8);
    CHECK(ds.C3.empty());
    for (const PairLcm& w : ds.W) {
        CHECK(w.i < w.j);
        CHECK(w.m == lcm(e2.F[w.i - 1], e2.F[w.j - 1]));
    }

    CHECK(is_pathological(e2, ds));
    HypothesisReport hyp = check_theorem_hypotheses(e2, ds);
    CHECK(hyp.pathological);
    CHECK(hyp.c_w_empty);
    CHECK(hyp.c_in_c3);
    CHECK(hyp.theorem_applicable);
    CHECK(hyp.pathological_witnesses.empty());
    CHECK(hyp.c_w_witnesses.empty());
}

TEST_CASE("gcd families of the five-generator quotient") {
    GcdFamily fam = gcd_family(example_instance("e2"));
    REQUIRE(fam.e() == 3);
    CHECK(names(fam.u) == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(fam.U[0] == std::vector<int>{1, 2, 3});
    CHECK(fam.U[1] == std::vector<int>{1, 4});
    CHECK(fam.U[2] == std::vector<int>{2, 4, 5});
}

TEST_CASE("non-pathological quotient names its witnesses") {
    Instance e4 = example_instance("e4");
    HypothesisReport hyp = check_theorem_hypotheses(e4);
    CHECK(!hyp.pathological);
    CHECK(!hyp.theorem_applicable);
    CHECK(names(hyp.pathological_witnesses) ==
          std::vector<std::string>{"x1*x3*x5", "x2*x3*x5"});
}

TEST_CASE("derived sets of the twelve-variable quotient") {
    Instance e = example_instance("e");
    DerivedSets ds = derive_sets(e);
    CHECK(ds.s() == 27);
    CHECK(ds.q() == 31);

    HypothesisReport hyp = check_theorem_hypotheses(e, ds);
    CHECK(hyp.pathological);
    CHECK(hyp.c_w_empty);
    CHECK(hyp.theorem_applicable);

    GcdFamily fam = gcd_family(e);
    REQUIRE(fam.e() == 2);
    CHECK(names(fam.u) == std::vector<std::string>{"x6", "x12"});
    CHECK(fam.U[0] == std::vector<int>{6, 7, 8, 9, 10, 11});
    CHECK(fam.U[1] == std::vector<int>{1, 2, 3, 4, 5, 11});

    // the common generator x6*x12 sits in both families
    CHECK(e.F[10] == m({6, 12}));
}

TEST_CASE("gcd families of the eight-generator quotient") {
    Instance e3 = example_instance("e3");
    GcdFamily fam = gcd_family(e3);
    REQUIRE(fam.e() == 5);
    CHECK(names(fam.u) == std::vector<std::string>{"x1", "x2", "x3", "x4", "x6"});
    CHECK(fam.U[0] == std::vector<int>{1, 2, 3});
    CHECK(fam.U[1] == std::vector<int>{1, 4, 5});
    CHECK(fam.U[2] == std::vector<int>{2, 4, 6, 7});
    CHECK(fam.U[3] == std::vector<int>{3, 8});
    CHECK(fam.U[4] == std::vector<int>{5, 7, 8});

    HypothesisReport hyp = check_theorem_hypotheses(e3);
    CHECK(hyp.pathological);
    CHECK(hyp.c_w_empty);
    CHECK(hyp.theorem_applicable);

    // two distinct families never share two generators
    for (int a = 0; a < fam.e(); ++a)
        for (int b = a + 1; b < fam.e(); ++b) {
            int shared = 0;
            for (int x : fam.U[a])
                for (int y : fam.U[b])
                    if (x == y) ++shared;
            CHECK(shared <= 1);
        }
}

TEST_CASE("pathologize reproduces the reference J") {
    Instance e2 = example_instance("e2");
    Instance built = pathologize(e2.n, e2.F, e2.field);
    CHECK(built.I == e2.I);
    CHECK(built.J == e2.J);

    HypothesisReport hyp = check_theorem_hypotheses(built);
    CHECK(hyp.theorem_applicable);
}

TEST_CASE("pathologize validates its input") {
    CHECK_THROWS_AS(pathologize(3, {}, FieldSpec{}), InputError);
    // mixed degrees
    CHECK_THROWS_AS(pathologize(4, {m({1, 2}), m({1, 3, 4})}, FieldSpec{}), InputError);
    // not an antichain
    CHECK_THROWS_AS(pathologize(4, {m({1}), m({1, 2})}, FieldSpec{}), InputError);
}

TEST_CASE("common-generator premise does not imply the conclusion without pathology") {
    // F = x1*x2, x1*x3, x2*x4 over four variables, J = 0: both families
    // contain f1, yet x1*x2*x3*x4 lies in C and is the lcm of f2 and f3.
    Instance inst = make_instance(4, {m({1, 2}), m({1, 3}), m({2, 4})}, {}, FieldSpec{});
    LemmaL4Check raw = lemma_l4_check(inst);
    CHECK(raw.premise);
    CHECK(!raw.conclusion);

    // the checked lemma gates on pathology, so this is no counterexample
    HypothesisReport hyp = check_theorem_hypotheses(inst);
    CHECK(!hyp.pathological);
    CHECK(verify_lemma(inst, "l4").verdict == Verdict::Inapplicable);
}

TEST_CASE("lemma_l4_check requires at least one family") {
    Instance inst = make_instance(4, {m({1, 2}), m({3, 4})}, {}, FieldSpec{});
    CHECK(gcd_family(inst).e() == 0);
    CHECK_THROWS_AS(lemma_l4_check(inst), InapplicableError);
}

TEST_CASE("peeling analysis of the twelve-variable quotient") {
    Instance e = example_instance("e");
    // last family is x12's; its largest generator index is 11 (= x6*x12)
    MonomialIdeal iprime = minimalize(12, {e.F[0], e.F[1], e.F[2], e.F[3], e.F[4]});
    GammaAnalysis g = gamma_analysis(e, 11, iprime);
    CHECK(g.r_index == 11);
    CHECK(g.A == std::vector<int>{6, 7});
    REQUIRE(g.classes.size() == 1);
    CHECK(g.classes[0] == std::vector<int>{6, 7});
    CHECK(g.gamma == std::vector<int>{7, 8});
}

TEST_CASE("peeling analysis of the eight-generator quotient is empty") {
    Instance e3 = example_instance("e3");
    // last family is x6's {5,7,8}; peel f8, keep f5 and f7
    MonomialIdeal iprime = minimalize(6, {e3.F[4], e3.F[6]});
    GammaAnalysis g = gamma_analysis(e3, 8, iprime);
    CHECK(g.A.empty());
    CHECK(g.classes.empty());
    CHECK(g.gamma.empty());
}

TEST_CASE("peeling analysis rejects bad arguments") {
    Instance e3 = example_instance("e3");
    MonomialIdeal iprime = minimalize(6, {e3.F[4], e3.F[6]});
    try {
        gamma_analysis(e3, 99, iprime);
        FAIL("expected InputError");
    } catch (const InputError& err) {
        CHECK(err.rule == "generator_index");
    }
    try {
        gamma_analysis(e3, 8, minimalize(6, {m({5})}));
        FAIL("expected InputError");
    } catch (const InputError& err) {
        CHECK(err.rule == "iprime_subset");
    }
    // r outside the last family
    Instance e = example_instance("e");
    CHECK_THROWS_AS(
        gamma_analysis(e, 6, minimalize(12, {e.F[0]})), InapplicableError);
}

TEST_CASE("survivor expressibility by generator lcms") {
    Instance e2 = example_instance("e2");
    CHECK(question_hypothesis(e2, 1));  // B consists of pairwise lcms
    CHECK(question_hypothesis(e2, 2));  // C is empty, vacuously true

    Instance e4 = example_instance("e4");
    CHECK(!question_hypothesis(e4, 1));  // x2*x3*x5 is no pairwise lcm

    CHECK_THROWS_AS(question_hypothesis(e2, 0), InputError);
    CHECK_THROWS_AS(question_hypothesis(e2, 5), InputError);  // i > r-1

    Instance mixed =
        make_instance(4, {m({1, 2}), m({1, 3}), m({2, 3, 4})}, {}, FieldSpec{});
    REQUIRE(mixed.E.size() == 1);
    CHECK_THROWS_AS(question_hypothesis(mixed, 1), InapplicableError);
}
