#include <doctest.h>

#include <memory>
#include <univoque/epseq.hpp>
#include <univoque/errors.hpp>
#include <univoque/field.hpp>

using namespace univoque;

namespace {
BasePtr golden_base() {
    return std::make_shared<const AlgebraicReal>(base_from_alpha(parse_epseq("(10)")));
}
}

TEST_CASE("base_from_alpha on classical fixtures") {
    const AlgebraicReal g = base_from_alpha(parse_epseq("(10)"));
    CHECK(compare(g, AlgebraicReal(PolyZ{-1, -1, 1}, Rat(1), Rat(2))) ==
          std::strong_ordering::equal);

    // (1100): root of x^3 - 2x^2 + x - 1, about 1.7549
    const AlgebraicReal q2 = base_from_alpha(parse_epseq("(1100)"));
    CHECK(q2.sign_at(PolyQ{Rat(-1), Rat(1), Rat(-2), Rat(1)}) == 0);
    CHECK(compare(q2, Rat(17548, 10000)) == std::strong_ordering::greater);
    CHECK(compare(q2, Rat(17549, 10000)) == std::strong_ordering::less);

    // (20): 1 + sqrt(2)
    const AlgebraicReal s = base_from_alpha(parse_epseq("(20)"));
    CHECK(s.sign_at(PolyQ{Rat(-1), Rat(-2), Rat(1)}) == 0);
    CHECK(compare(s, Rat(24142, 10000)) == std::strong_ordering::greater);
    CHECK(compare(s, Rat(24143, 10000)) == std::strong_ordering::less);

    // constant alphas give back integers
    CHECK(compare(base_from_alpha(EpSeq::constant(1, 1)), Rat(2)) == std::strong_ordering::equal);
    CHECK(compare(base_from_alpha(EpSeq::constant(2, 2)), Rat(3)) == std::strong_ordering::equal);
}

TEST_CASE("alpha1_of matches the ceiling rule") {
    CHECK(alpha1_of(base_from_alpha(parse_epseq("(10)"))) == 1);
    CHECK(alpha1_of(AlgebraicReal::from_rational(Rat(2))) == 1);
    CHECK(alpha1_of(AlgebraicReal::from_rational(Rat(5, 2))) == 2);
    CHECK(alpha1_of(AlgebraicReal::from_rational(Rat(3))) == 2);
    CHECK(alpha1_of(AlgebraicReal::from_rational(Rat(7, 2))) == 3);
}

TEST_CASE("field arithmetic respects the minimal relation") {
    const BasePtr b = golden_base();
    const FieldElem q = FieldElem::generator(b);
    const FieldElem one = FieldElem::from_rational(b, Rat(1));

    CHECK(q * q == q + one);          // q^2 = q + 1
    CHECK(q.inverse() == q - one);    // 1/q = q - 1
    CHECK(q.inverse() * q == one);
    CHECK(q.q_pow(-2) == q.q_pow(2).inverse());
    CHECK((q - q).is_zero());
    CHECK((-q + q).is_zero());
    CHECK((q / q) == one);
    CHECK(q.sign() > 0);
    CHECK((one - q).sign() < 0);

    const auto [lo, hi] = q.approx(Rat(1, 1000000));
    CHECK(hi - lo < Rat(1, 1000000));
    CHECK(lo > Rat(1618032, 1000000));
    CHECK(hi < Rat(1618035, 1000000));

    CHECK_THROWS_AS(FieldElem::from_rational(b, Rat(0)).inverse(), DomainError);
}

TEST_CASE("value_of sums digit words exactly") {
    const BasePtr b = golden_base();
    const FieldElem one = FieldElem::from_rational(b, Rat(1));
    // 110 is the finite expansion of 1
    CHECK(value_of(Word{1, 1, 0}, b) == one);
    // the quasi-greedy expansion of 1 sums to 1 as well
    CHECK(value_of(parse_epseq("(10)"), b) == one);
    CHECK(value_of(parse_epseq("11(0)"), b) == one);
    CHECK(value_of(EpSeq::zero(1), b).is_zero());
    // 0(1): geometric tail q^-2 / (1 - q^-1)
    const FieldElem q = FieldElem::generator(b);
    CHECK(value_of(parse_epseq("0(1)"), b) == q.q_pow(-2) / (one - q.inverse()));
}

TEST_CASE("root_of_digit_sum matches its defining equations") {
    // 1 = q^-1 + q^-2  ->  the golden ratio
    const AlgebraicReal g = root_of_digit_sum({1, 1}, 1, 0);
    CHECK(compare(g, base_from_alpha(parse_epseq("(10)"))) == std::strong_ordering::equal);
    // 1 = q^-1 + q^-2 + q^-3 + ...  ->  2
    CHECK(compare(root_of_digit_sum({1, 1}, 1, 1), Rat(2)) == std::strong_ordering::equal);
    // lower bound below upper bound for a genuine prefix
    const AlgebraicReal lo = root_of_digit_sum({1, 1, 0, 1}, 1, 0);
    const AlgebraicReal hi = root_of_digit_sum({1, 1, 0, 1}, 1, 1);
    CHECK(compare(lo, hi) == std::strong_ordering::less);
}

TEST_CASE("mixed-base arithmetic is rejected") {
    const BasePtr a = golden_base();
    const BasePtr b =
        std::make_shared<const AlgebraicReal>(base_from_alpha(parse_epseq("(1100)")));
    CHECK_THROWS_AS(FieldElem::generator(a) + FieldElem::generator(b), DomainError);
}

TEST_CASE("base_from_alpha rejects inadmissible data") {
    // finite sequences are not quasi-greedy expansions of 1
    CHECK_THROWS_AS(base_from_alpha(parse_epseq("11(0)")), DomainError);
    // first digit below the alphabet maximum
    CHECK_THROWS_AS(base_from_alpha(parse_epseq("(10)", 2)), DomainError);
    // a shifted tail exceeding the sequence
    CHECK_THROWS_AS(base_from_alpha(parse_epseq("(1011)")), DomainError);
}
