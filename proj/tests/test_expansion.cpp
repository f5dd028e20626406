#include <doctest.h>

#include <memory>
#include <univoque/epseq.hpp>
#include <univoque/errors.hpp>
#include <univoque/expansion.hpp>
#include <univoque/field.hpp>

using namespace univoque;

namespace {
BasePtr make_base(const char* alpha) {
    return std::make_shared<const AlgebraicReal>(base_from_alpha(parse_epseq(alpha)));
}
BasePtr rational_base(const Rat& r) {
    return std::make_shared<const AlgebraicReal>(AlgebraicReal::from_rational(r));
}
}

TEST_CASE("top of J_q") {
    const BasePtr g = make_base("(10)");
    // 1/(G-1) = G
    CHECK(top_of_Jq(g) == FieldElem::generator(g));
    const BasePtr two = rational_base(Rat(2));
    CHECK(top_of_Jq(two) == FieldElem::from_rational(two, Rat(1)));
}

TEST_CASE("greedy and quasi-greedy digits of 1 at the golden ratio") {
    const BasePtr g = make_base("(10)");
    const FieldElem one = FieldElem::from_rational(g, Rat(1));
    CHECK(greedy_digits(one, 8) == Word{1, 1, 0, 0, 0, 0, 0, 0});
    CHECK(quasi_greedy_digits(one, 8) == Word{1, 0, 1, 0, 1, 0, 1, 0});

    // x = q^-1 + q^-2 + q^-3: greedy 111000..., quasi-greedy 110101...
    const FieldElem q = FieldElem::generator(g);
    const FieldElem x = q.q_pow(-1) + q.q_pow(-2) + q.q_pow(-3);
    CHECK(greedy_digits(x, 6) == Word{1, 1, 1, 0, 0, 0});
    CHECK(quasi_greedy_digits(x, 6) == Word{1, 1, 0, 1, 0, 1});
}

TEST_CASE("expansions at an integer base") {
    const BasePtr two = rational_base(Rat(2));
    const FieldElem one = FieldElem::from_rational(two, Rat(1));
    const FieldElem half = FieldElem::from_rational(two, Rat(1, 2));
    CHECK(greedy_digits(one, 5) == Word{1, 1, 1, 1, 1});
    CHECK(quasi_greedy_digits(one, 5) == Word{1, 1, 1, 1, 1});
    CHECK(greedy_digits(half, 5) == Word{1, 0, 0, 0, 0});
    CHECK(quasi_greedy_digits(half, 5) == Word{0, 1, 1, 1, 1});
}

TEST_CASE("zero expands to zeros; residuals track the tail exactly") {
    const BasePtr g = make_base("(10)");
    const FieldElem zero = FieldElem::from_rational(g, Rat(0));
    CHECK(greedy_digits(zero, 4) == Word{0, 0, 0, 0});
    CHECK(quasi_greedy_digits(zero, 4) == Word{0, 0, 0, 0});

    const FieldElem one = FieldElem::from_rational(g, Rat(1));
    const DigitRun gr = greedy_run(one, 3);
    CHECK(gr.digits == Word{1, 1, 0});
    CHECK(gr.residual.is_zero());
    const DigitRun qr = quasi_greedy_run(one, 3);
    CHECK(qr.digits == Word{1, 0, 1});
    // 1 - q^-1 - q^-3 = q^-4 at the golden ratio
    CHECK(qr.residual == FieldElem::generator(g).q_pow(-4));
    CHECK(qr.residual.sign() > 0);
}

TEST_CASE("points outside J_q are rejected") {
    const BasePtr g = make_base("(10)");
    CHECK_THROWS_AS(greedy_digits(FieldElem::from_rational(g, Rat(-1)), 4), DomainError);
    CHECK_THROWS_AS(greedy_digits(FieldElem::from_rational(g, Rat(5)), 4), DomainError);
    CHECK_THROWS_AS(quasi_greedy_digits(FieldElem::from_rational(g, Rat(5)), 4), DomainError);
}

TEST_CASE("validate_alpha accepts admissible data and rejects the rest") {
    CHECK_NOTHROW(validate_alpha(parse_epseq("(10)")));
    CHECK_NOTHROW(validate_alpha(parse_epseq("(100)")));
    CHECK_NOTHROW(validate_alpha(parse_epseq("(110)")));
    CHECK_NOTHROW(validate_alpha(parse_epseq("(1100)")));
    CHECK_NOTHROW(validate_alpha(EpSeq::constant(2, 2)));

    CHECK_THROWS_AS(validate_alpha(parse_epseq("11(0)")), DomainError);   // finite
    CHECK_THROWS_AS(validate_alpha(parse_epseq("(01)")), DomainError);    // wrong first digit
    CHECK_THROWS_AS(validate_alpha(parse_epseq("(1011)")), DomainError);  // tail exceeds
    CHECK_THROWS_AS(validate_alpha(parse_epseq("(12)")), DomainError);
}

TEST_CASE("greedy / quasi-greedy / univoque predicates at the golden ratio") {
    const EpSeq alpha = parse_epseq("(10)");
    CHECK(is_greedy(parse_epseq("11(0)"), alpha));
    CHECK_FALSE(is_greedy(parse_epseq("(10)"), alpha));  // greedy of 1 is 110^inf
    CHECK(is_greedy(EpSeq::zero(1), alpha));

    CHECK(is_quasi_greedy(parse_epseq("(10)"), alpha));
    CHECK_FALSE(is_quasi_greedy(parse_epseq("11(0)"), alpha));  // finite
    CHECK(is_quasi_greedy(parse_epseq("(01)"), alpha));
    CHECK(is_quasi_greedy(EpSeq::constant(1, 1), alpha));  // top of J_q

    CHECK(is_univoque(EpSeq::zero(1), alpha));
    CHECK(is_univoque(EpSeq::constant(1, 1), alpha));
    CHECK_FALSE(is_univoque(parse_epseq("(10)"), alpha));
    CHECK_FALSE(is_univoque(parse_epseq("1(0)"), alpha));
    CHECK_FALSE(is_univoque(parse_epseq("(01)"), alpha));
}

TEST_CASE("univoque sequences appear strictly above the golden ratio window") {
    const EpSeq alpha = parse_epseq("(1100)");
    CHECK(is_univoque(parse_epseq("(10)"), alpha));
    CHECK(is_univoque(parse_epseq("0(10)"), alpha));
    CHECK_FALSE(is_univoque(parse_epseq("11(0)"), alpha));
    CHECK_FALSE(is_univoque(parse_epseq("1(0)"), alpha));
}

TEST_CASE("quasi_from_finite_greedy rewrites terminating expansions") {
    const EpSeq alpha = parse_epseq("(10)");
    CHECK(quasi_from_finite_greedy(parse_epseq("11(0)"), alpha) == parse_epseq("(10)"));
    CHECK(quasi_from_finite_greedy(parse_epseq("1(0)"), alpha) == parse_epseq("0(10)"));

    const EpSeq two = EpSeq::constant(1, 1);  // alpha for q = 2
    CHECK(quasi_from_finite_greedy(parse_epseq("1(0)"), two) == parse_epseq("0(1)"));

    // digit sums agree exactly
    const BasePtr g = make_base("(10)");
    const EpSeq b = parse_epseq("101(0)");
    const EpSeq a = quasi_from_finite_greedy(b, alpha);
    CHECK(value_of(a, g) == value_of(b, g));
    CHECK(is_quasi_greedy(a, alpha));
}

TEST_CASE("greedy dominates quasi-greedy digitwise on prefixes") {
    const BasePtr g = make_base("(1100)");
    const FieldElem x = FieldElem::from_rational(g, Rat(7, 10));
    const Word gr = greedy_digits(x, 12);
    const Word qu = quasi_greedy_digits(x, 12);
    CHECK(lex_cmp_words(qu, gr) != std::strong_ordering::greater);
}
