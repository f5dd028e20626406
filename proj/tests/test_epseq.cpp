#include <doctest.h>

#include <univoque/epseq.hpp>
#include <univoque/errors.hpp>

using namespace univoque;

TEST_CASE("canonical form collapses preperiod into the period") {
    // 1,1,(0,1,0,1)... = 1,(1,0)...
    EpSeq s(1, {1, 1}, {0, 1, 0, 1});
    CHECK(s.preperiod() == Word{1});
    CHECK(s.period() == Word{1, 0});
    CHECK(to_string(s) == "1(10)");
    CHECK(s == parse_epseq("1(10)"));

    // primitive period reduction alone
    EpSeq t(1, {}, {1, 0, 1, 0});
    CHECK(t.period() == Word{1, 0});

    // a rotation hidden behind a preperiod digit
    CHECK(parse_epseq("1(01)") == parse_epseq("(10)"));
}

TEST_CASE("digit is 1-based and runs through preperiod then period") {
    const EpSeq s = parse_epseq("1(10)");
    CHECK(s.digit(1) == 1);
    CHECK(s.digit(2) == 1);
    CHECK(s.digit(3) == 0);
    CHECK(s.digit(4) == 1);
    CHECK(s.digit(100) == 1);  // even positions beyond the head are 1
    CHECK(s.digit(101) == 0);
    CHECK(s.prefix(5) == Word{1, 1, 0, 1, 0});
}

TEST_CASE("zero, constant, and infinity predicates") {
    CHECK(EpSeq::zero(1).is_zero());
    CHECK_FALSE(EpSeq::zero(1).is_infinite());
    CHECK(EpSeq::constant(1, 1).is_infinite());
    CHECK_FALSE(parse_epseq("11(0)").is_infinite());
    CHECK_FALSE(parse_epseq("11(0)").is_zero());
    CHECK(parse_epseq("(100)").is_infinite());
}

TEST_CASE("shift and conjugate") {
    const EpSeq s = parse_epseq("1(10)");
    CHECK(s.shifted(1) == parse_epseq("(10)"));
    CHECK(s.shifted(2) == parse_epseq("(01)"));
    CHECK(s.shifted(0) == s);

    CHECK(parse_epseq("(10)").conjugated() == parse_epseq("(01)"));
    const EpSeq u = parse_epseq("21(02)");
    CHECK(u.alphabet_max() == 2);
    CHECK(u.conjugated() == parse_epseq("01(20)"));

    const EpSeq w = parse_epseq("(10)").with_alphabet(2);
    CHECK(w.alphabet_max() == 2);
    CHECK(w.digit(1) == 1);
    CHECK(w.conjugated().digit(1) == 1);  // 2 - 1
    CHECK(w.conjugated().digit(2) == 2);
}

TEST_CASE("lexicographic comparison") {
    CHECK(lex_cmp(parse_epseq("(10)"), parse_epseq("1(10)")) == std::strong_ordering::less);
    CHECK(lex_cmp(parse_epseq("(10)"), parse_epseq("(10)")) == std::strong_ordering::equal);
    CHECK(lex_cmp(parse_epseq("(1)"), parse_epseq("(10)")) == std::strong_ordering::greater);
    CHECK(lex_cmp(EpSeq::zero(1), parse_epseq("(01)")) == std::strong_ordering::less);
    // different alphabets compare by digit value
    CHECK(lex_cmp(parse_epseq("(10)"), parse_epseq("(20)")) == std::strong_ordering::less);

    CHECK(lex_cmp_words({1, 0}, {1, 0, 1}) == std::strong_ordering::less);  // prefix first
    CHECK(lex_cmp_words({1, 1}, {1, 0, 1}) == std::strong_ordering::greater);
    CHECK(lex_cmp_words({}, {}) == std::strong_ordering::equal);
}

TEST_CASE("all_shifts_le with and without guard") {
    const EpSeq alpha = parse_epseq("(10)");
    // sigma^2k of (10) equals (10): non-strict passes, strict fails
    CHECK(all_shifts_le(alpha, alpha, false));
    CHECK_FALSE(all_shifts_le(alpha, alpha, true));

    // guard restricted to digits below the alphabet max: only even shifts are tested,
    // and those still reproduce alpha itself
    const auto below_one = [](int d) { return d < 1; };
    CHECK(all_shifts_le(alpha, alpha, false, 1, below_one));
    CHECK_FALSE(all_shifts_le(alpha, alpha, true, 1, below_one));

    // (01): the shift from the zero digit is (10) = alpha, so strict fails even guarded
    const EpSeq low = parse_epseq("(01)");
    CHECK(all_shifts_le(low, alpha, false));
    CHECK_FALSE(all_shifts_le(low, alpha, true, 1, below_one));

    // starting index skips early oversized shifts
    const EpSeq spike = parse_epseq("02(0)");
    CHECK_FALSE(all_shifts_le(spike, parse_epseq("(10)").with_alphabet(2), false));
    CHECK(all_shifts_le(spike, parse_epseq("(10)").with_alphabet(2), false, 2));
}

TEST_CASE("word round trips and the dotted form for wide alphabets") {
    CHECK(word_to_string({1, 1, 0}, 1) == "110");
    CHECK(word_from_string("110") == Word{1, 1, 0});
    CHECK(word_to_string({10, 2}, 10) == "10.2");
    CHECK(word_from_string("10.2") == Word{10, 2});
    CHECK(conjugate_word({1, 0, 2}, 2) == Word{1, 2, 0});
}

TEST_CASE("parse failures carry the parse error code") {
    try {
        parse_epseq("1(");
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.code()) == errc::parse_failure);
    }
    try {
        parse_epseq("(102)", 1);  // digit above the declared alphabet
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.code()) == errc::alphabet_mismatch);
    }
    CHECK_THROWS_AS(parse_epseq(""), DomainError);
    CHECK_THROWS_AS(parse_epseq("abc"), DomainError);
    // empty period means a finite word, which is not eventually periodic data
    CHECK_THROWS_AS(parse_epseq("110"), DomainError);
}

TEST_CASE("alphabet inference and explicit override") {
    CHECK(parse_epseq("(10)").alphabet_max() == 1);
    CHECK(parse_epseq("(20)").alphabet_max() == 2);
    CHECK(parse_epseq("(10)", 3).alphabet_max() == 3);
    CHECK(parse_epseq("(0)", 2) == EpSeq::zero(2));
}
