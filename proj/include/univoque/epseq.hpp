#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace univoque {

// Finite digit block. Digit bounds are enforced at operation boundaries, not per element.
using Word = std::vector<int>;

Word conjugate_word(const Word& w, int alphabet_max);
std::strong_ordering lex_cmp_words(const Word& a, const Word& b);  // prefix < extension
std::string word_to_string(const Word& w, int alphabet_max);
Word word_from_string(const std::string& s);

// Eventually periodic sequence s_1 s_2 ... over {0, ..., alphabet_max}.
// Canonical form: period nonempty and primitive; preperiod minimal, i.e. its last digit
// differs from the period's last digit. Equality is identity of canonical forms
// (alphabet_max included).
class EpSeq {
public:
    EpSeq(int alphabet_max, Word preperiod, Word period);

    static EpSeq zero(int alphabet_max) { return EpSeq(alphabet_max, {}, {0}); }
    static EpSeq constant(int digit, int alphabet_max) { return EpSeq(alphabet_max, {}, {digit}); }

    int alphabet_max() const { return m_; }
    const Word& preperiod() const { return pre_; }
    const Word& period() const { return per_; }

    int digit(std::size_t i) const;  // 1-based, matching the usual indexing of expansions

    bool is_zero() const;
    bool is_infinite() const;  // infinitely many nonzero digits

    EpSeq shifted(std::size_t k) const;  // s_{k+1} s_{k+2} ...
    EpSeq conjugated() const;            // digitwise alphabet_max - s_i
    // Same digits, re-tagged alphabet (new_max must dominate every digit).
    EpSeq with_alphabet(int new_max) const;

    Word prefix(std::size_t n) const;

    bool operator==(const EpSeq& o) const {
        return m_ == o.m_ && pre_ == o.pre_ && per_ == o.per_;
    }

private:
    int m_;
    Word pre_, per_;
};

// Decidable: the first len(preA)+len(preB)+2*lcm(|perA|,|perB|) digits determine the order.
std::strong_ordering lex_cmp(const EpSeq& a, const EpSeq& b);

// True iff shift(s,k) <= t (strict: <) for every k >= from whose digit s_k passes the
// guard (guard absent: every k >= from). Decidable: shifts repeat with period |per|
// beyond the preperiod, so only finitely many k are inspected.
bool all_shifts_le(const EpSeq& s, const EpSeq& t, bool strict, std::size_t from = 1,
                   const std::function<bool(int)>& guard = nullptr);

// Text format: digits, period parenthesized, e.g. "11(0100)", "(10)", "1110(0)".
// Digits are single characters for alphabet_max <= 9, else '.'-separated decimal.
std::string to_string(const EpSeq& s);
// alphabet_max defaults to max(1, largest digit present).
EpSeq parse_epseq(const std::string& text, std::optional<int> alphabet_max = std::nullopt);

}  // namespace univoque
