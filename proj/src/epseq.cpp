#include "univoque/epseq.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "univoque/errors.hpp"

namespace univoque {

Word conjugate_word(const Word& w, int alphabet_max) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] > alphabet_max)
            fail(errc::alphabet_mismatch, "digit outside alphabet in conjugation");
        out[i] = alphabet_max - w[i];
    }
    return out;
}

std::strong_ordering lex_cmp_words(const Word& a, const Word& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return a.size() <=> b.size();
}

std::string word_to_string(const Word& w, int alphabet_max) {
    std::ostringstream os;
    bool dotted = alphabet_max > 9;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (dotted && i) os << '.';
        os << w[i];
    }
    return os.str();
}

Word word_from_string(const std::string& s) {
    Word w;
    if (s.find('.') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t dot = s.find('.', pos);
            std::string tok = s.substr(pos, dot == std::string::npos ? dot : dot - pos);
            if (tok.empty()) fail(errc::parse_failure, "empty digit token in '" + s + "'");
            for (char c : tok)
                if (c < '0' || c > '9') fail(errc::parse_failure, "bad digit token '" + tok + "'");
            w.push_back(std::stoi(tok));
            if (dot == std::string::npos) break;
            pos = dot + 1;
        }
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') fail(errc::parse_failure, std::string("bad digit '") + c + "'");
            w.push_back(c - '0');
        }
    }
    return w;
}

namespace {

bool word_is_power_of(const Word& w, std::size_t p) {
    for (std::size_t i = p; i < w.size(); ++i)
        if (w[i] != w[i % p]) return false;
    return true;
}

Word primitive_root(Word w) {
    for (std::size_t p = 1; p < w.size(); ++p) {
        if (w.size() % p == 0 && word_is_power_of(w, p)) {
            w.resize(p);
            return w;
        }
    }
    return w;
}

}  // namespace

EpSeq::EpSeq(int alphabet_max, Word preperiod, Word period)
    : m_(alphabet_max), pre_(std::move(preperiod)), per_(std::move(period)) {
    if (m_ < 1) fail(errc::alphabet_mismatch, "alphabet_max must be >= 1");
    if (per_.empty()) fail(errc::parse_failure, "period must be nonempty");
    auto check = [&](const Word& w) {
        for (int d : w)
            if (d < 0 || d > m_)
                fail(errc::alphabet_mismatch, "digit outside {0..." + std::to_string(m_) + "}");
    };
    check(pre_);
    check(per_);
    per_ = primitive_root(std::move(per_));
    // u (w)^inf with u ending in w's last digit equals u' (w')^inf with the period
    // rotated right; iterating yields the minimal preperiod.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        pre_.pop_back();
        std::rotate(per_.begin(), per_.end() - 1, per_.end());
    }
}

int EpSeq::digit(std::size_t i) const {
    if (i == 0) fail(errc::out_of_range, "digit index is 1-based");
    std::size_t k = i - 1;
    if (k < pre_.size()) return pre_[k];
    return per_[(k - pre_.size()) % per_.size()];
}

bool EpSeq::is_zero() const {
    return pre_.empty() && per_.size() == 1 && per_[0] == 0;
}

bool EpSeq::is_infinite() const {
    for (int d : per_)
        if (d != 0) return true;
    return false;
}

EpSeq EpSeq::shifted(std::size_t k) const {
    Word pre = pre_, per = per_;
    if (k <= pre.size()) {
        pre.erase(pre.begin(), pre.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
        std::size_t r = (k - pre.size()) % per.size();
        pre.clear();
        std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(r), per.end());
    }
    return EpSeq(m_, std::move(pre), std::move(per));
}

EpSeq EpSeq::conjugated() const {
    return EpSeq(m_, conjugate_word(pre_, m_), conjugate_word(per_, m_));
}

EpSeq EpSeq::with_alphabet(int new_max) const {
    return EpSeq(new_max, pre_, per_);
}

Word EpSeq::prefix(std::size_t n) const {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = digit(i + 1);
    return w;
}

std::strong_ordering lex_cmp(const EpSeq& a, const EpSeq& b) {
    std::size_t bound = a.preperiod().size() + b.preperiod().size() +
                        2 * std::lcm(a.period().size(), b.period().size());
    for (std::size_t i = 1; i <= bound; ++i) {
        int da = a.digit(i), db = b.digit(i);
        if (da != db) return da <=> db;
    }
    return std::strong_ordering::equal;
}

bool all_shifts_le(const EpSeq& s, const EpSeq& t, bool strict, std::size_t from,
                   const std::function<bool(int)>& guard) {
    // (digit s_k, shift(s,k)) pairs repeat with period |per| once k exceeds the
    // preperiod; one extra period of slack is cheap insurance.
    std::size_t upper = std::max(from, s.preperiod().size()) + 2 * s.period().size();
    for (std::size_t k = from; k <= upper; ++k) {
        if (guard && !guard(s.digit(k))) continue;
        auto c = lex_cmp(s.shifted(k), t);
        if (strict ? c != std::strong_ordering::less : c == std::strong_ordering::greater)
            return false;
    }
    return true;
}

std::string to_string(const EpSeq& s) {
    std::string pre = word_to_string(s.preperiod(), s.alphabet_max());
    std::string per = word_to_string(s.period(), s.alphabet_max());
    return pre + "(" + per + ")";
}

EpSeq parse_epseq(const std::string& text, std::optional<int> alphabet_max) {
    auto open = text.find('(');
    auto close = text.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open ||
        close != text.size() - 1)
        fail(errc::parse_failure, "expected 'digits(digits)' in '" + text + "'");
    Word pre = word_from_string(text.substr(0, open));
    Word per = word_from_string(text.substr(open + 1, close - open - 1));
    if (per.empty()) fail(errc::parse_failure, "empty period in '" + text + "'");
    int m;
    if (alphabet_max) {
        m = *alphabet_max;
    } else {
        m = 1;
        for (int d : pre) m = std::max(m, d);
        for (int d : per) m = std::max(m, d);
    }
    return EpSeq(m, std::move(pre), std::move(per));
}

}  // namespace univoque
