#include "univoque/json_io.hpp"

#include "univoque/polynomial.hpp"

namespace univoque {

std::string decimal_string(const Rat& r, int digits) {
    const bool neg = r < 0;
    Rat a = rat_abs(r);
    const Int ip = rat_floor(a);
    Rat frac = a - Rat(ip);
    std::string s = (neg ? "-" : "") + ip.str();
    if (digits <= 0) return s;
    s += '.';
    for (int i = 0; i < digits; ++i) {
        frac *= 10;
        const Int d = rat_floor(frac);
        s += d.str();
        frac -= Rat(d);
    }
    return s;
}

Json json_of(const EpSeq& s) { return to_string(s); }

Json json_of(const AlgebraicReal& a, int decimal_digits) {
    Rat eps(1);
    for (int i = 0; i < decimal_digits + 2; ++i) eps /= 10;
    const auto [lo, hi] = a.approx(eps);
    return Json{{"poly", poly_to_string(a.poly())},
                {"lo", rat_to_string(a.lo())},
                {"hi", rat_to_string(a.hi())},
                {"decimal", decimal_string((lo + hi) / 2, decimal_digits)}};
}

Json json_of(const BaseSpec& b) {
    const char* kind = b.kind == BaseSpec::Kind::One      ? "one"
                       : b.kind == BaseSpec::Kind::Integer ? "integer"
                                                           : "alpha";
    return Json{{"kind", kind}, {"value", b.to_text()}};
}

Json json_of(const BaseClass& c) {
    Json j{{"variant", to_string(c.variant)},
           {"is_integer", c.is_integer},
           {"alpha", to_string(c.alpha)}};
    if (c.minimal_k) j["minimal_k"] = *c.minimal_k;
    return j;
}

Json json_of(const PointClass& p) {
    return Json{{"in_U_q", p.in_Uq},
                {"in_V_q", p.in_Vq},
                {"greedy_finite", p.greedy_finite},
                {"count", to_string(p.count)}};
}

Json json_of(const AlphaOfOne& a, int alphabet_max) {
    Json j{{"certified", a.certified.has_value()},
           {"prefix", word_to_string(a.prefix, alphabet_max)}};
    if (a.certified) j["alpha"] = to_string(*a.certified);
    return j;
}

Json json_of(const ExpansionsOfOne& e, long materialize) {
    const int a1 = e.alpha.alphabet_max();
    Json families = Json::array();
    for (const ExpansionFamily& f : e.families) {
        Json jf{{"block", word_to_string(f.block, a1)},
                {"head", word_to_string(f.head, a1)},
                {"tail", to_string(f.tail)}};
        if (materialize > 0) {
            Json members = Json::array();
            for (long n = 0; n < materialize; ++n) members.push_back(to_string(f.member(n)));
            jf["members"] = members;
        }
        families.push_back(jf);
    }
    return Json{{"alpha", to_string(e.alpha)}, {"families", families}};
}

Json json_of(const StabilityInterval& s) {
    Json j{{"singleton", s.singleton}};
    if (s.alpha) j["alpha"] = to_string(*s.alpha);
    if (s.q1) j["q1"] = json_of(*s.q1);
    if (s.q2) j["q2"] = to_string(*s.q2);
    return j;
}

Json json_of(const ClosureComponent& c) {
    Json chain = Json::array();
    for (const EpSeq& e : c.chain) chain.push_back(to_string(e));
    return Json{{"p1", json_of(c.p1)}, {"chain", chain}, {"r", to_string(c.r)}};
}

Json json_of(const DoublingResult& d, int alphabet_max) {
    Json chain = Json::array();
    for (const EpSeq& e : d.chain) chain.push_back(to_string(e));
    return Json{{"prefix", word_to_string(d.prefix, alphabet_max)}, {"chain", chain}};
}

Json json_of(const SmallestUnivoque& s, int alphabet_max) {
    return Json{{"prefix", word_to_string(s.prefix, alphabet_max)},
                {"lower", json_of(s.lower)},
                {"upper", json_of(s.upper)}};
}

Json json_of(const ForbiddenSet& f) {
    Json blocks = Json::array();
    for (const Word& b : f.blocks) blocks.push_back(word_to_string(b, f.alphabet_max));
    Json j{{"alphabet_max", f.alphabet_max}, {"blocks", blocks}};
    if (!f.blocks.empty()) j["block_length"] = f.blocks.front().size();
    return j;
}

Json json_of(const PrefixTree& t) {
    const int a1 = alpha1_of(*t.base);
    Json leaves = Json::array();
    for (const Word& w : t.leaves) leaves.push_back(word_to_string(w, a1));
    return Json{{"depth", t.depth},
                {"node_count", t.node_count},
                {"count", t.leaves.size()},
                {"leaves", leaves}};
}

Json json_of(const Constants& c) {
    return Json{{"G", json_of(c.G)},
                {"q_prime", json_of(c.q_prime, 1)},
                {"q_double_prime", json_of(c.q_double_prime, 2)}};
}

}  // namespace univoque
