// Command-line front end: one subcommand per library operation, plain text by
// default, --json for a machine-readable envelope. Exit codes: 0 ok, 1 domain
// error, 2 argument/parse error.

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "univoque/errors.hpp"
#include "univoque/expansion.hpp"
#include "univoque/json_io.hpp"

namespace uv = univoque;
using uv::Json;

namespace {

// ---- input forms ------------------------------------------------------------

// A base argument accepts, in this order of recognition:
//   alpha form        "(10)", "21(02)"          -- contains parentheses
//   polynomial form   "[-1,-1,1]@[1,2]"         -- coefficient list plus interval
//   rational form     "2", "9/5", "1.8"
struct ParsedBase {
    uv::BasePtr q;
    std::string form;  // "alpha" | "polynomial" | "rational"
    std::string text;  // the input as interpreted
    std::optional<uv::EpSeq> alpha;  // only for the alpha form
};

uv::Rat parse_rat(const std::string& s) {
    try {
        return uv::rat_from_string(s);
    } catch (const std::exception& e) {
        uv::fail(uv::errc::parse_failure, e.what());
    }
}

ParsedBase parse_base(const std::string& s) {
    if (s.find('(') != std::string::npos) {
        uv::EpSeq alpha = uv::parse_epseq(s);
        ParsedBase out{std::make_shared<const uv::AlgebraicReal>(uv::base_from_alpha(alpha)),
                       "alpha", uv::to_string(alpha), alpha};
        return out;
    }
    if (s.find('[') != std::string::npos) {
        const auto at = s.find('@');
        if (at == std::string::npos || s.front() != '[') {
            uv::fail(uv::errc::parse_failure, "polynomial base form is [c0,...,cn]@[lo,hi]");
        }
        std::string coeffs = s.substr(1, s.find(']') - 1);
        std::string range = s.substr(at + 1);
        if (range.size() < 5 || range.front() != '[' || range.back() != ']') {
            uv::fail(uv::errc::parse_failure, "polynomial base form is [c0,...,cn]@[lo,hi]");
        }
        range = range.substr(1, range.size() - 2);
        const auto comma = range.find(',');
        if (comma == std::string::npos) {
            uv::fail(uv::errc::parse_failure, "interval needs two endpoints");
        }
        uv::PolyZ p;
        std::size_t pos = 0;
        while (pos <= coeffs.size()) {
            const auto next = coeffs.find(',', pos);
            const std::string tok = coeffs.substr(pos, next == std::string::npos
                                                           ? std::string::npos
                                                           : next - pos);
            if (tok.empty()) uv::fail(uv::errc::parse_failure, "empty coefficient");
            try {
                p.push_back(uv::Int(tok));
            } catch (const std::exception&) {
                uv::fail(uv::errc::parse_failure, "bad coefficient '" + tok + "'");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        uv::AlgebraicReal a(p, parse_rat(range.substr(0, comma)), parse_rat(range.substr(comma + 1)));
        return {std::make_shared<const uv::AlgebraicReal>(std::move(a)), "polynomial", s,
                std::nullopt};
    }
    const uv::Rat r = parse_rat(s);
    return {std::make_shared<const uv::AlgebraicReal>(uv::AlgebraicReal::from_rational(r)),
            "rational", uv::rat_to_string(r), std::nullopt};
}

// An x argument: a rational, or a sum of terms in the base q, each term a rational,
// "q^k", or "<rational>*q^k" (k may be negative), e.g. "q^-1+q^-2+q^-3".
uv::FieldElem parse_x(const std::string& s, const uv::BasePtr& q) {
    uv::FieldElem acc = uv::FieldElem::from_rational(q, uv::Rat(0));
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto plus = s.find('+', pos);
        if (plus == std::string::npos) plus = s.size();
        std::string term = s.substr(pos, plus - pos);
        if (term.empty()) uv::fail(uv::errc::parse_failure, "empty term in '" + s + "'");
        uv::Rat coeff(1);
        const auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = parse_rat(term.substr(0, star));
            term = term.substr(star + 1);
        }
        uv::FieldElem factor = uv::FieldElem::from_rational(q, uv::Rat(1));
        if (!term.empty() && term[0] == 'q') {
            long k = 1;
            if (term.size() > 1) {
                if (term[1] != '^') uv::fail(uv::errc::parse_failure, "bad term '" + term + "'");
                try {
                    k = std::stol(term.substr(2));
                } catch (const std::exception&) {
                    uv::fail(uv::errc::parse_failure, "bad exponent in '" + term + "'");
                }
            }
            factor = uv::FieldElem::generator(q).q_pow(k);
        } else if (star == std::string::npos) {
            coeff = parse_rat(term);
        } else {
            uv::fail(uv::errc::parse_failure, "bad term '" + term + "'");
        }
        acc = acc + uv::FieldElem::from_rational(q, coeff) * factor;
        pos = plus + 1;
    }
    return acc;
}

// A seed for the doubling construction: "1", an integer n, or an alpha EpSeq.
uv::BaseSpec parse_seed(const std::string& s) {
    if (s.find('(') != std::string::npos) return uv::BaseSpec::from_alpha(uv::parse_epseq(s));
    uv::Rat r = parse_rat(s);
    if (!uv::rat_is_integer(r) || r < 1) {
        uv::fail(uv::errc::parse_failure, "seed must be a positive integer or an alpha sequence");
    }
    if (r == 1) return uv::BaseSpec::one();
    return uv::BaseSpec::integer(static_cast<int>(uv::rat_num(r)));
}

// ---- output -----------------------------------------------------------------

struct Output {
    bool json = false;
    Json result;              // JSON payload for --json
    std::string text;         // plain-text payload otherwise

    void set(Json j, std::string plain) {
        result = std::move(j);
        text = std::move(plain);
    }
};

std::string join_lines(const Json& arr) {
    std::string out;
    for (const auto& v : arr) {
        out += v.get<std::string>();
        out += '\n';
    }
    if (!out.empty()) out.pop_back();
    return out;
}

std::string enclosure_text(const uv::SmallestUnivoque& s, int digits = 10) {
    const auto lo = s.lower.approx(uv::Rat(1, 10000000000LL));
    const auto hi = s.upper.approx(uv::Rat(1, 10000000000LL));
    return "[" + uv::decimal_string(lo.first, digits) + ", " + uv::decimal_string(hi.second, digits) +
           "]";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digit expansions in non-integer bases"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit a JSON envelope on stdout");
    app.fallthrough();  // inherited: lets global flags trail a subcommand

    // expand
    std::string x_text, base_text, alpha_text, a_text, c_text, point_text, seed_text, left_text;
    long digits = 32, materialize = 0, depth = 8, n_digits = 16, card_depth = 64;
    int seed_n = 1, k_doublings = 0;
    bool greedy = false, quasi = false, count_only = false, closure = false;
    std::string eps_text = "0.000001";

    CLI::App* sc_expand = app.add_subcommand("expand", "digit expansion of x in base q");
    sc_expand->add_option("--x", x_text, "value to expand")->required();
    sc_expand->add_option("--base", base_text, "base q")->required();
    sc_expand->add_option("--digits", digits, "number of digits");
    sc_expand->add_flag("--greedy", greedy, "greedy expansion");
    sc_expand->add_flag("--quasi", quasi, "quasi-greedy expansion");

    CLI::App* sc_cbase = app.add_subcommand("classify-base", "classify a base");
    sc_cbase->add_option("--alpha", alpha_text, "quasi-greedy expansion of 1");
    sc_cbase->add_option("--value", base_text, "base given by value");
    sc_cbase->add_option("--digits", digits, "certification digits for --value");

    CLI::App* sc_cpoint = app.add_subcommand("classify-point", "classify a point by sequence");
    sc_cpoint->add_option("--a", a_text, "quasi-greedy expansion of the point")->required();
    sc_cpoint->add_option("--alpha", alpha_text, "quasi-greedy expansion of 1")->required();

    CLI::App* sc_exp1 = app.add_subcommand("expansions-of-one", "all expansions of 1");
    sc_exp1->add_option("--alpha", alpha_text, "quasi-greedy expansion of 1")->required();
    sc_exp1->add_option("--materialize", materialize, "list the first N family members");

    CLI::App* sc_end = app.add_subcommand("endpoints", "component endpoint maps");
    sc_end->add_option("--left", left_text, "left endpoint spec; prints the right endpoint");
    sc_end->add_option("--right", alpha_text, "right endpoint alpha; prints the left endpoint");

    CLI::App* sc_stab = app.add_subcommand("stability", "stability interval of a base");
    sc_stab->add_option("--q", base_text, "base")->required();
    sc_stab->add_option("--digits", digits, "certification digits");

    CLI::App* sc_comp = app.add_subcommand("component", "closure component containing q");
    sc_comp->add_option("--q", base_text, "base")->required();
    sc_comp->add_flag("--closure", closure, "report the full component of closure(U)^c");
    sc_comp->add_option("--digits", digits, "certification digits");

    CLI::App* sc_double = app.add_subcommand("double", "doubling construction");
    sc_double->add_option("--seed", seed_text, "1, an integer, or an alpha sequence")->required();
    sc_double->add_option("--k", k_doublings, "number of doublings")->required();

    CLI::App* sc_su = app.add_subcommand("smallest-univoque", "smallest univoque base above n");
    sc_su->add_option("--n", seed_n, "integer window")->required();
    sc_su->add_option("--digits", n_digits, "prefix length");

    CLI::App* sc_sft = app.add_subcommand("sft", "forbidden blocks of the stability window");
    sc_sft->add_option("--q", base_text, "base")->required();
    sc_sft->add_option("--digits", digits, "certification digits");

    CLI::App* sc_member = app.add_subcommand("sft-member", "membership in the window subshift");
    sc_member->add_option("--c", c_text, "sequence to test")->required();
    sc_member->add_option("--q", base_text, "base")->required();
    sc_member->add_option("--digits", digits, "certification digits");

    CLI::App* sc_topo = app.add_subcommand("topology", "topology of U_q (or of one point)");
    sc_topo->add_option("--q", base_text, "base")->required();
    sc_topo->add_option("--point", point_text, "univoque sequence of the point");
    sc_topo->add_option("--digits", digits, "certification digits");

    CLI::App* sc_card = app.add_subcommand("cardinality", "cardinality of U_q");
    sc_card->add_option("--q", base_text, "base")->required();
    sc_card->add_option("--digits", card_depth, "comparison depth");

    CLI::App* sc_oracle = app.add_subcommand("oracle", "exhaustive expansion prefix tree");
    sc_oracle->add_option("--x", x_text, "value to expand")->required();
    sc_oracle->add_option("--base", base_text, "base q")->required();
    sc_oracle->add_option("--depth", depth, "tree depth");
    sc_oracle->add_flag("--count-only", count_only, "print only the leaf count");

    CLI::App* sc_const = app.add_subcommand("constants", "G, q', q'' enclosures");
    sc_const->add_option("--eps", eps_text, "target enclosure width");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    Output out;
    out.json = json;
    try {
        if (*sc_expand) {
            if (greedy && quasi) uv::fail(uv::errc::parse_failure, "--greedy and --quasi clash");
            ParsedBase b = parse_base(base_text);
            const uv::FieldElem x = parse_x(x_text, b.q);
            const uv::Word w = quasi ? uv::quasi_greedy_digits(x, digits) : uv::greedy_digits(x, digits);
            const std::string ws = uv::word_to_string(w, uv::alpha1_of(*b.q));
            out.set(Json{{"base", Json{{"form", b.form}, {"text", b.text}}},
                         {"kind", quasi ? "quasi-greedy" : "greedy"},
                         {"digits", ws}},
                    ws);
        } else if (*sc_cbase) {
            if (!alpha_text.empty()) {
                const uv::BaseClass cls = uv::classify_base(uv::parse_epseq(alpha_text));
                out.set(uv::json_of(cls),
                        std::string(uv::to_string(cls.variant)) + "\nalpha: " + uv::to_string(cls.alpha) +
                            (cls.minimal_k ? "\nminimal_k: " + std::to_string(*cls.minimal_k) : ""));
            } else if (!base_text.empty()) {
                ParsedBase b = parse_base(base_text);
                const uv::AlphaOfOne a = uv::alpha_of_one(b.q, digits);
                if (!a.certified) {
                    Json j = uv::json_of(a, a.prefix.empty() ? 1 : a.prefix.front());
                    j["base"] = Json{{"form", b.form}, {"text", b.text}};
                    out.set(j, "uncertified prefix: " +
                                   uv::word_to_string(a.prefix, a.prefix.empty() ? 1 : a.prefix.front()));
                } else {
                    const uv::BaseClass cls = uv::classify_base(*a.certified);
                    Json j = uv::json_of(cls);
                    j["base"] = Json{{"form", b.form}, {"text", b.text}};
                    out.set(j, std::string(uv::to_string(cls.variant)) + "\nalpha: " +
                                   uv::to_string(cls.alpha) +
                                   (cls.minimal_k ? "\nminimal_k: " + std::to_string(*cls.minimal_k)
                                                  : ""));
                }
            } else {
                uv::fail(uv::errc::parse_failure, "classify-base needs --alpha or --value");
            }
        } else if (*sc_cpoint) {
            const uv::PointClass p =
                uv::classify_point(uv::parse_epseq(a_text), uv::parse_epseq(alpha_text));
            out.set(uv::json_of(p), std::string("count: ") + uv::to_string(p.count) +
                                        "\nin_U_q: " + (p.in_Uq ? "true" : "false") +
                                        "\nin_V_q: " + (p.in_Vq ? "true" : "false") +
                                        "\ngreedy_finite: " + (p.greedy_finite ? "true" : "false"));
        } else if (*sc_exp1) {
            const uv::ExpansionsOfOne e =
                uv::expansions_of_one(uv::classify_base(uv::parse_epseq(alpha_text)));
            Json j = uv::json_of(e, materialize);
            std::string t = "alpha: " + uv::to_string(e.alpha);
            for (const auto& f : e.families) {
                const int a1 = e.alpha.alphabet_max();
                t += "\nfamily: block=" + uv::word_to_string(f.block, a1) + " head=" +
                     uv::word_to_string(f.head, a1) + " tail=" + uv::to_string(f.tail);
                for (long i = 0; i < materialize; ++i) {
                    t += "\n  member " + std::to_string(i) + ": " + uv::to_string(f.member(i));
                }
            }
            out.set(j, t);
        } else if (*sc_end) {
            if (!left_text.empty()) {
                const uv::BaseSpec spec = parse_seed(left_text);
                const uv::EpSeq r = uv::right_endpoint(spec);
                out.set(Json{{"right", uv::to_string(r)}}, uv::to_string(r));
            } else if (!alpha_text.empty()) {
                const uv::BaseSpec l = uv::left_endpoint(uv::parse_epseq(alpha_text));
                out.set(Json{{"left", uv::json_of(l)}}, l.to_text());
            } else {
                uv::fail(uv::errc::parse_failure, "endpoints needs --left or --right");
            }
        } else if (*sc_stab) {
            ParsedBase b = parse_base(base_text);
            const uv::StabilityInterval s = b.alpha ? uv::stability_interval(*b.alpha)
                                                    : uv::stability_interval(b.q, digits);
            Json j = uv::json_of(s);
            j["base"] = Json{{"form", b.form}, {"text", b.text}};
            out.set(j, s.singleton
                           ? "singleton"
                           : "q1: " + s.q1->to_text() + "\nq2: " + uv::to_string(*s.q2));
        } else if (*sc_comp) {
            ParsedBase b = parse_base(base_text);
            const uv::ClosureComponent c =
                b.alpha ? uv::closure_component(*b.alpha) : uv::closure_component(b.q, digits);
            Json j = uv::json_of(c);
            j["base"] = Json{{"form", b.form}, {"text", b.text}};
            std::string t = "p1: " + c.p1.to_text();
            for (const auto& e : c.chain) t += "\nchain: " + uv::to_string(e);
            t += "\nr: " + uv::to_string(c.r);
            out.set(j, t);
        } else if (*sc_double) {
            const uv::DoublingResult d = uv::doubling_construction(parse_seed(seed_text), k_doublings);
            const int a1 = d.chain.empty() ? 1 : d.chain.front().alphabet_max();
            Json j = uv::json_of(d, a1);
            std::string t = "prefix: " + uv::word_to_string(d.prefix, a1);
            for (const auto& e : d.chain) t += "\nchain: " + uv::to_string(e);
            out.set(j, t);
        } else if (*sc_su) {
            const uv::SmallestUnivoque s = uv::smallest_univoque(seed_n, n_digits);
            Json j = uv::json_of(s, seed_n);
            out.set(j, uv::word_to_string(s.prefix, seed_n) + "\nenclosure: " + enclosure_text(s));
        } else if (*sc_sft) {
            ParsedBase b = parse_base(base_text);
            const uv::ForbiddenSet f =
                b.alpha ? uv::forbidden_blocks(*b.alpha) : uv::forbidden_blocks(b.q, digits);
            Json j = uv::json_of(f);
            j["base"] = Json{{"form", b.form}, {"text", b.text}};
            out.set(j, join_lines(j["blocks"]));
        } else if (*sc_member) {
            ParsedBase b = parse_base(base_text);
            const uv::ForbiddenSet f =
                b.alpha ? uv::forbidden_blocks(*b.alpha) : uv::forbidden_blocks(b.q, digits);
            const bool m = uv::subshift_member(uv::parse_epseq(c_text, f.alphabet_max), f);
            out.set(Json{{"member", m}}, m ? "true" : "false");
        } else if (*sc_topo) {
            ParsedBase b = parse_base(base_text);
            if (point_text.empty()) {
                const uv::BaseTopology t =
                    b.alpha ? uv::base_topology(*b.alpha) : uv::base_topology(b.q, digits);
                out.set(Json{{"base_topology", uv::to_string(t)}}, uv::to_string(t));
            } else {
                const uv::EpSeq c = uv::parse_epseq(point_text);
                const uv::PointTopology t =
                    b.alpha ? uv::point_topology(c, *b.alpha) : uv::point_topology(c, b.q, digits);
                out.set(Json{{"point_topology", uv::to_string(t)}}, uv::to_string(t));
            }
        } else if (*sc_card) {
            ParsedBase b = parse_base(base_text);
            const uv::Cardinality c = uv::cardinality_of_Uq(b.q, card_depth);
            out.set(Json{{"cardinality", uv::to_string(c)}}, uv::to_string(c));
        } else if (*sc_oracle) {
            ParsedBase b = parse_base(base_text);
            const uv::FieldElem x = parse_x(x_text, b.q);
            const uv::PrefixTree t = uv::enumerate_prefixes(x, depth);
            Json j = uv::json_of(t);
            j["base"] = Json{{"form", b.form}, {"text", b.text}};
            if (count_only) {
                out.set(Json{{"count", t.leaves.size()}}, std::to_string(t.leaves.size()));
            } else {
                out.set(j, join_lines(j["leaves"]));
            }
        } else if (*sc_const) {
            const uv::Rat eps = parse_rat(eps_text);
            if (!(eps > 0)) uv::fail(uv::errc::parse_failure, "--eps must be positive");
            const uv::Rat slack = eps / 8;
            const auto outer_width = [&](const uv::SmallestUnivoque& s) {
                return uv::Rat(s.upper.approx(slack).second - s.lower.approx(slack).first);
            };
            long d = 8;
            uv::Constants c = uv::constants(d);
            while (d < 256 &&
                   (outer_width(c.q_prime) >= eps || outer_width(c.q_double_prime) >= eps)) {
                d *= 2;
                c = uv::constants(d);
            }
            Json j = uv::json_of(c);
            const uv::Rat display_eps = uv::Rat(1, 10000000000000LL);
            out.set(j, "G: " + uv::decimal_string(c.G.approx(display_eps).first, 12) +
                           "\nq': " + enclosure_text(c.q_prime) +
                           "\nq'': " + enclosure_text(c.q_double_prime));
        }
    } catch (const uv::DomainError& e) {
        const int code = e.code() == uv::errc::parse_failure ? 2 : 1;
        if (json) {
            Json envelope{{"status", "error"},
                          {"error", Json{{"code", e.code()}, {"message", e.what()}}}};
            std::cout << envelope.dump(2) << "\n";
        } else {
            std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        }
        return code;
    } catch (const std::exception& e) {
        if (json) {
            Json envelope{{"status", "error"},
                          {"error", Json{{"code", "Internal"}, {"message", e.what()}}}};
            std::cout << envelope.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 1;
    }

    if (json) {
        Json envelope{{"status", "ok"}, {"result", out.result}};
        std::cout << envelope.dump(2) << "\n";
    } else {
        std::cout << out.text << "\n";
    }
    return 0;
}
