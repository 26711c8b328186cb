#include "quadcdr/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadcdr/cdr_check.hpp"
#include "quadcdr/error.hpp"
#include "quadcdr/factor.hpp"
#include "quadcdr/literal.hpp"
#include "quadcdr/oracle.hpp"

namespace quadcdr::cli {

namespace {

using json = nlohmann::ordered_json;

json int_json(const Int& v) {
    if (v.fits_slong_p())
        return v.get_si();
    return to_string(v);
}

json triple_json(const Ideal& I) { return json::array({int_json(I.a()), int_json(I.b()), int_json(I.c())}); }

json ring_json(const RingSpec& r) {
    return json{{"d", int_json(r.d)}, {"f", int_json(r.f)}, {"T", int_json(r.T)},
                {"Nc", int_json(r.Nc)}, {"disc", int_json(r.disc)}};
}

json chain_json(const DivisorChain& chain) {
    json steps = json::array();
    for (const ChainStep& s : chain.steps)
        steps.push_back(json{{"prime", triple_json(s.prime)}, {"quotient", triple_json(s.quotient)}});
    return json{{"start", triple_json(chain.start)}, {"steps", steps}, {"stationary", chain.stationary}};
}

json violations_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const Violation& v : vs)
        out.push_back(json{{"I", triple_json(v.I)}, {"J", triple_json(v.J)}});
    return out;
}

bool is_usage_error(ErrorCode code) {
    return code == ErrorCode::ParseError || code == ErrorCode::InvalidRing ||
           code == ErrorCode::InvalidArgument;
}

struct Options {
    std::string ring_spec;
    bool structured = false;
    std::string I_text;
    std::string J_text;
    std::optional<long> norm_bound;
    std::optional<unsigned long> max_steps;
    std::optional<long> cap;
};

// Everything a command produces; rendered as text or as one JSON object.
class Outcome {
  public:
    Outcome(const RingSpec& ring, std::string command) : command_(std::move(command)) {
        report_["ring"] = ring_json(ring);
        report_["command"] = command_;
        report_["inputs"] = json::object();
        report_["result"] = nullptr;
    }

    json& inputs() { return report_["inputs"]; }
    json& result() { return report_["result"]; }
    json& extra(const char* key) { return report_[key]; }

    void line(const std::string& s) { text_ += s + "\n"; }

    void fail(const Error& e) {
        status_ = is_usage_error(e.code()) ? 2 : 1;
        report_["error"] = json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
        error_text_ = "error[" + std::string(error_code_name(e.code())) + "]: " + e.what() + "\n";
    }

    void set_status(int s) { status_ = s; }

    int emit(bool structured, std::ostream& out, std::ostream& err) const {
        if (structured) {
            out << report_.dump(2) << "\n";
        } else {
            out << text_;
            err << error_text_;
        }
        return status_;
    }

  private:
    std::string command_;
    json report_;
    std::string text_;
    std::string error_text_;
    int status_ = 0;
};

Ideal require_ideal(const RingSpec& ring, const std::string& text, const char* flag) {
    if (text.empty())
        throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required");
    return parse_ideal_literal(ring, text);
}

void cmd_ring_info(const RingSpec& ring, Outcome& o) {
    o.result() = json{{"maximal", ring.is_maximal()}};
    o.line("ring " + describe(ring) + ": Z + Z*w with w^2 = " + to_string(ring.T) + "*w - (" +
           to_string(ring.Nc) + ")");
    o.line("discriminant " + to_string(ring.disc) + (ring.is_maximal() ? ", maximal order (Dedekind)"
                                                                       : ", non-maximal order"));
}

void cmd_hnf(const RingSpec& ring, const Options& opt, Outcome& o) {
    Ideal I = require_ideal(ring, opt.I_text, "--I");
    o.inputs()["I"] = triple_json(I);
    o.result() = json{{"hnf", triple_json(I)}, {"norm", int_json(I.norm())}, {"prime", is_prime(I)}};
    o.line(render(I) + "  norm " + to_string(I.norm()) + (is_prime(I) ? "  prime" : ""));
}

void cmd_mul(const RingSpec& ring, const Options& opt, Outcome& o) {
    Ideal I = require_ideal(ring, opt.I_text, "--I");
    Ideal J = require_ideal(ring, opt.J_text, "--J");
    o.inputs()["I"] = triple_json(I);
    o.inputs()["J"] = triple_json(J);
    Ideal P = mul(I, J);
    o.result() = json{{"hnf", triple_json(P)}, {"norm", int_json(P.norm())}};
    o.line(render(P) + "  norm " + to_string(P.norm()));
}

void cmd_contains(const RingSpec& ring, const Options& opt, Outcome& o) {
    Ideal I = require_ideal(ring, opt.I_text, "--I");
    Ideal J = require_ideal(ring, opt.J_text, "--J");
    o.inputs()["I"] = triple_json(I);
    o.inputs()["J"] = triple_json(J);
    bool c = contains(J, I);
    o.result() = json{{"contained", c}};
    o.line(render(I) + (c ? " is contained in " : " is not contained in ") + render(J));
}

void cmd_divide(const RingSpec& ring, const Options& opt, Outcome& o) {
    Ideal I = require_ideal(ring, opt.I_text, "--I");
    Ideal J = require_ideal(ring, opt.J_text, "--J");
    o.inputs()["I"] = triple_json(I);
    o.inputs()["J"] = triple_json(J);
    auto H = divide_exact(I, J);
    if (!H) {
        if (contains(J, I))
            throw Error(ErrorCode::NotDivisible,
                        "containment-division violation: " + render(I) + " is contained in " +
                            render(J) + " but no ideal H satisfies I = H*J");
        throw Error(ErrorCode::NotDivisible,
                    render(I) + " is not contained in " + render(J) + ", so " + render(J) +
                        " cannot divide it");
    }
    o.result() = json{{"quotient", triple_json(*H)}, {"norm", int_json(H->norm())}};
    o.line(render(I) + " = " + render(*H) + " * " + render(J));
}

void describe_chain(const DivisorChain& chain, Outcome& o) {
    Ideal prev = chain.start;
    for (std::size_t k = 0; k < chain.steps.size(); ++k) {
        const ChainStep& s = chain.steps[k];
        o.line("  step " + std::to_string(k + 1) + ": " + render(prev) + " = " + render(s.quotient) +
               " * " + render(s.prime));
        prev = s.quotient;
    }
}

void cmd_factor(const RingSpec& ring, const Options& opt, Outcome& o, bool chain_mode) {
    Ideal I = require_ideal(ring, opt.I_text, "--I");
    o.inputs()["I"] = triple_json(I);
    o.inputs()["max_steps"] = opt.max_steps ? json(*opt.max_steps) : json(default_max_steps(I));
    Factorization fz = [&] {
        try {
            return factor_ideal(I, opt.max_steps);
        } catch (const FactorError& e) {
            o.extra("chain") = chain_json(e.partial_chain());
            describe_chain(e.partial_chain(), o);
            throw;
        }
    }();

    Ideal product = unit_ideal(ring);
    json factors = json::array();
    for (const Ideal& P : fz.factors) {
        product = mul(product, P);
        factors.push_back(triple_json(P));
    }
    const bool reconstructs = product == I;

    if (!chain_mode) {
        o.result() = json{{"factors", factors}, {"reconstructs", reconstructs}};
        std::string line = render(I) + " =";
        if (fz.factors.empty())
            line += " (1)";
        for (std::size_t k = 0; k < fz.factors.size(); ++k)
            line += (k ? " * " : " ") + render(fz.factors[k]);
        o.line(line);
        o.line(std::to_string(fz.factors.size()) + " prime factor(s); product " +
               (reconstructs ? "reconstructs the input exactly" : "DOES NOT reconstruct the input"));
    } else {
        // The chain ends at (1); repeating it shows stationarity.
        std::vector<Ideal> ideals = fz.chain.ideals();
        ideals.push_back(unit_ideal(ring));
        DiccCheck dicc = check_dicc_chain(ideals);
        json chain_ideals = json::array();
        for (const Ideal& J : ideals)
            chain_ideals.push_back(triple_json(J));
        o.result() = json{{"chain_ideals", chain_ideals},
                          {"is_divisor_chain", dicc.is_divisor_chain},
                          {"stationary_at", dicc.stationary_at ? json(*dicc.stationary_at) : json(nullptr)},
                          {"length", fz.chain.steps.size()}};
        describe_chain(fz.chain, o);
        o.line("divisor chain: " + std::string(dicc.is_divisor_chain ? "yes" : "no") + ", stationary at " +
               (dicc.stationary_at ? std::to_string(*dicc.stationary_at) : std::string("-")) +
               ", length " + std::to_string(fz.chain.steps.size()));
    }
    o.extra("chain") = chain_json(fz.chain);
    if (!reconstructs)
        throw Error(ErrorCode::InternalArithmeticBug, "factor product does not reconstruct the input");
}

Int bound_for(const RingSpec& ring, const Options& opt) {
    return opt.norm_bound ? Int(*opt.norm_bound) : default_norm_bound(ring);
}

void report_violations(const CdrReport& rep, Outcome& o) {
    o.extra("violations") = violations_json(rep.violations);
    constexpr std::size_t kShown = 10;
    for (std::size_t k = 0; k < rep.violations.size() && k < kShown; ++k)
        o.line("  violation: " + render(rep.violations[k].I) + " in " + render(rep.violations[k].J) +
               " but not divisible");
    if (rep.violations.size() > kShown)
        o.line("  ... " + std::to_string(rep.violations.size() - kShown) + " more");
}

json report_summary(const CdrReport& rep) {
    return json{{"verdict", verdict_name(rep.verdict)},
                {"universe_size", rep.universe_size},
                {"pairs_checked", rep.pairs_checked},
                {"violation_count", rep.violations.size()},
                {"dedekind_expected", rep.dedekind_expected}};
}

void cmd_check_cdr(const RingSpec& ring, const Options& opt, Outcome& o) {
    Int bound = bound_for(ring, opt);
    o.inputs()["norm_bound"] = int_json(bound);
    CdrReport rep = check_cdr(ring, bound);
    o.result() = report_summary(rep);
    o.line(std::string("verdict: ") + verdict_name(rep.verdict) + " (norm bound " + to_string(bound) + ", " +
           std::to_string(rep.universe_size) + " ideals, " + std::to_string(rep.pairs_checked) + " pairs, " +
           std::to_string(rep.violations.size()) + " violations)");
    report_violations(rep, o);
    o.set_status(rep.verdict == Verdict::CdrUpToBound ? 0 : 1);
}

void cmd_classify(const RingSpec& ring, const Options& opt, Outcome& o) {
    Int bound = bound_for(ring, opt);
    o.inputs()["norm_bound"] = int_json(bound);
    Classification cls = classify_ring(ring, bound);
    json summary = report_summary(cls.report);
    o.result() = json{{"dedekind", cls.dedekind}, {"cdr_verdict", verdict_name(cls.cdr_verdict)},
                      {"consistent", cls.consistent}, {"report", summary}};
    o.line(std::string("dedekind: ") + (cls.dedekind ? "yes" : "no") + ", cdr verdict: " +
           verdict_name(cls.cdr_verdict) + ", consistent: " + (cls.consistent ? "yes" : "no"));
    if (!cls.consistent)
        o.line("no violation found up to norm " + to_string(bound) + "; raise --norm-bound");
    report_violations(cls.report, o);
    o.set_status(cls.consistent ? 0 : 1);
}

void cmd_enumerate(const RingSpec& ring, const Options& opt, Outcome& o) {
    Int bound = opt.norm_bound ? Int(*opt.norm_bound) : Int(10);
    o.inputs()["norm_bound"] = int_json(bound);
    std::vector<Int> counts = oracle::count_ideals(ring, bound);
    json counts_json = json::array();
    for (const Int& c : counts)
        counts_json.push_back(int_json(c));
    json ideals = json::array();
    for (const Ideal& I : enumerate_up_to(ring, bound).members) {
        ideals.push_back(triple_json(I));
        o.line(render(I) + "  norm " + to_string(I.norm()));
    }
    o.result() = json{{"counts", counts_json}, {"ideals", ideals}};
}

void cmd_oracle_divide(const RingSpec& ring, const Options& opt, Outcome& o) {
    Ideal I = require_ideal(ring, opt.I_text, "--I");
    Ideal J = require_ideal(ring, opt.J_text, "--J");
    Int cap = opt.cap ? Int(*opt.cap) : I.norm();
    o.inputs()["I"] = triple_json(I);
    o.inputs()["J"] = triple_json(J);
    o.inputs()["cap"] = int_json(cap);
    auto brute = oracle::brute_divide(I, J, cap);
    auto fast = divide_exact(I, J);
    const bool agrees = brute.has_value() == fast.has_value() && (!brute || *brute == *fast);
    o.result() = json{{"quotient", brute ? triple_json(*brute) : json(nullptr)}, {"fast_path_agrees", agrees}};
    if (brute)
        o.line("witness " + render(*brute) + " (exhaustive search up to norm " + to_string(cap) + ")");
    else
        o.line("no witness H with I = H*J up to norm " + to_string(cap));
    o.line(std::string("colon-ideal route ") + (agrees ? "agrees" : "DISAGREES"));
    if (!agrees)
        throw Error(ErrorCode::InternalArithmeticBug, "exhaustive search and colon ideal disagree");
    if (!brute)
        throw Error(ErrorCode::NotDivisible, "no witness found by exhaustive search");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact ideal arithmetic and containment-division checks in quadratic orders", "quadcdr"};
    app.fallthrough();
    app.require_subcommand(1, 1);

    Options opt;
    app.add_option("--ring", opt.ring_spec, "ring as d=<int>,f=<int>")->required();
    app.add_flag("--structured", opt.structured, "emit one JSON report object");

    auto with_ideals = [&](CLI::App* sub, bool need_j) {
        sub->add_option("--I", opt.I_text, "ideal literal, e.g. \"2, 1+w\"")->required();
        if (need_j)
            sub->add_option("--J", opt.J_text, "ideal literal")->required();
        return sub;
    };

    app.add_subcommand("ring-info", "describe the ring");
    with_ideals(app.add_subcommand("hnf", "canonical form of an ideal"), false);
    with_ideals(app.add_subcommand("mul", "product I*J"), true);
    with_ideals(app.add_subcommand("contains", "is I contained in J"), true);
    with_ideals(app.add_subcommand("divide", "H with I = H*J"), true);
    auto* factor = with_ideals(app.add_subcommand("factor", "prime factorization by divisor chain"), false);
    factor->add_option("--max-steps", opt.max_steps)->check(CLI::PositiveNumber);
    auto* chain = with_ideals(app.add_subcommand("chain", "divisor chain and its DiCC check"), false);
    chain->add_option("--max-steps", opt.max_steps)->check(CLI::PositiveNumber);
    for (const char* name : {"check-cdr", "classify", "enumerate"})
        app.add_subcommand(name, "")->add_option("--norm-bound", opt.norm_bound)->check(CLI::PositiveNumber);
    app.get_subcommand("check-cdr")->description("containment-division check over bounded norms");
    app.get_subcommand("classify")->description("compare the CDR verdict with the Dedekind property");
    app.get_subcommand("enumerate")->description("list ideals of norm <= bound");
    auto* od = with_ideals(app.add_subcommand("oracle-divide", "exhaustive witness search"), true);
    od->add_option("--cap", opt.cap, "search norm cap (default norm(I))")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[usage_error]: " << e.what() << "\n";
        return 2;
    }

    RingSpec ring;
    try {
        ring = parse_ring_spec(opt.ring_spec);
    } catch (const Error& e) {
        err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Outcome o(ring, command);
    try {
        if (command == "ring-info") cmd_ring_info(ring, o);
        else if (command == "hnf") cmd_hnf(ring, opt, o);
        else if (command == "mul") cmd_mul(ring, opt, o);
        else if (command == "contains") cmd_contains(ring, opt, o);
        else if (command == "divide") cmd_divide(ring, opt, o);
        else if (command == "factor") cmd_factor(ring, opt, o, false);
        else if (command == "chain") cmd_factor(ring, opt, o, true);
        else if (command == "check-cdr") cmd_check_cdr(ring, opt, o);
        else if (command == "classify") cmd_classify(ring, opt, o);
        else if (command == "enumerate") cmd_enumerate(ring, opt, o);
        else if (command == "oracle-divide") cmd_oracle_divide(ring, opt, o);
    } catch (const Error& e) {
        o.fail(e);
    }
    return o.emit(opt.structured, out, err);
}

}  // namespace quadcdr::cli
