// tmpat -- command line front end: decision procedures, enumerations, and
// verification suites for binary patterns in the Thue-Morse word.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tmpat/avoidance.hpp"
#include "tmpat/morphism.hpp"
#include "tmpat/sweeps.hpp"
#include "tmpat/thue_morse.hpp"
#include "tmpat/typicality.hpp"
#include "tmpat/word.hpp"

using namespace tmpat;
using nlohmann::json;
using sweeps::Mode;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Context {
    bool json_output = false;
    json payload;
    std::string status = "value";
    std::string command;
};

void emit(const Context& ctx, double elapsed_ms) {
    if (!ctx.json_output) return;
    json doc{{"command", ctx.command},
             {"status", ctx.status},
             {"payload", ctx.payload},
             {"elapsed_ms", elapsed_ms}};
    std::cout << doc.dump(2) << "\n";
}

Word parse_binary_word(const std::string& text) { return Word::binary(text); }

json morphism_json(const Morphism& phi) {
    json images = json::object();
    for (std::size_t i = 0; i < phi.source().size(); ++i)
        images[std::string(1, phi.source().letter(i))] = phi.image_at(i);
    return json{{"literal", phi.format()}, {"images", images}};
}

// ---------------------------------------------------------------- verify --

struct SuiteSpec {
    std::string name;
    std::string summary;
};

const std::vector<SuiteSpec>& suite_specs() {
    static const std::vector<SuiteSpec> specs = {
        {"prop1", "segment oracle, minimality, closure, repetition-freeness"},
        {"thm1-thm3-equiv", "avoided ideal vs closed-form unavoidability"},
        {"lemma3", "special segments stay special under the substitution"},
        {"prop5", "square roots are iterate images of a, b, aba, bab"},
        {"cor1", "iterate-image occurrences are power-of-two aligned"},
        {"thm6", "length-3 criterion certifies typicality"},
        {"thm7", "bounded witness search matches the atypical list"},
        {"cor11", "segment preservation characterizes the substitution monoid"},
        {"prop10", "the word and its exchange share no suffix window"},
        {"recurrence", "uniform recurrence windows achieved and tight"},
    };
    return specs;
}

struct SuiteOutcome {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::vector<std::string> violations;
    double seconds = 0;
};

void merge(SuiteOutcome& outcome, const sweeps::Report& report) {
    outcome.checked += report.checked;
    outcome.passed = outcome.passed && report.ok();
    outcome.violations.insert(outcome.violations.end(), report.violations.begin(),
                              report.violations.end());
}

SuiteOutcome run_suite(const std::string& name, std::optional<std::size_t> max_len,
                       Mode mode) {
    SuiteOutcome outcome;
    outcome.name = name;
    const auto start = std::chrono::steady_clock::now();

    const auto bound = [&](std::size_t fallback) { return max_len.value_or(fallback); };

    if (name == "prop1") {
        merge(outcome, sweeps::oracle_equivalence_sweep(bound(16), std::size_t{1} << 20, mode));
        merge(outcome, sweeps::minimality_sweep(3, 12));
        merge(outcome, sweeps::segment_closure_sweep(bound(14), std::size_t{1} << 20, mode));
        const auto repetition = sweeps::repetition_sweep(std::size_t{1} << 16, mode);
        outcome.checked += repetition.prefix_len;
        if (!repetition.ok()) {
            outcome.passed = false;
            outcome.violations.push_back("the 2^16 prefix has a forbidden repetition");
        }
    } else if (name == "thm1-thm3-equiv") {
        const auto equivalence = sweeps::unavoidability_equivalence_sweep(bound(14), mode);
        merge(outcome, equivalence);
        if (equivalence.nonsegment_unavoidable !=
            std::vector<std::string>{"aabaa", "bbabb"}) {
            outcome.passed = false;
            outcome.violations.push_back("unexpected non-segment unavoidable words");
        }
        merge(outcome, sweeps::generator_sweep(200));
    } else if (name == "lemma3") {
        merge(outcome, sweeps::special_propagation_sweep(bound(32), mode));
    } else if (name == "prop5") {
        merge(outcome, sweeps::square_root_sweep(bound(24), mode));
    } else if (name == "cor1") {
        merge(outcome, sweeps::synchronization_sweep(static_cast<int>(bound(6)),
                                                     std::size_t{1} << 15));
    } else if (name == "thm6") {
        merge(outcome, sweeps::criterion_soundness_sweep(bound(12), 6, mode));
    } else if (name == "thm7") {
        merge(outcome, sweeps::atypical_completeness_sweep(bound(8), 8, mode));
    } else if (name == "cor11") {
        merge(outcome, sweeps::monoid_preservation_sweep(4, bound(12), mode));
    } else if (name == "prop10") {
        merge(outcome, sweeps::divergence_sweep(bound(64), 4096, mode));
    } else if (name == "recurrence") {
        merge(outcome, sweeps::recurrence_sweep(3, bound(17), mode));
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }

    outcome.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return outcome;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary patterns in the Thue-Morse word: decision procedures and "
                 "verification suites"};
    app.require_subcommand(1);

    Context ctx;
    app.add_flag("--json", ctx.json_output, "machine-readable output");

    // prefix N
    auto* cmd_prefix = app.add_subcommand("prefix", "print the first N letters of the word");
    std::size_t prefix_n = 0;
    cmd_prefix->add_option("N", prefix_n, "prefix length")->required();

    // segment W
    auto* cmd_segment = app.add_subcommand("segment", "is W a segment of the word?");
    std::string segment_w;
    cmd_segment->add_option("word", segment_w)->required();

    // unavoidable W
    auto* cmd_unavoidable =
        app.add_subcommand("unavoidable", "is W unavoidable (some image is a segment)?");
    std::string unavoidable_w;
    cmd_unavoidable->add_option("word", unavoidable_w)->required();

    // witness P --max-image-len B [--alphabet A] [--prefix-len N]
    auto* cmd_witness =
        app.add_subcommand("witness", "search for a morphism mapping P onto a segment");
    std::string witness_p;
    int witness_bound = 0;
    std::string witness_alphabet;
    std::size_t witness_prefix = std::size_t{1} << 15;
    cmd_witness->add_option("pattern", witness_p)->required();
    cmd_witness->add_option("--max-image-len", witness_bound, "image length bound")
        ->required();
    cmd_witness->add_option("--alphabet", witness_alphabet,
                            "pattern alphabet (default: letters of P)");
    cmd_witness->add_option("--prefix-len", witness_prefix,
                            "prefix searched for the occurrence");

    // avoided W
    auto* cmd_avoided =
        app.add_subcommand("avoided", "is W in the avoided ideal? reports the instance");
    std::string avoided_w;
    cmd_avoided->add_option("word", avoided_w)->required();

    // classify W
    auto* cmd_classify = app.add_subcommand("classify", "typical / atypical / not-a-segment");
    std::string classify_w;
    cmd_classify->add_option("word", classify_w)->required();

    // enumerate --length K [--special]
    auto* cmd_enumerate = app.add_subcommand("enumerate", "list all segments of a length");
    std::size_t enumerate_len = 0;
    bool enumerate_special = false;
    cmd_enumerate->add_option("--length", enumerate_len, "segment length")->required();
    cmd_enumerate->add_flag("--special", enumerate_special, "only special segments");

    // squares --max-root-len N
    auto* cmd_squares =
        app.add_subcommand("squares", "all square roots with their classification");
    std::size_t squares_max = 0;
    cmd_squares->add_option("--max-root-len", squares_max, "largest root length")->required();

    // recurrence K
    auto* cmd_recurrence =
        app.add_subcommand("recurrence", "minimal window containing all length-K segments");
    std::size_t recurrence_k = 0;
    cmd_recurrence->add_option("K", recurrence_k)->required();

    // atypical [--dot FILE]
    auto* cmd_atypical = app.add_subcommand("atypical", "the finite set of atypical words");
    std::string atypical_dot;
    cmd_atypical->add_option("--dot", atypical_dot, "write the order diagram to FILE");

    // in-monoid M
    auto* cmd_in_monoid = app.add_subcommand(
        "in-monoid", "is the endomorphism a product of the substitution and the exchange?");
    std::string in_monoid_literal;
    cmd_in_monoid->add_option("morphism", in_monoid_literal, "literal like a->ab,b->ba")
        ->required();

    // verify [--suite NAME] [--max-len N] [--serial]
    auto* cmd_verify = app.add_subcommand("verify", "run named invariant suites");
    std::string verify_suite;
    std::optional<std::size_t> verify_max_len;
    bool verify_serial = false;
    cmd_verify->add_option("--suite", verify_suite, "one suite (default: all)");
    std::size_t verify_max_len_raw = 0;
    auto* max_len_opt =
        cmd_verify->add_option("--max-len", verify_max_len_raw, "override the main bound");
    cmd_verify->add_flag("--serial", verify_serial, "use the serial reference drivers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    const auto started = std::chrono::steady_clock::now();
    const auto elapsed_ms = [&started] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         started)
            .count();
    };

    int exit_code = kExitYes;
    try {
        if (cmd_prefix->parsed()) {
            ctx.command = "prefix";
            const TmPrefix p = tm_prefix(prefix_n);
            if (ctx.json_output)
                ctx.payload = {{"length", p.length()}, {"letters", std::string(p.view())}};
            else
                std::cout << p.view() << "\n";
        } else if (cmd_segment->parsed()) {
            ctx.command = "segment";
            const bool yes = is_segment(parse_binary_word(segment_w));
            ctx.status = yes ? "yes" : "no";
            ctx.payload = {{"word", segment_w}, {"segment", yes}};
            if (!ctx.json_output) std::cout << (yes ? "yes" : "no") << "\n";
            exit_code = yes ? kExitYes : kExitNo;
        } else if (cmd_unavoidable->parsed()) {
            ctx.command = "unavoidable";
            const Word w = parse_binary_word(unavoidable_w);
            const bool exception_word = w.text() == "aabaa" || w.text() == "bbabb";
            const bool segment = is_segment(w);
            const bool yes = exception_word || segment;
            const std::string reason =
                exception_word ? "exception-word" : (segment ? "segment" : "avoided");
            ctx.status = yes ? "yes" : "no";
            ctx.payload = {{"word", unavoidable_w}, {"unavoidable", yes}, {"reason", reason}};
            if (!ctx.json_output)
                std::cout << (yes ? "yes" : "no") << ", reason=" << reason << "\n";
            exit_code = yes ? kExitYes : kExitNo;
        } else if (cmd_witness->parsed()) {
            ctx.command = "witness";
            if (witness_alphabet.empty()) {
                const std::set<char> letters(witness_p.begin(), witness_p.end());
                witness_alphabet.assign(letters.begin(), letters.end());
            }
            const Word pattern(Alphabet(witness_alphabet), witness_p);
            const auto witness = find_witness(pattern, witness_bound, witness_prefix);
            if (witness) {
                ctx.status = "yes";
                ctx.payload = {{"pattern", witness_p},
                               {"morphism", morphism_json(witness->morphism)},
                               {"image", witness->image.text()},
                               {"position", witness->position}};
                if (!ctx.json_output)
                    std::cout << "witness " << witness->morphism.format() << ", image "
                              << witness->image.text() << " at position "
                              << witness->position << "\n";
            } else {
                ctx.status = "no";
                ctx.payload = {{"pattern", witness_p},
                               {"note", "no witness within the bound; not a proof of "
                                        "avoidance"}};
                if (!ctx.json_output) std::cout << "no witness within the bound\n";
                exit_code = kExitNo;
            }
        } else if (cmd_avoided->parsed()) {
            ctx.command = "avoided";
            const Word w = parse_binary_word(avoided_w);
            std::optional<Word> generator;
            std::optional<Morphism> instance;
            if (w.size() >= 3) {
                for (const Word& g : shur_generators(w.size()).all()) {
                    if (auto phi = contains_pattern_instance(w, g)) {
                        generator = g;
                        instance = phi;
                        break;
                    }
                }
            }
            const bool yes = generator.has_value();
            ctx.status = yes ? "yes" : "no";
            ctx.payload = {{"word", avoided_w}, {"avoided", yes}};
            if (yes) {
                ctx.payload["generator"] = generator->text();
                ctx.payload["instance"] = morphism_json(*instance);
                ctx.payload["instance_image"] = instance->apply_text(generator->view());
            }
            if (!ctx.json_output) {
                if (yes)
                    std::cout << "yes: instance of generator " << generator->text() << " via "
                              << instance->format() << "\n";
                else
                    std::cout << "no\n";
            }
            exit_code = yes ? kExitYes : kExitNo;
        } else if (cmd_classify->parsed()) {
            ctx.command = "classify";
            const TypicalityVerdict verdict = classify(parse_binary_word(classify_w));
            ctx.payload = {{"word", classify_w}, {"verdict", to_string(verdict.verdict)}};
            if (verdict.verdict != Typicality::not_a_segment) {
                json found = json::array();
                for (const Word& f : verdict.length3_found) found.push_back(f.text());
                ctx.payload["length3_found"] = found;
                ctx.payload["criterion_met"] = verdict.criterion_met;
            }
            if (verdict.atypical_container) {
                ctx.payload["container"] = verdict.atypical_container->text();
                ctx.payload["container_variant"] = verdict.container_variant;
                ctx.payload["container_position"] = *verdict.container_position;
            }
            if (!ctx.json_output) {
                std::cout << to_string(verdict.verdict);
                if (verdict.verdict == Typicality::atypical)
                    std::cout << " (factor of " << verdict.container_variant << " of "
                              << verdict.atypical_container->text() << " at "
                              << *verdict.container_position << ")";
                if (verdict.verdict == Typicality::typical)
                    std::cout << (verdict.criterion_met ? " (length-3 criterion met)"
                                                        : " (complete-list membership)");
                std::cout << "\n";
            }
        } else if (cmd_enumerate->parsed()) {
            ctx.command = "enumerate";
            std::vector<Word> words = segments_of_length(enumerate_len);
            if (enumerate_special) {
                std::vector<Word> special;
                for (const Word& w : words)
                    if (is_special(w)) special.push_back(w);
                words = std::move(special);
            }
            json list = json::array();
            for (const Word& w : words) {
                list.push_back(w.text());
                if (!ctx.json_output) std::cout << w.text() << "\n";
            }
            ctx.payload = {{"length", enumerate_len},
                           {"special_only", enumerate_special},
                           {"count", words.size()},
                           {"words", list}};
            if (!ctx.json_output) std::cout << "count " << words.size() << "\n";
        } else if (cmd_squares->parsed()) {
            ctx.command = "squares";
            json list = json::array();
            for (std::size_t len = 1; len <= squares_max; ++len) {
                for (const Word& u : segments_of_length(len)) {
                    const auto cls = classify_square_root(u);
                    if (!cls) continue;
                    list.push_back({{"root", u.text()},
                                    {"base", cls->base.text()},
                                    {"exponent", cls->exponent}});
                    if (!ctx.json_output)
                        std::cout << u.text() << " = iterate^" << cls->exponent << "("
                                  << cls->base.text() << ")\n";
                }
            }
            ctx.payload = {{"max_root_len", squares_max}, {"roots", list}};
        } else if (cmd_recurrence->parsed()) {
            ctx.command = "recurrence";
            const std::size_t window = recurrence_window(recurrence_k);
            ctx.payload = {{"k", recurrence_k}, {"window", window}};
            if (!ctx.json_output) std::cout << window << "\n";
        } else if (cmd_atypical->parsed()) {
            ctx.command = "atypical";
            json list = json::array();
            for (const Word& w : atypical_words()) {
                list.push_back(w.text());
                if (!ctx.json_output) std::cout << w.text() << "\n";
            }
            ctx.payload = {{"count", atypical_words().size()}, {"words", list}};
            if (!ctx.json_output) std::cout << "count " << atypical_words().size() << "\n";
            if (!atypical_dot.empty()) {
                std::ofstream out(atypical_dot);
                if (!out) throw std::runtime_error("cannot write " + atypical_dot);
                out << export_jorder_dot(build_s0());
                ctx.payload["dot_file"] = atypical_dot;
                if (!ctx.json_output) std::cout << "wrote " << atypical_dot << "\n";
            }
        } else if (cmd_in_monoid->parsed()) {
            ctx.command = "in-monoid";
            const Morphism phi =
                Morphism::parse(in_monoid_literal, Alphabet::binary(), Alphabet::binary());
            const auto form = in_mu_xi_monoid(phi);
            ctx.status = form ? "yes" : "no";
            ctx.payload = {{"morphism", in_monoid_literal}, {"member", form.has_value()}};
            if (form) {
                ctx.payload["exponent"] = form->exponent;
                ctx.payload["uses_exchange"] = form->uses_exchange;
            }
            if (!ctx.json_output) {
                if (form)
                    std::cout << "yes: " << (form->uses_exchange ? "exchange o " : "")
                              << "substitution^" << form->exponent << "\n";
                else
                    std::cout << "no\n";
            }
            exit_code = form ? kExitYes : kExitNo;
        } else if (cmd_verify->parsed()) {
            ctx.command = "verify";
            if (max_len_opt->count() > 0) verify_max_len = verify_max_len_raw;
            const Mode mode = verify_serial ? Mode::serial : Mode::parallel;
            std::vector<std::string> names;
            if (verify_suite.empty())
                for (const SuiteSpec& spec : suite_specs()) names.push_back(spec.name);
            else
                names.push_back(verify_suite);

            json suites = json::array();
            bool all_ok = true;
            for (const std::string& name : names) {
                const SuiteOutcome outcome = run_suite(name, verify_max_len, mode);
                all_ok = all_ok && outcome.passed;
                json entry{{"suite", outcome.name},
                           {"passed", outcome.passed},
                           {"checked", outcome.checked},
                           {"seconds", outcome.seconds}};
                if (!outcome.violations.empty()) {
                    json vs = json::array();
                    for (std::size_t i = 0; i < outcome.violations.size() && i < 10; ++i)
                        vs.push_back(outcome.violations[i]);
                    entry["violations"] = vs;
                }
                suites.push_back(entry);
                if (!ctx.json_output) {
                    std::printf("%-16s %s  (%llu cases, %.2fs)\n", outcome.name.c_str(),
                                outcome.passed ? "PASS" : "FAIL",
                                static_cast<unsigned long long>(outcome.checked),
                                outcome.seconds);
                    for (std::size_t i = 0; i < outcome.violations.size() && i < 10; ++i)
                        std::printf("    %s\n", outcome.violations[i].c_str());
                    std::fflush(stdout);
                }
            }
            ctx.status = all_ok ? "yes" : "no";
            ctx.payload = {{"suites", suites}, {"passed", all_ok}};
            if (!ctx.json_output)
                std::cout << (all_ok ? "all suites passed" : "some suites FAILED") << "\n";
            exit_code = all_ok ? kExitYes : kExitNo;
        }
    } catch (const std::exception& e) {
        ctx.status = "error";
        ctx.payload = {{"message", e.what()}};
        if (!ctx.json_output) std::cerr << "error: " << e.what() << "\n";
        emit(ctx, elapsed_ms());
        return kExitError;
    }

    emit(ctx, elapsed_ms());
    return exit_code;
}
