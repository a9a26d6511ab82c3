// Command-line front end: generate words from the word-specification
// grammar, analyze
// windows, run membership probes and censuses, exercise the subshift
// fixtures, and run the verification battery.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "abelian/analysis.hpp"
#include "abelian/closure.hpp"
#include "abelian/spec_parser.hpp"
#include "abelian/subshift.hpp"
#include "abelian/verify.hpp"

using json = nlohmann::ordered_json;
using namespace abelian;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

json verdict_json(const MembershipVerdict& v) {
    json j;
    j["schema"] = 1;
    j["result"] = v.member ? "member-up-to-L" : "rejected";
    j["L"] = v.max_len;
    j["window"] = {{"y", v.window_y}, {"x", v.window_x}};
    if (v.witness) {
        j["witness"] = *v.witness;
        j["witness_length"] = v.witness->size();
    }
    return j;
}

ForbiddenSet fixture_or_file(const std::string& name) {
    if (name == "golden-mean") return golden_mean();
    if (name == "three-letter") return three_letter_walk();
    if (name == "binary-order6") return binary_order6();
    if (name == "four-letter-sofic") return four_letter_sofic();
    std::ifstream in(name);
    if (!in) throw std::invalid_argument("no fixture or readable file named '" + name + "'");
    return ForbiddenSet::parse(in, name);
}

struct Options {
    std::string format = "text";
};

void emit(const Options& opt, const std::string& text, const json& j) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"abelian closures of infinite words: generators, analyses, probes"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    int exit_code = kExitOk;

    // generate <spec> -n N
    std::string gen_spec;
    std::size_t gen_n = 64;
    auto* gen = app.add_subcommand("generate", "print a prefix of a word");
    gen->fallthrough();
    gen->add_option("spec", gen_spec, "word specification")->required();
    gen->add_option("-n", gen_n, "prefix length")->capture_default_str();
    gen->callback([&] {
        Word w = word_from_spec(gen_spec).prefix(gen_n);
        emit(opt, w + "\n", json{{"schema", 1}, {"spec", gen_spec}, {"prefix", w}});
    });

    // complexity <spec> --abelian|--factor -L
    std::string cx_spec;
    std::size_t cx_len = 20, cx_window = 0;
    bool cx_abelian = false, cx_factor = false;
    auto* cx = app.add_subcommand("complexity", "per-length complexity profile");
    cx->fallthrough();
    cx->add_option("spec", cx_spec)->required();
    cx->add_flag("--abelian", cx_abelian, "abelian complexity");
    cx->add_flag("--factor", cx_factor, "factor complexity");
    cx->add_option("-L", cx_len, "maximum length")->capture_default_str();
    cx->add_option("-N", cx_window, "window (0 = stabilized)");
    cx->callback([&] {
        if (cx_abelian == cx_factor)
            throw CLI::ValidationError("complexity", "choose exactly one of --abelian / --factor");
        auto w = word_from_spec(cx_spec);
        std::size_t window = cx_window;
        bool stabilized = false;
        std::vector<std::size_t> values(cx_len + 1, 0);
        if (cx_abelian) {
            if (window == 0) {
                auto stable = stabilized_index(w, cx_len, 1024, 1 << 17);
                window = stable.window;
                stabilized = stable.stabilized;
                for (std::size_t n = 1; n <= cx_len; ++n)
                    values[n] = stable.index.abelian_complexity(n);
            } else {
                AbelianIndex idx(w, cx_len, window);
                for (std::size_t n = 1; n <= cx_len; ++n) values[n] = idx.abelian_complexity(n);
            }
        } else {
            if (window == 0) window = std::max<std::size_t>(4096, 64 * cx_len);
            auto profile = factor_complexity_profile(w.prefix(window), cx_len);
            for (std::size_t n = 1; n <= cx_len; ++n) values[n] = profile[n];
        }
        std::string text;
        json rows = json::array();
        for (std::size_t n = 1; n <= cx_len; ++n) {
            text += std::to_string(n) + "\t" + std::to_string(values[n]) + "\n";
            rows.push_back({{"n", n}, {"value", values[n]}});
        }
        if (opt.format == "csv") {
            std::cout << "n,value\n";
            for (std::size_t n = 1; n <= cx_len; ++n)
                std::cout << n << "," << values[n] << "\n";
            return;
        }
        emit(opt, text,
             json{{"schema", 1},
                  {"spec", cx_spec},
                  {"kind", cx_abelian ? "abelian" : "factor"},
                  {"window", window},
                  {"stabilized", stabilized},
                  {"rows", rows}});
    });

    // corridor <spec> --letter a -L
    std::string cor_spec, cor_letter = "1";
    std::size_t cor_len = 20, cor_window = 4096;
    auto* cor = app.add_subcommand("corridor", "per-length min/max letter counts");
    cor->fallthrough();
    cor->add_option("spec", cor_spec)->required();
    cor->add_option("--letter", cor_letter, "letter")->capture_default_str();
    cor->add_option("-L", cor_len)->capture_default_str();
    cor->add_option("-N", cor_window)->capture_default_str();
    cor->callback([&] {
        if (cor_letter.size() != 1)
            throw CLI::ValidationError("corridor", "--letter expects a single character");
        auto w = word_from_spec(cor_spec);
        std::string text;
        json rows = json::array();
        std::string csv = "n,letter,min,max\n";
        for (std::size_t n = 1; n <= cor_len; ++n) {
            Corridor c = corridor(w, cor_letter[0], n, cor_window);
            text += std::to_string(n) + "\t" + std::to_string(c.min) + "\t" +
                    std::to_string(c.max) + "\n";
            csv += std::to_string(n) + "," + cor_letter + "," + std::to_string(c.min) + "," +
                   std::to_string(c.max) + "\n";
            rows.push_back({{"n", n}, {"min", c.min}, {"max", c.max}});
        }
        if (opt.format == "csv") {
            std::cout << csv;
            return;
        }
        emit(opt, text,
             json{{"schema", 1},
                  {"spec", cor_spec},
                  {"letter", cor_letter},
                  {"window", cor_window},
                  {"rows", rows}});
    });

    // member <specY> <specX> -L -N
    std::string mem_y, mem_x;
    std::size_t mem_len = 30, mem_window = 4096;
    auto* mem = app.add_subcommand("member", "abelian-closure membership probe");
    mem->fallthrough();
    mem->add_option("specY", mem_y, "candidate word")->required();
    mem->add_option("specX", mem_x, "reference word")->required();
    mem->add_option("-L", mem_len)->capture_default_str();
    mem->add_option("-N", mem_window)->capture_default_str();
    mem->callback([&] {
        auto y = word_from_spec(mem_y);
        auto x = word_from_spec(mem_x);
        auto v = abelian_member(y, x, mem_len, mem_window);
        std::string text = v.member ? "member-up-to-" + std::to_string(mem_len)
                                    : "rejected (witness: " + *v.witness + ")";
        text += " [window " + std::to_string(mem_window) + "]\n";
        json j = verdict_json(v);
        j["query"] = {{"y", mem_y}, {"x", mem_x}};
        emit(opt, text, j);
        if (!v.member) exit_code = kExitRejected;
    });

    // census <spec> -N
    std::string cen_spec;
    std::size_t cen_window = 512;
    auto* cen = app.add_subcommand("census", "periodic words in the closure of a periodic word");
    cen->fallthrough();
    cen->add_option("spec", cen_spec)->required();
    cen->add_option("-N", cen_window)->capture_default_str();
    cen->callback([&] {
        auto orbits = periodic_census(word_from_spec(cen_spec), cen_window);
        std::string text;
        for (const auto& v : orbits) text += "(" + v + ")^w\n";
        emit(opt, text,
             json{{"schema", 1}, {"spec", cen_spec}, {"window", cen_window}, {"orbits", orbits}});
    });

    // hl-exists <ternary-spec> --kind K -m M
    std::string hl_spec, hl_kind = "12heavy";
    std::size_t hl_m = 1;
    auto* hl = app.add_subcommand("hl-exists", "heavy/light factor existence by exact geometry");
    hl->fallthrough();
    hl->add_option("spec", hl_spec, "ternary(...) specification")->required();
    hl->add_option("--kind", hl_kind, "12heavy | 12light | 1heavy2light | 2heavy1light")
        ->capture_default_str();
    hl->add_option("-m", hl_m, "factor length")->capture_default_str();
    hl->callback([&] {
        auto node = parse_spec(hl_spec);
        if (node->head != "ternary")
            throw CLI::ValidationError("hl-exists", "the spec must be a ternary(...) constructor");
        auto spec = ternary_spec_from(*node);
        auto v = exists_hl_factor(hl_kind_from_string(hl_kind), spec, hl_m);
        std::string text = std::string(v.exists ? "exists" : "does-not-exist") + " [" + v.branch +
                           "]\n";
        emit(opt, text,
             json{{"schema", 1},
                  {"query", {{"spec", hl_spec}, {"kind", hl_kind}, {"m", hl_m}}},
                  {"exists", v.exists},
                  {"branch", v.branch}});
    });

    // subshift <fixture|file> <subcommand>
    auto* sub = app.add_subcommand("subshift", "forbidden-factor subshift fixtures");
    sub->fallthrough();
    std::string sub_source;
    sub->add_option("source", sub_source, "fixture name or forbidden-set file")->required();
    sub->require_subcommand(1);

    std::string sub_word;
    auto* sub_legal = sub->add_subcommand("legal", "is the word free of forbidden factors");
    sub_legal->fallthrough();
    sub_legal->add_option("word", sub_word)->required();
    sub_legal->callback([&] {
        bool ok = fixture_or_file(sub_source).legal(sub_word);
        emit(opt, std::string(ok ? "legal" : "illegal") + "\n",
             json{{"schema", 1}, {"word", sub_word}, {"legal", ok}});
        if (!ok) exit_code = kExitRejected;
    });

    std::size_t sub_len = 8;
    auto* sub_ab = sub->add_subcommand("abelian-legal", "finite-scale closure-language test");
    sub_ab->fallthrough();
    sub_ab->add_option("word", sub_word)->required();
    sub_ab->add_option("-L", sub_len, "horizon")->capture_default_str();
    sub_ab->callback([&] {
        BoundedLanguage lang(fixture_or_file(sub_source), sub_len);
        bool ok = abelian_legal(sub_word, lang);
        emit(opt, std::string(ok ? "abelian-legal" : "abelian-illegal") + " [horizon " +
                      std::to_string(sub_len) + "]\n",
             json{{"schema", 1}, {"word", sub_word}, {"horizon", sub_len}, {"abelian_legal", ok}});
        if (!ok) exit_code = kExitRejected;
    });

    auto* sub_mf = sub->add_subcommand("minimal-forbidden", "minimal forbidden words up to -L");
    sub_mf->fallthrough();
    sub_mf->add_option("-L", sub_len)->capture_default_str();
    sub_mf->callback([&] {
        auto words = minimal_forbidden(fixture_or_file(sub_source), sub_len);
        std::string text;
        for (const auto& w : words) text += w + "\n";
        emit(opt, text, json{{"schema", 1}, {"max_len", sub_len}, {"minimal_forbidden", words}});
    });

    auto* sub_count = sub->add_subcommand("count", "legal word counts per length");
    sub_count->fallthrough();
    sub_count->add_option("-L", sub_len)->capture_default_str();
    sub_count->callback([&] {
        BoundedLanguage lang(fixture_or_file(sub_source), sub_len);
        std::string text;
        json rows = json::array();
        for (std::size_t n = 1; n <= sub_len; ++n) {
            text += std::to_string(n) + "\t" + std::to_string(lang.legal_count(n)) + "\n";
            rows.push_back({{"n", n}, {"count", lang.legal_count(n)}});
        }
        emit(opt, text, json{{"schema", 1}, {"rows", rows}});
    });

    std::size_t sft_n = 4;
    auto* sub_sft = sub->add_subcommand("sft-report", "the closure-is-not-an-SFT fragment check");
    sub_sft->fallthrough();
    sub_sft->add_option("-n", sft_n)->capture_default_str();
    sub_sft->callback([&] {
        if (sub_source == "binary-order6") {
            auto rep = binary_order6_report();
            emit(opt,
                 std::string(rep.pass() ? "pass" : "fail") + " (rejected factor: " +
                     rep.rejected_factor + ")\n",
                 json{{"schema", 1},
                      {"fixture", sub_source},
                      {"horizon", rep.horizon},
                      {"good_fragment_legal", rep.good_fragment_legal},
                      {"bad_fragment_rejected", rep.bad_fragment_rejected},
                      {"rejected_factor", rep.rejected_factor},
                      {"pass", rep.pass()}});
            if (!rep.pass()) exit_code = kExitRejected;
            return;
        }
        auto rep = sft_counterexample_report(sft_n);
        emit(opt,
             std::string(rep.pass() ? "pass" : "fail") + " (rejected factor: " +
                 rep.rejected_factor + ")\n",
             json{{"schema", 1},
                  {"n", rep.n},
                  {"horizon", rep.horizon},
                  {"short_factors_legal", rep.short_factors_legal},
                  {"long_factor_rejected", rep.long_factor_rejected},
                  {"rejected_factor", rep.rejected_factor},
                  {"pass", rep.pass()}});
        if (!rep.pass()) exit_code = kExitRejected;
    });

    auto* sub_ns = sub->add_subcommand("nonsofic", "minimal forbidden cwd words of the closure");
    sub_ns->fallthrough();
    sub_ns->add_option("-L", sub_len)->capture_default_str();
    sub_ns->callback([&] {
        auto words = nonsofic_witness(sub_len);
        std::string text;
        for (const auto& w : words) text += w + "\n";
        emit(opt, text, json{{"schema", 1}, {"max_w", sub_len}, {"witnesses", words}});
    });

    // verify [--suite name]
    std::string suite;
    int workers = 0;
    auto* ver = app.add_subcommand("verify", "run the acceptance battery");
    ver->fallthrough();
    ver->add_option("--suite", suite, "run only the named criterion");
    ver->add_option("--workers", workers, "worker threads (default: ABELIAN_WORKERS or 1)");
    ver->callback([&] {
        VerifyOptions options;
        options.suite = suite;
        if (workers > 0)
            options.workers = workers;
        else if (const char* env = std::getenv("ABELIAN_WORKERS"))
            options.workers = std::max(1, std::atoi(env));
        auto results = run_acceptance(options);
        std::cout << format_report(results);
        if (!all_pass(results) || results.empty()) exit_code = kExitRejected;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
