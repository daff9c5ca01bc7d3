#include "qmzv/relations.hpp"
#include "qmzv/verify.hpp"
#include "qmzv/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <exception>
#include <iostream>
#include <string>

namespace {

using namespace qmzv;

int run_zeta(const std::string& word_text, bool star, const RunConfig& cfg) {
    Word w = Word::parse(word_text);
    SeriesEvaluator ev(cfg.precision);
    Series value = star ? ev.zeta_star_q(WordSum(w)) : ev.zeta_q(WordSum(w));
    if (cfg.output == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["word"] = w.to_string();
        doc["star"] = star;
        doc["precision"] = cfg.precision;
        doc["series"] = value.to_string();
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << value.to_string() << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const RunConfig& cfg) {
    auto results = run_suites(suite, cfg);
    bool ok = true;
    for (const auto& sr : results) {
        if (cfg.output == OutputFormat::json) {
            nlohmann::ordered_json doc;
            doc["suite"] = sr.suite;
            doc["passed"] = sr.passed;
            doc["failed"] = sr.failed;
            auto cases = nlohmann::ordered_json::array();
            for (const auto& c : sr.cases) {
                nlohmann::ordered_json cd;
                cd["name"] = c.name;
                cd["passed"] = c.passed;
                if (!c.detail.empty()) cd["detail"] = c.detail;
                cases.push_back(std::move(cd));
            }
            doc["cases"] = std::move(cases);
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "suite " << sr.suite << "\n";
            for (const auto& c : sr.cases) {
                if (c.passed)
                    std::cout << "  PASS " << c.name << "\n";
                else
                    std::cout << "  FAIL " << c.name
                              << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            }
            std::cout << "  " << sr.passed << " passed, " << sr.failed << " failed\n";
        }
        ok = ok && sr.ok();
    }
    return ok ? 0 : 1;
}

int run_relations(const RunConfig& cfg) {
    auto rels = enumerate_relations(cfg.max_weight, cfg.max_n, cfg.precision,
                                    RelationVariant::modified, cfg.workers);
    bool ok = true;
    for (const auto& r : rels) {
        std::cout << (cfg.output == OutputFormat::json ? relation_json(r)
                                                       : relation_text(r))
                  << "\n";
        ok = ok && !r.residual_valuation.has_value();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-analogue multiple zeta toolkit: truncated evaluation, "
                 "identity suites, relation stream"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string output = "text";
    std::string circledast = "plus-hbar0";

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", output, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_precision = [&](CLI::App* cmd) {
        cmd->add_option("--precision", cfg.precision,
                        "q-adic precision, at least 2 (default 40)");
    };

    std::string zeta_word;
    bool star = false;
    CLI::App* zeta_cmd =
        app.add_subcommand("zeta", "print a truncated zeta value");
    zeta_cmd->add_option("word", zeta_word, "argument word, e.g. \"[2,1]\"")
        ->required();
    zeta_cmd->add_flag("--star", star,
                       "evaluate the weak-inequality (star) value");
    add_precision(zeta_cmd);
    add_output(zeta_cmd);

    std::string suite = "all";
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run an identity suite");
    verify_cmd->add_option("suite", suite, "suite name, or \"all\"");
    add_precision(verify_cmd);
    verify_cmd->add_option("--max-weight", cfg.max_weight,
                           "word weight bound (default 4)");
    verify_cmd->add_option("--max-n", cfg.max_n,
                           "summation index bound (default 6)");
    verify_cmd->add_option("--seed", cfg.seed,
                           "seed for the randomized arithmetic checks");
    verify_cmd
        ->add_option("--circledast-variant", circledast,
                     "reading of the hbar-free circledast product")
        ->check(CLI::IsMember({"plus-hbar0", "bar"}));
    add_output(verify_cmd);

    CLI::App* rel_cmd =
        app.add_subcommand("relations", "stream quadratic relation instances");
    add_precision(rel_cmd);
    rel_cmd->add_option("--max-weight", cfg.max_weight,
                        "total weight bound for word pairs (default 4)");
    rel_cmd->add_option("--max-n", cfg.max_n, "relation index bound (default 6)");
    rel_cmd->add_option("--workers", cfg.workers,
                        "parallel workers, 0 for hardware concurrency");
    add_output(rel_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.output = output == "json" ? OutputFormat::json : OutputFormat::text;
    cfg.circledast_variant = circledast == "bar" ? CircledastVariant::bar
                                                 : CircledastVariant::plus_hbar0;

    try {
        validate(cfg);
        if (*zeta_cmd) return run_zeta(zeta_word, star, cfg);
        if (*verify_cmd) return run_verify(suite, cfg);
        return run_relations(cfg);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
