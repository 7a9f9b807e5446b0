#include "qmzv/cli.hpp"

#include "qmzv/identities.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

namespace qmzv::cli {

namespace {

using ojson = nlohmann::ordered_json;

ProductKind parse_product(const std::string& s) {
    if (s == "shuffle") return ProductKind::shuffle_X;
    if (s == "quasishuffle") return ProductKind::quasi_shuffle;
    if (s == "qshuffle") return ProductKind::q_shuffle;
    if (s == "qquasishuffle") return ProductKind::q_quasi_shuffle;
    if (s == "qshuffle-graded") return ProductKind::q_shuffle_graded;
    if (s == "qquasishuffle-graded") return ProductKind::q_quasi_shuffle_graded;
    throw CLI::ValidationError("--product", "unknown product '" + s + "'");
}

/// Signed-alphabet word: z(...) tuple grammar or whitespace p/d/y tokens.
Composition parse_signed_word(const std::string& text) {
    std::string trimmed = text;
    auto pos = trimmed.find_first_not_of(" \t");
    if (pos != std::string::npos && trimmed.compare(pos, 2, "z(") == 0) return parse_ytilde(trimmed);
    return parse_w(trimmed);
}

void parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--range", "expected <lo>..<hi>");
    lo = std::stoi(text.substr(0, dots));
    hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw CLI::ValidationError("--range", "lo > hi");
}

int cmd_expand(const std::string& product, const std::string& w1, const std::string& w2, const std::string& format,
               std::ostream& out) {
    ProductKind kind = parse_product(product);
    if (kind == ProductKind::shuffle_X) {
        auto result = shuffle(parse_x(w1), parse_x(w2));
        out << (format == "json" ? lincomb_to_json(result) : format_lincomb(result)) << "\n";
        return 0;
    }
    if (kind == ProductKind::quasi_shuffle) {
        // Accept the classical y(...) grammar as well as signed letters.
        auto is_y = [](const std::string& s) { return s.find("y(") != std::string::npos && s.find('z') == std::string::npos; };
        if (is_y(w1) && is_y(w2)) {
            auto result = quasi_shuffle(parse_y(w1), parse_y(w2));
            if (format == "json") {
                QLinComb z;
                for (const auto& [w, c] : result.terms()) z.add(Composition(w.n), c);
                out << lincomb_to_json(z) << "\n";
            } else {
                out << format_lincomb(result) << "\n";
            }
            return 0;
        }
        auto result = quasi_shuffle(parse_signed_word(w1), parse_signed_word(w2));
        out << (format == "json" ? lincomb_to_json(result) : format_lincomb(result)) << "\n";
        return 0;
    }

    ProductEngine eng;
    Composition u = parse_signed_word(w1), v = parse_signed_word(w2);
    HLinComb result = eng.product(kind, u, v);
    if (format == "json") {
        if (kind == ProductKind::q_shuffle || kind == ProductKind::q_quasi_shuffle)
            out << lincomb_to_json(at_h_one(result)) << "\n";
        else
            out << lincomb_to_json(result) << "\n";
        return 0;
    }
    if (kind == ProductKind::q_shuffle) {
        // Render on the {p,d,y} alphabet, matching the input notation.
        QLinComb plain = at_h_one(result);
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : plain.terms()) {
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            if (a != Rational(1)) os << a.str() << "*";
            os << (w.empty() ? "1" : format_w(w));
        }
        out << (first ? "0" : os.str()) << "\n";
    } else if (kind == ProductKind::q_quasi_shuffle) {
        out << format_lincomb(at_h_one(result)) << "\n";
    } else {
        out << format_lincomb(result) << "\n";
    }
    return 0;
}

int cmd_series(const std::string& word, int order, const std::string& pathway, const std::string& model,
               const std::string& format, std::ostream& out) {
    EvalConfig cfg;
    cfg.order = order;
    cfg.pathway = pathway_from_string(pathway);
    cfg.model = model_from_string(model);
    if (cfg.model == Model::schlesinger)
        throw std::invalid_argument("series: no q-series mode for the Schlesinger model");
    Composition w = parse_signed_word(word);
    QSeries s = cfg.model == Model::nonmodified ? z_series(w, cfg) : zbar_series(w, cfg);
    if (format == "json") {
        out << s.to_json() << "\n";
    } else {
        out << s.str() << "\n";
        out << "coeffs [";
        for (int k = 0; k <= s.order(); ++k) out << (k ? "," : "") << s.coeff(k).str();
        out << "]\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg, const std::string& format, std::ostream& out) {
    std::vector<CheckReport> reports = run_suite(suite, cfg);
    bool ok = all_passed(reports);
    if (format == "json") {
        ojson doc;
        doc["suite"] = suite;
        doc["order"] = cfg.order;
        doc["seed"] = cfg.seed;
        ojson checks = ojson::array();
        for (const auto& r : reports) checks.push_back(ojson::parse(r.to_json()));
        doc["checks"] = std::move(checks);
        doc["pass"] = ok;
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) out << r.to_text() << "\n";
        int failed = 0, errata = 0;
        for (const auto& r : reports) {
            if (!r.pass && !r.advisory) ++failed;
            if (!r.pass && r.advisory) ++errata;
        }
        out << reports.size() << " checks, " << failed << " failed, " << errata << " erratum candidates\n";
    }
    return ok ? 0 : 1;
}

int cmd_limit(const std::string& word, const std::vector<double>& grid, double target, double tol, long cap,
              const std::string& format, std::ostream& out) {
    LimitSpec spec;
    spec.combination = QLinComb::single(parse_signed_word(word));
    spec.grid = grid;
    spec.target = target;
    spec.tol = tol;
    spec.label = word;
    CheckReport rep = verify_limit(spec, cap);
    if (format == "json")
        out << rep.to_json() << "\n";
    else
        out << rep.to_text() << "\n";
    return rep.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact double q-shuffle calculator for q-multiple zeta values"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    // expand
    auto* expand = app.add_subcommand("expand", "Expand a word product into a linear combination");
    std::string product, word1, word2;
    expand->add_option("--product", product, "shuffle|quasishuffle|qshuffle|qquasishuffle|qshuffle-graded|qquasishuffle-graded")
        ->required();
    expand->add_option("word1", word1, "First word")->required();
    expand->add_option("word2", word2, "Second word")->required();

    // series
    auto* series = app.add_subcommand("series", "Evaluate a word as a truncated q-series");
    std::string word = "z(0)";
    int order = 20;
    std::string pathway = "sum", model = "modified";
    series->add_option("--word", word, "Word, z(...) or p/d/y tokens")->required();
    series->add_option("--order", order, "Truncation order");
    series->add_option("--pathway", pathway, "sum|jackson|both");
    series->add_option("--model", model, "modified|nonmodified");

    // verify
    auto* verify = app.add_subcommand("verify", "Run identity verification suites");
    std::string suite = "all";
    SuiteConfig scfg;
    std::string range;
    std::string q0_text;
    double tol = 0.05;
    verify->add_option("--suite", suite,
                       "word-laws|homomorphism|operator-laws|euler|derivation|regularization|schlesinger|limits|all");
    verify->add_option("--order", scfg.order, "Series truncation order");
    verify->add_option("--max-depth", scfg.max_depth, "Word set depth bound");
    verify->add_option("--range", range, "Exponent range lo..hi");
    verify->add_option("--seed", scfg.seed, "Random seed");
    verify->add_option("--term-cap", scfg.term_cap, "Outer summation cap for numeric checks");
    verify->add_option("--tol", tol, "Numeric tolerance for limit checks");
    verify->add_option("--q0", q0_text, "Rational evaluation point for the schlesinger suite, e.g. 2 or 5/2");

    // limit
    auto* limit = app.add_subcommand("limit", "Check a q -> 1 limit along a grid");
    std::string lim_word;
    std::vector<double> grid = {0.9, 0.99, 0.999};
    double target = 0.0, lim_tol = 0.05;
    long lim_cap = 60;
    limit->add_option("--word", lim_word, "Word, z(...) or p/d/y tokens")->required();
    limit->add_option("--grid", grid, "Grid of q values in (0,1)")->delimiter(',');
    limit->add_option("--target", target, "Limit target")->required();
    limit->add_option("--tol", lim_tol, "Final-error tolerance");
    limit->add_option("--term-cap", lim_cap, "Baseline summation cap");

    std::vector<std::string> argv_copy = args;
    std::reverse(argv_copy.begin(), argv_copy.end());
    try {
        app.parse(argv_copy);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help() << "\n";
            return 0;
        }
        err << "error: " << e.what() << "\n";
        err << app.help() << "\n";
        return 2;
    }

    try {
        if (*expand) return cmd_expand(product, word1, word2, format, out);
        if (*series) return cmd_series(word, order, pathway, model, format, out);
        if (*verify) {
            if (!range.empty()) parse_range(range, scfg.lo, scfg.hi);
            scfg.tol = tol;
            if (!q0_text.empty()) scfg.q0 = Rational::from_string(q0_text);
            return cmd_verify(suite, scfg, format, out);
        }
        if (*limit) return cmd_limit(lim_word, grid, target, lim_tol, lim_cap, format, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " at position " << e.pos << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace qmzv::cli
