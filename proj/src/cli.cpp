#include "alba/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "alba/oracle.hpp"
#include "alba/parser.hpp"
#include "alba/trace_json.hpp"

namespace alba::cli {
namespace {

struct Input {
    std::string text;
    std::string file;
};

std::string read_input(const Input& src, std::istream& in) {
    if (!src.file.empty()) {
        std::ifstream f(src.file);
        if (!f) throw std::runtime_error("cannot open " + src.file);
        return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    }
    if (!src.text.empty() && src.text != "-") return src.text;
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// A bare formula f is read as T <= f.
Inequality read_inequality(const std::string& text) {
    auto v = parse(text);
    if (auto* q = std::get_if<Inequality>(&v)) return *q;
    return {mk::top(), std::get<Formula>(v)};
}

void print_text_trace(const AlbaResult& r, std::ostream& out) {
    for (const auto& s : r.preprocess_steps)
        out << "  [" << stage_name(s.stage) << "] " << s.rule << " at item " << s.position.item << " ("
            << s.position.path << ")\n";
    for (std::size_t b = 0; b < r.branches.size(); ++b) {
        const auto& br = r.branches[b];
        out << "branch " << b << ": " << to_string(br.preprocessed, Notation::Unicode) << "\n";
        for (const auto& s : br.steps) {
            out << "  [" << stage_name(s.stage) << "] " << s.rule << " at item " << s.position.item;
            if (!s.position.path.empty()) out << " (" << s.position.path << ")";
            out << "\n";
            for (const auto& m : s.after) out << "      " << to_string(m, Notation::Unicode) << "\n";
        }
    }
}

void print_failure(const AlbaResult& r, std::ostream& err) {
    err << "failure: ε = (" << r.epsilon.to_string() << ")\n";
    for (std::size_t b = 0; b < r.branches.size(); ++b)
        for (const auto& d : r.branches[b].stuck)
            err << "  branch " << b << ": cannot eliminate " << (d.variable.empty() ? "?" : d.variable) << " in "
                << d.item << ": " << d.reason << "\n";
}

AlbaResult run_with(const Inequality& q, const std::string& order, bool simplify) {
    AlbaOptions opts{simplify};
    if (order.empty() || order == "auto") return run_alba_auto(q, opts);
    return run_alba(q, OrderType::parse(order_variables(q), order), opts);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Correspondence for hybrid logic with binder", "alba"};
    app.require_subcommand(1);

    Input input;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input.text, "inequality text, or - for stdin");
        sub->add_option("--file,-f", input.file, "read the input from a file");
    };

    bool tree = false;
    auto* classify = app.add_subcommand("classify", "Sahlqvist classification and order types");
    add_input(classify);
    classify->add_flag("--tree", tree, "include the signed generation trees");

    std::string order;
    std::string trace = "none";
    bool simplify = false;
    auto* runc = app.add_subcommand("run", "run the algorithm");
    add_input(runc);
    runc->add_option("--order-type,-e", order, "e.g. 1,d (default: auto)");
    runc->add_option("--trace", trace, "none, text or json")->check(CLI::IsMember({"none", "text", "json"}));
    runc->add_flag("--simplify", simplify, "fold constants in the output");

    bool closed = false;
    auto* translate = app.add_subcommand("translate", "standard translation only");
    add_input(translate);
    translate->add_flag("--closed", closed, "universally close over constants");

    int max_worlds = 3;
    unsigned threads = 0;
    auto* verify = app.add_subcommand("verify", "check the computed correspondent on all small frames");
    add_input(verify);
    verify->add_option("--order-type,-e", order, "e.g. 1,d (default: auto)");
    verify->add_option("--max-worlds,-n", max_worlds, "largest frame size")->check(CLI::Range(1, 5));
    verify->add_option("--threads", threads, "worker threads (0 = hardware)");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kParseError;
    }

    std::string text;
    try {
        text = read_input(input, in);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kParseError;
    }

    try {
        if (*translate) {
            Statement s = parse_statement(text);
            fol::FOFormula f = fol::st_statement(s);
            if (closed) f = fol::universal_closure(f);
            out << fol::to_string(f) << "\n";
            return kOk;
        }

        const Inequality q = read_inequality(text);

        if (*classify) {
            nlohmann::json j = classification_json(q);
            if (tree) {
                j["trees"] = {{"lhs", render_tree(build_signed_tree(q.lhs, Sign::Plus))},
                              {"rhs", render_tree(build_signed_tree(q.rhs, Sign::Minus))}};
                if (std::holds_alternative<Formula>(parse(text)))
                    j["trees"]["formula"] = render_tree(build_signed_tree(q.rhs, Sign::Plus));
            }
            out << j.dump(2) << "\n";
            return kOk;
        }

        if (*runc) {
            AlbaResult r = run_with(q, order, simplify);
            if (trace == "json") {
                out << to_json(r).dump(2) << "\n";
                return r.success() ? kOk : kAlgorithmFailure;
            }
            if (trace == "text") print_text_trace(r, out);
            if (!r.success()) {
                print_failure(r, err);
                return kAlgorithmFailure;
            }
            out << "order type: (" << r.epsilon.to_string() << ")\n";
            for (const auto& b : r.branches) out << "quasi: " << to_string(*b.quasi, Notation::Unicode) << "\n";
            out << "fo: " << fol::to_string(*r.fo) << "\n";
            return kOk;
        }

        // verify
        AlbaResult r = run_with(q, order, false);
        if (!r.success()) {
            print_failure(r, err);
            return kAlgorithmFailure;
        }
        oracle::Verdict v = oracle::check_correspondence(q, *r.fo, max_worlds, threads);
        if (v.equivalent()) {
            out << "Equivalent (" << v.checked << " frames, up to " << max_worlds << " worlds, order type ("
                << r.epsilon.to_string() << "))\n";
            return kOk;
        }
        out << "Counterexample: " << v.detail << "\n" << format_frame(*v.frame);
        return kCounterexample;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const BudgetExceeded& e) {
        err << e.what() << "\n";
        return kAlgorithmFailure;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kParseError;
    }
}

}  // namespace alba::cli
