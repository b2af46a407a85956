// Command line front end. Verbs: eval, parse, transform, raise, lower,
// contract, check. All outputs are deterministic for fixed inputs and seeds.

#include "tenskit/basis.hpp"
#include "tenskit/checks.hpp"
#include "tenskit/error.hpp"
#include "tenskit/exprlang.hpp"
#include "tenskit/io.hpp"
#include "tenskit/metric.hpp"
#include "tenskit/scalar.hpp"
#include "tenskit/tensormap.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace tenskit;

IndexLabel parse_label_arg(const std::string& text)
{
    try {
        return IndexLabel::parse(text);
    } catch (const Error& e) {
        fail_usage("bad label '" + text + "': " + e.what());
    }
}

std::pair<IndexLabel, IndexLabel> parse_pair_arg(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        fail_usage("pair '" + text + "' must look like sub:super");
    return {parse_label_arg(text.substr(0, colon)), parse_label_arg(text.substr(colon + 1))};
}

// Print to stdout, or write the JSON file when an --out path was given.
void emit_tensor(const TensorMap& t, const std::string& name, const std::string& outPath,
                 bool bareScalar)
{
    const nlohmann::ordered_json j = tensor_to_json(t, name.empty() ? "result" : name);
    if (!outPath.empty()) {
        write_json_file(outPath, j);
        return;
    }
    if (bareScalar && t.subs().empty() && t.supers().empty()) {
        std::cout << scalar_to_string(t.coeffs().flat(0)) << "\n";
        return;
    }
    std::cout << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact calculator for tensor maps in double-index notation"};
    app.set_version_flag("--version", "tenskit 0.1.0");
    app.require_subcommand(1);

    std::string envPath, exprText, outPath, tensorPath, changePath, metricPath, labelText;
    std::vector<std::string> pairTexts;
    bool showPlan = false;
    std::string suiteName = "all";
    int dim = 2;
    int cases = 100;
    std::uint64_t seed = 1;

    auto* evalCmd = app.add_subcommand("eval", "evaluate an index expression over an environment");
    evalCmd->add_option("--env", envPath, "directory of *.json tensors, or one file (single tensor or a \"tensors\" collection)")->required();
    evalCmd->add_option("--expr", exprText, "expression text")->required();
    evalCmd->add_option("--out", outPath, "write the result JSON here instead of stdout");

    auto* parseCmd = app.add_subcommand("parse", "parse an expression and print its canonical form");
    parseCmd->add_option("--expr", exprText, "expression text")->required();
    parseCmd->add_flag("--plan", showPlan, "print the compiled evaluation plan instead");

    auto* transformCmd = app.add_subcommand("transform", "rewrite a tensor map in another basis");
    transformCmd->add_option("--tensor", tensorPath, "tensor map JSON file")->required();
    transformCmd->add_option("--change", changePath, "basis change JSON file")->required();
    transformCmd->add_option("--out", outPath, "write the result JSON here instead of stdout");

    auto* raiseCmd = app.add_subcommand("raise", "raise a subscript with a metric");
    raiseCmd->add_option("--tensor", tensorPath, "tensor map JSON file")->required();
    raiseCmd->add_option("--metric", metricPath, "metric JSON file")->required();
    raiseCmd->add_option("--label", labelText, "subscript to raise")->required();
    raiseCmd->add_option("--out", outPath, "write the result JSON here instead of stdout");

    auto* lowerCmd = app.add_subcommand("lower", "lower a superscript with a metric");
    lowerCmd->add_option("--tensor", tensorPath, "tensor map JSON file")->required();
    lowerCmd->add_option("--metric", metricPath, "metric JSON file")->required();
    lowerCmd->add_option("--label", labelText, "superscript to lower")->required();
    lowerCmd->add_option("--out", outPath, "write the result JSON here instead of stdout");

    auto* contractCmd = app.add_subcommand("contract", "contract matching subscript:superscript pairs");
    contractCmd->add_option("--tensor", tensorPath, "tensor map JSON file")->required();
    contractCmd->add_option("--pair", pairTexts, "pair to contract, written sub:super (repeatable)")->required();
    contractCmd->add_option("--out", outPath, "write the result JSON here instead of stdout");

    auto* checkCmd = app.add_subcommand("check", "run a property suite");
    checkCmd->add_option("--suite", suiteName, "suite name, or 'all'");
    checkCmd->add_option("--dim", dim, "coordinate space dimension (1..4)");
    checkCmd->add_option("--cases", cases, "number of random cases");
    checkCmd->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ERROR 2: " << e.what() << "\n";
        return 2;
    }

    try {
        if (evalCmd->parsed()) {
            const Env env = load_env(envPath);
            const ExprPtr e = parse_expr_text(exprText);
            const Plan plan = validate(*e, env);
            emit_tensor(evaluate(plan, env), "result", outPath, true);
        } else if (parseCmd->parsed()) {
            const ExprPtr e = parse_expr_text(exprText);
            if (showPlan)
                std::cout << plan_text(build_plan(*e));
            else
                std::cout << pretty_print(*e) << "\n";
        } else if (transformCmd->parsed()) {
            std::string name;
            const TensorMap t = load_tensor_file(tensorPath, &name);
            const BasisChange c = load_change_file(changePath);
            emit_tensor(transform(t, c), name, outPath, false);
        } else if (raiseCmd->parsed() || lowerCmd->parsed()) {
            std::string name;
            const TensorMap t = load_tensor_file(tensorPath, &name);
            const Metric g = load_metric_file(metricPath);
            const IndexLabel lab = parse_label_arg(labelText);
            const TensorMap r = raiseCmd->parsed() ? raise_index(t, lab, g) : lower_index(t, lab, g);
            emit_tensor(r, name, outPath, false);
        } else if (contractCmd->parsed()) {
            std::string name;
            const TensorMap t = load_tensor_file(tensorPath, &name);
            std::vector<std::pair<IndexLabel, IndexLabel>> pairs;
            for (const auto& p : pairTexts)
                pairs.push_back(parse_pair_arg(p));
            emit_tensor(contract(t, pairs), name, outPath, false);
        } else if (checkCmd->parsed()) {
            std::vector<std::string> suites;
            if (suiteName == "all")
                suites = suite_names();
            else
                suites.push_back(suiteName);
            int totalFailures = 0;
            for (const auto& s : suites) {
                const SuiteResult r = run_suite(s, dim, seed, cases);
                totalFailures += r.failures;
                std::cout << r.suite << " dim=" << r.dim << " seed=" << r.seed << ": "
                          << (r.cases - r.failures) << "/" << r.cases << " passed\n";
            }
            if (totalFailures > 0)
                return 1;
        }
    } catch (const Error& e) {
        std::cerr << "ERROR " << static_cast<int>(e.code()) << ": " << e.what() << "\n";
        return static_cast<int>(e.code());
    }
    return 0;
}
