// bcstar: Hecke products of type-BC Kazhdan-Lusztig elements, computed by
// Hecke recursion and by path-family enumeration over star networks.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 budget refusal.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bcstar/enumerate.hpp"
#include "bcstar/error.hpp"
#include "bcstar/json_io.hpp"
#include "bcstar/verify.hpp"

namespace {

using namespace bcstar;
using nlohmann::json;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct Job {
    int n = 0;
    std::string stages;
    std::string builtin;
    std::string gens;
    std::string target;
    std::string suite;
    std::uint64_t budget = kDefaultBudget;
    std::string format = "table";
    bool trace = false;
    bool serial = false;
};

std::uint64_t default_budget() {
    const char* env = std::getenv("BCSTAR_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw DomainError("BCSTAR_BUDGET must be a positive integer");
    return v;
}

StarNetwork network_of(const Job& job) {
    if (!job.builtin.empty()) {
        if (!job.stages.empty()) throw DomainError("give either --stages or --builtin, not both");
        StarNetwork net = builtin_network(job.builtin);
        if (job.n != 0 && job.n != net.rank()) throw DomainError("--n does not match the builtin rank");
        return net;
    }
    if (job.n < 1) throw DomainError("--n is required and must be at least 1");
    return parse_network(job.stages, job.n);
}

std::vector<int> parse_gens(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("expected a generator index", pos);
        }
        if (used != tok.size()) throw ParseError("expected a generator index", pos + used);
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw ParseError("trailing comma", comma);
    }
    return out;
}

EnumerationOptions options_of(const Job& job) {
    EnumerationOptions o;
    o.budget = job.budget;
    o.parallel = !job.serial;
    return o;
}

// Rows of (type, first, second) over the union of supports.
void print_table(const std::string& first_name, const HeckeElement& first,
                 const std::string& second_name, const HeckeElement& second) {
    std::map<std::pair<int, SignedPermutation>, bool> types;
    for (const auto& [w, c] : first.terms()) types[{length(w), w}] = true;
    for (const auto& [w, c] : second.terms()) types[{length(w), w}] = true;
    std::size_t width = 4;
    for (const auto& [key, unused] : types) width = std::max(width, key.second.to_string().size());
    std::cout << std::string("type") + std::string(width - 4 + 2, ' ') << first_name << " | "
              << second_name << "\n";
    for (const auto& [key, unused] : types) {
        const std::string w = key.second.to_string();
        std::cout << w << std::string(width - w.size() + 2, ' ') << first.coefficient(key.second).to_string()
                  << " | " << second.coefficient(key.second).to_string() << "\n";
    }
}

int cmd_expand(const Job& job) {
    const StarNetwork net = network_of(job);
    const EnumerationOptions opts = options_of(job);
    check_budget(net, opts.budget);
    const HeckeElement hecke = hecke_side(net);
    const FamilyCounts counts = count_families(net, opts);
    const HeckeElement paths = counts_to_hecke(net.rank(), counts);
    const HeckeElement diff = paths - hecke;
    if (job.format == "json") {
        json out = {{"network", net.to_string()},
                    {"rank", net.rank()},
                    {"hecke", hecke_to_json(hecke)},
                    {"enumeration", hecke_to_json(paths)},
                    {"diff", hecke_to_json(diff)},
                    {"counts", counts_to_json(counts)}};
        if (!net.is_ordinary()) {
            out["normalization"] = r_of_v(merged_multiplicities(net)).coefficients();
        }
        if (job.trace) {
            json families = json::array();
            auto shared = std::make_shared<const StarNetwork>(net);
            for_each_family(
                net,
                [&](std::span<const SignedPermutation> rows, int) {
                    families.push_back(family_trace(PathFamily::from_rows(
                        shared, std::vector<SignedPermutation>(rows.begin(), rows.end()))));
                },
                opts);
            out["families"] = families;
        }
        std::cout << out.dump(2) << "\n";
    } else if (job.format == "table") {
        std::cout << "network: " << net.to_string() << "\n";
        if (!net.is_ordinary()) {
            std::cout << "normalization: " << r_of_v(merged_multiplicities(net)).to_string() << "\n";
        }
        std::cout << "hecke:       " << hecke.to_string() << "\n";
        std::cout << "enumeration: " << paths.to_string() << "\n";
        print_table("hecke", hecke, "enumeration", paths);
        std::cout << "diff: " << (diff.is_zero() ? "empty" : diff.to_string()) << "\n";
    } else {
        throw DomainError("expand supports --format json or table");
    }
    return diff.is_zero() ? kOk : kVerifyFailed;
}

int cmd_klpoly(const Job& job) {
    const StarNetwork net = network_of(job);
    if (job.target.empty()) throw DomainError("--target is required");
    const SignedPermutation u = parse_signed_permutation(job.target, net.rank());
    const EnumerationOptions opts = options_of(job);
    check_budget(net, opts.budget);
    const QPolynomial paths = kl_poly_extract(net, u, opts);
    const QPolynomial hecke = hecke_side(net).coefficient(u);
    if (job.format == "json") {
        json out = {{"network", net.to_string()},
                    {"target", u.to_string()},
                    {"hecke", hecke.coefficients()},
                    {"enumeration", paths.coefficients()}};
        std::cout << out.dump(2) << "\n";
    } else if (job.format == "table") {
        std::cout << "network: " << net.to_string() << "\n";
        std::cout << "target: " << u.to_string() << "\n";
        std::cout << "hecke:       " << hecke.to_string() << "\n";
        std::cout << "enumeration: " << paths.to_string() << "\n";
    } else {
        throw DomainError("klpoly supports --format json or table");
    }
    return paths == hecke ? kOk : kVerifyFailed;
}

int cmd_render(const Job& job) {
    const StarNetwork net = network_of(job);
    if (job.format == "dot") {
        std::cout << render_dot(net);
    } else if (job.format == "table") {
        std::cout << "network: " << net.to_string() << "\n";
        for (std::size_t k = 0; k < net.size(); ++k) {
            const auto& st = net.stages()[k];
            std::cout << "stage " << k + 1 << ": " << st.interval.to_string()
                      << (st.condensed_join ? " (condensed)" : "");
            for (const auto& star : st.stars()) {
                std::cout << "  " << to_string(star.side) << " " << star.lo << ".." << star.hi;
            }
            std::cout << "\n";
        }
        for (const auto& e : merged_edges(net)) {
            std::cout << "merged edge into stage " << e.stage + 1 << " " << to_string(e.side)
                      << ": levels " << e.lo << ".." << e.hi << ", multiplicity " << e.multiplicity
                      << "\n";
        }
        std::cout << "estimated families: " << family_count_estimate(net) << "\n";
    } else if (job.format == "json") {
        json stages = json::array();
        for (const auto& st : net.stages()) {
            stages.push_back({{"interval", st.interval.to_string()}, {"condensed", st.condensed_join}});
        }
        json merged = json::array();
        for (const auto& e : merged_edges(net)) {
            merged.push_back({{"stage", e.stage + 1},
                              {"side", std::string(to_string(e.side))},
                              {"lo", e.lo},
                              {"hi", e.hi},
                              {"multiplicity", e.multiplicity}});
        }
        std::cout << json{{"network", net.to_string()},
                          {"rank", net.rank()},
                          {"stages", stages},
                          {"merged_edges", merged},
                          {"estimated_families", family_count_estimate(net)}}
                         .dump(2)
                  << "\n";
    } else {
        throw DomainError("render supports --format dot, table or json");
    }
    return kOk;
}

int cmd_deodhar(const Job& job) {
    if (job.n < 1) throw DomainError("--n is required and must be at least 1");
    const std::vector<int> gens = parse_gens(job.gens);
    const StarNetwork net = wiring_network(gens, job.n);
    const EnumerationOptions opts = options_of(job);
    check_budget(net, opts.budget);
    const HeckeElement sub = deodhar_expand(gens, job.n);
    const HeckeElement hecke = hecke_side(net);
    const HeckeElement paths = graphical_expansion(net, opts);
    const bool agree = sub == hecke && paths == hecke;
    if (job.format == "json") {
        std::cout << json{{"gens", gens},
                          {"subexpressions", hecke_to_json(sub)},
                          {"hecke", hecke_to_json(hecke)},
                          {"enumeration", hecke_to_json(paths)},
                          {"agree", agree}}
                         .dump(2)
                  << "\n";
    } else if (job.format == "table") {
        std::cout << "network: " << net.to_string() << "\n";
        std::cout << "subexpressions: " << sub.to_string() << "\n";
        std::cout << "hecke:          " << hecke.to_string() << "\n";
        std::cout << "enumeration:    " << paths.to_string() << "\n";
        std::cout << "diff: " << (agree ? "empty" : (sub - hecke).to_string()) << "\n";
    } else {
        throw DomainError("deodhar supports --format json or table");
    }
    return agree ? kOk : kVerifyFailed;
}

int cmd_verify(const Job& job) {
    const SuiteReport r = run_suite(job.suite, options_of(job));
    if (job.format == "json") {
        std::cout << json{{"suite", r.name},
                          {"passed", r.passed},
                          {"checked", r.checked},
                          {"failed", r.failed},
                          {"detail", r.detail}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << r.name << ": " << (r.checked - r.failed) << "/" << r.checked << " agree -> "
                  << (r.passed ? "pass" : "FAIL") << "\n";
        if (!r.passed) std::cout << r.detail << "\n";
    }
    return r.passed ? kOk : kVerifyFailed;
}

void add_network_options(CLI::App* cmd, Job& job) {
    cmd->add_option("--n", job.n, "rank");
    cmd->add_option("--stages", job.stages, "network, e.g. \"[-1,1] o [1,2] * [-2,2]\"");
    cmd->add_option("--builtin", job.builtin, "F3412 or F4231");
}

void add_budget_option(CLI::App* cmd, Job& job) {
    cmd->add_option("--budget", job.budget, "largest family count to enumerate")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--serial", job.serial, "use the serial enumeration kernel");
}

} // namespace

int main(int argc, char** argv) {
    Job job;
    CLI::App app{"Type-BC Kazhdan-Lusztig products by Hecke recursion and path enumeration"};
    app.require_subcommand(1);

    auto* expand = app.add_subcommand("expand", "expand a star network both ways and diff");
    add_network_options(expand, job);
    add_budget_option(expand, job);
    expand->add_option("--format", job.format)->check(CLI::IsMember({"json", "table"}));
    expand->add_flag("--trace", job.trace, "list every family with its defects (json)");

    auto* klpoly = app.add_subcommand("klpoly", "coefficient of T_u both ways");
    add_network_options(klpoly, job);
    add_budget_option(klpoly, job);
    klpoly->add_option("--target", job.target, "window of u, e.g. \"1 2 3 4\"")->required();
    klpoly->add_option("--format", job.format)->check(CLI::IsMember({"json", "table"}));

    auto* render = app.add_subcommand("render", "print the network");
    add_network_options(render, job);
    render->add_option("--format", job.format)->check(CLI::IsMember({"dot", "json", "table"}));

    auto* deodhar = app.add_subcommand("deodhar", "subexpression expansion of a generator word");
    deodhar->add_option("--n", job.n, "rank")->required();
    deodhar->add_option("--gens", job.gens, "generator indices, e.g. \"0,1,0\"");
    add_budget_option(deodhar, job);
    deodhar->add_option("--format", job.format)->check(CLI::IsMember({"json", "table"}));

    auto* verify = app.add_subcommand("verify", "run a named invariant suite");
    verify->add_option("--suite", job.suite, "suite name")->required();
    add_budget_option(verify, job);
    verify->add_option("--format", job.format)->check(CLI::IsMember({"json", "table"}));

    auto* suites = app.add_subcommand("suites", "list suite names");

    try {
        job.budget = default_budget();
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (render->parsed() && job.format == "table" && !render->count("--format")) job.format = "dot";

    try {
        if (expand->parsed()) return cmd_expand(job);
        if (klpoly->parsed()) return cmd_klpoly(job);
        if (render->parsed()) return cmd_render(job);
        if (deodhar->parsed()) return cmd_deodhar(job);
        if (verify->parsed()) return cmd_verify(job);
        if (suites->parsed()) {
            for (const auto& name : suite_names()) std::cout << name << "\n";
            return kOk;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
