// kummer: exact Hodge-number and crepant-resolution computations for the
// Kummer-type Calabi-Yau quotients E_d^n / G_{d,n}, d in {2,3,4,6}.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "kummer/chart_io.hpp"
#include "kummer/invariants.hpp"
#include "kummer/orbifold.hpp"
#include "kummer/toric.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

struct Options {
    int d = 2;
    int n = 1;
    std::string method = "closed";  // brute | closed | both
    std::string format = "json";    // json | table
    std::string family = "g1";
    std::string file;
    std::string out;
    std::int64_t r = 6;
    std::vector<std::int64_t> weights;
    std::int64_t max_degree = 6;
    int budget = 0;  // 0 = library default max n
    int twist = 0;   // 0 = default per d
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream stream(opt.out);
    if (!stream) throw std::runtime_error("cannot open output file: " + opt.out);
    stream << text << "\n";
}

kummer::EnumerationBudget budget_for(const Options& opt) {
    kummer::EnumerationBudget budget;
    if (opt.budget > 0) {
        budget.max_n_d_le_4 = opt.budget;
        budget.max_n_d_6 = opt.budget;
    }
    return budget;
}

std::string render_diamond_table(const kummer::HodgeDiamond& diamond) {
    // Conventional layout: row k lists h^{p,q} with p+q = k, centred.
    const int n = diamond.n;
    std::vector<std::vector<std::string>> rows;
    std::size_t cell = 1;
    for (int k = 0; k <= 2 * n; ++k) {
        std::vector<std::string> row;
        for (int p = std::max(0, k - n); p <= std::min(n, k); ++p) {
            row.push_back(diamond.entries[static_cast<std::size_t>(p)]
                                         [static_cast<std::size_t>(k - p)]
                                             .str());
            cell = std::max(cell, row.back().size());
        }
        rows.push_back(std::move(row));
    }
    std::ostringstream out;
    out << "Hodge diamond, d=" << diamond.d << " n=" << diamond.n << " (" << diamond.method
        << ")\n";
    const std::size_t width = cell + 2;
    const std::size_t full = static_cast<std::size_t>(n + 1) * width;
    for (const auto& row : rows) {
        std::string line;
        for (const auto& value : row) {
            std::string padded = value;
            while (padded.size() < cell) padded = " " + padded;
            line += padded + std::string(width - cell, ' ');
        }
        while (line.size() < full) line = " " + line;
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
    out << "euler = " << diamond.euler.str();
    return out.str();
}

int cmd_hodge(const Options& opt) {
    const std::string& format = opt.format;
    const auto budget = budget_for(opt);
    std::vector<kummer::HodgeDiamond> diamonds;
    if (opt.method == "brute" || opt.method == "both")
        diamonds.push_back(kummer::hodge_diamond(opt.d, opt.n, kummer::DiamondMethod::kBrute,
                                                 budget, opt.threads));
    if (opt.method == "closed" || opt.method == "both")
        diamonds.push_back(kummer::hodge_diamond(opt.d, opt.n, kummer::DiamondMethod::kClosed,
                                                 budget, opt.threads));
    for (const auto& diamond : diamonds) diamond.validate();

    bool match = true;
    json diff = json::array();
    if (diamonds.size() == 2)
        for (int p = 0; p <= opt.n; ++p)
            for (int q = 0; q <= opt.n; ++q) {
                const auto& lhs = diamonds[0].entries[static_cast<std::size_t>(p)]
                                                     [static_cast<std::size_t>(q)];
                const auto& rhs = diamonds[1].entries[static_cast<std::size_t>(p)]
                                                     [static_cast<std::size_t>(q)];
                if (lhs != rhs) {
                    match = false;
                    diff.push_back(
                        {{"p", p}, {"q", q}, {"brute", lhs.str()}, {"closed", rhs.str()}});
                }
            }

    if (format == "table") {
        std::ostringstream out;
        for (std::size_t i = 0; i < diamonds.size(); ++i) {
            if (i) out << "\n\n";
            out << render_diamond_table(diamonds[i]);
        }
        if (diamonds.size() == 2)
            out << "\nmethods " << (match ? "agree" : ("differ at " + diff.dump()));
        emit(opt, out.str());
    } else {
        json result;
        result["d"] = opt.d;
        result["n"] = opt.n;
        result["diamonds"] = json::array();
        for (const auto& diamond : diamonds)
            result["diamonds"].push_back(json::parse(diamond.to_json()));
        if (diamonds.size() == 2) {
            result["match"] = match;
            result["diff"] = diff;
        }
        emit(opt, result.dump(2));
    }
    return match ? kExitOk : kExitMismatch;
}

int cmd_euler(const Options& opt) {
    const kummer::BigInt closed = kummer::euler_closed(opt.d, opt.n);
    json result{{"d", opt.d}, {"n", opt.n}, {"closed", closed.str()}};
    bool match = true;
    if (opt.method == "both" || opt.method == "brute") {
        const kummer::BigInt brute =
            kummer::chen_ruan_poincare(opt.d, opt.n, budget_for(opt), opt.threads)
                .integer_part()
                .integer_part_euler();
        result["brute"] = brute.str();
        match = (brute == closed);
        result["match"] = match;
    }
    if (opt.format == "table") {
        std::ostringstream out;
        out << "euler(d=" << opt.d << ", n=" << opt.n << ") = " << closed.str();
        if (result.contains("brute"))
            out << "  [brute force: " << result["brute"].get<std::string>() << ", "
                << (match ? "match" : "MISMATCH") << "]";
        emit(opt, out.str());
    } else {
        emit(opt, result.dump(2));
    }
    return match ? kExitOk : kExitMismatch;
}

int cmd_toric_juniors(const Options& opt) {
    const kummer::toric::CyclicQuotient q(opt.r, opt.weights);
    const auto juniors = kummer::toric::junior_elements(q);
    if (opt.format == "table") {
        std::ostringstream out;
        out << "1/" << q.r << "(";
        for (std::size_t i = 0; i < q.weights.size(); ++i)
            out << (i ? "," : "") << q.weights[i];
        out << ")  gorenstein=" << (q.is_gorenstein() ? "yes" : "no") << "\n";
        out << "  m  age  junior\n";
        for (std::int64_t m = 0; m < q.r; ++m) {
            const auto age = kummer::toric::element_age(q, m);
            out << "  " << m << "  " << age.num << "/12  "
                << (std::find(juniors.begin(), juniors.end(), m) != juniors.end() ? "yes"
                                                                                  : "no")
                << "\n";
        }
        out << "junior elements: " << juniors.size();
        emit(opt, out.str());
    } else {
        json result{{"r", q.r},
                    {"weights", q.weights},
                    {"gorenstein", q.is_gorenstein()},
                    {"juniors", juniors}};
        json ages = json::array();
        for (std::int64_t m = 0; m < q.r; ++m)
            ages.push_back({{"m", m}, {"age_num", kummer::toric::element_age(q, m).num},
                            {"age_den", 12}});
        result["ages"] = ages;
        emit(opt, result.dump(2));
    }
    return kExitOk;
}

int cmd_toric_verify(const Options& opt) {
    using namespace kummer::toric;
    bool all_ok = true;
    json report = json::array();
    std::ostringstream table;

    if (file_contains_triangulations(opt.file)) {
        for (const auto& c : load_triangulation_cases(opt.file)) {
            const auto result = verify_triangulation(c.triangulation);
            all_ok = all_ok && result.ok;
            report.push_back({{"case", c.case_name},
                              {"triangulation", result.ok},
                              {"diagnostics", result.diagnostics}});
            table << "case " << c.case_name << ": triangulation "
                  << (result.ok ? "ok" : ("FAIL (" + result.diagnostics + ")")) << "\n";
        }
    } else {
        for (const auto& c : load_chart_cases(opt.file)) {
            for (const auto& fixture : c.charts) {
                const auto inv = verify_chart_invariance(fixture.chart, c.quotient);
                const auto crep = verify_chart_crepancy(fixture.chart, c.quotient);
                bool lift_ok = true;
                std::vector<std::int64_t> lift;
                if (!c.linearisation.empty()) {
                    lift = lift_action(fixture.chart, c.quotient.r, c.linearisation);
                    if (fixture.expected_lift) lift_ok = (lift == *fixture.expected_lift);
                }
                const bool ok = inv.ok && crep.ok && lift_ok;
                all_ok = all_ok && ok;
                report.push_back({{"case", c.case_name},
                                  {"chart", fixture.label},
                                  {"invariance", inv.ok},
                                  {"crepancy", crep.ok},
                                  {"lift", lift},
                                  {"lift_ok", lift_ok}});
                table << "chart " << fixture.label << ": invariance "
                      << (inv.ok ? "ok" : "FAIL") << ", crepancy "
                      << (crep.ok ? "ok" : ("FAIL (" + crep.failure + ")")) << ", lift "
                      << (lift_ok ? "ok" : "FAIL") << "\n";
            }
        }
    }
    if (opt.format == "table") {
        std::string text = table.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        emit(opt, text);
    } else {
        emit(opt, json{{"ok", all_ok}, {"results", report}}.dump(2));
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_inv_gens(const Options& opt) {
    using namespace kummer::inv;
    const auto action = group_family(opt.family, opt.n);
    const auto names = family_var_names(opt.family, opt.n);
    const auto gens = generators_up_to_degree(action, opt.max_degree);
    if (opt.format == "table") {
        std::ostringstream out;
        out << gens.size() << " generators up to degree " << opt.max_degree << ":\n";
        for (const auto& g : gens) out << "  " << monomial_to_string(g, names) << "\n";
        std::string text = out.str();
        text.pop_back();
        emit(opt, text);
    } else {
        json result{{"family", opt.family}, {"n", opt.n}, {"max_degree", opt.max_degree}};
        result["generators"] = json::array();
        for (const auto& g : gens)
            result["generators"].push_back(
                {{"exponents", g}, {"monomial", monomial_to_string(g, names)}});
        emit(opt, result.dump(2));
    }
    return kExitOk;
}

int cmd_inv_verify(const Options& opt) {
    using namespace kummer::inv;
    const auto action = group_family(opt.family, opt.n);
    std::vector<Monomial> claimed;
    if (opt.file.empty()) {
        claimed = generators_up_to_degree(action, opt.max_degree);
    } else {
        std::ifstream stream(opt.file);
        if (!stream) {
            std::cerr << "error: cannot open " << opt.file << "\n";
            return kExitParse;
        }
        json parsed;
        try {
            stream >> parsed;
            for (const auto& entry : parsed) claimed.push_back(entry.get<Monomial>());
        } catch (const json::exception& e) {
            std::cerr << "error: " << opt.file << ": " << e.what() << "\n";
            return kExitParse;
        }
    }
    const auto result = verify_generator_list(action, claimed, opt.max_degree);
    const auto names = family_var_names(opt.family, opt.n);
    json output{{"family", opt.family},
                {"n", opt.n},
                {"max_degree", opt.max_degree},
                {"claimed", claimed.size()},
                {"ok", result.ok}};
    if (!result.ok && result.witness) {
        output["witness"] = *result.witness;
        output["witness_monomial"] = monomial_to_string(*result.witness, names);
        output["reason"] = result.reason;
    }
    if (opt.format == "table") {
        std::ostringstream out;
        out << "generator list (" << claimed.size() << " monomials) up to degree "
            << opt.max_degree << ": " << (result.ok ? "ok" : "FAIL");
        if (!result.ok && result.witness)
            out << "\nwitness: " << monomial_to_string(*result.witness, names) << " ("
                << result.reason << ")";
        emit(opt, out.str());
    } else {
        emit(opt, output.dump(2));
    }
    return result.ok ? kExitOk : kExitMismatch;
}

int cmd_inv_identity(const Options& opt) {
    using namespace kummer::inv;
    const int n = opt.n;
    const auto sz = static_cast<std::size_t>(2 * n);
    std::map<std::string, Monomial> subs;
    {
        Monomial z1(sz, 0), z2(sz, 0), yn4(sz, 0), w(sz, 0), tn(sz, 0);
        for (int i = 0; i < n - 1; ++i) {
            z1[static_cast<std::size_t>(i)] = 1;
            z2[static_cast<std::size_t>(n + i)] = 1;
        }
        z1[static_cast<std::size_t>(n - 1)] = -1;
        z2[static_cast<std::size_t>(2 * n - 1)] = -1;
        yn4[static_cast<std::size_t>(2 * n - 1)] = 4;
        w[static_cast<std::size_t>(n - 1)] = 1;
        w[static_cast<std::size_t>(2 * n - 1)] = 2;
        tn[static_cast<std::size_t>(n - 1)] = 2;
        subs = {{"z1", z1}, {"z2", z2}, {"yn4", yn4}, {"w", w}, {"tn", tn}};
    }
    auto build = [&](std::int64_t ah, std::int64_t at, std::int64_t bh, std::int64_t bt) {
        Monomial m(sz, 0);
        for (int i = 0; i < n - 1; ++i) {
            m[static_cast<std::size_t>(i)] = ah;
            m[static_cast<std::size_t>(n + i)] = bh;
        }
        m[static_cast<std::size_t>(n - 1)] = at;
        m[static_cast<std::size_t>(2 * n - 1)] = bt;
        return m;
    };
    using F = std::vector<IdentityFactor>;
    const std::vector<std::pair<Monomial, F>> identities{
        {build(0, 0, 1, 3), F{{"z2", 1}, {"yn4", 1}}},
        {build(0, 0, 3, 1), F{{"z2", 3}, {"yn4", 1}}},
        {build(1, 1, 0, 0), F{{"z1", 1}, {"tn", 1}}},
        {build(1, 0, 2, 0), F{{"z1", 1}, {"z2", 2}, {"w", 1}}},
        {build(0, 1, 2, 0), F{{"z2", 2}, {"w", 1}}},
        {build(1, 0, 1, 1), F{{"z2", 1}, {"w", 1}, {"z1", 1}}},
        {build(0, 1, 1, 1), F{{"z2", 1}, {"w", 1}}},
        {build(1, 0, 0, 2), F{{"w", 1}, {"z1", 1}}},
        {build(0, 1, 3, 3), F{{"z2", 3}, {"yn4", 1}, {"w", 1}}},
        {build(1, 0, 3, 3), F{{"z2", 3}, {"w", 1}, {"yn4", 1}, {"z1", 1}}},
        {build(0, 1, 2, 4), F{{"z2", 2}, {"w", 1}, {"yn4", 1}}},
        {build(1, 0, 2, 4), F{{"z2", 2}, {"w", 1}, {"yn4", 1}, {"z1", 1}}}};

    const auto names = family_var_names("h1", n);
    bool all_ok = true;
    json results = json::array();
    std::ostringstream table;
    for (const auto& [lhs, rhs] : identities) {
        const auto result = check_monomial_identity(lhs, rhs, subs);
        all_ok = all_ok && result.ok;
        std::string product;
        for (const auto& factor : rhs) {
            if (!product.empty()) product += "*";
            product += factor.name;
            if (factor.multiplicity != 1) product += "^" + std::to_string(factor.multiplicity);
        }
        results.push_back({{"lhs", monomial_to_string(lhs, names)},
                           {"rhs", product},
                           {"ok", result.ok}});
        table << monomial_to_string(lhs, names) << " = " << product << ": "
              << (result.ok ? "ok" : "FAIL") << "\n";
    }
    if (opt.format == "table") {
        std::string text = table.str();
        text.pop_back();
        emit(opt, text);
    } else {
        emit(opt, json{{"n", n}, {"ok", all_ok}, {"identities", results}}.dump(2));
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_inv_twist(const Options& opt) {
    const int twist = (opt.twist != 0) ? opt.twist : (opt.d == 3 ? 2 : 3);
    const auto result = kummer::inv::twist_conjugation_check(opt.d, opt.n, twist);
    const std::string source = (opt.d == 3) ? "G1" : "H1";
    const std::string target = (opt.d == 3) ? ("G" + std::to_string(((twist % 3) + 3) % 3))
                                            : ("H" + std::to_string(((twist % 4) + 4) % 4));
    if (opt.format == "table") {
        std::ostringstream out;
        out << source << " -> " << target << " (d=" << opt.d << ", n=" << opt.n
            << ", twist=" << twist << "): " << (result.ok ? "pass" : "FAIL");
        if (!result.ok) out << " (" << result.detail << ")";
        emit(opt, out.str());
    } else {
        emit(opt, json{{"d", opt.d},
                       {"n", opt.n},
                       {"twist", twist},
                       {"source", source},
                       {"target", target},
                       {"ok", result.ok},
                       {"detail", result.detail}}
                      .dump(2));
    }
    return result.ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hodge-number and crepant-resolution computations for Kummer-type "
                 "Calabi-Yau quotients"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--out", opt.out, "Write output to a file instead of stdout");
    };
    const auto add_dn = [&](CLI::App* cmd) {
        cmd->add_option("--d", opt.d, "Automorphism order")
            ->required()
            ->check(CLI::IsMember({2, 3, 4, 6}));
        cmd->add_option("--n", opt.n, "Dimension")->required()->check(CLI::PositiveNumber);
    };

    auto* hodge = app.add_subcommand("hodge", "Compute the Hodge diamond of X_{d,n}");
    auto* diamond = app.add_subcommand("diamond", "Render the Hodge diamond (table layout)");
    for (auto* cmd : {hodge, diamond}) {
        add_dn(cmd);
        add_common(cmd);
        cmd->add_option("--method", opt.method, "brute | closed | both")
            ->check(CLI::IsMember({"brute", "closed", "both"}));
        cmd->add_option("--budget", opt.budget, "Override the maximum n for enumeration");
        cmd->add_option("--threads", opt.threads, "Worker threads for the brute-force sweep");
    }

    auto* euler = app.add_subcommand("euler", "Compute the Euler characteristic of X_{d,n}");
    add_dn(euler);
    add_common(euler);
    euler->add_option("--method", opt.method, "brute | closed | both")
        ->check(CLI::IsMember({"brute", "closed", "both"}));
    euler->add_option("--budget", opt.budget, "Override the maximum n for enumeration");
    euler->add_option("--threads", opt.threads, "Worker threads for the brute-force sweep");

    auto* toric = app.add_subcommand("toric", "Cyclic-quotient and chart certification");
    toric->require_subcommand(1);
    auto* juniors = toric->add_subcommand("juniors", "Age table and junior elements of 1/r(a)");
    add_common(juniors);
    juniors->add_option("--r", opt.r, "Order of the cyclic group")
        ->required()
        ->check(CLI::PositiveNumber);
    juniors->add_option("--weights", opt.weights, "Comma-separated weights")
        ->required()
        ->delimiter(',');
    auto* verify = toric->add_subcommand("verify", "Verify a chart or triangulation file");
    add_common(verify);
    verify->add_option("--file", opt.file, "JSON chart/triangulation file")
        ->required()
        ->check(CLI::ExistingFile);

    auto* invariants = app.add_subcommand("invariants", "Monomial invariant theory");
    invariants->require_subcommand(1);
    auto* gens = invariants->add_subcommand("gens", "Minimal invariant-semigroup generators");
    add_common(gens);
    gens->add_option("--family", opt.family, "g1 | g2 | h1 | h3")
        ->check(CLI::IsMember({"g1", "g2", "h1", "h3"}));
    gens->add_option("--d", opt.d, "Automorphism order (implied by family)");
    gens->add_option("--n", opt.n, "Number of curve factors")->required();
    gens->add_option("--max-degree", opt.max_degree, "Total degree bound")->required();
    auto* inv_verify = invariants->add_subcommand("verify", "Verify a generator list");
    add_common(inv_verify);
    inv_verify->add_option("--family", opt.family, "g1 | g2 | h1 | h3")
        ->check(CLI::IsMember({"g1", "g2", "h1", "h3"}));
    inv_verify->add_option("--n", opt.n, "Number of curve factors")->required();
    inv_verify->add_option("--max-degree", opt.max_degree, "Total degree bound")->required();
    inv_verify->add_option("--file", opt.file,
                           "JSON array of exponent vectors (default: recompute)");
    auto* identity = invariants->add_subcommand("identity", "Check the formal monomial identities");
    add_common(identity);
    identity->add_option("--n", opt.n, "Number of curve factors")->required();
    auto* twist = invariants->add_subcommand("twist", "Conjugation check G1->G2 / H1->H3");
    add_common(twist);
    twist->add_option("--d", opt.d, "3 (order-3 groups) or 4 (order-4 groups)")
        ->required()
        ->check(CLI::IsMember({3, 4}));
    twist->add_option("--n", opt.n, "Number of curve factors")->required();
    twist->add_option("--twist", opt.twist, "Twist exponent (default 2 for d=3, 3 for d=4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (diamond->parsed() && diamond->get_option("--format")->count() == 0)
            opt.format = "table";
        if (hodge->parsed() || diamond->parsed()) return cmd_hodge(opt);
        if (euler->parsed()) return cmd_euler(opt);
        if (juniors->parsed()) return cmd_toric_juniors(opt);
        if (verify->parsed()) return cmd_toric_verify(opt);
        if (gens->parsed()) return cmd_inv_gens(opt);
        if (inv_verify->parsed()) return cmd_inv_verify(opt);
        if (identity->parsed()) return cmd_inv_identity(opt);
        if (twist->parsed()) return cmd_inv_twist(opt);
    } catch (const kummer::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const kummer::toric::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
