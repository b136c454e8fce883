#include "kostka/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "kostka/kostka.hpp"
#include "kostka/mu.hpp"
#include "kostka/tableaux.hpp"

namespace kostka::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr int kVerifyMaxN = 10;

std::string csv_list(std::span<const int> parts) {
    std::string s = "\"";
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + std::to_string(parts[i]);
    return s + "\"";
}

json json_list(std::span<const int> parts) { return json(std::vector<int>(parts.begin(), parts.end())); }

std::vector<Method> methods_for(MethodChoice choice) {
    switch (choice) {
    case MethodChoice::det:
        return {Method::det_formula};
    case MethodChoice::rec:
        return {Method::recursion};
    case MethodChoice::oracle:
        return {Method::oracle};
    case MethodChoice::all:
        break;
    }
    return {Method::det_formula, Method::recursion, Method::oracle};
}

int perm_cap_from_env(int fallback) {
    const char* env = std::getenv("KOSTKA_PERM_CAP");
    if (!env || !*env)
        return fallback;
    try {
        std::size_t used = 0;
        const int value = std::stoi(env, &used);
        if (used == std::string(env).size())
            return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("KOSTKA_PERM_CAP is not an integer: ") + env);
}

Limits limits_for(const RunConfig& cfg) {
    Limits limits;
    limits.perm_cap = cfg.perm_cap;
    return limits;
}

} // namespace

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) {
            if (text.find_first_not_of(" \t,") == std::string::npos && parts.empty())
                continue;
            throw std::invalid_argument("empty entry in list '" + text + "'");
        }
        token = token.substr(first, token.find_last_not_of(" \t") - first + 1);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || used == 0)
            throw std::invalid_argument("not an integer: '" + token + "'");
        parts.push_back(value);
    }
    return parts;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Limits limits = limits_for(cfg);
    std::vector<KostkaResult> results;
    try {
        for (Method m : methods_for(cfg.method))
            results.push_back(kostka(IntSeq(cfg.alpha), IntSeq(cfg.beta), m, limits));
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }

    bool agree = true;
    for (const auto& r : results)
        agree = agree && r.value == results.front().value;

    switch (cfg.format) {
    case Format::json: {
        json rows = json::array();
        for (const auto& r : results) {
            rows.push_back({{"alpha", json_list(r.alpha.parts())},
                            {"beta", json_list(r.beta.parts())},
                            {"method", std::string(method_name(r.method))},
                            {"value", r.value.str()},
                            {"terms_evaluated", r.terms_evaluated}});
        }
        out << (results.size() == 1 ? rows.front() : rows).dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "alpha,beta,method,value\n";
        for (const auto& r : results)
            out << csv_list(r.alpha.parts()) << ',' << csv_list(r.beta.parts()) << ',' << method_name(r.method)
                << ',' << r.value << '\n';
        break;
    case Format::text:
        for (const auto& r : results)
            out << "K" << r.alpha << r.beta << " = " << r.value << "  [" << method_name(r.method) << ", "
                << r.terms_evaluated << " terms]\n";
        break;
    }

    if (!agree) {
        err << "error: methods disagree\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<Tableau> tableaux;
    Partition alpha;
    Content beta;
    try {
        alpha = Partition(IntSeq(cfg.alpha));
        beta = normalize_content(IntSeq(cfg.beta));
        if (alpha.n() == beta.n())
            tableaux = enumerate_ssyt(alpha, beta, limits_for(cfg));
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }

    switch (cfg.format) {
    case Format::json: {
        json doc = {{"alpha", json_list(alpha.parts())},
                    {"beta", json_list(beta.parts())},
                    {"count", std::to_string(tableaux.size())},
                    {"tableaux", json::array()}};
        for (const auto& t : tableaux)
            doc["tableaux"].push_back(t.rows);
        out << doc.dump() << '\n';
        break;
    }
    case Format::csv:
        out << "tableau,row,entries\n";
        for (std::size_t t = 0; t < tableaux.size(); ++t)
            for (std::size_t r = 0; r < tableaux[t].rows.size(); ++r)
                out << t << ',' << r << ',' << csv_list(tableaux[t].rows[r]) << '\n';
        break;
    case Format::text:
        for (std::size_t t = 0; t < tableaux.size(); ++t) {
            if (t)
                out << '\n';
            for (const auto& row : tableaux[t].rows) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    out << (j ? " " : "") << row[j];
                out << '\n';
            }
        }
        out << (tableaux.empty() ? "" : "\n") << "count: " << tableaux.size() << '\n';
        break;
    }
    return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const int rows = cfg.rows >= 0 ? cfg.rows : cfg.max_n + 1;
    const int cols = cfg.cols >= 0 ? cfg.cols : cfg.max_n + 1;
    if (rows < 1 || cols < 1) {
        err << "error: table needs at least one row and column\n";
        return kExitBadInput;
    }
    Content rho;
    try {
        rho = normalize_content(IntSeq(cfg.beta));
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    const auto table = mu_table(rho, rows, cols);

    switch (cfg.format) {
    case Format::json: {
        json doc = json::array();
        for (const auto& row : table) {
            json cells = json::array();
            for (const auto& c : row)
                cells.push_back(c.str());
            doc.push_back(std::move(cells));
        }
        out << doc.dump() << '\n';
        break;
    }
    case Format::csv:
        for (const auto& row : table) {
            for (std::size_t j = 0; j < row.size(); ++j)
                out << (j ? "," : "") << row[j];
            out << '\n';
        }
        break;
    case Format::text: {
        std::size_t width = 1;
        for (const auto& row : table)
            for (const auto& c : row)
                width = std::max(width, c.str().size());
        for (const auto& row : table) {
            for (std::size_t j = 0; j < row.size(); ++j)
                out << (j ? " " : "") << std::setw(static_cast<int>(width)) << row[j].str();
            out << '\n';
        }
        break;
    }
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err, const MuFn& mu_override) {
    if (cfg.max_n < 0 || cfg.max_n > kVerifyMaxN) {
        err << "error: verify supports 0 <= max-n <= " << kVerifyMaxN << '\n';
        return kExitBadInput;
    }
    const Limits limits = limits_for(cfg);
    if (cfg.p < 1 || cfg.q < 1 || cfg.p * cfg.q > limits.gordon_max_pq) {
        err << "error: verify needs p, q >= 1 and p*q <= " << limits.gordon_max_pq << '\n';
        return kExitBadInput;
    }
    const Exec exec = cfg.serial ? Exec::serial : Exec::parallel;
    const int n = cfg.max_n;

    std::vector<SuiteReport> suites;
    suites.push_back(sweep_kostka_agreement(n, exec, limits));
    suites.push_back(sweep_cancellation(n, exec, limits));
    suites.push_back(sweep_functional_equation(n, exec, limits));
    suites.push_back(sweep_mu_oracle(n, 4, exec, mu_override, limits));
    suites.push_back(sweep_mu_symmetry(n, 4, exec, mu_override));
    suites.push_back(sweep_standard_tableaux(n, exec, limits));

    {
        SuiteReport gordon;
        gordon.name = "gordon";
        gordon.checks = 1;
        const Count product = gordon_product(cfg.p, cfg.q);
        const Count sum = gordon_sum(cfg.p, cfg.q, exec, limits);
        if (product != sum) {
            gordon.failures = 1;
            gordon.first_failures.push_back("p=" + std::to_string(cfg.p) + " q=" + std::to_string(cfg.q) +
                                            ": product=" + product.str() + " sum=" + sum.str());
        }
        suites.push_back(std::move(gordon));
    }

    bool ok = true;
    for (const auto& s : suites)
        ok = ok && s.ok();

    switch (cfg.format) {
    case Format::json: {
        json doc = {{"ok", ok}, {"max_n", n}, {"p", cfg.p}, {"q", cfg.q}, {"suites", json::array()}};
        for (const auto& s : suites)
            doc["suites"].push_back({{"name", s.name},
                                     {"checks", s.checks},
                                     {"failures", s.failures},
                                     {"first_failures", s.first_failures}});
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "suite,checks,failures\n";
        for (const auto& s : suites)
            out << s.name << ',' << s.checks << ',' << s.failures << '\n';
        break;
    case Format::text:
        for (const auto& s : suites) {
            out << (s.ok() ? "PASS  " : "FAIL  ") << std::left << std::setw(20) << s.name << " checks=" << s.checks
                << " failures=" << s.failures << '\n';
            for (const auto& f : s.first_failures)
                out << "      " << f << '\n';
        }
        out << (ok ? "all suites passed" : "verification FAILED") << '\n';
        break;
    }
    if (!ok) {
        for (const auto& s : suites)
            if (!s.ok())
                err << "failed suite: " << s.name << '\n';
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kostka numbers: semistandard tableaux of given shape and content"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string alpha_text, beta_text;
    std::string method_text = "det";
    std::string format_text = "text";
    int perm_cap = -1;

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    const std::map<std::string, MethodChoice> methods{{"det", MethodChoice::det},
                                                      {"rec", MethodChoice::rec},
                                                      {"oracle", MethodChoice::oracle},
                                                      {"all", MethodChoice::all}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--perm-cap", perm_cap, "largest k for which S_k is iterated");
    };

    auto* compute = app.add_subcommand("compute", "compute K(alpha, beta)");
    compute->add_option("--alpha", alpha_text, "shape, e.g. 4,4,3,3")->required();
    compute->add_option("--beta", beta_text, "content, zeros allowed")->required();
    compute->add_option("--method", method_text, "det, rec, oracle or all")
        ->check(CLI::IsMember({"det", "rec", "oracle", "all"}));
    add_common(compute);

    auto* enumerate = app.add_subcommand("enumerate", "list every tableau of shape alpha and content beta");
    enumerate->add_option("--alpha", alpha_text, "shape")->required();
    enumerate->add_option("--beta", beta_text, "content")->required();
    add_common(enumerate);

    auto* table = app.add_subcommand("table", "print mu_rho(d1, d2) for 0 <= d1, d2 <= max-n");
    table->add_option("--beta,--rho", beta_text, "rho")->required();
    table->add_option("--max-n", cfg.max_n, "largest index (table is (max-n + 1) square)");
    table->add_option("--rows", cfg.rows, "number of rows");
    table->add_option("--cols", cfg.cols, "number of columns");
    add_common(table);

    auto* verify = app.add_subcommand("verify", "run the exhaustive cross-checks");
    verify->add_option("--max-n", cfg.max_n, "largest weight swept");
    verify->add_option("--p", cfg.p, "Gordon alphabet size");
    verify->add_option("--q", cfg.q, "Gordon column bound");
    verify->add_flag("--serial", cfg.serial, "run the serial reference kernels");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitBadInput;
    }

    try {
        cfg.alpha = parse_parts(alpha_text);
        cfg.beta = parse_parts(beta_text);
        cfg.perm_cap = perm_cap >= 0 ? perm_cap : perm_cap_from_env(cfg.perm_cap);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    if (cfg.perm_cap < 1) {
        err << "error: perm cap must be at least 1\n";
        return kExitBadInput;
    }
    cfg.format = formats.at(format_text);
    cfg.method = methods.at(method_text);

    if (compute->parsed()) {
        cfg.command = Command::compute;
        return cmd_compute(cfg, out, err);
    }
    if (enumerate->parsed()) {
        cfg.command = Command::enumerate;
        return cmd_enumerate(cfg, out, err);
    }
    if (table->parsed()) {
        cfg.command = Command::table;
        return cmd_table(cfg, out, err);
    }
    cfg.command = Command::verify;
    return cmd_verify(cfg, out, err);
}

} // namespace kostka::cli
