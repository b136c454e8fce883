// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kostka/cli.hpp"
#include "kostka/kostka.hpp"
#include "kostka/mu.hpp"
#include "kostka/sweep.hpp"
#include "kostka/tableaux.hpp"

using namespace kostka;

namespace {

struct Verdict {
    bool ok;
    std::string detail;
};

int failed = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing;
    if (budget_seconds > 0) {
        const bool in_time = elapsed < budget_seconds;
        if (!in_time)
            v.ok = false;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.3fs %s %.0fs", elapsed, in_time ? "<" : ">=", budget_seconds);
        timing = buf;
    } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3fs", elapsed);
        timing = buf;
    }
    std::printf("%s  %d. %-40s %s  [%s]\n", v.ok ? "PASS" : "FAIL", id, title, v.detail.c_str(), timing.c_str());
    std::fflush(stdout);
    if (!v.ok)
        ++failed;
}

Verdict from_report(const SuiteReport& r) {
    std::string detail = std::to_string(r.checks) + " checks, " + std::to_string(r.failures) + " failures";
    if (!r.first_failures.empty())
        detail += "; first: " + r.first_failures.front();
    return {r.ok() && r.checks > 0, detail};
}

// Printed matrix of mu_rho(d1, d2) for rho = (3,2,3,2,3,2,3,2), 0 <= d1, d2 <= 8.
const char* const kPrintedTable[9][9] = {
    {"1", "0", "0", "1", "0", "1", "0", "0", "1"},      {"0", "0", "1", "0", "2", "0", "0", "3", "0"},
    {"0", "1", "0", "3", "0", "0", "6", "0", "10"},     {"1", "0", "3", "0", "0", "9", "0", "18", "0"},
    {"0", "2", "0", "0", "10", "0", "25", "0", "0"},    {"1", "0", "0", "9", "0", "28", "0", "0", "81"},
    {"0", "0", "6", "0", "25", "0", "0", "96", "0"},    {"0", "3", "0", "18", "0", "0", "96", "0", "273"},
    {"1", "0", "10", "0", "0", "81", "0", "273", "0"},
};

// Every filling of every shape with at most q columns by values in {1..p},
// kept when rows weakly increase and columns strictly increase. Shapes are
// not restricted to p rows; column strictness rules the taller ones out.
long brute_force_box(int p, int q) {
    long found = 0;
    std::vector<int> shape;
    auto visit_shape = [&] {
        int boxes = 0;
        for (int len : shape)
            boxes += len;
        std::vector<int> cells(boxes, 1);
        while (true) {
            bool ok = true;
            std::vector<std::size_t> offset;
            std::size_t at = 0;
            for (int len : shape) {
                offset.push_back(at);
                at += len;
            }
            for (std::size_t i = 0; i < shape.size() && ok; ++i)
                for (int j = 0; j < shape[i] && ok; ++j) {
                    const int v = cells[offset[i] + j];
                    if (j > 0 && cells[offset[i] + j - 1] > v)
                        ok = false;
                    if (i > 0 && cells[offset[i - 1] + j] >= v)
                        ok = false;
                }
            found += ok;
            int pos = 0;
            while (pos < boxes && cells[pos] == p)
                cells[pos++] = 1;
            if (pos == boxes)
                break;
            ++cells[pos];
        }
    };
    auto shapes = [&](auto&& self, int cap, int rows_left) -> void {
        visit_shape();
        if (rows_left == 0)
            return;
        for (int len = 1; len <= cap; ++len) {
            shape.push_back(len);
            self(self, len, rows_left - 1);
            shape.pop_back();
        }
    };
    shapes(shapes, q, p + 1); // one row more than can ever be filled
    return found;
}

} // namespace

int main() {
    std::printf("acceptance suite, %d OpenMP thread(s)\n", parallel_threads());

    criterion(1, "mu table reproduction", 1.0, [] {
        cli::RunConfig cfg;
        cfg.command = cli::Command::table;
        cfg.beta = {3, 2, 3, 2, 3, 2, 3, 2};
        cfg.max_n = 8;
        cfg.format = cli::Format::json;
        std::ostringstream out, err;
        if (cli::cmd_table(cfg, out, err) != cli::kExitOk)
            return Verdict{false, "table command failed: " + err.str()};
        const auto doc = nlohmann::json::parse(out.str());
        int matched = 0;
        std::string first_bad;
        const bool square = doc.size() == 9 && std::all_of(doc.begin(), doc.end(), [](auto& r) { return r.size() == 9; });
        if (square)
            for (int i = 0; i < 9; ++i)
                for (int j = 0; j < 9; ++j) {
                    if (doc[i][j] == kPrintedTable[i][j])
                        ++matched;
                    else if (first_bad.empty())
                        first_bad = "; cell (" + std::to_string(i) + "," + std::to_string(j) + ") differs";
                }
        return Verdict{matched == 81, std::to_string(matched) + "/81 cells" + first_bad};
    });

    criterion(2, "mu == matrix oracle, weight <= 10", 60.0, [] { return from_report(sweep_mu_oracle(10, 4)); });

    criterion(3, "three-way Kostka agreement, n <= 8", 300.0,
              [] { return from_report(sweep_kostka_agreement(8)); });

    criterion(4, "standard tableaux identities, n <= 10", 120.0,
              [] { return from_report(sweep_standard_tableaux(10)); });

    criterion(5, "Gordon identity, pq <= 12", 300.0, [] {
        Verdict v = from_report(sweep_gordon(12));
        const long box = brute_force_box(2, 2);
        const Count product = gordon_product(2, 2);
        v.ok = v.ok && box == 10 && product == 10;
        v.detail += "; |A(2,2)| brute force = " + std::to_string(box) + ", product = " + product.str();
        return v;
    });

    criterion(6, "functional equation, n <= 8", 0, [] { return from_report(sweep_functional_equation(8)); });

    criterion(7, "cancellation to zero, n <= 8", 0, [] { return from_report(sweep_cancellation(8)); });

    criterion(8, "worked example (4,4,3,3), (3,3,2,2,3,1)", 0, [] {
        const Partition alpha{4, 4, 3, 3};
        const Content beta{3, 3, 2, 2, 3, 1};
        const Tableau example{{{1, 1, 1, 2}, {2, 2, 3, 4}, {3, 4, 5}, {5, 5, 6}}};
        const Count det = kostka_det(alpha, beta);
        const Count rec = kostka_rec(alpha, beta);
        const auto all = enumerate_ssyt(alpha, beta);
        const bool valid = is_valid_ssyt(example, alpha, beta);
        const bool listed = std::find(all.begin(), all.end(), example) != all.end();
        const bool agree = det == rec && rec == Count(all.size());
        return Verdict{agree && valid && listed, "det=" + det.str() + " rec=" + rec.str() +
                                                     " oracle=" + std::to_string(all.size()) +
                                                     (valid ? ", tableau valid" : ", tableau INVALID") +
                                                     (listed ? " and enumerated" : " and NOT enumerated")};
    });

    std::printf("%s\n", failed == 0 ? "all criteria passed" : (std::to_string(failed) + " criteria FAILED").c_str());
    return failed == 0 ? 0 : 1;
}
