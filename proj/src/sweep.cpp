#include "kostka/sweep.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

#include "kostka/kostka.hpp"
#include "kostka/mu.hpp"
#include "kostka/tableaux.hpp"

namespace kostka {

namespace {

constexpr std::size_t kMaxReportedFailures = 8;

struct Outcome {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::function<std::string()>& describe) {
        ++checks;
        if (!ok)
            failures.push_back(describe());
    }
};

// Runs task(0..n-1) and folds the outcomes into a report in task order.
SuiteReport run_tasks(std::string name, std::size_t n, Exec exec, const std::function<Outcome(std::size_t)>& task) {
    std::vector<Outcome> outcomes(n);
    auto guarded = [&](std::size_t i) {
        try {
            outcomes[i] = task(i);
        } catch (const std::exception& e) {
            outcomes[i].checks += 1;
            outcomes[i].failures.push_back(std::string("exception: ") + e.what());
        }
    };
    if (exec == Exec::parallel) {
        const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < count; ++i)
            guarded(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i)
            guarded(i);
    }

    SuiteReport report;
    report.name = std::move(name);
    for (auto& outcome : outcomes) {
        report.checks += outcome.checks;
        report.failures += outcome.failures.size();
        for (auto& f : outcome.failures)
            if (report.first_failures.size() < kMaxReportedFailures)
                report.first_failures.push_back(std::move(f));
    }
    return report;
}

// One task per (n, beta); the shapes of weight n are looped inside the task so
// a single mu cache serves all of them.
struct ContentTask {
    int n;
    Content beta;
};

std::vector<ContentTask> content_tasks(int max_n) {
    std::vector<ContentTask> tasks;
    for (int n = 0; n <= max_n; ++n)
        for (auto& beta : compositions_of(n))
            tasks.push_back({n, std::move(beta)});
    return tasks;
}

std::string describe(const Partition& alpha, const Content& beta) {
    return "alpha=" + to_string(alpha.parts()) + " beta=" + to_string(beta.parts());
}

std::string str(const Count& c) { return c.str(); }

} // namespace

int parallel_threads() { return omp_get_max_threads(); }

SuiteReport sweep_kostka_agreement(int max_n, Exec exec, const Limits& limits) {
    const auto tasks = content_tasks(max_n);
    return run_tasks("kostka-agreement", tasks.size(), exec, [&](std::size_t i) {
        const auto& [n, beta] = tasks[i];
        Outcome out;
        MuEvaluator mu(beta);
        for (const auto& alpha : partitions_of(n)) {
            const Count det = kostka_det(alpha, mu, limits);
            const Count rec = kostka_rec(alpha, beta);
            const Count oracle = count_ssyt(alpha, beta, limits);
            out.check(det == rec && rec == oracle && det >= 0, [&] {
                return describe(alpha, beta) + ": det=" + str(det) + " rec=" + str(rec) + " oracle=" + str(oracle);
            });
        }
        return out;
    });
}

SuiteReport sweep_cancellation(int max_n, Exec exec, const Limits& limits) {
    const auto tasks = content_tasks(max_n);
    return run_tasks("cancellation", tasks.size(), exec, [&](std::size_t i) {
        const auto& [n, beta] = tasks[i];
        Outcome out;
        MuEvaluator mu(beta);
        for (const auto& alpha : partitions_of(n)) {
            if (count_ssyt(alpha, beta, limits) != 0)
                continue;
            const Count det = kostka_det(alpha, mu, limits);
            out.check(det == 0, [&] { return describe(alpha, beta) + ": signed sum left " + str(det); });
        }
        return out;
    });
}

SuiteReport sweep_functional_equation(int max_n, Exec exec, const Limits& limits) {
    auto tasks = content_tasks(max_n);
    std::erase_if(tasks, [](const ContentTask& t) { return t.beta.len() == 0; });
    return run_tasks("functional-equation", tasks.size(), exec, [&](std::size_t i) {
        const auto& [n, beta] = tasks[i];
        Outcome out;
        MuEvaluator mu(beta);
        MuEvaluator mu_shorter(beta.without_last());
        const int last = beta[beta.len() - 1];
        for (const auto& alpha : partitions_of(n)) {
            const Count lhs = kostka_det(alpha, mu, limits);
            Count rhs = 0;
            for (const auto& gamma : horizontal_strips(alpha, last))
                rhs += kostka_det(Partition(alpha.seq() - gamma), mu_shorter, limits);
            out.check(lhs == rhs, [&] { return describe(alpha, beta) + ": lhs=" + str(lhs) + " rhs=" + str(rhs); });
        }
        return out;
    });
}

SuiteReport sweep_mu_oracle(int max_weight, int max_len, Exec exec, const MuFn& mu_fn, const Limits& limits) {
    std::vector<Content> rhos;
    for (int n = 0; n <= max_weight; ++n)
        for (auto& rho : compositions_of(n))
            rhos.push_back(std::move(rho));
    return run_tasks("mu-oracle", rhos.size(), exec, [&](std::size_t i) {
        const Content& rho = rhos[i];
        Outcome out;
        MuEvaluator mu(rho);
        for (const auto& d : weak_compositions(rho.n(), max_len)) {
            const IntSeq delta(d);
            const Count value = mu_fn ? mu_fn(rho, delta) : mu(delta);
            const Count oracle = mu_matrix_oracle(rho, delta, limits);
            out.check(value == oracle, [&] {
                return "rho=" + to_string(rho.parts()) + " delta=" + to_string(d) + ": mu=" + str(value) +
                       " oracle=" + str(oracle);
            });
        }
        return out;
    });
}

SuiteReport sweep_mu_symmetry(int max_weight, int max_len, Exec exec, const MuFn& mu_fn) {
    std::vector<Content> rhos;
    for (int n = 0; n <= max_weight; ++n)
        for (auto& rho : compositions_of(n))
            rhos.push_back(std::move(rho));
    return run_tasks("mu-symmetry", rhos.size(), exec, [&](std::size_t i) {
        const Content& rho = rhos[i];
        Outcome out;
        MuEvaluator mu(rho, MuMemo::raw);
        auto eval = [&](const std::vector<int>& d) { return mu_fn ? mu_fn(rho, IntSeq(d)) : mu(IntSeq(d)); };
        for (int w = 0; w <= rho.n(); ++w) {
            for (auto d : weak_compositions(w, max_len)) {
                // one representative per multiset; next_permutation visits the rest
                if (!std::is_sorted(d.begin(), d.end()))
                    continue;
                const Count base = eval(d);
                while (std::next_permutation(d.begin(), d.end())) {
                    const Count permuted = eval(d);
                    out.check(permuted == base, [&] {
                        return "rho=" + to_string(rho.parts()) + " delta=" + to_string(d) + ": " + str(permuted) +
                               " != " + str(base);
                    });
                }
            }
        }
        return out;
    });
}

SuiteReport sweep_standard_tableaux(int max_n, Exec exec, const Limits& limits) {
    std::vector<Partition> shapes;
    for (int n = 0; n <= max_n; ++n)
        for (auto& alpha : partitions_of(n))
            shapes.push_back(std::move(alpha));
    return run_tasks("standard-tableaux", shapes.size(), exec, [&](std::size_t i) {
        const Partition& alpha = shapes[i];
        const Content eps(std::vector<int>(alpha.n(), 1));
        Outcome out;
        const Count det = f_det(alpha, limits);
        const Count hook = f_hook(alpha);
        const Count oracle = count_ssyt(alpha, eps, limits);
        const Count formula = kostka_det(alpha, eps, limits);
        out.check(det == hook && hook == oracle && oracle == formula, [&] {
            return "alpha=" + to_string(alpha.parts()) + ": f_det=" + str(det) + " f_hook=" + str(hook) +
                   " ssyt=" + str(oracle) + " kostka=" + str(formula);
        });
        return out;
    });
}

Count gordon_sum(int p, int q, Exec exec, const Limits& limits) {
    const auto terms = gordon_terms(p, q, limits);
    std::vector<Count> values(terms.size());
    const auto count = static_cast<std::int64_t>(terms.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < count; ++i)
            values[i] = terms[i].multiplicity * kostka_rec(terms[i].alpha, terms[i].rho);
    } else {
        for (std::int64_t i = 0; i < count; ++i)
            values[i] = terms[i].multiplicity * kostka_rec(terms[i].alpha, terms[i].rho);
    }
    Count total = 1;
    for (const auto& v : values)
        total += v;
    return total;
}

SuiteReport sweep_gordon(int max_pq, Exec exec, const Limits& limits) {
    std::vector<std::pair<int, int>> grid;
    for (int p = 1; p <= max_pq; ++p)
        for (int q = 1; p * q <= max_pq; ++q)
            grid.emplace_back(p, q);
    return run_tasks("gordon", grid.size(), exec, [&](std::size_t i) {
        const auto [p, q] = grid[i];
        Outcome out;
        const Count product = gordon_product(p, q);
        const Count sum = gordon_sum(p, q, Exec::serial, limits);
        out.check(product == sum, [&] {
            return "p=" + std::to_string(p) + " q=" + std::to_string(q) + ": product=" + str(product) +
                   " sum=" + str(sum);
        });
        return out;
    });
}

} // namespace kostka
