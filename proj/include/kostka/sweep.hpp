#pragma once

// Exhaustive verification sweeps. Each sweep flattens its instances into a
// task list; Exec::parallel distributes tasks over OpenMP threads, and
// Exec::serial runs the same tasks in a plain loop as the reference. Every
// task owns its caches, so no state is shared between threads. Reports are
// assembled in task order and are identical for both policies.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "kostka/core.hpp"

namespace kostka {

enum class Exec { serial, parallel };

struct SuiteReport {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> first_failures; // at most a handful, in task order

    bool ok() const { return failures == 0; }
    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

/// Replacement for mu in the mu sweeps. Must be safe to call concurrently
/// under Exec::parallel. An empty function selects the library mu.
using MuFn = std::function<Count(const Content&, const IntSeq&)>;

/// kostka_det == kostka_rec == count_ssyt and kostka_det >= 0 for every
/// partition alpha and gap-free content beta of weight n <= max_n.
SuiteReport sweep_kostka_agreement(int max_n, Exec exec = Exec::parallel, const Limits& limits = {});

/// kostka_det is exactly 0 wherever tableau enumeration finds nothing.
SuiteReport sweep_cancellation(int max_n, Exec exec = Exec::parallel, const Limits& limits = {});

/// kostka_det(alpha, beta) == sum over strips gamma of size beta_l of
/// kostka_det(alpha - gamma, beta').
SuiteReport sweep_functional_equation(int max_n, Exec exec = Exec::parallel, const Limits& limits = {});

/// mu == mu_matrix_oracle for gap-free rho and nonnegative delta with
/// sum rho == sum delta <= max_weight and len(delta) <= max_len.
SuiteReport sweep_mu_oracle(int max_weight, int max_len, Exec exec = Exec::parallel, const MuFn& mu_fn = {},
                            const Limits& limits = {});

/// mu(rho, delta) is unchanged by permuting delta, for sum rho <= max_weight
/// and delta of length max_len with weight <= sum rho. The library route uses
/// a cache keyed on delta as given, so symmetry is not assumed.
SuiteReport sweep_mu_symmetry(int max_weight, int max_len, Exec exec = Exec::parallel, const MuFn& mu_fn = {});

/// f_det == f_hook == count_ssyt(alpha, 1^n) == kostka_det(alpha, 1^n) for n <= max_n.
SuiteReport sweep_standard_tableaux(int max_n, Exec exec = Exec::parallel, const Limits& limits = {});

/// gordon_product(p, q) == gordon_sum(p, q) for all p, q >= 1 with p*q <= max_pq.
SuiteReport sweep_gordon(int max_pq, Exec exec = Exec::parallel, const Limits& limits = {});

/// gordon_sum with its terms evaluated as independent tasks.
Count gordon_sum(int p, int q, Exec exec, const Limits& limits = {});

/// Number of OpenMP threads Exec::parallel would use.
int parallel_threads();

} // namespace kostka
