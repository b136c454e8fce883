#pragma once

// Kostka numbers K_{alpha,beta}: the signed-permutation formula
//
//     K = sum over sigma in S_k of sgn(sigma) * mu_beta(alpha - (k) + (sigma(k)))
//
// and the horizontal-strip recursion it satisfies, plus Gordon's product for
// the total number of tableaux with bounded columns and alphabet.

#include <cstddef>
#include <optional>
#include <string_view>

#include "kostka/core.hpp"
#include "kostka/mu.hpp"

namespace kostka {

enum class Method { det_formula, recursion, oracle };

std::string_view method_name(Method m);
/// Accepts "det", "rec", "oracle" and the full enum names.
std::optional<Method> parse_method(std::string_view name);

struct KostkaResult {
    Count value;
    Method method = Method::det_formula;
    Partition alpha;
    Content beta; // after gap removal
    std::size_t terms_evaluated = 0;
};

/// Signed-permutation formula. Terms whose shifted vector has a negative
/// entry are skipped. Throws WeightMismatch, or SizeLimit if k > perm_cap.
Count kostka_det(const Partition& alpha, const Content& beta, const Limits& limits = {},
                 std::size_t* terms = nullptr);

/// Same, reusing `mu`'s cache; mu.rho() is the content.
Count kostka_det(const Partition& alpha, MuEvaluator& mu, const Limits& limits = {}, std::size_t* terms = nullptr);

/// Strip recursion K_{alpha,beta} = sum over strips gamma of size beta_l of
/// K_{alpha-gamma,beta'}, memoized on (alpha, l). Throws WeightMismatch.
Count kostka_rec(const Partition& alpha, const Content& beta, std::size_t* nodes = nullptr);

/// Validates alpha, removes zero parts from beta, and returns 0 straight away
/// on a weight mismatch. Throws InvalidShape, NegativeEntry.
KostkaResult kostka(const IntSeq& alpha, const IntSeq& beta, Method method, const Limits& limits = {});

/// prod over 1 <= i <= j <= p of (q+i+j-1)/(i+j-1), in exact rational arithmetic.
Count gordon_product(int p, int q);

/// Shapes that fit in a p x q box, for the Gordon sum.
std::vector<Partition> partitions_in_box(int n, int max_rows, int max_part);

/// One (alpha, rho) pair of the Gordon sum. `multiplicity` counts the
/// length-p contents (zeros allowed) whose gap removal gives rho, i.e.
/// binomial(p, len(rho)); all of them share the Kostka number of rho.
struct GordonTerm {
    Partition alpha;
    Content rho;
    Count multiplicity;
};

/// Every term of the Gordon sum with n >= 1. Throws SizeLimit.
std::vector<GordonTerm> gordon_terms(int p, int q, const Limits& limits = {});

/// 1 + sum of K_{alpha,beta} over nonempty alpha with alpha_1 <= q and beta
/// ranging over all contents of length <= p (zeros allowed). Serial; see
/// sweep.hpp for the parallel kernel. Throws SizeLimit if p*q > gordon_max_pq.
Count gordon_sum(int p, int q, const Limits& limits = {});

} // namespace kostka
