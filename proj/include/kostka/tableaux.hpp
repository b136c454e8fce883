#pragma once

// Semistandard Young tableaux by brute force, and the two classical formulas
// for the number f^alpha of standard tableaux.

#include <vector>

#include "kostka/core.hpp"

namespace kostka {

/// Rows of positive entries, top row first.
struct Tableau {
    std::vector<std::vector<int>> rows;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

/// Shape matches alpha, rows weakly increase, columns strictly increase, and
/// value i occurs exactly beta_i times.
bool is_valid_ssyt(const Tableau& t, const Partition& alpha, const Content& beta);

/// Every SSYT of shape alpha and content beta, in row-major lexicographic
/// order. Throws WeightMismatch, or SizeLimit past limits.ssyt_max_n.
std::vector<Tableau> enumerate_ssyt(const Partition& alpha, const Content& beta, const Limits& limits = {});

/// Same search as enumerate_ssyt without materializing tableaux. If `nodes`
/// is non-null it receives the number of search nodes visited.
Count count_ssyt(const Partition& alpha, const Content& beta, const Limits& limits = {},
                 std::size_t* nodes = nullptr);

/// h[i][j] = arm + leg + 1 for every cell of the diagram.
std::vector<std::vector<int>> hook_lengths(const Partition& alpha);

/// n! / product of hook lengths.
Count f_hook(const Partition& alpha);

/// Signed sum over S_k of multinomial(alpha - (k) + (sigma(k))), where terms
/// with a negative component vanish. Throws SizeLimit if k > perm_cap.
Count f_det(const Partition& alpha, const Limits& limits = {});

} // namespace kostka
