#pragma once

#include "modrep/number.hpp"

#include <span>
#include <vector>

namespace modrep::detail {

// Lattices here always contain the relation lattice diag(moduli), so every
// column can be reduced modulo its modulus and entries stay below it. The
// result is the unique row-style HNF, identical to the exact-arithmetic HNF
// of the generators stacked over diag(moduli).

/// n x n HNF (row-major) of the lattice spanned by `rows` and diag(moduli).
std::vector<Int> modularHnf(std::span<const Int> rows, std::span<const Int> moduli);

/// Adds one row into a lattice already held as an n x n echelon basis.
void insertRow(std::vector<Int>& basis, std::vector<Int> row, std::span<const Int> moduli);

void reduceAbovePivots(std::vector<Int>& basis, std::span<const Int> moduli);

/// True iff `row` lies in the lattice with HNF `basis`.
bool latticeContains(std::span<const Int> basis, std::vector<Int> row,
                     std::span<const Int> moduli);

}  // namespace modrep::detail
