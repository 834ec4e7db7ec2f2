#pragma once

#include "permucell/chain.hpp"
#include "permucell/monomial.hpp"

namespace permucell {

/// Koszul complex for (dim, m): terms Sym^k tensor Wedge^{m-k}, k = 0..m-1,
/// graded by k. The differential moves one exterior factor into the
/// symmetric part with sign (-1)^{p+1} on the p-th exterior slot.
FinChainComplex build_koszul_complex(int dim, int m);

/// Weight-w piece of the bar construction of Sym(V): words of nonempty
/// monomials graded by negated word length; adjacent letters merge with
/// sign (-1)^{i+1} at position i.
FinChainComplex build_bar_complex(int dim, int weight);

/// Weight-w piece of the cobar construction of Wedge(V): words of nonempty
/// strictly increasing index lists graded by word length; each letter splits
/// into two nonempty increasing halves with the shuffle sign and position
/// sign (-1)^{i+1}.
FinChainComplex build_cobar_complex(int dim, int weight);

}  // namespace permucell
