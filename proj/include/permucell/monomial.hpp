#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "permucell/rational.hpp"

namespace permucell {

/// Commutative monomial in variables x1..xdim, stored as the sorted multiset
/// of variable indices. Weight 0 is the constant 1.
class Monomial {
public:
    Monomial() : dim_(0) {}
    explicit Monomial(int dim) : dim_(dim) {}
    Monomial(int dim, std::vector<int> vars);

    int dim() const { return dim_; }
    int weight() const { return static_cast<int>(vars_.size()); }
    bool is_one() const { return vars_.empty(); }
    const std::vector<int>& vars() const { return vars_; }

    /// Exponent of variable v (1-based).
    int exponent(int v) const;

    std::string str() const;  // "x1^2*x3", or "1"

    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::tie(a.dim_, a.vars_) < std::tie(b.dim_, b.vars_);
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.dim_ == b.dim_ && a.vars_ == b.vars_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    int dim_;
    std::vector<int> vars_;  // sorted ascending, values in 1..dim
};

using MultiIndexTuple = std::vector<Monomial>;

/// Commutative product: multiset union. Throws on dimension mismatch.
Monomial merge(const Monomial& a, const Monomial& b);

struct CoproductTerm {
    Monomial left, right;
    BigInt multiplicity;
};

/// All ordered two-part splittings of the exponent multiset with their
/// multinomial multiplicities; includes the two trivial splits. Callers
/// filter to the reduced coproduct when working in the non-unital algebra.
std::vector<CoproductTerm> coproduct_splits(const Monomial& m);

/// Multinomial split multiplicity prod_v C(exp_v(m), exp_v(part)); zero if
/// `part` is not a sub-multiset of m.
BigInt split_multiplicity(const Monomial& m, const Monomial& part);

/// All monomials of the given weight, lexicographic order.
std::vector<Monomial> enumerate_monomials(int dim, int weight);

/// All monomials of weight in [0, max_weight].
std::vector<Monomial> enumerate_monomials_upto(int dim, int max_weight);

/// All tuples of `parts_count` monomials whose weights sum to total_weight,
/// each part nonempty unless allow_empty; deterministic lexicographic order.
std::vector<MultiIndexTuple> enumerate_tuples(int dim, int total_weight, int parts_count,
                                              bool allow_empty);

std::string tuple_str(const MultiIndexTuple& t);  // "[x1, x1^2]"

}  // namespace permucell
