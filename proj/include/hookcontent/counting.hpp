#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hookcontent/ballots.hpp"
#include "hookcontent/exact.hpp"
#include "hookcontent/shapes.hpp"

namespace hcf {

/// A ballot-counting instance: `steps` ballots cast, final tally `counts`.
struct CountInstance {
    int steps = 0;
    ColumnCounts counts;
};

/// 1 iff n_{i-1} + 1 >= n_i for every i >= 1. Ignores `steps`.
int dagger(const CountInstance& inst);

/// Closed form for multi-vote ballot counts:
///
///   prod_i (N+i)! / (N+i-n_i)!  *  V(m_0..m_d) / (m_0! ... m_d!),   m_i = n_i + d - i.
///
/// Negative factorials in the denominator contribute zero. The value is
/// returned as a rational; callers that expect an integer use to_integer().
Exact formula_F(const CountInstance& inst);

/// True iff F(N, n) = sum over j in {0,1}^{d+1} of F(N-1, n-j). Only
/// meaningful when N >= 1 and every n_i >= 1.
bool f_recursion_holds(const CountInstance& inst);

/// Memo for recursive_C, keyed on (steps, normalized counts).
class BallotMemo {
public:
    const BigInt* find(int steps, const ColumnCounts& key) const;
    const BigInt& store(int steps, ColumnCounts key, BigInt value);
    std::size_t size() const { return table_.size(); }
    void clear() { table_.clear(); }

private:
    std::map<std::pair<int, ColumnCounts>, BigInt> table_;
};

/// Multi-vote ballot count evaluated by the last-ballot recursion. Not
/// thread-safe with respect to a shared memo.
BigInt recursive_C(const CountInstance& inst, BallotMemo& memo);
BigInt recursive_C(const CountInstance& inst);

struct Theorem1Report {
    CountInstance instance;
    int dagger = 0;
    BigInt oracle;              // brute-force ballot count
    Exact formula;              // formula_F
    bool recursion_checked = false;
    bool recursion_holds = true;
    bool pass = false;
};

/// dagger = 0: the oracle count must be zero. dagger = 1: the oracle count
/// must equal F, and F must satisfy the one-step recursion whenever N >= 1
/// and all n_i >= 1. Throws BudgetExceeded from the oracle.
Theorem1Report theorem1_check(const CountInstance& inst, EnumerationBudget budget = {});

/// Semistandard tableaux count as prod (N + content) / prod hook, exact.
BigInt hcf_count(int letters, const Partition& p);

/// Standard tableaux count. Evaluates |p|!/hook_product(p) and
/// N! V(m)/prod m_i! over the column heights of p, and throws
/// InternalInconsistency if they differ.
BigInt hlf_count(const Partition& p);

/// N! V(m_0..m_d) / (m_0! ... m_d!).
Exact formula_Fstar(int steps, const ColumnCounts& n);

/// True iff F*(N, n) = sum_i F*(N-1, n with n_i - 1).
bool fstar_recursion_holds(int steps, const ColumnCounts& n);

} // namespace hcf
