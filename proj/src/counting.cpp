#include "hookcontent/counting.hpp"

namespace hcf {

namespace {

// V(m) / prod m_i!, shared by F and F*.
Exact vandermonde_over_factorials(const ColumnCounts& n)
{
    const auto m = m_params(n);
    BigInt den = 1;
    for (auto mi : m)
        den *= factorial(mi);
    return make_exact(vandermonde(m), den);
}

ColumnCounts minus_mask(const ColumnCounts& n, unsigned long mask)
{
    std::vector<int> out(n.values().begin(), n.values().end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= static_cast<int>((mask >> i) & 1UL);
    return ColumnCounts(std::move(out));
}

} // namespace

int dagger(const CountInstance& inst)
{
    const auto& n = inst.counts;
    for (std::size_t i = 1; i < n.length(); ++i)
        if (n[i - 1] + 1 < n[i])
            return 0;
    return 1;
}

Exact formula_F(const CountInstance& inst)
{
    const auto& n = inst.counts;
    Exact left = 1;
    for (std::size_t i = 0; i < n.length(); ++i) {
        const std::int64_t top = inst.steps + static_cast<std::int64_t>(i);
        left *= factorial(top) * reciprocal_factorial(top - n[i]);
        if (left == 0)
            return left;
    }
    return left * vandermonde_over_factorials(n);
}

bool f_recursion_holds(const CountInstance& inst)
{
    const auto& n = inst.counts;
    const unsigned long choices = 1UL << n.length();
    Exact sum = 0;
    for (unsigned long mask = 0; mask < choices; ++mask)
        sum += formula_F({inst.steps - 1, minus_mask(n, mask)});
    return sum == formula_F(inst);
}

const BigInt* BallotMemo::find(int steps, const ColumnCounts& key) const
{
    auto it = table_.find({steps, key});
    return it == table_.end() ? nullptr : &it->second;
}

const BigInt& BallotMemo::store(int steps, ColumnCounts key, BigInt value)
{
    return table_.insert_or_assign({steps, std::move(key)}, std::move(value)).first->second;
}

BigInt recursive_C(const CountInstance& inst, BallotMemo& memo)
{
    if (inst.steps < 0 || !inst.counts.weakly_decreasing())
        return 0;
    ColumnCounts key = normalize(inst.counts);
    if (key.length() == 0)
        return 1;
    if (inst.steps == 0 || key[0] > inst.steps)
        return 0;
    if (const BigInt* hit = memo.find(inst.steps, key))
        return *hit;

    // Every entry is now >= 1, so each choice of final ballot j leaves a
    // nonnegative tally n - j.
    BigInt total = 0;
    const unsigned long choices = 1UL << key.length();
    for (unsigned long mask = 0; mask < choices; ++mask)
        total += recursive_C({inst.steps - 1, minus_mask(key, mask)}, memo);
    return memo.store(inst.steps, std::move(key), std::move(total));
}

BigInt recursive_C(const CountInstance& inst)
{
    BallotMemo memo;
    return recursive_C(inst, memo);
}

Theorem1Report theorem1_check(const CountInstance& inst, EnumerationBudget budget)
{
    Theorem1Report report;
    report.instance = inst;
    report.dagger = dagger(inst);
    report.oracle = count_multivote(inst.steps, inst.counts, budget);
    report.formula = formula_F(inst);

    if (report.dagger == 0) {
        report.pass = report.oracle == 0;
        return report;
    }

    bool all_positive = true;
    for (int v : inst.counts.values())
        all_positive = all_positive && v >= 1;
    if (inst.steps >= 1 && all_positive) {
        report.recursion_checked = true;
        report.recursion_holds = f_recursion_holds(inst);
    }
    report.pass = Exact(report.oracle) == report.formula && report.recursion_holds;
    return report;
}

BigInt hcf_count(int letters, const Partition& p)
{
    return to_integer(make_exact(content_product(letters, p), hook_product(p)), "hook-content quotient");
}

BigInt hlf_count(const Partition& p)
{
    const BigInt by_hooks = to_integer(make_exact(factorial(p.size()), hook_product(p)), "hook-length quotient");
    const BigInt by_vandermonde =
        to_integer(formula_Fstar(p.size(), ColumnCounts::of_columns(p)), "Vandermonde form of the hook-length count");
    if (by_hooks != by_vandermonde)
        throw InternalInconsistency("hook-length forms disagree for shape " + p.to_string());
    return by_hooks;
}

Exact formula_Fstar(int steps, const ColumnCounts& n)
{
    return Exact(factorial(steps)) * vandermonde_over_factorials(n);
}

bool fstar_recursion_holds(int steps, const ColumnCounts& n)
{
    Exact sum = 0;
    for (std::size_t i = 0; i < n.length(); ++i)
        sum += formula_Fstar(steps - 1, minus_mask(n, 1UL << i));
    return sum == formula_Fstar(steps, n);
}

} // namespace hcf
