#include "hookcontent/probability.hpp"

#include "hookcontent/counting.hpp"

namespace hcf {

namespace {

std::vector<std::int64_t> heights(const Partition& mu)
{
    const ColumnCounts counts = ColumnCounts::of_columns(mu);
    return {counts.values().begin(), counts.values().end()};
}

} // namespace

Exact P_mu(const Partition& mu)
{
    const auto n = heights(mu);
    const ColumnCounts counts = ColumnCounts::of_columns(mu);

    BigInt factorials = 1;
    for (auto ni : n)
        factorials *= factorial(ni);

    const Exact by_hooks = make_exact(factorials, hook_product(mu));

    const auto m = m_params(counts);
    BigInt m_factorials = 1;
    for (auto mi : m)
        m_factorials *= factorial(mi);
    const Exact by_vandermonde = make_exact(vandermonde(m) * factorials, m_factorials);

    Exact pairwise = 1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        for (std::size_t j = i + 1; j < n.size(); ++j) {
            const auto gap = static_cast<std::int64_t>(j - i);
            pairwise *= make_exact(static_cast<long>(n[i] - n[j] + gap), static_cast<long>(n[i] + gap));
        }
    }

    if (by_hooks != by_vandermonde || by_hooks != pairwise)
        throw InternalInconsistency("P forms disagree for shape " + mu.to_string() + ": " + to_string(by_hooks) +
                                    ", " + to_string(by_vandermonde) + ", " + to_string(pairwise));
    return by_hooks;
}

Exact W_mu(const Partition& mu)
{
    const auto n = heights(mu);
    Exact w = 1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        for (std::size_t j = i + 1; j < n.size(); ++j) {
            const auto gap = static_cast<std::int64_t>(j - i);
            w *= make_exact(static_cast<long>(n[i] - n[j] + gap), static_cast<long>(gap));
        }
    }
    const int letters = static_cast<int>(n.size());
    const BigInt count = hcf_count(letters, conjugate(mu));
    if (w != Exact(count))
        throw InternalInconsistency("W(" + mu.to_string() + ") = " + to_string(w) +
                                    " but the semistandard count of the conjugate is " + to_string(count));
    return w;
}

Exact R_mu(const Partition& mu)
{
    const auto n = heights(mu);
    const auto d = static_cast<std::int64_t>(n.size()) - 1;
    Exact r = 1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        for (std::size_t j = i + 1; j < n.size(); ++j) {
            const auto gap = static_cast<std::int64_t>(j - i);
            r *= make_exact(static_cast<long>(n[i] + gap), static_cast<long>(gap));
        }
    }
    BigInt binomials = 1;
    for (std::size_t i = 0; i < n.size(); ++i)
        binomials *= binomial(n[i] + d - static_cast<std::int64_t>(i), n[i]);
    if (r != Exact(binomials))
        throw InternalInconsistency("R(" + mu.to_string() + ") = " + to_string(r) + " but the binomial product is " +
                                    to_string(binomials));
    return r;
}

TFamily T_family(int letters, const Partition& mu)
{
    const auto n = heights(mu);
    const std::int64_t n0 = n.empty() ? 0 : n.front();
    if (letters < n0)
        throw std::domain_error("T family needs N >= n_0 = " + std::to_string(n0) + ", got N = " +
                                std::to_string(letters));
    const auto d = static_cast<std::int64_t>(n.size()) - 1;

    TFamily t;
    t.ssyt = hcf_count(letters, mu);
    t.colstrict = 1;
    t.rowweak_min = 1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const auto idx = static_cast<std::int64_t>(i);
        t.colstrict *= binomial(letters + idx, n[i]);
        t.rowweak_min *= binomial(n[i] + d - idx, n[i]);
    }
    t.labelings = multinomial(n);
    t.syt = hlf_count(mu);
    t.ssyt_min_conjugate = hcf_count(static_cast<int>(n.size()), conjugate(mu));
    return t;
}

ProbabilityReport theorem2_check(int letters, const Partition& mu)
{
    const TFamily t = T_family(letters, mu);
    ProbabilityReport report;
    report.shape = mu;
    report.letters = letters;
    report.ratios = {make_exact(t.ssyt, t.colstrict), make_exact(t.ssyt_min_conjugate, t.rowweak_min),
                     make_exact(t.syt, t.labelings)};
    report.p_value = P_mu(mu);
    report.consistent = true;
    for (const auto& r : report.ratios)
        report.consistent = report.consistent && r == report.p_value;
    return report;
}

} // namespace hcf
