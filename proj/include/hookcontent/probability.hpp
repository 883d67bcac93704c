#pragma once

#include <array>

#include "hookcontent/exact.hpp"
#include "hookcontent/shapes.hpp"

// Every function here takes the diagram mu and works with its column heights
// n = conjugate(mu) = (n_0, ..., n_d).

namespace hcf {

/// n_0! ... n_d! / prod of hook lengths of mu. The factorial/hook quotient,
/// the Vandermonde form and the pairwise product form are all evaluated;
/// InternalInconsistency is thrown if any two differ.
Exact P_mu(const Partition& mu);

/// prod_{i<j} (n_i - n_j + j - i) / (j - i), checked against the
/// semistandard count of mu' with d + 1 letters.
Exact W_mu(const Partition& mu);

/// prod_{i<j} (n_i + j - i) / (j - i), checked against
/// prod_i C(n_i + d - i, n_i).
Exact R_mu(const Partition& mu);

struct TFamily {
    BigInt ssyt;                  // T(N, mu)
    BigInt colstrict;             // T^C(N, mu) = prod C(N + i, n_i)
    BigInt rowweak_min;           // T^R_0(mu') = prod C(n_i + d - i, n_i)
    BigInt labelings;             // multinomial(|mu|; n_0, ..., n_d)
    BigInt syt;                   // T*(mu)
    BigInt ssyt_min_conjugate;    // T_0(mu') = T(d + 1, mu')
};

/// Requires N >= n_0 (the number of rows of mu); throws std::domain_error otherwise.
TFamily T_family(int letters, const Partition& mu);

struct ProbabilityReport {
    Partition shape;
    int letters = 0;
    /// T/T^C, T_0(mu')/T^R_0(mu'), T*/multinomial.
    std::array<Exact, 3> ratios;
    Exact p_value;
    bool consistent = false;
};

ProbabilityReport theorem2_check(int letters, const Partition& mu);

} // namespace hcf
