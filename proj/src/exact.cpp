#include "hookcontent/exact.hpp"

namespace hcf {

BigInt factorial(std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("factorial of a negative integer");
    BigInt result = 1;
    for (std::int64_t i = 2; i <= k; ++i)
        result *= static_cast<long>(i);
    return result;
}

Exact reciprocal_factorial(std::int64_t k)
{
    if (k < 0)
        return Exact(0);
    return make_exact(1, factorial(k));
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0)
        throw std::invalid_argument("binomial with negative n");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    // Running product stays integral: result = C(n-k+i, i) after step i.
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= static_cast<long>(n - k + i);
        result /= static_cast<long>(i);
    }
    return result;
}

BigInt multinomial(std::span<const std::int64_t> parts)
{
    std::int64_t total = 0;
    BigInt result = 1;
    for (std::int64_t part : parts) {
        if (part < 0)
            throw std::invalid_argument("multinomial with a negative part");
        total += part;
        result *= binomial(total, part);
    }
    return result;
}

BigInt vandermonde(std::span<const std::int64_t> values)
{
    BigInt result = 1;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            result *= static_cast<long>(values[i] - values[j]);
    return result;
}

Exact make_exact(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Exact q(num, den);
    q.canonicalize();
    return q;
}

bool is_integral(const Exact& value)
{
    return value.get_den() == 1;
}

BigInt to_integer(const Exact& value, const char* what)
{
    if (!is_integral(value))
        throw NonIntegralResult(std::string(what) + " is not an integer: " + to_string(value));
    return value.get_num();
}

std::string to_string(const BigInt& value)
{
    return value.get_str();
}

std::string to_string(const Exact& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

} // namespace hcf
