#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace mealy {

/// Power series truncated after X^N, with exact integer coefficients.
class BigSeries {
public:
    /// The zero series of order N (coefficients c_0..c_N).
    explicit BigSeries(std::size_t order);
    explicit BigSeries(std::vector<mpz_class> coefficients);

    std::size_t order() const noexcept { return c_.size() - 1; }
    const mpz_class& operator[](std::size_t i) const { return c_.at(i); }
    mpz_class& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<mpz_class>& coefficients() const noexcept { return c_; }

    /// Orders must match.
    BigSeries operator+(const BigSeries& other) const;
    BigSeries operator-(const BigSeries& other) const;
    /// Cauchy product truncated to the common order.
    BigSeries operator*(const BigSeries& other) const;

    /// Multiplication by X^k.
    BigSeries shifted(std::size_t k) const;
    /// Multiplication by 1 - X^k.
    BigSeries times_one_minus_xk(std::size_t k) const;
    /// Division by 1 - X^k (stride-k prefix sums). k >= 1.
    BigSeries divided_by_one_minus_xk(std::size_t k) const;

    BigSeries prefix_sums() const { return divided_by_one_minus_xk(1); }

    friend bool operator==(const BigSeries& a, const BigSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<mpz_class> c_;
};

/// q(0..N): partitions into distinct odd parts, by 0/1 knapsack over odd parts.
BigSeries odd_distinct_partitions(std::size_t N);

/// The same coefficients from sum over m of X^(m^2) / ((1 - X^2) ... (1 - X^(2m))).
BigSeries psi_sum_form(std::size_t N);

/// delta(0..N), word growth of S(I2). Closed formula and series route must agree.
BigSeries word_growth_coeffs(std::size_t N);
/// delta(0..N) from an already computed q(0..N).
BigSeries word_growth_coeffs(const BigSeries& q);

/// Gamma(0..N), automaton growth of I2 (also the spherical growth of S(I2)).
/// Series, closed formula and parity sum must agree.
BigSeries automaton_growth_coeffs(std::size_t N);
BigSeries automaton_growth_coeffs(const BigSeries& q);

/// gamma_S(0..N), ball growth of S(I2). Series and closed formula must agree.
BigSeries ball_growth_coeffs(std::size_t N);
BigSeries ball_growth_coeffs(const BigSeries& q);

/// Partitions of n into distinct parts, each congruent mod M to some a_i.
mpz_class count_distinct_congruent(std::size_t n, std::span<const unsigned> a_list, unsigned M);

} // namespace mealy
