#include "mealy/series.hpp"

#include "mealy/errors.hpp"

#include <string>

namespace mealy {

namespace {

void require_same_order(const BigSeries& a, const BigSeries& b) {
    if (a.order() != b.order()) throw InputDomainError("series orders differ");
}

void require_equal(const BigSeries& a, const BigSeries& b, const char* what) {
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a[i] != b[i]) {
            throw ConsistencyError(std::string(what) + " routes disagree at coefficient " + std::to_string(i) + ": " +
                                   a[i].get_str() + " vs " + b[i].get_str());
        }
    }
}

// X / (1 - X) * Psi(X): coefficient n is q(0) + ... + q(n-1).
BigSeries shifted_prefix(const BigSeries& q) {
    return q.prefix_sums().shifted(1);
}

// (1 + X) (1 + X / (1 - X) Psi(X))
BigSeries delta_series(const BigSeries& q) {
    BigSeries inner = shifted_prefix(q);
    inner[0] += 1;
    return inner + inner.shifted(1);
}

} // namespace

BigSeries::BigSeries(std::size_t order) : c_(order + 1) {}

BigSeries::BigSeries(std::vector<mpz_class> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw InputDomainError("a series needs at least one coefficient");
}

BigSeries BigSeries::operator+(const BigSeries& other) const {
    require_same_order(*this, other);
    BigSeries r(order());
    for (std::size_t i = 0; i <= order(); ++i) r.c_[i] = c_[i] + other.c_[i];
    return r;
}

BigSeries BigSeries::operator-(const BigSeries& other) const {
    require_same_order(*this, other);
    BigSeries r(order());
    for (std::size_t i = 0; i <= order(); ++i) r.c_[i] = c_[i] - other.c_[i];
    return r;
}

BigSeries BigSeries::operator*(const BigSeries& other) const {
    require_same_order(*this, other);
    const std::size_t N = order();
    BigSeries r(N);
    for (std::size_t i = 0; i <= N; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= N; ++j) {
            mpz_addmul(r.c_[i + j].get_mpz_t(), c_[i].get_mpz_t(), other.c_[j].get_mpz_t());
        }
    }
    return r;
}

BigSeries BigSeries::shifted(std::size_t k) const {
    BigSeries r(order());
    for (std::size_t i = k; i <= order(); ++i) r.c_[i] = c_[i - k];
    return r;
}

BigSeries BigSeries::times_one_minus_xk(std::size_t k) const {
    if (k == 0) throw InputDomainError("1 - X^0 is zero");
    BigSeries r(*this);
    for (std::size_t i = k; i <= order(); ++i) r.c_[i] -= c_[i - k];
    return r;
}

BigSeries BigSeries::divided_by_one_minus_xk(std::size_t k) const {
    if (k == 0) throw InputDomainError("1 - X^0 is not invertible");
    BigSeries r(*this);
    for (std::size_t i = k; i <= order(); ++i) r.c_[i] += r.c_[i - k];
    return r;
}

BigSeries odd_distinct_partitions(std::size_t N) {
    std::vector<mpz_class> c(N + 1);
    c[0] = 1;
    for (std::size_t part = 1; part <= N; part += 2) {
        for (std::size_t n = N; n >= part; --n) {
            mpz_add(c[n].get_mpz_t(), c[n].get_mpz_t(), c[n - part].get_mpz_t());
        }
    }
    return BigSeries(std::move(c));
}

BigSeries psi_sum_form(std::size_t N) {
    BigSeries total(N);
    total[0] = 1;
    // term_m = term_{m-1} * X^(2m-1) / (1 - X^(2m)), term_0 = 1
    BigSeries term(N);
    term[0] = 1;
    for (std::size_t m = 1; m * m <= N; ++m) {
        term = term.shifted(2 * m - 1).divided_by_one_minus_xk(2 * m);
        total = total + term;
    }
    return total;
}

BigSeries word_growth_coeffs(const BigSeries& q) {
    const std::size_t N = q.order();
    BigSeries closed(N);
    mpz_class prefix = 0; // q(0) + ... + q(n-2)
    for (std::size_t n = 0; n <= N; ++n) {
        if (n == 0) {
            closed[n] = 1;
        } else if (n == 1) {
            closed[n] = 2;
        } else {
            prefix += q[n - 2];
            closed[n] = q[n - 1] + 2 * prefix;
        }
    }
    require_equal(closed, delta_series(q), "word growth");
    return closed;
}

BigSeries word_growth_coeffs(std::size_t N) {
    return word_growth_coeffs(odd_distinct_partitions(N));
}

BigSeries automaton_growth_coeffs(const BigSeries& q) {
    const std::size_t N = q.order();
    const BigSeries delta = word_growth_coeffs(q);
    const BigSeries series = delta.divided_by_one_minus_xk(2);

    // 1 + sum_{i<n} (n - i) q(i) = 1 + n Q(n-1) - R(n-1)
    BigSeries closed(N);
    mpz_class Q = 0;
    mpz_class R = 0;
    for (std::size_t n = 0; n <= N; ++n) {
        closed[n] = 1 + mpz_class(static_cast<unsigned long>(n)) * Q - R;
        Q += q[n];
        R += mpz_class(static_cast<unsigned long>(n)) * q[n];
    }

    BigSeries parity(N);
    for (std::size_t n = 0; n <= N; ++n) {
        mpz_class s = 0;
        for (std::size_t i = n % 2; i <= n; i += 2) mpz_add(s.get_mpz_t(), s.get_mpz_t(), delta[i].get_mpz_t());
        parity[n] = s;
    }

    require_equal(series, closed, "automaton growth");
    require_equal(series, parity, "automaton growth parity");
    return series;
}

BigSeries automaton_growth_coeffs(std::size_t N) {
    return automaton_growth_coeffs(odd_distinct_partitions(N));
}

BigSeries ball_growth_coeffs(const BigSeries& q) {
    const std::size_t N = q.order();
    const BigSeries series = word_growth_coeffs(q).prefix_sums();

    // 2 + sum_{i<n} (2n - 2i - 1) q(i) = 2 + (2n - 1) Q(n-1) - 2 R(n-1)
    BigSeries closed(N);
    mpz_class Q = 0;
    mpz_class R = 0;
    for (std::size_t n = 0; n <= N; ++n) {
        if (n == 0) {
            closed[n] = 1;
        } else {
            closed[n] = 2 + mpz_class(static_cast<unsigned long>(2 * n - 1)) * Q - 2 * R;
        }
        Q += q[n];
        R += mpz_class(static_cast<unsigned long>(n)) * q[n];
    }
    require_equal(series, closed, "ball growth");
    return series;
}

BigSeries ball_growth_coeffs(std::size_t N) {
    return ball_growth_coeffs(odd_distinct_partitions(N));
}

mpz_class count_distinct_congruent(std::size_t n, std::span<const unsigned> a_list, unsigned M) {
    if (M == 0) throw InputDomainError("modulus must be positive");
    std::vector<bool> residue(M, false);
    for (unsigned a : a_list) residue[a % M] = true;
    std::vector<mpz_class> c(n + 1);
    c[0] = 1;
    for (std::size_t part = 1; part <= n; ++part) {
        if (!residue[part % M]) continue;
        for (std::size_t i = n; i >= part; --i) c[i] += c[i - part];
    }
    return c[n];
}

} // namespace mealy
