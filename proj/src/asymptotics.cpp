#include "mealy/asymptotics.hpp"

#include "mealy/errors.hpp"
#include "mealy/monoid.hpp"
#include "mealy/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mealy {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

struct RichmondParams {
    long double s;
    long double M;
    long double a_over_M;
};

RichmondParams check_richmond(std::span<const unsigned> a_list, unsigned M, unsigned s) {
    if (M == 0) throw InputDomainError("modulus must be positive");
    if (s == 0 || s != a_list.size()) throw InputDomainError("s must equal the number of residues");
    unsigned g = M;
    unsigned long sum = 0;
    for (unsigned a : a_list) {
        g = std::gcd(g, a);
        sum += a;
    }
    if (g != 1) throw InputDomainError("gcd of the residues and the modulus must be 1");
    return {static_cast<long double>(s), static_cast<long double>(M),
            static_cast<long double>(sum) / static_cast<long double>(M)};
}

long double log_add(long double a, long double b) {
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

} // namespace

long double AsymptoteSpec::log_value(long double n) const {
    if (n <= 0) throw InputDomainError("asymptote needs n > 0");
    return std::log(prefactor) + alpha * std::log(n) + beta * std::sqrt(n);
}

long double AsymptoteSpec::value(long double n) const {
    return std::exp(log_value(n));
}

AsymptoteSpec richmond_spec(std::span<const unsigned> a_list, unsigned M, unsigned s) {
    const auto r = check_richmond(a_list, M, s);
    const long double c = std::pow(2.0L, (r.s - 3) / 2 + r.a_over_M) * std::pow(3.0L, -0.25L);
    return {c, -0.75L, kPi * std::sqrt(r.s / (3 * r.M))};
}

long double richmond_asymptote(std::span<const unsigned> a_list, unsigned M, unsigned s, long double n) {
    return richmond_spec(a_list, M, s).value(n);
}

AsymptoteSpec richmond_spec_corrected(std::span<const unsigned> a_list, unsigned M, unsigned s) {
    const auto r = check_richmond(a_list, M, s);
    const long double c =
        std::pow(2.0L, (r.s - 3) / 2 - r.a_over_M) * std::pow(3.0L, -0.25L) * std::pow(r.s / r.M, 0.25L);
    return {c, -0.75L, kPi * std::sqrt(r.s / (3 * r.M))};
}

long double richmond_asymptote_corrected(std::span<const unsigned> a_list, unsigned M, unsigned s,
                                         long double n) {
    return richmond_spec_corrected(a_list, M, s).value(n);
}

long double ratio_to(const mpz_class& exact, long double log_asymptote) {
    return std::exp(log_big(exact) - log_asymptote);
}

std::vector<PartialSumRow> partial_sum_check(long double alpha, long double beta, std::size_t N,
                                             std::vector<std::size_t> samples) {
    if (!(beta > 0)) throw InputDomainError("beta must be positive");
    if (N == 0) throw InputDomainError("N must be positive");
    if (samples.empty()) {
        for (std::size_t p = 10; p <= N; p *= 10) samples.push_back(p);
        samples.push_back(N);
    }
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    if (samples.front() == 0 || samples.back() > N) throw InputDomainError("sample points must lie in 1..N");

    const AsymptoteSpec f{1, alpha, beta};
    const AsymptoteSpec g{2 / beta, alpha + 0.5L, beta};
    std::vector<PartialSumRow> rows;
    long double log_sum = f.log_value(1);
    std::size_t next = 0;
    for (std::size_t n = 1; n <= N && next < samples.size(); ++n) {
        if (n > 1) log_sum = log_add(log_sum, f.log_value(static_cast<long double>(n)));
        if (n == samples[next]) {
            const long double la = g.log_value(static_cast<long double>(n));
            rows.push_back({n, log_sum, la, std::exp(log_sum - la)});
            ++next;
        }
    }
    return rows;
}

GrowthAsymptotes growth_asymptotes(std::size_t n, const mpz_class& q_n) {
    if (n == 0) throw InputDomainError("growth asymptotes need n >= 1");
    if (sgn(q_n) <= 0) throw InputDomainError("q(n) must be positive");
    const long double x = static_cast<long double>(n);
    const long double lq = log_big(q_n);
    const long double ln = std::log(x);
    const long double lpi = std::log(kPi);

    GrowthAsymptotes g;
    g.n = n;
    g.log_delta_q = std::log(4 * std::sqrt(6.0L)) - lpi + 0.5L * ln + lq;
    g.log_aut_q = std::log(24.0L) - 2 * lpi + ln + lq;
    g.log_ball_q = std::log(48.0L) - 2 * lpi + ln + lq;

    const long double e = kPi * std::sqrt(x / 6);
    const long double l2 = std::log(2.0L);
    const long double l3 = std::log(3.0L);
    g.log_delta_closed = 2 * l2 + 0.25L * l3 - lpi - 0.25L * ln + e;
    g.log_aut_closed = 2.5L * l2 + 0.75L * l3 - 2 * lpi + 0.25L * ln + e;
    g.log_ball_closed = 3.5L * l2 + 0.75L * l3 - 2 * lpi + 0.25L * ln + e;
    return g;
}

long double tauberian_alpha() {
    return kPi * kPi / 24;
}

std::vector<TauberianRow> tauberian_probe(std::span<const mpz_class> ball, std::span<const long double> xs) {
    if (ball.empty()) throw InputDomainError("tauberian probe needs coefficients");
    std::vector<long double> logs(ball.size());
    for (std::size_t n = 0; n < ball.size(); ++n) logs[n] = log_big(ball[n]);
    const std::size_t N = ball.size() - 1;

    std::vector<TauberianRow> rows;
    for (long double x : xs) {
        if (!(x > 0 && x < 1)) throw InputDomainError("tauberian probe needs 0 < x < 1");
        const long double lx = std::log(x);
        long double log_sum = logs[0];
        for (std::size_t n = 1; n <= N; ++n) log_sum = log_add(log_sum, logs[n] + static_cast<long double>(n) * lx);
        TauberianRow row;
        row.x = x;
        row.tail_ratio = std::exp(logs[N] + static_cast<long double>(N) * lx - log_sum);
        if (row.tail_ratio < kTauberianTailBound) {
            row.value = (1 - x) * log_sum;
        } else {
            row.diagnostic = "tail ratio " + std::to_string(static_cast<double>(row.tail_ratio)) +
                             " at N=" + std::to_string(N) + " is not below 1e-9; increase N";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TauberianRow> tauberian_probe(std::size_t N, std::span<const long double> xs) {
    const BigSeries ball = ball_growth_coeffs(N);
    return tauberian_probe(ball.coefficients(), xs);
}

} // namespace mealy
