#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mealy {

/// C n^alpha exp(beta sqrt(n)), evaluated in log space.
struct AsymptoteSpec {
    long double prefactor = 1;
    long double alpha = 0;
    long double beta = 0;

    long double log_value(long double n) const;
    long double value(long double n) const;
};

/// Main term for partitions into s distinct parts classes a_1..a_s mod M,
/// with the constant 2^((s-3)/2 + sum(a)/M) 3^(-1/4) as commonly quoted.
/// Requires s == a_list.size() and gcd(a_1, ..., a_s, M) == 1.
AsymptoteSpec richmond_spec(std::span<const unsigned> a_list, unsigned M, unsigned s);
long double richmond_asymptote(std::span<const unsigned> a_list, unsigned M, unsigned s, long double n);

/// Same main term with the constant 2^((s-3)/2 - sum(a)/M) 3^(-1/4) (s/M)^(1/4),
/// which matches exact counts.
AsymptoteSpec richmond_spec_corrected(std::span<const unsigned> a_list, unsigned M, unsigned s);
long double richmond_asymptote_corrected(std::span<const unsigned> a_list, unsigned M, unsigned s,
                                         long double n);

/// exp(log(exact) - log_asymptote).
long double ratio_to(const mpz_class& exact, long double log_asymptote);

struct PartialSumRow {
    std::size_t n = 0;
    long double log_sum = 0;
    long double log_asymptote = 0;
    long double ratio = 0;
};

/// g(n) = sum_{i=1..n} i^alpha exp(beta sqrt(i)) against
/// (2 / beta) n^(alpha + 1/2) exp(beta sqrt(n)), at every sample point <= N.
/// Empty samples mean the powers of ten up to N together with N itself.
std::vector<PartialSumRow> partial_sum_check(long double alpha, long double beta, std::size_t N,
                                             std::vector<std::size_t> samples = {});

/// Logs of the six main terms for delta, Gamma and gamma_S at n: three in
/// terms of q(n), three in closed form (with the quoted q asymptote).
struct GrowthAsymptotes {
    std::size_t n = 0;
    long double log_delta_q = 0;
    long double log_aut_q = 0;
    long double log_ball_q = 0;
    long double log_delta_closed = 0;
    long double log_aut_closed = 0;
    long double log_ball_closed = 0;
};

GrowthAsymptotes growth_asymptotes(std::size_t n, const mpz_class& q_n);

struct TauberianRow {
    long double x = 0;
    /// (1 - x) log(sum_{n<=N} gamma_S(n) x^n); empty when refused.
    std::optional<long double> value;
    /// gamma_S(N) x^N over the partial sum.
    long double tail_ratio = 0;
    std::string diagnostic;
};

inline constexpr long double kTauberianTailBound = 1e-9L;

/// pi^2 / 24.
long double tauberian_alpha();

/// Each x must lie in (0, 1). A row is refused when its tail ratio is not
/// below kTauberianTailBound.
std::vector<TauberianRow> tauberian_probe(std::size_t N, std::span<const long double> xs);
/// Same, reusing gamma_S(0..N).
std::vector<TauberianRow> tauberian_probe(std::span<const mpz_class> ball, std::span<const long double> xs);

} // namespace mealy
