#include "grsum/trig.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "grsum/error.hpp"
#include "grsum/grs.hpp"
#include "grsum/numtheory.hpp"

namespace grsum {

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

// sin(m pi / k) for m = 0..2k-1.
std::vector<double> sine_table(std::int64_t k) {
    std::vector<double> out(static_cast<std::size_t>(2 * k));
    for (std::int64_t m = 0; m < 2 * k; ++m) {
        out[static_cast<std::size_t>(m)] = sin_pi_frac(m, k);
    }
    return out;
}

bool coprime(std::int64_t h, std::int64_t k) {
    return std::gcd(h, k) == 1;
}

} // namespace

std::complex<double> root_of_unity(std::int64_t n, std::int64_t k) {
    const std::int64_t m = mod_floor(n, k);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(k));
}

double sin_pi_frac(std::int64_t n, std::int64_t k) {
    const std::int64_t m = mod_floor(n, 2 * k);
    return std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(k));
}

double cos_pi_frac(std::int64_t n, std::int64_t k) {
    const std::int64_t m = mod_floor(n, 2 * k);
    return std::cos(std::numbers::pi * static_cast<double>(m) / static_cast<double>(k));
}

std::complex<double> frequency_sigma(const TrigSumSpec& spec) {
    const auto [k, s, t, filter] = spec;
    if (k < 1 || s < 1 || s > k) {
        throw InvalidArgument("frequency_sigma: require 1 <= s <= k");
    }
    std::complex<double> sum = 0.0;
    for (std::int64_t j = 0; j < k; ++j) {
        if (filter && !coprime(j, k)) {
            continue;
        }
        std::complex<double> term = root_of_unity(-j * t, k);
        for (std::int64_t l = 1; l < s; ++l) {
            term *= 1.0 - root_of_unity(j * l, k);
        }
        sum += term;
    }
    return sum / static_cast<double>(k);
}

double ramanujan_c_numeric(std::int64_t k, std::int64_t t) {
    double sum = 0.0;
    for (std::int64_t j = 0; j < k; ++j) {
        if (coprime(j, k)) {
            sum += cos_pi_frac(2 * j * mod_floor(t, k), k);
        }
    }
    return sum;
}

double sine_product_sum(std::int64_t k, std::int64_t s, bool coprime_filter) {
    if (k < 1 || s < 1) {
        throw InvalidArgument("sine_product_sum: require k >= 1 and s >= 1");
    }
    const auto sines = sine_table(k);
    double sum = 0.0;
    for (std::int64_t h = 1; h <= k; ++h) {
        if (coprime_filter && !coprime(h, k)) {
            continue;
        }
        double prod = 1.0;
        for (std::int64_t l = 1; l <= s && prod != 0.0; ++l) {
            prod *= sines[static_cast<std::size_t>(mod_floor(l * h, 2 * k))];
        }
        sum += prod;
    }
    return sum;
}

Rational round_to_denominator(double x, std::int64_t k) {
    const long long a = std::llround(x * static_cast<double>(k));
    return Rational(Integer(std::to_string(a)), Integer(static_cast<long>(k)));
}

VerificationReport verify_sin2_identities(std::int64_t k_max, double tol) {
    VerificationReport rep;
    rep.identity_id = "trig.sin2";
    rep.parameter_range = "direct 2<=k<=" + std::to_string(k_max) + ", coprime 1<=k<=" + std::to_string(k_max);
    rep.tolerance = tol;
    rep.notes.push_back("direct identity excluded at k=1: the sum is 0 while k/2 = 1/2");
    for (std::int64_t k = 1; k <= k_max; ++k) {
        double direct = 0.0;
        double filtered = 0.0;
        for (std::int64_t j = 0; j < k; ++j) {
            const double v = sin_pi_frac(j, k) * sin_pi_frac(j, k);
            direct += v;
            if (coprime(j, k)) {
                filtered += v;
            }
        }
        if (k >= 2) {
            rep.record(direct - static_cast<double>(k) / 2.0, {{"k", k}, {"part", 1}});
        }
        const double expected = static_cast<double>(ramanujan_c(k, k) - ramanujan_c(k, k - 1)) / 2.0;
        rep.record(filtered - expected, {{"k", k}, {"part", 2}});
    }
    return rep;
}

VerificationReport verify_sincos_identities(std::int64_t k_max, double tol) {
    if (k_max < 3) {
        throw InvalidArgument("verify_sincos_identities: k_max must be >= 3");
    }
    VerificationReport rep;
    rep.identity_id = "trig.sincos";
    rep.parameter_range = "3<=k<=" + std::to_string(k_max) + ", items 1-4";
    rep.tolerance = tol;
    for (std::int64_t k = 3; k <= k_max; ++k) {
        double ssc = 0.0;
        double ssc_coprime = 0.0;
        double sss = 0.0;
        double sss_coprime = 0.0;
        for (std::int64_t l = 0; l <= k; ++l) {
            const double base = sin_pi_frac(l, k) * sin_pi_frac(2 * l, k);
            const double c = base * cos_pi_frac(3 * l, k);
            const double s = base * sin_pi_frac(3 * l, k);
            if (l < k) {
                ssc += c;
                sss += s;
            }
            if (l >= 1 && coprime(l, k)) {
                ssc_coprime += c;
                sss_coprime += s;
            }
        }
        const double item1 = k >= 4 ? -static_cast<double>(k) / 4.0 : -1.5;
        const double item2 = static_cast<double>(ramanujan_c(k, k - 1) + ramanujan_c(k, k - 2) -
                                                 ramanujan_c(k, k) - ramanujan_c(k, k - 3)) /
                             4.0;
        rep.record(ssc - item1, {{"k", k}, {"item", 1}});
        rep.record(ssc_coprime - item2, {{"k", k}, {"item", 2}});
        rep.record(sss, {{"k", k}, {"item", 3}});
        rep.record(sss_coprime, {{"k", k}, {"item", 4}});
    }
    return rep;
}

VerificationReport verify_frequency_form(std::int64_t k_max, double tol) {
    VerificationReport rep;
    rep.identity_id = "trig.frequency_form";
    rep.parameter_range = "1<=s<=k<=" + std::to_string(k_max) + ", 0<=t<k, both filters";
    rep.tolerance = tol;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const auto direct = cached_table(k, SumKind::direct);
        const auto filtered = cached_table(k, SumKind::coprime);
        for (std::int64_t s = 1; s <= k; ++s) {
            for (std::int64_t t = 0; t < k; ++t) {
                for (bool filter : {false, true}) {
                    const auto z = frequency_sigma({k, s, t, filter});
                    const auto& exact = filter ? filtered->at(s, t) : direct->at(s, t);
                    const double dev = std::max(std::fabs(z.real() - exact.to_double()), std::fabs(z.imag()));
                    rep.record(dev, {{"k", k}, {"s", s}, {"t", t}, {"b", filter ? 1 : 0}});
                }
            }
        }
    }
    return rep;
}

VerificationReport verify_sine_product_theorem(std::int64_t k_max, double tol) {
    VerificationReport rep;
    rep.identity_id = "trig.sine_product";
    rep.parameter_range = "4|s, s<=k<=" + std::to_string(k_max);
    rep.tolerance = tol;
    for (std::int64_t s = 4; s <= k_max; s += 4) {
        const std::int64_t shift = s * (s + 1) / 4;
        const double scale = std::ldexp(1.0, static_cast<int>(-s));
        for (std::int64_t k = s; k <= k_max; ++k) {
            const double direct = sine_product_sum(k, s, false);
            const double filtered = sine_product_sum(k, s, true);
            const double kk = static_cast<double>(k);
            const double exact_direct = kk * scale * sigma_or_zero(k, SumKind::direct, shift, s + 1).to_double();
            const double exact_coprime = kk * scale * sigma_or_zero(k, SumKind::coprime, shift, s + 1).to_double();
            rep.record(direct - exact_direct, {{"k", k}, {"s", s}, {"part", 0}});
            rep.record(filtered - exact_coprime, {{"k", k}, {"s", s}, {"part", 1}});
            if (s * smallest_prime_factor(k) >= k) {
                rep.record(direct - filtered, {{"k", k}, {"s", s}, {"part", 2}});
            }
        }
    }
    return rep;
}

VerificationReport sine_product_printed_form(std::int64_t k_max, double tol) {
    VerificationReport rep;
    rep.identity_id = "trig.sine_product_printed";
    rep.parameter_range = "4|s, s<=k<=" + std::to_string(k_max) + ", 2^-s sigma_k(k - s(s+1)/4; s+1)";
    rep.tolerance = tol;
    rep.diagnostic = true;
    rep.notes.push_back("normalization without the factor k and with t = k - s(s+1)/4; "
                        "the matching form is (k/2^s) sigma_k(s(s+1)/4; s+1)");
    for (std::int64_t s = 4; s <= k_max; s += 4) {
        const std::int64_t shift = s * (s + 1) / 4;
        const double scale = std::ldexp(1.0, static_cast<int>(-s));
        for (std::int64_t k = s; k <= k_max; ++k) {
            const double direct = sine_product_sum(k, s, false);
            const double printed = scale * sigma_or_zero(k, SumKind::direct, k - shift, s + 1).to_double();
            rep.record(direct - printed, {{"k", k}, {"s", s}});
        }
    }
    return rep;
}

VerificationReport verify_sine_product_tail_exact(std::int64_t k_lo, std::int64_t k_hi) {
    VerificationReport rep;
    rep.identity_id = "trig.sine_product_tail";
    rep.parameter_range = std::to_string(k_lo) + "<=k<=" + std::to_string(k_hi) + ", sigma^(0)_k(k-5;5)";
    rep.tolerance = 0.0;
    std::int64_t coprime_nonzero = 0;
    for (std::int64_t k = std::max<std::int64_t>(k_lo, 5); k <= k_hi; ++k) {
        const Rational v = sigma(k, SumKind::direct, k - 5, 5);
        rep.record(v.is_zero() ? 0.0 : std::max(v.abs().to_double(), 1.0), {{"k", k}});
        if (!sigma(k, SumKind::coprime, k - 5, 5).is_zero()) {
            ++coprime_nonzero;
        }
    }
    // b = 1 only agrees with b = 0 when 5 > k/p, which fails for most k in range.
    rep.notes.push_back("sigma^(1)_k(k-5;5) nonzero for " + std::to_string(coprime_nonzero) + " k in range (not asserted)");
    return rep;
}

VerificationReport verify_gauss_identity(std::int64_t k, std::int64_t s, double tol) {
    if (s < 1 || (s % 4 != 0 && (s + 1) % 4 != 0)) {
        throw InvalidArgument("verify_gauss_identity: require 4 | s or 4 | s+1, got s=" + std::to_string(s));
    }
    if (k != 2 * s + 1) {
        throw InvalidArgument("verify_gauss_identity: require k = 2s + 1");
    }
    VerificationReport rep;
    rep.identity_id = "trig.gauss";
    rep.parameter_range = "k=" + std::to_string(k) + ", s=" + std::to_string(s) + ", all primitive roots";
    rep.tolerance = tol;
    const std::int64_t shift = s * (s + 1) / 4;
    for (std::int64_t h = 1; h < k; ++h) {
        if (!coprime(h, k)) {
            continue;
        }
        std::complex<double> lhs = root_of_unity(-h * shift, k);
        for (std::int64_t l = 1; l <= s; ++l) {
            lhs *= 1.0 - root_of_unity(h * l, k);
        }
        std::complex<double> gauss = 0.0;
        for (std::int64_t j = 0; j < k; ++j) {
            gauss += root_of_unity(h * mod_floor(j * j, k), k);
        }
        rep.record(std::abs(lhs - gauss), {{"k", k}, {"s", s}, {"h", h}});
    }
    return rep;
}

} // namespace grsum
