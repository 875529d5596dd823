#include "grsum/svt.hpp"

#include <bit>
#include <climits>
#include <thread>
#include <vector>

#include <json.hpp>

#include "grsum/error.hpp"
#include "grsum/numtheory.hpp"
#include "grsum/qpoly.hpp"

namespace grsum {

namespace {

struct Histogram {
    std::vector<std::uint64_t> even;
    std::vector<std::uint64_t> odd;
};

// Words whose top `prefix_bits` bits equal `prefix`; Gray-code walk over the rest.
void count_prefix(std::int64_t n, std::int64_t k, int prefix_bits, std::uint64_t prefix, Histogram& h) {
    const int low_bits = static_cast<int>(n) - prefix_bits;
    std::int64_t ps = 0;
    int weight = 0;
    for (int b = 0; b < prefix_bits; ++b) {
        if ((prefix >> b) & 1U) {
            ps += low_bits + b + 1;
            ++weight;
        }
    }
    auto bump = [&](std::int64_t sum, int w) {
        auto& side = (w % 2 == 0) ? h.even : h.odd;
        ++side[static_cast<std::size_t>(mod_floor(sum, k))];
    };
    bump(ps, weight);
    std::uint64_t gray = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << low_bits); ++i) {
        const int bit = std::countr_zero(i);
        const std::uint64_t mask = std::uint64_t{1} << bit;
        if (gray & mask) {
            ps -= bit + 1;
            --weight;
        } else {
            ps += bit + 1;
            ++weight;
        }
        gray ^= mask;
        bump(ps, weight);
    }
}

void require_svt_args(std::int64_t s, std::int64_t delta, int r) {
    if (s < 1) {
        throw InvalidArgument("svt: s must be >= 1");
    }
    if (delta < -3 || delta > 3) {
        throw InvalidArgument("svt: delta must lie in [-3, 3]");
    }
    if (s + delta < 0) {
        throw InvalidArgument("svt: word length s + delta must be >= 0");
    }
    if (r != 0 && r != 1) {
        throw InvalidArgument("svt: parity must be 0 or 1");
    }
}

bool quadratic_applies(std::int64_t s) {
    return s % 4 == 0 || (s + 1) % 4 == 0;
}

Integer halve_exact(const Integer& twice, const char* what) {
    if (twice < 0 || mpz_odd_p(twice.get_mpz_t())) {
        throw ConsistencyError(std::string(what) + ": half-sum " + twice.get_str() +
                               " is not a non-negative even integer");
    }
    return twice / 2;
}

nlohmann::json integer_json(const Integer& v) {
    if (v.fits_slong_p()) {
        return static_cast<std::int64_t>(v.get_si());
    }
    return v.get_str();
}

} // namespace

SvtCounts enumerate_svt(const SvtParams& params, unsigned workers) {
    const std::int64_t n = params.n;
    const std::int64_t k = params.k;
    const std::int64_t t = params.t;
    const int r = params.r;
    if (k < 1) {
        throw InvalidArgument("enumerate_svt: modulus must be >= 1");
    }
    if (n < 0) {
        throw InvalidArgument("enumerate_svt: word length must be >= 0");
    }
    if (r != 0 && r != 1) {
        throw InvalidArgument("enumerate_svt: parity must be 0 or 1");
    }
    if (n > max_enumeration_length) {
        throw CapacityError("enumerate_svt: word length " + std::to_string(n) + " exceeds " +
                            std::to_string(max_enumeration_length));
    }
    const int prefix_bits = static_cast<int>(std::min<std::int64_t>(n, 6));
    const std::uint64_t prefixes = std::uint64_t{1} << prefix_bits;
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(prefixes)));

    std::vector<Histogram> parts(workers, Histogram{std::vector<std::uint64_t>(static_cast<std::size_t>(k)),
                                                    std::vector<std::uint64_t>(static_cast<std::size_t>(k))});
    auto run = [&](unsigned w) {
        for (std::uint64_t p = w; p < prefixes; p += workers) {
            count_prefix(n, k, prefix_bits, p, parts[w]);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
    }
    SvtCounts out;
    const auto slot = static_cast<std::size_t>(mod_floor(t, k));
    for (const auto& h : parts) {
        out.size0 += h.even[slot];
        out.size1 += h.odd[slot];
    }
    return out;
}

Integer eta(std::int64_t k, std::int64_t t, std::int64_t s) {
    if (k < 1 || s < 1) {
        throw InvalidArgument("eta: require k >= 1 and s >= 1");
    }
    const CyclicPoly p = cyclic_parity_product(static_cast<unsigned>(s - 1), static_cast<std::size_t>(k));
    return p.coeff(t).numerator();
}

Integer parity_difference(std::int64_t k, std::int64_t t, std::int64_t n) {
    if (k < 1 || n < 0) {
        throw InvalidArgument("parity_difference: require k >= 1 and n >= 0");
    }
    const CyclicPoly p = cyclic_qproduct(static_cast<unsigned>(n), static_cast<std::size_t>(k));
    return p.coeff(t).numerator();
}

VerificationReport eta_recurrences_check(std::int64_t k, std::int64_t s_max) {
    if (k < 1 || k % 2 == 0) {
        throw InvalidArgument("eta_recurrences_check: k must be odd, got " + std::to_string(k));
    }
    if (s_max < 1) {
        throw InvalidArgument("eta_recurrences_check: s_max must be >= 1");
    }
    VerificationReport rep;
    rep.identity_id = "svt.eta_recurrences";
    rep.parameter_range = "k=" + std::to_string(k) + ", 1<=s<=" + std::to_string(s_max);
    rep.tolerance = 0.0;

    std::vector<CyclicPoly> rows; // rows[s - 1] = eta(.; s)
    for (std::int64_t s = 1; s <= s_max + 1; ++s) {
        rows.push_back(cyclic_parity_product(static_cast<unsigned>(s - 1), static_cast<std::size_t>(k)));
    }
    for (std::int64_t s = 1; s <= s_max; ++s) {
        const auto& cur = rows[static_cast<std::size_t>(s - 1)];
        const auto& nxt = rows[static_cast<std::size_t>(s)];
        for (std::int64_t t = 0; t < k; ++t) {
            const Rational forward = cur.coeff(t) + cur.coeff(t - s);
            rep.record((nxt.coeff(t) - forward).to_double(), {{"s", s}, {"t", t}, {"direction", 0}});

            Rational backward;
            for (std::int64_t j = 0; j < k; ++j) {
                const Rational& v = nxt.coeff(t - j * s);
                backward += (j % 2 == 0) ? v : -v;
            }
            backward /= Rational(2);
            rep.record((cur.coeff(t) - backward).to_double(), {{"s", s}, {"t", t}, {"direction", 1}});
        }
    }
    return rep;
}

Integer svt_total_closed_form(std::int64_t s, std::int64_t t) {
    if (s < 1) {
        throw InvalidArgument("svt_total_closed_form: s must be >= 1");
    }
    const std::int64_t k = 2 * s + 1;
    Integer sum = 0;
    for (std::int64_t d : divisors(k)) {
        const std::int64_t ind = (d - 1) % 4 == 0 ? 1 : -1;
        const std::int64_t translate = (d - ind) * (3 * d + ind) / 16;
        const std::int64_t exponent = (k - d) / (2 * d);
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
        term *= static_cast<long>(ramanujan_c(d, translate - t));
        if (((d - ind) / 4) % 2 != 0) {
            term = -term;
        }
        sum += term;
    }
    if (mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(k)) == 0 || sum < 0) {
        throw ConsistencyError("svt_total_closed_form: " + sum.get_str() + " / " + std::to_string(k) +
                               " is not a non-negative integer");
    }
    return sum / static_cast<long>(k);
}

std::optional<Rational> svt_total_closed_form_printed(std::int64_t s, std::int64_t t) {
    if (s < 1) {
        throw InvalidArgument("svt_total_closed_form_printed: s must be >= 1");
    }
    const std::int64_t k = 2 * s + 1;
    Integer sum = 0;
    for (std::int64_t d : divisors(k)) {
        const std::int64_t ind = (d - 1) % 4 == 0 ? 1 : -1;
        const std::int64_t num = (d - ind) * (3 * d + 1);
        if (num % 16 != 0) {
            return std::nullopt;
        }
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), 2, static_cast<unsigned long>((k - d) / (2 * d)));
        term *= static_cast<long>(ramanujan_c(d, num / 16 - t));
        if (((d - ind) / 4) % 2 != 0) {
            term = -term;
        }
        sum += term;
    }
    return Rational(sum, Integer(static_cast<long>(k)));
}

namespace {

Rational quadratic_sum(std::int64_t s, std::int64_t t, int t_sign) {
    if (s < 1 || !quadratic_applies(s)) {
        throw InvalidArgument("sigma_quadratic: require 4 | s or 4 | s+1, got s=" + std::to_string(s));
    }
    const std::int64_t k = 2 * s + 1;
    const std::int64_t shift = s * (s + 1) / 4;
    long acc = 0;
    for (std::int64_t j = 0; j < k; ++j) {
        acc += static_cast<long>(ramanujan_c(k, mod_floor(j * j, k) + shift + t_sign * t));
    }
    return Rational(Integer(acc), Integer(static_cast<long>(k)));
}

} // namespace

Rational sigma_quadratic(std::int64_t s, std::int64_t t) {
    Rational value = quadratic_sum(s, t, -1);
    const std::int64_t k = 2 * s + 1;
    std::int64_t root = 1;
    while ((root + 1) * (root + 1) <= k) {
        ++root;
    }
    if (root * root == k) {
        const Rational square_branch(Integer(static_cast<long>(ramanujan_c(k, s * (s + 1) / 4 - t))),
                                     Integer(static_cast<long>(root)));
        if (square_branch != value) {
            throw ConsistencyError("sigma_quadratic: square-k branch " + square_branch.str() +
                                   " disagrees with the Gauss-sum branch " + value.str());
        }
    }
    return value;
}

Rational sigma_quadratic_plus_t(std::int64_t s, std::int64_t t) {
    return quadratic_sum(s, t, +1);
}

Integer svt_size(std::int64_t s, std::int64_t delta, std::int64_t t, int r) {
    require_svt_args(s, delta, r);
    const std::int64_t k = 2 * s + 1;
    const std::int64_t n = s + delta;
    const Integer total = eta(k, t, n + 1);
    const Integer diff = parity_difference(k, t, n);
    return halve_exact(r == 0 ? Integer(total + diff) : Integer(total - diff), "svt_size");
}

bool SvtSizeReport::methods_agree() const {
    return eta_sigma == size && (!brute_force || *brute_force == size) &&
           (!closed_form_total || *closed_form_total == size);
}

std::string SvtSizeReport::to_json() const {
    nlohmann::json methods = {
        {"eta_sigma", integer_json(eta_sigma)},
        {"brute_force", brute_force ? integer_json(*brute_force) : nlohmann::json(nullptr)},
        {"closed_form_total", closed_form_total ? integer_json(*closed_form_total) : nlohmann::json(nullptr)},
    };
    nlohmann::json j = {
        {"s", s}, {"delta", delta}, {"k", k}, {"t", t}, {"parity", parity},
        {"size", integer_json(size)}, {"methods", std::move(methods)},
    };
    return j.dump();
}

SvtSizeReport svt_size_crosschecked(std::int64_t s, std::int64_t delta, std::int64_t t, int r,
                                    std::int64_t brute_force_limit, unsigned workers) {
    require_svt_args(s, delta, r);
    SvtSizeReport rep;
    rep.s = s;
    rep.delta = delta;
    rep.k = 2 * s + 1;
    rep.t = mod_floor(t, rep.k);
    rep.parity = r;
    rep.eta_sigma = svt_size(s, delta, t, r);
    rep.size = rep.eta_sigma;

    const std::int64_t n = s + delta;
    if (n <= std::min(brute_force_limit, max_enumeration_length)) {
        const SvtCounts c = enumerate_svt({n, rep.k, t, r}, workers);
        rep.brute_force = Integer(static_cast<unsigned long>(r == 0 ? c.size0 : c.size1));
    }
    if (delta == 0) {
        const Integer total = svt_total_closed_form(s, t);
        Integer diff;
        if (quadratic_applies(s)) {
            const Rational q = sigma_quadratic(s, t);
            if (!q.is_integer()) {
                throw ConsistencyError("sigma_quadratic returned a non-integer " + q.str());
            }
            diff = q.numerator();
        } else {
            diff = parity_difference(rep.k, t, n);
        }
        rep.closed_form_total = halve_exact(r == 0 ? Integer(total + diff) : Integer(total - diff),
                                            "closed-form size");
    }
    return rep;
}

} // namespace grsum
