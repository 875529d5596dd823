#include "grsum/series.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "grsum/error.hpp"
#include "grsum/grs.hpp"
#include "grsum/numtheory.hpp"
#include "grsum/qpoly.hpp"

namespace grsum {

namespace {

void require_exponent(double r, const char* what) {
    if (!(r > 1.0)) {
        throw InvalidArgument(std::string(what) + ": exponent must be > 1");
    }
}

void require_terms(std::uint64_t terms) {
    if (terms < 1) {
        throw InvalidArgument("series: number of terms must be >= 1");
    }
}

void finish(TruncatedSeriesResult& res) {
    res.abs_error = res.target ? std::fabs(res.partial_sum - *res.target) : 0.0;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

double zeta(double r) {
    require_exponent(r, "zeta");
    constexpr int cutoff = 1000;
    double sum = 0.0;
    for (int n = cutoff - 1; n >= 1; --n) {
        sum += std::pow(static_cast<double>(n), -r);
    }
    const double m = cutoff;
    sum += std::pow(m, 1.0 - r) / (r - 1.0) + 0.5 * std::pow(m, -r) + r / 12.0 * std::pow(m, -r - 1.0) -
           r * (r + 1.0) * (r + 2.0) / 720.0 * std::pow(m, -r - 3.0);
    return sum;
}

double divisor_sigma_real(double x, std::int64_t n) {
    double sum = 0.0;
    for (std::int64_t d : divisors(n)) {
        sum += std::pow(static_cast<double>(d), x);
    }
    return sum;
}

TruncatedSeriesResult c_series(std::int64_t n, double r, std::uint64_t terms) {
    require_exponent(r, "c_series");
    require_terms(terms);
    if (n < 1) {
        throw InvalidArgument("c_series: n must be >= 1");
    }
    TruncatedSeriesResult res;
    for (std::uint64_t s = 1; s <= terms; ++s) {
        const auto ss = static_cast<std::int64_t>(s);
        res.partial_sum += static_cast<double>(ramanujan_c(ss, n)) * std::pow(static_cast<double>(s), -r);
    }
    res.terms_used = terms;
    res.target = divisor_sigma_real(r - 1.0, n) / (std::pow(static_cast<double>(n), r - 1.0) * zeta(r));
    finish(res);
    return res;
}

GDecomposition g_decomposition(std::int64_t n, double r, std::int64_t m, std::uint64_t terms) {
    require_exponent(r, "g_decomposition");
    require_terms(terms);
    if (n < 1 || m < 1) {
        throw InvalidArgument("g_decomposition: require n >= 1 and m >= 1");
    }
    GDecomposition out;
    out.parts.resize(static_cast<std::size_t>(m));
    for (std::uint64_t su = 1; su <= terms; ++su) {
        const auto s = static_cast<std::int64_t>(su);
        const std::vector<Integer> row = direct_row(m * s, s);
        const double weight = std::pow(static_cast<double>(s), -r);
        Integer exact_total = 0;
        for (std::int64_t j = 0; j < m; ++j) {
            const Integer& v = row[static_cast<std::size_t>(mod_floor(j * s + n, m * s))];
            exact_total += v;
            out.parts[static_cast<std::size_t>(j)].partial_sum += v.get_d() * weight;
        }
        if (exact_total != ramanujan_c(s, n)) {
            out.term_mismatches.push_back(s);
        }
        out.total.partial_sum += exact_total.get_d() * weight;
    }
    for (auto& p : out.parts) {
        p.terms_used = terms;
    }
    out.total.terms_used = terms;
    out.total.target = divisor_sigma_real(r - 1.0, n) / (std::pow(static_cast<double>(n), r - 1.0) * zeta(r));
    finish(out.total);
    return out;
}

FAlphaResult f_alpha_s(std::int64_t t, double alpha, std::int64_t s, std::uint64_t terms) {
    require_exponent(alpha, "f_alpha_s");
    require_terms(terms);
    if (s < 1) {
        throw InvalidArgument("f_alpha_s: s must be >= 1");
    }
    const DensePoly qp = restricted_qproduct(static_cast<unsigned>(s - 1));
    std::vector<long> a;
    for (const auto& c : qp.coeffs()) {
        a.push_back(c.numerator().get_si());
    }

    FAlphaResult out;
    TruncatedSeriesResult& res = out.result;
    double phi_sum = 0.0;
    for (std::uint64_t ku = 1; ku <= terms; ++ku) {
        const auto k = static_cast<std::int64_t>(ku);
        const double kk = static_cast<double>(k);
        phi_sum += static_cast<double>(euler_phi(k)) * std::pow(kk, -alpha - 1.0);
        if (k < s) {
            continue;
        }
        long acc = 0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[j] != 0) {
                acc += a[j] * static_cast<long>(ramanujan_c(k, t - static_cast<std::int64_t>(j)));
            }
        }
        res.partial_sum += static_cast<double>(acc) / kk * std::pow(kk, -alpha);
    }
    res.terms_used = terms;

    const double z = zeta(alpha + 1.0);
    double off_diagonal = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const auto gap = std::llabs(t - static_cast<std::int64_t>(j));
        if (a[j] == 0 || gap == 0) {
            continue;
        }
        off_diagonal += static_cast<double>(a[j]) * divisor_sigma_real(alpha, gap) /
                        std::pow(static_cast<double>(gap), alpha);
    }
    off_diagonal /= z;
    const double a_t = (t >= 0 && static_cast<std::size_t>(t) < a.size()) ? static_cast<double>(a[static_cast<std::size_t>(t)]) : 0.0;
    res.target = off_diagonal + a_t * phi_sum;
    finish(res);

    out.printed_form = off_diagonal + 6.0 / (std::numbers::pi * std::numbers::pi) * z;
    out.printed_abs_error = std::fabs(res.partial_sum - out.printed_form);
    return out;
}

std::string series_csv_header() {
    return "series,n,r_or_alpha,s,t,N,partial_sum,target,abs_error";
}

std::string series_csv_row(const std::string& label, std::int64_t n, double r_or_alpha,
                           std::optional<std::int64_t> s, std::optional<std::int64_t> t,
                           const TruncatedSeriesResult& result) {
    std::string row = label + "," + std::to_string(n) + "," + fmt_double(r_or_alpha) + ",";
    row += (s ? std::to_string(*s) : "") + ",";
    row += (t ? std::to_string(*t) : "") + ",";
    row += std::to_string(result.terms_used) + "," + fmt_double(result.partial_sum) + ",";
    row += (result.target ? fmt_double(*result.target) : "") + ",";
    row += fmt_double(result.abs_error);
    return row;
}

} // namespace grsum
