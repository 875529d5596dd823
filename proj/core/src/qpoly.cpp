#include "grsum/qpoly.hpp"

#include <string>

#include <json.hpp>

#include "grsum/error.hpp"
#include "grsum/numtheory.hpp"

namespace grsum {

DensePoly::DensePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

DensePoly DensePoly::from_integers(std::span<const long long> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long long c : coeffs) {
        v.emplace_back(c);
    }
    return DensePoly(std::move(v));
}

void DensePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational DensePoly::coeff(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Rational(0);
}

Rational DensePoly::eval_at_one() const {
    Rational sum;
    for (const auto& c : coeffs_) {
        sum += c;
    }
    return sum;
}

void DensePoly::mul_binomial(std::size_t l, int sign) {
    if (coeffs_.empty()) {
        return;
    }
    if (l == 0) {
        for (auto& c : coeffs_) {
            c *= Rational(1 + sign);
        }
        trim();
        return;
    }
    const std::size_t old = coeffs_.size();
    coeffs_.resize(old + l);
    const Rational s(sign);
    for (std::size_t i = old + l; i-- > l;) {
        coeffs_[i] += s * coeffs_[i - l];
    }
    trim();
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return DensePoly(std::move(out));
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(i) + b.coeff(i);
    }
    return DensePoly(std::move(out));
}

CyclicPoly::CyclicPoly(std::size_t order) {
    if (order < 1) {
        throw InvalidArgument("cyclic polynomial order must be >= 1");
    }
    coeffs_.resize(order);
}

CyclicPoly::CyclicPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw InvalidArgument("cyclic polynomial order must be >= 1");
    }
}

const Rational& CyclicPoly::coeff(std::int64_t t) const {
    return coeffs_[static_cast<std::size_t>(mod_floor(t, static_cast<std::int64_t>(coeffs_.size())))];
}

void CyclicPoly::mul_binomial(std::int64_t l, int sign) {
    const auto k = static_cast<std::int64_t>(coeffs_.size());
    const std::int64_t shift = mod_floor(l, k);
    const Rational s(sign);
    if (shift == 0) {
        for (auto& c : coeffs_) {
            c *= Rational(1 + sign);
        }
        return;
    }
    std::vector<Rational> out = coeffs_;
    for (std::int64_t i = 0; i < k; ++i) {
        if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) {
            out[static_cast<std::size_t>((i + shift) % k)] += s * coeffs_[static_cast<std::size_t>(i)];
        }
    }
    coeffs_ = std::move(out);
}

CyclicPoly& CyclicPoly::operator/=(const Rational& d) {
    for (auto& c : coeffs_) {
        c /= d;
    }
    return *this;
}

CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b) {
    if (a.order() != b.order()) {
        throw InvalidArgument("cyclic product of polynomials with different orders");
    }
    const std::size_t k = a.order();
    CyclicPoly out(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                out.coeffs_[(i + j) % k] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return out;
}

DensePoly restricted_qproduct(unsigned m) {
    DensePoly p = DensePoly::one();
    for (unsigned l = 1; l <= m; ++l) {
        p.mul_binomial(l, -1);
    }
    return p;
}

DensePoly parity_product(unsigned m) {
    DensePoly p = DensePoly::one();
    for (unsigned l = 1; l <= m; ++l) {
        p.mul_binomial(l, +1);
    }
    return p;
}

CyclicPoly cyclic_reduce(const DensePoly& p, std::size_t k) {
    if (k < 1) {
        throw InvalidArgument("cyclic_reduce: k must be >= 1");
    }
    std::vector<Rational> folded(k);
    auto c = p.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        folded[n % k] += c[n];
    }
    return CyclicPoly(std::move(folded));
}

CyclicPoly cyclic_qproduct(unsigned m, std::size_t k) {
    if (k < 1) {
        throw InvalidArgument("cyclic product: k must be >= 1");
    }
    std::vector<Rational> c(k);
    c[0] = 1;
    CyclicPoly p(std::move(c));
    for (unsigned l = 1; l <= m; ++l) {
        p.mul_binomial(l, -1);
    }
    return p;
}

CyclicPoly cyclic_parity_product(unsigned m, std::size_t k) {
    if (k < 1) {
        throw InvalidArgument("cyclic product: k must be >= 1");
    }
    std::vector<Rational> c(k);
    c[0] = 1;
    CyclicPoly p(std::move(c));
    for (unsigned l = 1; l <= m; ++l) {
        p.mul_binomial(l, +1);
    }
    return p;
}

CyclicPoly remainder_poly(std::size_t k, std::size_t s, unsigned b) {
    if (k < 1 || s < 1 || s > k) {
        throw InvalidArgument("remainder_poly: require 1 <= s <= k, got k=" + std::to_string(k) +
                              " s=" + std::to_string(s));
    }
    CyclicPoly r = cyclic_reduce(restricted_qproduct(static_cast<unsigned>(s - 1)), k);
    if (b == 0) {
        return r;
    }
    const CyclicPoly full = cyclic_reduce(restricted_qproduct(static_cast<unsigned>(k - 1)), k);
    for (unsigned i = 0; i < b; ++i) {
        r = r * full;
        r /= Rational(static_cast<long>(k));
    }
    return r;
}

Rational coeff(const CyclicPoly& p, std::int64_t t) {
    return p.coeff(t);
}

std::string to_json(const CyclicPoly& p) {
    nlohmann::json j;
    j["k"] = p.order();
    auto& arr = j["coeffs"] = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        arr.push_back({{"num", c.numerator().get_str()}, {"den", c.denominator().get_str()}});
    }
    return j.dump();
}

CyclicPoly cyclic_poly_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("cyclic polynomial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("k") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw InvalidArgument("cyclic polynomial JSON: expected {\"k\", \"coeffs\"}");
    }
    const auto k = j["k"].get<std::int64_t>();
    const auto& arr = j["coeffs"];
    if (k < 1 || static_cast<std::size_t>(k) != arr.size()) {
        throw InvalidArgument("cyclic polynomial JSON: coefficient count must equal k");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& c : arr) {
        coeffs.emplace_back(parse_integer(c.at("num").get<std::string>()),
                            parse_integer(c.at("den").get<std::string>()));
    }
    return CyclicPoly(std::move(coeffs));
}

} // namespace grsum
