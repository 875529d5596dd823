#pragma once

#include <string_view>
#include <vector>

#include "grsum/qpoly.hpp"
#include "grsum/rational.hpp"

inline grsum::Rational R(std::string_view s) { return grsum::Rational::parse(s); }

inline std::vector<grsum::Rational> Rs(std::initializer_list<long> xs) {
    std::vector<grsum::Rational> out;
    for (long x : xs) {
        out.emplace_back(x);
    }
    return out;
}

inline std::vector<grsum::Rational> as_vector(const grsum::CyclicPoly& p) {
    return {p.coeffs().begin(), p.coeffs().end()};
}
