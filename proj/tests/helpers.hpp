#pragma once

#include "oracles.hpp"

#include <gz/census.hpp>

namespace gz::test {

inline Scalar q(long re, long im = 0) { return Scalar::exact_int(re, im); }

inline Mat exact_mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Scalar>> s;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (long v : r) row.push_back(q(v));
        s.push_back(std::move(row));
    }
    return Mat::from_rows(Mode::Exact, s);
}

// the regular semisimple example matrix with level spectra
// {1}, {2,-1}, {3,-2,-3}
inline Mat omega_example() {
    return exact_mat({{1, 2, 16}, {1, 0, 4}, {0, 1, -3}});
}

// nilpotent, every cutoff regular, not strongly regular
inline Mat nsreg_example(long x2, long x3, long y1) {
    return exact_mat({{0, 0, 0, 0}, {1, 0, 0, x2}, {0, 1, 0, x3}, {y1, 0, 0, 0}});
}

inline MonicPoly poly_int(const std::vector<long>& coeffs) {
    std::vector<Scalar> c;
    for (long v : coeffs) c.push_back(q(v));
    return MonicPoly(Mode::Exact, std::move(c));
}

inline Spectrum spectrum_int(const std::vector<std::pair<long, int>>& entries) {
    std::vector<SpectrumEntry> e;
    for (const auto& [root, mult] : entries) e.push_back({q(root), mult});
    return Spectrum::make(std::move(e));
}

// The zero fibre label (t, t^2, ..., t^n).
inline GZSpec zero_spec(int n, Mode m = Mode::Exact) {
    std::vector<MonicPoly> levels;
    for (int i = 1; i <= n; ++i) levels.push_back(MonicPoly::power_of_t(m, i));
    return GZSpec(std::move(levels));
}

// p1 = t, p2 = t(t-1), p3 = t(t-1)(t-2): j = (1, 2)
inline GZSpec staircase_spec() {
    std::vector<Spectrum> spectra{
        spectrum_int({{0, 1}}),
        spectrum_int({{0, 1}, {1, 1}}),
        spectrum_int({{0, 1}, {1, 1}, {2, 1}}),
    };
    return GZSpec::from_spectra(spectra);
}

inline NilChoice nil_choice(const std::string& labels) {
    NilChoice v;
    for (char c : labels) v.labels.push_back(c == 'U' ? UL::Upper : UL::Lower);
    return v;
}

inline ChoiceVector nilfibre_choice(int n, const std::string& labels) {
    ChoiceVector v;
    for (int i = 0; i < n - 1; ++i)
        v.levels.push_back({ChoiceEntry{q(0), labels[size_t(i)] == 'U' ? UL::Upper : UL::Lower}});
    return v;
}

} // namespace gz::test
