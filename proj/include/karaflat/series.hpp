#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "karaflat/poly.hpp"

namespace karaflat {

// A power series modulo x^N: exactly the first N coefficients, stored
// without trimming.  Arithmetic on prefixes never reads past index N-1.
class SeriesPrefix {
public:
    SeriesPrefix() = default;
    explicit SeriesPrefix(std::vector<Int> coeffs) : c_(std::move(coeffs)) {}
    SeriesPrefix(std::initializer_list<long long> coeffs) {
        c_.reserve(coeffs.size());
        for (long long v : coeffs) c_.emplace_back(v);
    }

    static SeriesPrefix from_polynomial(const Polynomial& p, std::size_t n);

    std::size_t order() const { return c_.size(); }
    const Int& coeff(std::size_t i) const { return c_.at(i); }
    const std::vector<Int>& coeffs() const { return c_; }

    SeriesPrefix truncated(std::size_t n) const;
    Polynomial to_polynomial() const { return Polynomial(c_); }

    friend bool operator==(const SeriesPrefix&, const SeriesPrefix&) = default;

private:
    std::vector<Int> c_;
};

// Called with each summand (already truncated) as it is accumulated; the
// index is m for the partially-flattened form and k for the flat form.
// Summand i never contributes below degree i.
using SeriesSummandObserver =
    std::function<void(std::size_t index, const Polynomial& summand)>;

// First N coefficients of f * g through the partially-flattened convolution:
// the cumulative sum of the termwise product minus one masked, stride-
// compressed sub-convolution per m >= 1, evaluated recursively.
SeriesPrefix convolve_series_partial(const SeriesPrefix& f, const SeriesPrefix& g,
                                     std::size_t n,
                                     const SeriesSummandObserver& observer = {});

// First N coefficients of a * b through the flat summation with the mask
// products taken as infinite (expanded only below the truncation order).
SeriesPrefix convolve_series_flat(const SeriesPrefix& a, const SeriesPrefix& b,
                                  std::size_t n,
                                  const SeriesSummandObserver& observer = {});

}  // namespace karaflat
