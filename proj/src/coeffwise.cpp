#include "karaflat/coeffwise.hpp"

#include <stdexcept>

#include "karaflat/seqs.hpp"

namespace karaflat {

namespace {

void require_prefix(const SeriesPrefix& p, std::size_t m) {
    if (p.order() <= m) {
        throw std::invalid_argument("prefix too short for the requested coefficient");
    }
}

}  // namespace

int iverson_tau(std::size_t k, std::size_t m, std::size_t j) {
    return (k & (m - j)) == 0 ? 1 : 0;
}

int iverson_upsilon(std::size_t k, std::size_t j, std::size_t t) {
    return (k & (j - t)) == (j - t) ? 1 : 0;
}

Int coeff_product(const SeriesPrefix& g, const SeriesPrefix& h, std::size_t m,
                  CoeffTally* tally) {
    require_prefix(g, m);
    require_prefix(h, m);
    Int acc = 0;
    for (std::size_t k = 0; k <= m; ++k) {
        for (std::size_t j = k; j <= m; ++j) {
            if (iverson_tau(k, m, j) * iverson_tau(k, j, k) == 0) continue;
            if (tally) ++tally->outer_cells;
            Int sa = 0, sb = 0;
            for (std::size_t t = j - k; t <= j; ++t) {
                if (iverson_upsilon(k, j, t) == 0) continue;
                if (tally) ++tally->inner_cells;
                if (sigma(t) > 0) {
                    sa += g.coeff(t);
                    sb += h.coeff(t);
                } else {
                    sa -= g.coeff(t);
                    sb -= h.coeff(t);
                }
            }
            if (sigma(k) > 0) acc += sa * sb;
            else acc -= sa * sb;
        }
    }
    return acc;
}

Int coeff_product_sierpinski(const SeriesPrefix& g, const SeriesPrefix& h, std::size_t m,
                             CoeffTally* tally) {
    require_prefix(g, m);
    require_prefix(h, m);
    Int acc = 0;
    for (std::size_t k = 0; k <= m; ++k) {
        for (std::size_t j = k; j <= m; ++j) {
            if (sierpinski_T(k + m - j, k) * sierpinski_T(j, k) == 0) continue;
            if (tally) ++tally->outer_cells;
            Int sa = 0, sb = 0;
            for (std::size_t t = j - k; t <= j; ++t) {
                if (sierpinski_T(k, j - t) == 0) continue;
                if (tally) ++tally->inner_cells;
                if (sigma(t) > 0) {
                    sa += g.coeff(t);
                    sb += h.coeff(t);
                } else {
                    sa -= g.coeff(t);
                    sb -= h.coeff(t);
                }
            }
            if (sigma(k) > 0) acc += sa * sb;
            else acc -= sa * sb;
        }
    }
    return acc;
}

}  // namespace karaflat
