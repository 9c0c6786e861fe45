#include "howe/linalg.hpp"

#include <utility>

namespace howe {

namespace {

using IntRow = std::vector<Integer>;

void make_primitive(IntRow& row) {
    Integer g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    }
    if (g > 1) {
        for (auto& e : row) {
            mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        }
    }
}

struct Echelon {
    std::vector<IntRow> rows;          // first `pivots.size()` rows are pivot rows
    std::vector<std::size_t> pivots;   // pivot column of each pivot row
};

Echelon reduce(const Matrix& m) {
    Echelon e;
    e.rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Integer den = m(r, c).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        IntRow row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row[c] = m(r, c).numerator() * (l / m(r, c).denominator());
        }
        make_primitive(row);
        e.rows.push_back(std::move(row));
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < e.rows.size(); ++col) {
        std::size_t pr = rank;
        while (pr < e.rows.size() && e.rows[pr][col] == 0) {
            ++pr;
        }
        if (pr == e.rows.size()) {
            continue;
        }
        std::swap(e.rows[rank], e.rows[pr]);
        const IntRow& piv = e.rows[rank];
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            if (r == rank || e.rows[r][col] == 0) {
                continue;
            }
            const Integer factor = e.rows[r][col];
            for (std::size_t c = 0; c < m.cols(); ++c) {
                e.rows[r][c] = piv[col] * e.rows[r][c] - factor * piv[c];
            }
            make_primitive(e.rows[r]);
        }
        e.pivots.push_back(col);
        ++rank;
    }
    return e;
}

}  // namespace

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    const Echelon e = reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Scalar> v(m.cols(), Scalar(0));
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            const auto pc = e.pivots[r];
            v[pc] = Scalar(-e.rows[r][f], e.rows[r][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix& m) { return reduce(m).pivots.size(); }

}  // namespace howe
