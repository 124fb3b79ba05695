#include "gkm21/nslattice.hpp"

#include <stdexcept>

namespace gkm21::ns {

namespace {

long long scalar_part(const Quat& q, const char* what) {
    if (!quat::is_scalar(q) || q.a2 % 2 != 0)
        throw std::logic_error(std::string("nslattice: non-scalar pairing value in ") + what);
    return q.a2 / 2;
}

}  // namespace

long long intersection(const NSClass& l1, const NSClass& l2) {
    Quat g1b2 = quat::mul(quat::conj(l1.beta), l2.beta);
    Quat g2b1 = quat::mul(quat::conj(l2.beta), l1.beta);
    long long cross = scalar_part(quat::add(g1b2, g2b1), "intersection");
    return l1.alpha * l2.delta + l2.alpha * l1.delta - cross;
}

long long self_intersection(const NSClass& l) {
    long long n = scalar_part(quat::mul(quat::conj(l.beta), l.beta), "self_intersection");
    return 2 * (l.alpha * l.delta - n);
}

NSClass delta_class(const Quat& a1, const Quat& a2) {
    if (!quat::is_hurwitz(a1) || !quat::is_hurwitz(a2))
        throw std::invalid_argument("nslattice: delta class needs Hurwitz arguments");
    NSClass c;
    c.alpha = scalar_part(quat::mul(quat::conj(a1), a1), "delta_class alpha");
    c.delta = scalar_part(quat::mul(quat::conj(a2), a2), "delta_class delta");
    c.beta = quat::mul(quat::conj(a1), a2);
    return c;
}

NSClass principal_polarization() { return NSClass{1, Quat{}, 1}; }
NSClass class_of_first_factor() { return NSClass{0, Quat{}, 1}; }
NSClass class_of_second_factor() { return NSClass{1, Quat{}, 0}; }

NSClass curve_class(const CurveName& name, const GeneratorSolution& sol) {
    const Quat sigma = sol.sigma;
    const Quat sigma2 = quat::mul(sigma, sigma);
    const Quat frob = sol.frob;
    const Quat versch = quat::neg(frob);
    // pi is the order-3 projection, pointwise equal to -(2*sigma+1)
    const Quat pi = quat::neg(sol.two_sigma_plus_one());
    if (!name.primed) {
        switch (name.letter) {
            case CurveLetter::E: return class_of_second_factor();
            case CurveLetter::F: return delta_class(sigma2, versch);
            case CurveLetter::V: return delta_class(sigma, frob);
            case CurveLetter::Pi: return delta_class(quat::neg(pi), frob);
        }
    } else {
        switch (name.letter) {
            case CurveLetter::E: return class_of_first_factor();
            case CurveLetter::F: return delta_class(versch, sigma);
            case CurveLetter::V: return delta_class(frob, sigma2);
            case CurveLetter::Pi: return delta_class(versch, quat::neg(pi));
        }
    }
    throw std::invalid_argument("nslattice: unknown curve name");
}

std::array<std::array<long long, 8>, 8> intersection_table(const GeneratorSolution& sol) {
    auto names = base_curve_names();
    std::array<NSClass, 8> cls;
    for (int i = 0; i < 8; ++i) cls[i] = curve_class(names[i], sol);
    std::array<std::array<long long, 8>, 8> t{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            t[i][j] = i == j ? self_intersection(cls[i]) : intersection(cls[i], cls[j]);
    return t;
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntMatrix& m) {
    BigMatrix b(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (long long v : m[i]) b[i].push_back(BigInt(v));
    return b;
}

// Smith normal form; returns the diagonal and tracks the right transform V
// (column operations), so A_in * V has the kernel in its trailing columns.
struct SmithResult {
    std::vector<BigInt> diag;  // nonzero invariant factors, divisibility chain
    BigMatrix right;           // unimodular
    int rank = 0;
};

SmithResult smith_form(BigMatrix a) {
    const size_t n = a.size();
    const size_t m = n ? a[0].size() : 0;
    SmithResult res;
    res.right.assign(m, std::vector<BigInt>(m, BigInt(0)));
    for (size_t i = 0; i < m; ++i) res.right[i][i] = BigInt(1);

    auto swap_rows = [&](size_t r1, size_t r2) { std::swap(a[r1], a[r2]); };
    auto swap_cols = [&](size_t c1, size_t c2) {
        for (size_t r = 0; r < n; ++r) std::swap(a[r][c1], a[r][c2]);
        for (size_t r = 0; r < m; ++r) std::swap(res.right[r][c1], res.right[r][c2]);
    };
    auto addmul_row = [&](size_t dst, size_t src, const BigInt& f) {
        for (size_t c = 0; c < m; ++c) a[dst][c] = a[dst][c] + f * a[src][c];
    };
    auto addmul_col = [&](size_t dst, size_t src, const BigInt& f) {
        for (size_t r = 0; r < n; ++r) a[r][dst] = a[r][dst] + f * a[r][src];
        for (size_t r = 0; r < m; ++r) res.right[r][dst] = res.right[r][dst] + f * res.right[r][src];
    };

    size_t t = 0;
    while (t < n && t < m) {
        // locate a nonzero entry of least magnitude in the trailing block
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < n; ++i)
            for (size_t j = t; j < m; ++j) {
                if (a[i][j].is_zero()) continue;
                if (!found || a[i][j].abs_less(a[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < n; ++i) {
                if (a[i][t].is_zero()) continue;
                BigInt q = a[i][t] / a[t][t];
                addmul_row(i, t, -q);
                if (!a[i][t].is_zero()) {
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < m; ++j) {
                if (a[t][j].is_zero()) continue;
                BigInt q = a[t][j] / a[t][t];
                addmul_col(j, t, -q);
                if (!a[t][j].is_zero()) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the whole trailing block
                for (size_t i = t + 1; i < n && clean; ++i)
                    for (size_t j = t + 1; j < m && clean; ++j) {
                        if ((a[i][j] % a[t][t]).is_zero()) continue;
                        addmul_row(t, i, BigInt(1));
                        clean = false;
                    }
            }
        }
        ++t;
    }
    res.rank = static_cast<int>(t);
    for (size_t i = 0; i < t; ++i) res.diag.push_back(a[i][i].abs());
    return res;
}

BigInt bareiss_det(BigMatrix m) {
    const size_t n = m.size();
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_with = k + 1;
            while (swap_with < n && m[swap_with][k].is_zero()) ++swap_with;
            if (swap_with == n) return BigInt(0);
            std::swap(m[k], m[swap_with]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

GramData gram_and_discriminant(const IntMatrix& incidence) {
    const size_t n = incidence.size();
    GramData out;
    out.matrix = incidence;
    for (size_t i = 0; i < n; ++i) {
        if (incidence[i].size() != n)
            throw std::invalid_argument("nslattice: incidence matrix must be square");
        out.matrix[i][i] = -2;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (out.matrix[i][j] != out.matrix[j][i])
                throw std::invalid_argument("nslattice: incidence matrix must be symmetric");

    BigMatrix g = to_big(out.matrix);
    SmithResult snf = smith_form(g);
    out.rank = snf.rank;
    out.radical_dim = static_cast<int>(n) - snf.rank;
    for (const BigInt& d : snf.diag) out.elementary_divisors.push_back(d.to_int64());

    // kernel columns of the right transform are a saturated radical basis
    for (size_t c = snf.rank; c < n; ++c)
        for (size_t r = 0; r < n; ++r) {
            BigInt acc(0);
            for (size_t s = 0; s < n; ++s) acc = acc + g[r][s] * snf.right[s][c];
            if (!acc.is_zero())
                throw std::logic_error("nslattice: radical basis is not in the kernel");
        }

    // Gram of the quotient lattice in the basis given by the leading
    // transform columns: (V^T G V) restricted to the first rank columns.
    BigMatrix gv(n, std::vector<BigInt>(snf.rank, BigInt(0)));
    for (size_t r = 0; r < n; ++r)
        for (int c = 0; c < snf.rank; ++c) {
            BigInt acc(0);
            for (size_t s = 0; s < n; ++s) acc = acc + g[r][s] * snf.right[s][c];
            gv[r][c] = acc;
        }
    BigMatrix q(snf.rank, std::vector<BigInt>(snf.rank, BigInt(0)));
    for (int r = 0; r < snf.rank; ++r)
        for (int c = 0; c < snf.rank; ++c) {
            BigInt acc(0);
            for (size_t s = 0; s < n; ++s) acc = acc + snf.right[s][r] * gv[s][c];
            q[r][c] = acc;
        }
    BigInt det = bareiss_det(q);
    out.discriminant = det.to_int64();

    BigInt product(1);
    for (const BigInt& d : snf.diag) product = product * d;
    if (product != det.abs())
        throw std::logic_error("nslattice: invariant factors disagree with the determinant");
    return out;
}

}  // namespace gkm21::ns
