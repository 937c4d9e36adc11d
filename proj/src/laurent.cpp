#include "binform/laurent.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace binform {

LaurentPoly LaurentPoly::monomial(const Rat& c, int e) {
    LaurentPoly p;
    if (!binform::is_zero(c)) p.coeffs_.emplace(e, c);
    return p;
}

int LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw std::logic_error("min_exp of zero");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw std::logic_error("max_exp of zero");
    return coeffs_.rbegin()->first;
}

Rat LaurentPoly::coefficient(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(int e, const Rat& c) {
    if (binform::is_zero(c)) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
    } else {
        it->second += c;
        if (binform::is_zero(it->second)) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, Rat(-c));
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly r;
    for (const auto& [ee, c] : coeffs_) r.coeffs_.emplace(ee + e, c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly r;
    if (binform::is_zero(c)) return r;
    for (const auto& [e, cc] : coeffs_) r.coeffs_.emplace(e, cc * c);
    return r;
}

LaurentPoly LaurentPoly::low_part(int cut) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_)
        if (e <= cut) r.coeffs_.emplace(e, c);
    return r;
}

LaurentPoly LaurentPoly::high_part(int cut) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_)
        if (e >= cut) r.coeffs_.emplace(e, c);
    return r;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat abs_c = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << rat_to_string(abs_c);
        } else {
            if (abs_c != 1) out << rat_to_string(abs_c) << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentMatrix LaurentMatrix::identity(int size) {
    LaurentMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = LaurentPoly::constant(Rat(1));
    return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("LaurentMatrix: size mismatch");
    LaurentMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly acc;
            for (int k = 0; k < n; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

LaurentMatrix LaurentMatrix::mirrored() const {
    LaurentMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [e, c] : at(i, j).coeffs()) r.at(i, j).add_term(-e, c);
    return r;
}

std::string LaurentMatrix::to_string(const std::string& var) const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < n; ++i) {
        if (i) out << "; ";
        for (int j = 0; j < n; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string(var);
        }
    }
    out << "]";
    return out.str();
}

namespace {

// Expansion over column subsets with memoization: O(2^n n) subproblems
// instead of the n! of naive cofactor recursion.
LaurentPoly det_memo(const LaurentMatrix& m, unsigned mask, int row,
                     std::vector<std::optional<LaurentPoly>>& cache) {
    if (mask == 0) return LaurentPoly::constant(Rat(1));
    auto& slot = cache[mask];
    if (slot) return *slot;
    LaurentPoly det;
    int sign = 0;
    for (int j = 0; j < m.n; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!m.at(row, j).is_zero()) {
            LaurentPoly sub = det_memo(m, mask & ~(1u << j), row + 1, cache);
            LaurentPoly term = m.at(row, j) * sub;
            det = (sign % 2 == 0) ? det + term : det - term;
        }
        ++sign;
    }
    slot = det;
    return det;
}

}  // namespace

LaurentPoly laurent_determinant(const LaurentMatrix& m) {
    if (m.n == 0) return LaurentPoly::constant(Rat(1));
    if (m.n > 24) throw std::invalid_argument("laurent_determinant: matrix too large");
    std::vector<std::optional<LaurentPoly>> cache(1u << m.n);
    return det_memo(m, (1u << m.n) - 1, 0, cache);
}

LaurentMatrix laurent_inverse(const LaurentMatrix& m) {
    LaurentPoly det = laurent_determinant(m);
    if (!det.is_monomial()) throw std::invalid_argument("laurent_inverse: determinant is not a unit");
    int de = det.min_exp();
    Rat dc = det.coefficient(de);
    LaurentMatrix inv(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            LaurentMatrix minor(m.n - 1);
            int rr = 0;
            for (int r = 0; r < m.n; ++r) {
                if (r == j) continue;
                int cc = 0;
                for (int c = 0; c < m.n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            LaurentPoly cof = laurent_determinant(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(i, j) = cof.scaled(Rat(1) / dc).shifted(-de);
        }
    return inv;
}

namespace {

// Row/column operation bookkeeping for the factorization. Left ops stay
// in GL(Q[l]) and accumulate into E; right ops stay in GL(Q[l^-1]) and
// accumulate into F as the inverse product, so E * Q == D * F at the end.
struct Reduction {
    LaurentMatrix m;  // working copy
    LaurentMatrix e;  // product of left ops
    LaurentMatrix f;  // inverse product of right ops
    int n;

    explicit Reduction(const LaurentMatrix& q) : m(q), e(LaurentMatrix::identity(q.n)), f(LaurentMatrix::identity(q.n)), n(q.n) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(m.a[static_cast<std::size_t>(i)], m.a[static_cast<std::size_t>(j)]);
        std::swap(e.a[static_cast<std::size_t>(i)], e.a[static_cast<std::size_t>(j)]);
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < n; ++r) std::swap(m.at(r, i), m.at(r, j));
        // right op O = swap; F <- O^-1 F = swap rows of F
        std::swap(f.a[static_cast<std::size_t>(i)], f.a[static_cast<std::size_t>(j)]);
    }

    void scale_row(int i, const Rat& c) {
        for (int j = 0; j < n; ++j) m.at(i, j) = m.at(i, j).scaled(c);
        for (int j = 0; j < n; ++j) e.at(i, j) = e.at(i, j).scaled(c);
    }

    // row_i -= mult * row_j; mult must lie in Q[l].
    void row_op(int i, int j, const LaurentPoly& mult) {
        if (mult.is_zero()) return;
        if (mult.min_exp() < 0) throw std::logic_error("birkhoff: illegal row multiplier");
        for (int c = 0; c < n; ++c) m.at(i, c) = m.at(i, c) - mult * m.at(j, c);
        for (int c = 0; c < n; ++c) e.at(i, c) = e.at(i, c) - mult * e.at(j, c);
    }

    // col_j -= mult * col_i; mult must lie in Q[l^-1].
    void col_op(int j, int i, const LaurentPoly& mult) {
        if (mult.is_zero()) return;
        if (mult.max_exp() > 0) throw std::logic_error("birkhoff: illegal column multiplier");
        for (int r = 0; r < n; ++r) m.at(r, j) = m.at(r, j) - mult * m.at(r, i);
        // right op O: col_j -= mult col_i; O^-1: col_j += mult col_i;
        // F <- O^-1 F acts on rows: row_i += mult * row_j.
        for (int c = 0; c < n; ++c) f.at(i, c) = f.at(i, c) + mult * f.at(j, c);
    }

    // Hermite-style triangularization over Q[l] by row ops; the working
    // matrix must be polynomial when this is called.
    void triangularize() {
        for (int col = 0; col < n; ++col) {
            while (true) {
                int best = -1;
                for (int i = col; i < n; ++i) {
                    if (m.at(i, col).is_zero()) continue;
                    if (best < 0 || m.at(i, col).max_exp() < m.at(best, col).max_exp()) best = i;
                }
                if (best < 0) throw std::logic_error("birkhoff: singular input");
                swap_rows(col, best);
                bool reduced_all = true;
                for (int i = col + 1; i < n; ++i) {
                    if (m.at(i, col).is_zero()) continue;
                    int dd = m.at(i, col).max_exp() - m.at(col, col).max_exp();
                    Rat c = m.at(i, col).coefficient(m.at(i, col).max_exp()) /
                            m.at(col, col).coefficient(m.at(col, col).max_exp());
                    row_op(i, col, LaurentPoly::monomial(c, dd));
                    reduced_all = false;
                }
                if (reduced_all) break;
            }
        }
    }
};

}  // namespace

BirkhoffFactorization birkhoff_factorize(const LaurentMatrix& q) {
    if (q.n == 0) throw std::invalid_argument("birkhoff_factorize: empty matrix");
    LaurentPoly det = laurent_determinant(q);
    if (!det.is_monomial())
        throw std::invalid_argument("birkhoff_factorize: determinant is not a unit in the Laurent ring");

    Reduction red(q);
    // Global powers of the variable factored out of the working matrix;
    // they commute with everything and end up in D.
    int shift = 0;
    const int max_rounds = 500;
    int round = 0;
    while (true) {
        if (++round > max_rounds) throw std::logic_error("birkhoff_factorize: no convergence");
        // Renormalize to a polynomial matrix so the degree-Euclid below
        // terminates (column ops may have pushed exponents negative).
        int lo = 0;
        for (int i = 0; i < red.n; ++i)
            for (int j = 0; j < red.n; ++j)
                if (!red.m.at(i, j).is_zero()) lo = std::min(lo, red.m.at(i, j).min_exp());
        if (lo < 0) {
            for (int i = 0; i < red.n; ++i)
                for (int j = 0; j < red.n; ++j) red.m.at(i, j) = red.m.at(i, j).shifted(-lo);
            shift += lo;
        }
        red.triangularize();
        // Diagonal entries multiply to a monomial, so each is one.
        for (int i = 0; i < red.n; ++i)
            if (!red.m.at(i, i).is_monomial())
                throw std::logic_error("birkhoff_factorize: non-monomial diagonal after triangularization");

        // Clear the upper triangle: terms at or below the row pivot
        // exponent go by column ops, terms at or above the column pivot
        // exponent go by row ops. Anything strictly between is stuck.
        bool progress = true;
        while (progress) {
            progress = false;
            for (int j = 1; j < red.n; ++j) {
                for (int i = j - 1; i >= 0; --i) {
                    const LaurentPoly& entry = red.m.at(i, j);
                    if (entry.is_zero()) continue;
                    int ki = red.m.at(i, i).min_exp();
                    Rat ci = red.m.at(i, i).coefficient(ki);
                    LaurentPoly low = entry.low_part(ki);
                    if (!low.is_zero()) {
                        red.col_op(j, i, low.scaled(Rat(1) / ci).shifted(-ki));
                        progress = true;
                    }
                }
            }
            for (int j = 1; j < red.n; ++j) {
                for (int i = j - 1; i >= 0; --i) {
                    const LaurentPoly& entry = red.m.at(i, j);
                    if (entry.is_zero()) continue;
                    int kj = red.m.at(j, j).min_exp();
                    Rat cj = red.m.at(j, j).coefficient(kj);
                    LaurentPoly high = entry.high_part(kj);
                    if (!high.is_zero()) {
                        red.row_op(i, j, high.scaled(Rat(1) / cj).shifted(-kj));
                        progress = true;
                    }
                }
            }
        }

        // Either done, or rotate one stuck entry and retriangularize.
        int si = -1, sj = -1;
        for (int i = 0; i < red.n && si < 0; ++i)
            for (int j = i + 1; j < red.n && si < 0; ++j)
                if (!red.m.at(i, j).is_zero()) {
                    si = i;
                    sj = j;
                }
        if (si < 0) break;
        red.swap_cols(si, sj);
    }

    BirkhoffFactorization out;
    out.F = red.f;
    out.D = LaurentMatrix(red.n);
    for (int i = 0; i < red.n; ++i) {
        int k = red.m.at(i, i).min_exp();
        Rat c = red.m.at(i, i).coefficient(k);
        // Fold the rational unit into E (scale its row).
        for (int j = 0; j < red.n; ++j) red.e.at(i, j) = red.e.at(i, j).scaled(Rat(1) / c);
        out.D.at(i, i) = LaurentPoly::monomial(Rat(1), k + shift);
        out.exponents.push_back(k + shift);
    }
    out.E = red.e;

    // E Q = D F exactly, E polynomial with unit determinant, F
    // anti-polynomial with unit determinant.
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            if (!out.E.at(i, j).is_zero() && out.E.at(i, j).min_exp() < 0)
                throw std::logic_error("birkhoff_factorize: E not polynomial");
            if (!out.F.at(i, j).is_zero() && out.F.at(i, j).max_exp() > 0)
                throw std::logic_error("birkhoff_factorize: F not anti-polynomial");
        }
    LaurentPoly de = laurent_determinant(out.E);
    LaurentPoly df = laurent_determinant(out.F);
    if (!de.is_monomial() || de.min_exp() != 0 || !df.is_monomial() || df.max_exp() != 0)
        throw std::logic_error("birkhoff_factorize: E or F not invertible over its ring");
    if (!(out.E * q == out.D * out.F)) throw std::logic_error("birkhoff_factorize: reassembly failed");
    return out;
}

}  // namespace binform
