#ifndef QGAP_QSERIES_HPP
#define QGAP_QSERIES_HPP

#include <gmpxx.h>

#include <ostream>
#include <vector>

namespace qgap {

using Int = mpz_class;

/* A monomial c*q^s. Used as the `a` argument of the q-Pochhammer
 * constructors, e.g. a = -2q is {-2, 1}. */
struct Monomial {
    Int coeff;
    int degree = 0;

    Monomial(Int c, int d) : coeff(std::move(c)), degree(d) {}
    Monomial(long c, int d) : coeff(c), degree(d) {}
};

/* Truncated formal power series in q with exact integer coefficients.
 * A series of order N holds the coefficients of q^0..q^N; every
 * operation is exact modulo q^{N+1}. Binary operations require both
 * operands to have the same truncation order. */
class QSeries {
public:
    explicit QSeries(int trunc_order);

    static QSeries one(int trunc_order);
    static QSeries monomial(const Monomial& m, int trunc_order);
    static QSeries from_coeffs(std::vector<Int> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Int& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const;

    /* Copy truncated to a (weakly) lower order. */
    QSeries truncated(int new_order) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o);
    QSeries& operator*=(const Int& scalar);
    QSeries operator-() const;

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
    friend QSeries operator*(QSeries a, const Int& s) { return a *= s; }
    friend QSeries operator*(const Int& s, QSeries a) { return a *= s; }

    bool operator==(const QSeries& o) const { return c_ == o.c_; }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    /* Multiplicative inverse modulo q^{N+1}; the constant term must be
     * +1 or -1 (integer coefficients admit no other units). */
    QSeries inverse() const;

    /* In-place multiplication by the sparse factor (1 + c*q^d), d >= 0.
     * d = 0 degenerates to scaling by (1 + c). O(N) instead of the
     * O(N^2) general product; this is what the Pochhammer constructors
     * and the identity checks are built from. */
    QSeries& mul_one_plus_cq(const Int& c, int d);

    /* In-place multiplication by 1/(1 - q^d) = 1 + q^d + q^{2d} + ...,
     * d >= 1. A d larger than the order is a no-op (the factor is
     * 1 + O(q^{N+1})). */
    QSeries& div_one_minus_q(int d);

    /* In-place multiplication by q^d, d >= 0 (shifts coefficients up,
     * dropping whatever falls past the truncation order). */
    QSeries& shift_q(int d);

    friend std::ostream& operator<<(std::ostream& os, const QSeries& s);

private:
    std::vector<Int> c_;  // c_[i] is the coefficient of q^i
};

/* (a;q)_n with an optional base step: prod_{i=0}^{n-1} (1 - a*q^{step*i}),
 * truncated at q^trunc_order. step = 2 with a = q gives (q;q^2)_n. */
QSeries pochhammer_fin(const Monomial& a, int n, int trunc_order, int step = 1);

/* (a;q)_inf with an optional base step: prod_{i>=0} (1 - a*q^{step*i}),
 * truncated at q^trunc_order. Factors of degree beyond the order are 1
 * modulo the truncation and are skipped. With a of degree 0 the first
 * factor is the constant (1 - c); the series formulas here only use
 * degree >= 1 arguments. */
QSeries pochhammer_inf(const Monomial& a, int trunc_order, int step = 1);

/* q^k + q^{2k} + q^{3k} + ... = q^k/(1-q^k) truncated; requires k >= 1.
 * k beyond the truncation order yields the zero series. */
QSeries geometric_tail(int k, int trunc_order);

/* sum_{n=-inf}^{inf} (-1)^n q^{n^2} = 1 + 2*sum_{n>=1} (-1)^n q^{n^2},
 * the z = -1 specialization of the Jacobi triple product. */
QSeries theta_alternating_squares(int trunc_order);

/* Polynomial in a marker variable w whose coefficients are QSeries,
 * all with one shared truncation order. Row m is the coefficient of
 * w^m. Products cap the w-degree at the truncation order: a partition
 * of n has at most n-1 missing integers, so no tracked coefficient of
 * q^{<=N} ever needs a higher w power. */
class WQPoly {
public:
    WQPoly(int trunc_order, int w_degree);

    static WQPoly one(int trunc_order);

    int order() const { return rows_[0].order(); }
    int w_degree() const { return static_cast<int>(rows_.size()) - 1; }

    const QSeries& row(int m) const { return rows_[static_cast<size_t>(m)]; }
    QSeries& row(int m) { return rows_[static_cast<size_t>(m)]; }

    /* Coefficient of w^m q^i; zero when m exceeds the stored degree. */
    const Int& coeff(int m, int i) const;

    /* Coefficient of w^m as a series (zero series when m is past the
     * stored degree). */
    QSeries w_coeff(int m) const;

    /* Substitute an integer for w. */
    QSeries eval_w(const Int& w_value) const;

    WQPoly& operator+=(const WQPoly& o);
    friend WQPoly operator+(WQPoly a, const WQPoly& b) { return a += b; }
    WQPoly operator*(const WQPoly& o) const;

    /* Mathematical equality at equal truncation order; trailing zero
     * rows are immaterial. */
    bool operator==(const WQPoly& o) const;
    bool operator!=(const WQPoly& o) const { return !(*this == o); }

private:
    std::vector<QSeries> rows_;  // rows_[m] is the coefficient of w^m
};

}  // namespace qgap

#endif
