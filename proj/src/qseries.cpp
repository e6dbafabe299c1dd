#include "qgap/qseries.hpp"

#include <stdexcept>
#include <utility>

namespace qgap {

namespace {

void require_same_order(const QSeries& a, const QSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("QSeries: truncation order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
}

const Int kZero = 0;

}  // namespace

QSeries::QSeries(int trunc_order) {
    if (trunc_order < 0) {
        throw std::invalid_argument("QSeries: negative truncation order");
    }
    c_.resize(static_cast<size_t>(trunc_order) + 1);
}

QSeries QSeries::one(int trunc_order) {
    QSeries s(trunc_order);
    s.c_[0] = 1;
    return s;
}

QSeries QSeries::monomial(const Monomial& m, int trunc_order) {
    if (m.degree < 0) {
        throw std::invalid_argument("QSeries: negative monomial degree");
    }
    QSeries s(trunc_order);
    if (m.degree <= trunc_order) {
        s.c_[static_cast<size_t>(m.degree)] = m.coeff;
    }
    return s;
}

QSeries QSeries::from_coeffs(std::vector<Int> coeffs) {
    if (coeffs.empty()) {
        throw std::invalid_argument("QSeries: empty coefficient list");
    }
    QSeries s(static_cast<int>(coeffs.size()) - 1);
    s.c_ = std::move(coeffs);
    return s;
}

bool QSeries::is_zero() const {
    for (const Int& v : c_) {
        if (v != 0) return false;
    }
    return true;
}

QSeries QSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order()) {
        throw std::invalid_argument("QSeries: bad truncation target");
    }
    QSeries s(new_order);
    for (int i = 0; i <= new_order; ++i) s.c_[i] = c_[i];
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    require_same_order(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    require_same_order(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
    require_same_order(*this, o);
    const int n = order();
    std::vector<Int> out(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (c_[i] == 0) continue;
        for (int k = 0; i + k <= n; ++k) {
            out[i + k] += c_[i] * o.c_[k];  // gmpxx folds this to addmul
        }
    }
    c_ = std::move(out);
    return *this;
}

QSeries& QSeries::operator*=(const Int& scalar) {
    for (Int& v : c_) v *= scalar;
    return *this;
}

QSeries QSeries::operator-() const {
    QSeries s(order());
    for (size_t i = 0; i < c_.size(); ++i) s.c_[i] = -c_[i];
    return s;
}

QSeries QSeries::inverse() const {
    /* If a*b = 1 then b_0 = 1/a_0 and a_0*b_n = -sum_{k=1}^n a_k b_{n-k}
     * for n >= 1; over the integers this needs a_0 in {+1, -1}. */
    if (c_[0] != 1 && c_[0] != -1) {
        throw std::invalid_argument(
            "QSeries::inverse: constant term must be +1 or -1");
    }
    const int n = order();
    QSeries b(n);
    b.c_[0] = c_[0];
    Int acc;
    for (int i = 1; i <= n; ++i) {
        acc = 0;
        for (int k = 1; k <= i; ++k) acc += c_[k] * b.c_[i - k];
        b.c_[i] = c_[0] == 1 ? -acc : acc;
    }
    return b;
}

QSeries& QSeries::mul_one_plus_cq(const Int& c, int d) {
    if (d < 0) {
        throw std::invalid_argument("QSeries: negative factor degree");
    }
    if (d == 0) {
        Int scale = 1 + c;
        return *this *= scale;
    }
    for (int i = order(); i >= d; --i) c_[i] += c * c_[i - d];
    return *this;
}

QSeries& QSeries::div_one_minus_q(int d) {
    if (d < 1) {
        throw std::invalid_argument("QSeries: 1/(1-q^d) needs d >= 1");
    }
    for (int i = d; i <= order(); ++i) c_[i] += c_[i - d];
    return *this;
}

QSeries& QSeries::shift_q(int d) {
    if (d < 0) {
        throw std::invalid_argument("QSeries: negative shift");
    }
    const int n = order();
    for (int i = n; i >= d; --i) c_[i] = c_[i - d];
    for (int i = 0; i < d && i <= n; ++i) c_[i] = 0;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) {
    bool first = true;
    int shown = 0;
    for (int i = 0; i <= s.order(); ++i) {
        if (s[i] == 0) continue;
        if (shown == 12) {
            os << " + ...";
            first = false;
            break;
        }
        if (!first) os << (s[i] > 0 ? " + " : " - ");
        Int v = first ? s[i] : Int(abs(s[i]));
        if (i == 0) {
            os << v;
        } else {
            if (v == 1) {
                os << "q";
            } else if (v == -1) {
                os << "-q";
            } else {
                os << v << "*q";
            }
            if (i > 1) os << "^" << i;
        }
        first = false;
        ++shown;
    }
    if (first) os << "0";
    os << " + O(q^" << s.order() + 1 << ")";
    return os;
}

QSeries pochhammer_fin(const Monomial& a, int n, int trunc_order, int step) {
    if (n < 0) throw std::invalid_argument("pochhammer_fin: negative count");
    if (step < 1) throw std::invalid_argument("pochhammer_fin: step must be >= 1");
    QSeries p = QSeries::one(trunc_order);
    if (a.coeff == 0) return p;
    Int neg = -a.coeff;
    for (int i = 0; i < n; ++i) {
        long d = static_cast<long>(a.degree) + static_cast<long>(step) * i;
        if (d > trunc_order) break;  // remaining factors are 1 mod q^{N+1}
        p.mul_one_plus_cq(neg, static_cast<int>(d));
    }
    return p;
}

QSeries pochhammer_inf(const Monomial& a, int trunc_order, int step) {
    if (step < 1) throw std::invalid_argument("pochhammer_inf: step must be >= 1");
    QSeries p = QSeries::one(trunc_order);
    if (a.coeff == 0) return p;
    Int neg = -a.coeff;
    for (long d = a.degree; d <= trunc_order; d += step) {
        p.mul_one_plus_cq(neg, static_cast<int>(d));
    }
    return p;
}

QSeries geometric_tail(int k, int trunc_order) {
    if (k < 1) throw std::invalid_argument("geometric_tail: k must be >= 1");
    QSeries s(trunc_order);
    for (long i = k; i <= trunc_order; i += k) s[static_cast<int>(i)] = 1;
    return s;
}

QSeries theta_alternating_squares(int trunc_order) {
    QSeries s(trunc_order);
    s[0] = 1;
    for (long n = 1; n * n <= trunc_order; ++n) {
        s[static_cast<int>(n * n)] = (n % 2 == 0) ? 2 : -2;
    }
    return s;
}

WQPoly::WQPoly(int trunc_order, int w_degree) {
    if (w_degree < 0) {
        throw std::invalid_argument("WQPoly: negative w degree");
    }
    rows_.assign(static_cast<size_t>(w_degree) + 1, QSeries(trunc_order));
}

WQPoly WQPoly::one(int trunc_order) {
    WQPoly p(trunc_order, 0);
    p.rows_[0][0] = 1;
    return p;
}

const Int& WQPoly::coeff(int m, int i) const {
    if (m > w_degree()) return kZero;
    return rows_[static_cast<size_t>(m)][i];
}

QSeries WQPoly::w_coeff(int m) const {
    if (m > w_degree()) return QSeries(order());
    return rows_[static_cast<size_t>(m)];
}

QSeries WQPoly::eval_w(const Int& w_value) const {
    QSeries acc = rows_.back();
    for (int m = w_degree() - 1; m >= 0; --m) {
        acc *= w_value;
        acc += rows_[static_cast<size_t>(m)];
    }
    return acc;
}

WQPoly& WQPoly::operator+=(const WQPoly& o) {
    if (order() != o.order()) {
        throw std::invalid_argument("WQPoly: truncation order mismatch");
    }
    if (o.w_degree() > w_degree()) {
        rows_.resize(static_cast<size_t>(o.w_degree()) + 1, QSeries(order()));
    }
    for (int m = 0; m <= o.w_degree(); ++m) {
        rows_[static_cast<size_t>(m)] += o.rows_[static_cast<size_t>(m)];
    }
    return *this;
}

WQPoly WQPoly::operator*(const WQPoly& o) const {
    if (order() != o.order()) {
        throw std::invalid_argument("WQPoly: truncation order mismatch");
    }
    const int n = order();
    const int w_cap = std::min(w_degree() + o.w_degree(), n);
    WQPoly out(n, w_cap);
    for (int ma = 0; ma <= w_degree(); ++ma) {
        const QSeries& ra = rows_[static_cast<size_t>(ma)];
        if (ra.is_zero()) continue;
        for (int mb = 0; mb <= o.w_degree() && ma + mb <= w_cap; ++mb) {
            const QSeries& rb = o.rows_[static_cast<size_t>(mb)];
            if (rb.is_zero()) continue;
            out.rows_[static_cast<size_t>(ma + mb)] += ra * rb;
        }
    }
    return out;
}

bool WQPoly::operator==(const WQPoly& o) const {
    if (order() != o.order()) return false;
    const int top = std::max(w_degree(), o.w_degree());
    for (int m = 0; m <= top; ++m) {
        if (w_coeff(m) != o.w_coeff(m)) return false;
    }
    return true;
}

}  // namespace qgap
