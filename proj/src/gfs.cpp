#include "qgap/gfs.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgap {

std::string family_name(Family f) {
    return f == Family::partitions ? "partitions" : "overpartitions";
}

Family family_from_name(const std::string& name) {
    if (name == "partitions") return Family::partitions;
    if (name == "overpartitions") return Family::overpartitions;
    throw std::invalid_argument("unknown family: " + name);
}

namespace {

/* In-place bivariate passes used to assemble the tables. All of them
 * are O(w_degree * order) per factor, against O(order^2) per row for
 * the general product. */

/* P *= (1 - (w-c)q^s) = 1 + c q^s - w q^s. Descending scans keep the
 * not-yet-updated values on the read side. */
void mul_one_minus_w_minus_c_q(WQPoly& p, const Int& c, int s) {
    const int n = p.order();
    if (s > n) return;
    for (int m = p.w_degree(); m >= 0; --m) {
        QSeries& row = p.row(m);
        for (int i = n; i >= s; --i) {
            row[i] += c * row[i - s];
            if (m > 0) row[i] -= p.row(m - 1)[i - s];
        }
    }
}

/* P *= 1/(1 - w q^s): out = in + w q^s out, filled row by row upward. */
void div_one_minus_wq(WQPoly& p, int s) {
    const int n = p.order();
    if (s > n) return;
    for (int m = 1; m <= p.w_degree(); ++m) {
        QSeries& row = p.row(m);
        const QSeries& below = p.row(m - 1);
        for (int i = s; i <= n; ++i) row[i] += below[i - s];
    }
}

/* P *= (w - (w-c)q^s) = c q^s + w(1 - q^s). The factor has no constant
 * term, so every cell is overwritten. */
void mul_w_minus_w_minus_c_q(WQPoly& p, const Int& c, int s) {
    const int n = p.order();
    for (int m = p.w_degree(); m >= 1; --m) {
        QSeries& row = p.row(m);
        const QSeries& below = p.row(m - 1);
        for (int i = n; i >= 0; --i) {
            if (i >= s) {
                row[i] = c * row[i - s] + below[i] - below[i - s];
            } else {
                row[i] = below[i];
            }
        }
    }
    QSeries& bottom = p.row(0);
    for (int i = n; i >= 0; --i) {
        if (i >= s) {
            bottom[i] = c * bottom[i - s];
        } else {
            bottom[i] = 0;
        }
    }
}

void div_one_minus_q_rows(WQPoly& p, int s) {
    if (s > p.order()) return;
    for (int m = 0; m <= p.w_degree(); ++m) p.row(m).div_one_minus_q(s);
}

void shift_q_rows(WQPoly& p, int d) {
    for (int m = 0; m <= p.w_degree(); ++m) p.row(m).shift_q(d);
}

}  // namespace

WQPoly gf_missing_table(const GfSpec& spec) {
    if (spec.j < 1) {
        throw std::invalid_argument("gf_missing_table: j must be >= 1");
    }
    const int n = spec.trunc_order;
    const int j = spec.j;
    const Int c = spec.family == Family::partitions ? 1 : 2;

    WQPoly acc(n, n);
    WQPoly term(n, n);

    /* Summand for largest part l = j:
     * partitions: q^j/(q;q)_j; overpartitions: 2(-q;q)_{j-1} q^j/(q;q)_j. */
    QSeries lead = QSeries::one(n);
    if (spec.family == Family::overpartitions) {
        lead = pochhammer_fin(Monomial(-1, 1), j - 1, n);
        lead *= Int(2);
    }
    lead.shift_q(std::min(j, n + 1));  // j past the order empties the sum
    for (int i = 1; i <= j && i <= n; ++i) lead.div_one_minus_q(i);
    if (j <= n) term.row(0) = lead;

    for (int ell = j; ell <= n; ++ell) {
        acc += term;
        if (ell == n) break;
        /* Advance to largest part l+1: multiply by
         * q (w - (w-c)q^l) / (1 - q^{l+1}). */
        shift_q_rows(term, 1);
        mul_w_minus_w_minus_c_q(term, c, ell);
        div_one_minus_q_rows(term, ell + 1);
    }

    if (j == 1) acc.row(0)[0] += 1;  // the empty partition, P(0,0) = 1
    return acc;
}

WQPoly gf_missing_closed(Family family, int trunc_order) {
    const Int c = family == Family::partitions ? 1 : 2;
    WQPoly p(trunc_order, trunc_order);
    p.row(0)[0] = 1;
    for (int s = 1; s <= trunc_order; ++s) mul_one_minus_w_minus_c_q(p, c, s);
    for (int s = 1; s <= trunc_order; ++s) div_one_minus_wq(p, s);
    return p;
}

QSeries gf_one_missing(Family family, int trunc_order) {
    const Int c = family == Family::partitions ? 1 : 2;
    QSeries sum(trunc_order);
    for (int k = 1; 2 * k <= trunc_order; ++k) {
        /* c q^{2k}/(1 + c q^k) = sum_{t>=0} c(-c)^t q^{k(t+2)}. */
        Int coef = c;
        for (long d = 2L * k; d <= trunc_order; d += k) {
            sum[static_cast<int>(d)] += coef;
            coef *= -c;
        }
    }
    return gf_gapfree(family, trunc_order) * sum;
}

QSeries gf_parity_diff(Family family, int trunc_order) {
    const Monomial num = family == Family::partitions ? Monomial(-2, 1) : Monomial(-3, 1);
    return pochhammer_inf(num, trunc_order) *
           pochhammer_inf(Monomial(-1, 1), trunc_order).inverse();
}

QSeries gf_gapfree(Family family, int trunc_order) {
    const Monomial a = family == Family::partitions ? Monomial(-1, 1) : Monomial(-2, 1);
    return pochhammer_inf(a, trunc_order);
}

QSeries gf_nu_d_lt_k(int k, int trunc_order) {
    if (k < 1 || k > trunc_order) {
        throw std::invalid_argument("gf_nu_d_lt_k: k out of range");
    }
    QSeries tails(trunc_order);
    for (int m = 1; m <= trunc_order; ++m) {
        if (m == k) continue;
        tails += geometric_tail(m, trunc_order);
    }
    return partition_count_series(trunc_order) * tails;
}

QSeries partition_count_series(int trunc_order) {
    return pochhammer_inf(Monomial(1, 1), trunc_order).inverse();
}

QSeries overpartition_count_series(int trunc_order) {
    return pochhammer_inf(Monomial(-1, 1), trunc_order) *
           partition_count_series(trunc_order);
}

QSeries parts_count_series(int trunc_order) {
    QSeries tails(trunc_order);
    for (int m = 1; m <= trunc_order; ++m) tails += geometric_tail(m, trunc_order);
    return partition_count_series(trunc_order) * tails;
}

QSeries k_multiplicity_series(int k, int trunc_order) {
    return partition_count_series(trunc_order) * geometric_tail(k, trunc_order);
}

WZPoly::WZPoly(int trunc_order, int w_cap, int z_cap)
    : trunc_order_(trunc_order), z_cap_(z_cap) {
    if (w_cap < 0 || z_cap < 0) {
        throw std::invalid_argument("WZPoly: negative cap");
    }
    c_.assign(static_cast<size_t>(w_cap) + 1,
              std::vector<QSeries>(static_cast<size_t>(z_cap) + 1, QSeries(trunc_order)));
}

const QSeries& WZPoly::coeff(int w_deg, int z_deg) const {
    if (w_deg < 0 || w_deg > w_cap() || z_deg < 0 || z_deg > z_cap()) {
        throw std::out_of_range("WZPoly::coeff: degree out of range");
    }
    return c_[static_cast<size_t>(w_deg)][static_cast<size_t>(z_deg)];
}

QSeries& WZPoly::at(int w_deg, int z_deg) {
    if (w_deg < 0 || w_deg > w_cap() || z_deg < 0 || z_deg > z_cap()) {
        throw std::out_of_range("WZPoly::at: degree out of range");
    }
    return c_[static_cast<size_t>(w_deg)][static_cast<size_t>(z_deg)];
}

QSeries WZPoly::eval_wz(const Int& w_value, const Int& z_value) const {
    QSeries acc(trunc_order_);
    for (int w = w_cap(); w >= 0; --w) {
        acc *= w_value;
        QSeries row(trunc_order_);
        for (int z = z_cap(); z >= 0; --z) {
            row *= z_value;
            row += c_[static_cast<size_t>(w)][static_cast<size_t>(z)];
        }
        acc += row;
    }
    return acc;
}

std::vector<QSeries> WZPoly::marginal_w_minus_z() const {
    std::vector<QSeries> out(static_cast<size_t>(w_cap()) + 1, QSeries(trunc_order_));
    for (int w = 0; w <= w_cap(); ++w) {
        for (int z = 0; z <= z_cap(); ++z) {
            const int m = w - z;
            if (m < 0) continue;  // never populated: z counts distinct values <= w
            out[static_cast<size_t>(m)] += c_[static_cast<size_t>(w)][static_cast<size_t>(z)];
        }
    }
    return out;
}

namespace {

/* Multiplicities t with 0 (or 1 for the largest part) <= t < k of the
 * value r: sum of q^{tr}. */
QSeries mult_below_k(int r, int k, int trunc_order, bool from_one) {
    QSeries s(trunc_order);
    for (long t = from_one ? 1 : 0; t < k; ++t) {
        const long d = t * r;
        if (d > trunc_order) break;
        s[static_cast<int>(d)] += 1;
    }
    return s;
}

/* Multiplicities t >= k of the value r: sum of q^{tr}. */
QSeries mult_from_k(int r, int k, int trunc_order) {
    QSeries s(trunc_order);
    for (long d = static_cast<long>(k) * r; d <= trunc_order; d += r) {
        s[static_cast<int>(d)] = 1;
    }
    return s;
}

}  // namespace

WZPoly gf_L_trivariate(int k, int trunc_order, int w_cap, int z_cap) {
    if (k < 1) throw std::invalid_argument("gf_L_trivariate: k must be >= 1");
    if (w_cap > trunc_order || z_cap > trunc_order) {
        throw std::invalid_argument("gf_L_trivariate: caps must not exceed the order");
    }
    WZPoly out(trunc_order, w_cap, z_cap);
    for (int ell = 1; ell <= w_cap && ell <= trunc_order; ++ell) {
        /* z-graded product over values 1..ell; the value ell must occur. */
        std::vector<QSeries> g;
        g.push_back(mult_below_k(ell, k, trunc_order, /*from_one=*/true));
        if (z_cap >= 1) g.push_back(mult_from_k(ell, k, trunc_order));
        for (int r = 1; r < ell; ++r) {
            const QSeries a0 = mult_below_k(r, k, trunc_order, /*from_one=*/false);
            const QSeries a1 = mult_from_k(r, k, trunc_order);
            const int zmax = std::min(static_cast<int>(g.size()), z_cap);
            std::vector<QSeries> h(static_cast<size_t>(zmax) + 1, QSeries(trunc_order));
            for (int z = 0; z <= zmax; ++z) {
                if (z < static_cast<int>(g.size())) h[static_cast<size_t>(z)] += g[static_cast<size_t>(z)] * a0;
                if (z >= 1) h[static_cast<size_t>(z)] += g[static_cast<size_t>(z) - 1] * a1;
            }
            g = std::move(h);
        }
        for (int z = 0; z < static_cast<int>(g.size()); ++z) {
            out.at(ell, z) = std::move(g[static_cast<size_t>(z)]);
        }
    }
    return out;
}

}  // namespace qgap
