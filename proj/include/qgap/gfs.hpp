#ifndef QGAP_GFS_HPP
#define QGAP_GFS_HPP

#include <string>
#include <vector>

#include "qgap/qseries.hpp"

namespace qgap {

enum class Family { partitions, overpartitions };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/* Selects one instance of the bivariate missing-integer table: the
 * family, the lower bound j on tracked missing integers, and the
 * q-truncation order. */
struct GfSpec {
    Family family = Family::partitions;
    int j = 1;
    int trunc_order = 0;
};

/* The table sum_{n,m} P_j(n,m) w^m q^n (overlined P for the
 * overpartition family): coefficient of w^m q^n counts (over)partitions
 * of n with largest part >= j in which exactly m integers v with
 * j <= v < largest part are missing. Computed as the sum over the
 * largest part l >= j of
 *
 *     c * q^l / (q;q)_l * prod_{i=j}^{l-1} (w - (w-c)q^i),
 *
 * with c = 1 (partitions) or c = 2 together with a (-q;q)_{j-1}
 * prefactor (overpartitions); every summand is a genuine polynomial in
 * w. For j = 1 the constant 1 = P(0,0) is added so the table starts at
 * n = 0. */
WQPoly gf_missing_table(const GfSpec& spec);

/* Closed product form of the j = 1 table: the bivariate expansion of
 * ((w-c)q;q)_inf / (wq;q)_inf with c = 1 or 2. */
WQPoly gf_missing_closed(Family family, int trunc_order);

/* Partitions with exactly one missing integer:
 * (-q;q)_inf * sum_k q^{2k}/(1+q^k), and the overpartition analogue
 * (-2q;q)_inf * sum_k 2q^{2k}/(1+2q^k). Equals the w^1 row of the
 * closed form. */
QSeries gf_one_missing(Family family, int trunc_order);

/* M_e(n) - M_o(n): partitions with an even number of missing integers
 * minus those with an odd number. (-2q;q)_inf/(-q;q)_inf, and
 * (-3q;q)_inf/(-q;q)_inf for overpartitions. */
QSeries gf_parity_diff(Family family, int trunc_order);

/* Gap-free counts: (-q;q)_inf (also the distinct-part counts q(n)),
 * resp. (-2q;q)_inf. */
QSeries gf_gapfree(Family family, int trunc_order);

/* nu_{D,<k}(n): distinct integers <= largest part with multiplicity
 * < k, summed over all partitions of n. Equals
 * 1/(q;q)_inf * sum_{n != k} q^n/(1-q^n), i.e. the number of parts
 * different from k in all partitions of n. Requires 1 <= k <= order. */
QSeries gf_nu_d_lt_k(int k, int trunc_order);

/* p(n): 1/(q;q)_inf. */
QSeries partition_count_series(int trunc_order);

/* pbar(n): (-q;q)_inf/(q;q)_inf. */
QSeries overpartition_count_series(int trunc_order);

/* Total number of parts in all partitions of n:
 * 1/(q;q)_inf * sum_n q^n/(1-q^n). */
QSeries parts_count_series(int trunc_order);

/* Number of parts equal to k in all partitions of n:
 * 1/(q;q)_inf * q^k/(1-q^k). */
QSeries k_multiplicity_series(int k, int trunc_order);

/* Polynomial in two markers w, z with QSeries coefficients; the carrier
 * of the joint (largest part, multiplicity-pattern) distribution. */
class WZPoly {
public:
    WZPoly(int trunc_order, int w_cap, int z_cap);

    int order() const { return trunc_order_; }
    int w_cap() const { return static_cast<int>(c_.size()) - 1; }
    int z_cap() const { return z_cap_; }

    const QSeries& coeff(int w_deg, int z_deg) const;
    QSeries& at(int w_deg, int z_deg);

    QSeries eval_wz(const Int& w_value, const Int& z_value) const;

    /* Marginal over m = (w degree) - (z degree): entry m is the series
     * sum of all coefficients with that difference. */
    std::vector<QSeries> marginal_w_minus_z() const;

private:
    int trunc_order_;
    int z_cap_;
    std::vector<std::vector<QSeries>> c_;  // c_[w][z]
};

/* The joint generating function L(w,z;q) in which the power of w is the
 * largest part and the power of z counts the distinct part values with
 * multiplicity >= k:
 *
 *   L = sum_{l>=1} w^l * prod_{r=1}^{l-1} ((1-q^{rk})/(1-q^r) + z q^{rk}/(1-q^r))
 *                      * ((q^l - q^{lk})/(1-q^l) + z q^{lk}/(1-q^l)).
 *
 * Regrouping on m = l - (z degree) yields the distribution of
 * nu_{d,<k} over partitions. */
WZPoly gf_L_trivariate(int k, int trunc_order, int w_cap, int z_cap);

}  // namespace qgap

#endif
