#include "qgap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <thread>

#include "json.hpp"
#include "qgap/partitions.hpp"

namespace qgap {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int isqrt(long long n) {
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return static_cast<int>(r);
}

Int mod_norm(const Int& v, int m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

/* Runs f(n) for n in [lo, hi], striped across the requested number of
 * threads. Work for distinct n must be independent; striping keeps the
 * result identical for any thread count. */
void run_striped(int lo, int hi, int threads, const std::function<void(int)>& f) {
    if (threads <= 1) {
        for (int n = lo; n <= hi; ++n) f(n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int n = lo + t; n <= hi; n += threads) f(n);
        });
    }
    for (auto& th : pool) th.join();
}

void finish(VerdictReport& r, Clock::time_point t0) {
    r.passed = r.failures.empty();
    r.elapsed_ms = ms_since(t0);
}

}  // namespace

std::string VerdictReport::to_json() const {
    nlohmann::ordered_json j;
    j["check_name"] = check_name;
    j["range"] = {n_lo, n_hi};
    j["passed"] = passed;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        j["failures"].push_back({{"n", f.n}, {"expected", f.expected}, {"actual", f.actual}});
    }
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : witnesses) {
        j["witnesses"].push_back({{"n", w.n}, {"detail", w.detail}});
    }
    j["elapsed_ms"] = std::round(elapsed_ms * 1000.0) / 1000.0;
    return j.dump(2);
}

VerdictReport check_congruence_mod3(int n_max) {
    const auto t0 = Clock::now();
    VerdictReport r{.check_name = "congruence-mod3", .n_lo = 1, .n_hi = n_max};
    const QSeries diff = gf_parity_diff(Family::partitions, n_max);
    for (int n = 1; n <= n_max; ++n) {
        const int s = isqrt(n);
        const bool square = s * s == n;
        const int expected = !square ? 0 : (s % 2 == 1 ? 1 : 2);
        const Int actual = mod_norm(diff[n], 3);
        if (actual != expected) {
            r.failures.push_back({n, std::to_string(expected) + " (mod 3)",
                                  actual.get_str() + " (mod 3)"});
        }
    }
    finish(r, t0);
    return r;
}

VerdictReport check_congruence_mod4(int n_max) {
    const auto t0 = Clock::now();
    VerdictReport r{.check_name = "congruence-mod4", .n_lo = 1, .n_hi = n_max};
    const QSeries diff = gf_parity_diff(Family::overpartitions, n_max);
    for (int n = 1; n <= n_max; ++n) {
        const int s = isqrt(n);
        const int expected = s * s == n ? 2 : 0;
        if (diff[n] % 2 != 0) {
            r.failures.push_back({n, "even difference", diff[n].get_str()});
        }
        const Int actual = mod_norm(diff[n], 4);
        if (actual != expected) {
            r.failures.push_back({n, std::to_string(expected) + " (mod 4)",
                                  actual.get_str() + " (mod 4)"});
        }
    }
    finish(r, t0);
    return r;
}

namespace {

VerdictReport scan_bias_impl(Family family, int n_max, int threshold) {
    const auto t0 = Clock::now();
    VerdictReport r{.check_name = "bias-" + family_name(family), .n_lo = 1, .n_hi = n_max};
    const QSeries total = family == Family::partitions
                              ? partition_count_series(n_max)
                              : overpartition_count_series(n_max);
    const QSeries diff = gf_parity_diff(family, n_max);
    for (int n = 1; n <= n_max; ++n) {
        Int sum = total[n] + diff[n];
        if (sum % 2 != 0) {
            r.failures.push_back({n, "even M_e + M_o split", sum.get_str()});
            continue;
        }
        const Int even_side = sum / 2;
        const Int odd_side = (total[n] - diff[n]) / 2;
        if (even_side <= odd_side) {
            const std::string detail =
                "M_e=" + even_side.get_str() + " M_o=" + odd_side.get_str();
            if (n <= threshold) {
                r.witnesses.push_back({n, detail});
            } else {
                r.failures.push_back({n, "M_e(n) > M_o(n)", detail});
            }
        }
    }
    finish(r, t0);
    return r;
}

}  // namespace

VerdictReport scan_bias(Family family, int n_max) {
    return scan_bias_impl(family, n_max, family == Family::partitions ? 34 : 27);
}

VerdictReport scan_bound_vs_distinct(int n_max) {
    const auto t0 = Clock::now();
    VerdictReport r{.check_name = "bound-vs-distinct", .n_lo = 1, .n_hi = n_max};
    const QSeries diff = gf_parity_diff(Family::partitions, n_max);
    const QSeries distinct = gf_gapfree(Family::partitions, n_max);
    for (int n = 1; n <= n_max; ++n) {
        if (diff[n] < distinct[n]) continue;
        const std::string detail =
            "M_e-M_o=" + diff[n].get_str() + " q(n)=" + distinct[n].get_str();
        if (n <= 10) {
            r.witnesses.push_back({n, detail});
        } else {
            r.failures.push_back({n, "M_e(n)-M_o(n) < q(n)", detail});
        }
    }
    finish(r, t0);
    return r;
}

VerdictReport crosscheck_missing_tables(Family family, int j, int n_max, int threads) {
    const auto t0 = Clock::now();
    VerdictReport r{.check_name = "crosscheck-table-" + family_name(family) +
                                  "-j" + std::to_string(j),
                    .n_lo = 1,
                    .n_hi = n_max};
    const WQPoly table = gf_missing_table({family, j, n_max});

    /* Histogram of missing counts >= j over (over)partitions with
     * largest part >= j; rows indexed by n are written independently. */
    std::vector<std::vector<long long>> hist(
        static_cast<size_t>(n_max) + 1,
        std::vector<long long>(static_cast<size_t>(std::max(n_max, 1)), 0));
    run_striped(0, n_max, threads, [&](int n) {
        auto& row = hist[static_cast<size_t>(n)];
        if (family == Family::partitions) {
            enumerate_partitions(n, [&](const Partition& p) {
                if (p.largest() >= j) ++row[static_cast<size_t>(missing_count(p, j))];
                return true;
            });
        } else {
            enumerate_overpartitions(n, [&](const Overpartition& p) {
                if (p.largest() >= j) ++row[static_cast<size_t>(missing_count(p, j))];
                return true;
            });
        }
    });

    for (int n = 1; n <= n_max; ++n) {
        for (int m = 0; m <= n - 1; ++m) {
            const long expected = static_cast<long>(hist[static_cast<size_t>(n)][static_cast<size_t>(m)]);
            if (table.coeff(m, n) != expected) {
                r.failures.push_back({n, "m=" + std::to_string(m) + ": " + std::to_string(expected),
                                      "m=" + std::to_string(m) + ": " + table.coeff(m, n).get_str()});
            }
        }
    }
    finish(r, t0);
    return r;
}

VerdictReport crosscheck_one_double(Family family, int n_max) {
    const auto t0 = Clock::now();
    VerdictReport r{.check_name = "crosscheck-one-double-" + family_name(family),
                    .n_lo = 0,
                    .n_hi = n_max};
    const QSeries series = gf_one_missing(family, n_max);
    for (int n = 0; n <= n_max; ++n) {
        const long count = static_cast<long>(family == Family::partitions
                                                 ? exactly_one_double_count(n)
                                                 : exactly_one_double_count_over(n));
        if (series[n] != count) {
            r.failures.push_back({n, std::to_string(count), series[n].get_str()});
        }
    }
    finish(r, t0);
    return r;
}

VerdictReport crosscheck_nu_identity(int k_max, int n_max, int threads) {
    const auto t0 = Clock::now();
    VerdictReport r{.check_name = "crosscheck-nu-identity", .n_lo = 0, .n_hi = n_max};

    struct PerN {
        std::vector<long long> nu_lt, nu_geq, parts_neq;
        long long sigma_largest = 0;
        long long total_parts = 0;
    };
    std::vector<PerN> agg(static_cast<size_t>(n_max) + 1);
    run_striped(0, n_max, threads, [&](int n) {
        PerN& a = agg[static_cast<size_t>(n)];
        a.nu_lt.assign(static_cast<size_t>(k_max) + 1, 0);
        a.nu_geq.assign(static_cast<size_t>(k_max) + 1, 0);
        a.parts_neq.assign(static_cast<size_t>(k_max) + 1, 0);
        enumerate_partitions(n, [&](const Partition& p) {
            a.sigma_largest += p.largest();
            a.total_parts += p.total_parts();
            for (const auto& [value, count] : p.multiplicities()) {
                /* value has multiplicity >= k exactly for k <= count */
                for (int k = 1; k <= std::min(count, k_max); ++k) {
                    ++a.nu_geq[static_cast<size_t>(k)];
                }
                if (value <= k_max) {
                    a.parts_neq[static_cast<size_t>(value)] -= count;
                }
            }
            return true;
        });
        for (int k = 1; k <= k_max; ++k) {
            a.parts_neq[static_cast<size_t>(k)] += a.total_parts;
            a.nu_lt[static_cast<size_t>(k)] = a.sigma_largest - a.nu_geq[static_cast<size_t>(k)];
        }
    });

    for (int k = 1; k <= k_max; ++k) {
        const QSeries series = gf_nu_d_lt_k(k, n_max);
        for (int n = 0; n <= n_max; ++n) {
            const PerN& a = agg[static_cast<size_t>(n)];
            const long long nu_lt = a.nu_lt[static_cast<size_t>(k)];
            const long long nu_geq = a.nu_geq[static_cast<size_t>(k)];
            const long long parts_neq = a.parts_neq[static_cast<size_t>(k)];
            const bool ok = series[n] == static_cast<long>(nu_lt) && nu_lt == parts_neq &&
                            nu_lt == a.sigma_largest - nu_geq;
            if (!ok) {
                r.failures.push_back(
                    {n,
                     "k=" + std::to_string(k) + ": equal quantities",
                     "series=" + series[n].get_str() + " nu_lt=" + std::to_string(nu_lt) +
                         " parts_neq=" + std::to_string(parts_neq) +
                         " sigmaL-nu_geq=" + std::to_string(a.sigma_largest - nu_geq)});
            }
        }
    }
    for (int n = 0; n <= n_max; ++n) {
        const PerN& a = agg[static_cast<size_t>(n)];
        if (a.sigma_largest != a.total_parts) {
            r.failures.push_back({n, "sigma_L(n) = t(n)",
                                  std::to_string(a.sigma_largest) + " vs " +
                                      std::to_string(a.total_parts)});
        }
    }
    finish(r, t0);
    return r;
}

VerdictReport crosscheck_trivariate(int k_max, int n_max) {
    const auto t0 = Clock::now();
    VerdictReport r{.check_name = "crosscheck-trivariate", .n_lo = 1, .n_hi = n_max};
    const auto dim = static_cast<size_t>(n_max) + 1;
    for (int k = 1; k <= k_max; ++k) {
        const WZPoly table = gf_L_trivariate(k, n_max, n_max, n_max);

        /* joint[l][a][n]: partitions of n, largest part l, nu_{d,>=k} = a */
        std::vector<std::vector<std::vector<long long>>> joint(
            dim, std::vector<std::vector<long long>>(dim, std::vector<long long>(dim, 0)));
        std::vector<std::vector<long long>> lt_hist(dim, std::vector<long long>(dim, 0));
        for (int n = 1; n <= n_max; ++n) {
            enumerate_partitions(n, [&](const Partition& p) {
                const int geq = nu_d_geq_k(p, k);
                ++joint[static_cast<size_t>(p.largest())][static_cast<size_t>(geq)]
                       [static_cast<size_t>(n)];
                ++lt_hist[static_cast<size_t>(p.largest() - geq)][static_cast<size_t>(n)];
                return true;
            });
        }

        for (int l = 0; l <= n_max; ++l) {
            for (int a = 0; a <= n_max; ++a) {
                const QSeries& cell = table.coeff(l, a);
                for (int n = 1; n <= n_max; ++n) {
                    const long expected = static_cast<long>(
                        joint[static_cast<size_t>(l)][static_cast<size_t>(a)][static_cast<size_t>(n)]);
                    if (cell[n] != expected) {
                        r.failures.push_back({n,
                                              "k=" + std::to_string(k) + " w^" + std::to_string(l) +
                                                  " z^" + std::to_string(a) + ": " +
                                                  std::to_string(expected),
                                              cell[n].get_str()});
                    }
                }
            }
        }

        const auto marginal = table.marginal_w_minus_z();
        for (int m = 0; m <= n_max; ++m) {
            for (int n = 1; n <= n_max; ++n) {
                const long expected =
                    static_cast<long>(lt_hist[static_cast<size_t>(m)][static_cast<size_t>(n)]);
                if (marginal[static_cast<size_t>(m)][n] != expected) {
                    r.failures.push_back({n,
                                          "k=" + std::to_string(k) + " nu_lt=" + std::to_string(m) +
                                              ": " + std::to_string(expected),
                                          marginal[static_cast<size_t>(m)][n].get_str()});
                }
            }
        }
    }
    finish(r, t0);
    return r;
}

namespace {

int first_mismatch(const QSeries& a, const QSeries& b) {
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i] != b[i]) return i;
    }
    return -1;
}

QSeries q_binomial_lhs(const Monomial& a, const Monomial& z, int trunc_order) {
    if (z.degree < 1) {
        throw std::invalid_argument("q_binomial: z must have degree >= 1");
    }
    QSeries sum(trunc_order);
    sum[0] = 1;
    QSeries term = QSeries::one(trunc_order);
    for (int n = 1; static_cast<long>(n) * z.degree <= trunc_order; ++n) {
        /* term_n = term_{n-1} * (1 - a q^{n-1}) z / (1 - q^n) */
        if (a.coeff != 0) {
            const long d = static_cast<long>(a.degree) + n - 1;
            if (d <= trunc_order) {
                term.mul_one_plus_cq(Int(-a.coeff), static_cast<int>(d));
            }
        }
        term *= z.coeff;
        term.shift_q(z.degree);
        term.div_one_minus_q(n);
        sum += term;
    }
    return sum;
}

QSeries q_binomial_rhs(const Monomial& a, const Monomial& z, int trunc_order) {
    const Monomial az(Int(a.coeff * z.coeff), a.degree + z.degree);
    return pochhammer_inf(az, trunc_order) *
           pochhammer_inf(z, trunc_order).inverse();
}

}  // namespace

bool euler_identity_holds(int trunc_order) {
    const QSeries lhs = pochhammer_inf(Monomial(-1, 1), trunc_order) *
                        pochhammer_inf(Monomial(1, 1), trunc_order, 2);
    return lhs == QSeries::one(trunc_order);
}

bool jtpi_identity_holds(int trunc_order) {
    // sum (-1)^n q^{n^2} = (q;q^2)_inf^2 (q^2;q^2)_inf
    const QSeries odd_poch = pochhammer_inf(Monomial(1, 1), trunc_order, 2);
    const QSeries rhs =
        odd_poch * odd_poch * pochhammer_inf(Monomial(1, 2), trunc_order, 2);
    return theta_alternating_squares(trunc_order) == rhs;
}

bool q_binomial_identity_holds(const Monomial& a, const Monomial& z, int trunc_order) {
    return q_binomial_lhs(a, z, trunc_order) == q_binomial_rhs(a, z, trunc_order);
}

std::vector<Monomial> q_binomial_default_as() {
    return {Monomial(0, 1),  Monomial(1, 1),  Monomial(-1, 1),
            Monomial(2, 1),  Monomial(-2, 1), Monomial(-1, 2)};
}

std::vector<Monomial> q_binomial_default_zs() {
    return {Monomial(1, 1), Monomial(1, 2), Monomial(2, 1)};
}

VerdictReport check_preliminaries(int trunc_order) {
    const auto t0 = Clock::now();
    VerdictReport r{.check_name = "preliminaries", .n_lo = 0, .n_hi = trunc_order};

    {
        const QSeries lhs = pochhammer_inf(Monomial(-1, 1), trunc_order) *
                            pochhammer_inf(Monomial(1, 1), trunc_order, 2);
        const int i = first_mismatch(lhs, QSeries::one(trunc_order));
        if (i >= 0) {
            r.failures.push_back({i, "euler: 1", lhs[i].get_str()});
        }
    }
    {
        const QSeries odd_poch = pochhammer_inf(Monomial(1, 1), trunc_order, 2);
        const QSeries rhs =
            odd_poch * odd_poch * pochhammer_inf(Monomial(1, 2), trunc_order, 2);
        const QSeries lhs = theta_alternating_squares(trunc_order);
        const int i = first_mismatch(lhs, rhs);
        if (i >= 0) {
            r.failures.push_back({i, "jtpi: " + rhs[i].get_str(), lhs[i].get_str()});
        }
    }
    for (const Monomial& a : q_binomial_default_as()) {
        for (const Monomial& z : q_binomial_default_zs()) {
            const QSeries lhs = q_binomial_lhs(a, z, trunc_order);
            const QSeries rhs = q_binomial_rhs(a, z, trunc_order);
            const int i = first_mismatch(lhs, rhs);
            if (i >= 0) {
                r.failures.push_back({i,
                                      "q-binomial a=" + a.coeff.get_str() + "q^" +
                                          std::to_string(a.degree) + " z=" + z.coeff.get_str() +
                                          "q^" + std::to_string(z.degree) + ": " + rhs[i].get_str(),
                                      lhs[i].get_str()});
            }
        }
    }
    finish(r, t0);
    return r;
}

}  // namespace qgap
