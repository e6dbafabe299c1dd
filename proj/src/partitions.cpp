#include "qgap/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qgap {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> mult;
    for (int p : parts_) {
        if (!mult.empty() && mult.back().first == p) {
            ++mult.back().second;
        } else {
            mult.emplace_back(p, 1);
        }
    }
    return mult;
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int Partition::distinct_values() const {
    int d = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i == 0 || parts_[i] != parts_[i - 1]) ++d;
    }
    return d;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    conj.reserve(static_cast<size_t>(largest()));
    for (int row = 1; row <= largest(); ++row) {
        int count = 0;
        for (int p : parts_) {
            if (p >= row) ++count;
        }
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "()";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += '+';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Overpartition::Overpartition(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].value < 1 || entries_[i].multiplicity < 1) {
            throw std::invalid_argument("Overpartition: bad entry");
        }
        if (i > 0 && entries_[i].value >= entries_[i - 1].value) {
            throw std::invalid_argument("Overpartition: values must strictly decrease");
        }
    }
}

int Overpartition::weight() const {
    long long total = 0;
    for (const Entry& e : entries_) {
        total += static_cast<long long>(e.value) * e.multiplicity;
    }
    return static_cast<int>(total);
}

bool Overpartition::has_value(int value) const {
    for (const Entry& e : entries_) {
        if (e.value == value) return true;
        if (e.value < value) return false;
    }
    return false;
}

std::string Overpartition::to_string() const {
    if (entries_.empty()) return "()";
    std::string s;
    bool first = true;
    for (const Entry& e : entries_) {
        for (int i = 0; i < e.multiplicity; ++i) {
            if (!first) s += '+';
            s += std::to_string(e.value);
            if (e.overlined && i == 0) s += '~';
            first = false;
        }
    }
    return s;
}

void enumerate_partitions(int n, const std::function<bool(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    if (n == 0) {
        visit(Partition());
        return;
    }
    std::vector<int> a{n};
    for (;;) {
        if (!visit(Partition(a))) return;
        /* Next partition in reverse-lexicographic order: take the
         * rightmost part > 1, lower it by one, and refill the tail
         * greedily with copies of the lowered value. */
        int i = static_cast<int>(a.size()) - 1;
        int ones = 0;
        while (i >= 0 && a[i] == 1) {
            ++ones;
            --i;
        }
        if (i < 0) return;  // all ones: last partition
        int avail = a[i] + ones;
        int v = a[i] - 1;
        a.resize(static_cast<size_t>(i));
        while (avail >= v) {
            a.push_back(v);
            avail -= v;
        }
        if (avail > 0) a.push_back(avail);
    }
}

void enumerate_overpartitions(int n, const std::function<bool(const Overpartition&)>& visit) {
    bool keep_going = true;
    enumerate_partitions(n, [&](const Partition& p) {
        const auto mult = p.multiplicities();
        const int d = static_cast<int>(mult.size());
        std::vector<Overpartition::Entry> entries(mult.size());
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            for (int i = 0; i < d; ++i) {
                entries[static_cast<size_t>(i)] = {mult[static_cast<size_t>(i)].first,
                                                   mult[static_cast<size_t>(i)].second,
                                                   (mask >> i & 1u) != 0};
            }
            if (!visit(Overpartition(entries))) {
                keep_going = false;
                return false;
            }
        }
        return true;
    });
    (void)keep_going;
}

namespace {

/* Presence flags for values 1..largest. */
std::vector<bool> presence(const Partition& p) {
    std::vector<bool> present(static_cast<size_t>(p.largest()) + 1, false);
    for (int v : p.parts()) present[static_cast<size_t>(v)] = true;
    return present;
}

}  // namespace

int missing_count(const Partition& p, int j) {
    if (j < 1) throw std::invalid_argument("missing_count: j must be >= 1");
    const auto present = presence(p);
    int count = 0;
    for (int v = j; v < p.largest(); ++v) {
        if (!present[static_cast<size_t>(v)]) ++count;
    }
    return count;
}

int missing_count(const Overpartition& p, int j) {
    if (j < 1) throw std::invalid_argument("missing_count: j must be >= 1");
    std::vector<bool> present(static_cast<size_t>(p.largest()) + 1, false);
    for (const auto& e : p.entries()) present[static_cast<size_t>(e.value)] = true;
    int count = 0;
    for (int v = j; v < p.largest(); ++v) {
        if (!present[static_cast<size_t>(v)]) ++count;
    }
    return count;
}

std::vector<int> missing_values(const Partition& p, int j) {
    if (j < 1) throw std::invalid_argument("missing_values: j must be >= 1");
    const auto present = presence(p);
    std::vector<int> missing;
    for (int v = j; v < p.largest(); ++v) {
        if (!present[static_cast<size_t>(v)]) missing.push_back(v);
    }
    return missing;
}

int mex(const Partition& p, int j) {
    if (j < 1) throw std::invalid_argument("mex: j must be >= 1");
    const auto present = presence(p);
    int v = j;
    while (v <= p.largest() && present[static_cast<size_t>(v)]) ++v;
    return v;
}

std::optional<int> maex(const Partition& p) {
    const auto present = presence(p);
    for (int v = p.largest() - 1; v >= 1; --v) {
        if (!present[static_cast<size_t>(v)]) return v;
    }
    return std::nullopt;
}

bool is_gap_free(const Partition& p) { return missing_count(p, 1) == 0; }

bool is_gap_free(const Overpartition& p) { return missing_count(p, 1) == 0; }

int nu_d_lt_k(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("nu_d_lt_k: k must be >= 1");
    return p.largest() - nu_d_geq_k(p, k);
}

int nu_d_geq_k(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("nu_d_geq_k: k must be >= 1");
    int count = 0;
    for (const auto& [value, mult] : p.multiplicities()) {
        if (mult >= k) ++count;
    }
    return count;
}

StatRecord stat_record(const Partition& p, int j, int k) {
    StatRecord r;
    r.largest = p.largest();
    r.missing_count = missing_count(p, j);
    r.mex = mex(p, j);
    r.maex = maex(p);
    r.nu_d_lt_k = nu_d_lt_k(p, k);
    r.nu_d_geq_k = nu_d_geq_k(p, k);
    r.total_parts = p.total_parts();
    r.distinct_values = p.distinct_values();
    return r;
}

AggregateStats aggregate_stats(int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("aggregate_stats: bad arguments");
    AggregateStats agg;
    enumerate_partitions(n, [&](const Partition& p) {
        const int geq = nu_d_geq_k(p, k);
        agg.nu_D_geq_k += geq;
        agg.nu_D_lt_k += p.largest() - geq;
        agg.sigma_largest += p.largest();
        agg.total_parts += p.total_parts();
        agg.parts_not_equal_k += p.total_parts() - p.multiplicity(k);
        return true;
    });
    return agg;
}

namespace {

/* Exactly one value with multiplicity two, all others with one. */
bool one_double_pattern(const std::vector<std::pair<int, int>>& mult) {
    int doubles = 0;
    for (const auto& [value, count] : mult) {
        if (count == 2) {
            ++doubles;
        } else if (count != 1) {
            return false;
        }
    }
    return doubles == 1;
}

}  // namespace

long long exactly_one_double_count(int n) {
    long long count = 0;
    enumerate_partitions(n, [&](const Partition& p) {
        if (one_double_pattern(p.multiplicities())) ++count;
        return true;
    });
    return count;
}

long long exactly_one_double_count_over(int n) {
    long long count = 0;
    enumerate_overpartitions(n, [&](const Overpartition& p) {
        std::vector<std::pair<int, int>> mult;
        for (const auto& e : p.entries()) mult.emplace_back(e.value, e.multiplicity);
        if (one_double_pattern(mult)) ++count;
        return true;
    });
    return count;
}

}  // namespace qgap
