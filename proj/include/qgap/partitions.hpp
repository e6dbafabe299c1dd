#ifndef QGAP_PARTITIONS_HPP
#define QGAP_PARTITIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qgap {

/* A partition of n: weakly decreasing positive parts. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int total_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /* (value, count) pairs, values strictly decreasing. */
    std::vector<std::pair<int, int>> multiplicities() const;
    int multiplicity(int value) const;
    int distinct_values() const;

    Partition conjugate() const;

    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
};

/* An overpartition: a partition in which the first occurrence of each
 * distinct value may be overlined. Canonical storage is one entry per
 * distinct value, values strictly decreasing. */
class Overpartition {
public:
    struct Entry {
        int value;
        int multiplicity;
        bool overlined;

        bool operator==(const Entry&) const = default;
    };

    Overpartition() = default;
    explicit Overpartition(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    int weight() const;
    int largest() const { return entries_.empty() ? 0 : entries_.front().value; }
    bool has_value(int value) const;
    int distinct_values() const { return static_cast<int>(entries_.size()); }

    /* Marks overlined values with a trailing '~', e.g. "3~+2+1". */
    std::string to_string() const;

    bool operator==(const Overpartition& o) const { return entries_ == o.entries_; }

private:
    std::vector<Entry> entries_;
};

/* Visits every partition of n exactly once in reverse-lexicographic
 * order on the part sequences (n itself first, all ones last); n = 0
 * visits the single empty partition. The visitor returns false to stop
 * early. Partitions are produced one at a time; nothing is kept. */
void enumerate_partitions(int n, const std::function<bool(const Partition&)>& visit);

/* Visits every overpartition of n exactly once: base partitions in the
 * order above, then for each base all 2^(distinct values) overline
 * choices, bit i of the choice mask overlining the i-th largest
 * distinct value. */
void enumerate_overpartitions(int n, const std::function<bool(const Overpartition&)>& visit);

/* Number of integers v with j <= v < largest part that do not occur as
 * a part ("missing integers >= j"); 0 for the empty partition. */
int missing_count(const Partition& p, int j);
int missing_count(const Overpartition& p, int j);

/* The missing integers >= j themselves, ascending. */
std::vector<int> missing_values(const Partition& p, int j);

/* Smallest integer >= j that is not a part (may exceed the largest
 * part; j for the empty partition). */
int mex(const Partition& p, int j);

/* Largest integer below the largest part that is not a part; empty for
 * gap-free partitions (that includes the empty partition). */
std::optional<int> maex(const Partition& p);

bool is_gap_free(const Partition& p);
bool is_gap_free(const Overpartition& p);

/* Number of distinct integers in [1, largest part] whose multiplicity
 * is < k (resp. >= k); the two always sum to the largest part. */
int nu_d_lt_k(const Partition& p, int k);
int nu_d_geq_k(const Partition& p, int k);

/* Bundle of the per-partition statistics. missing_count and mex are
 * taken relative to j, the nu fields relative to k; maex is absent
 * exactly when the partition is gap-free. */
struct StatRecord {
    int largest = 0;
    int missing_count = 0;
    int mex = 1;
    std::optional<int> maex;
    int nu_d_lt_k = 0;
    int nu_d_geq_k = 0;
    int total_parts = 0;
    int distinct_values = 0;
};

StatRecord stat_record(const Partition& p, int j = 1, int k = 1);

/* Per-n sums of the part-multiplicity statistics over all partitions
 * of n. sigma_largest is the sum of largest parts, total_parts the
 * total part count (equal by conjugation). */
struct AggregateStats {
    long long nu_D_lt_k = 0;
    long long nu_D_geq_k = 0;
    long long sigma_largest = 0;
    long long total_parts = 0;
    long long parts_not_equal_k = 0;
};

AggregateStats aggregate_stats(int n, int k);

/* Partitions of n in which exactly one value occurs exactly twice and
 * every other value occurs exactly once. */
long long exactly_one_double_count(int n);

/* Overpartition analogue: exactly one value occurs twice (both plain
 * or first overlined), every other value once (plain or overlined). */
long long exactly_one_double_count_over(int n);

}  // namespace qgap

#endif
