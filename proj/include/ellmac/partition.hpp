#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ellmac/rational.hpp"

namespace ellmac {

/* Partition: weakly decreasing positive parts, stored without trailing
 * zeros.  Index access beyond the stored length reads 0, matching the
 * infinite-tail convention lambda = (lambda_1, lambda_2, ...). */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                throw param_error("not weakly decreasing: " + to_string());
        }
    }

    /* 1-based part access; 0 outside the diagram. */
    long part(long i) const {
        if (i < 1 || static_cast<std::size_t>(i) > parts_.size()) return 0;
        return parts_[static_cast<std::size_t>(i) - 1];
    }

    long length() const { return static_cast<long>(parts_.size()); }

    long size() const {
        long s = 0;
        for (long p : parts_) s += p;
        return s;
    }

    bool empty() const { return parts_.empty(); }

    const std::vector<long>& parts() const { return parts_; }

    Partition conjugate() const {
        std::vector<long> c;
        if (!parts_.empty()) {
            c.resize(static_cast<std::size_t>(parts_[0]));
            for (long j = 1; j <= parts_[0]; ++j) {
                long count = 0;
                for (long p : parts_)
                    if (p >= j) ++count;
                c[static_cast<std::size_t>(j) - 1] = count;
            }
        }
        return Partition(std::move(c));
    }

    /* lambda subset mu :<=> lambda_i <= mu_i for all i. */
    bool subset_of(const Partition& mu) const {
        for (long i = 1; i <= length(); ++i)
            if (part(i) > mu.part(i)) return false;
        return true;
    }

    /* Text form "3,2,1"; the empty partition is "-". */
    std::string to_string() const {
        if (parts_.empty()) return "-";
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    static Partition parse(const std::string& text) {
        if (text == "-" || text.empty()) return Partition();
        std::vector<long> parts;
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) parts.push_back(std::stol(tok));
        return Partition(std::move(parts));
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<long> parts_;
};

/* Arm and leg of the cell (i,j) relative to lambda; cells outside the
 * diagram are allowed and give negative values. */
inline long arm(const Partition& lam, long i, long j) { return lam.part(i) - j; }

inline long leg(const Partition& lam, long i, long j) { return lam.conjugate().part(j) - i; }

/* n(lambda) = sum_i (i-1) lambda_i */
inline long n_lambda(const Partition& lam) {
    long s = 0;
    for (long i = 1; i <= lam.length(); ++i) s += (i - 1) * lam.part(i);
    return s;
}

/* c_lambda = prod_{(i,j) in lambda} (1 - q^{arm} t^{leg+1}) */
inline Rat c_factor(const Partition& lam, const Rat& q, const Rat& t) {
    Rat acc(1);
    Partition conj = lam.conjugate();
    for (long i = 1; i <= lam.length(); ++i)
        for (long j = 1; j <= lam.part(i); ++j)
            acc *= Rat(1) - rat_pow(q, lam.part(i) - j) * rat_pow(t, conj.part(j) - i + 1);
    return acc;
}

/* c'_lambda = prod_{(i,j) in lambda} (1 - q^{arm+1} t^{leg}) */
inline Rat cprime_factor(const Partition& lam, const Rat& q, const Rat& t) {
    Rat acc(1);
    Partition conj = lam.conjugate();
    for (long i = 1; i <= lam.length(); ++i)
        for (long j = 1; j <= lam.part(i); ++j)
            acc *= Rat(1) - rat_pow(q, lam.part(i) - j + 1) * rat_pow(t, conj.part(j) - i);
    return acc;
}

/* f_lambda = (-1)^{|lambda|} q^{n(lambda')} t^{-n(lambda)} (q/t)^{|lambda|/2}.
 * For odd |lambda| the half-integer power needs q/t to be an exact rational
 * square; otherwise the value leaves the rationals. */
inline Rat f_factor(const Partition& lam, const Rat& q, const Rat& t) {
    long sz = lam.size();
    Rat val = rat_pow(q, n_lambda(lam.conjugate())) * rat_pow(t, -n_lambda(lam));
    if (sz % 2 == 0) {
        val *= rat_pow(q / t, sz / 2);
    } else {
        auto root = rat_sqrt(q / t);
        if (!root) throw param_error("f_factor: q/t is not a rational square and |lambda| is odd");
        val *= rat_pow(*root, sz);
    }
    return (sz % 2 ? -val : val);
}

/* |lambda|^{(i)} = sum of lambda_j over j = i+1 (mod N) */
inline long cyclic_weight(const Partition& lam, long i, long N) {
    long s = 0;
    for (long j = 1; j <= lam.length(); ++j)
        if (((j - i - 1) % N + N) % N == 0) s += lam.part(j);
    return s;
}

namespace detail {
inline void emit_partitions_of(long n, long max_part, std::vector<long>& stack,
                               const std::function<void(const Partition&)>& fn) {
    if (n == 0) {
        fn(Partition(std::vector<long>(stack)));
        return;
    }
    for (long p = std::min(n, max_part); p >= 1; --p) {
        stack.push_back(p);
        emit_partitions_of(n - p, p, stack, fn);
        stack.pop_back();
    }
}
}  // namespace detail

/* Partitions of exactly n, in descending lexicographic order:
 * (n), (n-1,1), ..., (1,...,1). */
inline void enumerate_partitions_of(long n, const std::function<void(const Partition&)>& fn) {
    std::vector<long> stack;
    detail::emit_partitions_of(n, n, stack, fn);
}

/* All partitions with |lambda| <= max_size, ordered by size then
 * descending lexicographic.  Deterministic order fixes golden files. */
inline void enumerate_partitions(long max_size, const std::function<void(const Partition&)>& fn) {
    for (long n = 0; n <= max_size; ++n) enumerate_partitions_of(n, fn);
}

inline std::vector<Partition> partitions_up_to(long max_size) {
    std::vector<Partition> out;
    enumerate_partitions(max_size, [&](const Partition& p) { out.push_back(p); });
    return out;
}

inline std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    enumerate_partitions_of(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

namespace detail {
inline void emit_tuples(long slot, long N, long remaining, std::vector<Partition>& acc,
                        const std::function<void(const std::vector<Partition>&)>& fn) {
    if (slot == N) {
        if (remaining == 0) fn(acc);
        return;
    }
    long lo = (slot == N - 1) ? remaining : 0;
    for (long sz = remaining; sz >= lo; --sz) {
        for (const Partition& p : partitions_of(sz)) {
            acc[static_cast<std::size_t>(slot)] = p;
            emit_tuples(slot + 1, N, remaining - sz, acc, fn);
        }
    }
}
}  // namespace detail

/* N-tuples with total size <= max_total; earlier slots take larger sizes
 * first, each slot in the partitions_of order. */
inline void enumerate_tuples(long N, long max_total,
                             const std::function<void(const std::vector<Partition>&)>& fn) {
    std::vector<Partition> acc(static_cast<std::size_t>(N));
    for (long total = 0; total <= max_total; ++total) detail::emit_tuples(0, N, total, acc, fn);
}

inline std::vector<std::vector<Partition>> partition_tuples(long N, long max_total) {
    std::vector<std::vector<Partition>> out;
    enumerate_tuples(N, max_total, [&](const std::vector<Partition>& t) { out.push_back(t); });
    return out;
}

inline long tuple_size(const std::vector<Partition>& tup) {
    long s = 0;
    for (const Partition& p : tup) s += p.size();
    return s;
}

}  // namespace ellmac
