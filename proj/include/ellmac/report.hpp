#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "ellmac/series.hpp"

namespace ellmac {

/* Outcome of one identity check.  Serialized deterministically; wall time
 * is kept for console output only so that reports stay byte-identical
 * across runs. */
struct VerificationReport {
    std::string identity;
    std::map<std::string, std::string> params;
    int degree = 0;
    long coefficients_compared = 0;
    std::string status = "pass";  // pass | fail | error
    std::string mismatch_at;      // first mismatching monomial / sample
    std::string lhs_value;
    std::string rhs_value;
    std::string error_message;
    double wall_ms = 0;

    bool passed() const { return status == "pass"; }

    void record_mismatch(const std::string& where, const Rat& lhs, const Rat& rhs) {
        if (status == "pass") {
            status = "fail";
            mismatch_at = where;
            lhs_value = rat_text(lhs);
            rhs_value = rat_text(rhs);
        }
    }
};

inline std::string mono_text(const Ring& ring, const Mono& m) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any) os << '*';
        os << ring->names[i];
        if (m[i] > 1) os << '^' << m[i];
        any = true;
    }
    return any ? os.str() : "1";
}

inline void for_each_mono(const Ring& ring, const std::function<void(const Mono&)>& fn) {
    Mono m = ring->unit();
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long budget) {
        if (i == m.size()) {
            fn(m);
            return;
        }
        for (long e = 0; e <= budget; ++e) {
            m[i] = static_cast<std::uint32_t>(e);
            rec(i + 1, budget - e);
        }
        m[i] = 0;
    };
    rec(0, ring->degree);
}

/* Exact comparison of every coefficient up to the ring truncation. */
inline void compare_all_coefficients(const Series& lhs, const Series& rhs,
                                     VerificationReport& rep) {
    check_same_ring(lhs, rhs);
    rep.degree = lhs.ring()->degree;
    for_each_mono(lhs.ring(), [&](const Mono& m) {
        ++rep.coefficients_compared;
        Rat a = lhs.coeff(m), b = rhs.coeff(m);
        if (a != b) rep.record_mismatch(mono_text(lhs.ring(), m), a, b);
    });
}

}  // namespace ellmac
