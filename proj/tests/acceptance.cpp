/* Acceptance suite: runs every identity check at full scale and prints
 * one PASS/FAIL line per criterion.  Everything is exact
 * (zero-tolerance equality); the stated wall-clock bounds are asserted
 * as well. */

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "ellmac/verify.hpp"

using namespace ellmac;

namespace {

int failures = 0;

void line(int idx, const std::string& desc, bool ok, double sec, double budget_sec) {
    bool in_time = sec < budget_sec;
    std::printf("%s criterion-%02d %s (%.2f s, budget %.0f s)\n",
                ok && in_time ? "PASS" : "FAIL", idx, desc.c_str(), sec, budget_sec);
    if (!ok || !in_time) ++failures;
    std::fflush(stdout);
}

template <typename Fn>
void run(int idx, const std::string& desc, double budget_sec, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        note = e.what();
        ok = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    double sec = std::chrono::duration<double>(t1 - t0).count();
    line(idx, desc + (note.empty() ? "" : " [" + note + "]"), ok, sec, budget_sec);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main() {
    Rat q25 = rat(2, 5), t37 = rat(3, 7), u711 = rat(7, 11);
    ParamSet p2 = ParamSet::defaults(2), p3 = ParamSet::defaults(3);

    run(1, "Nekrasov dual-form equality, |lambda|,|mu| <= 6", 10, [&] {
        return verify_nek_forms(6, q25, t37, u711).passed();
    });

    run(2, "c c' product identity, |lambda| <= 10", 10, [&] {
        for (const Partition& lam : partitions_up_to(10)) {
            Rat lhs = c_factor(lam, q25, t37) * cprime_factor(lam, q25, t37);
            Rat sign = (lam.size() % 2) ? Rat(-1) : Rat(1);
            Rat rhs = sign * rat_pow(q25, n_lambda(lam.conjugate()) + lam.size()) *
                      rat_pow(t37, n_lambda(lam)) * nekrasov(lam, lam, Rat(1), q25, t37);
            if (lhs != rhs) return false;
        }
        return true;
    });

    run(3, "cyclic-slice Nekrasov identity, 50 seeded samples, N in {2,3,4}", 60, [&] {
        return verify_lemma_nek(50, {2, 3, 4}, 12345, q25, rat(4, 9)).passed();
    });

    run(4, "eigen-equation residual, N=2 D=5 and N=3 D=4", 120, [&] {
        return verify_eigen(2, 5, p2.q, p2.t(), p2.s).passed() &&
               verify_eigen(3, 4, p3.q, p3.t(), p3.s).passed();
    });

    run(5, "bispectral duality, N=2 D=4 and N=3 D=3", 300, [&] {
        return verify_bispectral(2, 4, p2.q, p2.t()).passed() &&
               verify_bispectral(3, 3, p3.q, p3.t()).passed();
    });

    run(6, "Poincare duality, N=2 D=5 and N=3 D=4", 120, [&] {
        return verify_poincare(2, 5, p2.q, p2.t(), p2.s).passed() &&
               verify_poincare(3, 4, p3.q, p3.t(), p3.s).passed();
    });

    run(7, "specialization to Macdonald polynomials, N in {2,3}, |lambda| <= 4", 120, [&] {
        for (long N : {2L, 3L}) {
            ParamSet p = ParamSet::defaults(N);
            for (const Partition& lam : partitions_up_to(4)) {
                if (lam.length() > N) continue;
                if (!verify_specialization(lam, N, p.q, p.t()).passed()) return false;
            }
        }
        return true;
    });

    run(8, "main transformation, N=1 D=6, N=2 D=4, N=3 D=3", 900, [&] {
        ParamSet p1 = ParamSet::defaults(1);
        return verify_theorem_main(1, 6, p1).passed() &&
               verify_theorem_main(2, 4, p2).passed() &&
               verify_theorem_main(3, 3, p3).passed();
    });

    run(9, "N=1 summation formula: exactly one kappa convention through p^6", 60, [&] {
        struct Triple {
            Rat q, t, kappa;
        };
        for (const Triple& tr : {Triple{rat(2, 1), rat(3, 1), rat(5, 1)},
                                 Triple{rat(2, 5), rat(4, 9), rat(5, 8)},
                                 Triple{rat(3, 7), rat(7, 11), rat(2, 9)}}) {
            bool printed = verify_n1(6, tr.q, tr.t, tr.kappa, false).passed();
            bool inverted = verify_n1(6, tr.q, tr.t, tr.kappa, true).passed();
            // desk evidence predicts the kappa-inverted reading
            if (printed || !inverted) return false;
        }
        return true;
    });

    run(10, "p->0 limit slice, N in {2,3}, D=4, two distinct kappa0", 300, [&] {
        for (long N : {2L, 3L}) {
            ParamSet p = ParamSet::defaults(N);
            for (const Rat& k0 : {rat(5, 8), rat(3, 10)})
                if (!verify_p_limit(N, 4, p.q, p.t(), k0, p.s).passed()) return false;
        }
        return true;
    });

    run(11, "conformal limit to Z_bif, all pairs with total size <= 4", 120, [&] {
        Rat b = rat(2, 3), P = rat(1, 5), Pp = rat(1, 7), al = rat(1, 11);
        return verify_hbar_limit(4, b, P, Pp, al, false).passed() &&
               verify_hbar_limit(4, b, P, Pp, al, true).passed();
    });

    run(12, "determinism: verify all and series dumps byte-identical across runs", 120, [&] {
#ifdef ELLMAC_CLI_PATH
        std::string cli = ELLMAC_CLI_PATH;
        auto sh = [&](const std::string& cmd) { return std::system(cmd.c_str()) == 0; };
        std::string base = "acceptance_det";
        for (int run = 1; run <= 2; ++run) {
            std::string sfx = std::to_string(run);
            if (!sh(cli + " verify all --seed 12345 --json " + base + "_all" + sfx +
                    ".json > " + base + "_console" + sfx + ".txt"))
                return false;
            if (!sh(cli + " dump --series fghat-shifted --n 2 --degree 3 --out " + base +
                    "_ghat" + sfx + ".txt"))
                return false;
            if (!sh(cli + " dump --series fgln --n 3 --degree 4 --out " + base + "_gln" + sfx +
                    ".txt"))
                return false;
        }
        std::string a = slurp(base + "_all1.json"), b = slurp(base + "_all2.json");
        if (a.empty() || a != b) return false;
        if (slurp(base + "_ghat1.txt") != slurp(base + "_ghat2.txt")) return false;
        if (slurp(base + "_gln1.txt").empty() ||
            slurp(base + "_gln1.txt") != slurp(base + "_gln2.txt"))
            return false;
        return true;
#else
        return false;
#endif
    });

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
