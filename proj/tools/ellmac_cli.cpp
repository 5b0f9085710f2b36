/* Command-line verifier for the exact q-series library: builds the
 * Macdonald / elliptic / non-stationary Ruijsenaars series with exact
 * rational coefficients and checks the function-level identities
 * order-by-order.  Reports are deterministic; exit code 0 means every
 * requested check passed, 1 a mismatch, 2 a build or config error. */

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ellmac/verify.hpp"

using namespace ellmac;
using ordered_json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    long N = 2;
    int D = 3;
    std::string q = "2/5", tau = "4/9", kappa0 = "5/8";
    std::string s;  // comma-separated rationals; empty = defaults
    std::uint64_t seed = 12345;
    std::string json_path, golden_path, out_path;
    std::string convention = "both";
    std::string series = "fghat-shifted";
};

ParamSet config_params(const RunConfig& cfg) {
    ParamSet p;
    p.N = cfg.N;
    p.q = rat_parse(cfg.q);
    p.tau = rat_parse(cfg.tau);
    p.kappa0 = rat_parse(cfg.kappa0);
    if (cfg.s.empty()) {
        p.s = ParamSet::default_s(cfg.N);
    } else {
        std::istringstream is(cfg.s);
        std::string tok;
        while (std::getline(is, tok, ',')) p.s.push_back(rat_parse(tok));
        if (static_cast<long>(p.s.size()) < cfg.N)
            throw param_error("need at least N spectral parameters in --s");
    }
    p.check_generic();
    return p;
}

ordered_json report_json(const VerificationReport& rep) {
    ordered_json j;
    j["identity"] = rep.identity;
    ordered_json pj = ordered_json::object();
    for (const auto& [k, v] : rep.params) pj[k] = v;
    j["params"] = pj;
    j["degree"] = rep.degree;
    j["coefficients_compared"] = rep.coefficients_compared;
    j["status"] = rep.status;
    if (!rep.mismatch_at.empty()) {
        j["mismatch_at"] = rep.mismatch_at;
        j["lhs"] = rep.lhs_value;
        j["rhs"] = rep.rhs_value;
    }
    if (!rep.error_message.empty()) j["error"] = rep.error_message;
    return j;
}

void print_report(const VerificationReport& rep) {
    std::ostringstream os;
    os << (rep.passed() ? "PASS" : (rep.status == "fail" ? "FAIL" : "ERROR")) << " "
       << rep.identity;
    for (const auto& [k, v] : rep.params)
        if (k == "n" || k == "lambda" || k == "validating" || k == "convention" ||
            k == "kappa0" || k == "parametrization")
            os << " " << k << "=" << v;
    if (rep.degree) os << " degree=" << rep.degree;
    if (rep.coefficients_compared) os << " compared=" << rep.coefficients_compared;
    if (!rep.mismatch_at.empty())
        os << " first-mismatch=" << rep.mismatch_at << " lhs=" << rep.lhs_value
           << " rhs=" << rep.rhs_value;
    if (!rep.error_message.empty()) os << " error=\"" << rep.error_message << "\"";
    os << " (" << rep.wall_ms << " ms)";
    std::cout << os.str() << "\n";
}

template <typename Fn>
VerificationReport timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = fn();
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

/* n1 with both conventions and a summary naming the validating one;
 * with convention=both the per-convention lines are informational and
 * the summary carries the verdict. */
std::vector<VerificationReport> run_n1(int D, const Rat& q, const Rat& t, const Rat& kappa,
                                       const std::string& convention) {
    std::vector<VerificationReport> reps;
    if (convention == "printed" || convention == "both")
        reps.push_back(timed([&] { return verify_n1(D, q, t, kappa, false); }));
    if (convention == "kappa-inverted" || convention == "both")
        reps.push_back(timed([&] { return verify_n1(D, q, t, kappa, true); }));
    if (convention == "both") {
        VerificationReport sum;
        sum.identity = "n1";
        sum.degree = D;
        sum.params["q"] = rat_text(q);
        sum.params["t"] = rat_text(t);
        sum.params["kappa"] = rat_text(kappa);
        bool printed_ok = reps[0].passed(), inverted_ok = reps[1].passed();
        sum.coefficients_compared =
            reps[0].coefficients_compared + reps[1].coefficients_compared;
        sum.params["validating"] = printed_ok && inverted_ok ? "both"
                                   : printed_ok              ? "printed"
                                   : inverted_ok             ? "kappa-inverted"
                                                             : "none";
        if (printed_ok == inverted_ok) {
            sum.status = "fail";
            sum.mismatch_at = "expected exactly one validating convention";
        }
        reps.push_back(sum);
    }
    return reps;
}

bool informational(const std::string& command_identity, const RunConfig& cfg,
                   const VerificationReport& rep) {
    return command_identity != rep.identity && rep.identity.rfind("n1/", 0) == 0 &&
           cfg.convention == "both";
}

std::vector<VerificationReport> run_identity(const std::string& id, const RunConfig& cfg) {
    ParamSet p = config_params(cfg);
    std::vector<VerificationReport> reps;
    auto push = [&](VerificationReport r) { reps.push_back(std::move(r)); };

    if (id == "thm-main") {
        push(timed([&] { return verify_theorem_main(cfg.N, cfg.D, p); }));
    } else if (id == "n1") {
        // N=1 context: t = tau, kappa = kappa0
        for (auto& r : run_n1(cfg.D, p.q, p.tau, p.kappa0, cfg.convention)) push(r);
    } else if (id == "eigen") {
        push(timed([&] { return verify_eigen(cfg.N, cfg.D, p.q, p.t(), p.s); }));
    } else if (id == "bispectral") {
        push(timed([&] { return verify_bispectral(cfg.N, cfg.D, p.q, p.t()); }));
    } else if (id == "poincare") {
        push(timed([&] { return verify_poincare(cfg.N, cfg.D, p.q, p.t(), p.s); }));
    } else if (id == "p-limit") {
        push(timed([&] { return verify_p_limit(cfg.N, cfg.D, p.q, p.t(), p.kappa0, p.s); }));
    } else if (id == "lemma-nek") {
        push(timed([&] { return verify_lemma_nek(50, {2, 3, 4}, cfg.seed, p.q, p.tau); }));
    } else if (id == "nek-forms") {
        push(timed([&] {
            return verify_nek_forms(cfg.D > 0 ? cfg.D : 6, rat(2, 5), rat(3, 7), rat(7, 11));
        }));
    } else if (id == "hbar-limit") {
        push(timed([&] {
            return verify_hbar_limit(4, rat(2, 3), rat(1, 5), rat(1, 7), rat(1, 11), false);
        }));
        push(timed([&] {
            return verify_hbar_limit(4, rat(2, 3), rat(1, 5), rat(1, 7), rat(1, 11), true);
        }));
    } else if (id == "spec-macdonald") {
        for (const Partition& lam : partitions_up_to(4)) {
            if (lam.length() > cfg.N) continue;
            push(timed([&] { return verify_specialization(lam, cfg.N, p.q, p.t()); }));
        }
    } else if (id == "all") {
        RunConfig c = cfg;
        auto add = [&](const std::vector<VerificationReport>& v) {
            for (const auto& r : v) reps.push_back(r);
        };
        c.N = 1, c.D = 5;
        add(run_identity("thm-main", c));
        c.N = 2, c.D = 3;
        add(run_identity("thm-main", c));
        add(run_identity("n1", c));
        c.N = 2, c.D = 4;
        add(run_identity("eigen", c));
        c.D = 3;
        add(run_identity("bispectral", c));
        c.D = 4;
        add(run_identity("poincare", c));
        c.D = 3;
        add(run_identity("p-limit", c));
        RunConfig c2 = c;
        c2.kappa0 = "3/10";  // the w=0 slice must not depend on kappa
        add(run_identity("p-limit", c2));
        push(timed([&] { return verify_lemma_nek(10, {2, 3}, cfg.seed, p.q, p.tau); }));
        c.D = 4;
        add(run_identity("nek-forms", c));
        add(run_identity("hbar-limit", c));
        c.N = 2, c.D = 3;
        add(run_identity("spec-macdonald", c));
    } else {
        throw param_error("unknown identity: " + id);
    }
    return reps;
}

/* the series a verify command naturally certifies, for --golden */
std::string primary_series_text(const std::string& id, const RunConfig& cfg) {
    ParamSet p = config_params(cfg);
    if (id == "thm-main") {
        auto ring = ring_yws(cfg.N, cfg.D);
        return series_text(f_ghat_shifted(ring, cfg.N, cfg.D, p.q, p.tau));
    }
    if (id == "eigen" || id == "poincare") {
        auto ring = ring_y(cfg.N, cfg.D);
        return series_text(f_gln_numeric(ring, cfg.N, p.q, p.t(), p.s));
    }
    if (id == "n1") {
        auto ring = make_ring({"p"}, cfg.D);
        return series_text(n1_lhs(ring, cfg.D, p.q, p.tau, p.kappa0));
    }
    if (id == "p-limit") {
        auto ring = ring_yw(cfg.N, cfg.D);
        Series s = f_ghat_p_shifted(ring, cfg.N, cfg.D, p.q, p.t(), p.kappa0, p.s);
        return series_text(slice_var_zero(s, static_cast<std::size_t>(cfg.N - 1)));
    }
    throw param_error("no primary series for identity: " + id);
}

std::string dump_series_text(const RunConfig& cfg) {
    ParamSet p = config_params(cfg);
    if (cfg.series == "fgln") {
        auto ring = ring_y(cfg.N, cfg.D);
        return series_text(f_gln_numeric(ring, cfg.N, p.q, p.t(), p.s));
    }
    if (cfg.series == "fellip") {
        auto ring = ring_yw(cfg.N, cfg.D);
        return series_text(f_ellip_numeric(ring, cfg.N, p.q, p.t(), p.s));
    }
    if (cfg.series == "fghat") {
        std::vector<std::string> names;
        for (long i = 1; i <= cfg.N; ++i) names.push_back("z" + std::to_string(i));
        auto ring = make_ring(names, cfg.D);
        return series_text(
            f_ghat_numeric(ring, cfg.N, cfg.D, p.q, p.t(), rat_pow(p.kappa0, cfg.N), p.s));
    }
    if (cfg.series == "fghat-shifted") {
        auto ring = ring_yws(cfg.N, cfg.D);
        return series_text(f_ghat_shifted(ring, cfg.N, cfg.D, p.q, p.tau));
    }
    if (cfg.series == "prefactor-c") {
        auto ring = ring_yws(cfg.N, cfg.D);
        return series_text(prefactor_C(ring, cfg.N, p.q, p.t()));
    }
    throw param_error("unknown series: " + cfg.series);
}

int compare_golden(const std::string& text, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open golden file: " << path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str() != text) {
        std::cout << "FAIL golden mismatch against " << path << "\n";
        return 1;
    }
    std::cout << "PASS golden match " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for Macdonald / elliptic / non-stationary Ruijsenaars series"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string identity;

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--n", cfg.N, "rank N");
        cmd->add_option("--degree", cfg.D, "truncation degree");
        cmd->add_option("--q", cfg.q, "q as num/den");
        cmd->add_option("--tau", cfg.tau, "tau (t = tau^N) as num/den");
        cmd->add_option("--kappa0", cfg.kappa0, "kappa0 (kappa = kappa0^N) as num/den");
        cmd->add_option("--s", cfg.s, "comma-separated spectral parameters");
        cmd->add_option("--seed", cfg.seed, "seed for sampled-partition checks");
        cmd->add_option("--json", cfg.json_path, "write the JSON report here");
        cmd->add_option("--golden", cfg.golden_path, "compare against a stored series file");
    };

    CLI::App* verify = app.add_subcommand("verify", "run an identity check");
    verify
        ->add_option("identity", identity,
                     "thm-main|n1|eigen|bispectral|poincare|p-limit|lemma-nek|"
                     "nek-forms|hbar-limit|spec-macdonald|all")
        ->required();
    add_common(verify);
    verify->add_option("--convention", cfg.convention, "printed|kappa-inverted|both")
        ->check(CLI::IsMember({"printed", "kappa-inverted", "both"}));

    CLI::App* dump = app.add_subcommand("dump", "emit a series in canonical text form");
    dump->add_option("--series", cfg.series, "fgln|fellip|fghat|fghat-shifted|prefactor-c");
    dump->add_option("--out", cfg.out_path, "output path (default stdout)");
    add_common(dump);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            auto reports = run_identity(identity, cfg);
            for (const auto& r : reports) print_report(r);

            ordered_json out;
            out["schema"] = "ellmac-report/1";
            out["command"] = "verify " + identity;
            bool any_fail = false, any_error = false;
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) {
                arr.push_back(report_json(r));
                if (r.status == "error") any_error = true;
                if (r.status == "fail" && !informational(identity, cfg, r)) any_fail = true;
            }
            out["status"] = any_error ? "error" : (any_fail ? "fail" : "pass");
            out["reports"] = arr;

            if (!cfg.json_path.empty()) {
                std::ofstream jf(cfg.json_path, std::ios::binary);
                jf << out.dump(2) << "\n";
            }

            int rc = any_error ? 2 : (any_fail ? 1 : 0);
            if (!cfg.golden_path.empty() && rc == 0)
                rc = compare_golden(primary_series_text(identity, cfg), cfg.golden_path);
            return rc;
        }

        if (dump->parsed()) {
            std::string text = dump_series_text(cfg);
            if (!cfg.out_path.empty()) {
                std::ofstream of(cfg.out_path, std::ios::binary);
                of << text;
            } else if (cfg.golden_path.empty()) {
                std::cout << text;
            }
            if (!cfg.golden_path.empty()) return compare_golden(text, cfg.golden_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
