#include "ratdec/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratdec/bounds.hpp"
#include "ratdec/decomp.hpp"
#include "ratdec/hypergraph.hpp"
#include "ratdec/johnson.hpp"

namespace ratdec::cli {

namespace {

std::string subset_str(const std::vector<int>& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
}

struct Options {
    std::string input;
    std::string cert;
    std::string output;
    std::string epsilon;
    int t = 0, k = 0, v = 0;
    std::uint64_t seed = 1;
    bool json = false;
    bool sweep = false;
};

int cmd_decompose(const Options& opt, std::ostream& out) {
    const TGraph g = read_tg_file(opt.input);
    const SolveOutcome oc = solve_decomposition(g, opt.k);

    const bool solved = oc.status == SolveStatus::positive || oc.status == SolveStatus::positive_with_zeros;
    std::size_t items = 0;
    if (solved) {
        const DecompositionCertificate cert = expand_certificate(g, opt.k, oc.x);
        const VerifyResult vr = verify_certificate(g, cert);
        if (!vr.ok)
            throw std::logic_error("solver produced a certificate the verifier rejects: " + vr.message);
        write_certificate_file(opt.output, cert);
        items = cert.items.size();
    }

    if (opt.json) {
        nlohmann::json j;
        j["status"] = to_string(oc.status);
        if (oc.witness) j["witness"] = g.unrank(*oc.witness);
        if (solved) {
            j["items"] = items;
            j["output"] = opt.output;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "status: " << to_string(oc.status) << "\n";
        if (oc.witness) {
            const char* label = oc.status == SolveStatus::no_cover ? "uncovered edge"
                                : oc.status == SolveStatus::has_negative ? "negative coordinate at edge"
                                                                         : "zero coordinate at edge";
            out << label << ": " << subset_str(g.unrank(*oc.witness)) << "\n";
        }
        if (solved)
            out << "certificate: " << items << " cliques of size " << opt.k << ", written to " << opt.output
                << "\n";
    }
    return solved ? kExitSuccess : kExitVerifiedFailure;
}

int cmd_spectrum(const Options& opt, std::ostream& out) {
    if (opt.sweep) {
        const int lo = std::max(opt.k, 2 * opt.t);
        for (int vv = lo; vv <= opt.v; ++vv) {
            if (check_theta_order(JohnsonParams(opt.t, opt.k, vv))) {
                if (opt.json) {
                    nlohmann::json j;
                    j["t"] = opt.t;
                    j["k"] = opt.k;
                    j["min_ordered_v"] = vv;
                    out << j.dump(2) << "\n";
                } else {
                    out << "minimal v with strict theta ordering for t=" << opt.t << " k=" << opt.k << ": "
                        << vv << "\n";
                }
                return kExitSuccess;
            }
        }
        if (opt.json) {
            nlohmann::json j;
            j["t"] = opt.t;
            j["k"] = opt.k;
            j["min_ordered_v"] = nullptr;
            out << j.dump(2) << "\n";
        } else {
            out << "no strictly ordered v in [" << lo << ", " << opt.v << "] for t=" << opt.t
                << " k=" << opt.k << "\n";
        }
        return kExitSuccess;
    }

    const JohnsonParams p(opt.t, opt.k, opt.v);
    const SpectrumTable s = compute_spectrum(p);
    bool ordered = true;
    for (std::size_t j = 0; j + 1 < s.theta.size(); ++j)
        if (!(s.theta[j] > s.theta[j + 1])) ordered = false;

    const RootIsolation iso = isolate_R_roots(s);
    const Rat half = Rat(s.theta.back()) / 2;

    if (opt.json) {
        nlohmann::json j;
        j["t"] = opt.t;
        j["k"] = opt.k;
        j["v"] = opt.v;
        j["n"] = to_string(s.n);
        j["theta"] = nlohmann::json::array();
        j["mult"] = nlohmann::json::array();
        for (std::size_t i = 0; i < s.theta.size(); ++i) {
            j["theta"].push_back(to_string(s.theta[i]));
            j["mult"].push_back(to_string(s.mult[i]));
        }
        j["ordered"] = ordered;
        j["degenerate_k_equals_t"] = (opt.k == opt.t);
        if (ordered && iso.status == RootIsolation::Status::ordered) {
            j["psi_half_theta_t"] = to_string(psi_eval(s, half));
            j["isolation"]["status"] = "ordered";
            j["isolation"]["all_exceed_half_theta_t"] = iso.all_exceed_half_theta_t;
            j["isolation"]["intervals"] = nlohmann::json::array();
            for (const auto& [a, b] : iso.intervals)
                j["isolation"]["intervals"].push_back({to_string(a), to_string(b)});
        } else {
            j["isolation"]["status"] = "degenerate";
        }
        out << j.dump(2) << "\n";
        return kExitSuccess;
    }

    out << "Johnson scheme spectrum, t=" << opt.t << " k=" << opt.k << " v=" << opt.v
        << " (n = " << to_string(s.n) << ")\n";
    std::size_t wt = 7, wm = 3;
    for (std::size_t i = 0; i < s.theta.size(); ++i) {
        wt = std::max(wt, to_string(s.theta[i]).size());
        wm = std::max(wm, to_string(s.mult[i]).size());
    }
    out << "  j  " << std::left << std::setw(static_cast<int>(wt)) << "theta_j" << "  m_j\n";
    for (std::size_t i = 0; i < s.theta.size(); ++i)
        out << "  " << i << "  " << std::left << std::setw(static_cast<int>(wt)) << to_string(s.theta[i])
            << "  " << to_string(s.mult[i]) << "\n";

    if (opt.k == opt.t) out << "note: degenerate parameters (k = t): M = I and all theta_j coincide\n";
    out << "theta ordering theta_t < ... < theta_0: " << (ordered ? "strict" : "FAILED (degenerate)") << "\n";
    if (ordered && iso.status == RootIsolation::Status::ordered) {
        out << "psi(theta_t/2) = psi(" << to_string(half) << ") = " << to_string(psi_eval(s, half)) << "\n";
        out << "roots of det(xI - R): " << iso.intervals.size() << " isolated, all > theta_t/2: "
            << (iso.all_exceed_half_theta_t ? "yes" : "no") << "\n";
        for (std::size_t i = 0; i < iso.intervals.size(); ++i)
            out << "  root " << (i + 1) << " in [" << to_string(iso.intervals[i].first) << ", "
                << to_string(iso.intervals[i].second) << "]\n";
    } else {
        out << "root isolation: degenerate (skipped)\n";
    }
    return kExitSuccess;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const TGraph g = read_tg_file(opt.input);
    const DecompositionCertificate cert = read_certificate_file(opt.cert);
    const VerifyResult vr = verify_certificate(g, cert);
    if (opt.json) {
        nlohmann::json j;
        j["ok"] = vr.ok;
        if (!vr.ok) {
            j["message"] = vr.message;
            if (vr.witness) j["witness"] = *vr.witness;
        }
        out << j.dump(2) << "\n";
    } else if (vr.ok) {
        out << "verification: ok (" << cert.items.size() << " cliques, exact coverage 1)\n";
    } else {
        out << "verification: FAILED: " << vr.message << "\n";
    }
    return vr.ok ? kExitSuccess : kExitVerifiedFailure;
}

int cmd_bounds(const Options& opt, std::ostream& out) {
    const TGraph g = read_tg_file(opt.input);
    const BoundReport r = bound_report(g, opt.k);

    if (opt.json) {
        nlohmann::json j;
        j["t"] = r.t;
        j["k"] = r.k;
        j["v"] = r.v;
        j["epsilon"] = to_string(r.eps);
        j["delta_norm"] = to_string(r.delta_norm);
        j["analytic_bound"] = to_string(r.analytic_bound);
        j["theta_t"] = to_string(r.theta_t);
        j["threshold"] = to_string(r.threshold);
        j["norm_below_half_theta_t"] = r.norm_below_half_theta_t;
        j["eps_below_threshold"] = r.eps_below_threshold;
        out << j.dump(2) << "\n";
        return kExitSuccess;
    }

    out << "bound report, t=" << r.t << " k=" << r.k << " v=" << r.v << "\n";
    out << "  epsilon                    " << to_string(r.eps) << "\n";
    out << "  ||Delta M||_inf            " << to_string(r.delta_norm) << "\n";
    out << "  analytic bound (leading)   " << to_string(r.analytic_bound) << "\n";
    out << "  theta_t                    " << to_string(r.theta_t) << "\n";
    out << "  threshold 1/(2 C(k,t)^2)   " << to_string(r.threshold) << "\n";
    out << "  ||Delta M|| < theta_t/2    " << (r.norm_below_half_theta_t ? "yes" : "no") << "\n";
    out << "  epsilon < threshold        " << (r.eps_below_threshold ? "yes" : "no") << "\n";

    if (g.edge_count() > 0) {
        const std::vector<int> edge = g.unrank(g.edge_ranks().front());
        out << "clique-extension diagnostics for edge " << subset_str(edge)
            << " (exact count vs leading-order bound, display only):\n";
        out << "  i  count_a  bound_a  min_b  bound_b\n";
        for (int i = 0; i <= g.t(); ++i) {
            const ExtensionCounts c = extension_counts(g, edge, i, opt.k);
            out << "  " << i << "  " << to_string(c.count_a) << "  " << to_string(c.bound_a) << "  "
                << to_string(c.min_b) << "  " << to_string(c.bound_b) << "\n";
        }
    }
    return kExitSuccess;
}

int cmd_gen(const Options& opt, std::ostream& out) {
    const Rat eps = parse_rat(opt.epsilon);
    const TGraph g = gen_dense_random(opt.v, opt.t, eps, opt.seed);
    std::ostringstream comment;
    comment << "gen t=" << opt.t << " v=" << opt.v << " epsilon<=" << to_string(eps) << " seed=" << opt.seed;
    write_tg_file(opt.output, g, comment.str());
    const DensityMeasure d = g.density_epsilon();
    out << "wrote " << opt.output << ": " << g.edge_count() << " edges, achieved epsilon = "
        << to_string(d.epsilon) << " (target <= " << to_string(eps) << ")\n";
    return kExitSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact rational clique decompositions of dense t-graphs"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* dec = app.add_subcommand("decompose", "solve M-hat x = j and emit a verified certificate");
    dec->add_option("--input", opt.input, ".tg input path")->required();
    dec->add_option("--k", opt.k, "clique size")->required();
    dec->add_option("--output", opt.output, "certificate JSON output path")->required();
    dec->add_flag("--json", opt.json, "machine-readable status");

    CLI::App* spect = app.add_subcommand("spectrum", "Johnson-scheme eigenvalues, psi and R-root isolation");
    spect->add_option("--t", opt.t, "uniformity")->required();
    spect->add_option("--k", opt.k, "clique size")->required();
    spect->add_option("--v", opt.v, "vertex count (upper bound with --sweep)")->required();
    spect->add_flag("--json", opt.json, "machine-readable report");
    spect->add_flag("--sweep", opt.sweep, "report minimal v with strict theta ordering");

    CLI::App* ver = app.add_subcommand("verify", "independently verify a certificate against a graph");
    ver->add_option("--input", opt.input, ".tg input path")->required();
    ver->add_option("--cert", opt.cert, "certificate JSON path")->required();
    ver->add_flag("--json", opt.json, "machine-readable result");

    CLI::App* bnd = app.add_subcommand("bounds", "exact ||Delta M||_inf report with positivity flags");
    bnd->add_option("--input", opt.input, ".tg input path")->required();
    bnd->add_option("--k", opt.k, "clique size")->required();
    bnd->add_flag("--json", opt.json, "machine-readable report");

    CLI::App* gen = app.add_subcommand("gen", "generate a seeded random dense t-graph");
    gen->add_option("--v", opt.v, "vertex count")->required();
    gen->add_option("--t", opt.t, "uniformity")->required();
    gen->add_option("--epsilon", opt.epsilon, "density target as p/q")->required();
    gen->add_option("--seed", opt.seed, "RNG seed (default 1)");
    gen->add_option("--output", opt.output, ".tg output path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 wants reversed order
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (dec->parsed()) return cmd_decompose(opt, out);
        if (spect->parsed()) return cmd_spectrum(opt, out);
        if (ver->parsed()) return cmd_verify(opt, out);
        if (bnd->parsed()) return cmd_bounds(opt, out);
        if (gen->parsed()) return cmd_gen(opt, out);
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const SizeCapError& e) {
        err << "error: " << e.what() << "\n";
        return kExitSizeCap;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegenerateSpectrumError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace ratdec::cli
