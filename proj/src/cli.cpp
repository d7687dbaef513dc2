#include "qfano/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "qfano/io.hpp"

namespace qfano::cli {

namespace {

using io::Json;

struct Common {
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
    ScanOptions scan() const { return {budget, jobs}; }
};

// "@name" addresses an embedded fixture: one of the toric fixtures, or
// @kronecker:M, @subspace:M, @thickened:M,K. Anything else is a JSON file path.
Quiver load_quiver(const std::string& source) {
    if (!source.empty() && source.front() == '@') {
        const std::string name = source.substr(1);
        if (auto fixture = find_toric_fixture(name)) return fixture->spec.to_quiver();
        const auto colon = name.find(':');
        if (colon != std::string::npos) {
            const std::string family = name.substr(0, colon);
            const std::vector<Int> params = io::parse_int_list(name.substr(colon + 1));
            auto narrow = [](Int v) {
                if (v < 1 || v > 100'000) throw ParseError("fixture parameter out of range");
                return static_cast<int>(v);
            };
            if (family == "kronecker" && params.size() == 1) return kronecker_quiver(narrow(params[0]));
            if (family == "subspace" && params.size() == 1) return subspace_quiver(narrow(params[0]));
            if (family == "thickened" && params.size() == 2) {
                return thickened_quiver(narrow(params[0]), narrow(params[1]));
            }
        }
        throw ParseError("unknown fixture '" + source + "'");
    }
    std::ifstream in(source);
    if (!in) throw ParseError("cannot open quiver file '" + source + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return io::parse_quiver(buffer.str());
}

DimVector dim_arg(const std::optional<std::string>& text, const Quiver& q) {
    if (!text) return DimVector::ones(static_cast<std::size_t>(q.vertex_count()));
    std::vector<Int> v = io::parse_int_list(*text);
    if (v.size() != static_cast<std::size_t>(q.vertex_count())) {
        throw ParseError("dimension vector has " + std::to_string(v.size()) + " entries, quiver has " +
                         std::to_string(q.vertex_count()) + " vertices");
    }
    for (Int x : v) {
        if (x < 0) throw ParseError("dimension vector entries must be nonnegative");
    }
    return DimVector(std::move(v));
}

Stability stability_arg(const std::string& text, const DimVector& d) {
    std::vector<Int> v = io::parse_int_list(text);
    if (v.size() != d.size()) throw ParseError("stability length does not match dimension vector");
    LinearForm theta(std::move(v));
    if (theta(d) != 0) throw ParseError("stability " + text + " does not vanish on d");
    return Stability(std::move(theta), d);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int exit_code(FanoStatus s) {
    switch (s) {
        case FanoStatus::Certified: return kExitOk;
        case FanoStatus::NotCoprime: return kExitNotCoprime;
        case FanoStatus::Inconclusive: return kExitInconclusive;
    }
    return kExitError;
}

bool matches(const FanoCertificate& cert, const LinearForm& theta, Int dim, Int rank, Int index, bool fano) {
    return cert.canonical_theta == theta && cert.dimension == dim && cert.picard_rank == rank &&
           cert.index == index && (cert.status == FanoStatus::Certified) == fano;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fano certificates and invariants for quiver moduli"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--budget", common.budget, "Maximum number of vectors an enumeration may visit")
        ->envname("QFL_BUDGET");
    app.add_option("--jobs", common.jobs, "Worker threads for scans (output is identical for any value)")
        ->check(CLI::Range(1u, 1024u));

    std::function<int()> action;

    // certify
    std::string quiver_source;
    std::optional<std::string> dim_text;
    auto* certify = app.add_subcommand("certify", "Run the Fano certificate on a quiver and dimension vector");
    certify->add_option("quiver", quiver_source, "Quiver JSON file or @fixture")->required();
    certify->add_option("-d,--dim", dim_text, "Dimension vector, comma separated (default all ones)");
    certify->callback([&] {
        action = [&] {
            const Quiver q = load_quiver(quiver_source);
            const FanoCertificate cert = certify_fano(q, dim_arg(dim_text, q), common.scan());
            emit(out, io::to_json(cert));
            return exit_code(cert.status);
        };
    });

    // family
    std::string family_name;
    int fam_m = 0;
    int fam_k = 1;
    Int fam_d = 1;
    Int fam_e = 1;
    auto* family = app.add_subcommand("family", "Compare a family's closed forms with the live certificate");
    family->add_option("name", family_name, "subspace | kronecker | thickened")->required();
    family->add_option("-m", fam_m, "Number of sources / arrows")->required();
    family->add_option("-k", fam_k, "Arrow thickness (thickened)");
    family->add_option("-d", fam_d, "Sink dimension (subspace, thickened) or source dimension (kronecker)");
    family->add_option("-e", fam_e, "Sink dimension (kronecker)");
    family->callback([&] {
        action = [&]() -> int {
            Json report;
            report["family"] = family_name;
            bool agree = false;
            if (family_name == "subspace") {
                const SubspacePrediction p = subspace_predict(fam_m, fam_d);
                const FanoCertificate c =
                    certify_fano(subspace_quiver(fam_m), subspace_dim(fam_m, fam_d), common.scan());
                agree = matches(c, p.theta, p.dimension, p.picard_rank, p.index, p.fano_expected);
                report["params"] = {{"m", fam_m}, {"d", fam_d}};
                report["prediction"] = io::to_json(p);
                report["certificate"] = io::to_json(c);
            } else if (family_name == "kronecker") {
                const KroneckerPrediction p = kronecker_predict(fam_m, fam_d, fam_e);
                const FanoCertificate c =
                    certify_fano(kronecker_quiver(fam_m), DimVector{fam_d, fam_e}, common.scan());
                agree = matches(c, p.theta, p.dimension, p.picard_rank, p.index, p.fano_expected);
                report["params"] = {{"m", fam_m}, {"d", fam_d}, {"e", fam_e}};
                report["prediction"] = io::to_json(p);
                report["certificate"] = io::to_json(c);
            } else if (family_name == "thickened") {
                const ThickenedPrediction p = thickened_predict(fam_m, fam_k, fam_d);
                const FanoCertificate c =
                    certify_fano(thickened_quiver(fam_m, fam_k), subspace_dim(fam_m, fam_d), common.scan());
                agree = matches(c, p.theta, p.dimension, p.picard_rank, p.index, !p.excluded);
                report["params"] = {{"m", fam_m}, {"k", fam_k}, {"d", fam_d}};
                report["prediction"] = io::to_json(p);
                report["certificate"] = io::to_json(c);
            } else {
                throw ParseError("unknown family '" + family_name + "'");
            }
            report["agree"] = agree;
            emit(out, report);
            return agree ? kExitOk : kExitMismatch;
        };
    });

    // toric-enumerate
    int toric_n = 3;
    Int toric_max = 4;
    auto* toric = app.add_subcommand("toric-enumerate", "Catalog toric Fano quiver moduli up to relabeling");
    toric->add_option("-n", toric_n, "Number of vertices")->required();
    toric->add_option("--max-arrows", toric_max, "Upper bound on the total number of arrows")->required();
    toric->callback([&] {
        action = [&] {
            emit(out, io::catalog_to_json(enumerate_toric_fano(toric_n, toric_max, common.scan())));
            return kExitOk;
        };
    });

    // chambers
    std::string chamber_quiver;
    std::optional<std::string> chamber_dim;
    std::optional<std::string> theta1_text;
    std::optional<std::string> theta2_text;
    auto* chambers = app.add_subcommand("chambers", "Chamber membership and same-chamber test");
    chambers->add_option("quiver", chamber_quiver, "Quiver JSON file or @fixture")->required();
    chambers->add_option("-d,--dim", chamber_dim, "Dimension vector (default all ones)");
    chambers->add_option("--theta", theta1_text, "Stability (default: canonical stability)");
    chambers->add_option("--theta2", theta2_text, "Second stability for the same-chamber test");
    chambers->callback([&] {
        action = [&] {
            const Quiver q = load_quiver(chamber_quiver);
            const DimVector d = dim_arg(chamber_dim, q);
            const Stability t1 = theta1_text ? stability_arg(*theta1_text, d) : canonical_stability(q, d);
            const SignVector signs = sign_vector(t1, common.scan());
            Json report;
            report["d"] = io::to_json(d);
            report["theta"] = io::to_json(t1.theta());
            report["in_chamber_interior"] = !signs.has_zero();
            report["sign_vector"] = io::to_json(signs);
            if (theta2_text) {
                const Stability t2 = stability_arg(*theta2_text, d);
                report["theta2"] = io::to_json(t2.theta());
                report["same_chamber"] = same_chamber(t1, t2, common.scan());
            }
            emit(out, report);
            return kExitOk;
        };
    });

    // checks
    std::string check_name;
    int check_m = 3;
    Int check_bound = 12;
    int check_max_m = 5;
    int check_max_k = 5;
    auto* checks = app.add_subcommand("checks", "Numeric property scans (kronecker-min-dim, mukai)");
    checks->add_option("name", check_name, "kronecker-min-dim | mukai")->required();
    checks->add_option("-m", check_m, "Number of Kronecker arrows (kronecker-min-dim)");
    checks->add_option("--bound", check_bound, "Upper bound on d, e (kronecker-min-dim)");
    checks->add_option("--max-m", check_max_m, "Largest m scanned (mukai)");
    checks->add_option("--max-k", check_max_k, "Largest k scanned (mukai)");
    checks->callback([&] {
        action = [&]() -> int {
            if (check_name == "kronecker-min-dim") {
                const KroneckerMinDimReport r = kronecker_min_dim_check(check_m, check_bound);
                emit(out, io::to_json(r));
                return r.pass ? kExitOk : kExitMismatch;
            }
            if (check_name == "mukai") {
                Json failures = Json::array();
                std::size_t cases = 0;
                for (int m = 1; m <= check_max_m; ++m) {
                    for (int k = 1; k <= check_max_k; ++k) {
                        for (Int d = 1; d <= Int{k} * m - 1; ++d) {
                            if (gcd(m, d) != 1) continue;
                            ++cases;
                            const MukaiReport r = mukai_check(m, k, d);
                            if (!r.holds || r.equality != r.equality_expected) {
                                Json f = io::to_json(r);
                                f["m"] = m;
                                f["k"] = k;
                                f["d"] = d;
                                failures.push_back(std::move(f));
                            }
                        }
                    }
                }
                Json report;
                report["max_m"] = check_max_m;
                report["max_k"] = check_max_k;
                report["cases"] = cases;
                report["failures"] = failures;
                report["pass"] = failures.empty();
                emit(out, report);
                return failures.empty() ? kExitOk : kExitMismatch;
            }
            throw ParseError("unknown check '" + check_name + "'");
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitError;
    }

    try {
        return action();
    } catch (const BudgetExceeded& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitError;
    }
}

}  // namespace qfano::cli
