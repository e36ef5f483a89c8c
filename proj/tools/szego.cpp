// Command-line front end: exact composition, root analysis, partition
// algebra, multiplier-sequence checks, and the verification suite.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "szego/error.hpp"
#include "szego/fms.hpp"
#include "szego/partitions.hpp"
#include "szego/polynomial.hpp"
#include "szego/roots.hpp"
#include "szego/text.hpp"
#include "szego/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace szego;

bool json_mode(const std::string& output) { return output == "json"; }

// --- shared input plumbing ----------------------------------------------------

struct OperandArgs {
    std::string coeffs;
    std::string roots;
};

Polynomial read_operand(const OperandArgs& args, int n, const std::string& label) {
    const bool has_coeffs = !args.coeffs.empty();
    const bool has_roots = !args.roots.empty();
    if (has_coeffs == has_roots)
        throw std::invalid_argument("compose: provide exactly one of --coeffs-" + label +
                                    " or --roots-" + label);
    if (has_coeffs) return Polynomial(parse_rational_list(args.coeffs), n);
    const std::vector<Rational> roots = parse_rational_list(args.roots);
    if (static_cast<int>(roots.size()) != n)
        throw std::invalid_argument("compose: --roots-" + label + " lists " +
                                    std::to_string(roots.size()) + " roots, expected n = " +
                                    std::to_string(n));
    return Polynomial::from_roots(roots, n);
}

ordered_json coeffs_json(const Polynomial& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(format_rational(c));
    return arr;
}

ordered_json structure_json(const MultiplicityStructure& structure) {
    ordered_json arr = ordered_json::array();
    for (const auto& entry : structure.entries()) {
        ordered_json e;
        e["lo"] = format_rational(entry.location.lo);
        e["hi"] = format_rational(entry.location.hi);
        e["point"] = entry.location.is_point();
        e["multiplicity"] = entry.multiplicity;
        arr.push_back(std::move(e));
    }
    return arr;
}

// --- compose -------------------------------------------------------------------

int run_compose(const OperandArgs& p_args, const OperandArgs& q_args, int n,
                const std::string& output) {
    const Polynomial p = read_operand(p_args, n, "p");
    const Polynomial q = read_operand(q_args, n, "q");
    const Polynomial product = schur_szego(p, q);

    std::optional<MultiplicityStructure> structure;
    int deficit = 0;
    if (!product.is_zero()) {
        try {
            structure = multiplicity_structure(product);
        } catch (const non_hyperbolic_error& err) {
            deficit = err.real_root_deficit();
        }
    }

    if (json_mode(output)) {
        ordered_json out;
        out["n"] = product.ambient_degree();
        out["coeffs"] = coeffs_json(product);
        out["poly"] = format_polynomial_pretty(product);
        out["zero"] = product.is_zero();
        if (product.is_zero()) {
            out["roots"] = nullptr;
        } else {
            out["hyperbolic"] = structure.has_value();
            if (structure)
                out["roots"] = structure_json(*structure);
            else
                out["real_root_deficit"] = deficit;
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    std::cout << "coeffs: " << format_coefficients(product) << "\n";
    std::cout << "n: " << product.ambient_degree() << "\n";
    std::cout << "poly: " << format_polynomial_pretty(product) << "\n";
    if (product.is_zero())
        std::cout << "roots: zero polynomial\n";
    else if (structure && structure->entries().empty())
        std::cout << "roots: none\n";
    else if (structure)
        std::cout << "roots: " << format_multiplicity_structure(*structure) << "\n";
    else
        std::cout << "roots: non-hyperbolic (" << deficit << " non-real)\n";
    return 0;
}

// --- mv / sign -------------------------------------------------------------------

Polynomial read_analysis_operand(const OperandArgs& args, int n_flag, bool n_given,
                                 const std::string& command) {
    const bool has_coeffs = !args.coeffs.empty();
    const bool has_roots = !args.roots.empty();
    if (has_coeffs == has_roots)
        throw std::invalid_argument(command + ": provide exactly one of --coeffs or --roots");
    if (has_coeffs) {
        const std::vector<Rational> coeffs = parse_rational_list(args.coeffs);
        const int n = n_given ? n_flag : static_cast<int>(coeffs.size()) - 1;
        return Polynomial(coeffs, n);
    }
    const std::vector<Rational> roots = parse_rational_list(args.roots);
    const int n = n_given ? n_flag : static_cast<int>(roots.size());
    if (static_cast<int>(roots.size()) != n)
        throw std::invalid_argument(command + ": --roots lists " +
                                    std::to_string(roots.size()) + " roots, expected n = " +
                                    std::to_string(n));
    return Polynomial::from_roots(roots, n);
}

int run_mv(const Polynomial& p, const std::string& output) {
    const MultiplicityVector mv = multiplicity_vector(p);
    if (json_mode(output)) {
        ordered_json out;
        out["n"] = mv.n();
        out["parts"] = mv.parts();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << format_multiplicity_vector(mv) << "\n";
    }
    return 0;
}

int run_sign(const Polynomial& p, const std::string& output) {
    const SignSignature sig = sign_signature(p);
    if (json_mode(output)) {
        ordered_json out;
        out["neg"] = sig.negative;
        out["zero"] = sig.zero;
        out["pos"] = sig.positive;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << format_sign_signature(sig) << "\n";
    }
    return 0;
}

// --- partition-compose -----------------------------------------------------------

int run_partition_compose(const std::string& p_text, const std::string& signed_p_text,
                          const std::string& q_text, int n, const std::string& output) {
    if (p_text.empty() == signed_p_text.empty())
        throw std::invalid_argument(
            "partition-compose: provide exactly one of --p or --signed-p");
    const MultiplicityVector q = validate_partition(parse_int_list(q_text), n);

    if (!signed_p_text.empty()) {
        const SignedMultiplicityVector p = parse_signed_multiplicity_vector(signed_p_text, n);
        const SignedMultiplicityVector result = compose_signed(p, q);
        if (json_mode(output)) {
            ordered_json out;
            out["n"] = result.n();
            out["neg"] = result.negative_parts();
            out["zero"] = result.zero_multiplicity();
            out["pos"] = result.positive_parts();
            std::cout << out.dump() << "\n";
        } else {
            std::cout << format_signed_multiplicity_vector(result) << "\n";
        }
        return 0;
    }

    const MultiplicityVector p = validate_partition(parse_int_list(p_text), n);
    const MultiplicityVector result = compose_partitions(p, q);
    if (json_mode(output)) {
        ordered_json out;
        out["n"] = result.n();
        out["parts"] = result.parts();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << format_multiplicity_vector(result) << "\n";
    }
    return 0;
}

// --- fms-check ---------------------------------------------------------------------

const char* sign_class_name(FmsSignClass c) {
    switch (c) {
        case FmsSignClass::all_negative: return "all-negative";
        case FmsSignClass::all_positive: return "all-positive";
        case FmsSignClass::only_zero_roots: return "only-zero-roots";
    }
    return "?";
}

int run_fms_check(const std::string& gamma_text, int k_flag, bool k_given,
                  int witness_trials, std::uint64_t seed, const std::string& output) {
    std::vector<Rational> entries = parse_rational_list(gamma_text);
    if (entries.empty()) throw std::invalid_argument("fms-check: --gamma must be nonempty");
    if (k_given) {
        if (k_flag + 1 < static_cast<int>(entries.size()))
            throw std::invalid_argument("fms-check: --gamma lists more than k+1 entries");
        entries.resize(static_cast<size_t>(k_flag) + 1, Rational(0));
    }
    const GammaSequence gamma(std::move(entries));
    const FmsCertificate cert = classify_fms(gamma);

    std::optional<NonFmsWitness> witness;
    if (witness_trials > 0 && cert.verdict == FmsVerdict::not_fms)
        witness = find_non_fms_witness(gamma, seed, witness_trials);

    if (json_mode(output)) {
        ordered_json out;
        out["k"] = gamma.k();
        switch (cert.verdict) {
            case FmsVerdict::fms: out["verdict"] = "fms"; break;
            case FmsVerdict::not_fms: out["verdict"] = "not-fms"; break;
            case FmsVerdict::degenerate: out["verdict"] = "degenerate"; break;
        }
        if (cert.sign_class) out["sign_class"] = sign_class_name(*cert.sign_class);
        if (cert.violation) {
            out["violation"] = *cert.violation == FmsViolation::non_real_roots
                                   ? "non-real-roots"
                                   : "mixed-signs";
        }
        if (cert.root_signs) {
            out["root_signs"] = {{"neg", cert.root_signs->negative},
                                 {"zero", cert.root_signs->zero},
                                 {"pos", cert.root_signs->positive}};
        }
        if (cert.real_root_deficit > 0) out["real_root_deficit"] = cert.real_root_deficit;
        if (witness_trials > 0 && cert.verdict == FmsVerdict::not_fms) {
            if (witness) {
                out["witness"] = {{"input", coeffs_json(witness->input)},
                                  {"output", coeffs_json(witness->output)},
                                  {"real_root_deficit", witness->real_root_deficit}};
            } else {
                out["witness"] = nullptr;
            }
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    switch (cert.verdict) {
        case FmsVerdict::fms:
            std::cout << "FMS: characteristic roots " << sign_class_name(*cert.sign_class)
                      << "\n";
            break;
        case FmsVerdict::degenerate:
            std::cout << "DEGENERATE: all entries zero\n";
            break;
        case FmsVerdict::not_fms:
            if (*cert.violation == FmsViolation::non_real_roots) {
                std::cout << "NOT-FMS: non-real roots (deficit " << cert.real_root_deficit
                          << ")\n";
            } else {
                std::cout << "NOT-FMS: mixed signs {-1,+1} (neg " << cert.root_signs->negative
                          << ", pos " << cert.root_signs->positive << ")\n";
            }
            break;
    }
    if (witness_trials > 0 && cert.verdict == FmsVerdict::not_fms) {
        if (witness)
            std::cout << "witness: [" << format_coefficients(witness->input) << "] -> ["
                      << format_coefficients(witness->output) << "] ("
                      << witness->real_root_deficit << " non-real)\n";
        else
            std::cout << "witness: none found in " << witness_trials << " trials\n";
    }
    return 0;
}

// --- verify ---------------------------------------------------------------------------

verify::SuiteConfig load_suite_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("verify: cannot open config file " + path);
    ordered_json doc = ordered_json::parse(in);
    verify::SuiteConfig config;
    for (const auto& [key, value] : doc.items()) {
        if (key == "properties") {
            config.properties = value.get<std::vector<std::string>>();
        } else if (key == "n_min") {
            config.n_min = value.get<int>();
        } else if (key == "n_max") {
            config.n_max = value.get<int>();
        } else if (key == "trials") {
            config.trials = value.get<int>();
        } else if (key == "seed") {
            config.seed = value.get<std::uint64_t>();
        } else if (key == "height_schedule") {
            for (const auto& [hkey, hvalue] : value.items()) {
                if (hkey == "numerator_base")
                    config.heights.numerator_base = hvalue.get<int>();
                else if (hkey == "numerator_growth")
                    config.heights.numerator_growth = hvalue.get<int>();
                else if (hkey == "denominator_bound")
                    config.heights.denominator_bound = hvalue.get<int>();
                else
                    throw std::invalid_argument("verify: unknown height_schedule key \"" +
                                                hkey + "\"");
            }
        } else {
            throw std::invalid_argument("verify: unknown config key \"" + key + "\"");
        }
    }
    return config;
}

ordered_json report_json(const verify::VerificationReport& report, bool timings) {
    ordered_json out;
    out["property"] = report.property;
    out["trials"] = report.trials;
    out["failures"] = report.failures;
    if (!report.first_counterexample.empty())
        out["first_counterexample"] = report.first_counterexample;
    if (timings) out["elapsed_seconds"] = report.elapsed_seconds;
    return out;
}

int run_verify(const verify::SuiteConfig& config, const std::string& jsonl_path, bool timings,
               const std::string& output) {
    const std::vector<verify::VerificationReport> reports = verify::run_suite(config);

    if (!jsonl_path.empty()) {
        std::ofstream jsonl(jsonl_path);
        if (!jsonl)
            throw std::invalid_argument("verify: cannot write JSONL file " + jsonl_path);
        for (const auto& report : reports) jsonl << report_json(report, timings).dump() << "\n";
    }

    int failing_properties = 0;
    for (const auto& report : reports)
        if (!report.passed()) ++failing_properties;

    if (json_mode(output)) {
        for (const auto& report : reports)
            std::cout << report_json(report, timings).dump() << "\n";
        return failing_properties == 0 ? 0 : 1;
    }

    size_t name_width = std::string("property").size();
    for (const auto& report : reports) name_width = std::max(name_width, report.property.size());
    std::cout << std::left << std::setw(static_cast<int>(name_width) + 2) << "property"
              << std::right << std::setw(8) << "trials" << std::setw(10) << "failures";
    if (timings) std::cout << std::setw(12) << "seconds";
    std::cout << "\n";
    for (const auto& report : reports) {
        std::cout << std::left << std::setw(static_cast<int>(name_width) + 2) << report.property
                  << std::right << std::setw(8) << report.trials << std::setw(10)
                  << report.failures;
        if (timings) std::cout << std::setw(12) << std::fixed << std::setprecision(3)
                               << report.elapsed_seconds;
        std::cout << "\n";
    }
    if (failing_properties == 0) {
        std::cout << "all " << reports.size() << " properties passed\n";
        return 0;
    }
    for (const auto& report : reports)
        if (!report.passed())
            std::cout << "counterexample (" << report.property
                      << "): " << report.first_counterexample << "\n";
    std::cout << failing_properties << " of " << reports.size() << " properties failed\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schur-Szego composition of polynomials, certified real-root "
                 "analysis, partition semigroup, and multiplier-sequence checks"};
    app.require_subcommand(1);

    std::string output = "text";
    app.add_option("--output", output, "Output mode")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("SZEGO_OUTPUT");

    // compose
    auto* compose_cmd =
        app.add_subcommand("compose", "Schur-Szego composition of two polynomials");
    OperandArgs compose_p, compose_q;
    int compose_n = 0;
    compose_cmd->add_option("--coeffs-p", compose_p.coeffs,
                            "P coefficients, low to high, comma-separated rationals");
    compose_cmd->add_option("--roots-p", compose_p.roots, "P roots, comma-separated rationals");
    compose_cmd->add_option("--coeffs-q", compose_q.coeffs,
                            "Q coefficients, low to high, comma-separated rationals");
    compose_cmd->add_option("--roots-q", compose_q.roots, "Q roots, comma-separated rationals");
    compose_cmd->add_option("--n", compose_n, "Shared ambient degree")->required();

    // mv / sign
    auto* mv_cmd = app.add_subcommand("mv", "Multiplicity vector of a hyperbolic polynomial");
    auto* sign_cmd = app.add_subcommand("sign", "Sign signature of a hyperbolic polynomial");
    OperandArgs mv_args, sign_args;
    int mv_n = 0, sign_n = 0;
    mv_cmd->add_option("--coeffs", mv_args.coeffs, "Coefficients, low to high");
    mv_cmd->add_option("--roots", mv_args.roots, "Roots, comma-separated rationals");
    auto* mv_n_opt = mv_cmd->add_option("--n", mv_n, "Ambient degree (default: inferred)");
    sign_cmd->add_option("--coeffs", sign_args.coeffs, "Coefficients, low to high");
    sign_cmd->add_option("--roots", sign_args.roots, "Roots, comma-separated rationals");
    auto* sign_n_opt = sign_cmd->add_option("--n", sign_n, "Ambient degree (default: inferred)");

    // partition-compose
    auto* part_cmd = app.add_subcommand("partition-compose",
                                        "Compose ordered partitions of n (the semigroup "
                                        "induced on multiplicity vectors)");
    std::string part_p, part_signed_p, part_q;
    int part_n = 0;
    part_cmd->add_option("--p", part_p, "Left partition, comma-separated parts");
    part_cmd->add_option("--signed-p", part_signed_p,
                         "Left signed multiplicity vector, neg:..|zero:..|pos:..");
    part_cmd->add_option("--q", part_q, "Right partition, comma-separated parts")->required();
    part_cmd->add_option("--n", part_n, "The integer both operands partition")->required();

    // fms-check
    auto* fms_cmd = app.add_subcommand(
        "fms-check", "Classify a sequence as a finite multiplier sequence");
    std::string fms_gamma;
    int fms_k = 0;
    int fms_witness = 0;
    std::uint64_t fms_seed = 42;
    fms_cmd->add_option("--gamma", fms_gamma, "Sequence entries, comma-separated rationals")
        ->required();
    auto* fms_k_opt =
        fms_cmd->add_option("--k", fms_k, "Sequence length minus one (pads with zeros)");
    fms_cmd->add_option("--witness", fms_witness,
                        "For a non-FMS verdict, search this many random inputs for a "
                        "hyperbolic polynomial whose image has non-real roots");
    fms_cmd->add_option("--seed", fms_seed, "Witness search seed");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "Run the randomized verification suite");
    std::string verify_config_path, verify_jsonl;
    std::string verify_properties;
    int verify_n_min = 0, verify_n_max = 0, verify_trials = 0;
    std::uint64_t verify_seed = 0;
    int height_base = 0, height_growth = 0, height_den = 0;
    bool verify_timings = false;
    verify_cmd->add_option("--config", verify_config_path, "JSON config file");
    auto* vp = verify_cmd->add_option("--properties", verify_properties,
                                      "Comma-separated property names (default: all)");
    auto* vn_min = verify_cmd->add_option("--n-min", verify_n_min, "Smallest degree");
    auto* vn_max = verify_cmd->add_option("--n-max", verify_n_max, "Largest degree");
    auto* vt = verify_cmd->add_option("--trials", verify_trials, "Trials per property per degree");
    auto* vs = verify_cmd->add_option("--seed", verify_seed, "Suite seed");
    auto* vhb = verify_cmd->add_option("--height-base", height_base,
                                       "Root numerator bound at degree 0");
    auto* vhg = verify_cmd->add_option("--height-growth", height_growth,
                                       "Root numerator bound growth per degree");
    auto* vhd = verify_cmd->add_option("--height-denominator", height_den,
                                       "Root denominator bound");
    verify_cmd->add_option("--jsonl", verify_jsonl, "Also write reports as JSON lines here");
    verify_cmd->add_flag("--timings", verify_timings,
                         "Include elapsed seconds (breaks bit-identical reruns)");

    try {
        app.parse(argc, argv);

        if (*compose_cmd) return run_compose(compose_p, compose_q, compose_n, output);
        if (*mv_cmd)
            return run_mv(read_analysis_operand(mv_args, mv_n, mv_n_opt->count() > 0, "mv"),
                          output);
        if (*sign_cmd)
            return run_sign(
                read_analysis_operand(sign_args, sign_n, sign_n_opt->count() > 0, "sign"),
                output);
        if (*part_cmd)
            return run_partition_compose(part_p, part_signed_p, part_q, part_n, output);
        if (*fms_cmd)
            return run_fms_check(fms_gamma, fms_k, fms_k_opt->count() > 0, fms_witness,
                                 fms_seed, output);
        if (*verify_cmd) {
            verify::SuiteConfig config;
            if (!verify_config_path.empty()) config = load_suite_config(verify_config_path);
            if (vp->count() > 0) {
                config.properties.clear();
                for (const auto& name : CLI::detail::split(verify_properties, ','))
                    if (!name.empty()) config.properties.push_back(name);
            }
            if (vn_min->count() > 0) config.n_min = verify_n_min;
            if (vn_max->count() > 0) config.n_max = verify_n_max;
            if (vt->count() > 0) config.trials = verify_trials;
            if (vs->count() > 0) config.seed = verify_seed;
            if (vhb->count() > 0) config.heights.numerator_base = height_base;
            if (vhg->count() > 0) config.heights.numerator_growth = height_growth;
            if (vhd->count() > 0) config.heights.denominator_bound = height_den;
            return run_verify(config, verify_jsonl, verify_timings, output);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "szego: " << e.what() << "\n";
        return 1;
    } catch (const invariant_violation& e) {
        std::cerr << "szego: internal invariant violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "szego: " << e.what() << "\n";
        return 1;
    }
}
