#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fqdigraph/monomial.hpp"
#include "fqdigraph/report.hpp"
#include "fqdigraph/theorem.hpp"
#include "fqdigraph/verify.hpp"

using namespace fqdigraph;

namespace {

struct InputOpts {
    std::string input;
    std::uint32_t p = 0;
    std::uint32_t e = 1;
    std::vector<std::uint32_t> modulus;
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    CLI::Option* input_opt = nullptr;
    CLI::Option* p_opt = nullptr;
    CLI::Option* m_opt = nullptr;
    CLI::Option* n_opt = nullptr;

    bool from_file() const { return input_opt->count() > 0; }
    bool from_flags() const { return p_opt->count() > 0; }
};

struct OutputOpts {
    std::string path;
    std::string format = "json";
};

void add_input_options(CLI::App* cmd, InputOpts& in, bool with_exponents) {
    in.input_opt =
        cmd->add_option("--input", in.input, "JSON instance document");
    in.p_opt = cmd->add_option("--p", in.p, "field characteristic (inline)");
    cmd->add_option("--e", in.e, "extension degree (inline, default 1)");
    cmd->add_option("--modulus", in.modulus,
                    "modulus coefficients, constant term first (inline)")
        ->delimiter(',');
    if (with_exponents) {
        in.m_opt = cmd->add_option("--m", in.m, "exponent of x (inline)");
        in.n_opt = cmd->add_option("--n", in.n, "exponent of y (inline)");
    }
}

void add_output_options(CLI::App* cmd, OutputOpts& out,
                        const std::string& default_format) {
    out.format = default_format;
    cmd->add_option("--format", out.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--output", out.path, "output path (default stdout)");
}

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    std::uint64_t value = 0;
    for (const char* c = v; *c; ++c) {
        if (!std::isdigit(static_cast<unsigned char>(*c)))
            throw SchemaError(std::string(name) + " must be a positive integer");
        value = value * 10 + static_cast<std::uint64_t>(*c - '0');
        if (value > (std::uint64_t{1} << 62))
            throw SchemaError(std::string(name) + " is out of range");
    }
    if (value == 0)
        throw SchemaError(std::string(name) + " must be a positive integer");
    return value;
}

std::optional<std::vector<coeff_t>> modulus_arg(const InputOpts& in) {
    if (in.modulus.empty()) return std::nullopt;
    std::vector<coeff_t> out;
    out.reserve(in.modulus.size());
    for (std::uint32_t c : in.modulus) {
        if (c > 0xFFFF) throw SchemaError("modulus coefficient out of range");
        out.push_back(static_cast<coeff_t>(c));
    }
    return out;
}

void require_one_source(const InputOpts& in) {
    if (in.from_file() == in.from_flags())
        throw SchemaError(
            "provide exactly one input source: --input or inline --p/--e");
}

void require_exponents(const InputOpts& in) {
    if (in.m_opt->count() == 0 || in.n_opt->count() == 0)
        throw SchemaError("inline input needs both --m and --n");
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot read " + path);
    try {
        return nlohmann::json::parse(file);
    } catch (const nlohmann::json::parse_error& ex) {
        throw SchemaError(std::string("invalid JSON: ") + ex.what());
    }
}

Instance load_instance(const InputOpts& in) {
    require_one_source(in);
    if (in.from_file()) return parse_instance(load_json(in.input));
    require_exponents(in);
    FieldCtx F(in.p, in.e, modulus_arg(in));
    FuncSpec f = make_monomial_funcspec(F, in.m, in.n);
    return Instance{std::move(F), std::move(f)};
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path);
    return file;
}

void finish_sink(const std::string& path, std::ostream& os) {
    os.flush();
    if (!os) throw IoError("write failed" + (path.empty() ? "" : ": " + path));
}

bool gz_path(const std::string& path) {
    return path.size() > 3 && path.rfind(".gz") == path.size() - 3;
}

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw SchemaError("q must be a prime power, got " +
                                 std::to_string(q));
    std::uint64_t p = q;
    for (std::uint64_t c = 2; c * c <= q; ++c) {
        if (q % c == 0) {
            p = c;
            break;
        }
    }
    std::uint32_t e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw SchemaError("q must be a prime power, got " + std::to_string(q));
    return {static_cast<std::uint32_t>(p), e};
}

// ---- subcommand drivers ----

int run_analyze(const InputOpts& in, const OutputOpts& out) {
    Instance inst = load_instance(in);
    ComponentStructure s = analyze(inst.field, inst.f);
    std::ofstream file;
    std::ostream& os = open_sink(out.path, file);
    emit_report(s, parse_format(out.format), os);
    finish_sink(out.path, os);
    return 0;
}

int run_oracle(const InputOpts& in, const OutputOpts& out,
               std::uint64_t arc_cap, const std::string& dot) {
    Instance inst = load_instance(in);
    DigraphExplicit g = build_explicit(inst.field, inst.f, arc_cap);
    Partition part = scc(g);
    if (!dot.empty()) save_dot(g, dot, gz_path(dot));
    std::ofstream file;
    std::ostream& os = open_sink(out.path, file);
    emit_report(part, parse_format(out.format), os);
    finish_sink(out.path, os);
    return 0;
}

int run_monomial(const InputOpts& in, const OutputOpts& out) {
    require_one_source(in);
    MonomialStructure s;
    if (in.from_file()) {
        Instance inst = parse_instance(load_json(in.input));
        if (inst.f.form != FuncForm::Monomial)
            throw SchemaError("the monomial subcommand needs a monomial input");
        s = analyze_monomial(inst.field.p(), inst.field.e(), inst.f.m,
                             inst.f.n);
    } else {
        require_exponents(in);
        s = analyze_monomial(in.p, in.e, in.m, in.n);
    }
    std::ofstream file;
    std::ostream& os = open_sink(out.path, file);
    emit_report(s, parse_format(out.format), os);
    finish_sink(out.path, os);
    return 0;
}

int run_lemmas(const InputOpts& in, const OutputOpts& out) {
    require_one_source(in);
    SubgroupReport r;
    if (in.from_file()) {
        Instance inst = parse_instance(load_json(in.input));
        if (inst.f.form != FuncForm::Monomial)
            throw SchemaError("the lemmas subcommand needs a monomial input");
        r = subgroup_checks(inst.field, inst.f.m, inst.f.n);
    } else {
        require_exponents(in);
        FieldCtx F(in.p, in.e, modulus_arg(in));
        r = subgroup_checks(F, in.m, in.n);
    }
    std::ofstream file;
    std::ostream& os = open_sink(out.path, file);
    emit_report(r, parse_format(out.format), os);
    finish_sink(out.path, os);
    return r.all_pass ? 0 : 3;
}

int run_diameter(const InputOpts& in, const OutputOpts& out,
                 std::uint64_t arc_cap) {
    Instance inst = load_instance(in);
    std::uint64_t dia = diameter(build_explicit(inst.field, inst.f, arc_cap));
    std::ofstream file;
    std::ostream& os = open_sink(out.path, file);
    emit_diameter_report(dia, parse_format(out.format), os);
    finish_sink(out.path, os);
    return 0;
}

int run_export_dot(const InputOpts& in, const std::string& path,
                   std::uint64_t arc_cap) {
    Instance inst = load_instance(in);
    DigraphExplicit g = build_explicit(inst.field, inst.f, arc_cap);
    if (path.empty() || path == "-") {
        write_dot(g, std::cout);
        finish_sink(path, std::cout);
    } else {
        save_dot(g, path, gz_path(path));
    }
    return 0;
}

struct VerifyOpts {
    std::uint32_t sweep = 25;
    std::uint64_t seed = 1;
    std::uint64_t case_seed_value = 0;
    std::uint64_t q = 0;
    std::uint32_t l = 1;
    std::uint32_t threads = 0;
    CLI::Option* case_seed_opt = nullptr;
    CLI::Option* q_opt = nullptr;
    CLI::Option* l_opt = nullptr;
};

int run_verify(const InputOpts& in, const VerifyOpts& vo,
               const OutputOpts& out, std::uint64_t arc_cap,
               std::uint64_t coset_cap) {
    std::vector<VerifyCase> cases;
    if (in.from_file() || in.from_flags()) {
        Instance inst = load_instance(in);
        cases.push_back(verify_case(inst.field, inst.f, arc_cap, coset_cap));
    } else if (vo.case_seed_opt->count() > 0) {
        if (vo.q_opt->count() == 0)
            throw SchemaError("--case-seed needs --q (and usually --l)");
        auto [p, e] = factor_prime_power(vo.q);
        FieldCtx F(p, e);
        cases.push_back(verify_case(F,
                                    make_random_table(F, vo.l,
                                                      vo.case_seed_value),
                                    arc_cap, coset_cap, vo.case_seed_value,
                                    true));
    } else {
        SweepSpec spec;
        spec.per = vo.sweep;
        spec.seed = vo.seed;
        if (vo.q_opt->count() > 0) spec.fields = {factor_prime_power(vo.q)};
        if (vo.l_opt->count() > 0) spec.ls = {vo.l};
        cases = run_sweep(spec, arc_cap, coset_cap, vo.threads);
    }

    std::ofstream file;
    std::ostream& os = open_sink(out.path, file);
    emit_report(cases, parse_format(out.format), os);
    finish_sink(out.path, os);
    for (const VerifyCase& c : cases)
        if (!c.ok) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong components of algebraically defined digraphs D(q; f)"};
    app.require_subcommand(1);

    InputOpts in_analyze, in_oracle, in_monomial, in_lemmas, in_diameter,
        in_dot, in_verify;
    OutputOpts out_analyze, out_oracle, out_monomial, out_lemmas, out_diameter,
        out_verify;
    std::uint64_t arc_cap_flag = 0;
    std::uint64_t coset_cap_flag = 0;
    std::string oracle_dot;
    std::string dot_output;
    VerifyOpts vo;

    auto add_caps = [&](CLI::App* cmd) {
        cmd->add_option("--arc-cap", arc_cap_flag,
                        "explicit-graph arc budget")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--coset-cap", coset_cap_flag,
                        "coset materialization budget")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "closed-form strong component structure of D(q; f)");
    add_input_options(analyze_cmd, in_analyze, true);
    add_output_options(analyze_cmd, out_analyze, "json");
    add_caps(analyze_cmd);

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "explicit SCC partition via Tarjan on the built digraph");
    add_input_options(oracle_cmd, in_oracle, true);
    add_output_options(oracle_cmd, out_oracle, "json");
    add_caps(oracle_cmd);
    oracle_cmd->add_option("--dot", oracle_dot,
                           "also write the digraph in DOT form to this path");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify",
        "closed-form vs oracle partitions; bare runs the default sweep");
    add_input_options(verify_cmd, in_verify, true);
    add_output_options(verify_cmd, out_verify, "text");
    add_caps(verify_cmd);
    verify_cmd->add_option("--sweep", vo.sweep, "tables per (q, l) cell")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", vo.seed, "master sweep seed");
    vo.case_seed_opt = verify_cmd->add_option(
        "--case-seed", vo.case_seed_value,
        "replay one random table from a printed per-case seed");
    vo.q_opt = verify_cmd->add_option("--q", vo.q,
                                      "restrict the sweep to one field order");
    vo.l_opt =
        verify_cmd->add_option("--l", vo.l, "restrict the sweep to one l");
    verify_cmd->add_option("--threads", vo.threads,
                           "sweep workers (0 = hardware)");

    CLI::App* monomial_cmd = app.add_subcommand(
        "monomial", "integer-only structure of D(q; x^m y^n)");
    add_input_options(monomial_cmd, in_monomial, true);
    add_output_options(monomial_cmd, out_monomial, "json");

    CLI::App* lemmas_cmd = app.add_subcommand(
        "lemmas", "enumerative power-subgroup and subfield-span checks");
    add_input_options(lemmas_cmd, in_lemmas, true);
    add_output_options(lemmas_cmd, out_lemmas, "json");

    CLI::App* diameter_cmd = app.add_subcommand(
        "diameter", "directed diameter of a strong D(q; f), by all-pairs BFS");
    add_input_options(diameter_cmd, in_diameter, true);
    add_output_options(diameter_cmd, out_diameter, "json");
    add_caps(diameter_cmd);

    CLI::App* dot_cmd = app.add_subcommand(
        "export-dot", "write the digraph in DOT form (gzip when .gz)");
    add_input_options(dot_cmd, in_dot, true);
    dot_cmd->add_option("--output", dot_output,
                        "DOT path (default stdout, .gz compresses)");
    add_caps(dot_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex);
        return code == 0 ? 0 : 2;
    }

    try {
        std::uint64_t arc_cap =
            arc_cap_flag ? arc_cap_flag
                         : env_cap("FQDIGRAPH_ARC_CAP", kDefaultArcCap);
        std::uint64_t coset_cap =
            coset_cap_flag ? coset_cap_flag
                           : env_cap("FQDIGRAPH_COSET_CAP", kDefaultCosetCap);

        if (*analyze_cmd) return run_analyze(in_analyze, out_analyze);
        if (*oracle_cmd)
            return run_oracle(in_oracle, out_oracle, arc_cap, oracle_dot);
        if (*verify_cmd)
            return run_verify(in_verify, vo, out_verify, arc_cap,
                              coset_cap);
        if (*monomial_cmd) return run_monomial(in_monomial, out_monomial);
        if (*lemmas_cmd) return run_lemmas(in_lemmas, out_lemmas);
        if (*diameter_cmd)
            return run_diameter(in_diameter, out_diameter, arc_cap);
        if (*dot_cmd) return run_export_dot(in_dot, dot_output, arc_cap);
        return 2;
    } catch (const TooLarge& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 4;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return ex.kind() == "internal" ? 1 : 2;
    } catch (const nlohmann::json::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}
