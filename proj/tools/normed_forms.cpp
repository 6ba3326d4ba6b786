#include "normed_forms/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace nforms;

// Integers are taken as strings so they can exceed 64 bits and start with '-'.
struct FormArgs {
    std::string m, k, n;

    void attach(CLI::App* cmd) {
        cmd->add_option("m", m, "coefficient of x1^2")->required();
        cmd->add_option("k", k, "coefficient of x1 x2")->required();
        cmd->add_option("n", n, "coefficient of x2^2")->required();
    }
    Form form() const { return {parse_int(m), parse_int(k), parse_int(n)}; }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integer normed pairings on binary quadratic forms"};
    app.require_subcommand(1);

    FormArgs info_args;
    auto* info = app.add_subcommand("form-info", "discriminant, definiteness, content and reduced form");
    info_args.attach(info);

    FormArgs classify_args;
    std::string classify_box = "100";
    bool classify_strict = false;
    bool classify_timing = false;
    auto* classify = app.add_subcommand("classify", "which of the four pairing types the form admits");
    classify_args.attach(classify);
    classify->add_option("--box", classify_box, "search bound for indefinite forms");
    classify->add_flag("--strict", classify_strict, "exit 3 when a verdict rests on a bounded search");
    classify->add_flag("--timing", classify_timing, "add timing_ms to the record");

    FormArgs curve_args;
    cli::CurveOptions curve_opt;
    bool curve_minus = false;
    auto* curve = app.add_subcommand("curve", "CSV samples of the (-,-) parameter curve");
    curve_args.attach(curve);
    curve->add_option("--samples", curve_opt.samples, "number of rows");
    curve->add_option("--theta-min", curve_opt.theta_min, "first theta");
    curve->add_option("--theta-max", curve_opt.theta_max, "last theta");
    curve->add_flag("--minus", curve_minus, "sample the negated branch");

    std::vector<std::string> verify_args;
    auto* verify = app.add_subcommand("verify", "check a pairing (A1|A2) against a form; exit 1 if not normed");
    verify->add_option("entries", verify_args, "a11 a12 a21 a22 b11 b12 b21 b22 m k n")->required()->expected(11);

    FormArgs probe_args;
    std::string probe_sample = "3", probe_search = "100";
    auto* probe = app.add_subcommand("probe", "semigroup probe on a sample box");
    probe_args.attach(probe);
    probe->add_option("--sample", probe_sample, "sample box |x1|,|x2| <= N");
    probe->add_option("--search", probe_search, "representation search box for indefinite forms");

    FormArgs lattice_args;
    std::string lattice_height = "100";
    auto* lattice = app.add_subcommand("lattice", "embed the form as a lattice in Q(tau) and query it");
    lattice_args.attach(lattice);
    lattice->add_option("--height", lattice_height, "height bound of the conic search");

    std::string cat_dmin, cat_dmax, cat_format = "jsonl", cat_out, cat_box, cat_search = "100", cat_sample = "3";
    unsigned cat_threads = 0;
    auto* catalog = app.add_subcommand("catalog", "classify every reduced primitive form in a discriminant range");
    catalog->add_option("--dmin", cat_dmin, "smallest discriminant")->required();
    catalog->add_option("--dmax", cat_dmax, "largest discriminant")->required();
    catalog->add_option("--format", cat_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    catalog->add_option("--out", cat_out, "output file (default: standard output)");
    catalog->add_option("--box", cat_box, "coefficient box for positive discriminants");
    catalog->add_option("--search", cat_search, "search bound for indefinite forms");
    catalog->add_option("--sample", cat_sample, "semigroup probe sample box");
    catalog->add_option("--threads", cat_threads, "worker count (default: NORMED_FORMS_THREADS or all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kInputError;
    }

    try {
        if (*info) return cli::cmd_form_info(info_args.form(), std::cout);
        if (*classify) {
            cli::ClassifyOptions opt{parse_int(classify_box), classify_strict, classify_timing};
            return cli::cmd_classify(classify_args.form(), opt, std::cout);
        }
        if (*curve) {
            curve_opt.branch = curve_minus ? Branch::Minus : Branch::Plus;
            return cli::cmd_curve(curve_args.form(), curve_opt, std::cout);
        }
        if (*verify) {
            std::vector<Int> v;
            for (const auto& s : verify_args) v.push_back(parse_int(s));
            const Pairing s{{v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7]}};
            return cli::cmd_verify(s, {v[8], v[9], v[10]}, std::cout);
        }
        if (*probe) return cli::cmd_probe(probe_args.form(), parse_int(probe_sample), parse_int(probe_search), std::cout);
        if (*lattice) return cli::cmd_lattice(lattice_args.form(), parse_int(lattice_height), std::cout);
        if (*catalog) {
            cli::CatalogOptions opt;
            opt.dmin = parse_int(cat_dmin);
            opt.dmax = parse_int(cat_dmax);
            opt.format = cat_format == "csv" ? cli::CatalogFormat::Csv : cli::CatalogFormat::Jsonl;
            if (!cat_box.empty()) opt.box = parse_int(cat_box);
            opt.search = parse_int(cat_search);
            opt.sample = parse_int(cat_sample);
            opt.out_path = cat_out;
            opt.threads = cat_threads;
            const int rc = cli::cmd_catalog(opt, std::cout);
            if (rc == cli::kIoError) std::cerr << "error: cannot write " << (cat_out.empty() ? "standard output" : cat_out) << '\n';
            return rc;
        }
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kInputError;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return cli::kInputError;
}
