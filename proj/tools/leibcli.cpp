// Command-line front end: analyze algebra files, run the CT census, emit the
// built-in families, form quotients and run the verification suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "leib/io.hpp"
#include "leib/invariants.hpp"

namespace {

using namespace leib;

LeibnizAlgebra load_algebra(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

struct FamilyOpts {
    std::string name;    // cyclic | jac | sl2
    std::string alphas;  // comma-separated scalar literals
    std::int64_t gf = 0; // 0 means not set
    bool use_q = false;
    std::int64_t jac_p = 3;

    FieldSpec field() const {
        if (use_q && gf != 0) throw ParseError("choose one of --gf and --q");
        if (use_q) return FieldSpec::rationals();
        if (gf != 0) return FieldSpec::gf(gf);
        throw ParseError("family needs --gf P or --q");
    }

    LeibnizAlgebra build() const {
        if (name == "cyclic") {
            FieldSpec f = field();
            std::vector<Scalar> as;
            std::size_t start = 0;
            while (start <= alphas.size()) {
                std::size_t comma = alphas.find(',', start);
                std::string piece =
                    alphas.substr(start, comma == std::string::npos ? std::string::npos
                                                                    : comma - start);
                if (!piece.empty()) as.push_back(Scalar::parse(f, piece));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            if (as.empty()) throw ParseError("cyclic family needs --alphas a2[,a3,...]");
            return cyclic_algebra(CyclicSpec{f, as.size() + 1, as});
        }
        if (name == "jac") return jac_example(jac_p);
        if (name == "sl2") {
            FieldSpec f = field();
            if (f.is_prime_field() && f.prime() == 2)
                std::cerr << "warning: sl2 over a field of characteristic 2 degenerates\n";
            return sl2(f);
        }
        throw ParseError("unknown family '" + name + "' (cyclic, jac, sl2)");
    }
};

void add_family_flags(CLI::App *cmd, FamilyOpts &fam) {
    cmd->add_option("--alphas", fam.alphas, "cyclic: alpha_2..alpha_n, comma separated");
    cmd->add_option("--gf", fam.gf, "prime field modulus");
    cmd->add_flag("--q", fam.use_q, "rationals");
    cmd->add_option("--p", fam.jac_p, "jac: the characteristic");
}

void emit(const Json &report, bool as_json) {
    if (as_json) std::cout << report.dump(2) << "\n";
    else std::cout << render_text(report);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact analysis of finite-dimensional Leibniz algebras"};
    app.require_subcommand(1);

    std::string file, ideal_spec, suite = "all", family_name, out_path;
    bool as_json = false;
    std::uint64_t seed = 0, budget = 1000000;
    unsigned jobs = 1;
    std::int64_t census_p = 2;
    std::size_t census_dim = 1;
    FamilyOpts fam;

    CLI::App *analyze = app.add_subcommand("analyze", "full invariant report for an algebra file");
    analyze->add_option("file", file, "algebra file")->required();
    analyze->add_flag("--json", as_json, "machine-readable output");
    analyze->add_option("--seed", seed, "seed for randomized checks");
    analyze->add_option("--budget", budget, "enumeration budget");

    CLI::App *census = app.add_subcommand("census", "scan all structure tensors over GF(p)");
    census->add_option("--gf", census_p, "prime p")->required();
    census->add_option("--dim", census_dim, "dimension")->required();
    census->add_option("--budget", budget, "candidate budget");
    census->add_option("--jobs", jobs, "parallel workers");
    census->add_flag("--json", as_json, "machine-readable output");

    CLI::App *family = app.add_subcommand("family", "emit a built-in family instance");
    family->add_option("name", fam.name, "cyclic | jac | sl2")->required();
    add_family_flags(family, fam);
    family->add_option("--out", out_path, "write the algebra file here instead of stdout");

    CLI::App *quot = app.add_subcommand("quotient", "quotient of an algebra by an ideal");
    quot->add_option("file", file, "algebra file")->required();
    quot->add_option("--ideal", ideal_spec, "comma-separated basis expressions, e.g. 'a2-a'")
        ->required();
    quot->add_flag("--json", as_json, "machine-readable output");

    CLI::App *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("file", file, "algebra file");
    verify->add_option("--family", family_name, "built-in family instead of a file");
    add_family_flags(verify, fam);
    verify->add_option("--suite", suite, "all|lemma1|lemmas|theorem1|solv|solv2|fac|main");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--budget", budget, "enumeration budget");
    verify->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e); // prints help or the usage error
        return rc == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) {
            LeibnizAlgebra l = load_algebra(file);
            Json rep = analyze_report(l, AnalyzeOptions{seed, budget, 1000});
            emit(rep, as_json);
            return report_failures(rep) == 0 ? 0 : 1;
        }
        if (census->parsed()) {
            CensusReport rep = ct_census(census_p, census_dim, budget, jobs);
            emit(census_report_json(rep), as_json);
            return 0;
        }
        if (family->parsed()) {
            LeibnizAlgebra l = fam.build();
            std::string text = serialize_algebra(l) + "\n";
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out) throw ParseError("cannot write '" + out_path + "'");
                out << text;
            }
            return 0;
        }
        if (quot->parsed()) {
            LeibnizAlgebra l = load_algebra(file);
            std::vector<Vec> gens = parse_element_list(l, ideal_spec);
            Subspace j = Subspace::span(l.field(), l.dim(), gens);
            if (!l.is_ideal(j)) throw PreconditionError("--ideal span is not an ideal");
            QuotientResult q = l.quotient(j);
            if (as_json) {
                Json rep;
                rep["ideal"] = subspace_json(j);
                rep["quotient"] = algebra_to_json(q.algebra);
                std::cout << rep.dump(2) << "\n";
            } else {
                std::cout << serialize_algebra(q.algebra) << "\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            if (file.empty() == family_name.empty())
                throw ParseError("verify needs exactly one of FILE or --family");
            LeibnizAlgebra l = [&] {
                if (!file.empty()) return load_algebra(file);
                fam.name = family_name;
                return fam.build();
            }();
            Json rep = verify_report(l, VerifyOptions{suite, seed, budget, 1000});
            emit(rep, as_json);
            return report_failures(rep) == 0 ? 0 : 1;
        }
    } catch (const ParseError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError &e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError &e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
