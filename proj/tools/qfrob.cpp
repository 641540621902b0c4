// qfrob: command-line front end over the JSON interchange formats.
// Exit codes: 0 = success / property holds, 1 = property fails or a domain
// error (reported on stderr), 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qfrob/diagram.hpp"
#include "qfrob/endo.hpp"
#include "qfrob/io.hpp"

namespace {

using namespace qfrob;

struct Options {
    double atol = 1e-9;
    double rtol = 1e-9;
    std::uint64_t seed = 0;
    std::string out;

    Tolerance tol() const { return Tolerance{atol, rtol}; }
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--atol", opt.atol, "Absolute tolerance");
    cmd->add_option("--rtol", opt.rtol, "Relative tolerance");
    cmd->add_option("--seed", opt.seed, "Seed for randomized splits");
    cmd->add_option("--out", opt.out, "Write the JSON result to a file");
}

void emit(const Json& j, const Options& opt) {
    const std::string text = j.dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out);
        if (!f) throw IoError("cannot open output file: " + opt.out);
        f << text;
    }
}

Env env_from_json(const Json& j) {
    if (!j.is_object()) throw IoError("environment must be an object of morphisms");
    Env env;
    for (const auto& [name, value] : j.items())
        env.generators.emplace(name, morphism_from_json(value));
    return env;
}

int run(int argc, char** argv) {
    CLI::App app{
        "Finite-dimensional quantum algebras as complex matrix structures.\n"
        "JSON schemas: see the header comments emitted by --help-all and the "
        "README."};
    app.require_subcommand(1);
    Options opt;

    std::string monoid_path, algebra_path, matrix_path, state_path, rep_path,
        cs_path, groupoid_path, env_path, expr, lhs, rhs;
    int size = 0;
    double alpha = 1.0;

    auto* c_check = app.add_subcommand("check", "Classify a monoid; exit 0 iff dagger-Frobenius");
    c_check->add_option("monoid", monoid_path, "Monoid JSON")->required();
    add_common(c_check, opt);

    auto* c_spectrum = app.add_subcommand("spectrum", "Spectrum of a commutative dagger-Frobenius monoid");
    c_spectrum->add_option("monoid", monoid_path, "Monoid JSON")->required();
    add_common(c_spectrum, opt);

    auto* c_diag = app.add_subcommand("diagonalize", "Internally diagonalize a normal endomorphism");
    c_diag->add_option("--matrix", matrix_path, "Morphism JSON")->required();
    add_common(c_diag, opt);

    auto* c_gram = app.add_subcommand("gram", "Regular trace Gram form of a *-algebra");
    c_gram->add_option("algebra", algebra_path, "StarAlgebra JSON")->required();
    add_common(c_gram, opt);

    auto* c_realize = app.add_subcommand("realize", "Realize a *-algebra as an involution monoid");
    c_realize->add_option("algebra", algebra_path, "StarAlgebra JSON")->required();
    add_common(c_realize, opt);

    auto* c_decompose = app.add_subcommand("decompose", "Wedderburn block decomposition");
    c_decompose->add_option("monoid", monoid_path, "InvolutionMonoid JSON")->required();
    add_common(c_decompose, opt);

    auto* c_embed = app.add_subcommand("embed", "Embedding into the endomorphism monoid");
    c_embed->add_option("monoid", monoid_path, "Monoid JSON")->required();
    add_common(c_embed, opt);

    auto* c_norm = app.add_subcommand("norm", "C*-norm of a state");
    c_norm->add_option("monoid", monoid_path, "InvolutionMonoid JSON")->required();
    c_norm->add_option("--state", state_path, "Morphism JSON (a state)")->required();
    add_common(c_norm, opt);

    auto* c_eval = app.add_subcommand("eval", "Evaluate a morphism expression");
    c_eval->add_option("--env", env_path, "Environment JSON");
    c_eval->add_option("--expr", expr, "Expression text")->required();
    add_common(c_eval, opt);

    auto* c_prove = app.add_subcommand("prove", "Check two expressions for equality");
    c_prove->add_option("--env", env_path, "Environment JSON");
    c_prove->add_option("--lhs", lhs, "Left expression")->required();
    c_prove->add_option("--rhs", rhs, "Right expression")->required();
    add_common(c_prove, opt);

    auto* c_free = app.add_subcommand("free", "Free classical structure on a finite set");
    c_free->add_option("--size", size, "Set size")->required();
    add_common(c_free, opt);

    auto* c_gset = app.add_subcommand("gset", "Extract the G-set of an equivariant classical structure");
    c_gset->add_option("rep", rep_path, "UnitaryRep JSON")->required();
    c_gset->add_option("cs", cs_path, "ClassicalStructure JSON")->required();
    c_gset->add_option("--groupoid", groupoid_path, "Groupoid JSON")->required();
    add_common(c_gset, opt);

    auto* c_rescale = app.add_subcommand("rescale", "Rescale the inner product of a monoid");
    c_rescale->add_option("monoid", monoid_path, "Monoid JSON")->required();
    c_rescale->add_option("--alpha", alpha, "Positive scale factor")->required();
    add_common(c_rescale, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const Tolerance tol = opt.tol();

    if (c_check->parsed()) {
        const Monoid m = monoid_from_json(load_json_file(monoid_path));
        const PropertyReport r = classify(m, tol);
        emit(to_json(r), opt);
        return r.dagger_frobenius() ? 0 : 1;
    }
    if (c_spectrum->parsed()) {
        const Monoid m = monoid_from_json(load_json_file(monoid_path));
        emit(to_json(spectrum(m, tol, opt.seed)), opt);
        return 0;
    }
    if (c_diag->parsed()) {
        const Morphism f = morphism_from_json(load_json_file(matrix_path));
        const InternalDiagonalization d = internal_diagonalize(f, tol);
        emit(Json{{"monoid", to_json(d.monoid)}, {"phi", to_json(d.phi)}}, opt);
        return 0;
    }
    if (c_gram->parsed()) {
        const StarAlgebra a = star_algebra_from_json(load_json_file(algebra_path));
        emit(to_json(regular_trace_gram(a, tol)), opt);
        return 0;
    }
    if (c_realize->parsed()) {
        const StarAlgebra a = star_algebra_from_json(load_json_file(algebra_path));
        emit(to_json(realize(a, tol)), opt);
        return 0;
    }
    if (c_decompose->parsed()) {
        const InvolutionMonoid im =
            involution_monoid_from_json(load_json_file(monoid_path));
        emit(to_json(wedderburn(im, tol, opt.seed)), opt);
        return 0;
    }
    if (c_embed->parsed()) {
        const Monoid m = monoid_from_json(load_json_file(monoid_path));
        emit(to_json(embed(m)), opt);
        return 0;
    }
    if (c_norm->parsed()) {
        const InvolutionMonoid im =
            involution_monoid_from_json(load_json_file(monoid_path));
        const Morphism state = morphism_from_json(load_json_file(state_path));
        emit(Json{{"norm", cstar_norm(im, state, tol)}}, opt);
        return 0;
    }
    if (c_eval->parsed()) {
        const Env env = env_path.empty() ? Env{} : env_from_json(load_json_file(env_path));
        emit(to_json(evaluate(parse(expr), env)), opt);
        return 0;
    }
    if (c_prove->parsed()) {
        const Env env = env_path.empty() ? Env{} : env_from_json(load_json_file(env_path));
        const EqualityReport r = check_equal(lhs, rhs, env, tol);
        emit(Json{{"pass", r.pass}, {"deviation", r.deviation}}, opt);
        return r.pass ? 0 : 1;
    }
    if (c_free->parsed()) {
        emit(to_json(free_monoid(size)), opt);
        return 0;
    }
    if (c_gset->parsed()) {
        const Groupoid g = groupoid_from_json(load_json_file(groupoid_path));
        const CheckReport gr = g.validate();
        if (!gr.ok()) throw IoError("groupoid tables fail validation");
        const UnitaryRep r = rep_from_json(load_json_file(rep_path));
        const EquivariantClassicalStructure c =
            classical_structure_from_json(load_json_file(cs_path));
        emit(to_json(extract_gset(g, r, c, tol, opt.seed)), opt);
        return 0;
    }
    if (c_rescale->parsed()) {
        const Monoid m = monoid_from_json(load_json_file(monoid_path));
        emit(to_json(rescale(m, alpha)), opt);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const IoError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeMismatch& e) {
        std::cerr << "shape error: " << e.what() << "\n";
        return 2;
    } catch (const TypeMismatch& e) {
        std::cerr << "type error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownGenerator& e) {
        std::cerr << "unknown generator: " << e.what() << "\n";
        return 2;
    } catch (const SignatureMismatch& e) {
        std::cerr << "signature mismatch: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
