#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pbwtor/pbwtor.hpp"

using namespace pbwtor;

namespace {

// Exit codes: 0 ok, 1 usage or input syntax, 2 validation of the algebra or
// named blocks, 3 a computation contract failed.
constexpr int kExitParse = 1;
constexpr int kExitValidate = 2;
constexpr int kExitCompute = 3;

int report(const std::exception& e, int code) {
    std::cerr << "error: " << e.what() << "\n";
    return code;
}

void print_block(const std::string& label, const std::vector<ModuleVector>& rows,
                 const std::vector<std::string>& names) {
    std::cout << label << ":\n";
    for (const ModuleVector& v : rows) std::cout << "  " << render_vector(v, names) << "\n";
}

const char* route_name(TwoSidedRoute r) {
    switch (r) {
        case TwoSidedRoute::Enveloping: return "enveloping";
        case TwoSidedRoute::Closure: return "closure";
        case TwoSidedRoute::Central: return "central";
    }
    return "?";
}

LeftPresentation module_presentation(const ProblemFile& pf, const ModuleBlock& mb) {
    if (mb.generator_form)
        return presentation_from_generators(pf.algebra, pf.module_order, mb.ambient, mb.vectors);
    return presentation_from_cokernel(mb.ambient,
                                      matrix_from_rows(mb.ambient, mb.vectors));
}

int cmd_check(const ProblemFile& pf) {
    const AlgebraSpec& A = pf.algebra;
    std::cout << order_header(A, pf.module_order) << "\n";
    std::cout << "algebra ok: " << A.nvars() << " variables, " << A.relations.size()
              << " relations\n";
    for (const auto& [name, b] : pf.bimodules) {
        std::cout << "bimodule " << name << ": ambient " << b.ambient << ", " << b.vectors.size()
                  << " generators" << (b.centralizing ? ", centralizing" : "") << "\n";
    }
    for (const auto& [name, m] : pf.modules) {
        std::cout << "module " << name << ": ambient " << m.ambient << ", " << m.vectors.size()
                  << (m.generator_form ? " generators, submodule form"
                                       : " relations, quotient form")
                  << "\n";
    }
    return 0;
}

int cmd_mul(const ProblemFile& pf, const std::string& e1, const std::string& e2) {
    Polynomial a, b;
    try {
        a = parse_expression(pf.algebra, e1);
        b = parse_expression(pf.algebra, e2);
    } catch (const ParseError& e) {
        return report(e, kExitParse);
    }
    try {
        std::cout << render_polynomial(multiply(pf.algebra, a, b), pf.algebra.names) << "\n";
        return 0;
    } catch (const std::exception& e) {
        return report(e, kExitCompute);
    }
}

int cmd_nf(const ProblemFile& pf, const std::string& target, const std::string& module_name) {
    const ModuleBlock* mb;
    try {
        mb = &pf.module(module_name);
    } catch (const std::exception& e) {
        return report(e, kExitValidate);
    }
    ModuleVector v = ModuleVector::zero(mb->ambient);
    try {
        std::vector<Expr> tuple = parse_tuple_tree(target, pf.algebra.names);
        if (static_cast<int>(tuple.size()) != mb->ambient)
            throw ParseError("target tuple has " + std::to_string(tuple.size()) +
                                 " entries, module ambient is " + std::to_string(mb->ambient),
                             1, 1);
        for (int pos = 0; pos < mb->ambient; ++pos)
            v.set_component(pos, eval_expr(pf.algebra, tuple[pos]));
    } catch (const ParseError& e) {
        return report(e, kExitParse);
    }
    try {
        GroebnerBasis gb =
            left_groebner_basis(pf.algebra, pf.module_order, mb->ambient, mb->vectors);
        DivisionRecord rec = normal_form(pf.algebra, pf.module_order, v, gb.elements);
        std::cout << render_vector(rec.remainder, pf.algebra.names) << "\n";
        return 0;
    } catch (const std::exception& e) {
        return report(e, kExitCompute);
    }
}

int cmd_gb(const ProblemFile& pf, const std::string& module_name) {
    const ModuleBlock* mb;
    try {
        mb = &pf.module(module_name);
    } catch (const std::exception& e) {
        return report(e, kExitValidate);
    }
    try {
        GroebnerBasis gb =
            left_groebner_basis(pf.algebra, pf.module_order, mb->ambient, mb->vectors);
        std::cout << order_header(pf.algebra, pf.module_order) << "\n";
        print_block("basis", gb.elements, pf.algebra.names);
        return 0;
    } catch (const std::exception& e) {
        return report(e, kExitCompute);
    }
}

int cmd_syz(const ProblemFile& pf, const std::string& module_name) {
    const ModuleBlock* mb;
    try {
        mb = &pf.module(module_name);
    } catch (const std::exception& e) {
        return report(e, kExitValidate);
    }
    try {
        SyzygyBasis syz =
            left_syzygies(pf.algebra, pf.module_order, mb->ambient, mb->vectors);
        std::cout << order_header(pf.algebra, pf.module_order) << "\n";
        print_block("syzygies", syz.generators, pf.algebra.names);
        return 0;
    } catch (const std::exception& e) {
        return report(e, kExitCompute);
    }
}

int cmd_resolve(const ProblemFile& pf, const std::string& module_name, int depth) {
    const ModuleBlock* mb;
    try {
        mb = &pf.module(module_name);
    } catch (const std::exception& e) {
        return report(e, kExitValidate);
    }
    try {
        LeftPresentation P = module_presentation(pf, *mb);
        FreeResolution res = free_resolution(pf.algebra, pf.module_order, P, depth);
        std::cout << order_header(pf.algebra, pf.module_order) << "\n";
        std::cout << "ranks: ";
        for (size_t i = 0; i < res.ranks.size(); ++i)
            std::cout << (i ? ", " : "") << res.ranks[i];
        std::cout << "\n";
        for (size_t d = 0; d < res.diffs.size(); ++d) {
            std::cout << "d" << d + 1 << ":\n";
            for (const ModuleVector& row : res.diffs[d].rows)
                std::cout << "  " << render_vector(row, pf.algebra.names) << "\n";
        }
        std::cout << "complete: " << (res.complete ? "true" : "false") << "\n";
        return 0;
    } catch (const std::exception& e) {
        return report(e, kExitCompute);
    }
}

int cmd_tsgb(const ProblemFile& pf, const std::string& bimodule_name) {
    const BimoduleBlock* bb;
    try {
        bb = &pf.bimodule(bimodule_name);
    } catch (const std::exception& e) {
        return report(e, kExitValidate);
    }
    try {
        EnvAlgebra E = enveloping(pf.algebra);
        BimodulePresentation P =
            bimodule_presentation(E, pf.module_order, bb->ambient, bb->vectors, bb->centralizing);
        std::cout << order_header(pf.algebra, pf.module_order) << "\n";
        std::cout << "ambient: " << P.ambient << "\n";
        std::cout << "route: " << route_name(P.route) << "\n";
        print_block("basis", P.basis, pf.algebra.names);
        return 0;
    } catch (const std::exception& e) {
        return report(e, kExitCompute);
    }
}

int cmd_tor(const ProblemFile& pf, const std::string& bimodule_name,
            const std::string& module_name, int k, bool with_dim) {
    const BimoduleBlock* bb;
    const ModuleBlock* mb;
    try {
        bb = &pf.bimodule(bimodule_name);
        mb = &pf.module(module_name);
    } catch (const std::exception& e) {
        return report(e, kExitValidate);
    }
    try {
        EnvAlgebra E = enveloping(pf.algebra);
        BimodulePresentation Mp =
            bimodule_presentation(E, pf.module_order, bb->ambient, bb->vectors, bb->centralizing);
        LeftPresentation Np = module_presentation(pf, *mb);
        QuotientPresentation Q = compute_tor(pf.algebra, pf.module_order, Mp, Np, k, with_dim);
        std::string tor_label =
            "Tor_" + std::to_string(k) + "(" + bimodule_name + "," + module_name + ")";
        std::cout << order_header(pf.algebra, pf.module_order) << "\n";
        std::cout << tor_label << ":\n";
        std::cout << render_presentation(Q, pf.algebra.names);
        if (Q.zero) std::cout << tor_label << " = 0\n";
        return 0;
    } catch (const std::exception& e) {
        return report(e, kExitCompute);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner, syzygy, resolution and Tor computations over PBW algebras"};
    app.require_subcommand(1);

    std::string file, e1, e2, target, module_name, bimodule_name;
    int depth = 4;
    int k = 0;
    bool with_dim = false;

    CLI::App* check = app.add_subcommand("check-algebra", "validate a problem file");
    check->add_option("file", file)->required();

    CLI::App* mul = app.add_subcommand("mul", "multiply two expressions");
    mul->add_option("file", file)->required();
    mul->add_option("e1", e1)->required();
    mul->add_option("e2", e2)->required();

    CLI::App* nf = app.add_subcommand("nf", "normal form of a tuple modulo a module");
    nf->add_option("file", file)->required();
    nf->add_option("--target", target)->required();
    nf->add_option("--in", module_name)->required();

    CLI::App* gb = app.add_subcommand("gb", "left Groebner basis of a module block");
    gb->add_option("file", file)->required();
    gb->add_option("--module", module_name)->required();

    CLI::App* syz = app.add_subcommand("syz", "left syzygies of a module block");
    syz->add_option("file", file)->required();
    syz->add_option("--module", module_name)->required();

    CLI::App* resolve = app.add_subcommand("resolve", "free resolution of a module block");
    resolve->add_option("file", file)->required();
    resolve->add_option("--module", module_name)->required();
    resolve->add_option("--depth", depth);

    CLI::App* tsgb = app.add_subcommand("tsgb", "two-sided basis of a bimodule block");
    tsgb->add_option("file", file)->required();
    tsgb->add_option("--bimodule", bimodule_name)->required();

    CLI::App* tor = app.add_subcommand("tor", "Tor_k of a bimodule and a module");
    tor->add_option("file", file)->required();
    tor->add_option("--bimodule", bimodule_name)->required();
    tor->add_option("--module", module_name)->required();
    tor->add_option("-k", k)->required();
    tor->add_flag("--dim", with_dim);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    ProblemFile pf;
    try {
        pf = load_problem(file);
    } catch (const ParseError& e) {
        return report(e, kExitParse);
    } catch (const std::exception& e) {
        return report(e, kExitValidate);
    }

    if (check->parsed()) return cmd_check(pf);
    if (mul->parsed()) return cmd_mul(pf, e1, e2);
    if (nf->parsed()) return cmd_nf(pf, target, module_name);
    if (gb->parsed()) return cmd_gb(pf, module_name);
    if (syz->parsed()) return cmd_syz(pf, module_name);
    if (resolve->parsed()) return cmd_resolve(pf, module_name, depth);
    if (tsgb->parsed()) return cmd_tsgb(pf, bimodule_name);
    if (tor->parsed()) return cmd_tor(pf, bimodule_name, module_name, k, with_dim);
    return kExitParse;
}
