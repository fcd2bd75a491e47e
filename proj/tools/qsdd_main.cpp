#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qsdd/cli.hpp"

namespace {

int emit(const qsdd::cli::CommandResult& r) {
    (r.exit_code == 0 ? std::cout : std::cerr) << r.output;
    return r.exit_code;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--file", "cannot open " + path);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus of forest polynomials, trimming operators,"
                 " quasisymmetric coinvariants and harmonic volumes"};
    app.require_subcommand(1);

    qsdd::cli::CommandConfig cfg;
    std::string file;
    std::string input;

    auto add_common = [&](CLI::App* sub, bool wants_input) {
        sub->add_option("--m", cfg.m, "color count m >= 1")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "text|json|tsv")
            ->check(CLI::IsMember({"text", "json", "tsv"}));
        if (wants_input) {
            sub->add_option("input", input, "input expression");
            sub->add_option("--file", file, "read the input expression from a file");
        }
    };

    auto* table = app.add_subcommand("table", "print all forest polynomials over Supp_n");
    table->add_option("--n", cfg.n, "support bound")->required();
    table->add_option("--max-size", cfg.max_size, "cap on forest size");
    add_common(table, false);

    auto* expand = app.add_subcommand("expand", "expand a polynomial in a basis");
    expand->add_option("--basis", cfg.basis, "forest|fundamental|lambda-diff")
        ->check(CLI::IsMember({"forest", "fundamental", "lambda-diff"}));
    expand->add_option("--n", cfg.n, "variable count (fundamental basis)");
    add_common(expand, true);

    auto* reduce = app.add_subcommand("reduce", "coinvariant reduction modulo I_{1,n}");
    reduce->add_option("--n", cfg.n, "variable count")->required();
    reduce->add_option("--k", cfg.k, "also report membership in I_{k,n}");
    add_common(reduce, true);

    auto* volume = app.add_subcommand("volume", "volume polynomial of a forest code");
    add_common(volume, true);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite,--suite", cfg.suite, "suite name or 'all'");
    verify->add_option("--n", cfg.n, "bound override");
    verify->add_option("--max-size", cfg.max_size, "size bound override");
    verify->add_option("--seed", cfg.seed, "random seed");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!file.empty()) input = slurp(file);
        cfg.input = input;
        if (table->parsed()) return emit(qsdd::cli::cmd_table(cfg));
        if (expand->parsed()) return emit(qsdd::cli::cmd_expand(cfg));
        if (reduce->parsed()) return emit(qsdd::cli::cmd_reduce(cfg));
        if (volume->parsed()) return emit(qsdd::cli::cmd_volume(cfg));
        if (verify->parsed()) {
            if (cfg.suite.empty()) {
                std::cerr << "error: verify needs a suite name\n";
                return 2;
            }
            return emit(qsdd::cli::cmd_verify(cfg));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
