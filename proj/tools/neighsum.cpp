// neighsum — exact solver and verifier for neighbour-sum boards.
//
// Subcommands expose the library's operations with stable, machine-readable
// output. Exit codes: 0 success / affirmative, 1 clean negative (no solution,
// failed verification, disagreement under --method all), 2 usage or domain
// error with a message on stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "neighsum/cyclotomic.hpp"
#include "neighsum/errors.hpp"
#include "neighsum/existence.hpp"
#include "neighsum/generators.hpp"
#include "neighsum/grid.hpp"
#include "neighsum/io.hpp"
#include "neighsum/linalg.hpp"

using namespace neighsum;

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BoardSpec spec_for_family(const std::string& family, const std::vector<long>& dims, long d) {
    auto need = [&](std::size_t count) {
        if (dims.size() != count)
            throw CliError("family '" + family + "' expects " + std::to_string(count) +
                           " value(s) in --dims");
    };
    if (family == "square") { need(1); return BoardSpec::square(dims[0]); }
    if (family == "rect") { need(2); return BoardSpec::rect(dims[0], dims[1]); }
    if (family == "strip") { need(1); return BoardSpec::strip(dims[0]); }
    if (family == "torus") { need(2); return BoardSpec::torus(dims[0], dims[1]); }
    if (family == "neumann-square") { need(1); return BoardSpec::neumann_square(dims[0]); }
    if (family == "harmonic-torus") { need(2); return BoardSpec::harmonic_torus(dims[0], dims[1]); }
    if (family == "hypercube") {
        need(1);
        if (d < 2) throw CliError("family 'hypercube' requires --d at least 2");
        return BoardSpec::hypercube(dims[0], d);
    }
    throw CliError("unknown family '" + family + "'");
}

ExistenceVerdict rule_verdict(const std::string& family, const std::vector<long>& dims, long d) {
    if (family == "square") return exists_square(dims.at(0));
    if (family == "rect") return exists_rect(dims.at(0), dims.at(1));
    if (family == "strip") return exists_strip(dims.at(0));
    if (family == "torus") return exists_torus(dims.at(0), dims.at(1));
    if (family == "neumann-square") return exists_neumann_square(dims.at(0));
    if (family == "harmonic-torus")
        return {true, "constant functions", std::vector<long>{dims.at(0), dims.at(1)}};
    if (family == "hypercube") {
        long n = dims.at(0);
        if (!hypercube_necessary(n)) return {false, "3|(n+1) fails (necessary)", std::nullopt};
        if (d == 3) {
            ExistenceVerdict v = hypercube_d3_sufficient(n);
            if (v.exists) return v;
        }
        if (sufficient_decomposition(n, d))
            return {true, "sufficient-decomposition", std::nullopt};
        // No sufficient rule fires; fall back to the exact scan so the
        // answer is still definitive.
        ExistenceVerdict v = spectral_search(BoardSpec::hypercube(n, d));
        v.rule = "spectral-exact (no sufficient rule applies)";
        return v;
    }
    throw CliError("unknown family '" + family + "'");
}

ExistenceVerdict kernel_verdict(const BoardSpec& spec, long max_cells) {
    if (spec.cell_count() > max_cells)
        throw CliError("board has " + std::to_string(spec.cell_count()) +
                       " cells; raise --max-kernel-cells to allow this computation");
    long dim = kernel_basis(build_operator(spec)).dimension();
    return {dim > 0, "kernel-exact", std::nullopt};
}

std::pair<long, long> parse_window(const std::string& text) {
    std::size_t x = text.find('x');
    if (x == std::string::npos) x = text.find('X');
    if (x == std::string::npos) throw CliError("--window expects ROWSxCOLS, e.g. 6x6");
    try {
        long rows = std::stol(text.substr(0, x));
        long cols = std::stol(text.substr(x + 1));
        return {rows, cols};
    } catch (const std::exception&) {
        throw CliError("--window expects ROWSxCOLS, e.g. 6x6");
    }
}

std::pair<long, long> parse_range(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw CliError("--n-range expects A:B");
    try {
        long a = std::stol(text.substr(0, colon));
        long b = std::stol(text.substr(colon + 1));
        return {a, b};
    } catch (const std::exception&) {
        throw CliError("--n-range expects A:B");
    }
}

IntGrid load_board(const std::string& path) {
    std::string text = read_text_file(path);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return board_from_json(text);
    return board_from_csv(text);
}

int default_threads() {
    if (const char* env = std::getenv("NEIGHSUM_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 0;  // library resolves to hardware concurrency
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for neighbour-sum boards"};
    app.require_subcommand(1);

    std::string family, method = "rule", window_text, mode_text;
    std::string format = "json";        // structured subcommands
    std::string scalar_format = "ascii";  // gm / valuation / decompose print plain values
    std::vector<long> dims;
    long d_flag = 0, n_flag = -1, m_flag = 0, nmax = 0;
    long max_kernel_cells = 20000;
    int threads = default_threads();
    std::string n_range, board_path, rows_path, cols_path, cross_path;
    std::string neighbourhood_text = "moore", equation_text = "sum";
    bool val_eta = false, val_omega = false;

    CLI::App* exists_cmd = app.add_subcommand("exists", "decide existence of solutions");
    exists_cmd->add_option("--family", family)->required();
    exists_cmd->add_option("--dims", dims)->required()->delimiter(',');
    exists_cmd->add_option("--d", d_flag);
    exists_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"rule", "spectral", "kernel", "all"}));
    exists_cmd->add_option("--max-kernel-cells", max_kernel_cells);

    CLI::App* kernel_cmd = app.add_subcommand("kernel", "canonical kernel basis of the operator");
    kernel_cmd->add_option("--family", family)->required();
    kernel_cmd->add_option("--dims", dims)->required()->delimiter(',');
    kernel_cmd->add_option("--d", d_flag);
    kernel_cmd->add_option("--max-kernel-cells", max_kernel_cells);

    CLI::App* count_cmd = app.add_subcommand("count", "count hypercube eigen-tuple solutions");
    count_cmd->add_option("--d", d_flag)->required();
    count_cmd->add_option("--n", n_flag);
    count_cmd->add_option("--n-range", n_range);
    count_cmd->add_option("--threads", threads);
    count_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    CLI::App* gm_cmd = app.add_subcommand("gm", "norm-style product g(m)");
    gm_cmd->add_option("--m", m_flag)->required();
    gm_cmd->add_option("--format", scalar_format)->check(CLI::IsMember({"json", "ascii"}));

    CLI::App* val_cmd = app.add_subcommand("valuation", "closed-form 2-adic valuations");
    val_cmd->add_flag("--eta", val_eta);
    val_cmd->add_flag("--omega", val_omega);
    val_cmd->add_option("--m", m_flag)->required();
    val_cmd->add_option("--format", scalar_format)->check(CLI::IsMember({"json", "ascii"}));

    CLI::App* dec_cmd = app.add_subcommand("decompose", "sufficient decomposition over g factors");
    dec_cmd->add_option("--n", n_flag)->required();
    dec_cmd->add_option("--d", d_flag)->required();
    dec_cmd->add_option("--format", scalar_format)->check(CLI::IsMember({"json", "ascii"}));

    CLI::App* fill_cmd = app.add_subcommand("fill", "fill semi-infinite or infinite boards");
    fill_cmd->add_option("--mode", mode_text)->required()->check(CLI::IsMember({"semi", "infinite"}));
    fill_cmd->add_option("--rows", rows_path);
    fill_cmd->add_option("--cols", cols_path);
    fill_cmd->add_option("--cross", cross_path);
    fill_cmd->add_option("--window", window_text)->required();
    fill_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "ascii"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a board against its spec");
    verify_cmd->add_option("--board", board_path)->required();
    verify_cmd->add_option("--family", family)->required();
    verify_cmd->add_option("--neighbourhood", neighbourhood_text)
        ->check(CLI::IsMember({"moore", "neumann"}));
    verify_cmd->add_option("--mode", equation_text)->check(CLI::IsMember({"sum", "average"}));

    CLI::App* render_cmd = app.add_subcommand("render", "ASCII rendering of a board");
    render_cmd->add_option("--board", board_path)->required();

    CLI::App* scan_cmd = app.add_subcommand("scan-rational", "scan the two-factor equation");
    scan_cmd->add_option("--nmax", nmax)->required();
    scan_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*exists_cmd) {
            ExistenceVerdict verdict;
            if (method == "rule") {
                verdict = rule_verdict(family, dims, d_flag);
            } else if (method == "spectral") {
                verdict = spectral_search(spec_for_family(family, dims, d_flag));
            } else if (method == "kernel") {
                verdict = kernel_verdict(spec_for_family(family, dims, d_flag), max_kernel_cells);
            } else {  // all
                ExistenceVerdict rule = rule_verdict(family, dims, d_flag);
                BoardSpec spec = spec_for_family(family, dims, d_flag);
                ExistenceVerdict spectral = spectral_search(spec);
                std::optional<ExistenceVerdict> kernel;
                if (spec.cell_count() <= max_kernel_cells)
                    kernel = kernel_verdict(spec, max_kernel_cells);
                bool agree = rule.exists == spectral.exists &&
                             (!kernel || kernel->exists == rule.exists);
                if (!agree) {
                    std::cout << "{\"agreement\":false,\"rule\":" << (rule.exists ? "true" : "false")
                              << ",\"spectral\":" << (spectral.exists ? "true" : "false")
                              << ",\"kernel\":"
                              << (kernel ? (kernel->exists ? "true" : "false") : "null") << "}\n";
                    return 1;
                }
                verdict = spectral;
                verdict.rule = kernel ? "agree(rule,spectral,kernel)" : "agree(rule,spectral)";
            }
            std::cout << verdict_to_json(verdict) << "\n";
            return verdict.exists ? 0 : 1;
        }

        if (*kernel_cmd) {
            BoardSpec spec = spec_for_family(family, dims, d_flag);
            if (spec.cell_count() > max_kernel_cells)
                throw CliError("board has " + std::to_string(spec.cell_count()) +
                               " cells; raise --max-kernel-cells to allow this computation");
            std::cout << kernel_to_json(kernel_basis(build_operator(spec))) << "\n";
            return 0;
        }

        if (*count_cmd) {
            if ((n_flag < 0) == n_range.empty())
                throw CliError("count needs exactly one of --n or --n-range");
            std::vector<CountRecord> records;
            if (n_flag >= 0) {
                records.push_back(count_hypercube(n_flag, d_flag, threads));
            } else {
                auto [a, b] = parse_range(n_range);
                if (a > b) throw CliError("--n-range expects A <= B");
                for (long n = a; n <= b; ++n)
                    records.push_back(count_hypercube(n, d_flag, threads));
            }
            if (format == "csv") {
                for (std::size_t i = 0; i < records.size(); ++i)
                    std::cout << (i ? "," : "") << records[i].count;
                std::cout << "\n";
            } else if (records.size() == 1) {
                std::cout << count_to_json(records[0]) << "\n";
            } else {
                std::cout << counts_to_json(records) << "\n";
            }
            return 0;
        }

        if (*gm_cmd) {
            Int g = g_norm(m_flag);
            if (scalar_format == "json")
                std::cout << "{\"m\":" << m_flag << ",\"g\":\"" << g.get_str() << "\"}\n";
            else
                std::cout << g.get_str() << "\n";
            return 0;
        }

        if (*val_cmd) {
            if (val_eta == val_omega) throw CliError("valuation needs exactly one of --eta/--omega");
            Valuation v = val_eta ? valuation_eta(m_flag) : valuation_omega(m_flag);
            if (scalar_format == "json")
                std::cout << "{\"kind\":\"" << (val_eta ? "eta" : "omega") << "\",\"m\":" << m_flag
                          << ",\"value\":\"" << v.str() << "\"}\n";
            else
                std::cout << v.str() << "\n";
            return 0;
        }

        if (*dec_cmd) {
            auto moduli = sufficient_decomposition(n_flag, d_flag);
            if (scalar_format == "json") {
                std::cout << "{\"n\":" << n_flag << ",\"d\":" << d_flag << ",\"moduli\":";
                if (moduli) {
                    std::cout << "[";
                    for (std::size_t i = 0; i < moduli->size(); ++i)
                        std::cout << (i ? "," : "") << (*moduli)[i];
                    std::cout << "]";
                } else {
                    std::cout << "null";
                }
                std::cout << "}\n";
            } else {
                if (moduli) {
                    for (std::size_t i = 0; i < moduli->size(); ++i)
                        std::cout << (i ? " " : "") << (*moduli)[i];
                    std::cout << "\n";
                } else {
                    std::cout << "none\n";
                }
            }
            return moduli ? 0 : 1;
        }

        if (*fill_cmd) {
            auto [rows, cols] = parse_window(window_text);
            IntGrid board;
            if (mode_text == "semi") {
                if (rows_path.empty() || cols_path.empty())
                    throw CliError("fill --mode semi needs --rows and --cols");
                SequencePair seqs{read_sequence_file(rows_path), read_sequence_file(cols_path)};
                board = fill_semi_infinite(seqs, rows, cols);
            } else {
                if (cross_path.empty()) throw CliError("fill --mode infinite needs --cross");
                CrossSpec cross = read_cross_file(cross_path);
                // Window centred on the seeded rows/columns 0 and 1.
                WindowBounds bounds{1 - rows / 2, (1 - rows / 2) + rows - 1,
                                    1 - cols / 2, (1 - cols / 2) + cols - 1};
                board = fill_infinite(cross, bounds);
            }
            if (format == "csv")
                std::cout << board_to_csv(board);
            else if (format == "ascii")
                std::cout << render_ascii(board);
            else
                std::cout << board_to_json(board) << "\n";
            return 0;
        }

        if (*verify_cmd) {
            IntGrid board = load_board(board_path);
            Boundary boundary = family == "torus" || family == "harmonic-torus"
                                    ? Boundary::periodic
                                    : Boundary::flat;
            Neighbourhood nb = neighbourhood_text == "moore" ? Neighbourhood::moore
                                                             : Neighbourhood::neumann;
            EquationMode eq = equation_text == "sum" ? EquationMode::sum : EquationMode::average;
            if (family == "neumann-square") nb = Neighbourhood::neumann;
            if (family == "harmonic-torus") {
                nb = Neighbourhood::neumann;
                eq = EquationMode::average;
            }
            if (family == "square" || family == "neumann-square") {
                if (board.dims.size() != 2 || board.dims[0] != board.dims[1])
                    throw CliError("family requires a square 2-D board");
            }
            BoardSpec spec(board.dims,
                           std::vector<Boundary>(board.dims.size(), boundary), nb, eq);
            std::vector<Violation> violations = verify_board(board, spec);
            std::cout << violations_to_json(violations) << "\n";
            return violations.empty() ? 0 : 1;
        }

        if (*render_cmd) {
            std::cout << render_ascii(load_board(board_path));
            return 0;
        }

        if (*scan_cmd) {
            std::vector<RationalSolution> solutions = rational_solutions_scan(nmax);
            if (format == "csv") {
                for (const RationalSolution& s : solutions)
                    std::cout << s.N << "," << s.p << "," << s.q << "\n";
            } else {
                std::cout << rational_solutions_to_json(solutions) << "\n";
            }
            return 0;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
