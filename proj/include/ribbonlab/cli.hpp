#ifndef RIBBONLAB_CLI_HPP
#define RIBBONLAB_CLI_HPP

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ribbonlab/cohomology.hpp>
#include <ribbonlab/error.hpp>
#include <ribbonlab/geometry.hpp>
#include <ribbonlab/io.hpp>
#include <ribbonlab/schur.hpp>

namespace ribbonlab::cli
{

enum Exit : int { exit_pass = 0, exit_fail = 1, exit_inconclusive = 2, exit_usage = 3 };

inline int exit_code(Verdict v)
{
    switch (v) {
        case Verdict::pass:
            return exit_pass;
        case Verdict::fail:
            return exit_fail;
        case Verdict::inconclusive:
            return exit_inconclusive;
    }
    return exit_usage;
}

struct RunConfig {
    std::string field = "Q";
    Window2D window{-4, 4, -8, 8, 2, 2};
    int bound = 12;
    std::string output;

    Field resolved_field() const
    {
        return Field::parse(field);
    }

    io::json to_json() const
    {
        return io::json{{"field", field}, {"window", io::to_json(window)}, {"bound", bound}, {"output", output}};
    }
};

namespace detail
{

inline void add_window_flags(CLI::App *cmd, RunConfig &cfg)
{
    cmd->add_option("--t-lo", cfg.window.t_lo, "lowest t-exponent");
    cmd->add_option("--t-hi", cfg.window.t_hi, "t-exponent bound (exclusive)");
    cmd->add_option("--u-lo", cfg.window.u_lo, "lowest u-exponent");
    cmd->add_option("--u-hi", cfg.window.u_hi, "u-exponent bound (exclusive)");
    cmd->add_option("--m-t", cfg.window.m_t, "t-margin");
    cmd->add_option("--m-u", cfg.window.m_u, "u-margin");
}

inline void add_common_flags(CLI::App *cmd, RunConfig &cfg)
{
    cmd->add_option("--field", cfg.field, "Q or Fp:<p>");
    cmd->add_option("--bound", cfg.bound, "truncation bound B");
    cmd->add_option("-o,--output", cfg.output, "output file (stdout if omitted)");
}

inline void emit(const io::json &j, const RunConfig &cfg, std::ostream &out)
{
    if (cfg.output.empty()) {
        out << j.dump(2) << '\n';
    } else {
        io::write_file(cfg.output, j);
    }
}

inline bool strictly_increasing_constant_step(const std::vector<long> &v)
{
    if (v.size() < 2) {
        return !v.empty();
    }
    const long step = v[1] - v[0];
    if (step <= 0) {
        return false;
    }
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] - v[i - 1] != step) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Runs the command line in-process. Returns the exit code.
inline int run_cli(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    CLI::App app{"Windowed Schur pairs in k((u))((t)) and their geometric data"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string example = "p2-line";
    int twist = 0;
    std::string pair_path;

    auto *build = app.add_subcommand("build", "build the Schur pair of a built-in example");
    build->add_option("example", example, "p2-line | even-variant | nilpotent | nodal-cubic")->required();
    build->add_option("--twist", twist, "twist m of the module");
    detail::add_window_flags(build, cfg);
    detail::add_common_flags(build, cfg);

    auto *check = app.add_subcommand("check", "verify a pair file");
    check->add_option("pair", pair_path, "pair JSON")->required();
    detail::add_common_flags(check, cfg);

    auto *report = app.add_subcommand("report", "computed tables");
    report->require_subcommand(1);

    int j = 1;
    int max_n = 6;
    auto *hilbert = report->add_subcommand("hilbert", "Hilbert function of the graded ring of A");
    hilbert->add_option("pair", pair_path, "pair JSON")->required();
    hilbert->add_option("--j", j, "number of levels");
    hilbert->add_option("--max-n", max_n, "largest degree");
    detail::add_common_flags(hilbert, cfg);

    int max_i = 2;
    std::vector<int> twists;
    auto *cohom = report->add_subcommand("cohomology", "Čech cohomology of a truncated level stack");
    cohom->add_option("--example", example, "example supplying the stack (p2-line)");
    cohom->add_option("--twist", twist, "twist m of the stack");
    cohom->add_option("--max-i", max_i, "top level i of F_0/F_{i+1}");
    cohom->add_option("--twists", twists, "explicit twists d_0,d_1,...")->delimiter(',');
    detail::add_common_flags(cohom, cfg);

    auto *picard = report->add_subcommand("picard", "dimension of the unipotent Picard part");
    picard->add_option("--max-i", max_i, "largest level i");
    detail::add_common_flags(picard, cfg);

    int max_k = 3;
    int degree_bound = 6;
    auto *demo = report->add_subcommand("demo-noncoherent", "non-stabilizing ideal chain on the nodal cubic");
    demo->add_option("--max-k", max_k, "chain length");
    demo->add_option("--degree-bound", degree_bound, "degree bound D in (x, y)");
    detail::add_window_flags(demo, cfg);
    detail::add_common_flags(demo, cfg);

    auto *order = report->add_subcommand("order-group", "generator d of the t-orders of invertible elements");
    order->add_option("--example", example, "p2-line | even-variant | nilpotent");
    order->add_option("--twist", twist, "twist m");
    detail::add_window_flags(order, cfg);
    detail::add_common_flags(order, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    if (const char *env = std::getenv("RIBBONLAB_FIELD"); env != nullptr && *env != '\0') {
        cfg.field = env;
    }

    try {
        const auto field = cfg.resolved_field();
        if (*build) {
            cfg.window.validate();
            const auto g = GeometricDatum::make(parse_example(example), twist);
            const auto P = forward_krichever(g, cfg.window, field);
            auto jp = io::pair_to_json(P, g);
            jp["config"] = cfg.to_json();
            detail::emit(jp, cfg, out);
            return exit_pass;
        }
        if (*check) {
            const auto P = io::pair_from_json(io::read_file(pair_path));
            const auto rep = check_schur_pair(P);
            auto jr = io::to_json(rep);
            jr["config"] = cfg.to_json();
            jr["config"]["window"] = io::to_json(P.window());
            jr["config"]["field"] = P.field().name();
            jr["pair"] = pair_path;
            detail::emit(jr, cfg, out);
            return exit_code(rep.verdict);
        }

        io::json jr;
        int code = exit_pass;
        const auto surfaced = [&](const error &e) {
            if (e.code() != errc::window_too_small) {
                throw;
            }
            jr["status"] = to_string(e.code());
            jr["message"] = e.what();
            code = exit_inconclusive;
        };

        if (*hilbert) {
            const auto P = io::pair_from_json(io::read_file(pair_path));
            cfg.window = P.window();
            cfg.field = P.field().name();
            jr["j"] = j;
            jr["max_n"] = max_n;
            try {
                std::vector<long> table;
                for (int n = 0; n <= max_n; ++n) {
                    table.push_back(hilbert_function(P.A, j, n));
                }
                jr["table"] = table;
                const auto pi = point_ideal_check(P.A, max_n);
                jr["point_ideal"] = io::json{{"dims", pi.dims},
                                             {"jumps", pi.jumps},
                                             {"pass", pi.pass},
                                             {"first_failure", pi.first_failure ? io::json(*pi.first_failure)
                                                                                : io::json(nullptr)}};
                jr["status"] = "ok";
                code = pi.pass ? exit_pass : exit_fail;
            } catch (const error &e) {
                surfaced(e);
            }
        } else if (*cohom) {
            LevelStack stack;
            if (!twists.empty()) {
                stack.twists = twists;
            } else {
                stack = LevelStack::for_datum(GeometricDatum::make(parse_example(example), twist), max_i);
            }
            jr["twists"] = stack.twists;
            try {
                const auto c = ribbon_cohomology(stack, cfg.bound, field);
                jr.update(io::to_json(c));
                jr["status"] = "ok";
                code = c.agree() && c.transition_surjective ? exit_pass : exit_fail;
            } catch (const error &e) {
                surfaced(e);
            }
        } else if (*picard) {
            const auto g = GeometricDatum::make(ExampleKind::p2_line, 0);
            jr["max_i"] = max_i;
            try {
                std::vector<long> dims;
                bool h0 = true;
                int d = 0;
                for (int i = 1; i <= max_i; ++i) {
                    const auto p = picard_dimension(g, i, cfg.bound, field);
                    dims.push_back(p.dimension);
                    h0 = h0 && p.h0_vanishes;
                    d = p.d;
                }
                jr["dimensions"] = dims;
                jr["d"] = d;
                jr["h0_vanishes"] = h0;
                jr["bound"] = cfg.bound;
                jr["status"] = "ok";
                code = h0 ? exit_pass : exit_fail;
            } catch (const error &e) {
                surfaced(e);
            }
        } else if (*demo) {
            if (demo->count("--t-lo") == 0) {
                cfg.window.t_lo = -max_k - 1;
            }
            if (demo->count("--t-hi") == 0) {
                cfg.window.t_hi = 1;
            }
            if (demo->count("--m-t") == 0) {
                cfg.window.m_t = 0;
            }
            cfg.window.validate();
            jr["max_k"] = max_k;
            jr["degree_bound"] = degree_bound;
            try {
                const NodalCubicRing R(field, degree_bound);
                const auto chain = noncoherent_chain(R, max_k, cfg.window);
                jr["dims"] = chain.dims;
                jr["dim_point_ideal"] = chain.dim_point_ideal;
                jr["dim_point_ideal_square"] = chain.dim_point_ideal_square;
                const bool ok = detail::strictly_increasing_constant_step(chain.dims);
                jr["strictly_increasing"] = ok;
                jr["status"] = "ok";
                code = ok ? exit_pass : exit_fail;
            } catch (const error &e) {
                surfaced(e);
            }
        } else if (*order) {
            cfg.window.validate();
            const auto g = GeometricDatum::make(parse_example(example), twist);
            jr["example"] = io::to_json(g);
            try {
                const auto og = order_group(g, cfg.window, field);
                jr["d"] = og.d;
                jr["window_limited"] = og.window_limited;
                jr["orders"] = og.orders;
                jr["candidates"] = og.candidates;
                jr["witness"] = og.witness ? io::json::array({io::to_json(og.witness->first),
                                                              io::to_json(og.witness->second)})
                                           : io::json(nullptr);
                jr["status"] = "ok";
            } catch (const error &e) {
                surfaced(e);
            }
        }
        jr["config"] = cfg.to_json();
        detail::emit(jr, cfg, out);
        return code;
    } catch (const error &e) {
        err << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace ribbonlab::cli

#endif
