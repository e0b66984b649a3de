#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "patchwork/calculus.hpp"
#include "patchwork/constructions.hpp"
#include "patchwork/error.hpp"
#include "patchwork/experiments.hpp"
#include "patchwork/io.hpp"
#include "patchwork/real.hpp"

using namespace patchwork;
using nlohmann::json;

namespace {

struct Source {
    std::string file;
    std::string family;
    int dim = 0;
    Coord size = 0;

    void attach(CLI::App* app) {
        app->add_option("triangulation", file, "triangulation JSON file");
        app->add_option("--family", family, "knudsen, viro or itenberg-viro (instead of a file)");
        app->add_option("--dim", dim, "dimension n");
        app->add_option("--size", size, "dilation d");
    }

    std::string id() const {
        if (!file.empty()) return file;
        return family + "(" + std::to_string(dim) + "," + std::to_string(size) + ")";
    }

    PrimitiveComplex load() const {
        if (!file.empty()) return triangulation_from_json(read_json_file(file));
        if (family.empty()) throw Error(ErrorKind::InvalidInput, "give a triangulation file or --family/--dim/--size");
        if (dim < 1 || size < 1) throw Error(ErrorKind::InvalidInput, "--dim and --size must be positive");
        return generate(parse_family(family), dim, size);
    }
};

struct Signs {
    std::string file;
    std::string formula;
    std::uint64_t seed = 0;

    void attach(CLI::App* app) {
        app->add_option("--signs", file, "sign distribution JSON file");
        app->add_option("--formula", formula, "harnack, quadratic, random or constant-0 / constant-1 (instead of a file)");
        app->add_option("--seed", seed, "seed for --formula random");
    }

    SignDistribution load(const PrimitiveComplex& k) const {
        if (!file.empty()) return signs_from_json(read_json_file(file), k);
        if (formula.empty()) throw Error(ErrorKind::InvalidInput, "give --signs FILE or --formula NAME");
        if (formula == "random") return signs_from_json({{"formula", "random"}, {"seed", seed}}, k);
        if (formula == "constant-0" || formula == "constant-1") {
            return signs_from_json({{"formula", "constant"}, {"value", formula == "constant-1" ? 1 : 0}}, k);
        }
        return signs_from_json({{"formula", formula}}, k);
    }
};

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
}

void emit(const std::string& out, const json& j) { emit(out, j.dump(2) + "\n"); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial patchworking of T-hypersurfaces from primitive triangulations"};
    app.require_subcommand(1);
    std::string out;
    std::string format = "json";
    std::size_t trials = 1000;
    bool exhaustive = false;
    bool cond2 = false;
    bool records = false;
    Source src;
    Signs signs;

    auto* gen = app.add_subcommand("generate", "build a triangulation of a dilated standard simplex");
    gen->add_option("--family", src.family, "knudsen, viro or itenberg-viro")->required();
    gen->add_option("--dim", src.dim, "dimension n")->required();
    gen->add_option("--size", src.size, "dilation d")->required();
    gen->add_option("-o,--out", out, "output file");

    auto* validate = app.add_subcommand("validate", "check a triangulation and print its f-vector");
    src.attach(validate);

    auto* analyze = app.add_subcommand("analyze", "rho-uniformity, kappa and simple integrability of a triangulation");
    src.attach(analyze);
    analyze->add_option("-o,--out", out, "output file");

    auto* sign = app.add_subcommand("sign", "write a sign distribution as explicit values");
    src.attach(sign);
    signs.attach(sign);
    sign->add_option("-o,--out", out, "output file");

    auto* tx = app.add_subcommand("build-tx", "build the T-hypersurface and print its components and Betti numbers");
    src.attach(tx);
    signs.attach(tx);
    tx->add_option("-o,--out", out, "write the cell complex JSON to this file");

    auto* haas = app.add_subcommand("haas-check", "evaluate the Haas conditions for a sign distribution");
    src.attach(haas);
    signs.attach(haas);
    haas->add_flag("--cond2", cond2, "also evaluate the H1 condition (n = 3)");
    haas->add_option("-o,--out", out, "output file");

    auto* solve = app.add_subcommand("solve-harnack", "solve D^2 eps = rho off B0K");
    src.attach(solve);
    solve->add_option("-o,--out", out, "output file");

    auto* expect = app.add_subcommand("expect-b0", "expected number of components over random sign distributions");
    src.attach(expect);
    expect->add_option("--trials", trials, "number of Monte-Carlo trials");
    expect->add_option("--seed", signs.seed, "generator seed");
    expect->add_flag("--exhaustive", exhaustive, "enumerate every sign distribution instead");
    expect->add_flag("--records", records, "include per-trial b0 values");
    expect->add_option("-o,--out", out, "output file");

    auto* render = app.add_subcommand("render", "draw a planar patchwork as SVG");
    src.attach(render);
    signs.attach(render);
    render->add_option("-o,--out", out, "output file");

    auto* rep = app.add_subcommand("report", "full analysis of one sign distribution");
    src.attach(rep);
    signs.attach(rep);
    rep->add_option("--format", format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
    rep->add_option("-o,--out", out, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            emit(out, triangulation_to_json(src.load()));
        } else if (*validate) {
            const auto k = src.load();
            emit(out, json{{"valid", true},
                           {"dim", k.dim()},
                           {"f_vector", f_vector(k)},
                           {"interior_points", k.interior_vertices().size()},
                           {"normalized_volume", k.polytope().normalized_volume()}});
        } else if (*analyze) {
            const auto k = src.load();
            const auto f = frames(k);
            const auto u = rho_uniformity(k, f);
            const auto kap = kappa(k, f);
            json j{{"f_vector", f_vector(k)},
                   {"interior_points", k.interior_vertices().size()},
                   {"rho_uniform", u.uniform},
                   {"rho_failing", u.failing},
                   {"kappa", {{"value", kap.value}, {"exact", kap.exact}}},
                   {"simply_integrable", solve_simple_harnack(k, f).has_value()}};
            if (u.uniform) j["rho_chain_is_cycle"] = rho_chain(k, f).is_cycle;
            emit(out, j);
        } else if (*sign) {
            const auto k = src.load();
            emit(out, signs_to_json(signs.load(k)));
        } else if (*tx) {
            const auto k = src.load();
            const auto rk = build_RK(k);
            const auto x = build_TX(k, rk, signs.load(k));
            const auto c = components(k, x);
            if (!out.empty()) write_text_file(out, cells_to_json(k, x).dump() + "\n");
            std::cout << json{{"cells", x.size()}, {"b0", c.count}, {"betti", betti(x)}, {"manifold", manifold_check(x)}}.dump(2) << "\n";
        } else if (*haas) {
            const auto k = src.load();
            const auto f = frames(k);
            emit(out, to_json(haas_check_full(k, f, signs.load(k), cond2)));
        } else if (*solve) {
            const auto k = src.load();
            const auto sol = solve_simple_harnack(k, frames(k));
            json j{{"solvable", sol.has_value()}};
            if (sol) j["values"] = signs_to_json(*sol)["values"];
            emit(out, j);
        } else if (*expect) {
            const auto k = src.load();
            if (exhaustive) {
                const auto r = exhaustive_b0(k, src.id());
                auto j = to_json(r.summary);
                json hist = json::object();
                for (auto [b0, count] : r.histogram) hist[std::to_string(b0)] = count;
                j["histogram"] = hist;
                j["maximal_count"] = r.maximal.size();
                emit(out, j);
            } else {
                emit(out, to_json(monte_carlo_b0(k, trials, signs.seed, src.id(), records)));
            }
        } else if (*render) {
            const auto k = src.load();
            emit(out, render_svg(k, signs.load(k)));
        } else if (*rep) {
            const auto k = src.load();
            const auto eps = signs.load(k);
            if (format == "svg") {
                emit(out, render_svg(k, eps));
            } else {
                emit(out, report(k, eps));
            }
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        if (e.is_resource_cap()) return 3;
        if (e.kind() == ErrorKind::IoError) return 1;
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
