#include "patchwork/experiments.hpp"

#include <cmath>
#include <cstdio>

#include "patchwork/error.hpp"
#include "patchwork/io.hpp"

namespace patchwork {

namespace {

void finish(ExperimentResult& r) {
    const auto n = static_cast<double>(r.trials);
    if (r.trials == 0) return;
    r.mean_b0 = static_cast<double>(r.sum_b0) / n;
    if (r.trials > 1) {
        const double ss = static_cast<double>(r.sum_sq_b0) - n * r.mean_b0 * r.mean_b0;
        r.std_b0 = std::sqrt(std::max(0.0, ss / (n - 1)));
    }
    r.ratio = r.mean_b0 / static_cast<double>(1 + r.interior);
}

std::size_t b0_of(const PrimitiveComplex& k, const RealComplex& rk, const SignDistribution& eps) {
    return components(k, build_TX(k, rk, eps)).count;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#bcbd22"};

}  // namespace

double ExperimentResult::standard_error() const { return trials == 0 ? 0.0 : std_b0 / std::sqrt(static_cast<double>(trials)); }

ExperimentResult monte_carlo_b0(const PrimitiveComplex& k, std::size_t trials, std::uint64_t seed, const std::string& id,
                                bool keep_records) {
    if (trials == 0) throw Error(ErrorKind::InvalidInput, "at least one trial is required");
    const auto rk = build_RK(k);
    ExperimentResult r;
    r.complex_id = id;
    r.trials = trials;
    r.seed = seed;
    r.interior = k.interior_vertices().size();
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto b0 = b0_of(k, rk, random_distribution(k, seed, t));
        r.sum_b0 += b0;
        r.sum_sq_b0 += b0 * b0;
        if (keep_records) r.records.push_back({t, b0});
    }
    finish(r);
    return r;
}

ExhaustiveResult exhaustive_b0(const PrimitiveComplex& k, const std::string& id) {
    const auto f0 = k.count(0);
    if (f0 > kMaxExhaustiveVertices) throw Error(ErrorKind::TooManyVertices, "exhaustive sweep limited to 20 vertices");
    const auto rk = build_RK(k);
    ExhaustiveResult out;
    out.bound = 1 + k.interior_vertices().size();
    auto& r = out.summary;
    r.complex_id = id;
    r.exhaustive = true;
    r.interior = k.interior_vertices().size();
    const std::uint64_t total = std::uint64_t{1} << f0;
    r.trials = static_cast<std::size_t>(total);
    for (std::uint64_t m = 0; m < total; ++m) {
        const auto b0 = b0_of(k, rk, distribution_from_mask(m, f0));
        ++out.histogram[b0];
        r.sum_b0 += b0;
        r.sum_sq_b0 += b0 * b0;
        if (b0 == out.bound) out.maximal.push_back(m);
    }
    finish(r);
    return out;
}

std::string render_svg(const PrimitiveComplex& k, const SignDistribution& eps) {
    if (k.dim() != 2) throw Error(ErrorKind::WrongDimension, "rendering needs a planar triangulation");
    const auto rk = build_RK(k);
    const auto x = build_TX(k, rk, eps);
    const auto comps = components(k, x);

    Coord extent = 1;
    for (const auto& v : k.polytope().vertices) extent = std::max({extent, std::abs(v[0]), std::abs(v[1])});
    const double scale = 400.0 / static_cast<double>(extent);
    const double margin = 20.0;
    const double half = 400.0 + margin;
    auto px = [&](double xv, int s) { return half + (s ? -1 : 1) * xv * scale; };
    auto py = [&](double yv, int s) { return half - (s ? -1 : 1) * yv * scale; };

    // component of each lifted triangle, from any hypersurface cell inside it
    std::vector<std::int64_t> lift_component(k.count(2) * 4, -1);
    for (int r = 0; r <= x.top_dim(); ++r) {
        for (std::uint32_t i = 0; i < x.count(r); ++i) {
            const auto& c = x.cell(r, i);
            if (c.cube.upper.dim == 2) lift_component[c.cube.upper.index * 4 + c.arg] = comps.id[static_cast<std::size_t>(r)][i];
        }
    }

    std::string out;
    const std::string size = fmt(2 * half);
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size + "\" viewBox=\"0 0 " + size + " " + size +
           "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<g class=\"triangulation\" stroke=\"#b0b0b0\" stroke-width=\"0.8\" fill=\"none\">\n";
    for (int q = 0; q < 4; ++q) {
        const int s1 = q & 1, s2 = q >> 1 & 1;
        for (std::uint32_t e = 0; e < k.count(1); ++e) {
            const auto& a = k.point(k.simplex(1, e).verts[0]);
            const auto& b = k.point(k.simplex(1, e).verts[1]);
            out += "<line x1=\"" + fmt(px(static_cast<double>(a[0]), s1)) + "\" y1=\"" + fmt(py(static_cast<double>(a[1]), s2)) +
                   "\" x2=\"" + fmt(px(static_cast<double>(b[0]), s1)) + "\" y2=\"" + fmt(py(static_cast<double>(b[1]), s2)) + "\"/>\n";
        }
    }
    out += "</g>\n";

    std::vector<std::string> groups(comps.count);
    for (std::uint32_t t = 0; t < k.count(2); ++t) {
        const auto& s = k.simplex(2, t);
        for (int q = 0; q < 4; ++q) {
            const auto comp = lift_component[t * 4 + static_cast<std::uint32_t>(q)];
            if (comp < 0) continue;
            const int s1 = q & 1, s2 = q >> 1 & 1;
            // sign of a vertex in quadrant q: eps + <vertex, q> mod 2
            auto sign = [&](std::uint32_t v) {
                const auto& p = k.point(v);
                return eps[v] ^ static_cast<bool>((p[0] & s1) ^ (p[1] & s2));
            };
            std::vector<std::pair<double, double>> mids;
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = i + 1; j < 3; ++j) {
                    if (sign(s.verts[i]) == sign(s.verts[j])) continue;
                    const auto& a = k.point(s.verts[i]);
                    const auto& b = k.point(s.verts[j]);
                    mids.emplace_back(static_cast<double>(a[0] + b[0]) / 2, static_cast<double>(a[1] + b[1]) / 2);
                }
            }
            if (mids.size() != 2) continue;
            double cx = 0, cy = 0;
            for (auto v : s.verts) {
                cx += static_cast<double>(k.point(v)[0]) / 3;
                cy += static_cast<double>(k.point(v)[1]) / 3;
            }
            auto& g = groups[static_cast<std::size_t>(comp)];
            g += "<polyline points=\"" + fmt(px(mids[0].first, s1)) + "," + fmt(py(mids[0].second, s2)) + " " + fmt(px(cx, s1)) + "," +
                 fmt(py(cy, s2)) + " " + fmt(px(mids[1].first, s1)) + "," + fmt(py(mids[1].second, s2)) + "\"/>\n";
        }
    }
    for (std::size_t c = 0; c < groups.size(); ++c) {
        out += "<g class=\"component\" id=\"component-" + std::to_string(c) + "\" stroke=\"" +
               kPalette[c % (sizeof kPalette / sizeof kPalette[0])] + "\" stroke-width=\"2.5\" fill=\"none\">\n";
        out += groups[c];
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

void render_svg(const PrimitiveComplex& k, const SignDistribution& eps, const std::string& path) {
    write_text_file(path, render_svg(k, eps));
}

nlohmann::json to_json(const ExperimentResult& r) {
    nlohmann::json j{{"complex", r.complex_id}, {"trials", r.trials},   {"seed", r.seed},         {"interior_points", r.interior},
                     {"mean_b0", r.mean_b0},    {"std_b0", r.std_b0},   {"ratio", r.ratio},       {"standard_error", r.standard_error()},
                     {"sum_b0", r.sum_b0},      {"sum_sq_b0", r.sum_sq_b0}, {"exhaustive", r.exhaustive}};
    if (!r.records.empty()) {
        auto& rec = j["records"] = nlohmann::json::array();
        for (const auto& t : r.records) rec.push_back({{"trial", t.trial}, {"b0", t.b0}});
    }
    return j;
}

nlohmann::json to_json(const HaasReport& r) {
    nlohmann::json j{{"cond1_rho_uniform", r.cond1_rho_uniform},
                     {"cond1_failing", r.cond1_failing},
                     {"cond3_d2_eq_rho", r.cond3_d2_eq_rho},
                     {"cond3_violations", r.cond3_violations},
                     {"cond4_b1_pairing", r.cond4_b1_pairing},
                     {"cond4_violations", r.cond4_violations},
                     {"predicted_maximal", prediction_name(r.predicted_maximal)}};
    j["cond2_ell"] = r.cond2_ell ? nlohmann::json(*r.cond2_ell) : nlohmann::json("not-computed");
    return j;
}

nlohmann::json report(const PrimitiveComplex& k, const SignDistribution& eps) {
    const int n = k.dim();
    const auto f = frames(k);
    const auto rk = build_RK(k);
    const auto x = build_TX(k, rk, eps);
    const auto comps = components(k, x);
    const auto uni = rho_uniformity(k, f);
    const auto kap = kappa(k, f);
    const auto interior = k.interior_vertices().size();
    const auto spheres = sphere_indicators(k, f, eps);

    HaasReport haas;
    if (n == 3) {
        haas = haas_check(k, f, eps, [&] { return h1_inclusion_surjective(k, rk, x); });
    } else {
        haas = haas_check(k, f, eps);
    }

    nlohmann::json j;
    j["dim"] = n;
    j["f_vector"] = f_vector(k);
    j["interior_points"] = interior;
    j["rho_uniform"] = uni.uniform;
    j["rho_failing"] = uni.failing;
    j["kappa"] = {{"value", kap.value}, {"exact", kap.exact}};
    j["haas"] = to_json(haas);
    j["b0"] = comps.count;
    j["betti"] = betti(x);
    auto& comp = j["components"] = nlohmann::json::array();
    for (std::uint32_t c = 0; c < comps.count; ++c) {
        std::vector<std::size_t> divisors;
        for (std::size_t d = 0; d < k.polytope().facets.size(); ++d) {
            if (comps.divisors[c] >> d & 1u) divisors.push_back(d);
        }
        comp.push_back({{"cells", comps.cells[c]}, {"divisors", divisors}, {"betti", component_betti(x, comps, c)}});
    }
    j["sphere_indicators"] = spheres;
    if (n == 2) j["laplacian_nullity"] = laplacian_nullity(k, f, eps);
    const std::size_t rs = 1 + interior;
    const std::size_t sharp = 1 + interior - std::min(interior, kap.value);
    j["bounds"] = {{"upper", rs},
                   {"upper_attained", comps.count == rs},
                   {"upper_kappa", sharp},
                   {"upper_kappa_exact", kap.exact},
                   {"upper_kappa_attained", comps.count == sharp},
                   {"lower_spheres", 1 + spheres.size()},
                   {"lower_spheres_attained", comps.count == 1 + spheres.size()}};
    j["manifold"] = manifold_check(x);
    j["avoided_lift"] = avoided_lift_check(k, f, eps, x);
    return j;
}

}  // namespace patchwork
