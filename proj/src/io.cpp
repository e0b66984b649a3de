#include "patchwork/io.hpp"

#include <fstream>

#include "patchwork/error.hpp"

namespace patchwork {

namespace {

template <class T>
T field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("field \"") + key + "\": " + e.what());
    }
}

}  // namespace

nlohmann::json triangulation_to_json(const PrimitiveComplex& k) {
    nlohmann::json j;
    j["dim"] = k.dim();
    auto& pts = j["points"] = nlohmann::json::array();
    for (const auto& p : k.points()) pts.push_back(p.coords);
    auto& facets = j["facets"] = nlohmann::json::array();
    for (const auto& f : k.polytope().facets) facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
    auto& simplices = j["maximal_simplices"] = nlohmann::json::array();
    for (const auto& s : k.maximal_simplices()) simplices.push_back(s.verts);
    return j;
}

PrimitiveComplex triangulation_from_json(const nlohmann::json& j) {
    const auto dim = field<int>(j, "dim");
    if (dim < 1) throw Error(ErrorKind::InvalidInput, "dim must be positive");
    std::vector<LatticePoint> points;
    for (auto& c : field<std::vector<std::vector<Coord>>>(j, "points")) {
        if (c.size() != static_cast<std::size_t>(dim)) throw Error(ErrorKind::DimensionMismatch, "point of wrong dimension");
        points.push_back(LatticePoint{std::move(c)});
    }
    std::vector<Facet> facets;
    const auto jf = field<nlohmann::json>(j, "facets");
    if (!jf.is_array()) throw Error(ErrorKind::InvalidInput, "facets must be an array");
    for (const auto& f : jf) {
        auto normal = field<std::vector<Coord>>(f, "normal");
        if (normal.size() != static_cast<std::size_t>(dim)) throw Error(ErrorKind::DimensionMismatch, "facet normal of wrong dimension");
        facets.push_back(Facet{std::move(normal), field<Coord>(f, "offset")});
    }
    std::vector<Simplex> simplices;
    for (auto& s : field<std::vector<std::vector<std::uint32_t>>>(j, "maximal_simplices")) simplices.push_back(Simplex{std::move(s)});
    auto polytope = LatticePolytope::from_facets(dim, facets, points);
    return build_complex(std::move(points), std::move(simplices), std::move(polytope));
}

SignDistribution signs_from_json(const nlohmann::json& j, const PrimitiveComplex& k) {
    if (j.is_object() && j.contains("values")) {
        SignDistribution eps;
        for (int b : field<std::vector<int>>(j, "values")) {
            if (b != 0 && b != 1) throw Error(ErrorKind::InvalidInput, "sign values must be 0 or 1");
            eps.bits.push_back(static_cast<std::uint8_t>(b));
        }
        if (eps.size() != k.count(0)) throw Error(ErrorKind::SizeMismatch, "sign vector length differs from the point count");
        return eps;
    }
    const auto formula = field<std::string>(j, "formula");
    NamedDistribution recipe;
    if (formula == "harnack") {
        recipe.kind = DistributionKind::Harnack;
    } else if (formula == "random") {
        recipe.kind = DistributionKind::Random;
        recipe.seed = field<std::uint64_t>(j, "seed");
        if (j.contains("trial")) recipe.trial = field<std::uint64_t>(j, "trial");
    } else if (formula == "constant") {
        recipe.kind = DistributionKind::Constant;
        recipe.constant = field<int>(j, "value");
    } else if (formula == "quadratic") {
        recipe.kind = DistributionKind::Quadratic;
        if (!j.contains("coeffs")) {
            recipe.quadratic = Quadratic::standard(k.dim());
        } else {
            const auto c = field<nlohmann::json>(j, "coeffs");
            if (c.contains("constant")) recipe.quadratic.constant = field<int>(c, "constant");
            if (c.contains("linear")) recipe.quadratic.linear = field<std::vector<int>>(c, "linear");
            if (c.contains("pairs")) {
                for (const auto& p : field<std::vector<std::vector<int>>>(c, "pairs")) {
                    if (p.size() != 2) throw Error(ErrorKind::InvalidInput, "quadratic pairs must have two indices");
                    recipe.quadratic.products.emplace_back(p[0], p[1]);
                }
            }
            if (recipe.quadratic.linear.size() > static_cast<std::size_t>(k.dim())) {
                throw Error(ErrorKind::IndexOutOfRange, "more linear coefficients than coordinates");
            }
        }
    } else {
        throw Error(ErrorKind::InvalidInput, "unknown sign formula \"" + formula + "\"");
    }
    return named_distribution(recipe, k);
}

nlohmann::json signs_to_json(const SignDistribution& eps) {
    std::vector<int> values(eps.bits.begin(), eps.bits.end());
    return {{"values", values}};
}

nlohmann::json cells_to_json(const PrimitiveComplex& k, const RealComplex& x) {
    const int n = k.dim();
    nlohmann::json j;
    auto& cells = j["cells"] = nlohmann::json::array();
    auto& faces = j["faces"] = nlohmann::json::array();
    std::vector<std::size_t> offset(static_cast<std::size_t>(x.top_dim()) + 2, 0);
    for (int r = 0; r <= x.top_dim(); ++r) offset[static_cast<std::size_t>(r) + 1] = offset[static_cast<std::size_t>(r)] + x.count(r);
    for (int r = 0; r <= x.top_dim(); ++r) {
        for (std::uint32_t i = 0; i < x.count(r); ++i) {
            const auto& c = x.cell(r, i);
            std::vector<int> arg;
            for (int b = 0; b < n; ++b) arg.push_back(static_cast<int>(c.arg >> b & 1u));
            cells.push_back({{"dim", r},
                             {"cube", {k.simplex(c.cube.lower).verts, k.simplex(c.cube.upper).verts}},
                             {"arg", arg}});
            if (r == 0) continue;
            for (auto f : x.faces(r, i)) faces.push_back({offset[static_cast<std::size_t>(r)] + i, offset[static_cast<std::size_t>(r) - 1] + f});
        }
    }
    return j;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::IoError, "cannot open " + path);
    try {
        return nlohmann::json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot open " + path);
    f << text;
    if (!f) throw Error(ErrorKind::IoError, "cannot write " + path);
}

}  // namespace patchwork
