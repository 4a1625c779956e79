#include "polylin/json_io.hpp"

#include "polylin/errors.hpp"

#include <limits>
#include <string>

namespace polylin {

namespace {

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

Scalar scalar_from_json(const Json& j, const Field& f) {
    if (j.is_number_integer()) return f.from_integer(Int(j.get<long long>()));
    if (j.is_string()) return f.parse(j.get<std::string>());
    throw DomainError(errc::parse_error, "scalar entries must be strings or integers");
}

} // namespace

Json point_to_json(const Point& p) {
    Json out = Json::array();
    for (auto c : p) out.push_back(c);
    return out;
}

Point point_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError(errc::parse_error, "a point must be an integer array");
    Point p;
    for (const auto& c : j) {
        if (!c.is_number_integer())
            throw DomainError(errc::parse_error, "point coordinates must be integers");
        p.push_back(c.get<long long>());
    }
    return p;
}

Json points_to_json(const std::vector<Point>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(point_to_json(p));
    return out;
}

std::vector<Point> points_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError(errc::parse_error, "expected an array of points");
    std::vector<Point> pts;
    for (const auto& p : j) pts.push_back(point_from_json(p));
    return pts;
}

Json polytope_to_json(const LatticePolytope& p, bool with_derived) {
    Json out;
    out["name"] = p.name();
    out["ambient_dim"] = p.ambient_dim();
    out["vertices"] = points_to_json(p.vertices());
    if (with_derived) {
        out["lattice_points"] = points_to_json(p.lattice_points());
        Json facets = Json::array();
        for (const auto& f : p.facets()) {
            Json jf;
            jf["normal"] = point_to_json(f.normal);
            jf["offset"] = f.offset;
            jf["points"] = points_to_json(f.points);
            facets.push_back(std::move(jf));
        }
        out["facets"] = std::move(facets);
    }
    return out;
}

LatticePolytope polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("ambient_dim"))
        throw DomainError(errc::parse_error,
                          "a polytope needs \"ambient_dim\" and \"vertices\" fields");
    std::string name = j.value("name", std::string());
    std::size_t dim = j.at("ambient_dim").get<std::size_t>();
    return LatticePolytope::from_points(points_from_json(j.at("vertices")), dim, name);
}

Json laurent_to_json(const LaurentPoly& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json term;
        Json exps = Json::array();
        for (auto x : e) exps.push_back(x);
        term["exponents"] = std::move(exps);
        term["coeff"] = c.to_string();
        out.push_back(std::move(term));
    }
    return out;
}

LaurentPoly laurent_from_json(const Json& j, std::size_t dim, const Field& f) {
    if (!j.is_array())
        throw DomainError(errc::parse_error, "a Laurent polynomial must be an array of terms");
    LaurentPoly out(dim, f);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff"))
            throw DomainError(errc::parse_error,
                              "each term needs \"exponents\" and \"coeff\" fields");
        const auto& je = term.at("exponents");
        if (!je.is_array() || je.size() != dim)
            throw DomainError(errc::dimension_mismatch,
                              "term exponents must have length " + std::to_string(dim));
        Exponent e;
        for (const auto& x : je) e.push_back(x.get<long long>());
        out.add_term(e, scalar_from_json(term.at("coeff"), f));
    }
    return out;
}

Json hom_to_json(const GradedHom& h) {
    Json out;
    out["source"] = polytope_to_json(h.source);
    out["target"] = polytope_to_json(h.target);
    Json entries = Json::array();
    for (std::size_t r = 0; r < h.matrix.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < h.matrix.cols(); ++c)
            row.push_back(h.matrix.at(r, c).to_string());
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

GradedHom hom_from_json(const Json& j, const Field& f) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
        !j.contains("entries"))
        throw DomainError(errc::parse_error,
                          "a hom needs \"source\", \"target\" and \"entries\" fields");
    LatticePolytope src = polytope_from_json(j.at("source"));
    LatticePolytope tgt = polytope_from_json(j.at("target"));
    const auto& je = j.at("entries");
    if (!je.is_array() || je.size() != tgt.point_count())
        throw DomainError(errc::shape_mismatch,
                          "entry rows must match the target lattice point count");
    ExactMatrix m(tgt.point_count(), src.point_count(), f);
    for (std::size_t r = 0; r < je.size(); ++r) {
        const auto& row = je.at(r);
        if (!row.is_array() || row.size() != src.point_count())
            throw DomainError(errc::shape_mismatch,
                              "entry columns must match the source lattice point count");
        for (std::size_t c = 0; c < row.size(); ++c) m.at(r, c) = scalar_from_json(row.at(c), f);
    }
    return GradedHom{std::move(src), std::move(tgt), std::move(m), false};
}

Json relation_to_json(const BinomialRelation& r) {
    Json out;
    out["degree"] = r.degree;
    out["left"] = points_to_json(r.left);
    out["right"] = points_to_json(r.right);
    return out;
}

Json column_to_json(const ColumnStructure& c) {
    Json out;
    out["v"] = point_to_json(c.vector);
    out["base_facet"] = c.base_facet;
    return out;
}

ColumnStructure column_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("v") || !j.contains("base_facet"))
        throw DomainError(errc::parse_error,
                          "a column structure needs \"v\" and \"base_facet\" fields");
    ColumnStructure c;
    c.vector = point_from_json(j.at("v"));
    c.base_facet = j.at("base_facet").get<std::size_t>();
    return c;
}

Json affine_map_to_json(const AffineLatticeMap& m) {
    Json out;
    out["matrix"] = points_to_json(m.matrix_rows());
    out["translation"] = point_to_json(m.translation());
    return out;
}

AffineLatticeMap affine_map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("matrix") || !j.contains("translation"))
        throw DomainError(errc::parse_error,
                          "an affine map needs \"matrix\" and \"translation\" fields");
    return AffineLatticeMap(points_from_json(j.at("matrix")),
                            point_from_json(j.at("translation")));
}

Json equations_to_json(const HomEquations& eq) {
    Json out;
    out["relation_degree"] = eq.relation_degree;
    Json vars = Json::array();
    std::size_t nq = eq.target.point_count();
    std::size_t nvars = eq.source.point_count() * nq;
    for (std::size_t k = 0; k < nvars; ++k) {
        Json pair = Json::array();
        pair.push_back(point_to_json(eq.source.lattice_points()[k / nq]));
        pair.push_back(point_to_json(eq.target.lattice_points()[k % nq]));
        vars.push_back(std::move(pair));
    }
    out["vars"] = std::move(vars);
    Json polys = Json::array();
    for (const auto& poly : eq.polys) {
        Json jp = Json::array();
        for (const auto& [mono, coeff] : poly.terms) {
            Json term;
            Json jm = Json::array();
            for (auto v : mono) jm.push_back(v);
            term["monomial"] = std::move(jm);
            term["coeff"] = int_to_json(coeff);
            jp.push_back(std::move(term));
        }
        polys.push_back(std::move(jp));
    }
    out["polys"] = std::move(polys);
    return out;
}

Json fibration_to_json(const Fibration& fib) {
    Json out;
    if (fib.w_basis.size() == 1)
        out["w"] = points_to_json(fib.w_basis);
    else
        out["W_basis"] = points_to_json(fib.w_basis);
    out["H_point"] = point_to_json(fib.h_point);
    out["H_basis"] = points_to_json(fib.h_basis);
    return out;
}

Fibration fibration_from_json(const Json& j, const LatticePolytope& p) {
    if (!j.is_object() || !(j.contains("w") || j.contains("W_basis")) || !j.contains("H_point"))
        throw DomainError(errc::parse_error,
                          "a fibration needs \"w\" or \"W_basis\" plus \"H_point\" fields");
    const Json& jw = j.contains("w") ? j.at("w") : j.at("W_basis");
    std::vector<Point> w_basis;
    if (jw.is_array() && !jw.empty() && jw.front().is_number_integer())
        w_basis.push_back(point_from_json(jw));
    else
        w_basis = points_from_json(jw);
    std::vector<Point> h_basis;
    if (j.contains("H_basis")) h_basis = points_from_json(j.at("H_basis"));
    return Fibration{p, std::move(w_basis), point_from_json(j.at("H_point")),
                     std::move(h_basis)};
}

} // namespace polylin
