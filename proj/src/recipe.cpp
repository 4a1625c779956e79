#include "polylin/recipe.hpp"

#include "polylin/autgroup.hpp"
#include "polylin/errors.hpp"
#include "polylin/tame.hpp"

#include <optional>
#include <utility>

namespace polylin {

namespace {

const Json& need_arg(const TameRecipe& r, const char* key) {
    if (!r.args.is_object() || !r.args.contains(key))
        throw DomainError(errc::invalid_recipe,
                          "op \"" + r.op + "\" needs the argument \"" + key + "\"");
    return r.args.at(key);
}

void need_children(const TameRecipe& r, std::size_t n) {
    if (r.children.size() != n)
        throw DomainError(errc::invalid_recipe, "op \"" + r.op + "\" takes " +
                                                    std::to_string(n) + " child node(s), got " +
                                                    std::to_string(r.children.size()));
}

std::vector<Scalar> scalars_from_json(const Json& j, const Field& f) {
    if (!j.is_array()) throw DomainError(errc::parse_error, "expected an array of scalars");
    std::vector<Scalar> out;
    for (const auto& s : j) {
        if (s.is_number_integer())
            out.push_back(f.from_integer(Int(s.get<long long>())));
        else if (s.is_string())
            out.push_back(f.parse(s.get<std::string>()));
        else
            throw DomainError(errc::parse_error, "scalars must be strings or integers");
    }
    return out;
}

GradedHom evaluate(const TameRecipe& r, const Field& f, const std::string& path) {
    try {
        if (r.op == "identity_k") {
            need_children(r, 0);
            return identity_hom(LatticePolytope(), f);
        }
        if (r.op == "identity") {
            need_children(r, 0);
            return identity_hom(polytope_from_json(need_arg(r, "polytope")), f);
        }
        if (r.op == "hom") {
            need_children(r, 0);
            GradedHom h = hom_from_json(r.args, f);
            if (!is_homomorphism(h))
                throw DomainError(errc::not_a_homomorphism,
                                  "matrix leaf violates the source relations");
            h.verified = true;
            return h;
        }
        if (r.op == "elementary") {
            need_children(r, 0);
            LatticePolytope p = polytope_from_json(need_arg(r, "polytope"));
            ColumnStructure col = column_from_json(need_arg(r, "column"));
            Scalar lam = scalars_from_json(Json::array({need_arg(r, "lambda")}), f)[0];
            return elementary(p, col, lam);
        }
        if (r.op == "toric") {
            need_children(r, 0);
            LatticePolytope p = polytope_from_json(need_arg(r, "polytope"));
            return toric(p, scalars_from_json(need_arg(r, "xi"), f));
        }
        if (r.op == "face_retract" || r.op == "face_include") {
            need_children(r, 0);
            LatticePolytope p = polytope_from_json(need_arg(r, "polytope"));
            std::vector<std::size_t> ids = need_arg(r, "facets").get<std::vector<std::size_t>>();
            return r.op == "face_retract" ? face_retraction(p, ids, f)
                                          : face_inclusion(p, ids, f);
        }
        if (r.op == "free_extension") {
            need_children(r, 1);
            GradedHom f0 = evaluate(r.children[0], f, path + ".0");
            LatticePolytope p = polytope_from_json(need_arg(r, "polytope"));
            LatticePolytope target = polytope_from_json(need_arg(r, "target"));
            Point apex = point_from_json(need_arg(r, "apex"));
            LaurentPoly q = laurent_from_json(need_arg(r, "q"), target.ambient_dim(), f);
            return free_extension(f0, p, apex, target, q);
        }
        if (r.op == "blowup") {
            need_children(r, 1);
            GradedHom inner = evaluate(r.children[0], f, path + ".0");
            long long c = need_arg(r, "factor").get<long long>();
            long long bound = r.args.value("bound", 0LL);
            return homothetic_blowup(inner, c, bound);
        }
        if (r.op == "star") {
            need_children(r, 2);
            GradedHom a = evaluate(r.children[0], f, path + ".0");
            GradedHom b = evaluate(r.children[1], f, path + ".1");
            return minkowski_star(a, b);
        }
        if (r.op == "change") {
            need_children(r, 1);
            GradedHom inner = evaluate(r.children[0], f, path + ".0");
            LatticePolytope src = polytope_from_json(need_arg(r, "source"));
            LatticePolytope tgt = polytope_from_json(need_arg(r, "target"));
            std::optional<AffineLatticeMap> smap, tmap;
            if (r.args.contains("source_map"))
                smap = affine_map_from_json(r.args.at("source_map"));
            if (r.args.contains("target_map"))
                tmap = affine_map_from_json(r.args.at("target_map"));
            return polytope_change(inner, src, tgt, smap, tmap);
        }
        if (r.op == "compose") {
            need_children(r, 2);
            GradedHom outer = evaluate(r.children[0], f, path + ".0");
            GradedHom inner = evaluate(r.children[1], f, path + ".1");
            return compose(outer, inner);
        }
        throw DomainError(errc::invalid_recipe, "unknown op \"" + r.op + "\"");
    } catch (const DomainError& e) {
        std::string detail = e.detail();
        if (detail.find(" [recipe node ") == std::string::npos)
            detail += " [recipe node " + path + ", op " + r.op + "]";
        throw DomainError(e.code(), detail);
    }
}

} // namespace

TameRecipe recipe_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("op"))
        throw DomainError(errc::parse_error, "a recipe node needs an \"op\" field");
    TameRecipe r;
    r.op = j.at("op").get<std::string>();
    r.args = j.value("args", Json::object());
    if (j.contains("children"))
        for (const auto& c : j.at("children")) r.children.push_back(recipe_from_json(c));
    return r;
}

Json recipe_to_json(const TameRecipe& r) {
    Json out;
    out["op"] = r.op;
    out["args"] = r.args;
    Json kids = Json::array();
    for (const auto& c : r.children) kids.push_back(recipe_to_json(c));
    out["children"] = std::move(kids);
    return out;
}

GradedHom evaluate_recipe(const TameRecipe& r, const Field& f) {
    return evaluate(r, f, "root");
}

} // namespace polylin
