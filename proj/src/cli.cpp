#include "polylin/cli.hpp"

#include "polylin/autgroup.hpp"
#include "polylin/errors.hpp"
#include "polylin/json_io.hpp"
#include "polylin/recipe.hpp"
#include "polylin/semigroup.hpp"
#include "polylin/tame.hpp"
#include "polylin/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace polylin {

namespace {

// A payload argument is either inline JSON or a path to a JSON file.
Json load_json(const std::string& arg) {
    std::string trimmed = arg;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    if (!trimmed.empty() && (trimmed[0] == '{' || trimmed[0] == '[')) return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw DomainError(errc::parse_error, "cannot read file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return Json::parse(buf.str());
}

struct Session {
    std::string field_name = "Q";
    long long prime = 0;
    unsigned long long seed = 0;
    long long relation_degree = 0;

    Field field() const {
        if (field_name == "Fp") {
            if (prime <= 0)
                throw DomainError(errc::not_prime, "the Fp field needs -p with a prime");
            return Field::prime(prime);
        }
        return Field::rationals();
    }
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

long long effective_degree(const Session& s, const LatticePolytope& source) {
    if (s.relation_degree > 0) return s.relation_degree;
    if (source.is_empty()) return 0;
    return generation_degree(source);
}

std::vector<NormalFormBlock> blocks_from_json(const Json& j, const Field& f) {
    if (!j.is_array()) throw DomainError(errc::parse_error, "blocks must be a JSON array");
    std::vector<NormalFormBlock> blocks;
    for (const auto& jb : j) {
        NormalFormBlock b;
        b.facet = jb.at("facet").get<std::size_t>();
        for (const auto& jl : jb.at("lambdas")) {
            ColumnStructure col = column_from_json(jl.at("column"));
            const Json& lam = jl.at("lambda");
            Scalar s = lam.is_number_integer() ? f.from_integer(Int(lam.get<long long>()))
                                               : f.parse(lam.get<std::string>());
            b.lambdas.emplace_back(col, s);
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

} // namespace

int dispatch(std::vector<std::string> args, std::ostream& out) {
    CLI::App app{"exact linear algebra over lattice polytopes"};
    app.require_subcommand(1);

    Session session;
    app.add_option("--field", session.field_name, "coefficient field")
        ->check(CLI::IsMember({"Q", "Fp"}))
        ->capture_default_str();
    app.add_option("-p,--prime", session.prime, "prime for the Fp field");
    app.add_option("--seed", session.seed, "seed for randomized sweeps")->capture_default_str();
    app.add_option("--relation-degree", session.relation_degree,
                   "relation degree bound (0 = generation degree)")
        ->capture_default_str();

    std::string in_arg, source_arg, target_arg, hom_arg, lhs_arg, rhs_arg;
    std::string column_arg, lambda_arg, xi_arg, sigma_arg, blocks_arg, facets_arg;
    std::string fibration_arg, apex_arg, q_arg, source_map_arg, target_map_arg;
    std::string alpha_arg, name_arg;
    long long degree_arg = 1, factor_arg = 1, bound_arg = 0, max_degree_arg = 0;
    std::size_t n_arg = 1, d_arg = 1;
    bool include_flag = false;

    // poly: polytope inspection and construction
    auto* poly = app.add_subcommand("poly", "polytope queries");
    poly->require_subcommand(1);

    auto* poly_info = poly->add_subcommand("info", "summary of a polytope");
    poly_info->add_option("--in", in_arg, "polytope JSON")->required();
    poly_info->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        Json j;
        j["name"] = p.name();
        j["ambient_dim"] = p.ambient_dim();
        j["dim"] = p.dim();
        j["vertex_count"] = p.vertices().size();
        j["point_count"] = p.point_count();
        j["facet_count"] = p.facets().size();
        j["normalized"] = is_normalized(p);
        emit(out, j);
    });

    auto* poly_points = poly->add_subcommand("points", "lattice points");
    poly_points->add_option("--in", in_arg, "polytope JSON")->required();
    poly_points->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        Json j;
        j["count"] = p.point_count();
        j["lattice_points"] = points_to_json(p.lattice_points());
        emit(out, j);
    });

    auto* poly_facets = poly->add_subcommand("facets", "facet inequalities");
    poly_facets->add_option("--in", in_arg, "polytope JSON")->required();
    poly_facets->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        Json facets = Json::array();
        for (const auto& f : p.facets()) {
            Json jf;
            jf["normal"] = point_to_json(f.normal);
            jf["offset"] = f.offset;
            jf["points"] = points_to_json(f.points);
            facets.push_back(std::move(jf));
        }
        Json j;
        j["count"] = facets.size();
        j["facets"] = std::move(facets);
        emit(out, j);
    });

    auto* poly_columns = poly->add_subcommand("columns", "column structures");
    poly_columns->add_option("--in", in_arg, "polytope JSON")->required();
    poly_columns->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        Json cols = Json::array();
        for (const auto& c : column_vectors(p)) cols.push_back(column_to_json(c));
        Json j;
        j["count"] = cols.size();
        j["columns"] = std::move(cols);
        emit(out, j);
    });

    auto* poly_sym = poly->add_subcommand("symmetries", "lattice symmetries");
    poly_sym->add_option("--in", in_arg, "polytope JSON")->required();
    poly_sym->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        Json syms = Json::array();
        for (const auto& s : symmetries(p, session.field()))
            syms.push_back(affine_map_to_json(s.map));
        Json j;
        j["count"] = syms.size();
        j["symmetries"] = std::move(syms);
        emit(out, j);
    });

    auto* poly_hilbert = poly->add_subcommand("hilbert", "graded component size");
    poly_hilbert->add_option("--in", in_arg, "polytope JSON")->required();
    poly_hilbert->add_option("--degree", degree_arg, "degree to count")->required();
    poly_hilbert->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        Json j;
        j["degree"] = degree_arg;
        j["value"] = hilbert(p, degree_arg);
        emit(out, j);
    });

    auto* poly_rel = poly->add_subcommand("relations", "binomial relations");
    poly_rel->add_option("--in", in_arg, "polytope JSON")->required();
    poly_rel->add_option("--max-degree", max_degree_arg,
                         "highest relation degree (0 = generation degree)");
    poly_rel->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        long long maxd = max_degree_arg > 0 ? max_degree_arg : generation_degree(p);
        Json rels = Json::array();
        for (const auto& rel : binomial_relations(p, maxd))
            rels.push_back(relation_to_json(rel));
        Json j;
        j["max_degree"] = maxd;
        j["count"] = rels.size();
        j["relations"] = std::move(rels);
        emit(out, j);
    });

    auto* poly_dilate = poly->add_subcommand("dilate", "integer dilation");
    poly_dilate->add_option("--in", in_arg, "polytope JSON")->required();
    poly_dilate->add_option("--factor", factor_arg, "dilation factor")->required();
    poly_dilate->add_option("--name", name_arg, "name for the result");
    poly_dilate->callback([&] {
        LatticePolytope p = dilate(polytope_from_json(load_json(in_arg)), factor_arg);
        if (!name_arg.empty()) p.set_name(name_arg);
        emit(out, polytope_to_json(p, true));
    });

    auto* poly_pyramid = poly->add_subcommand("pyramid", "pyramid splits");
    poly_pyramid->add_option("--in", in_arg, "polytope JSON")->required();
    poly_pyramid->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        Json splits = Json::array();
        for (const auto& s : is_pyramid(p)) {
            Json js;
            js["apex"] = point_to_json(s.apex);
            js["base"] = polytope_to_json(s.base);
            splits.push_back(std::move(js));
        }
        Json j;
        j["count"] = splits.size();
        j["splits"] = std::move(splits);
        emit(out, j);
    });

    // hom: graded homomorphisms between polytopal algebras
    auto* hom = app.add_subcommand("hom", "homomorphism queries");
    hom->require_subcommand(1);

    auto* hom_eq = hom->add_subcommand("equations", "defining equations of the hom variety");
    hom_eq->add_option("--source", source_arg, "source polytope JSON")->required();
    hom_eq->add_option("--target", target_arg, "target polytope JSON")->required();
    hom_eq->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(source_arg));
        LatticePolytope q = polytope_from_json(load_json(target_arg));
        emit(out, equations_to_json(hom_equations(p, q, session.relation_degree)));
    });

    auto* hom_check = hom->add_subcommand("check", "test the defining relations");
    hom_check->add_option("--hom", hom_arg, "hom JSON")->required();
    hom_check->callback([&] {
        GradedHom h = hom_from_json(load_json(hom_arg), session.field());
        Json j;
        j["is_homomorphism"] = is_homomorphism(h, session.relation_degree);
        j["relation_degree"] = effective_degree(session, h.source);
        emit(out, j);
    });

    auto* hom_comp = hom->add_subcommand("compose", "composite outer after inner");
    hom_comp->add_option("--outer", lhs_arg, "outer hom JSON")->required();
    hom_comp->add_option("--inner", rhs_arg, "inner hom JSON")->required();
    hom_comp->callback([&] {
        Field f = session.field();
        GradedHom g = hom_from_json(load_json(lhs_arg), f);
        GradedHom h = hom_from_json(load_json(rhs_arg), f);
        emit(out, hom_to_json(compose(g, h)));
    });

    auto* hom_rank = hom->add_subcommand("rank", "degree-one rank data");
    hom_rank->add_option("--hom", hom_arg, "hom JSON")->required();
    hom_rank->callback([&] {
        GradedHom h = hom_from_json(load_json(hom_arg), session.field());
        RankInfo info = degree1_rank(h);
        Json j;
        j["rank"] = info.rank;
        j["injective"] = info.injective;
        j["surjective"] = info.surjective;
        emit(out, j);
    });

    auto* hom_tangent = hom->add_subcommand("tangent-dim", "tangent dimension at the identity");
    hom_tangent->add_option("--in", in_arg, "polytope JSON")->required();
    hom_tangent->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        Json j;
        j["dim"] = tangent_dim(p, session.relation_degree);
        j["predicted"] = predicted_gamma_dim(p);
        emit(out, j);
    });

    auto* hom_idem = hom->add_subcommand("idempotent", "test f∘f = f");
    hom_idem->add_option("--hom", hom_arg, "hom JSON")->required();
    hom_idem->callback([&] {
        GradedHom h = hom_from_json(load_json(hom_arg), session.field());
        Json j;
        j["idempotent"] = is_idempotent(h);
        emit(out, j);
    });

    // auto: distinguished automorphisms
    auto* aut = app.add_subcommand("auto", "automorphism constructions");
    aut->require_subcommand(1);

    auto* aut_elem = aut->add_subcommand("elementary", "unipotent column map");
    aut_elem->add_option("--in", in_arg, "polytope JSON")->required();
    aut_elem->add_option("--column", column_arg, "column structure JSON")->required();
    aut_elem->add_option("--lambda", lambda_arg, "scalar parameter")->required();
    aut_elem->callback([&] {
        Field f = session.field();
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        ColumnStructure col = column_from_json(load_json(column_arg));
        emit(out, hom_to_json(elementary(p, col, f.parse(lambda_arg))));
    });

    auto* aut_toric = aut->add_subcommand("toric", "diagonal torus map");
    aut_toric->add_option("--in", in_arg, "polytope JSON")->required();
    aut_toric->add_option("--xi", xi_arg, "JSON list of nonzero scalars")->required();
    aut_toric->callback([&] {
        Field f = session.field();
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        std::vector<Scalar> xi;
        for (const auto& s : load_json(xi_arg))
            xi.push_back(s.is_number_integer() ? f.from_integer(Int(s.get<long long>()))
                                               : f.parse(s.get<std::string>()));
        emit(out, hom_to_json(toric(p, xi)));
    });

    auto* aut_nf = aut->add_subcommand("normal-form", "block composite of column maps");
    aut_nf->add_option("--in", in_arg, "polytope JSON")->required();
    aut_nf->add_option("--sigma", sigma_arg, "affine symmetry JSON")->required();
    aut_nf->add_option("--xi", xi_arg, "JSON list of torus scalars")->required();
    aut_nf->add_option("--blocks", blocks_arg, "ordered JSON list of blocks")->required();
    aut_nf->callback([&] {
        Field f = session.field();
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        AffineLatticeMap sigma = affine_map_from_json(load_json(sigma_arg));
        std::vector<Scalar> xi;
        for (const auto& s : load_json(xi_arg))
            xi.push_back(s.is_number_integer() ? f.from_integer(Int(s.get<long long>()))
                                               : f.parse(s.get<std::string>()));
        auto blocks = blocks_from_json(load_json(blocks_arg), f);
        emit(out, hom_to_json(compose_normal_form(p, sigma, xi, blocks, f)));
    });

    // tame: structured morphism constructions
    auto* tame = app.add_subcommand("tame", "structured morphism constructions");
    tame->require_subcommand(1);

    auto* tame_retract = tame->add_subcommand("retract", "projection onto a face");
    tame_retract->add_option("--in", in_arg, "polytope JSON")->required();
    tame_retract->add_option("--facets", facets_arg, "JSON list of facet indices")->required();
    tame_retract->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        auto ids = load_json(facets_arg).get<std::vector<std::size_t>>();
        emit(out, hom_to_json(face_retraction(p, ids, session.field())));
    });

    auto* tame_include = tame->add_subcommand("include", "inclusion of a face");
    tame_include->add_option("--in", in_arg, "polytope JSON")->required();
    tame_include->add_option("--facets", facets_arg, "JSON list of facet indices")->required();
    tame_include->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        auto ids = load_json(facets_arg).get<std::vector<std::size_t>>();
        emit(out, hom_to_json(face_inclusion(p, ids, session.field())));
    });

    auto* tame_fib = tame->add_subcommand("fibrations", "segmental fibration search");
    tame_fib->add_option("--in", in_arg, "polytope JSON")->required();
    tame_fib->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        Json fibs = Json::array();
        for (const auto& fib : detect_segmental_fibrations(p))
            fibs.push_back(fibration_to_json(fib));
        Json j;
        j["count"] = fibs.size();
        j["fibrations"] = std::move(fibs);
        emit(out, j);
    });

    auto* tame_fibret = tame->add_subcommand("fib-retract", "retraction along a fibration");
    tame_fibret->add_option("--in", in_arg, "polytope JSON")->required();
    tame_fibret->add_option("--fibration", fibration_arg, "fibration JSON")->required();
    tame_fibret->add_flag("--include", include_flag, "emit the inclusion instead");
    tame_fibret->callback([&] {
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        Fibration fib = fibration_from_json(load_json(fibration_arg), p);
        GradedHom h = include_flag ? fibration_inclusion(fib, session.field())
                                   : fibration_retraction(fib, session.field());
        emit(out, hom_to_json(h));
    });

    auto* tame_blowup = tame->add_subcommand("blowup", "homothetic blow-up");
    tame_blowup->add_option("--hom", hom_arg, "hom JSON")->required();
    tame_blowup->add_option("--factor", factor_arg, "dilation factor")->required();
    tame_blowup->add_option("--bound", bound_arg, "witness search bound (0 = default)");
    tame_blowup->callback([&] {
        GradedHom h = hom_from_json(load_json(hom_arg), session.field());
        emit(out, hom_to_json(homothetic_blowup(h, factor_arg, bound_arg)));
    });

    auto* tame_star = tame->add_subcommand("star", "columnwise product of two homs");
    tame_star->add_option("--lhs", lhs_arg, "hom JSON")->required();
    tame_star->add_option("--rhs", rhs_arg, "hom JSON")->required();
    tame_star->callback([&] {
        Field f = session.field();
        GradedHom a = hom_from_json(load_json(lhs_arg), f);
        GradedHom b = hom_from_json(load_json(rhs_arg), f);
        emit(out, hom_to_json(minkowski_star(a, b)));
    });

    auto* tame_extend = tame->add_subcommand("extend", "free extension over a pyramid apex");
    tame_extend->add_option("--hom", hom_arg, "base map JSON")->required();
    tame_extend->add_option("--in", in_arg, "pyramid polytope JSON")->required();
    tame_extend->add_option("--apex", apex_arg, "apex point JSON")->required();
    tame_extend->add_option("--target", target_arg, "target polytope JSON")->required();
    tame_extend->add_option("--q", q_arg, "apex image as Laurent JSON")->required();
    tame_extend->callback([&] {
        Field f = session.field();
        GradedHom f0 = hom_from_json(load_json(hom_arg), f);
        LatticePolytope p = polytope_from_json(load_json(in_arg));
        LatticePolytope target = polytope_from_json(load_json(target_arg));
        Point apex = point_from_json(load_json(apex_arg));
        LaurentPoly q = laurent_from_json(load_json(q_arg), target.ambient_dim(), f);
        emit(out, hom_to_json(free_extension(f0, p, apex, target, q)));
    });

    auto* tame_change = tame->add_subcommand("change", "restrict or transport a hom");
    tame_change->add_option("--hom", hom_arg, "hom JSON")->required();
    tame_change->add_option("--source", source_arg, "new source polytope JSON")->required();
    tame_change->add_option("--target", target_arg, "new target polytope JSON")->required();
    tame_change->add_option("--source-map", source_map_arg, "affine transport JSON");
    tame_change->add_option("--target-map", target_map_arg, "affine transport JSON");
    tame_change->callback([&] {
        Field f = session.field();
        GradedHom h = hom_from_json(load_json(hom_arg), f);
        LatticePolytope src = polytope_from_json(load_json(source_arg));
        LatticePolytope tgt = polytope_from_json(load_json(target_arg));
        std::optional<AffineLatticeMap> smap, tmap;
        if (!source_map_arg.empty()) smap = affine_map_from_json(load_json(source_map_arg));
        if (!target_map_arg.empty()) tmap = affine_map_from_json(load_json(target_map_arg));
        emit(out, hom_to_json(polytope_change(h, src, tgt, smap, tmap)));
    });

    auto* tame_factor = tame->add_subcommand("factor-affine", "split off a dilation");
    tame_factor->add_option("--alpha", alpha_arg, "JSON list of images")->required();
    tame_factor->add_option("--factor", factor_arg, "dilation factor")->required();
    tame_factor->add_option("--n", n_arg, "simplex dimension")->required();
    tame_factor->add_option("--d", d_arg, "image dimension")->required();
    tame_factor->callback([&] {
        auto alpha = points_from_json(load_json(alpha_arg));
        AffineFactorization fac = factor_affine(alpha, factor_arg, n_arg, d_arg);
        Json j;
        j["shift"] = point_to_json(fac.shift);
        j["vertex_images"] = points_to_json(fac.vertex_images);
        emit(out, j);
    });

    auto* tame_dec = tame->add_subcommand("decompose", "simplicial column factorization");
    tame_dec->add_option("--hom", hom_arg, "hom JSON")->required();
    tame_dec->callback([&] {
        GradedHom h = hom_from_json(load_json(hom_arg), session.field());
        VeroneseDecomposition dec = decompose_veronese(h);
        Json eta = Json::array();
        for (const auto& e : dec.eta) eta.push_back(e.to_string());
        Json scalars = Json::array();
        for (const auto& t : dec.scalars) scalars.push_back(t.to_string());
        Json j;
        j["psi"] = dec.psi.to_string();
        j["eta"] = std::move(eta);
        j["scalars"] = std::move(scalars);
        emit(out, j);
    });

    auto* tame_recipe = tame->add_subcommand("recipe", "evaluate a construction tree");
    tame_recipe->add_option("--in", in_arg, "recipe JSON")->required();
    tame_recipe->callback([&] {
        TameRecipe r = recipe_from_json(load_json(in_arg));
        emit(out, hom_to_json(evaluate_recipe(r, session.field())));
    });

    // verify: the full acceptance table
    int verify_exit = 0;
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->callback([&] {
        auto results = run_acceptance(session.seed);
        bool all = true;
        for (const auto& r : results) {
            out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << ": "
                << r.detail << "\n";
            if (!r.passed) all = false;
        }
        out << (all ? "ALL PASS" : "FAILURES PRESENT") << " (" << results.size()
            << " criteria)\n";
        if (!all) verify_exit = 2;
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        Json j;
        j["error"] = e.code();
        j["detail"] = e.detail();
        emit(out, j);
        return 2;
    } catch (const nlohmann::json::exception& e) {
        Json j;
        j["error"] = errc::parse_error;
        j["detail"] = e.what();
        emit(out, j);
        return 2;
    }
    return verify_exit;
}

} // namespace polylin
