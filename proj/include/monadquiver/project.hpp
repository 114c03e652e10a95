#pragma once

// Project files: JSON ingestion and canonical serialization of fields,
// algebras, morphisms, quivers, monad quivers, quiver modules and tagged
// elements. Everything referenced is resolved and validated on load; errors
// carry the entity path. Scalars follow the project-wide conventions:
// rationals as strings "a/b" with b > 0 and gcd(a, b) = 1, prime-field
// residues as integers in [0, p). Edge maps are written against the
// canonical extension quotient basis; the loader recomputes the presentation
// and rejects maps of stale shape.

#include "monadquiver/monadquiver.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace mq {

using Json = nlohmann::json;

class ProjectError : public std::runtime_error {
public:
    explicit ProjectError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ProjectElement {
    std::string module;
    std::size_t vertex = 0;
    Vec coords;
};

struct Project {
    Field field = Field::rationals();
    std::map<std::string, FDAlgebra> algebras;
    std::map<std::string, AlgebraMorphism> morphisms;
    std::optional<Quiver> quiver;
    std::optional<MonadQuiver> monad_quiver;
    std::map<std::string, QuiverModule> modules;
    std::map<std::string, ProjectElement> elements;
};

// ---- scalar / matrix conversions ---------------------------------------------

inline Json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return Json(s.residue_value());
    return Json(s.to_string());
}

inline Scalar scalar_from_json(const Field& f, const Json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
        if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    } catch (const std::exception& e) {
        throw ProjectError(where + ": bad scalar (" + e.what() + ")");
    }
    throw ProjectError(where + ": scalar must be an integer or a string");
}

inline Json matrix_to_json(const LinearMap& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline LinearMap matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols,
                                  const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw ProjectError(where + ": expected " + std::to_string(rows) + " rows, got " +
                           (j.is_array() ? std::to_string(j.size()) : std::string("non-array")));
    LinearMap m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw ProjectError(where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) +
                               " entries");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(f, row[c], where);
    }
    return m;
}

inline Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

inline Vec vec_from_json(const Field& f, const Json& j, std::size_t len, const std::string& where) {
    if (!j.is_array() || j.size() != len)
        throw ProjectError(where + ": expected a vector of length " + std::to_string(len));
    Vec v;
    v.reserve(len);
    for (const auto& e : j) v.push_back(scalar_from_json(f, e, where));
    return v;
}

// ---- field ---------------------------------------------------------------------

inline Json field_to_json(const Field& f) {
    Json j;
    if (f.is_rationals()) {
        j["kind"] = "rationals";
    } else {
        j["kind"] = "prime-field";
        j["characteristic"] = f.characteristic();
    }
    return j;
}

inline Field field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ProjectError("field: expected an object with a kind");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rationals") return Field::rationals();
    if (kind == "prime-field") {
        if (!j.contains("characteristic")) throw ProjectError("field: prime-field needs a characteristic");
        try {
            return Field::prime(j.at("characteristic").get<std::uint64_t>());
        } catch (const std::exception& e) {
            throw ProjectError(std::string("field: ") + e.what());
        }
    }
    throw ProjectError("field: unknown kind '" + kind + "'");
}

// ---- algebras and morphisms ------------------------------------------------------

inline Json algebra_to_json(const FDAlgebra& a) {
    Json j;
    j["dim"] = a.dim();
    Json mul = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < a.dim(); ++c) row.push_back(vec_to_json(a.mul_basis(i, c)));
        mul.push_back(std::move(row));
    }
    j["mul"] = std::move(mul);
    j["unit"] = vec_to_json(a.unit());
    return j;
}

inline FDAlgebra algebra_from_json(const Field& f, const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("mul") || !j.contains("unit"))
        throw ProjectError(where + ": algebra needs dim, mul and unit");
    const std::size_t n = j.at("dim").get<std::size_t>();
    if (n == 0) throw ProjectError(where + ": dim must be positive");
    const Json& mul = j.at("mul");
    if (!mul.is_array() || mul.size() != n)
        throw ProjectError(where + ": mul must be a dim x dim table of coordinate vectors");
    std::vector<std::vector<Vec>> table;
    for (std::size_t i = 0; i < n; ++i) {
        if (!mul[i].is_array() || mul[i].size() != n)
            throw ProjectError(where + ": mul row " + std::to_string(i) + " must have dim entries");
        std::vector<Vec> row;
        for (std::size_t c = 0; c < n; ++c)
            row.push_back(vec_from_json(f, mul[i][c],
                                        n, where + ".mul[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
        table.push_back(std::move(row));
    }
    FDAlgebra a(f, std::move(table), vec_from_json(f, j.at("unit"), n, where + ".unit"));
    const auto rep = validate_algebra(a);
    if (!rep.pass)
        throw ProjectError(where + ": " + rep.message + " (" + rep.witnesses.front().to_string() + ")");
    return a;
}

inline Json morphism_to_json(const AlgebraMorphism& phi, const std::string& source_name,
                             const std::string& target_name) {
    Json j;
    j["source"] = source_name;
    j["target"] = target_name;
    j["matrix"] = matrix_to_json(phi.matrix());
    return j;
}

// ---- project -----------------------------------------------------------------------

inline Project project_from_json(const Json& root, const std::string& context) {
    if (!root.is_object()) throw ProjectError(context + ": project must be a JSON object");
    Project p;
    try {
        p.field = field_from_json(root.at("field"));
    } catch (const Json::exception&) {
        throw ProjectError(context + ": missing field section");
    }

    if (root.contains("algebras")) {
        for (const auto& [name, body] : root.at("algebras").items())
            p.algebras.emplace(name, algebra_from_json(p.field, body, context + ": algebras/" + name));
    }

    if (root.contains("morphisms")) {
        for (const auto& [name, body] : root.at("morphisms").items()) {
            const std::string where = context + ": morphisms/" + name;
            if (!body.is_object() || !body.contains("source") || !body.contains("target") ||
                !body.contains("matrix"))
                throw ProjectError(where + ": morphism needs source, target and matrix");
            const std::string sname = body.at("source").get<std::string>();
            const std::string tname = body.at("target").get<std::string>();
            const auto sit = p.algebras.find(sname);
            const auto tit = p.algebras.find(tname);
            if (sit == p.algebras.end()) throw ProjectError(where + ": unresolved source algebra " + sname);
            if (tit == p.algebras.end()) throw ProjectError(where + ": unresolved target algebra " + tname);
            AlgebraMorphism phi(sit->second, tit->second,
                                matrix_from_json(p.field, body.at("matrix"), tit->second.dim(),
                                                 sit->second.dim(), where + ".matrix"));
            const auto rep = validate_morphism(phi);
            if (!rep.pass)
                throw ProjectError(where + ": " + rep.message + " (" + rep.witnesses.front().to_string() + ")");
            p.morphisms.emplace(name, std::move(phi));
        }
    }

    if (root.contains("quiver")) {
        const Json& q = root.at("quiver");
        const std::string where = context + ": quiver";
        if (!q.is_object() || !q.contains("vertices"))
            throw ProjectError(where + ": quiver needs a vertex list");
        std::vector<std::string> vertices;
        for (const auto& v : q.at("vertices")) vertices.push_back(v.get<std::string>());
        std::vector<QuiverEdge> edges;
        if (q.contains("edges")) {
            for (const auto& e : q.at("edges")) {
                if (!e.is_object() || !e.contains("name") || !e.contains("src") || !e.contains("dst"))
                    throw ProjectError(where + ": each edge needs name, src, dst");
                const std::string src = e.at("src").get<std::string>();
                const std::string dst = e.at("dst").get<std::string>();
                const auto find = [&](const std::string& n) -> std::size_t {
                    for (std::size_t i = 0; i < vertices.size(); ++i)
                        if (vertices[i] == n) return i;
                    throw ProjectError(where + ": unresolved vertex " + n);
                };
                edges.push_back({e.at("name").get<std::string>(), find(src), find(dst)});
            }
        }
        try {
            p.quiver = Quiver(std::move(vertices), std::move(edges));
        } catch (const std::exception& e) {
            throw ProjectError(where + ": " + e.what());
        }
    }

    if (root.contains("monad_quiver")) {
        const std::string where = context + ": monad_quiver";
        if (!p.quiver) throw ProjectError(where + ": a quiver section is required");
        const Json& mq_json = root.at("monad_quiver");
        std::vector<FDAlgebra> vertex_algebras;
        for (const auto& vname : p.quiver->vertices()) {
            if (!mq_json.contains("vertex_algebra") || !mq_json.at("vertex_algebra").contains(vname))
                throw ProjectError(where + ": vertex " + vname + " has no algebra assigned");
            const std::string aname = mq_json.at("vertex_algebra").at(vname).get<std::string>();
            const auto it = p.algebras.find(aname);
            if (it == p.algebras.end()) throw ProjectError(where + ": unresolved algebra " + aname);
            vertex_algebras.push_back(it->second);
        }
        std::vector<AlgebraMorphism> edge_morphisms;
        for (const auto& e : p.quiver->edges()) {
            if (!mq_json.contains("edge_morphism") || !mq_json.at("edge_morphism").contains(e.name))
                throw ProjectError(where + ": edge " + e.name + " has no morphism assigned");
            const std::string mname = mq_json.at("edge_morphism").at(e.name).get<std::string>();
            const auto it = p.morphisms.find(mname);
            if (it == p.morphisms.end()) throw ProjectError(where + ": unresolved morphism " + mname);
            edge_morphisms.push_back(it->second);
        }
        try {
            p.monad_quiver = MonadQuiver(*p.quiver, std::move(vertex_algebras), std::move(edge_morphisms));
        } catch (const std::exception& e) {
            throw ProjectError(where + ": " + e.what());
        }
        const auto rep = validate_monad_quiver(*p.monad_quiver);
        if (!rep.pass)
            throw ProjectError(where + ": " + rep.message + " (" + rep.witnesses.front().to_string() + ")");
    }

    if (root.contains("modules")) {
        if (!p.monad_quiver) throw ProjectError(context + ": modules need a monad_quiver section");
        for (const auto& [name, body] : root.at("modules").items()) {
            const std::string where = context + ": modules/" + name;
            if (!body.is_object() || !body.contains("vertex_modules"))
                throw ProjectError(where + ": module needs vertex_modules");
            std::vector<ModuleObject> vms;
            for (std::size_t v = 0; v < p.quiver->vertex_count(); ++v) {
                const std::string vname = p.quiver->vertex_name(v);
                if (!body.at("vertex_modules").contains(vname))
                    throw ProjectError(where + ": vertex " + vname + " has no module");
                const Json& vm = body.at("vertex_modules").at(vname);
                if (!vm.is_object() || !vm.contains("dim") || !vm.contains("action"))
                    throw ProjectError(where + "/" + vname + ": vertex module needs dim and action");
                const std::size_t d = vm.at("dim").get<std::size_t>();
                const FDAlgebra& a = p.monad_quiver->algebra_at(v);
                LinearMap action = matrix_from_json(p.field, vm.at("action"), d, a.dim() * d,
                                                    where + "/" + vname + ".action");
                ModuleObject mod(a, d, std::move(action));
                const auto rep = validate_module(mod);
                if (!rep.pass)
                    throw ProjectError(where + "/" + vname + ": " + rep.message + " (" +
                                       rep.witnesses.front().to_string() + ")");
                vms.push_back(std::move(mod));
            }
            std::vector<LinearMap> edge_maps;
            for (const auto& e : p.quiver->edges()) {
                if (!body.contains("edge_maps") || !body.at("edge_maps").contains(e.name))
                    throw ProjectError(where + ": edge " + e.name + " has no structure map");
                const auto ei = p.quiver->edge_index(e.name);
                const ExtensionResult ext =
                    extend_scalars(p.monad_quiver->edge_morphism(*ei), vms[e.src]);
                edge_maps.push_back(matrix_from_json(p.field, body.at("edge_maps").at(e.name),
                                                     vms[e.dst].dim(), ext.module.dim(),
                                                     where + ".edge_maps/" + e.name +
                                                         " (canonical extension quotient basis)"));
            }
            try {
                QuiverModule qm = QuiverModule::build(*p.monad_quiver, std::move(vms), std::move(edge_maps));
                const auto rep = validate_umodule(qm);
                if (!rep.pass)
                    throw ProjectError(where + ": " + rep.message + " (" +
                                       rep.witnesses.front().to_string() + ")");
                p.modules.emplace(name, std::move(qm));
            } catch (const ProjectError&) {
                throw;
            } catch (const std::exception& e) {
                throw ProjectError(where + ": " + e.what());
            }
        }
    }

    if (root.contains("elements")) {
        for (const auto& [name, body] : root.at("elements").items()) {
            const std::string where = context + ": elements/" + name;
            if (!body.is_object() || !body.contains("module") || !body.contains("vertex") ||
                !body.contains("coords"))
                throw ProjectError(where + ": element needs module, vertex and coords");
            ProjectElement el;
            el.module = body.at("module").get<std::string>();
            const auto it = p.modules.find(el.module);
            if (it == p.modules.end()) throw ProjectError(where + ": unresolved module " + el.module);
            const std::string vname = body.at("vertex").get<std::string>();
            el.vertex = p.quiver->vertex_index(vname);
            el.coords = vec_from_json(p.field, body.at("coords"), it->second.at(el.vertex).dim(),
                                      where + ".coords");
            p.elements.emplace(name, std::move(el));
        }
    }
    return p;
}

inline Project parse_project_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProjectError(path + ": cannot open file");
    Json root;
    try {
        in >> root;
    } catch (const Json::exception& e) {
        throw ProjectError(path + ": JSON syntax error: " + e.what());
    }
    return project_from_json(root, path);
}

inline Json project_to_json(const Project& p) {
    Json root;
    root["field"] = field_to_json(p.field);
    if (!p.algebras.empty()) {
        Json a;
        for (const auto& [name, alg] : p.algebras) a[name] = algebra_to_json(alg);
        root["algebras"] = std::move(a);
    }
    if (!p.morphisms.empty()) {
        Json m;
        for (const auto& [name, phi] : p.morphisms) {
            std::string sname, tname;
            for (const auto& [an, alg] : p.algebras) {
                if (alg == phi.source()) sname = an;
                if (alg == phi.target()) tname = an;
            }
            m[name] = morphism_to_json(phi, sname, tname);
        }
        root["morphisms"] = std::move(m);
    }
    if (p.quiver) {
        Json q;
        q["vertices"] = p.quiver->vertices();
        Json edges = Json::array();
        for (const auto& e : p.quiver->edges()) {
            Json ej;
            ej["name"] = e.name;
            ej["src"] = p.quiver->vertex_name(e.src);
            ej["dst"] = p.quiver->vertex_name(e.dst);
            edges.push_back(std::move(ej));
        }
        q["edges"] = std::move(edges);
        root["quiver"] = std::move(q);
    }
    if (p.monad_quiver) {
        Json mqj;
        Json va, em;
        for (std::size_t v = 0; v < p.quiver->vertex_count(); ++v) {
            for (const auto& [an, alg] : p.algebras)
                if (alg == p.monad_quiver->algebra_at(v)) va[p.quiver->vertex_name(v)] = an;
        }
        for (std::size_t e = 0; e < p.quiver->edges().size(); ++e) {
            for (const auto& [mn, phi] : p.morphisms)
                if (phi == p.monad_quiver->edge_morphism(e)) em[p.quiver->edges()[e].name] = mn;
        }
        mqj["vertex_algebra"] = std::move(va);
        mqj["edge_morphism"] = std::move(em);
        root["monad_quiver"] = std::move(mqj);
    }
    if (!p.modules.empty()) {
        Json ms;
        for (const auto& [name, qm] : p.modules) {
            Json mj;
            Json vms;
            for (std::size_t v = 0; v < qm.quiver().vertex_count(); ++v) {
                Json vj;
                vj["dim"] = qm.at(v).dim();
                vj["action"] = matrix_to_json(qm.at(v).action());
                vms[qm.quiver().vertex_name(v)] = std::move(vj);
            }
            mj["vertex_modules"] = std::move(vms);
            Json em;
            for (std::size_t e = 0; e < qm.quiver().edges().size(); ++e)
                em[qm.quiver().edges()[e].name] = matrix_to_json(qm.listed_edge_maps()[e]);
            mj["edge_maps"] = std::move(em);
            ms[name] = std::move(mj);
        }
        root["modules"] = std::move(ms);
    }
    if (!p.elements.empty()) {
        Json els;
        for (const auto& [name, el] : p.elements) {
            Json ej;
            ej["module"] = el.module;
            ej["vertex"] = p.quiver->vertex_name(el.vertex);
            ej["coords"] = vec_to_json(el.coords);
            els[name] = std::move(ej);
        }
        root["elements"] = std::move(els);
    }
    return root;
}

// canonical text form: sorted keys, two-space indent, trailing newline
inline std::string serialize_project(const Project& p) { return project_to_json(p).dump(2) + "\n"; }

}  // namespace mq
