#pragma once

// Command dispatch: every command loads a project file, runs one library
// operation (or the full property suite) and emits a single machine-readable
// record on standard output. Exit codes are a stable contract: 0 pass,
// 1 fail with witnesses, 2 usage or parse or unsupported-input error.

#include "monadquiver/instances.hpp"
#include "monadquiver/project.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

namespace mq {

struct CommandRequest {
    std::string command;
    std::string project_path;
    std::optional<std::string> module_name;
    std::optional<std::string> vertex_name;
    std::optional<std::string> element_spec;  // declared name or "c1,c2,..."
    std::optional<std::string> edge_name;
    std::uint64_t seed = 20250810;
    bool pretty = false;
};

struct CommandResult {
    Json record;
    int exit_code = 0;
};

inline Json witness_to_json(const Witness& w) {
    Json j;
    j["kind"] = w.kind;
    for (const auto& [k, v] : w.fields) j[k] = v;
    return j;
}

inline Json report_to_json(const CheckReport& r) {
    Json j;
    j["status"] = r.pass ? "pass" : "fail";
    Json ws = Json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
    j["witnesses"] = std::move(ws);
    if (!r.message.empty()) j["message"] = r.message;
    if (!r.stats.empty()) {
        Json st;
        for (const auto& [k, v] : r.stats) st[k] = v;
        j["stats"] = std::move(st);
    }
    return j;
}

namespace detail {

inline const QuiverModule& resolve_module(const Project& p, const std::optional<std::string>& name) {
    require(name.has_value(), "a --module name is required for this command");
    const auto it = p.modules.find(*name);
    require(it != p.modules.end(), "unknown module " + *name);
    return it->second;
}

inline TaggedElement resolve_element(const Project& p, const QuiverModule& m, const std::string& module_name,
                                     const std::optional<std::string>& element_spec,
                                     const std::optional<std::string>& vertex_name) {
    require(element_spec.has_value(), "an --element is required for this command");
    const auto it = p.elements.find(*element_spec);
    if (it != p.elements.end()) {
        require(it->second.module == module_name,
                "element " + *element_spec + " is declared on module " + it->second.module);
        return TaggedElement{it->second.vertex, it->second.coords};
    }
    // literal "c1,c2,..." form, vertex taken from --vertex
    require(vertex_name.has_value(), "a --vertex is required with a literal element");
    const std::size_t v = m.quiver().vertex_index(*vertex_name);
    std::vector<std::string> parts;
    std::stringstream ss(*element_spec);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    require(parts.size() == m.at(v).dim(), "literal element must have " + std::to_string(m.at(v).dim()) +
                                               " coordinates at vertex " + *vertex_name);
    Vec coords;
    for (const auto& s : parts) coords.push_back(Scalar::parse(p.field, s));
    return TaggedElement{v, std::move(coords)};
}

struct Outcome {
    std::string status = "pass";  // pass | fail | error
    Json witnesses = Json::array();
    Json payload;
    std::string message;
};

inline void absorb(Outcome& o, const CheckReport& r) {
    if (!r.pass) o.status = "fail";
    for (const auto& w : r.witnesses) o.witnesses.push_back(witness_to_json(w));
    if (o.message.empty()) o.message = r.message;
}

// ---- individual commands --------------------------------------------------------

inline Outcome cmd_validate(const Project& p) {
    Outcome o;
    for (const auto& [name, a] : p.algebras) {
        const auto r = validate_algebra(a);
        o.payload["algebra:" + name] = r.pass;
        absorb(o, r);
    }
    for (const auto& [name, phi] : p.morphisms) {
        const auto r = validate_morphism(phi);
        o.payload["morphism:" + name] = r.pass;
        absorb(o, r);
    }
    if (p.monad_quiver) {
        const auto r = validate_monad_quiver(*p.monad_quiver);
        o.payload["monad_quiver"] = r.pass;
        for (const auto& [k, v] : r.stats)
            if (k.rfind("flat:", 0) == 0) o.payload[k] = (v != 0);
        absorb(o, r);
    }
    for (const auto& [name, m] : p.modules) {
        const auto r = validate_umodule(m);
        o.payload["module:" + name] = r.pass;
        absorb(o, r);
    }
    return o;
}

inline Outcome cmd_flat(const Project& p, const std::optional<std::string>& edge) {
    Outcome o;
    if (edge) {
        require(p.monad_quiver.has_value(), "flat --edge needs a monad_quiver");
        const auto ei = p.quiver->edge_index(*edge);
        require(ei.has_value(), "unknown edge " + *edge);
        o.payload["edge:" + *edge] = is_flat_morphism(p.monad_quiver->edge_morphism(*ei));
        return o;
    }
    for (const auto& [name, phi] : p.morphisms) o.payload["morphism:" + name] = is_flat_morphism(phi);
    if (p.monad_quiver)
        for (std::size_t e = 0; e < p.quiver->edges().size(); ++e)
            o.payload["edge:" + p.quiver->edges()[e].name] =
                is_flat_morphism(p.monad_quiver->edge_morphism(e));
    return o;
}

inline Outcome cmd_cartesian(const QuiverModule& m) {
    Outcome o;
    const auto r = is_cartesian(m);
    absorb(o, r);
    for (const auto& [k, v] : r.stats) o.payload[k] = v;
    return o;
}

// precondition reports for the hull-side commands: poset, flat, cartesian
inline CheckReport hull_preconditions(const QuiverModule& m) {
    CheckReport rep;
    if (!m.quiver().is_poset()) {
        rep.fail({"quiver", {}}, "quiver is not a poset");
        return rep;
    }
    for (const auto& e : m.stored_edges())
        if (!is_flat_morphism(e.morphism))
            rep.fail({"edge", {{"name", e.label}, {"reason", "not flat"}}}, "monad quiver is not flat");
    const auto cart = is_cartesian(m);
    if (!cart.pass) rep.merge(cart);
    return rep;
}

inline Outcome cmd_hull(const Project& p, const CommandRequest& req) {
    Outcome o;
    const QuiverModule& m = resolve_module(p, req.module_name);
    const TaggedElement z = resolve_element(p, m, *req.module_name, req.element_spec, req.vertex_name);
    const auto pre = hull_preconditions(m);
    if (!pre.pass) {
        absorb(o, pre);
        return o;
    }
    const CartesianHull h = cartesian_hull(m, z);
    for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v)
        o.payload["dim:" + m.quiver().vertex_name(v)] = h.family.vertex_subspaces[v].dim();
    o.payload["sweeps"] = h.sweeps;
    o.payload["cartesian"] = true;
    o.payload["contains_element"] = true;
    return o;
}

inline Outcome cmd_coherator(const Project& p, const CommandRequest& req) {
    Outcome o;
    const QuiverModule& m = resolve_module(p, req.module_name);
    const CoheratorResult coh = coherator(m);  // throws the documented refusal when rootless
    Json roots = Json::array();
    for (auto r : coh.roots) roots.push_back(m.quiver().vertex_name(r));
    o.payload["roots"] = std::move(roots);
    for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v)
        o.payload["dim:" + m.quiver().vertex_name(v)] = coh.coherated.at(v).dim();
    o.payload["counit_is_morphism"] = true;
    // idempotence: the counit of the coherated module is an isomorphism
    const CoheratorResult twice = coherator(coh.coherated);
    bool idempotent = true;
    for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v)
        if (!is_invertible(twice.counit.components[v])) idempotent = false;
    o.payload["idempotent"] = idempotent;
    if (!idempotent) o.status = "fail";
    return o;
}

inline Outcome cmd_adjcheck(const Project& p, const CommandRequest& req) {
    Outcome o;
    std::mt19937_64 rng(req.seed);
    std::int64_t checked = 0, failed = 0;

    // free -| forgetful roundtrips per algebra
    for (const auto& [name, a] : p.algebras) {
        for (int i = 0; i < 10; ++i) {
            const ModuleObject n = random_module(a, rng);
            const std::size_t r = 1 + rng() % 2;
            const LinearMap x = random_map(a.field(), n.dim(), r, rng);
            const LinearMap round = adjoint_to_linear(a, r, n, adjoint_to_module(a, r, n, x));
            ++checked;
            if (round != x) {
                ++failed;
                o.witnesses.push_back(
                    witness_to_json({"adjunction", {{"algebra", name}, {"direction", "linear"}}}));
            }
        }
    }
    // scalar-change triangle identities per morphism
    for (const auto& [name, phi] : p.morphisms) {
        for (int i = 0; i < 5; ++i) {
            const ModuleObject m = random_module(phi.source(), rng);
            const ModuleObject mp = random_module(phi.target(), rng);
            ++checked;
            if (!triangle_identities_hold(phi, m, mp)) {
                ++failed;
                o.witnesses.push_back(witness_to_json({"triangle", {{"morphism", name}}}));
            }
        }
    }
    // vertex adjunctions on a module, when one is named and the quiver is a poset
    if (req.module_name && p.monad_quiver && p.quiver->is_poset()) {
        const QuiverModule& m = resolve_module(p, req.module_name);
        const auto& u = *p.monad_quiver;
        for (std::size_t x = 0; x < p.quiver->vertex_count(); ++x) {
            const ModuleObject seed_mod = random_module(u.algebra_at(x), rng, 1, 6);
            const QuiverModule exm = ex_functor(u, x, seed_mod);
            QuiverModuleMorphism xi = random_quiver_morphism(exm, m, rng);
            QuiverModuleMorphism back =
                ex_transpose_to_quiver(exm, x, seed_mod, m, ex_transpose_to_vertex(xi, x));
            ++checked;
            bool same = true;
            for (std::size_t v = 0; v < xi.components.size(); ++v)
                if (xi.components[v] != back.components[v]) same = false;
            if (!same) {
                ++failed;
                o.witnesses.push_back(
                    witness_to_json({"ex-ev", {{"vertex", p.quiver->vertex_name(x)}}}));
            }

            const QuiverModule coem = coe_functor(u, x, seed_mod);
            QuiverModuleMorphism eta = random_quiver_morphism(m, coem, rng);
            QuiverModuleMorphism back2 =
                coe_transpose_to_quiver(m, x, seed_mod, coem, coe_transpose_to_vertex(eta, x));
            ++checked;
            bool same2 = true;
            for (std::size_t v = 0; v < eta.components.size(); ++v)
                if (eta.components[v] != back2.components[v]) same2 = false;
            if (!same2) {
                ++failed;
                o.witnesses.push_back(
                    witness_to_json({"ev-coe", {{"vertex", p.quiver->vertex_name(x)}}}));
            }
        }
    }
    o.payload["checked"] = checked;
    o.payload["failed"] = failed;
    if (failed > 0) o.status = "fail";
    return o;
}

inline Outcome cmd_cover(const Project& p, const CommandRequest& req) {
    Outcome o;
    const QuiverModule& m = resolve_module(p, req.module_name);
    require(m.quiver().is_poset(), "cover: quiver must be a poset");
    const ProjectiveCover cover = projective_cover(m);
    bool epi = is_pointwise_epi(cover.epi);
    for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) {
        o.payload["cover_dim:" + m.quiver().vertex_name(v)] = cover.cover.at(v).dim();
        o.payload["rank:" + m.quiver().vertex_name(v)] = rank(cover.epi.components[v]);
    }
    o.payload["pointwise_epi"] = epi;
    if (!epi) {
        o.status = "fail";
        o.witnesses.push_back(witness_to_json({"cover", {{"reason", "not a pointwise epimorphism"}}}));
        return o;
    }
    if (!cover.components.empty()) {
        // lift the first component's corner morphism back through the cover
        const auto& c0 = cover.components.front();
        std::vector<LinearMap> f_comps;
        for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v)
            f_comps.push_back(cover.epi.components[v].compose(cover.injections.front().components[v]));
        QuiverModuleMorphism f{c0.module, m, std::move(f_comps)};
        const LiftResult lift = lifting_check(cover.epi, c0, f);
        o.payload["lift_exact"] = lift.exact;
        if (!lift.exact) {
            o.status = "fail";
            o.witnesses.push_back(witness_to_json({"lift", {{"component", std::to_string(0)}}}));
        }
    }
    return o;
}

inline Outcome cmd_report(const Project& p, const CommandRequest& req) {
    Outcome o;
    Json checks;

    auto put = [&](const std::string& name, const Outcome& r) {
        Json j;
        j["status"] = r.status;
        if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
        if (!r.payload.is_null()) j["payload"] = r.payload;
        checks[name] = std::move(j);
        if (r.status != "pass") o.status = "fail";
    };

    put("01-validate", cmd_validate(p));
    put("02-flat", cmd_flat(p, std::nullopt));
    for (const auto& [name, m] : p.modules) put("03-cartesian:" + name, cmd_cartesian(m));
    {
        CommandRequest sub = req;
        put("04-adjcheck", cmd_adjcheck(p, sub));
    }
    for (const auto& [name, m] : p.modules) {
        if (!m.quiver().is_poset()) continue;
        CommandRequest sub = req;
        sub.module_name = name;
        put("05-cover:" + name, cmd_cover(p, sub));
    }
    for (const auto& [ename, el] : p.elements) {
        const QuiverModule& m = p.modules.at(el.module);
        Outcome sub;
        const TaggedElement z{el.vertex, el.coords};
        const SubobjectFamily fam = generated_subobject(m, z);
        const auto valid = validate_subobject_family(m, fam);
        absorb(sub, valid);
        const bool contains = fam.vertex_subspaces[el.vertex].contains(el.coords);
        const bool regen = regenerate_check(m, z);
        sub.payload["is_subobject"] = valid.pass;
        sub.payload["contains_element"] = contains;
        sub.payload["regenerates"] = regen;
        if (!contains || !regen) sub.status = "fail";
        put("06-generated:" + ename, sub);

        if (hull_preconditions(m).pass) {
            CommandRequest hreq = req;
            hreq.module_name = el.module;
            hreq.element_spec = ename;
            put("07-hull:" + ename, cmd_hull(p, hreq));
        }
    }
    for (const auto& [name, m] : p.modules) {
        if (!hull_preconditions(m).pass) continue;
        bool rooted = true;
        try {
            coherator(m);
        } catch (const std::exception&) {
            rooted = false;
        }
        if (!rooted) continue;
        CommandRequest sub = req;
        sub.module_name = name;
        put("08-coherator:" + name, cmd_coherator(p, sub));
    }

    o.payload = std::move(checks);
    return o;
}

}  // namespace detail

inline CommandResult run_command(const CommandRequest& req) {
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();
    CommandResult result;
    result.record["command"] = req.command;

    detail::Outcome o;
    try {
        const Project p = parse_project_file(req.project_path);
        if (req.command == "validate")
            o = detail::cmd_validate(p);
        else if (req.command == "flat")
            o = detail::cmd_flat(p, req.edge_name);
        else if (req.command == "cartesian")
            o = detail::cmd_cartesian(detail::resolve_module(p, req.module_name));
        else if (req.command == "hull")
            o = detail::cmd_hull(p, req);
        else if (req.command == "coherator")
            o = detail::cmd_coherator(p, req);
        else if (req.command == "adjcheck")
            o = detail::cmd_adjcheck(p, req);
        else if (req.command == "cover")
            o = detail::cmd_cover(p, req);
        else if (req.command == "report")
            o = detail::cmd_report(p, req);
        else {
            o.status = "error";
            o.message = "unknown command " + req.command;
        }
    } catch (const ProjectError& e) {
        o.status = "error";
        o.message = e.what();
    } catch (const std::exception& e) {
        o.status = "error";
        o.message = e.what();
    }

    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    result.record["status"] = o.status;
    result.record["witnesses"] = o.witnesses;
    if (!o.payload.is_null()) result.record["payload"] = o.payload;
    if (!o.message.empty()) result.record["message"] = o.message;
    result.record["timing_ms"] = ms;
    result.exit_code = o.status == "pass" ? 0 : (o.status == "fail" ? 1 : 2);
    return result;
}

}  // namespace mq
