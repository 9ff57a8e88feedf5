#include "groupalg/json_io.hpp"

#include <algorithm>

namespace groupalg {

namespace {

ojson parse_document(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

const ojson& field(const ojson& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) throw parse_error(std::string("missing field '") + name + "'");
    return *it;
}

} // namespace

Graph parse_graph(const std::string& text) {
    ojson doc = parse_document(text);
    if (!doc.is_object()) throw parse_error("graph document must be a JSON object");
    std::vector<std::string> vertices;
    for (const auto& v : field(doc, "vertices")) {
        if (!v.is_string()) throw parse_error("vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::map<std::string, int> vidx;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (!vidx.emplace(vertices[i], static_cast<int>(i)).second)
            throw parse_error("duplicate vertex id '" + vertices[i] + "'");
    }
    std::vector<Graph::Edge> edges;
    for (const auto& e : field(doc, "edges")) {
        std::string id = field(e, "id").get<std::string>();
        std::string src = field(e, "src").get<std::string>();
        std::string dst = field(e, "dst").get<std::string>();
        auto si = vidx.find(src);
        auto di = vidx.find(dst);
        if (si == vidx.end())
            throw parse_error("edge '" + id + "' has undeclared src '" + src + "'");
        if (di == vidx.end())
            throw parse_error("edge '" + id + "' has undeclared dst '" + dst + "'");
        edges.push_back({std::move(id), si->second, di->second});
    }
    std::set<int> emitters;
    if (doc.contains("infinite_emitters")) {
        for (const auto& v : doc["infinite_emitters"]) {
            auto it = vidx.find(v.get<std::string>());
            if (it == vidx.end())
                throw parse_error("infinite emitter flag on undeclared vertex '" +
                                  v.get<std::string>() + "'");
            emitters.insert(it->second);
        }
    }
    return Graph(std::move(vertices), std::move(edges), std::move(emitters));
}

ojson graph_to_json(const Graph& g) {
    ojson doc;
    doc["vertices"] = ojson::array();
    for (int v = 0; v < g.vertex_count(); ++v) doc["vertices"].push_back(g.vertex_name(v));
    doc["edges"] = ojson::array();
    for (const auto& e : g.edges()) {
        ojson je;
        je["id"] = e.name;
        je["src"] = g.vertex_name(e.src);
        je["dst"] = g.vertex_name(e.dst);
        doc["edges"].push_back(std::move(je));
    }
    doc["infinite_emitters"] = ojson::array();
    for (int v : g.infinite_emitters()) doc["infinite_emitters"].push_back(g.vertex_name(v));
    return doc;
}

FiniteGroupoid parse_groupoid(const std::string& text) {
    ojson doc = parse_document(text);
    if (!doc.is_object()) throw parse_error("groupoid document must be a JSON object");
    std::vector<int> objects;
    for (const auto& v : field(doc, "objects")) objects.push_back(v.get<int>());
    std::vector<FiniteGroupoid::ArrowDef> arrows;
    for (const auto& a : field(doc, "arrows"))
        arrows.push_back({field(a, "id").get<int>(), field(a, "src").get<int>(),
                          field(a, "tgt").get<int>()});
    std::map<std::pair<int, int>, int> compose;
    for (const auto& t : field(doc, "compose")) {
        if (!t.is_array() || t.size() != 3)
            throw parse_error("compose entries must be [a, b, c] triples");
        compose[{t[0].get<int>(), t[1].get<int>()}] = t[2].get<int>();
    }
    std::map<int, int> inverse;
    for (const auto& p : field(doc, "inverse")) {
        if (!p.is_array() || p.size() != 2)
            throw parse_error("inverse entries must be [a, b] pairs");
        inverse[p[0].get<int>()] = p[1].get<int>();
    }
    return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(compose),
                          std::move(inverse));
}

ojson groupoid_to_json(const FiniteGroupoid& g) {
    ojson doc;
    doc["objects"] = g.objects();
    doc["arrows"] = ojson::array();
    for (const auto& a : g.arrows()) {
        ojson ja;
        ja["id"] = a.id;
        ja["src"] = a.src;
        ja["tgt"] = a.tgt;
        doc["arrows"].push_back(std::move(ja));
    }
    doc["compose"] = ojson::array();
    for (const auto& [pair, c] : g.compose_table())
        doc["compose"].push_back(ojson::array({pair.first, pair.second, c}));
    doc["inverse"] = ojson::array();
    for (const auto& [a, b] : g.inverse_table()) doc["inverse"].push_back(ojson::array({a, b}));
    return doc;
}

ojson ring_elem_to_json(const Ring& ring, const RingElem& e) {
    ring.check_elem(e);
    switch (ring.kind()) {
        case Ring::Kind::integers:
        case Ring::Kind::integers_mod: return e.int_value().get_str();
        case Ring::Kind::rationals: return e.rat_value().get_str();
        default: {
            ojson obj = ojson::object();
            for (const auto& [k, c] : e.terms())
                obj[std::to_string(k)] = ring_elem_to_json(ring.base(), c);
            return obj;
        }
    }
}

ojson arrow_to_json(const DiscreteGroupoid& g, const GArrow& a) {
    ojson out;
    if (g.is_explicit()) {
        out["id"] = a.tag;
        out["src"] = a.src;
        out["tgt"] = a.tgt;
    } else {
        out["r"] = g.boundary().paths[static_cast<size_t>(a.tgt)].encoding;
        out["n"] = a.tag;
        out["d"] = g.boundary().paths[static_cast<size_t>(a.src)].encoding;
    }
    return out;
}

ojson conv_element_to_json(const ConvElement& f) {
    ojson out = ojson::array();
    for (const auto& [a, c] : f.terms()) {
        ojson term;
        term["arrow"] = arrow_to_json(*f.groupoid(), a);
        term["coefficient"] = ring_elem_to_json(f.ring(), c);
        out.push_back(std::move(term));
    }
    return out;
}

ojson boundary_analysis_to_json(const BoundaryAnalysis& a) {
    const Graph& g = a.graph;
    ojson out;
    out["discrete"] = a.discrete();
    if (a.discreteness.witness) {
        const auto& w = *a.discreteness.witness;
        ojson jw;
        jw["kind"] = w.kind == NonDiscretenessWitness::Kind::infinite_emitter
                         ? "infinite-emitter"
                         : "cycle-with-exit";
        if (w.kind == NonDiscretenessWitness::Kind::infinite_emitter) {
            jw["vertex"] = g.vertex_name(w.vertex);
        } else {
            ojson edges = ojson::array();
            for (int e : w.cycle.edges) edges.push_back(g.edge(e).name);
            jw["cycle"] = std::move(edges);
            if (w.exit_edge >= 0) jw["exit"] = g.edge(w.exit_edge).name;
        }
        jw["description"] = w.describe(g);
        out["witness"] = std::move(jw);
    }
    out["notes"] = a.discreteness.notes;
    ojson cycles = ojson::array();
    for (const Cycle& c : a.cycles) {
        ojson jc = ojson::array();
        for (int e : c.edges) jc.push_back(g.edge(e).name);
        cycles.push_back(std::move(jc));
    }
    out["cycles"] = std::move(cycles);
    if (a.discrete()) {
        ojson paths = ojson::array();
        for (const BoundaryPath& p : a.paths) paths.push_back(p.encoding);
        out["boundary_paths"] = std::move(paths);
        ojson orbits = ojson::array();
        for (const OrbitDescriptor& o : a.orbits) {
            ojson jo;
            jo["kind"] = o.kind == OrbitDescriptor::Kind::sink ? "sink" : "cycle";
            if (o.kind == OrbitDescriptor::Kind::sink) {
                jo["sink"] = g.vertex_name(o.terminal);
            } else {
                ojson edges = ojson::array();
                for (int e : a.cycles[static_cast<size_t>(o.terminal)].edges)
                    edges.push_back(g.edge(e).name);
                jo["cycle"] = std::move(edges);
            }
            jo["size"] = o.size();
            jo["isotropy"] = o.isotropy == OrbitDescriptor::Isotropy::trivial
                                 ? "trivial"
                                 : "infinite-cyclic";
            ojson members = ojson::array();
            for (int m : o.members) members.push_back(a.paths[static_cast<size_t>(m)].encoding);
            jo["members"] = std::move(members);
            orbits.push_back(std::move(jo));
        }
        out["orbits"] = std::move(orbits);
    }
    return out;
}

ojson verdict_to_json(const ChainVerdict& v) {
    ojson out;
    out["noetherian"] = to_string(v.noetherian());
    out["artinian"] = to_string(v.artinian());
    out["categorically_noetherian"] = to_string(v.categorically_noetherian);
    out["categorically_artinian"] = to_string(v.categorically_artinian);
    out["locally_noetherian"] = to_string(v.locally_noetherian);
    out["locally_artinian"] = to_string(v.locally_artinian);
    ojson decomposition = ojson::array();
    for (const Summand& s : v.decomposition) {
        ojson js;
        js["kind"] = s.kind == Summand::Kind::sink_orbit
                         ? "sink"
                         : s.kind == Summand::Kind::cycle_orbit ? "cycle" : "orbit";
        js["size"] = s.size;
        js["ring"] = s.target_label;
        js["orbit"] = s.orbit_label;
        decomposition.push_back(std::move(js));
    }
    out["decomposition"] = std::move(decomposition);
    ojson reasons = ojson::array();
    for (const Reason& r : v.reasons) {
        ojson jr;
        jr["rule"] = r.rule;
        jr["detail"] = r.detail;
        reasons.push_back(std::move(jr));
    }
    out["reasons"] = std::move(reasons);
    return out;
}

ojson iso_summary_to_json(const DecompositionIso& iso) {
    const DiscreteGroupoid& g = *iso.groupoid();
    ojson out;
    out["ring"] = iso.ring().spec_string();
    ojson orbits = ojson::array();
    for (size_t i = 0; i < iso.orbit_data().size(); ++i) {
        const auto& data = iso.orbit_data()[i];
        const Orbit& orbit = g.orbits()[i];
        ojson jo;
        jo["representative"] =
            g.is_explicit() ? ojson(data.representative)
                            : ojson(g.boundary().paths[static_cast<size_t>(data.representative)]
                                        .encoding);
        jo["size"] = orbit.members.size();
        jo["isotropy"] = data.isotropy.is_finite() ? data.isotropy.spec_string() : "Zinf";
        jo["matrix_ring"] =
            "M_" + std::to_string(orbit.members.size()) + "(" + data.target_ring.spec_string() + ")";
        ojson tr = ojson::object();
        for (const auto& [u, t] : data.transversal) {
            std::string key = g.is_explicit()
                                  ? std::to_string(u)
                                  : g.boundary().paths[static_cast<size_t>(u)].encoding;
            tr[key] = arrow_to_json(g, t);
        }
        jo["transversal"] = std::move(tr);
        orbits.push_back(std::move(jo));
    }
    out["orbits"] = std::move(orbits);
    return out;
}

ojson iso_verification_to_json(const IsoVerification& rep) {
    ojson out;
    out["basis_arrows"] = rep.basis_arrows;
    out["ok"] = rep.ok();
    ojson checks = ojson::array();
    for (const IsoCheck& c : rep.checks) {
        ojson jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["failures"] = c.failures;
        checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    return out;
}

ojson validation_report_to_json(const ValidationReport& rep) {
    ojson out;
    out["ok"] = rep.ok();
    out["issues"] = rep.issues;
    return out;
}

ojson left_ideals_to_json(const Ring& ring, const std::vector<std::vector<int>>& ideals) {
    const std::vector<RingElem> elems = ring.enumerate();
    ojson out;
    out["ring"] = ring.spec_string();
    out["ideal_count"] = ideals.size();
    ojson ji = ojson::array();
    for (const auto& ideal : ideals) {
        ojson members = ojson::array();
        for (int i : ideal) members.push_back(ring.elem_string(elems[static_cast<size_t>(i)]));
        ji.push_back(std::move(members));
    }
    out["ideals"] = std::move(ji);
    return out;
}

ojson column_oracle_to_json(const Ring& ring, const std::vector<int>& index_set, int pivot,
                            const ColumnOracleReport& rep) {
    ojson out;
    out["ring"] = ring.spec_string();
    out["indices"] = index_set;
    out["pivot"] = pivot;
    out["submodule_count"] = rep.submodule_sizes.size();
    out["ideal_count"] = rep.ideals.size();
    out["submodule_sizes"] = rep.submodule_sizes;
    out["submodule_to_ideal"] = rep.submodule_to_ideal;
    out["bijective"] = rep.bijective;
    out["inclusion_preserving"] = rep.inclusion_preserving;
    return out;
}

} // namespace groupalg
