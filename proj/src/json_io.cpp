#include "coxcover/json_io.hpp"

#include <fstream>
#include <set>

namespace coxcover {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw json_format_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw json_format_error(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (x.is_string())
            out.push_back(x.get<std::string>());
        else if (x.is_number_integer())
            out.push_back(std::to_string(x.get<long long>()));
        else
            throw json_format_error(std::string(what) + " entries must be strings");
    }
    return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw json_format_error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw json_format_error("parse error in " + path + ": " + e.what());
    }
    return j;
}

CoxeterMatrix coxeter_from_json(const Json& j) {
    std::vector<std::string> gens = string_list(require(j, "generators"), "generators");
    const Json& rows = require(j, "matrix");
    if (!rows.is_array()) throw json_format_error("matrix must be an array of rows");
    std::vector<std::vector<int>> entries;
    for (const auto& row : rows) {
        if (!row.is_array()) throw json_format_error("matrix rows must be arrays");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw json_format_error("matrix entries must be integers >= 0 (0 = infinity)");
            r.push_back(x.get<int>());
        }
        entries.push_back(std::move(r));
    }
    try {
        return CoxeterMatrix(std::move(gens), std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw json_format_error(std::string("invalid coxeter matrix: ") + e.what());
    }
}

Json coxeter_to_json(const CoxeterMatrix& M) {
    Json j;
    j["generators"] = M.generators();
    j["matrix"] = M.entries();
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    std::vector<std::string> vertices = string_list(require(j, "vertices"), "vertices");
    SimplicialComplex L(vertices);
    const Json& facets = require(j, "facets");
    if (!facets.is_array()) throw json_format_error("facets must be an array");
    for (const auto& facet : facets) {
        std::vector<int> face;
        for (const std::string& label : string_list(facet, "facet")) {
            int v = L.vertex_index(label);
            if (v < 0) throw json_format_error("facet vertex not declared: " + label);
            face.push_back(v);
        }
        L.add_face_closure(face);
    }
    return L;
}

Json complex_to_json(const SimplicialComplex& L) {
    Json j;
    j["vertices"] = L.vertices();
    // Emit the inclusion-maximal faces.
    std::vector<std::vector<int>> facets;
    for (const auto& f : L.faces()) {
        if (f.empty()) continue;
        bool maximal = true;
        for (const auto& g : L.faces()) {
            if (g.size() <= f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) maximal = false;
        }
        if (maximal) facets.push_back(f);
    }
    Json out = Json::array();
    for (const auto& f : facets) {
        Json face = Json::array();
        for (int v : f) face.push_back(L.vertex_label(v));
        out.push_back(face);
    }
    j["facets"] = out;
    return j;
}

Building building_from_json(const Json& j) {
    CoxeterMatrix M = coxeter_from_json(require(j, "coxeter"));

    if (j.contains("flags")) {
        const Json& lines_json = require(j.at("flags"), "lines");
        std::vector<std::vector<int>> lines;
        for (const auto& line : lines_json) {
            std::vector<int> pts;
            for (const auto& p : line) pts.push_back(p.get<int>());
            lines.push_back(std::move(pts));
        }
        if (M.rank() != 2)
            throw json_format_error("flag systems are rank-2 (points and lines)");
        return Building::with_computed_delta(flag_system(lines), std::move(M));
    }

    std::vector<std::string> ids = string_list(require(j, "chambers"), "chambers");
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[i]] = i;
    const Json& panels_json = require(j, "panels");
    std::vector<std::vector<std::vector<int>>> panels(M.rank());
    for (int s = 0; s < M.rank(); ++s) {
        if (!panels_json.contains(M.label(s)))
            throw json_format_error("panels missing generator " + M.label(s));
        for (const auto& panel : panels_json.at(M.label(s))) {
            std::vector<int> members;
            for (const std::string& id : string_list(panel, "panel")) {
                auto it = index.find(id);
                if (it == index.end()) throw json_format_error("panel names unknown chamber " + id);
                members.push_back(it->second);
            }
            panels[s].push_back(std::move(members));
        }
    }
    ChamberSystem system(ids, panels);

    if (j.contains("delta")) {
        const int n = system.num_chambers();
        std::vector<std::vector<std::optional<Word>>> delta(n,
                                                            std::vector<std::optional<Word>>(n));
        for (const auto& [from, row] : j.at("delta").items()) {
            auto fit = index.find(from);
            if (fit == index.end()) throw json_format_error("delta names unknown chamber " + from);
            for (const auto& [to, word] : row.items()) {
                auto tit = index.find(to);
                if (tit == index.end())
                    throw json_format_error("delta names unknown chamber " + to);
                delta[fit->second][tit->second] =
                    word_from_labels(string_list(word, "delta word"), M);
            }
        }
        return Building::with_delta(std::move(system), std::move(M), std::move(delta));
    }
    return Building::with_computed_delta(std::move(system), std::move(M));
}

Json building_to_json(const Building& B, bool include_delta) {
    Json j;
    j["coxeter"] = coxeter_to_json(B.coxeter());
    j["chambers"] = B.system().chamber_ids();
    Json panels;
    for (int s = 0; s < B.coxeter().rank(); ++s) {
        Json list = Json::array();
        for (const auto& panel : B.system().panels()[s]) {
            Json p = Json::array();
            for (int c : panel) p.push_back(B.system().chamber_id(c));
            list.push_back(p);
        }
        panels[B.coxeter().label(s)] = list;
    }
    j["panels"] = panels;
    if (include_delta) {
        Json delta;
        for (int c = 0; c < B.num_chambers(); ++c) {
            Json row;
            for (int d = 0; d < B.num_chambers(); ++d)
                if (B.delta_defined(c, d))
                    row[B.system().chamber_id(d)] = word_labels(B.delta(c, d), B.coxeter());
            delta[B.system().chamber_id(c)] = row;
        }
        j["delta"] = delta;
    }
    return j;
}

FoldingData folding_from_json(const Json& j) {
    SimplicialComplex L = complex_from_json(require(j, "L"));
    CoxeterMatrix target = coxeter_from_json(require(j, "target"));
    const Json& fj = require(j, "f");
    std::map<std::string, std::string> f;
    for (const auto& [from, to] : fj.items()) {
        if (!to.is_string()) throw json_format_error("folding map values must be strings");
        f[from] = to.get<std::string>();
    }
    return make_folding(std::move(L), std::move(target), f);
}

Json folding_to_json(const FoldingData& fd) {
    Json j;
    j["L"] = complex_to_json(fd.L);
    j["target"] = coxeter_to_json(fd.target);
    Json f;
    for (int v = 0; v < fd.L.num_vertices(); ++v)
        f[fd.L.vertex_label(v)] = fd.target.label(fd.f[v]);
    j["f"] = f;
    return j;
}

Json homology_to_json(const HomologyReport& h) {
    Json out = Json::array();
    for (const auto& e : h.entries) {
        if (e.rank == 0 && e.torsion.empty()) continue;
        Json entry;
        entry["degree"] = e.degree;
        entry["rank"] = e.rank;
        Json torsion = Json::array();
        for (const BigInt& d : e.torsion) torsion.push_back(d.str());
        entry["torsion"] = torsion;
        out.push_back(entry);
    }
    return out;
}

Json ball_to_json(const CoveredBall& ball) {
    Json j;
    j["folding"] = folding_to_json(ball.folding());
    j["building"] = building_to_json(ball.downstairs(), /*include_delta=*/true);
    j["base"] = ball.downstairs().system().chamber_id(ball.base_chamber());
    j["radius"] = ball.radius();
    Json classes = Json::array();
    const CoxeterMatrix& W = ball.surgered();
    for (int i = 0; i < ball.num_classes(); ++i) {
        const GalleryClass& c = ball.cls(i);
        Json entry;
        entry["id"] = i;
        entry["weyl"] = word_labels(c.weyl, W);
        Json chambers = Json::array();
        for (int x : c.rep.chambers)
            chambers.push_back(ball.downstairs().system().chamber_id(x));
        entry["gallery"] = Json{{"chambers", chambers}, {"type", word_labels(c.rep.type, W)}};
        entry["projection"] = ball.downstairs().system().chamber_id(ball.projection(i));
        classes.push_back(entry);
    }
    j["classes"] = classes;
    Json panels;
    for (int s = 0; s < W.rank(); ++s) {
        Json list = Json::array();
        for (const auto& panel : ball.panels()[s]) list.push_back(panel);
        panels[W.label(s)] = list;
    }
    j["panels"] = panels;
    return j;
}

CoveredBall ball_from_json(const Json& j) {
    FoldingData fd = folding_from_json(require(j, "folding"));
    Building B = building_from_json(require(j, "building"));
    CoxeterMatrix W = surgery(fd);
    std::string base_id = require(j, "base").get<std::string>();
    int base = B.system().chamber_index(base_id);
    if (base < 0) throw json_format_error("base chamber not found: " + base_id);
    int radius = require(j, "radius").get<int>();

    std::vector<GalleryClass> classes;
    for (const auto& entry : require(j, "classes")) {
        GalleryClass c;
        c.base = base;
        c.weyl = word_from_labels(string_list(require(entry, "weyl"), "weyl"), W);
        const Json& gallery = require(entry, "gallery");
        for (const std::string& id : string_list(require(gallery, "chambers"), "chambers")) {
            int x = B.system().chamber_index(id);
            if (x < 0) throw json_format_error("gallery names unknown chamber " + id);
            c.rep.chambers.push_back(x);
        }
        c.rep.type = word_from_labels(string_list(require(gallery, "type"), "type"), W);
        classes.push_back(std::move(c));
    }
    std::vector<std::vector<std::vector<int>>> panels(W.rank());
    const Json& panels_json = require(j, "panels");
    for (int s = 0; s < W.rank(); ++s) {
        if (!panels_json.contains(W.label(s)))
            throw json_format_error("panels missing generator " + W.label(s));
        for (const auto& panel : panels_json.at(W.label(s)))
            panels[s].push_back(panel.get<std::vector<int>>());
    }
    return CoveredBall(std::move(fd), std::move(B), base, radius, std::move(classes),
                       std::move(panels));
}

ParsedProduct product_from_json(const Json& j) {
    std::vector<CoxeterMatrix> factors;
    for (const auto& f : require(j, "factors")) factors.push_back(coxeter_from_json(f));

    if (j.contains("square")) {
        std::vector<std::map<std::string, std::string>> to_base;
        const Json& sq = j.at("square");
        if (sq.is_object() && sq.contains("bijections")) {
            to_base.assign(factors.size(), {});
            for (const auto& [key, m] : sq.at("bijections").items()) {
                int i = std::stoi(key);
                if (i < 0 || i >= static_cast<int>(factors.size()))
                    throw json_format_error("bijection indexes a bad factor");
                for (const auto& [from, to] : m.items()) to_base[i][from] = to.get<std::string>();
            }
        }
        SquareSpec spec(factors, to_base);
        return ParsedProduct{factors, square_matrix(spec), true, "square"};
    }
    if (j.contains("graph")) {
        std::set<std::pair<int, int>> edges;
        for (const auto& e : require(j.at("graph"), "edges"))
            edges.insert({e.at(0).get<int>(), e.at(1).get<int>()});
        ProductSpec spec = ProductSpec::graph_product(factors, edges);
        return ParsedProduct{factors, product_matrix(spec), false, "graph"};
    }
    std::map<std::pair<int, int>, std::set<std::pair<int, int>>> relations;
    if (j.contains("relations")) {
        for (const auto& [key, pairs] : j.at("relations").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw json_format_error("relation keys look like \"i,j\"");
            int i = std::stoi(key.substr(0, comma));
            int jdx = std::stoi(key.substr(comma + 1));
            if (i < 0 || jdx < 0 || i >= static_cast<int>(factors.size()) ||
                jdx >= static_cast<int>(factors.size()) || i == jdx)
                throw json_format_error("relation keys index factor pairs");
            auto& set = relations[{i, jdx}];
            for (const auto& pair : pairs) {
                int si = factors[i].index_of(pair.at(0).get<std::string>());
                int sj = factors[jdx].index_of(pair.at(1).get<std::string>());
                if (si < 0 || sj < 0)
                    throw json_format_error("relation names an unknown generator");
                set.insert({si, sj});
            }
        }
    }
    ProductSpec spec(factors, relations);
    return ParsedProduct{factors, product_matrix(spec), false, "relations"};
}

}  // namespace coxcover
