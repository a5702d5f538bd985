#include "nerf/io.hpp"

#include <fstream>
#include <json.hpp>

namespace nerf::io {

using nlohmann::json;

namespace {

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

void write_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(1) << "\n";
}

std::vector<int> bounds_field(const json& j, int arity) {
    if (!j.contains("bound")) return std::vector<int>(static_cast<size_t>(arity), 4);
    if (j["bound"].is_number_integer())
        return std::vector<int>(static_cast<size_t>(arity), j["bound"].get<int>());
    return j["bound"].get<std::vector<int>>();
}

json presheaf_to_json(const PresheafPtr& phi) {
    json j;
    j["kind"] = "presheaf";
    j["n"] = phi->arity();
    j["bound"] = phi->bounds();
    json cells = json::object();
    json actions = json::object();
    for (const auto& m : phi->all_indices()) {
        std::string key = to_string(m);
        json labs = json::array();
        for (int c = 0; c < phi->cell_count(m); ++c) labs.push_back(phi->cell_name(m, c));
        cells[key] = labs;
        for (int k = 1; k <= phi->arity(); ++k) {
            int mk = m[static_cast<size_t>(k) - 1];
            if (mk >= 1)
                for (int i = 0; i <= mk; ++i)
                    actions["d/" + std::to_string(k) + "/" + std::to_string(i) + "@" + key] =
                        phi->face_action(m, k, i);
            if (mk + 1 <= phi->bounds()[static_cast<size_t>(k) - 1])
                for (int i = 0; i <= mk; ++i)
                    actions["e/" + std::to_string(k) + "/" + std::to_string(i) + "@" + key] =
                        phi->degeneracy_action(m, k, i);
        }
    }
    j["cells"] = cells;
    j["actions"] = actions;
    return j;
}

PresheafPtr presheaf_from_json(const json& j) {
    if (j.value("kind", "") != "presheaf") throw ParseError("kind is not 'presheaf'");
    int arity = j.at("n").get<int>();
    auto phi = std::make_shared<FinPresheaf>(arity, bounds_field(j, arity));
    for (const auto& [key, value] : j.at("cells").items()) {
        MultiIndex m = parse_multi_index(key);
        if (value.is_number_integer()) {
            phi->set_cells(m, value.get<int>());
        } else {
            std::vector<std::string> labels = value.get<std::vector<std::string>>();
            int count = static_cast<int>(labels.size());
            phi->set_cells(m, count, std::move(labels));
        }
    }
    for (const auto& [key, value] : j.at("actions").items()) {
        auto slash1 = key.find('/');
        auto slash2 = key.find('/', slash1 + 1);
        auto at = key.find('@');
        if (slash1 == std::string::npos || slash2 == std::string::npos || at == std::string::npos)
            throw ParseError("bad action key: " + key);
        std::string op = key.substr(0, slash1);
        int k = std::stoi(key.substr(slash1 + 1, slash2 - slash1 - 1));
        int i = std::stoi(key.substr(slash2 + 1, at - slash2 - 1));
        MultiIndex m = parse_multi_index(key.substr(at + 1));
        std::vector<int> table = value.get<std::vector<int>>();
        if (op == "d")
            phi->set_face_action(m, k, i, std::move(table));
        else if (op == "e")
            phi->set_degeneracy_action(m, k, i, std::move(table));
        else
            throw ParseError("bad action key: " + key);
    }
    return phi;
}

} // namespace

std::string kind_of_file(const std::string& path) {
    return read_file(path).value("kind", "");
}

PresheafPtr load_presheaf(const std::string& path) { return presheaf_from_json(read_file(path)); }

void save_presheaf(const PresheafPtr& phi, const std::string& path) {
    write_file(presheaf_to_json(phi), path);
}

std::string presheaf_to_string(const PresheafPtr& phi) { return presheaf_to_json(phi).dump(1); }

PresheafPtr presheaf_from_string(const std::string& text) {
    return presheaf_from_json(json::parse(text));
}

FinCategory load_category(const std::string& path, bool check_axioms) {
    json j = read_file(path);
    if (j.value("kind", "") != "category") throw ParseError("kind is not 'category'");
    FinCategory c;
    c.object_names = j.at("objects").get<std::vector<std::string>>();
    for (const auto& a : j.at("arrows")) {
        c.arrow_names.push_back(a.value("name", "f" + std::to_string(c.arrow_names.size())));
        c.src.push_back(a.at("src").get<int>());
        c.tgt.push_back(a.at("tgt").get<int>());
    }
    c.id = j.at("id").get<std::vector<int>>();
    c.comp = j.at("comp").get<std::vector<std::vector<int>>>();
    if (check_axioms) {
        ValidationReport r = c.validate();
        if (!r.ok) throw ParseError("invalid category: " + r.message);
    }
    return c;
}

void save_category(const FinCategory& c, const std::string& path) {
    json j;
    j["kind"] = "category";
    j["objects"] = c.object_names.empty()
                       ? [&] {
                             std::vector<std::string> v;
                             for (int i = 0; i < c.objects(); ++i) v.push_back(c.object_name(i));
                             return v;
                         }()
                       : c.object_names;
    json arrows = json::array();
    for (int f = 0; f < c.arrows(); ++f)
        arrows.push_back({{"name", c.arrow_name(f)},
                          {"src", c.src[static_cast<size_t>(f)]},
                          {"tgt", c.tgt[static_cast<size_t>(f)]}});
    j["arrows"] = arrows;
    j["id"] = c.id;
    j["comp"] = c.comp;
    write_file(j, path);
}

StrictNCategory load_strict(const std::string& path, bool check_axioms) {
    json j = read_file(path);
    if (j.value("kind", "") != "strict_ncat") throw ParseError("kind is not 'strict_ncat'");
    StrictNCategory c;
    c.n = j.at("n").get<int>();
    c.cell_names = j.at("levels").get<std::vector<std::vector<std::string>>>();
    c.src = j.at("src").get<std::vector<std::vector<int>>>();
    c.tgt = j.at("tgt").get<std::vector<std::vector<int>>>();
    c.id = j.at("id").get<std::vector<std::vector<int>>>();
    for (const auto& [key, value] : j.at("comp").items()) {
        MultiIndex ij = parse_multi_index(key);
        c.comp[{ij[0], ij[1]}] = value.get<std::vector<std::vector<int>>>();
    }
    if (check_axioms) {
        StrictReport r = validate_strict(c);
        if (!r.ok) throw ParseError("invalid strict n-category: " + r.detail);
    }
    return c;
}

void save_strict(const StrictNCategory& c, const std::string& path) {
    json j;
    j["kind"] = "strict_ncat";
    j["n"] = c.n;
    j["levels"] = c.cell_names;
    j["src"] = c.src;
    j["tgt"] = c.tgt;
    j["id"] = c.id;
    json comp = json::object();
    for (const auto& [ij, table] : c.comp)
        comp[std::to_string(ij.first) + "," + std::to_string(ij.second)] = table;
    j["comp"] = comp;
    write_file(j, path);
}

Weak2Category load_weak2(const std::string& path, bool check_axioms) {
    json j = read_file(path);
    if (j.value("kind", "") != "weak2") throw ParseError("kind is not 'weak2'");
    Weak2Category c;
    c.obj_names = j.at("objects").get<std::vector<std::string>>();
    c.arr_names = j.at("arrows").get<std::vector<std::string>>();
    c.cell2_names = j.at("cells").get<std::vector<std::string>>();
    c.c0 = static_cast<int>(c.obj_names.size());
    c.c1 = static_cast<int>(c.arr_names.size());
    c.c2 = static_cast<int>(c.cell2_names.size());
    c.s1 = j.at("s1").get<std::vector<int>>();
    c.b1 = j.at("b1").get<std::vector<int>>();
    c.e1 = j.at("e1").get<std::vector<int>>();
    c.s2 = j.at("s2").get<std::vector<int>>();
    c.b2 = j.at("b2").get<std::vector<int>>();
    c.e2 = j.at("e2").get<std::vector<int>>();
    c.comp1 = j.at("comp1").get<std::vector<std::vector<int>>>();
    c.vcomp = j.at("vcomp").get<std::vector<std::vector<int>>>();
    c.hcomp = j.at("hcomp").get<std::vector<std::vector<int>>>();
    c.assoc = j.at("assoc").get<std::vector<std::vector<std::vector<int>>>>();
    c.runit = j.at("runit").get<std::vector<int>>();
    c.lunit = j.at("lunit").get<std::vector<int>>();
    if (check_axioms) {
        Weak2Report r = validate_weak2(c);
        if (!r.ok) throw ParseError("invalid weak 2-category: " + r.axiom + " " + r.detail);
    }
    return c;
}

void save_weak2(const Weak2Category& c, const std::string& path) {
    json j;
    j["kind"] = "weak2";
    j["objects"] = c.obj_names;
    j["arrows"] = c.arr_names;
    j["cells"] = c.cell2_names;
    j["s1"] = c.s1;
    j["b1"] = c.b1;
    j["e1"] = c.e1;
    j["s2"] = c.s2;
    j["b2"] = c.b2;
    j["e2"] = c.e2;
    j["comp1"] = c.comp1;
    j["vcomp"] = c.vcomp;
    j["hcomp"] = c.hcomp;
    j["assoc"] = c.assoc;
    j["runit"] = c.runit;
    j["lunit"] = c.lunit;
    write_file(j, path);
}

PresheafMorphism load_morphism(const std::string& path, const PresheafPtr& source,
                               const PresheafPtr& target) {
    json j = read_file(path);
    if (j.value("kind", "") != "morphism") throw ParseError("kind is not 'morphism'");
    PresheafMorphism f;
    f.source = source;
    f.target = target;
    f.components.resize(source->all_indices().size());
    for (const auto& [key, value] : j.at("components").items()) {
        MultiIndex m = parse_multi_index(key);
        f.components[static_cast<size_t>(source->ordinal(m))] = value.get<std::vector<int>>();
    }
    return f;
}

void save_morphism(const PresheafMorphism& f, const std::string& path) {
    json j;
    j["kind"] = "morphism";
    json comps = json::object();
    for (const auto& m : f.source->all_indices())
        comps[to_string(m)] = f.components[static_cast<size_t>(f.source->ordinal(m))];
    j["components"] = comps;
    write_file(j, path);
}

} // namespace nerf::io
