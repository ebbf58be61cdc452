// Text, JSON and CSV renderings of groups, graphs and classification results.

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "maxsym/classify.hpp"

namespace maxsym {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "maxsym/1";

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return to_string(z);
}

json triple(const Vec3& v) { return {to_string(v[0]), to_string(v[1]), to_string(v[2])}; }

json lattice_json(const SubgroupHNF& l) {
    json basis = json::array();
    for (const auto& col : l.basis()) basis.push_back({integer_json(col[0]), integer_json(col[1]), integer_json(col[2])});
    return {{"rank", l.rank()}, {"scale", to_string(l.scale())}, {"basis", basis}};
}

json matrix_rows(const Mat3& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < 3; ++i) rows.push_back({to_string(m(i, 0)), to_string(m(i, 1)), to_string(m(i, 2))});
    return rows;
}

json family_json(const LatticeFamily& f) {
    json j{{"tag", std::string(to_string(f.tag))}, {"n", f.n}};
    if (f.m) j["m"] = *f.m;
    return j;
}

json row_json(const ClassificationRow& r) {
    json j{{"group", std::string(to_string(r.id.group))},
           {"edge", std::string(to_string(r.id.label))},
           {"edge_label", r.edge_label()},
           {"column", r.column},
           {"series", r.series_name},
           {"family", family_json(r.family)},
           {"n", r.n},
           {"constraint", std::string(ascii(r.constraint))},
           {"lattice", lattice_json(r.lattice)},
           {"lattice_index", r.lattice_index},
           {"group_order", integer_json(r.group_order)},
           {"genus", integer_json(r.genus)},
           {"knotted", r.knotted}};
    if (r.m) j["m"] = *r.m;
    return j;
}

json document(const char* kind) { return {{"schema", kSchema}, {"kind", kind}}; }

std::string vec_text(const Vec3& v) {
    return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ", " + to_string(v[2]) + ")";
}

std::string lattice_text(const SubgroupHNF& l) {
    std::string s = "<";
    const auto vs = l.vectors();
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + vec_text(vs[i]);
    return s + ">";
}

std::string case_text(const CaseId& id) {
    return "([" + std::string(to_string(id.group)) + "], " + std::string(symbol(id.label)) + ")";
}

std::string members_text(const std::vector<SeriesMember>& ms) {
    std::string s;
    for (const auto& x : ms) {
        if (!s.empty()) s += ",";
        s += std::to_string(x.n);
        if (x.m) s += "/" + std::to_string(*x.m);
    }
    return s.empty() ? "-" : s;
}

}  // namespace

std::string groups_json() {
    json j = document("groups");
    j["groups"] = json::array();
    for (GroupName name : kAllGroups) {
        const SpaceGroup g = make_group(name);
        json gens = json::array();
        for (const auto& iso : g.generators) gens.push_back({{"rot", matrix_rows(iso.rot)}, {"trans", triple(iso.trans)}});
        j["groups"].push_back({{"name", std::string(to_string(name))},
                               {"frame", std::string(to_string(g.frame.kind))},
                               {"listed_lattice", lattice_json(g.listed_lattice)},
                               {"generators", gens},
                               {"t0", lattice_json(g.t0)},
                               {"point_order", g.point_order}});
    }
    return j.dump(2);
}

std::string groups_text() {
    std::ostringstream os;
    for (GroupName name : kAllGroups) {
        const SpaceGroup g = make_group(name);
        os << to_string(name) << "  frame " << to_string(g.frame.kind) << "  point order " << g.point_order << "\n";
        os << "  T0 " << lattice_text(g.t0) << "\n";
        for (const auto& iso : g.generators) {
            os << "  x -> " << to_string(iso.rot) << " x + " << vec_text(iso.trans) << "\n";
        }
    }
    return os.str();
}

std::string singular_graph_json(const SpaceGroup& group, const SingularGraph& graph) {
    json j = document("singular-graph");
    j["group"] = std::string(to_string(group.name));
    j["orbit_count"] = graph.orbit_count;
    j["vertices"] = json::array();
    for (const auto& v : graph.vertices) {
        j["vertices"].push_back(
            {{"point", triple(v.point)}, {"stabilizer_order", v.stabilizer_order}, {"germ_indices", v.germ_indices}});
    }
    j["edges"] = json::array();
    for (const auto& e : graph.edges) {
        j["edges"].push_back({{"a", triple(e.a)},
                              {"b", triple(e.b)},
                              {"edge_index", e.edge_index},
                              {"link", e.link},
                              {"orbit", e.orbit_id}});
    }
    return j.dump(2);
}

std::string singular_graph_text(const SpaceGroup& group, const SingularGraph& graph) {
    std::ostringstream os;
    os << to_string(group.name) << ": " << graph.edges.size() << " segments mod T0 in " << graph.orbit_count
       << " orbits, " << graph.vertices.size() << " vertices mod T0\n";
    for (int id = 0; id < graph.orbit_count; ++id) {
        const auto segs = graph.orbit(id);
        if (segs.empty()) continue;
        const auto& e = segs.front();
        os << "  orbit " << id << "  index " << e.edge_index << "  link {" << e.link[0] << "," << e.link[1] << ","
           << e.link[2] << "," << e.link[3] << "}  " << segs.size() << " segments, e.g. " << vec_text(e.a) << " - "
           << vec_text(e.b) << "\n";
    }
    return os.str();
}

std::string edges_json(const SpaceGroup& group, std::span<const LabelledEdge> edges) {
    json j = document("edges");
    j["group"] = std::string(to_string(group.name));
    j["edges"] = json::array();
    for (const auto& e : edges) {
        j["edges"].push_back({{"label", std::string(to_string(e.id.label))},
                              {"orbit", e.edge.orbit_id},
                              {"a", triple(e.edge.a)},
                              {"b", triple(e.edge.b)},
                              {"edge_index", e.edge.edge_index},
                              {"link", e.edge.link},
                              {"connected", e.graph.connected()},
                              {"vertices", e.graph.vertices.size()},
                              {"edges", e.graph.edges.size()},
                              {"betti", e.graph.betti()},
                              {"cycle_image", lattice_json(e.cycle_image)},
                              {"matched", e.matched}});
    }
    return j.dump(2);
}

std::string edges_text(const SpaceGroup& group, std::span<const LabelledEdge> edges) {
    std::ostringstream os;
    os << to_string(group.name) << ": " << edges.size() << " marked edge orbit(s)\n";
    for (const auto& e : edges) {
        os << "  " << symbol(e.id.label) << "  orbit " << e.edge.orbit_id << "  " << vec_text(e.edge.a) << " - "
           << vec_text(e.edge.b) << "  index " << e.edge.edge_index << "\n";
        os << "     graph V=" << e.graph.vertices.size() << " E=" << e.graph.edges.size()
           << " betti=" << e.graph.betti() << (e.graph.connected() ? "" : " (disconnected)") << "\n";
        os << "     cycle image " << lattice_text(e.cycle_image) << (e.matched ? "" : "  [unexpected]") << "\n";
    }
    return os.str();
}

std::string classification_json(const CaseClassification& c) {
    json j = document("classification");
    j["group"] = std::string(to_string(c.id.group));
    j["edge"] = std::string(to_string(c.id.label));
    j["column"] = c.column;
    j["knotted"] = c.knotted;
    j["max_index"] = c.max_index;
    j["cycle_image"] = lattice_json(c.cycle_image);
    j["series"] = json::array();
    for (const auto& v : c.series) {
        json consistent = json::array();
        for (auto k : v.consistent) consistent.push_back(std::string(ascii(k)));
        j["series"].push_back({{"name", v.name},
                               {"tag", std::string(to_string(v.tag))},
                               {"pi1_coefficient", to_string(v.pi1_coefficient)},
                               {"constraint", std::string(ascii(v.constraint))},
                               {"modulus", v.modulus},
                               {"accepted", v.accepted.size()},
                               {"rejected", v.rejected.size()},
                               {"consistent", consistent}});
    }
    j["rows"] = json::array();
    for (const auto& r : c.rows) j["rows"].push_back(row_json(r));
    return j.dump(2);
}

std::string classification_csv(const CaseClassification& c) {
    std::ostringstream os;
    os << "group,edge,orbit,column,series,tag,family_n,m,n,constraint,lattice_index,group_order,genus,knotted\n";
    for (const auto& r : c.rows) {
        os << to_string(r.id.group) << ',' << to_string(r.id.label) << ',' << r.orbit_id << ',' << r.column << ','
           << r.series_name << ',' << to_string(r.family.tag) << ',' << r.family.n << ','
           << (r.m ? std::to_string(*r.m) : "") << ',' << r.n << ',' << ascii(r.constraint) << ','
           << r.lattice_index << ',' << r.group_order << ',' << r.genus << ',' << (r.knotted ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string classification_text(const CaseClassification& c) {
    std::ostringstream os;
    os << case_text(c.id) << "  column " << c.column << (c.knotted ? "  knotted" : "  unknotted")
       << "  lattice index <= " << c.max_index << "\n";
    os << "cycle image " << lattice_text(c.cycle_image) << "\n";
    for (const auto& v : c.series) {
        os << "  " << std::left << std::setw(12) << v.name << std::setw(7) << to_string(v.constraint);
        os << (v.modulus ? "  mod " + std::to_string(v.modulus) : "  projection") << "  admitted n: "
           << members_text(v.accepted) << "\n";
    }
    os << "\n  " << std::left << std::setw(12) << "series" << std::setw(22) << "family" << std::setw(8) << "index"
       << std::setw(8) << "order" << "genus\n";
    for (const auto& r : c.rows) {
        os << "  " << std::setw(12) << r.series_name << std::setw(22) << to_string(r.family) << std::setw(8)
           << r.lattice_index << std::setw(8) << r.group_order << r.genus << "\n";
    }
    os << c.rows.size() << " row(s)\n";
    return os.str();
}

std::string table_json(const Theorem1Table& t) {
    json j = document("genus-table");
    j["max_genus"] = t.max_genus;
    j["max_index"] = t.max_index;
    j["columns_match"] = t.columns_match;
    json columns = json::array();
    for (int col = 1; col <= 9; ++col) {
        json cells = json::array();
        bool knot = false;
        for (const auto& c : t.cells) {
            if (c.column != col) continue;
            knot = c.knotted;
            cells.push_back({{"form", c.form}, {"base_form", c.base_form}, {"constraint", std::string(ascii(c.constraint))}});
        }
        const CaseId id = all_cases()[static_cast<std::size_t>(col - 1)];
        columns.push_back({{"column", col},
                           {"group", std::string(to_string(id.group))},
                           {"edge", std::string(to_string(id.label))},
                           {"knotted", knot},
                           {"cells", cells}});
    }
    j["columns"] = columns;
    j["genera"] = json::array();
    for (const auto& e : t.entries) {
        json actions = json::array();
        for (const auto& r : e.actions) actions.push_back(row_json(r));
        j["genera"].push_back({{"genus", e.genus},
                               {"group_order", integer_json(e.group_order)},
                               {"count", e.actions.size()},
                               {"unknotted", e.unknotted},
                               {"knotted", e.knotted},
                               {"actions", actions}});
    }
    return j.dump(2);
}

std::string table_csv(const Theorem1Table& t) {
    std::ostringstream os;
    os << "genus,group_order,column,group,edge,family_n,m,lattice_index,knotted\n";
    for (const auto& e : t.entries) {
        for (const auto& r : e.actions) {
            os << e.genus << ',' << e.group_order << ',' << r.column << ',' << to_string(r.id.group) << ','
               << to_string(r.id.label) << ',' << r.family.n << ',' << (r.m ? std::to_string(*r.m) : "") << ','
               << r.lattice_index << ',' << (r.knotted ? 1 : 0) << '\n';
        }
    }
    return os.str();
}

std::string table_text(const Theorem1Table& t) {
    std::ostringstream os;
    os << "g-1 by column (1-3 unknotted, 4-9 knotted)\n";
    for (int col = 1; col <= 9; ++col) {
        os << "  " << col << "  " << std::left << std::setw(16) << case_text(all_cases()[static_cast<std::size_t>(col - 1)]);
        bool first = true;
        for (const auto& c : t.cells) {
            if (c.column != col) continue;
            os << (first ? "" : ", ") << c.label();
            first = false;
        }
        os << "\n";
    }
    os << (t.columns_match ? "columns match the expected layout\n" : "columns DIFFER from the expected layout\n");
    os << "\ngenus  order  actions  unknotted  knotted  columns\n";
    for (const auto& e : t.entries) {
        os << std::right << std::setw(5) << e.genus << std::setw(7) << e.group_order << std::setw(9)
           << e.actions.size() << std::setw(11) << e.unknotted << std::setw(9) << e.knotted << "  ";
        for (std::size_t i = 0; i < e.actions.size(); ++i) os << (i ? "," : "") << e.actions[i].column;
        os << "\n";
    }
    return os.str();
}

std::string verify_json(const VerifyReport& r) {
    json j = document("verify");
    j["marked_counts"] = r.marked_counts;
    j["marked_counts_match"] = r.marked_counts_match;
    j["claims"] = json::array();
    for (const auto& c : r.claims) {
        j["claims"].push_back({{"group", std::string(to_string(c.id.group))},
                               {"edge", std::string(to_string(c.id.label))},
                               {"orbit", c.orbit_id},
                               {"connected", c.connected},
                               {"computed", c.computed ? lattice_json(*c.computed) : json(nullptr)},
                               {"expected", lattice_json(c.expected)},
                               {"match", c.match}});
    }
    j["max_index"] = r.max_index;
    j["series"] = json::array();
    for (const auto& s : r.series) {
        json exp = json::array(), got = json::array();
        for (const auto& x : s.expected) exp.push_back({x.name, std::string(ascii(x.constraint))});
        for (const auto& x : s.computed) got.push_back({x.name, std::string(ascii(x.constraint))});
        j["series"].push_back({{"group", std::string(to_string(s.id.group))},
                               {"edge", std::string(to_string(s.id.label))},
                               {"expected", exp},
                               {"computed", got},
                               {"match", s.match}});
    }
    if (!r.error.empty()) j["error"] = r.error;
    j["passed"] = r.passed;
    return j.dump(2);
}

std::string verify_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "marked edge orbits:";
    for (int c : r.marked_counts) os << ' ' << c;
    os << (r.marked_counts_match ? "  ok\n" : "  MISMATCH\n");
    for (const auto& c : r.claims) {
        os << (c.match ? "PASS " : "FAIL ") << std::left << std::setw(16) << case_text(c.id)
           << (c.connected ? "connected  " : "disconnected  ") << "image "
           << (c.computed ? lattice_text(*c.computed) : std::string("-")) << "  expected " << lattice_text(c.expected)
           << "\n";
    }
    for (const auto& s : r.series) {
        os << (s.match ? "PASS " : "FAIL ") << std::left << std::setw(16) << case_text(s.id);
        for (std::size_t i = 0; i < s.computed.size(); ++i) {
            os << (i ? ", " : "") << s.computed[i].name;
            if (s.computed[i].constraint != Constraint::None) os << "(" << to_string(s.computed[i].constraint) << ")";
        }
        os << "\n";
    }
    if (!r.error.empty()) os << "errors:\n" << r.error;
    os << (r.passed ? "overall: PASS\n" : "overall: FAIL\n");
    return os.str();
}

}  // namespace maxsym
