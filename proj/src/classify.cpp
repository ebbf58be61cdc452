#include "maxsym/classify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

namespace maxsym {

std::string_view to_string(EdgeLabel label) {
    switch (label) {
        case EdgeLabel::Alpha: return "alpha";
        case EdgeLabel::Beta: return "beta";
        case EdgeLabel::Gamma: return "gamma";
    }
    return "?";
}

std::string_view symbol(EdgeLabel label) {
    switch (label) {
        case EdgeLabel::Alpha: return "α";
        case EdgeLabel::Beta: return "β";
        case EdgeLabel::Gamma: return "γ";
    }
    return "?";
}

EdgeLabel parse_edge_label(std::string_view text) {
    std::string s;
    for (char ch : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    for (EdgeLabel l : {EdgeLabel::Alpha, EdgeLabel::Beta, EdgeLabel::Gamma}) {
        if (s == to_string(l) || s == symbol(l) || (s.size() == 1 && s[0] == to_string(l)[0])) return l;
    }
    throw DomainError("unknown edge label '" + std::string(text) + "'");
}

std::string_view to_string(Constraint c) {
    switch (c) {
        case Constraint::None: return "none";
        case Constraint::NotDivisibleBy2: return "2∤n";
        case Constraint::NotDivisibleBy3: return "3∤n";
        case Constraint::MEqualsOne: return "m=1";
        case Constraint::Never: return "never";
    }
    return "?";
}

std::string_view ascii(Constraint c) {
    switch (c) {
        case Constraint::NotDivisibleBy2: return "2!|n";
        case Constraint::NotDivisibleBy3: return "3!|n";
        default: return to_string(c);
    }
}

bool satisfies(Constraint c, long n, std::optional<long> m) {
    switch (c) {
        case Constraint::None: return true;
        case Constraint::NotDivisibleBy2: return n % 2 != 0;
        case Constraint::NotDivisibleBy3: return n % 3 != 0;
        case Constraint::MEqualsOne: return m.value_or(1) == 1;
        case Constraint::Never: return false;
    }
    return false;
}

std::string to_string(const CaseId& id) {
    return std::string(to_string(id.group)) + "/" + std::string(to_string(id.label));
}

const std::array<CaseId, 9>& all_cases() {
    static const std::array<CaseId, 9> cases{{
        {GroupName::P432, EdgeLabel::Alpha},
        {GroupName::F4_132, EdgeLabel::Alpha},
        {GroupName::I4_132, EdgeLabel::Alpha},
        {GroupName::I432, EdgeLabel::Beta},
        {GroupName::P4_232, EdgeLabel::Beta},
        {GroupName::P4_232, EdgeLabel::Gamma},
        {GroupName::I432, EdgeLabel::Gamma},
        {GroupName::I4_132, EdgeLabel::Beta},
        {GroupName::P622, EdgeLabel::Beta},
    }};
    return cases;
}

int column_of(const CaseId& id) {
    const auto& cases = all_cases();
    const auto it = std::find(cases.begin(), cases.end(), id);
    if (it == cases.end()) throw DomainError("no marked edge " + to_string(id));
    return static_cast<int>(it - cases.begin()) + 1;
}

bool knotted(const CaseId& id) { return column_of(id) > 3; }

const std::vector<ReferenceCase>& reference_cases() {
    static const std::vector<ReferenceCase> table = [] {
        const auto cubic = [](FamilyTag tag, long n) { return instantiate({tag, n, {}}); };
        const SubgroupHNF t1 = cubic(FamilyTag::CubicPrimitive, 1);
        const SubgroupHNF t2 = cubic(FamilyTag::CubicFace, 1);
        const SubgroupHNF t4 = cubic(FamilyTag::CubicBody, 2);
        const SubgroupHNF t108 = cubic(FamilyTag::CubicBody, 6);
        const SubgroupHNF plane = SubgroupHNF::from_rational({vec3(1, 0, 0), vec3(0, 1, 0)});
        constexpr auto none = Constraint::None;
        constexpr auto odd = Constraint::NotDivisibleBy2;
        constexpr auto not3 = Constraint::NotDivisibleBy3;
        constexpr auto m1 = Constraint::MEqualsOne;
        const auto& c = all_cases();
        return std::vector<ReferenceCase>{
            {c[0], t1, {{"T_{n^3}", none}, {"T_{2n^3}", none}, {"T_{4n^3}", none}}, {"2n^3", "4n^3", "8n^3"}},
            {c[1], t2, {{"T_{2n^3}", none}, {"T_{8n^3}", none}, {"T_{32n^3}", none}}, {"2n^3", "4(2n)^3", "8n^3"}},
            {c[2], t4, {{"T_{4n^3}", none}, {"T_{8n^3}", none}, {"T_{16n^3}", none}}, {"2n^3", "4n^3", "8n^3"}},
            {c[3], t1, {{"T_{n^3/2}", odd}}, {"2n^3 (2∤n)"}},
            {c[4], t2, {{"T_{n^3}", odd}, {"T_{4n^3}", odd}}, {"2n^3 (2∤n)", "8n^3 (2∤n)"}},
            {c[5], t4, {{"T_{n^3}", odd}, {"T_{2n^3}", odd}}, {"2n^3 (2∤n)", "4n^3 (2∤n)"}},
            {c[6], t4, {{"T_{n^3/2}", odd}}, {"2n^3 (2∤n)"}},
            {c[7], t108, {{"T_{4n^3}", not3}, {"T_{8n^3}", not3}, {"T_{16n^3}", not3}},
             {"2n^3 (3∤n)", "4n^3 (3∤n)", "8n^3 (3∤n)"}},
            {c[8], plane, {{"T^w_{n^2}", m1}, {"T^w_{3n^2}", m1}}, {"n^2", "3n^2"}},
        };
    }();
    return table;
}

const ReferenceCase& reference_case(const CaseId& id) {
    return reference_cases().at(static_cast<std::size_t>(column_of(id) - 1));
}

std::vector<LabelledEdge> labelled_edges(const SpaceGroup& group) {
    std::vector<LabelledEdge> found;
    for (const auto& e : marked_edges(group)) {
        LabelledEdge le;
        le.edge = e;
        le.graph = edge_orbit_graph(group, e);
        if (le.graph.connected()) le.cycle_image = cycle_image_lattice(le.graph);
        found.push_back(std::move(le));
    }
    std::vector<const ReferenceCase*> refs;
    for (const auto& r : reference_cases()) {
        if (r.id.group == group.name) refs.push_back(&r);
    }

    std::vector<bool> edge_done(found.size(), false), ref_done(refs.size(), false);
    for (std::size_t r = 0; r < refs.size(); ++r) {
        for (std::size_t i = 0; i < found.size(); ++i) {
            if (edge_done[i] || !found[i].graph.connected() || found[i].cycle_image != refs[r]->cycle_image) continue;
            found[i].id = refs[r]->id;
            found[i].matched = true;
            edge_done[i] = ref_done[r] = true;
            break;
        }
    }
    // Whatever is left is paired off in order so that callers still see every edge.
    std::size_t r = 0;
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (edge_done[i]) continue;
        while (r < refs.size() && ref_done[r]) ++r;
        if (r == refs.size()) throw SignatureCountMismatch(std::string(to_string(group.name)) + ": more marked edges than labels");
        found[i].id = refs[r]->id;
        ref_done[r] = true;
    }
    std::sort(found.begin(), found.end(),
              [](const LabelledEdge& a, const LabelledEdge& b) { return a.id.label < b.id.label; });
    return found;
}

LabelledEdge labelled_edge(const SpaceGroup& group, EdgeLabel label) {
    for (auto& e : labelled_edges(group)) {
        if (e.id.label == label) return e;
    }
    throw DomainError(std::string(to_string(group.name)) + " has no marked edge " + std::string(to_string(label)));
}

std::string ClassificationRow::edge_label() const {
    return std::string(to_string(id.label)) + "#" + std::to_string(orbit_id);
}

namespace {

IntVec3 cross(const IntVec3& a, const IntVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Integer idot(const IntVec3& a, const IntVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Integer abs_of(const Integer& z) { return z < 0 ? Integer(-z) : z; }

Constraint constraint_from_residues(const std::vector<bool>& ok, long e) {
    const auto matches = [&](auto pred) {
        for (long r = 1; r <= e; ++r) {
            if (ok[static_cast<std::size_t>(r)] != pred(r)) return false;
        }
        return true;
    };
    if (matches([](long) { return true; })) return Constraint::None;
    if (matches([](long) { return false; })) return Constraint::Never;
    if (e % 2 == 0 && matches([](long r) { return r % 2 != 0; })) return Constraint::NotDivisibleBy2;
    if (e % 3 == 0 && matches([](long r) { return r % 3 != 0; })) return Constraint::NotDivisibleBy3;
    std::string pattern;
    for (long r = 1; r <= e; ++r) pattern += ok[static_cast<std::size_t>(r)] ? '1' : '0';
    throw ConstraintFitError("residue pattern " + pattern + " mod " + std::to_string(e) + " fits no predicate");
}

}  // namespace

Constraint derive_constraint(const SpaceGroup& group, const FamilySeries& series, const SubgroupHNF& cycle_image,
                             long* modulus) {
    if (!group.t0.contains(cycle_image)) throw NotASubgroup("cycle image is not inside T0");
    if (cycle_image.rank() == 3) {
        // Smallest e with e T0 inside the image. It divides the index.
        const Integer det = index(cycle_image, group.t0);
        const auto t0_vectors = group.t0.vectors();
        long e = 0;
        for (long k = 1; e == 0; ++k) {
            if (det % k != 0) continue;
            const Rational rk(k);
            if (std::all_of(t0_vectors.begin(), t0_vectors.end(),
                            [&](const Vec3& v) { return cycle_image.contains(rk * v); })) {
                e = k;
            }
        }
        // member(n) = n member(1), so member(n) + image only depends on n mod e.
        std::vector<bool> ok(static_cast<std::size_t>(e) + 1, false);
        for (long r = 1; r <= e; ++r) {
            ok[static_cast<std::size_t>(r)] = join(cycle_image, instantiate(series.member(r))) == group.t0;
        }
        if (modulus) *modulus = e;
        return constraint_from_residues(ok, e);
    }
    if (cycle_image.rank() != 2 || !is_hexagonal(series.tag)) {
        throw ConstraintFitError("no residue argument for a rank-" + std::to_string(cycle_image.rank()) +
                                 " cycle image");
    }
    if (modulus) *modulus = 0;
    // phi: T0 -> Z with kernel spanned by the image. The join is T0 iff the
    // image is saturated (primitive cross product) and phi maps the member
    // onto Z. Hexagonal members are <n u1, n u2, m t_z> with u1, u2 in the
    // t_w t_x plane, so phi(member) = gcd(n g12, m g3).
    const auto vs = cycle_image.vectors();
    const IntVec3 w = cross(group.to_cell(vs[0]).to_integer(), group.to_cell(vs[1]).to_integer());
    const Integer content = gcd(gcd(w[0], w[1]), w[2]);
    if (abs_of(content) != 1) return Constraint::Never;
    Integer g12 = 0;
    for (const auto& v : instantiate(series.member(1, 1)).vectors()) {
        if (v[2] == 0) g12 = gcd(g12, idot(w, group.to_cell(v).to_integer()));
    }
    const Integer g3 = abs_of(idot(w, group.to_cell(gen::t_z(group.frame.kind)).to_integer()));
    if (g12 != 0) throw ConstraintFitError("image meets the lattice plane of the series");
    return g3 == 1 ? Constraint::MEqualsOne : Constraint::Never;
}

CaseClassification classify_case(const SpaceGroup& group, const LabelledEdge& edge,
                                 std::span<const NormalSubgroup> subgroups, long max_index) {
    if (max_index < 1) throw DomainError("max_index must be positive");
    if (!edge.graph.connected()) throw Disconnected(to_string(edge.id) + ": edge orbit graph is disconnected");
    CaseClassification out;
    out.id = edge.id;
    out.column = column_of(edge.id);
    out.knotted = knotted(edge.id);
    out.cycle_image = edge.cycle_image;
    out.max_index = max_index;

    const auto series = family_series(group);
    for (const auto& s : series) {
        SeriesVerdict v;
        v.name = s.name;
        v.tag = s.tag;
        v.pi1_coefficient = s.pi1_coefficient;
        v.constraint = derive_constraint(group, s, edge.cycle_image, &v.modulus);
        out.series.push_back(std::move(v));
    }

    for (const auto& ns : subgroups) {
        if (ns.lattice_index > max_index) continue;
        auto& verdict = out.series.at(ns.series);
        const SeriesMember member{ns.n, ns.family.m, ns.lattice_index};
        if (!lift_connected(edge.graph, ns.lattice)) {
            verdict.rejected.push_back(member);
            continue;
        }
        verdict.accepted.push_back(member);
        ClassificationRow row;
        row.id = edge.id;
        row.orbit_id = edge.edge.orbit_id;
        row.series_name = verdict.name;
        row.family = ns.family;
        row.n = ns.n;
        row.m = ns.family.m;
        row.constraint = verdict.constraint;
        row.lattice = ns.lattice;
        row.lattice_index = ns.lattice_index;
        row.group_order = ns.pi1_index;
        if (row.group_order % 12 != 0) throw DomainError("group order " + to_string(row.group_order) + " is not 12(g-1)");
        row.genus = row.group_order / 12 + 1;
        row.column = out.column;
        row.knotted = out.knotted;
        out.rows.push_back(std::move(row));
    }

    for (auto& v : out.series) {
        for (Constraint c : {Constraint::None, Constraint::NotDivisibleBy2, Constraint::NotDivisibleBy3,
                             Constraint::MEqualsOne, Constraint::Never}) {
            const bool fits =
                std::all_of(v.accepted.begin(), v.accepted.end(), [&](const SeriesMember& x) { return satisfies(c, x.n, x.m); }) &&
                std::none_of(v.rejected.begin(), v.rejected.end(), [&](const SeriesMember& x) { return satisfies(c, x.n, x.m); });
            if (fits) v.consistent.push_back(c);
        }
        if (std::find(v.consistent.begin(), v.consistent.end(), v.constraint) == v.consistent.end()) {
            throw ConstraintFitError(to_string(edge.id) + " " + v.name + ": proven constraint " +
                                     std::string(ascii(v.constraint)) + " contradicts the enumerated members");
        }
    }
    return out;
}

CaseClassification classify_case(GroupName name, EdgeLabel label, long max_index, kernels::Backend backend) {
    const SpaceGroup group = make_group(name);
    const auto edge = labelled_edge(group, label);
    const auto subgroups = normal_translation_subgroups(group, max_index, backend);
    return classify_case(group, edge, subgroups, max_index);
}

std::vector<CaseClassification> classify_all(long max_index, kernels::Backend backend) {
    std::vector<std::future<std::vector<CaseClassification>>> jobs;
    for (GroupName name : kAllGroups) {
        jobs.push_back(std::async(std::launch::async, [=] {
            const SpaceGroup group = make_group(name);
            const auto subgroups = normal_translation_subgroups(group, max_index, backend, 1);
            std::vector<CaseClassification> part;
            for (const auto& edge : labelled_edges(group)) part.push_back(classify_case(group, edge, subgroups, max_index));
            return part;
        }));
    }
    std::vector<CaseClassification> out;
    for (auto& job : jobs) {
        for (auto& c : job.get()) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const CaseClassification& a, const CaseClassification& b) { return a.column < b.column; });
    return out;
}

std::vector<ReferenceSeries> admitted_series(const CaseClassification& c) {
    std::vector<const SeriesVerdict*> kept;
    for (const auto& v : c.series) {
        if (v.constraint != Constraint::Never) kept.push_back(&v);
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const SeriesVerdict* a, const SeriesVerdict* b) { return a->pi1_coefficient < b->pi1_coefficient; });
    std::vector<ReferenceSeries> out;
    for (const auto* v : kept) out.push_back({v->name, v->constraint});
    return out;
}

std::string Theorem1Cell::label() const {
    return constraint == Constraint::None ? form : form + " (" + std::string(to_string(constraint)) + ")";
}

Theorem1Cell genus_cell(const SeriesVerdict& series, const CaseId& id) {
    Theorem1Cell cell;
    cell.column = column_of(id);
    cell.knotted = knotted(id);
    cell.constraint = series.constraint == Constraint::MEqualsOne ? Constraint::None : series.constraint;

    const Rational coeff = series.pi1_coefficient / 12;
    const bool hex = is_hexagonal(series.tag);
    const int power = hex ? 2 : 3;
    const std::string tail = "n^" + std::to_string(power);
    const std::vector<long> bases = hex ? std::vector<long>{1, 3} : std::vector<long>{2, 4, 8};
    const auto prefix = [](long c) { return c == 1 ? std::string() : std::to_string(c); };
    cell.form = to_string(coeff) + tail;
    if (!is_integral(coeff)) return cell;
    for (long k = 1; k <= 16; ++k) {
        long kp = 1;
        for (int i = 0; i < power; ++i) kp *= k;
        const Integer num = coeff.get_num();
        if (num % kp != 0) continue;
        const Integer q = num / kp;
        const auto it = std::find(bases.begin(), bases.end(), q.get_si());
        if (it == bases.end()) continue;
        cell.base_form = prefix(*it) + tail;
        cell.form = k == 1 ? cell.base_form : prefix(*it) + "(" + std::to_string(k) + "n)^" + std::to_string(power);
        break;
    }
    return cell;
}

const GenusEntry* Theorem1Table::find(long genus) const {
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const GenusEntry& e) { return e.genus == genus; });
    return it == entries.end() ? nullptr : &*it;
}

long index_bound_for_genus(long max_genus) {
    // [T0 : T] = 12 (g - 1) / point order, and the smallest point order is 12.
    return std::max(1L, max_genus - 1);
}

Theorem1Table theorem1_table(long max_genus, std::span<const CaseClassification> cases) {
    if (max_genus < 2) throw DomainError("max_genus must be at least 2");
    Theorem1Table t;
    t.max_genus = max_genus;
    t.max_index = index_bound_for_genus(max_genus);
    t.columns_match = cases.size() == all_cases().size();
    std::map<long, GenusEntry> by_genus;
    for (const auto& c : cases) {
        if (c.max_index < t.max_index) {
            throw DomainError("classification bound " + std::to_string(c.max_index) + " does not cover genus " +
                              std::to_string(max_genus));
        }
        std::multiset<std::string> got;
        std::vector<Theorem1Cell> column;
        for (const auto& v : c.series) {
            if (v.constraint == Constraint::Never) continue;
            column.push_back(genus_cell(v, c.id));
        }
        // Printed order: by the leading coefficient of the base form.
        const auto lead = [](const Theorem1Cell& c) {
            const auto digits = c.base_form.substr(0, c.base_form.find('n'));
            return digits.empty() ? 1L : std::stol(digits);
        };
        std::stable_sort(column.begin(), column.end(),
                         [&](const Theorem1Cell& a, const Theorem1Cell& b) { return lead(a) < lead(b); });
        for (const auto& cell : column) {
            got.insert(cell.label());
            t.cells.push_back(cell);
        }
        const auto& want = reference_case(c.id).genus_cells;
        if (got != std::multiset<std::string>(want.begin(), want.end())) t.columns_match = false;

        for (const auto& row : c.rows) {
            if (row.genus > max_genus) continue;
            auto& e = by_genus[row.genus.get_si()];
            e.genus = row.genus.get_si();
            e.group_order = row.group_order;
            e.actions.push_back(row);
            (row.knotted ? e.knotted : e.unknotted) += 1;
        }
    }
    for (auto& [g, e] : by_genus) {
        std::stable_sort(e.actions.begin(), e.actions.end(),
                         [](const ClassificationRow& a, const ClassificationRow& b) { return a.column < b.column; });
        t.entries.push_back(std::move(e));
    }
    return t;
}

Theorem1Table theorem1_table(long max_genus, kernels::Backend backend) {
    if (max_genus < 2) throw DomainError("max_genus must be at least 2");
    const auto cases = classify_all(index_bound_for_genus(max_genus), backend);
    return theorem1_table(max_genus, cases);
}

VerifyReport verify_claims(long max_index, kernels::Backend backend) {
    VerifyReport r;
    r.max_index = std::max(0L, max_index);
    r.marked_counts.fill(-1);
    bool counts_ok = true;
    for (std::size_t i = 0; i < kAllGroups.size(); ++i) {
        const GroupName name = kAllGroups[i];
        try {
            const SpaceGroup group = make_group(name);
            const auto edges = labelled_edges(group);
            r.marked_counts[i] = static_cast<int>(edges.size());
            for (const auto& e : edges) {
                ClaimCheck c;
                c.id = e.id;
                c.orbit_id = e.edge.orbit_id;
                c.connected = e.graph.connected();
                if (c.connected) c.computed = e.cycle_image;
                c.expected = reference_case(e.id).cycle_image;
                c.match = c.connected && e.matched;
                r.claims.push_back(std::move(c));
            }
        } catch (const std::exception& ex) {
            counts_ok = false;
            r.error += std::string(to_string(name)) + ": " + ex.what() + "\n";
        }
        counts_ok = counts_ok && r.marked_counts[i] == expected_marked_edge_count(name);
    }
    r.marked_counts_match = counts_ok;
    std::sort(r.claims.begin(), r.claims.end(),
              [](const ClaimCheck& a, const ClaimCheck& b) { return column_of(a.id) < column_of(b.id); });

    bool series_ok = true;
    if (r.max_index > 0) {
        try {
            for (const auto& c : classify_all(r.max_index, backend)) {
                SeriesCheck s;
                s.id = c.id;
                s.expected = reference_case(c.id).series;
                s.computed = admitted_series(c);
                s.match = s.expected == s.computed;
                series_ok = series_ok && s.match;
                r.series.push_back(std::move(s));
            }
        } catch (const std::exception& ex) {
            series_ok = false;
            r.error += std::string("classification: ") + ex.what() + "\n";
        }
        series_ok = series_ok && r.series.size() == all_cases().size();
    }
    r.passed = r.error.empty() && r.marked_counts_match && r.claims.size() == all_cases().size() &&
               std::all_of(r.claims.begin(), r.claims.end(), [](const ClaimCheck& c) { return c.match; }) && series_ok;
    return r;
}

}  // namespace maxsym
