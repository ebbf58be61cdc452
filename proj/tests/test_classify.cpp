#include <doctest.h>

#include <json.hpp>

#include "maxsym/classify.hpp"

using namespace maxsym;

namespace {

SubgroupHNF cubic_lattice(FamilyTag tag, long n) { return instantiate({tag, n, {}}); }

// g - 1 written as c k^3 with c in {2, 4, 8} or c k^2 with c in {1, 3}.
bool has_listed_form(long gm1) {
    for (long k = 1; k * k <= gm1; ++k) {
        for (long c : {2L, 4L, 8L}) {
            if (c * k * k * k == gm1) return true;
        }
        for (long c : {1L, 3L}) {
            if (c * k * k == gm1) return true;
        }
    }
    return false;
}

const std::vector<CaseClassification>& cases_up_to_96() {
    static const auto cases = classify_all(96);
    return cases;
}

}  // namespace

TEST_CASE("edge labels and constraints parse and print") {
    CHECK(parse_edge_label("alpha") == EdgeLabel::Alpha);
    CHECK(parse_edge_label("B") == EdgeLabel::Beta);
    CHECK(parse_edge_label("γ") == EdgeLabel::Gamma);
    CHECK_THROWS_AS(parse_edge_label("delta"), DomainError);

    CHECK(satisfies(Constraint::NotDivisibleBy2, 3, std::nullopt));
    CHECK_FALSE(satisfies(Constraint::NotDivisibleBy2, 4, std::nullopt));
    CHECK_FALSE(satisfies(Constraint::NotDivisibleBy3, 6, std::nullopt));
    CHECK(satisfies(Constraint::MEqualsOne, 5, 1));
    CHECK_FALSE(satisfies(Constraint::MEqualsOne, 1, 2));
    CHECK_FALSE(satisfies(Constraint::Never, 1, std::nullopt));
    CHECK(ascii(Constraint::NotDivisibleBy3) == "3!|n");
}

TEST_CASE("case order and knottedness") {
    CHECK(all_cases().size() == 9);
    CHECK(column_of({GroupName::P432, EdgeLabel::Alpha}) == 1);
    CHECK(column_of({GroupName::P622, EdgeLabel::Beta}) == 9);
    CHECK_FALSE(knotted({GroupName::I4_132, EdgeLabel::Alpha}));
    CHECK(knotted({GroupName::I432, EdgeLabel::Beta}));
    CHECK_THROWS_AS(column_of({GroupName::P432, EdgeLabel::Gamma}), DomainError);
    for (const auto& r : reference_cases()) CHECK(column_of(r.id) == column_of(reference_case(r.id).id));
}

TEST_CASE("every marked edge is labelled by its cycle image") {
    for (GroupName name : kAllGroups) {
        const SpaceGroup g = make_group(name);
        const auto edges = labelled_edges(g);
        CHECK(static_cast<int>(edges.size()) == expected_marked_edge_count(name));
        for (const auto& e : edges) {
            CHECK(e.matched);
            CHECK(e.id.group == name);
            CHECK(e.cycle_image == reference_case(e.id).cycle_image);
        }
    }
    CHECK_THROWS_AS(labelled_edge(make_group(GroupName::P432), EdgeLabel::Beta), DomainError);
}

TEST_CASE("residue-class constraints agree with direct joins") {
    for (GroupName name : kAllGroups) {
        const SpaceGroup g = make_group(name);
        if (g.frame.kind != FrameKind::Cubic) continue;
        for (const auto& e : labelled_edges(g)) {
            for (const auto& s : family_series(g)) {
                long e_mod = 0;
                const Constraint c = derive_constraint(g, s, e.cycle_image, &e_mod);
                CHECK(e_mod >= 1);
                for (long n = 1; n <= 3 * e_mod + 2; ++n) {
                    const bool joined = join(e.cycle_image, instantiate(s.member(n))) == g.t0;
                    CHECK_MESSAGE(joined == satisfies(c, n, std::nullopt), to_string(e.id) << " " << s.name << " n=" << n);
                }
            }
        }
    }
}

TEST_CASE("specific constraints") {
    const SpaceGroup i4132 = make_group(GroupName::I4_132);
    const auto beta = labelled_edge(i4132, EdgeLabel::Beta);
    long mod = 0;
    CHECK(derive_constraint(i4132, family_series(i4132)[0], beta.cycle_image, &mod) == Constraint::NotDivisibleBy3);
    CHECK(mod % 3 == 0);

    const SpaceGroup p622 = make_group(GroupName::P622);
    const auto hex_beta = labelled_edge(p622, EdgeLabel::Beta);
    for (const auto& s : family_series(p622)) {
        CHECK(derive_constraint(p622, s, hex_beta.cycle_image, &mod) == Constraint::MEqualsOne);
        CHECK(mod == 0);
        for (long n = 1; n <= 4; ++n) {
            for (long m = 1; m <= 4; ++m) {
                const bool joined = join(hex_beta.cycle_image, instantiate(s.member(n, m))) == p622.t0;
                CHECK(joined == (m == 1));
            }
        }
    }
    // A non-saturated plane never joins up to T0.
    const SubgroupHNF thin = SubgroupHNF::from_rational({vec3(2, 0, 0), vec3(0, 1, 0)});
    CHECK(derive_constraint(p622, family_series(p622)[0], thin) == Constraint::Never);

    // 5 Z^3 admits exactly the n prime to 5, which is no predicate of the set.
    const SpaceGroup p432 = make_group(GroupName::P432);
    CHECK_THROWS_AS(derive_constraint(p432, family_series(p432)[0], cubic_lattice(FamilyTag::CubicPrimitive, 5)),
                    ConstraintFitError);
}

TEST_CASE("I432 beta admits exactly the odd half-lattices") {
    const auto c = classify_case(GroupName::I432, EdgeLabel::Beta, 64);
    REQUIRE(c.rows.size() == 2);
    for (const auto& r : c.rows) {
        CHECK(r.family.tag == FamilyTag::CubicBody);
        CHECK(r.n % 2 == 1);
        CHECK(r.genus - 1 == 2 * r.n * r.n * r.n);
    }
    CHECK(c.rows[0].n == 1);
    CHECK(c.rows[1].n == 3);
    CHECK(admitted_series(c) == std::vector<ReferenceSeries>{{"T_{n^3/2}", Constraint::NotDivisibleBy2}});
}

TEST_CASE("P4_232 gamma and P622 beta") {
    const auto gamma = classify_case(GroupName::P4_232, EdgeLabel::Gamma, 64);
    CHECK(admitted_series(gamma) == std::vector<ReferenceSeries>{{"T_{n^3}", Constraint::NotDivisibleBy2},
                                                                 {"T_{2n^3}", Constraint::NotDivisibleBy2}});
    const auto hex = classify_case(GroupName::P622, EdgeLabel::Beta, 64);
    std::size_t rejected_m = 0;
    for (const auto& v : hex.series) {
        for (const auto& x : v.rejected) {
            CHECK(x.m.value() > 1);
            ++rejected_m;
        }
    }
    CHECK(rejected_m > 0);
    for (const auto& r : hex.rows) CHECK(r.m == 1);
}

TEST_CASE("rows satisfy the order identity and their constraint") {
    for (const auto& c : cases_up_to_96()) {
        CHECK(admitted_series(c) == reference_case(c.id).series);
        for (const auto& r : c.rows) {
            CHECK(r.group_order == 12 * (r.genus - 1));
            CHECK(r.genus > 1);
            CHECK(satisfies(r.constraint, r.n, r.m));
            CHECK(has_listed_form(Integer(r.genus - 1).get_si()));
            CHECK(r.knotted == knotted(r.id));
        }
    }
}

TEST_CASE("rows are stable when the bound grows") {
    const auto small = classify_all(40);
    const auto& large = cases_up_to_96();
    REQUIRE(small.size() == large.size());
    for (std::size_t i = 0; i < small.size(); ++i) {
        std::vector<SubgroupHNF> a, b;
        for (const auto& r : small[i].rows) a.push_back(r.lattice);
        for (const auto& r : large[i].rows) {
            if (r.lattice_index <= 40) b.push_back(r.lattice);
        }
        CHECK(a == b);
    }
}

TEST_CASE("genus cells") {
    SeriesVerdict v;
    v.tag = FamilyTag::CubicPrimitive;
    v.pi1_coefficient = 384;
    auto cell = genus_cell(v, {GroupName::F4_132, EdgeLabel::Alpha});
    CHECK(cell.form == "4(2n)^3");
    CHECK(cell.base_form == "4n^3");
    v.tag = FamilyTag::HexRot;
    v.pi1_coefficient = 36;
    v.constraint = Constraint::MEqualsOne;
    cell = genus_cell(v, {GroupName::P622, EdgeLabel::Beta});
    CHECK(cell.label() == "3n^2");
    v.tag = FamilyTag::CubicBody;
    v.pi1_coefficient = 96;
    v.constraint = Constraint::NotDivisibleBy3;
    CHECK(genus_cell(v, {GroupName::I4_132, EdgeLabel::Beta}).label() == "8n^3 (3∤n)");
}

TEST_CASE("genus table") {
    CHECK_THROWS_AS(theorem1_table(1), DomainError);
    const auto t = theorem1_table(65, cases_up_to_96());
    CHECK(t.columns_match);
    const auto* g3 = t.find(3);
    REQUIRE(g3 != nullptr);
    CHECK(g3->group_order == 24);
    CHECK(std::any_of(g3->actions.begin(), g3->actions.end(), [](const ClassificationRow& r) {
        return r.id.group == GroupName::P432 && r.family == LatticeFamily{FamilyTag::CubicPrimitive, 1, {}};
    }));
    const auto* g65 = t.find(65);
    REQUIRE(g65 != nullptr);
    CHECK(g65->actions.size() == 5);
    CHECK(g65->unknotted == 3);
    CHECK(g65->knotted == 2);
    CHECK(g65->group_order == 768);
    CHECK(t.find(66) == nullptr);
    CHECK_THROWS_AS(theorem1_table(200, cases_up_to_96()), DomainError);
}

TEST_CASE("claims report") {
    const auto r = verify_claims();
    CHECK(r.passed);
    CHECK(r.claims.size() == 9);
    CHECK(r.series.empty());
    CHECK(r.marked_counts == std::array<int, 6>{1, 1, 2, 2, 2, 1});
    CHECK(r.claims[6].expected == cubic_lattice(FamilyTag::CubicBody, 2));
    CHECK(r.claims[1].expected == cubic_lattice(FamilyTag::CubicFace, 1));
}

TEST_CASE("emitters") {
    const auto& c = cases_up_to_96()[0];
    const auto j = nlohmann::json::parse(classification_json(c));
    CHECK(j["schema"] == "maxsym/1");
    CHECK(j["rows"].size() == c.rows.size());
    CHECK(j["rows"][0]["lattice"]["scale"] == "1");

    const auto csv = classification_csv(c);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == c.rows.size() + 1);

    const auto t = theorem1_table(9, cases_up_to_96());
    const auto tj = nlohmann::json::parse(table_json(t));
    CHECK(tj["columns"].size() == 9);
    CHECK(tj["genera"].back()["genus"] == 9);

    const auto g = nlohmann::json::parse(groups_json());
    CHECK(g["groups"].size() == 6);
    CHECK(g["groups"][3]["t0"]["scale"] == "1/2");
    CHECK(classification_text(c).find("row(s)") != std::string::npos);
}
