#pragma once

// Classification of the maximal-order actions: which normal translation
// subgroups lift a marked edge orbit to a connected graph, the divisibility
// pattern of the admitted family parameters, and the genus table.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxsym/periodicgraph.hpp"
#include "maxsym/sublattices.hpp"

namespace maxsym {

enum class EdgeLabel { Alpha, Beta, Gamma };

/// "alpha", "beta", "gamma".
std::string_view to_string(EdgeLabel label);
/// Single Greek letter.
std::string_view symbol(EdgeLabel label);
/// Accepts the ASCII names, their first letter, or the Greek letter.
EdgeLabel parse_edge_label(std::string_view text);

/// Condition on the family parameters under which a series member is admitted.
enum class Constraint {
    None,
    NotDivisibleBy2,
    NotDivisibleBy3,
    MEqualsOne,
    Never,
};

/// "none", "2∤n", "3∤n", "m=1", "never".
std::string_view to_string(Constraint c);
/// ASCII spelling for CSV: "none", "2!|n", "3!|n", "m=1", "never".
std::string_view ascii(Constraint c);
bool satisfies(Constraint c, long n, std::optional<long> m);

struct CaseId {
    GroupName group = GroupName::P432;
    EdgeLabel label = EdgeLabel::Alpha;

    friend bool operator==(const CaseId&, const CaseId&) = default;
};

std::string to_string(const CaseId& id);

/// The nine cases, ordered as the columns of the genus table.
const std::array<CaseId, 9>& all_cases();
/// Position in all_cases() plus one.
int column_of(const CaseId& id);
/// Static metadata: the first three columns bound handlebodies on both sides.
bool knotted(const CaseId& id);

/// Expected data for one case.
struct ReferenceSeries {
    std::string name;  // as produced by family_series, e.g. "T_{4n^3}"
    Constraint constraint = Constraint::None;

    friend bool operator==(const ReferenceSeries&, const ReferenceSeries&) = default;
};

struct ReferenceCase {
    CaseId id;
    SubgroupHNF cycle_image;
    /// Admitted series ordered by covolume.
    std::vector<ReferenceSeries> series;
    /// Cells of the genus-table column, e.g. "4(2n)^3" or "2n^3 (2∤n)".
    std::vector<std::string> genus_cells;
};

const std::vector<ReferenceCase>& reference_cases();
const ReferenceCase& reference_case(const CaseId& id);

/// A marked edge together with its orbit graph and the label it was given.
struct LabelledEdge {
    CaseId id;
    SingularEdge edge;
    PeriodicGraph graph;
    /// Trivial when the graph is disconnected.
    SubgroupHNF cycle_image;
    /// False when the cycle image matched no expected lattice and the label
    /// was assigned from what was left over.
    bool matched = false;
};

/// Labels the marked edges of the group by their cycle-image lattices.
std::vector<LabelledEdge> labelled_edges(const SpaceGroup& group);
/// Throws DomainError when the group has no edge with that label.
LabelledEdge labelled_edge(const SpaceGroup& group, EdgeLabel label);

struct ClassificationRow {
    CaseId id;
    int orbit_id = -1;
    std::string series_name;
    LatticeFamily family;
    long n = 1;  // series parameter: family.n == step * n
    std::optional<long> m;
    Constraint constraint = Constraint::None;
    SubgroupHNF lattice;
    long lattice_index = 1;
    Integer group_order;  // point order * lattice index
    Integer genus;        // group_order / 12 + 1
    int column = 0;
    bool knotted = false;

    /// "alpha#3" style label with the orbit id.
    std::string edge_label() const;
};

struct SeriesMember {
    long n = 1;  // series parameter
    std::optional<long> m;
    long lattice_index = 1;
};

/// How one family series behaves for one case.
struct SeriesVerdict {
    std::string name;
    FamilyTag tag = FamilyTag::CubicPrimitive;
    Rational pi1_coefficient;
    /// Proven for every parameter value, see derive_constraint.
    Constraint constraint = Constraint::None;
    /// Period e of the residue argument (n mod e decides); 0 for the
    /// projection argument used with rank-2 cycle images.
    long modulus = 0;
    /// Enumerated members split by the connectedness test.
    std::vector<SeriesMember> accepted, rejected;
    /// Every predicate consistent with the enumerated members, in enum order.
    std::vector<Constraint> consistent;
};

struct CaseClassification {
    CaseId id;
    int column = 0;
    bool knotted = false;
    SubgroupHNF cycle_image;
    long max_index = 0;
    std::vector<SeriesVerdict> series;  // in family_series order
    std::vector<ClassificationRow> rows;  // ordered by (lattice_index, lattice)
};

/// Constraint for a series given the cycle image c (frame coordinates) of an
/// edge orbit: member(n, m) lifts to a connected graph iff
/// join(c, member(n, m)) == T0. Rank-3 c: the join depends on n mod e where
/// e T0 is inside c, so n = 1..e decides. Rank-2 c: the join is T0 iff c is
/// saturated and the functional vanishing on c maps the member onto Z.
/// Throws ConstraintFitError for a pattern outside the predicate set.
Constraint derive_constraint(const SpaceGroup& group, const FamilySeries& series,
                             const SubgroupHNF& cycle_image, long* modulus = nullptr);

/// Classification from an already enumerated list of normal subgroups.
/// Throws ConstraintFitError when the proven constraint disagrees with the
/// enumerated members.
CaseClassification classify_case(const SpaceGroup& group, const LabelledEdge& edge,
                                 std::span<const NormalSubgroup> subgroups, long max_index);

CaseClassification classify_case(GroupName group, EdgeLabel label, long max_index,
                                 kernels::Backend backend = kernels::best_backend());

/// All nine cases in column order, one enumeration per group.
std::vector<CaseClassification> classify_all(long max_index,
                                             kernels::Backend backend = kernels::best_backend());

/// One cell of the genus table: g - 1 as a function of n.
struct Theorem1Cell {
    int column = 0;
    bool knotted = false;
    std::string form;  // "2n^3", "4(2n)^3", "n^2", ...
    /// The base form among 2n^3, 4n^3, 8n^3, n^2, 3n^2 ("4n^3" for "4(2n)^3").
    std::string base_form;
    /// Condition on n; MEqualsOne is folded into the form.
    Constraint constraint = Constraint::None;

    /// The form with its condition, e.g. "8n^3 (2∤n)".
    std::string label() const;
};

/// Form of g - 1 for a series; the coefficient of n^3 (or n^2) is
/// pi1_coefficient / 12.
Theorem1Cell genus_cell(const SeriesVerdict& series, const CaseId& id);

struct GenusEntry {
    long genus = 0;
    Integer group_order;  // 12 (g - 1)
    std::vector<ClassificationRow> actions;  // column order
    int unknotted = 0;
    int knotted = 0;
};

struct Theorem1Table {
    long max_genus = 0;
    long max_index = 0;  // enumeration bound that covers max_genus
    std::vector<Theorem1Cell> cells;  // column order, then covolume
    std::vector<GenusEntry> entries;  // genera with at least one action
    /// True when every column lists exactly its expected cells.
    bool columns_match = false;

    const GenusEntry* find(long genus) const;
};

/// Lattice index bound sufficient for every action of genus <= max_genus.
long index_bound_for_genus(long max_genus);

/// Throws DomainError when max_genus < 2.
Theorem1Table theorem1_table(long max_genus, kernels::Backend backend = kernels::best_backend());
Theorem1Table theorem1_table(long max_genus, std::span<const CaseClassification> cases);

struct ClaimCheck {
    CaseId id;
    int orbit_id = -1;
    bool connected = false;
    std::optional<SubgroupHNF> computed;
    SubgroupHNF expected;
    bool match = false;
};

struct SeriesCheck {
    CaseId id;
    std::vector<ReferenceSeries> expected;
    std::vector<ReferenceSeries> computed;  // admitted series ordered by covolume
    bool match = false;
};

struct VerifyReport {
    std::array<int, 6> marked_counts{};
    bool marked_counts_match = false;
    std::vector<ClaimCheck> claims;
    long max_index = 0;  // 0 when the series check was skipped
    std::vector<SeriesCheck> series;
    std::string error;  // set when a stage threw
    bool passed = false;
};

/// Never throws; failures are recorded in the report. With max_index > 0 the
/// admitted series of every case are compared as well.
VerifyReport verify_claims(long max_index = 0, kernels::Backend backend = kernels::best_backend());

/// Admitted series of a classification, ordered by covolume.
std::vector<ReferenceSeries> admitted_series(const CaseClassification& c);

// Emitters. JSON documents carry "schema": "maxsym/1"; rationals are strings.
std::string groups_json();
std::string groups_text();
std::string singular_graph_json(const SpaceGroup& group, const SingularGraph& graph);
std::string singular_graph_text(const SpaceGroup& group, const SingularGraph& graph);
std::string edges_json(const SpaceGroup& group, std::span<const LabelledEdge> edges);
std::string edges_text(const SpaceGroup& group, std::span<const LabelledEdge> edges);
std::string classification_json(const CaseClassification& c);
std::string classification_csv(const CaseClassification& c);
std::string classification_text(const CaseClassification& c);
std::string table_json(const Theorem1Table& t);
std::string table_csv(const Theorem1Table& t);
std::string table_text(const Theorem1Table& t);
std::string verify_json(const VerifyReport& r);
std::string verify_text(const VerifyReport& r);

}  // namespace maxsym
