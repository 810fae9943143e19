#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "holodiff/assembler.hpp"
#include "holodiff/cyclo.hpp"
#include "holodiff/engine.hpp"
#include "holodiff/hypogroup.hpp"
#include "holodiff/ramfilter.hpp"

// Holomorphic differentials of the modular curve X(l) reduced mod 3, with
// G = PSL(2, F_l) acting.  Sylow 3-subgroups of G are cyclic of order 3^n,
// and l - eps = 2 * 3^n * m with l = eps mod 3.
namespace holodiff::psl2 {

struct Psl2Case {
    std::int64_t ell = 0;
    std::int64_t epsilon = 0;   // +1 or -1, l = epsilon mod 3
    int n = 0;                  // 3-adic valuation of l - epsilon
    std::int64_t m = 0;         // (l - epsilon) / (2 * 3^n)
    int case_id = 0;            // 1..4

    std::int64_t sylow_order() const;
    std::int64_t group_order() const;
    // l = epsilon mod 4 (cases 3 and 4); m is even exactly then.
    bool two_dihedral_classes() const { return case_id >= 3; }
    // Orders of the two cyclic tori: V contains the Sylow 3-subgroup.
    std::int64_t v_order() const { return (ell - epsilon) / 2; }
    std::int64_t w_order() const { return (ell + epsilon) / 2; }

    friend bool operator==(const Psl2Case&, const Psl2Case&) = default;
};

// Throws ValidationError unless l is a prime >= 7.
Psl2Case classify(std::int64_t ell);

// 1 + (l-1)(l+1)(l-6)/24.
std::int64_t genus(std::int64_t ell);

// Class number of Q(sqrt(-l)) for a prime l = 3 mod 4, l > 3, from the
// quadratic character sum.
std::int64_t class_number(std::int64_t ell);
// Number of reduced primitive binary quadratic forms of discriminant d < 0.
std::int64_t reduced_form_count(std::int64_t discriminant);

// ---------------------------------------------------------------------------
// 3-regular conjugacy classes and class functions

enum class ClassKind { identity, order_ell_1, order_ell_2, involution, v_torus, w_torus };

struct ConjugacyClass {
    ClassKind kind = ClassKind::identity;
    std::int64_t power = 0;        // i for (v'')^i, j for w^j
    std::int64_t centralizer = 1;
    std::int64_t size = 1;
    std::string name() const;
};

class ClassData {
public:
    explicit ClassData(const Psl2Case& c);

    const Psl2Case& psl2_case() const { return case_; }
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }
    std::size_t index_of(ClassKind kind, std::int64_t power = 0) const;
    // Sum of the class sizes.
    std::int64_t regular_element_count() const;
    // Conductor of the character values on classes of this kind.
    std::int64_t value_conductor(ClassKind kind) const;

    // sqrt(l) for l = 1 mod 4, sqrt(-l) for l = 3 mod 4, both from the
    // quadratic Gauss sum 1 + 2 sum_a zeta_l^{a^2}.
    const CycloNumber& sqrt_signed_ell() const { return sqrt_; }

private:
    Psl2Case case_;
    std::vector<ConjugacyClass> classes_;
    CycloNumber sqrt_;
};

using ClassDataPtr = std::shared_ptr<const ClassData>;
ClassDataPtr make_class_data(std::int64_t ell);

class ClassFunction {
public:
    ClassFunction(ClassDataPtr classes, std::vector<CycloNumber> values);
    static ClassFunction zero(ClassDataPtr classes);

    const ClassData& classes() const { return *classes_; }
    const ClassDataPtr& class_data() const { return classes_; }
    const std::vector<CycloNumber>& values() const { return values_; }
    const CycloNumber& at(std::size_t idx) const { return values_.at(idx); }
    const CycloNumber& at(ClassKind kind, std::int64_t power = 0) const;
    // Value at the identity as an integer; throws if it is not one.
    std::int64_t degree() const;

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction& operator*=(const Rational& r);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const Rational& r) { return a *= r; }
    friend ClassFunction operator*(const Rational& r, ClassFunction a) { return a *= r; }
    friend bool operator==(const ClassFunction& a, const ClassFunction& b);

private:
    ClassDataPtr classes_;
    std::vector<CycloNumber> values_;
};

// (1/|G|) sum over 3-regular x of f(x) * conj(g(x)).  Classes are grouped by
// value conductor; throws ConsistencyError if a group sum is
// not rational.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

// Brauer character of H^0(X, Omega_X).
ClassFunction h0_brauer(const ClassDataPtr& classes);

// ---------------------------------------------------------------------------
// Blocks

// Shape of the Brauer tree of a block, which fixes composition factors of
// uniserial modules.
enum class TreeShape {
    exceptional_leaf,    // o -A- o -B- (exc), two simples, B at the exceptional vertex
    exceptional_middle,  // o -A- (exc) -B- o
    exceptional_star,    // o -A- (exc), one simple
    defect_zero,
};

struct OrdinaryCharacter {
    std::string name;
    ClassFunction values;
};

struct SimpleModule {
    std::string name;
    std::int64_t dimension = 0;
    ClassFunction brauer;
    std::size_t block = 0;
};

struct Block {
    std::string name;
    int defect = 0;
    TreeShape shape = TreeShape::defect_zero;
    std::int64_t exceptional_multiplicity = 0;
    std::vector<std::size_t> simples;                 // indices into BlockData::simples
    std::vector<std::vector<std::int64_t>> cartan;    // in the order of `simples`
};

struct BlockData {
    ClassDataPtr classes;
    int s01 = 0;    // case 4 sign choice; 0 elsewhere
    std::vector<OrdinaryCharacter> ordinary;
    std::vector<SimpleModule> simples;
    std::vector<Block> blocks;

    std::size_t simple_index(const std::string& name) const;
    // Brauer character of the projective cover of simples[idx].
    ClassFunction projective_char(std::size_t idx) const;
    std::int64_t projective_dimension(std::size_t idx) const;
    // Composition factors of the uniserial module with the given socle and
    // length, listed from the socle upwards.
    std::vector<std::size_t> uniserial_factors(std::size_t socle, std::int64_t length) const;
    ClassFunction uniserial_char(std::size_t socle, std::int64_t length) const;
    // Number of distinct ordinary constituents of a lift of that uniserial.
    std::int64_t uniserial_constituents(std::size_t socle, std::int64_t length) const;
};

// s01 is only read in case 4, where it picks which degree (l-1)/2 character
// is the socle of the non-principal uniserial summand.
BlockData block_data(const ClassDataPtr& classes, int s01 = -1);

// ---------------------------------------------------------------------------
// Final k[G]-decomposition

struct UniserialSummand {
    std::size_t socle = 0;
    std::int64_t length = 0;
    friend bool operator==(const UniserialSummand&, const UniserialSummand&) = default;
};

struct NamedDecomp {
    std::vector<std::int64_t> projective;         // multiplicity of P(G, simples[i])
    std::vector<UniserialSummand> uniserials;
    std::int64_t total_dimension = 0;
};

struct FullVariant {
    int s01 = 0;
    BlockData blocks;
    NamedDecomp decomp;
};

struct FullDecomposition {
    Psl2Case psl2;
    ClassDataPtr classes;
    ClassFunction h0;
    std::vector<FullVariant> variants;   // one unless s01 is ambiguous
    bool ambiguous() const { return variants.size() > 1; }
};

// Non-projective summands, as Green correspondents.
std::vector<UniserialSummand> green_uniserials(const BlockData& blocks);
// Closed-form multiplicities of the projective indecomposables.
std::vector<Rational> closed_form_projectives(const BlockData& blocks);
// Multiplicities obtained by removing the uniserial characters from h0 and
// pairing the remainder with each simple Brauer character; checks that the
// remainder is the matching combination of projective characters.
std::vector<Rational> inner_product_projectives(const BlockData& blocks, const ClassFunction& h0);

// Both computations, compared; throws ConsistencyError on disagreement,
// negative or fractional multiplicities, or a dimension mismatch.
FullDecomposition full_decomposition(std::int64_t ell);

ClassFunction decomposition_character(const BlockData& blocks, const NamedDecomp& d);
std::string projective_name(const BlockData& blocks, std::size_t simple);
std::string uniserial_name(const BlockData& blocks, const UniserialSummand& u);

struct BlockReport {
    std::string block;
    int defect = 0;
    bool has_projective = false;
    std::int64_t uniserial_length = 0;   // 0 when U_B = 0
    std::int64_t constituents = 0;       // distinct ordinary constituents of the lift of U_B
    bool congruence = false;
};

std::vector<BlockReport> congruence_report(const FullVariant& v);

// ---------------------------------------------------------------------------
// Ramification and restrictions

enum class Subgroup { V, Delta, Delta1, Delta2, W, R };
enum class Inertia { sigma3, z3, z2, zell };

std::string subgroup_name(Subgroup s);
std::string inertia_name(Inertia i);

struct RamCount {
    Subgroup subgroup;
    Inertia inertia;
    std::int64_t points;   // closed points of X with this inertia group in the subgroup
};

std::int64_t subgroup_order(const Psl2Case& c, Subgroup s);
std::int64_t inertia_order(const Psl2Case& c, Inertia i);
std::vector<RamCount> ram_counts(const Psl2Case& c);

// The hypo-elementary subgroups whose restrictions determine the N1-structure:
// {V, Delta} or {V, Delta1, Delta2}.
std::vector<Subgroup> restriction_subgroups(const Psl2Case& c);

HypoGroup restriction_group(const Psl2Case& c, Subgroup s);
RamInput restriction_input(const Psl2Case& c, Subgroup s);
Decomp restriction_closed_form(const Psl2Case& c, Subgroup s);

struct RestrictionResult {
    Subgroup subgroup;
    RamInput input;
    AssembledDecomp assembled;
    Decomp closed_form;
};

// Runs the engine on the restriction and compares against the closed form;
// throws ConsistencyError on mismatch.
RestrictionResult restriction_decomposition(std::int64_t ell, Subgroup s);

// ---------------------------------------------------------------------------
// The normalizer N1 of the order-3 subgroup (dihedral of order l - eps)

struct N1Label {
    enum class Kind { linear, induced };
    Kind kind = Kind::linear;
    // linear: socle S_{first} (m odd) or S_{first,second} (m even, second >= 0);
    // induced: socle S~_{first}.
    std::int64_t first = 0;
    std::int64_t second = -1;
    std::int64_t length = 1;   // composition length
    friend auto operator<=>(const N1Label&, const N1Label&) = default;
};

using N1Decomp = std::map<N1Label, std::int64_t>;

std::string n1_label_name(const N1Label& l);
std::int64_t n1_dimension(const N1Decomp& d);
N1Decomp n1_decomposition(const Psl2Case& c);
// Restriction of N1-modules to V, Delta, Delta1 or Delta2 as hypo-elementary labels.
Decomp restrict_n1(const Psl2Case& c, const N1Decomp& d, Subgroup s);

// The 3-regular classes of N1 with the G-class each one fuses into.
struct N1Class {
    std::string name;
    std::size_t g_class = 0;
    ClassKind kind = ClassKind::identity;
    std::int64_t power = 0;
    int reflection = 0;    // 1 for the class of s, 2 for the class of v*s
};
std::vector<N1Class> n1_classes(const ClassData& classes);
std::vector<CycloNumber> n1_character(const ClassData& classes, const N1Decomp& d);

// ---------------------------------------------------------------------------
// Batch verification

struct InvariantResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Every invariant of the module for one prime.  Never throws for valid l;
// failures are reported per invariant.
std::vector<InvariantResult> verify_all(std::int64_t ell, bool with_restrictions = true);

}  // namespace holodiff::psl2
