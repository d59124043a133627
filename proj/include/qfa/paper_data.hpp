#pragma once

// Embedded source data for the audits, kept in one place: defining
// polynomials and decomposition data for the field tables, the sextic table
// with claimed ramification classes, printed bound-chain constants kept
// verbatim as strings for regression, and the published admissibility
// classifications (Comalada 1990 for real quadratic fields, Setzer 1978 for
// imaginary ones), which this toolkit consumes as external results.

#include <array>
#include <vector>

namespace qfa::data {

inline const std::vector<long>& nine_fields() {
    static const std::vector<long> v{6, 5, 3, 2, -1, -2, -3, -5, -6};
    return v;
}

// ---- discriminant bound chains: printed constants, verbatim ----

struct ChainLiterals {
    const char* A;         // printed coefficient of 1/n
    const char* B;         // printed coefficient of n^(-2/3)
    const char* constant;  // printed assembled constant
    const char* c_sub;     // printed supremum of the different exponent
};

inline constexpr ChainLiterals kRam2Literal{"41.588", "8.64356", "3.27057", "2.125"};
inline constexpr ChainLiterals kInert2Literal{"45.7477", "8.64356", "2.057563", "3"};
// The 1/n coefficient printed for the p=3 chain is malformed in the source
// ("41.36.254"); A is re-derived as 2*log(3)*(33/2) and tagged derived.
inline constexpr ChainLiterals kRam3Literal{nullptr, "8.64356", "1.82198", "2"};

inline constexpr const char* kOdlyzkoCoeff = "6.860404";
inline constexpr const char* kPrintedX0Ram2 = "375.923";
inline constexpr const char* kPrintedX0Inert2 = "500.385";
inline constexpr const char* kPrintedX0Ram3 = "249.041";
inline constexpr const char* kPrintedLogThrRam2 = "3.21525";
inline constexpr const char* kPrintedLogThrInert2 = "2.011863";
inline constexpr const char* kPrintedLogThrRam3 = "1.749";
inline constexpr const char* kPrintedAbsThrRam2 = "24.9";
inline constexpr const char* kPrintedAbsThrInert2 = "7.477";
inline constexpr const char* kPrintedAbsThrRam3 = "5.7";

// ---- table of 2-elementary extension fields (degree 8/16 over Q) ----

struct TableFieldRow {
    long d;
    std::vector<long> poly;  // low degree to high
    long h;                  // class number as published (trusted input)
    int e, f, g;             // decomposition of p in the field over Q
    int p;
};

inline const std::vector<TableFieldRow>& field_table() {
    static const std::vector<TableFieldRow> rows{
        {6, {1, 0, 0, 0, 4, 0, 0, 0, 15, 0, 0, 0, 4, 0, 0, 0, 1}, 1, 8, 2, 1, 2},
        {5, {1, 0, 12, 0, 58, 0, 0, 0, -29, 0, 0, 0, 58, 0, -12, 0, 1}, 1, 8, 2, 1, 2},
        {3, {1, 0, 28, 0, 248, 0, 636, 0, 542, 0, 36, 0, 56, 0, 4, 0, 1}, 1, 8, 2, 1, 2},
        {2, {4, 0, 16, 0, 56, 0, 112, 0, 104, 0, 40, 0, 4, 0, 0, 0, 1}, 1, 16, 1, 1, 2},
        {-1, {1, 0, 4, 0, 22, 0, 4, 0, 1}, 1, 8, 1, 1, 2},
        {-2, {9, 0, -20, 0, 10, 0, 4, 0, 1}, 1, 8, 1, 1, 2},
        {-3, {9, 0, -6, 0, 31, 0, -10, 0, 1}, 1, 4, 2, 1, 2},
        {-5, {16, 0, 512, 0, 248, 0, 32, 0, 1}, 1, 4, 2, 1, 2},
        {-6, {2704, 0, -288, 0, 248, 0, 24, 0, 1}, 1, 4, 2, 1, 2},
    };
    return rows;
}

// Degree-18 record for the p = 3 run: the maximal elementary 3-abelian
// extension of Q(sqrt(-3)) unramified outside {3, infinity}.
inline const TableFieldRow& p3_field_record() {
    static const TableFieldRow row{
        -3, {729, 0, 0, 1458, 0, 0, 2673, 0, 0, 540, 0, 0, 135, 0, 0, -9, 0, 0, 1}, 1, 18, 1, 1, 3};
    return row;
}

// ---- sextic table (S3 extensions of imaginary quadratic fields) ----

struct SexticRow {
    long d;
    std::array<long, 7> poly;  // low to high, degree 6
    bool unramified;           // claimed: L/K unramified at all finite places
};

inline const std::vector<SexticRow>& sextic_table() {
    static const std::vector<SexticRow> rows{
        {-13, {4, -24, 36, 4, 1, 0, 1}, false},
        {-19, {4, 14, 1, -24, 23, -8, 1}, false},
        {-22, {47, 90, 47, 8, 5, -2, 1}, false},
        {-37, {293, -288, 71, -4, 23, 4, 1}, false},
        {-38, {207, -258, 89, 60, 33, 6, 1}, false},
        {-46, {271, 326, 291, 52, 21, 6, 1}, true},
        {-58, {382, 380, 261, 60, 40, 8, 1}, false},
        {-62, {423, 246, 179, 132, 45, 6, 1}, true},
        {-74, {691, -654, 101, 32, 41, 6, 1}, false},
        {-79, {64, 64, 40, -4, 14, -3, 1}, false},
    };
    return rows;
}

// ---- admissible-curve classifications (external published results) ----

// Comalada: for 1 < d < 100 an admissible curve over Q(sqrt(d)) exists
// exactly for these d.
inline const std::vector<long>& comalada_admissible_d() {
    static const std::vector<long> v{6, 7, 14, 22, 38, 41, 65, 77, 86};
    return v;
}

// Setzer: for d < 0 an admissible curve over Q(sqrt(d)) exists iff
// d = 65*d1 with d1 a square mod 5 and mod 13, and 65 a square mod d1.
struct SetzerRule {
    long factor = 65;
    std::array<long, 2> moduli{5, 13};
};

inline constexpr SetzerRule kSetzerRule{};

}  // namespace qfa::data
