#include "mnsd/filters.hpp"

#include <array>

namespace mnsd {

namespace {

// Keys referenced by filter verdicts. Labels name the encoded result in the
// rule catalog's own numbering; quotes state the arithmetic condition.
constexpr std::array<Citation, 20> kCitations{{
    {"structural_solvable", "solvability of odd-dimensional modular categories",
     "all these modular categories are solvable"},
    {"structural_divides", "pointed subcategory divisibility",
     "the quotient FPdim(C)/FPdim(D) is an algebraic integer"},
    {"f1", "Lemma 3.1", "d_i is odd and n_i is even"},
    {"f2", "Lemma 3.3", "n_1+9n_2 divides FPdim(C)"},
    {"f2_strict", "Lemma 3.3, dimension-9 clause",
     "does not have simple objects of dimension 9"},
    {"f3", "Lemma 3.4", "the p^{2t} divides FPdim(C)"},
    {"f4", "Lemma 3.5", "n_1 d_i^2 <= FPdim(C) for all i"},
    {"f5", "Lemmas 3.6 and 3.7",
     "n divides m or d^2 n divides FPdim(C); and d^2 n < FPdim(C)"},
    {"f8", "Lemma 3.8(1)", "d_i^2 divides FPdim(C)"},
    {"f9", "Lemma 3.8(2)", "n_1 divides n_i d_i^2"},
    {"f10", "Proposition 3.10", "either p|q-1 or q|p-1"},
    {"f11", "Lemma 3.11", "Then p|q-1"},
    {"f12", "Proposition 3.10, proof step", "contains a non-trivial invertible object"},
    {"f13", "Lemma 4.3", "either pointed or perfect"},
    {"f14_k1", "known pointed dimensions q^n d",
     "modular categories of dimension dq^n is pointed"},
    {"f14_k2", "Lemma 4.3, dimension 3^5 d", "FP dimension 3^5 d is pointed"},
    {"f15", "Lemma 4.7", "It has no solutions."},
    {"f16", "Lemma 3.9", "C_ad can not admit type (1,p;p,n_2';q,n_3';...)"},
    {"f17", "Lemma 4.8 via the Mueger decomposition", "braided equivalent to D (x) D'"},
    {"f18", "Lemma 4.5", "the simple objects of D' has dimension at most 3"},
}};

} // namespace

std::span<const Citation> citation_table() { return kCitations; }

const Citation* find_citation(std::string_view key) {
    for (const auto& c : kCitations) {
        if (c.key == key) return &c;
    }
    return nullptr;
}

std::string citation_table_text() {
    std::string out;
    for (const auto& c : kCitations) {
        out += c.key;
        out += '\t';
        out += c.label;
        out += '\t';
        out += c.quote;
        out += '\n';
    }
    return out;
}

} // namespace mnsd
