#include "mnsd/typevec.hpp"

#include <cctype>
#include <charconv>

namespace mnsd {

namespace {

void validate(const std::vector<TypeEntry>& entries) {
    if (entries.empty()) throw InvalidInput("type vector must have at least one entry");
    if (entries.front().dim != 1)
        throw InvalidInput("first entry must have dimension 1, got dimension " +
                           std::to_string(entries.front().dim));
    u64 prev = 0;
    for (const auto& e : entries) {
        if (e.count == 0)
            throw InvalidInput("zero count for dimension " + std::to_string(e.dim));
        if (e.dim <= prev)
            throw InvalidInput("dimensions must be strictly increasing at dimension " +
                               std::to_string(e.dim));
        prev = e.dim;
    }
}

u64 parse_integer(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) {
        const std::string tok = pos < text.size() ? std::string(1, text[pos]) : "<end>";
        throw ParseError("expected integer, found '" + tok + "'");
    }
    u64 value = 0;
    const auto* first = text.data() + start;
    const auto* last = text.data() + pos;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ParseError("integer out of range: '" + std::string(first, last) + "'");
    return value;
}

} // namespace

TypeVector::TypeVector(std::vector<TypeEntry> entries) : entries_(std::move(entries)) {
    validate(entries_);
}

TypeVector TypeVector::parse(std::string_view raw) {
    std::string text;
    text.reserve(raw.size());
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    }
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') throw ParseError("unbalanced parenthesis in '" + text + "'");
        text = text.substr(1, text.size() - 2);
    }
    if (text.empty()) throw ParseError("empty type string");

    std::vector<TypeEntry> entries;
    std::size_t pos = 0;
    while (true) {
        TypeEntry e;
        e.dim = parse_integer(text, pos);
        if (pos >= text.size() || text[pos] != ',')
            throw ParseError("expected ',' after dimension " + std::to_string(e.dim));
        ++pos;
        e.count = parse_integer(text, pos);
        entries.push_back(e);
        if (pos == text.size()) break;
        if (text[pos] != ';')
            throw ParseError("expected ';' between pairs, found '" + std::string(1, text[pos]) +
                             "'");
        ++pos;
    }
    try {
        return TypeVector(std::move(entries));
    } catch (const InvalidInput& e) {
        throw ParseError(std::string(e.what()) + " in '" + text + "'");
    }
}

std::string TypeVector::format() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(entries_[i].dim);
        s += ',';
        s += std::to_string(entries_[i].count);
    }
    s += ')';
    return s;
}

u64 TypeVector::fpdim() const {
    u64 sum = 0;
    for (const auto& e : entries_) sum += e.count * e.dim * e.dim;
    return sum;
}

u64 TypeVector::rank() const {
    u64 sum = 0;
    for (const auto& e : entries_) sum += e.count;
    return sum;
}

bool TypeVector::pointed() const { return entries_.size() == 1; }

std::optional<TypeVector> TypeVector::divide_counts(u64 r) const {
    if (r == 0) throw InvalidInput("divide_counts: divisor must be positive");
    std::vector<TypeEntry> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
        if (e.count % r != 0) return std::nullopt;
        out.push_back({e.dim, e.count / r});
    }
    return TypeVector(std::move(out));
}

bool TypeVector::canonical_less(const TypeVector& a, const TypeVector& b) {
    const u64 ra = a.rank();
    const u64 rb = b.rank();
    if (ra != rb) return ra < rb;
    const auto& ea = a.entries_;
    const auto& eb = b.entries_;
    for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
        if (ea[i].dim != eb[i].dim) return ea[i].dim < eb[i].dim;
        if (ea[i].count != eb[i].count) return ea[i].count < eb[i].count;
    }
    return ea.size() < eb.size();
}

} // namespace mnsd
