#include "dilates/residue_core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dilates {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t p) {
    std::int64_t r = x % p;
    return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    // p <= 1e7 keeps the product well inside 64 bits
    return (a * b) % p;
}

}  // namespace

ResidueSet::ResidueSet(std::int64_t p, std::vector<std::int64_t> elems) : p_(p) {
    if (!is_prime(p)) throw CompositeModulus(p);
    for (auto& e : elems) e = mod_reduce(e, p);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    elems_ = std::move(elems);
    bits_ = BitVec(p);
    for (auto e : elems_) bits_.set(e);
}

IntegerSet::IntegerSet(std::vector<std::int64_t> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    elems_ = std::move(elems);
}

ResidueSet make_residue_set(std::int64_t p, const std::vector<std::int64_t>& elems) {
    return ResidueSet(p, elems);
}

ResidueSet dilate(const ResidueSet& a, std::int64_t t) {
    const std::int64_t p = a.modulus();
    const std::int64_t tm = mod_reduce(t, p);
    std::vector<std::int64_t> out;
    out.reserve(a.size());
    for (auto e : a.elements()) out.push_back(mul_mod(tm, e, p));
    return ResidueSet(p, std::move(out));
}

ResidueSet sum_of_dilates(const ResidueSet& a, std::int64_t t) {
    if (a.empty()) throw EmptyInput("sum_of_dilates: empty set");
    const std::int64_t p = a.modulus();
    const ResidueSet d = dilate(a, t);
    BitVec acc(p);
    for (auto e : a.elements()) acc.or_rotated(d.bits(), e);
    return ResidueSet(p, acc.to_elements());
}

IntegerSet integer_sum_of_dilates(const IntegerSet& a, std::int64_t t) {
    if (a.empty()) throw EmptyInput("integer_sum_of_dilates: empty set");
    std::vector<std::int64_t> out;
    out.reserve(a.size() * a.size());
    for (auto x : a.elements())
        for (auto y : a.elements()) out.push_back(x + t * y);
    return IntegerSet(std::move(out));
}

std::int64_t cauchy_davenport_bound(std::int64_t size_a, std::int64_t size_b,
                                    std::int64_t p) {
    return std::min(size_a + size_b - 1, p);
}

ResidueSet canonical_form(const ResidueSet& a) {
    const std::int64_t p = a.modulus();
    if (a.size() <= 1) {
        // singleton and empty orbits: {0} resp. {}
        return a.empty() ? a : ResidueSet(p, {0});
    }
    // The lex-min affine image always contains 0, so it suffices to scan,
    // for every unit u, the |A| translates of uA that place an element at 0.
    std::vector<std::int64_t> best;
    std::vector<std::int64_t> image, cand;
    for (std::int64_t u = 1; u < p; ++u) {
        image.clear();
        for (auto e : a.elements()) image.push_back(mul_mod(u, e, p));
        std::sort(image.begin(), image.end());
        for (std::size_t i = 0; i < image.size(); ++i) {
            const std::int64_t shift = image[i];
            cand.clear();
            for (std::size_t j = i; j < image.size(); ++j)
                cand.push_back(image[j] - shift);
            for (std::size_t j = 0; j < i; ++j)
                cand.push_back(image[j] - shift + p);
            if (best.empty() || cand < best) best = cand;
        }
    }
    return ResidueSet(p, std::move(best));
}

// --- single-word kernel -----------------------------------------------------

namespace {

std::uint64_t full_mask(std::int64_t p) {
    return p == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1;
}

std::uint64_t rot_left_p(std::uint64_t m, std::int64_t s, std::int64_t p) {
    s %= p;
    if (s == 0) return m;
    return ((m << s) | (m >> (p - s))) & full_mask(p);
}

// lex order on sorted element lists == "owner of the lowest differing bit"
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t d = a ^ b;
    if (d == 0) return false;
    return a & (d & ~(d - 1));
}

}  // namespace

std::uint64_t dilate_mask(std::uint64_t mask, std::int64_t t, std::int64_t p) {
    const std::int64_t tm = mod_reduce(t, p);
    std::uint64_t out = 0;
    std::uint64_t bits = mask;
    while (bits) {
        const std::int64_t a = std::countr_zero(bits);
        out |= std::uint64_t{1} << ((tm * a) % p);
        bits &= bits - 1;
    }
    return out;
}

std::uint64_t sum_of_dilates_mask(std::uint64_t mask, std::int64_t t, std::int64_t p) {
    const std::uint64_t d = dilate_mask(mask, t, p);
    std::uint64_t acc = 0;
    std::uint64_t bits = mask;
    while (bits) {
        const std::int64_t a = std::countr_zero(bits);
        acc |= rot_left_p(d, a, p);
        bits &= bits - 1;
    }
    return acc;
}

std::vector<std::int64_t> mask_to_elements(std::uint64_t mask) {
    std::vector<std::int64_t> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

std::uint64_t canonical_mask(std::uint64_t mask, std::int64_t p) {
    if (mask == 0) return 0;
    if (std::popcount(mask) == 1) return 1;
    std::uint64_t best = 0;
    for (std::int64_t u = 1; u < p; ++u) {
        const std::uint64_t img = dilate_mask(mask, u, p);
        std::uint64_t bits = img;
        while (bits) {
            const std::int64_t b = std::countr_zero(bits);
            const std::uint64_t cand = rot_left_p(img, p - b, p);
            if (best == 0 || mask_lex_less(cand, best)) best = cand;
            bits &= bits - 1;
        }
    }
    return best;
}

// --- set literal parsing ----------------------------------------------------

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::int64_t parse_int(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw ParseError("expected integer in set literal near position " +
                         std::to_string(start) + " of '" + s + "'");
    return std::stoll(s.substr(start, i - start));
}

std::vector<std::int64_t> parse_brace_list(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != '{') throw ParseError("expected '{' in set literal '" + s + "'");
    ++i;
    std::vector<std::int64_t> elems;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '}') {
        ++i;
        return elems;
    }
    while (true) {
        elems.push_back(parse_int(s, i));
        skip_ws(s, i);
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < s.size() && s[i] == '}') {
            ++i;
            return elems;
        }
        throw ParseError("expected ',' or '}' in set literal '" + s + "'");
    }
}

}  // namespace

ResidueSet parse_residue_set(const std::string& text) {
    std::size_t i = 0;
    skip_ws(text, i);
    if (i >= text.size() || text[i] != 'p')
        throw ParseError("residue set literal must start with 'p=': '" + text + "'");
    ++i;
    skip_ws(text, i);
    if (i >= text.size() || text[i] != '=')
        throw ParseError("residue set literal must start with 'p=': '" + text + "'");
    ++i;
    const std::int64_t p = parse_int(text, i);
    skip_ws(text, i);
    if (i >= text.size() || text[i] != ';')
        throw ParseError("expected ';' after modulus in '" + text + "'");
    ++i;
    auto elems = parse_brace_list(text, i);
    skip_ws(text, i);
    if (i != text.size()) throw ParseError("trailing characters in set literal '" + text + "'");
    return ResidueSet(p, std::move(elems));
}

IntegerSet parse_integer_set(const std::string& text) {
    std::size_t i = 0;
    auto elems = parse_brace_list(text, i);
    skip_ws(text, i);
    if (i != text.size()) throw ParseError("trailing characters in set literal '" + text + "'");
    return IntegerSet(std::move(elems));
}

std::variant<ResidueSet, IntegerSet> parse_set_literal(const std::string& text) {
    std::size_t i = 0;
    skip_ws(text, i);
    if (i < text.size() && text[i] == 'p') return parse_residue_set(text);
    return parse_integer_set(text);
}

std::string to_literal(const ResidueSet& a) {
    std::ostringstream os;
    os << "p=" << a.modulus() << ";{";
    for (std::size_t i = 0; i < a.elements().size(); ++i) {
        if (i) os << ',';
        os << a.elements()[i];
    }
    os << '}';
    return os.str();
}

std::string to_literal(const IntegerSet& a) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < a.elements().size(); ++i) {
        if (i) os << ',';
        os << a.elements()[i];
    }
    os << '}';
    return os.str();
}

}  // namespace dilates
