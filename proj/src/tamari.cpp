#include "tamarib/tamari.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace tamarib {

std::string Validation::describe() const {
    if (valid) return "valid";
    std::string s = "rule (" + std::string(rule == 1 ? "i" : "ii") + ") violated at i=" + std::to_string(i);
    if (j != 0) s += ", j=" + std::to_string(j);
    return s;
}

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxEnumerationN)
        throw std::invalid_argument("n must lie in [1, " + std::to_string(kMaxEnumerationN) +
                                    "], got " + std::to_string(n));
}

// Rule (i) for the pair (i, j), 0-based.
bool rule_one_holds(TBSymbol ri, TBSymbol rj, int i, int j) {
    const TBSymbol bound = rj - (j - i);
    if (bound.is_finite() && bound.value() < 0) return true;
    return ri <= bound;
}

// Position (0-based) that rule (ii) forces to infinity because of entry i, if any.
std::optional<int> forced_infinity(TBSymbol ri, int i, int n) {
    if (ri.is_inf() || ri.value() < i + 1) return std::nullopt;
    return n + (i + 1) - ri.value() - 1;
}

}  // namespace

Validation validate_type_b(const TBVector& v) {
    const int n = v.n();
    if (n == 0) throw MalformedVector("type-B vector must have n >= 1");
    for (int i = 0; i < n; ++i) {
        if (v[i].is_finite() && (v[i].value() < 0 || v[i].value() > n - 1))
            throw MalformedVector("entry " + std::to_string(i + 1) + " of " + to_string(v) +
                                  " lies outside [0, " + std::to_string(n - 1) + "]");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!rule_one_holds(v[i], v[j], i, j)) return {false, 1, i + 1, j + 1};
    for (int i = 0; i < n; ++i) {
        if (auto f = forced_infinity(v[i], i, n); f && v[*f].is_finite()) return {false, 2, i + 1, *f + 1};
    }
    return {};
}

Validation validate_type_a(const TAVector& v) {
    const int n = v.n();
    if (n == 0) throw MalformedVector("type-A vector must have n >= 1");
    for (int i = 0; i < n; ++i) {
        if (v[i] < 1 || v[i] > n)
            throw MalformedVector("entry " + std::to_string(i + 1) + " of " + to_string(v) +
                                  " lies outside [1, " + std::to_string(n) + "]");
    }
    for (int i = 0; i < n; ++i)
        if (v[i] < i + 1) return {false, 1, i + 1, 0};
    for (int i = 0; i < n; ++i)
        for (int j = i; j < v[i]; ++j)
            if (v[j] > v[i]) return {false, 2, i + 1, j + 1};
    return {};
}

std::vector<TBVector> enumerate_type_b(int n) {
    check_n(n);
    std::vector<TBSymbol> symbols;
    for (int s = 0; s < n; ++s) symbols.push_back(TBSymbol::finite(s));
    symbols.push_back(TBSymbol::inf());

    std::vector<TBVector> out;
    TBVector cur(std::vector<TBSymbol>(static_cast<std::size_t>(n)));

    // Both rules only ever relate a position to earlier ones once the later
    // position is placed, so checking each placement against the prefix is exact.
    auto fits = [&](int pos, TBSymbol s) {
        for (int i = 0; i < pos; ++i) {
            if (!rule_one_holds(cur[i], s, i, pos)) return false;
            if (auto f = forced_infinity(cur[i], i, n); f && *f == pos && s.is_finite()) return false;
        }
        return true;
    };
    auto recurse = [&](auto& self, int pos) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (TBSymbol s : symbols) {
            if (!fits(pos, s)) continue;
            cur[pos] = s;
            self(self, pos + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

std::vector<TAVector> enumerate_type_a(int n) {
    check_n(n);
    std::vector<TAVector> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    auto recurse = [&](auto& self, int pos) -> void {
        if (pos == n) {
            out.emplace_back(cur);
            return;
        }
        for (int value = pos + 1; value <= n; ++value) {
            bool ok = true;
            for (int i = 0; i < pos && ok; ++i)
                if (pos < cur[i] && value > cur[i]) ok = false;
            if (!ok) continue;
            cur[pos] = value;
            self(self, pos + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

bool leq_componentwise(const TBVector& a, const TBVector& b) {
    if (a.n() != b.n()) throw std::invalid_argument("cannot compare vectors of different length");
    for (int i = 0; i < a.n(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool leq_componentwise(const TAVector& a, const TAVector& b) {
    if (a.n() != b.n()) throw std::invalid_argument("cannot compare vectors of different length");
    for (int i = 0; i < a.n(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

int entry_sum(const TBVector& v) {
    int s = 0;
    for (auto e : v.entries()) s += e.weight(v.n());
    return s;
}

std::string to_string(TBSymbol s) { return s.is_inf() ? "inf" : std::to_string(s.value()); }

std::string to_string(const TBVector& v) {
    std::string s = "(";
    for (int i = 0; i < v.n(); ++i) {
        if (i) s += ',';
        s += to_string(v[i]);
    }
    return s + ')';
}

std::string to_string(const TAVector& v) {
    std::string s = "(";
    for (int i = 0; i < v.n(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ')';
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_tuple(std::string_view text) {
    const auto body = trim(text);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw std::invalid_argument("expected a parenthesised tuple, got '" + std::string(text) + "'");
    std::vector<std::string_view> parts;
    auto inner = body.substr(1, body.size() - 2);
    while (true) {
        const auto comma = inner.find(',');
        parts.push_back(trim(inner.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        inner.remove_prefix(comma + 1);
    }
    return parts;
}

int parse_int(std::string_view s, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad tuple entry '" + std::string(s) + "' in '" + std::string(whole) + "'");
    return value;
}

}  // namespace

TBVector parse_tb_vector(std::string_view text) {
    std::vector<TBSymbol> entries;
    for (auto part : split_tuple(text)) {
        if (part == "inf" || part == "\xE2\x88\x9E")
            entries.push_back(TBSymbol::inf());
        else
            entries.push_back(TBSymbol::finite(parse_int(part, text)));
    }
    return TBVector(std::move(entries));
}

TAVector parse_ta_vector(std::string_view text) {
    std::vector<int> entries;
    for (auto part : split_tuple(text)) entries.push_back(parse_int(part, text));
    return TAVector(std::move(entries));
}

std::optional<Index> TypeBLattice::index_of(const TBVector& v) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), v);
    if (it == elements.end() || *it != v) return std::nullopt;
    return static_cast<Index>(it - elements.begin());
}

TypeBLattice build_type_b_lattice(int n) {
    auto elements = enumerate_type_b(n);
    auto poset = build_poset(std::span<const TBVector>(elements),
                             [](const TBVector& a, const TBVector& b) { return leq_componentwise(a, b); },
                             [](const TBVector& v) { return to_string(v); });
    return TypeBLattice{n, std::move(elements), std::move(poset)};
}

TypeALattice build_type_a_lattice(int n) {
    auto elements = enumerate_type_a(n);
    auto poset = build_poset(std::span<const TAVector>(elements),
                             [](const TAVector& a, const TAVector& b) { return leq_componentwise(a, b); },
                             [](const TAVector& v) { return to_string(v); });
    return TypeALattice{n, std::move(elements), std::move(poset)};
}

}  // namespace tamarib
