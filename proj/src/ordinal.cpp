#include "opint/ordinal.hpp"

#include <charconv>
#include <numeric>

namespace opint {

namespace {

std::string seq_str(std::span<const int> v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

} // namespace

Surjection::Surjection(int codomain, std::vector<int> values)
    : cod_(codomain), values_(std::move(values)) {
    if (cod_ < 1 || values_.empty())
        throw Error(Error::Kind::Invalid, "surjection: ordinals must be non-empty");
    int expect = 1;
    for (int v : values_) {
        if (v == expect + 1) {
            ++expect;
        } else if (v != expect) {
            throw Error(Error::Kind::Invalid, "surjection: values " + seq_str(values_) +
                                                  " are not an order-preserving surjection onto " +
                                                  std::to_string(cod_));
        }
    }
    if (values_.front() != 1 || expect != cod_)
        throw Error(Error::Kind::Invalid, "surjection: values " + seq_str(values_) +
                                              " do not cover 1.." + std::to_string(cod_));
}

Surjection Surjection::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Surjection(n, std::move(v));
}

Surjection Surjection::bang(int n) {
    return Surjection(1, std::vector<int>(static_cast<std::size_t>(n), 1));
}

std::vector<int> Surjection::fiber_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(cod_), 0);
    for (int v : values_) ++sizes[static_cast<std::size_t>(v - 1)];
    return sizes;
}

std::string Surjection::str() const {
    return std::to_string(dom()) + "->" + std::to_string(cod_) + ":" + seq_str(values_);
}

Surjection Surjection::parse(std::string_view text) {
    auto fail = [&] {
        return Error(Error::Kind::Input, "cannot parse surjection '" + std::string(text) +
                                             "', expected m->n:[v1,...,vm]");
    };
    auto read_int = [&](std::string_view& s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        int out = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc()) throw fail();
        s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        return out;
    };
    auto expect = [&](std::string_view& s, std::string_view tok) {
        if (s.substr(0, tok.size()) != tok) throw fail();
        s.remove_prefix(tok.size());
    };
    std::string_view s = text;
    int m = read_int(s);
    expect(s, "->");
    int n = read_int(s);
    expect(s, ":");
    expect(s, "[");
    std::vector<int> values;
    if (!s.empty() && s.front() != ']') {
        for (;;) {
            values.push_back(read_int(s));
            if (!s.empty() && s.front() == ',') {
                s.remove_prefix(1);
                continue;
            }
            break;
        }
    }
    expect(s, "]");
    if (!s.empty() || static_cast<int>(values.size()) != m) throw fail();
    try {
        return Surjection(n, std::move(values));
    } catch (const Error& e) {
        throw Error(Error::Kind::Input, e.what());
    }
}

std::uint64_t Surjection::key() const {
    if (dom() > 15 || cod_ > 15)
        throw Error(Error::Kind::Range, "surjection key: ordinals above 15 are not supported");
    std::uint64_t k = static_cast<std::uint64_t>(dom());
    for (int i = 0; i < dom(); ++i)
        k |= static_cast<std::uint64_t>(values_[static_cast<std::size_t>(i)]) << (4 * (i + 1));
    return k;
}

Surjection compose(const Surjection& f, const Surjection& g) {
    if (f.cod() != g.dom())
        throw Error(Error::Kind::Composition,
                    "compose: codomain of " + f.str() + " differs from domain of " + g.str());
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(f.dom()));
    for (int x : f.values()) v.push_back(g(x));
    return Surjection(g.cod(), std::move(v));
}

Preimage preimage(const Surjection& g, int i) {
    if (i < 1 || i > g.cod())
        throw Error(Error::Kind::Range, "preimage: index " + std::to_string(i) +
                                            " outside 1.." + std::to_string(g.cod()));
    Preimage p{0, {}};
    for (int pos = 1; pos <= g.dom(); ++pos)
        if (g(pos) == i) p.embedding.push_back(pos);
    p.size = static_cast<int>(p.embedding.size());
    return p;
}

Surjection induced_map(const Surjection& f, const Surjection& g, int i) {
    if (f.cod() != g.dom())
        throw Error(Error::Kind::Composition,
                    "induced_map: " + f.str() + " and " + g.str() + " are not composable");
    Preimage target = preimage(g, i);
    int offset = target.embedding.front() - 1;
    std::vector<int> v;
    for (int x : f.values())
        if (g(x) == i) v.push_back(x - offset);
    return Surjection(target.size, std::move(v));
}

Surjection ordinal_sum(std::span<const Surjection> maps) {
    if (maps.empty()) throw Error(Error::Kind::Arity, "ordinal_sum: empty sequence");
    std::vector<int> v;
    int shift = 0;
    for (const auto& f : maps) {
        for (int x : f.values()) v.push_back(x + shift);
        shift += f.cod();
    }
    return Surjection(shift, std::move(v));
}

Surjection reconstruct_triangle(const Surjection& g, const Surjection& h,
                                std::span<const Surjection> parts) {
    if (g.cod() != h.cod() || static_cast<int>(parts.size()) != g.cod())
        throw Error(Error::Kind::Arity, "reconstruct_triangle: expected " +
                                            std::to_string(g.cod()) + " parts over " +
                                            g.str() + " and " + h.str());
    auto gs = g.fiber_sizes();
    auto hs = h.fiber_sizes();
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].dom() != hs[i] || parts[i].cod() != gs[i])
            throw Error(Error::Kind::Arity,
                        "reconstruct_triangle: part " + std::to_string(i + 1) + " = " +
                            parts[i].str() + " does not map " + std::to_string(hs[i]) +
                            " to " + std::to_string(gs[i]));
    // Both h and g are monotone, so h^{-1}(i) and g^{-1}(i) are consecutive
    // blocks and the plain ordinal sum lands in the right places.
    return ordinal_sum(parts);
}

std::vector<Surjection> enumerate_surjections(int m, int n) {
    std::vector<Surjection> out;
    if (m < 1 || n < 1 || n > m) return out;
    // Choose the n-1 positions (among 2..m) where the value steps up; walking
    // the step sets from the right keeps the value sequences in lex order.
    std::vector<int> steps(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n - 1; ++j) steps[static_cast<std::size_t>(j)] = m - (n - 1) + 1 + j;
    for (;;) {
        std::vector<int> v(static_cast<std::size_t>(m));
        int val = 1;
        std::size_t next = 0;
        for (int p = 1; p <= m; ++p) {
            if (next < steps.size() && steps[next] == p) {
                ++val;
                ++next;
            }
            v[static_cast<std::size_t>(p - 1)] = val;
        }
        out.emplace_back(n, std::move(v));
        // Predecessor in colex order of step positions = successor in lex order of values.
        int j = n - 2;
        while (j >= 0) {
            int lo = (j == 0) ? 2 : steps[static_cast<std::size_t>(j - 1)] + 1;
            if (steps[static_cast<std::size_t>(j)] > lo) break;
            --j;
        }
        if (j < 0) break;
        --steps[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < n - 1; ++t) steps[static_cast<std::size_t>(t)] = m - (n - 1) + 1 + t;
    }
    return out;
}

std::vector<Surjection> surjections_up_to(int max_dom) {
    std::vector<Surjection> out;
    for (int m = 1; m <= max_dom; ++m)
        for (int n = 1; n <= m; ++n)
            for (auto& s : enumerate_surjections(m, n)) out.push_back(std::move(s));
    return out;
}

} // namespace opint
