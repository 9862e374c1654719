#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgroup/bitset.hpp"

namespace pgroup {

using Elem = std::int32_t;

inline constexpr Elem kOrderCap = 80000;        // largest group the engine will build
inline constexpr Elem kTableOrderCap = 4096;    // explicit multiplication table below this
inline constexpr Elem kExhaustiveAssocCap = 512;
inline constexpr int kRandomTripleChecks = 10000;
inline constexpr Elem kLatticeOrderCap = 512;   // full subgroup enumeration budget
inline constexpr Elem kNormalEnumOrderCap = 4096;

struct group_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    Elem p = 0;
    int m = 0;
};

inline std::optional<PrimePower> detect_prime_power(Elem n) {
    if (n < 2) return std::nullopt;
    Elem p = 0;
    for (Elem d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{n, 1};
    int m = 0;
    Elem r = n;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) return std::nullopt;
    return PrimePower{p, m};
}

using MulRule = std::function<Elem(Elem, Elem)>;

// Construction-time checking. `none` exists only for deliberately broken
// inputs (the verify command's fault-injection path).
enum class Checks { standard, none };

namespace detail {

struct GroupData {
    Elem n = 0;
    std::vector<std::uint16_t> table;  // row-major, present iff n <= kTableOrderCap
    MulRule rule;                      // present iff table is not
    std::vector<Elem> inv;
    std::vector<Elem> gens;
    std::vector<std::string> labels;
    std::optional<PrimePower> pp;
    std::string name;
    // transparent memo slot for the nilpotency class (-1 = not yet computed);
    // written at most with one value, so concurrent recomputation is harmless
    mutable std::atomic<int> class_memo{-1};
};

}  // namespace detail

// Immutable handle to a finite group with elements indexed 0..n-1 and
// identity at index 0. Cheap to copy and safe to share across threads.
class Group {
public:
    Group() = default;

    bool valid() const { return static_cast<bool>(d_); }
    Elem order() const { return d_->n; }
    Elem identity() const { return 0; }

    Elem mul(Elem a, Elem b) const {
        const auto& d = *d_;
        if (!d.table.empty()) return d.table[static_cast<std::size_t>(a) * d.n + b];
        return d.rule(a, b);
    }

    Elem inv(Elem a) const { return d_->inv[a]; }

    Elem conjugate(Elem x, Elem g) const {  // g^{-1} x g
        return mul(mul(inv(g), x), g);
    }

    Elem commutator(Elem x, Elem y) const {  // x^{-1} y^{-1} x y
        return mul(mul(inv(x), inv(y)), mul(x, y));
    }

    Elem power(Elem x, long long e) const {
        if (e < 0) return power(inv(x), -e);
        Elem acc = 0, base = x;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    const std::vector<Elem>& generators() const { return d_->gens; }
    const std::string& label(Elem x) const { return d_->labels[x]; }
    const std::string& name() const { return d_->name; }
    std::optional<PrimePower> prime_power() const { return d_->pp; }

    bool same(const Group& o) const { return d_ == o.d_; }

    int memoized_class() const { return d_->class_memo.load(std::memory_order_relaxed); }
    void memoize_class(int c) const { d_->class_memo.store(c, std::memory_order_relaxed); }

    struct Init {
        Elem n = 0;
        MulRule rule;
        std::vector<Elem> gens;
        std::vector<std::string> labels;
        std::string name;
        Checks checks = Checks::standard;
    };

    static Group create(Init init);

private:
    explicit Group(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::GroupData> d_;
};

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

struct Subgroup {
    Group parent;
    Bitset members;
    Elem size = 0;
    std::vector<Elem> gens;  // a known generating set; may be empty (unknown)
    // set at creation by producers that know the answer (class closures,
    // index-p subgroups); never written afterwards, so sharing stays safe
    std::optional<bool> normal_cached;

    bool contains(Elem x) const { return members.test(static_cast<std::size_t>(x)); }
};

inline Subgroup subgroup_from_members(const Group& G, Bitset members,
                                      std::vector<Elem> gens = {}) {
    Subgroup H;
    H.parent = G;
    H.size = static_cast<Elem>(members.count());
    H.members = std::move(members);
    H.gens = std::move(gens);
    return H;
}

inline Subgroup trivial_subgroup(const Group& G) {
    Bitset b(static_cast<std::size_t>(G.order()));
    b.set(0);
    return subgroup_from_members(G, std::move(b));
}

inline Subgroup whole_group(const Group& G) {
    Bitset b(static_cast<std::size_t>(G.order()));
    for (Elem i = 0; i < G.order(); ++i) b.set(static_cast<std::size_t>(i));
    return subgroup_from_members(G, std::move(b), G.generators());
}

// Closure of a seed set under multiplication. In a finite group this is the
// generated subgroup (inverses are positive powers).
inline Subgroup subgroup_generated(const Group& G, std::span<const Elem> seed) {
    Bitset memb(static_cast<std::size_t>(G.order()));
    memb.set(0);
    std::vector<Elem> frontier{0};
    std::vector<Elem> gens;
    for (Elem s : seed) {
        if (s < 0 || s >= G.order()) throw group_error("generator index out of range");
        if (!memb.test(static_cast<std::size_t>(s))) {
            memb.set(static_cast<std::size_t>(s));
            frontier.push_back(s);
        }
        if (s != 0) gens.push_back(s);
    }
    std::vector<Elem> glist(seed.begin(), seed.end());
    for (std::size_t qi = 0; qi < frontier.size(); ++qi) {
        Elem x = frontier[qi];
        for (Elem g : glist) {
            Elem y = G.mul(x, g);
            if (!memb.test(static_cast<std::size_t>(y))) {
                memb.set(static_cast<std::size_t>(y));
                frontier.push_back(y);
            }
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return subgroup_from_members(G, std::move(memb), std::move(gens));
}

inline Subgroup subgroup_generated(const Group& G, std::initializer_list<Elem> seed) {
    return subgroup_generated(G, std::span<const Elem>(seed.begin(), seed.size()));
}

inline Subgroup subgroup_generated_set(const Group& G, const Bitset& seed) {
    return subgroup_generated(G, std::span<const Elem>(seed.to_vector()));
}

// A small generating set for H: its recorded one, or a greedy chain of
// members each outside the closure of the previous picks.
inline std::vector<Elem> generating_set(const Subgroup& H) {
    if (!H.gens.empty()) return H.gens;
    if (H.size == 1) return {};
    std::vector<Elem> picked;
    Bitset closed(static_cast<std::size_t>(H.parent.order()));
    closed.set(0);
    for (Elem x : H.members.to_vector()) {
        if (x == 0 || closed.test(static_cast<std::size_t>(x))) continue;
        picked.push_back(x);
        closed = subgroup_generated(H.parent, std::span<const Elem>(picked)).members;
        if (static_cast<Elem>(closed.count()) == H.size) break;
    }
    return picked;
}

inline Elem element_order(const Group& G, Elem x) {
    if (x < 0 || x >= G.order()) throw group_error("element index out of range");
    Elem acc = x;
    Elem k = 1;
    while (acc != 0) {
        acc = G.mul(acc, x);
        ++k;
        if (k > G.order()) throw group_error("element order exceeds group order");
    }
    return k;
}

inline bool is_normal(const Group& G, const Subgroup& H) {
    if (H.normal_cached) return *H.normal_cached;
    std::vector<Elem> hg = generating_set(H);
    for (Elem g : G.generators())
        for (Elem h : hg)
            if (!H.contains(G.conjugate(h, g))) return false;
    return true;
}

// [X, Y]: the subgroup generated by all commutators between X and Y.
// Small inputs take all pairs; larger ones take the commutators of
// generating sets and close under conjugation by both (same subgroup,
// exercised against the pairwise route in the test suite).
inline Subgroup commutator_subgroup(const Group& G, const Subgroup& X, const Subgroup& Y) {
    const std::uint64_t pairs =
        static_cast<std::uint64_t>(X.size) * static_cast<std::uint64_t>(Y.size);
    if (pairs <= (1u << 22)) {
        Bitset seed(static_cast<std::size_t>(G.order()));
        X.members.for_each([&](Elem x) {
            Y.members.for_each([&](Elem y) {
                seed.set(static_cast<std::size_t>(G.commutator(x, y)));
            });
        });
        return subgroup_generated_set(G, seed);
    }

    std::vector<Elem> xg = generating_set(X);
    std::vector<Elem> yg = generating_set(Y);
    std::vector<Elem> conj = xg;
    conj.insert(conj.end(), yg.begin(), yg.end());

    std::vector<Elem> seeds;
    for (Elem x : xg)
        for (Elem y : yg) seeds.push_back(G.commutator(x, y));

    Subgroup H = subgroup_generated(G, std::span<const Elem>(seeds));
    for (;;) {
        std::vector<Elem> extra;
        H.members.for_each([&](Elem w) {
            for (Elem c : conj) {
                Elem t = G.conjugate(w, c);
                if (!H.contains(t)) extra.push_back(t);
            }
        });
        if (extra.empty()) break;
        std::vector<Elem> next = H.members.to_vector();
        next.insert(next.end(), extra.begin(), extra.end());
        H = subgroup_generated(G, std::span<const Elem>(next));
    }
    H.gens.clear();  // member set is authoritative; regenerate on demand
    return H;
}

inline Subgroup intersect(const Subgroup& A, const Subgroup& B) {
    Bitset m = A.members;
    m &= B.members;
    return subgroup_from_members(A.parent, std::move(m));
}

// ---------------------------------------------------------------------------
// Homomorphisms and quotients
// ---------------------------------------------------------------------------

struct Homomorphism {
    Group source;
    Group target;
    std::vector<Elem> map;

    Elem operator()(Elem x) const { return map[x]; }
};

inline void verify_homomorphism(const Homomorphism& h) {
    const Elem n = h.source.order();
    if (static_cast<Elem>(h.map.size()) != n) throw group_error("homomorphism map has wrong size");
    if (h.map[0] != 0) throw group_error("homomorphism does not fix the identity");
    auto check = [&](Elem a, Elem b) {
        if (h.map[h.source.mul(a, b)] != h.target.mul(h.map[a], h.map[b]))
            throw group_error("map is not multiplicative");
    };
    if (n <= kExhaustiveAssocCap) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) check(a, b);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<Elem> pick(0, n - 1);
        for (int i = 0; i < kRandomTripleChecks; ++i) check(pick(rng), pick(rng));
    }
}

inline Subgroup preimage(const Homomorphism& h, const Subgroup& T) {
    Bitset m(static_cast<std::size_t>(h.source.order()));
    for (Elem x = 0; x < h.source.order(); ++x)
        if (T.contains(h.map[x])) m.set(static_cast<std::size_t>(x));
    return subgroup_from_members(h.source, std::move(m));
}

inline Subgroup image(const Homomorphism& h, const Subgroup& S) {
    Bitset m(static_cast<std::size_t>(h.target.order()));
    S.members.for_each([&](Elem x) { m.set(static_cast<std::size_t>(h.map[x])); });
    return subgroup_from_members(h.target, std::move(m));
}

struct Quotient {
    Group group;
    Homomorphism projection;
};

Quotient quotient_group(const Group& G, const Subgroup& N);
Group direct_product(const Group& G, const Group& H);

// Subgroup re-indexed as a standalone group. Second component maps the new
// indices back to parent element indices (ascending, so identity stays 0).
std::pair<Group, std::vector<Elem>> subgroup_as_group(const Subgroup& H,
                                                      const std::string& name = "");

// ---------------------------------------------------------------------------
// Implementation
// ---------------------------------------------------------------------------

inline Group Group::create(Init init) {
    if (init.n < 1) throw group_error("group order must be positive");
    if (init.n > kOrderCap) throw group_error("group order exceeds the engine cap");

    auto d = std::make_shared<detail::GroupData>();
    d->n = init.n;
    d->name = std::move(init.name);
    d->gens = std::move(init.gens);
    d->labels = std::move(init.labels);
    if (d->labels.empty()) {
        d->labels.resize(static_cast<std::size_t>(init.n));
        for (Elem i = 0; i < init.n; ++i) d->labels[i] = "g" + std::to_string(i);
    }

    const Elem n = init.n;
    MulRule rule = std::move(init.rule);
    if (n <= kTableOrderCap) {
        d->table.resize(static_cast<std::size_t>(n) * n);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                Elem v = rule(a, b);
                if (v < 0 || v >= n) throw group_error("multiplication rule out of range");
                d->table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(v);
            }
    } else {
        d->rule = std::move(rule);
    }

    auto mul = [&](Elem a, Elem b) -> Elem {
        if (!d->table.empty()) return d->table[static_cast<std::size_t>(a) * n + b];
        return d->rule(a, b);
    };

    if (init.checks == Checks::standard) {
        for (Elem a = 0; a < n; ++a)
            if (mul(0, a) != a || mul(a, 0) != a)
                throw group_error("index 0 is not a two-sided identity");
    }

    // Inverses via the power walk x, x^2, ...: the predecessor of the
    // identity is x^{-1}. Falls back to a row scan for unchecked inputs.
    d->inv.assign(static_cast<std::size_t>(n), 0);
    for (Elem a = 1; a < n; ++a) {
        Elem prev = a, cur = mul(a, a);
        Elem steps = 1;
        while (cur != 0 && steps <= n) {
            prev = cur;
            cur = mul(cur, a);
            ++steps;
        }
        if (cur == 0) {
            d->inv[a] = prev;
        } else if (init.checks == Checks::none) {
            Elem found = 0;
            for (Elem b = 0; b < n; ++b)
                if (mul(a, b) == 0) {
                    found = b;
                    break;
                }
            d->inv[a] = found;
        } else {
            throw group_error("element has no inverse");
        }
    }

    if (init.checks == Checks::standard) {
        for (Elem a = 0; a < n; ++a)
            if (mul(a, d->inv[a]) != 0 || mul(d->inv[a], a) != 0)
                throw group_error("inverse is not two-sided");

        auto assoc = [&](Elem a, Elem b, Elem c) {
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw group_error("multiplication is not associative");
        };
        if (n <= kExhaustiveAssocCap) {
            for (Elem a = 0; a < n; ++a)
                for (Elem b = 0; b < n; ++b)
                    for (Elem c = 0; c < n; ++c) assoc(a, b, c);
        } else {
            std::mt19937 rng(98765);
            std::uniform_int_distribution<Elem> pick(0, n - 1);
            for (int i = 0; i < kRandomTripleChecks; ++i) assoc(pick(rng), pick(rng), pick(rng));
        }
    }

    Group G{std::shared_ptr<const detail::GroupData>(d)};

    if (init.checks == Checks::standard) {
        if (n > 1 && G.generators().empty())
            throw group_error("nontrivial group needs generators");
        Subgroup gen = subgroup_generated(G, std::span<const Elem>(G.generators()));
        if (gen.size != n) throw group_error("generators do not generate the group");
    }

    d->pp = detect_prime_power(n);
    return G;
}

inline Quotient quotient_group(const Group& G, const Subgroup& N) {
    if (!is_normal(G, N)) throw group_error("quotient by a non-normal subgroup");
    const Elem n = G.order();
    const Elem q = n / N.size;
    if (n % N.size != 0) throw group_error("subgroup size does not divide group order");

    std::vector<Elem> nv = N.members.to_vector();
    std::vector<Elem> coset_of(static_cast<std::size_t>(n), -1);
    std::vector<Elem> rep;
    rep.reserve(static_cast<std::size_t>(q));
    for (Elem x = 0; x < n; ++x) {
        if (coset_of[x] != -1) continue;
        Elem c = static_cast<Elem>(rep.size());
        rep.push_back(x);
        Elem assigned = 0;
        for (Elem m : nv) {
            Elem y = G.mul(x, m);
            if (coset_of[y] != -1) {
                if (coset_of[y] != c) throw group_error("cosets do not partition the group");
                continue;
            }
            coset_of[y] = c;
            ++assigned;
        }
        if (assigned != N.size) throw group_error("cosets do not partition the group");
    }
    if (static_cast<Elem>(rep.size()) != q) throw group_error("coset count mismatch");

    auto shared_rep = std::make_shared<std::vector<Elem>>(std::move(rep));
    auto shared_coset = std::make_shared<std::vector<Elem>>(coset_of);
    Group parent = G;
    MulRule rule = [parent, shared_rep, shared_coset](Elem a, Elem b) -> Elem {
        return (*shared_coset)[parent.mul((*shared_rep)[a], (*shared_rep)[b])];
    };

    std::vector<Elem> gens;
    for (Elem g : G.generators()) {
        Elem c = coset_of[g];
        if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
    }
    std::vector<std::string> labels(static_cast<std::size_t>(q));
    for (Elem c = 0; c < q; ++c) labels[c] = "[" + G.label((*shared_rep)[c]) + "]";

    Group Q = Group::create({.n = q,
                             .rule = rule,
                             .gens = std::move(gens),
                             .labels = std::move(labels),
                             .name = G.name() + "/N" + std::to_string(N.size)});

    Homomorphism proj{G, Q, std::move(coset_of)};
    verify_homomorphism(proj);
    return Quotient{Q, std::move(proj)};
}

inline Group direct_product(const Group& G, const Group& H) {
    const long long n = static_cast<long long>(G.order()) * H.order();
    if (n > kOrderCap) throw group_error("direct product exceeds the engine cap");
    const Elem hn = H.order();
    Group a = G, b = H;
    MulRule rule = [a, b, hn](Elem x, Elem y) -> Elem {
        return a.mul(x / hn, y / hn) * hn + b.mul(x % hn, y % hn);
    };
    std::vector<Elem> gens;
    for (Elem g : G.generators()) gens.push_back(g * hn);
    for (Elem h : H.generators()) gens.push_back(h);
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (Elem x = 0; x < static_cast<Elem>(n); ++x)
        labels[x] = "(" + G.label(x / hn) + "," + H.label(x % hn) + ")";
    return Group::create({.n = static_cast<Elem>(n),
                          .rule = rule,
                          .gens = std::move(gens),
                          .labels = std::move(labels),
                          .name = G.name() + "x" + H.name()});
}

inline std::pair<Group, std::vector<Elem>> subgroup_as_group(const Subgroup& H,
                                                             const std::string& name) {
    std::vector<Elem> elems = H.members.to_vector();  // ascending, identity first
    const Elem k = static_cast<Elem>(elems.size());
    auto idx_of = std::make_shared<std::vector<Elem>>(static_cast<std::size_t>(H.parent.order()), -1);
    for (Elem i = 0; i < k; ++i) (*idx_of)[elems[i]] = i;

    Group parent = H.parent;
    auto shared_elems = std::make_shared<std::vector<Elem>>(elems);
    MulRule rule = [parent, shared_elems, idx_of](Elem a, Elem b) -> Elem {
        return (*idx_of)[parent.mul((*shared_elems)[a], (*shared_elems)[b])];
    };

    std::vector<Elem> gens;
    for (Elem g : generating_set(H)) gens.push_back((*idx_of)[g]);
    std::vector<std::string> labels(static_cast<std::size_t>(k));
    for (Elem i = 0; i < k; ++i) labels[i] = H.parent.label(elems[i]);

    Group S = Group::create(
        {.n = k,
         .rule = rule,
         .gens = std::move(gens),
         .labels = std::move(labels),
         .name = name.empty() ? H.parent.name() + "[" + std::to_string(k) + "]" : name});
    return {std::move(S), std::move(elems)};
}

}  // namespace pgroup
