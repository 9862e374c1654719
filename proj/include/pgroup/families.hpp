#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/group.hpp"
#include "pgroup/invariants.hpp"
#include "pgroup/snf.hpp"

namespace pgroup {

enum class Family {
    cyclic,
    elementary_abelian,
    dihedral,
    quaternion,
    semidihedral,
    modular_pgroup,
    heisenberg,
    extraspecial_exp_p2,
    wreath_cpcp,
    wreath_quotient,
    cyclotomic_maxclass,
    direct_product,
};

struct FamilyDescriptor {
    Family name;
    std::map<std::string, long long> params;
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::cyclic: return "cyclic";
        case Family::elementary_abelian: return "elementary_abelian";
        case Family::dihedral: return "dihedral";
        case Family::quaternion: return "quaternion";
        case Family::semidihedral: return "semidihedral";
        case Family::modular_pgroup: return "modular_pgroup";
        case Family::heisenberg: return "heisenberg";
        case Family::extraspecial_exp_p2: return "extraspecial_exp_p2";
        case Family::wreath_cpcp: return "wreath_cpcp";
        case Family::wreath_quotient: return "wreath_quotient";
        case Family::cyclotomic_maxclass: return "cyclotomic_maxclass";
        case Family::direct_product: return "direct_product";
    }
    return "?";
}

inline std::optional<Family> family_from_string(const std::string& s) {
    static const std::map<std::string, Family> m = {
        {"cyclic", Family::cyclic},
        {"elementary_abelian", Family::elementary_abelian},
        {"dihedral", Family::dihedral},
        {"quaternion", Family::quaternion},
        {"semidihedral", Family::semidihedral},
        {"modular_pgroup", Family::modular_pgroup},
        {"heisenberg", Family::heisenberg},
        {"extraspecial_exp_p2", Family::extraspecial_exp_p2},
        {"wreath_cpcp", Family::wreath_cpcp},
        {"wreath_quotient", Family::wreath_quotient},
        {"cyclotomic_maxclass", Family::cyclotomic_maxclass},
        {"direct_product", Family::direct_product},
    };
    auto it = m.find(s);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

namespace detail {

inline long long param(const FamilyDescriptor& d, const std::string& key, long long fallback) {
    auto it = d.params.find(key);
    return it == d.params.end() ? fallback : it->second;
}

inline long long require_param(const FamilyDescriptor& d, const std::string& key) {
    auto it = d.params.find(key);
    if (it == d.params.end())
        throw group_error(std::string("family ") + family_name(d.name) + " needs parameter " + key);
    return it->second;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline long long ipow(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) {
        r *= b;
        if (r > 4 * static_cast<long long>(kOrderCap)) return r;  // callers cap-check
    }
    return r;
}

// Mixed-radix coordinates shared by the closed-form families.
struct CoordSystem {
    std::vector<Elem> radix;
    Elem order = 1;

    explicit CoordSystem(std::vector<Elem> r) : radix(std::move(r)) {
        long long o = 1;
        for (Elem x : radix) o *= x;
        if (o > kOrderCap) throw group_error("family order exceeds the engine cap");
        order = static_cast<Elem>(o);
    }

    std::vector<Elem> decode(Elem idx) const {
        std::vector<Elem> c(radix.size());
        for (std::size_t i = 0; i < radix.size(); ++i) {
            c[i] = idx % radix[i];
            idx /= radix[i];
        }
        return c;
    }

    Elem encode(const std::vector<Elem>& c) const {
        Elem idx = 0;
        for (std::size_t i = radix.size(); i-- > 0;) idx = idx * radix[i] + c[i];
        return idx;
    }
};

using CoordRule = std::vector<Elem> (*)(const CoordSystem&, const std::vector<Elem>&,
                                        const std::vector<Elem>&, const std::vector<long long>&);

inline Group make_coordinate_group(std::vector<Elem> radix, std::string name,
                                   std::function<std::vector<Elem>(const std::vector<Elem>&,
                                                                   const std::vector<Elem>&)> rule,
                                   std::function<std::string(const std::vector<Elem>&)> labeler,
                                   std::vector<std::vector<Elem>> generator_coords,
                                   Checks checks = Checks::standard) {
    auto cs = std::make_shared<CoordSystem>(std::move(radix));
    auto fn = std::make_shared<decltype(rule)>(std::move(rule));
    MulRule mul = [cs, fn](Elem a, Elem b) -> Elem {
        return cs->encode((*fn)(cs->decode(a), cs->decode(b)));
    };
    std::vector<Elem> gens;
    for (const auto& gc : generator_coords) gens.push_back(cs->encode(gc));
    std::vector<std::string> labels(static_cast<std::size_t>(cs->order));
    for (Elem i = 0; i < cs->order; ++i) labels[static_cast<std::size_t>(i)] = labeler(cs->decode(i));
    return Group::create({.n = cs->order,
                          .rule = std::move(mul),
                          .gens = std::move(gens),
                          .labels = std::move(labels),
                          .name = std::move(name),
                          .checks = checks});
}

inline std::string power_label(const std::string& base, Elem e) {
    if (e == 0) return "1";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

inline std::string rs_label(Elem i, Elem j) {
    std::string r = power_label("r", i);
    if (j == 0) return r;
    std::string s = power_label("s", j);
    return i == 0 ? s : r + " " + s;
}

inline Group make_cyclic(long long p, long long k) {
    if (!is_prime(p) || k < 1) throw group_error("cyclic family needs a prime p and k >= 1");
    long long n = ipow(p, k);
    if (n > kOrderCap) throw group_error("family order exceeds the engine cap");
    Elem nn = static_cast<Elem>(n);
    return make_coordinate_group(
        {nn}, "C" + std::to_string(n),
        [nn](const std::vector<Elem>& a, const std::vector<Elem>& b) {
            return std::vector<Elem>{static_cast<Elem>((a[0] + b[0]) % nn)};
        },
        [](const std::vector<Elem>& c) { return power_label("x", c[0]); },
        {{1}});
}

inline Group make_elementary(long long p, long long k) {
    if (!is_prime(p) || k < 1) throw group_error("elementary_abelian needs a prime p and k >= 1");
    std::vector<Elem> radix(static_cast<std::size_t>(k), static_cast<Elem>(p));
    std::vector<std::vector<Elem>> gens;
    for (long long i = 0; i < k; ++i) {
        std::vector<Elem> g(static_cast<std::size_t>(k), 0);
        g[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(g));
    }
    Elem pe = static_cast<Elem>(p);
    return make_coordinate_group(
        std::move(radix), "C" + std::to_string(p) + "^" + std::to_string(k),
        [pe](const std::vector<Elem>& a, const std::vector<Elem>& b) {
            std::vector<Elem> c(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) c[i] = static_cast<Elem>((a[i] + b[i]) % pe);
            return c;
        },
        [](const std::vector<Elem>& c) {
            std::string s = "(";
            for (std::size_t i = 0; i < c.size(); ++i)
                s += (i ? "," : "") + std::to_string(c[i]);
            return s + ")";
        },
        std::move(gens));
}

// r^i s^j normal forms for the order-2^m families with a cyclic index-2
// subgroup. twist = action of s on r; half = |<r>|.
//   dihedral:     s r s^{-1} = r^{-1}
//   semidihedral: s r s^{-1} = r^{2^{m-2}-1}
//   modular:      s r s^{-1} = r^{p^{m-2}+1}   (odd p or p = 2)
//   quaternion:   dihedral twist plus s^2 = r^{2^{m-2}}
enum class TwoGenKind { dihedral, quaternion, semidihedral, modular };

inline Group make_two_generator(TwoGenKind kind, long long p, long long m, std::string name,
                                Checks checks = Checks::standard, bool flip_twist = false) {
    long long order = ipow(p, m);
    if (order > kOrderCap) throw group_error("family order exceeds the engine cap");
    const Elem half = static_cast<Elem>(ipow(p, m - 1));
    const Elem top = static_cast<Elem>(p);

    long long twist = 0;  // r -> r^twist under conjugation by s
    switch (kind) {
        case TwoGenKind::dihedral:
        case TwoGenKind::quaternion: twist = half - 1; break;
        case TwoGenKind::semidihedral: twist = ipow(2, m - 2) - 1; break;
        case TwoGenKind::modular: twist = ipow(p, m - 2) + 1; break;
    }
    const bool square_into_r = (kind == TwoGenKind::quaternion);
    const Elem s_square = square_into_r ? static_cast<Elem>(ipow(2, m - 2)) : 0;

    // precomputed twist^j mod half for j < p
    std::vector<long long> tw(static_cast<std::size_t>(p), 1);
    for (long long j = 1; j < p; ++j) tw[static_cast<std::size_t>(j)] = (tw[j - 1] * twist) % half;
    // fault injection: applying the twist at the wrong exponent destroys
    // associativity, which is exactly what the mutant run wants to detect
    if (flip_twist) std::reverse(tw.begin(), tw.end());

    return make_coordinate_group(
        {half, top}, std::move(name),
        [half, top, tw, square_into_r, s_square](const std::vector<Elem>& a,
                                                 const std::vector<Elem>& b) {
            Elem i = static_cast<Elem>((a[0] + b[0] * tw[static_cast<std::size_t>(a[1])]) % half);
            Elem j = a[1] + b[1];
            if (square_into_r && j >= top) {
                j -= top;
                i = static_cast<Elem>((i + s_square) % half);
            } else {
                j %= top;
            }
            return std::vector<Elem>{i, j};
        },
        [](const std::vector<Elem>& c) { return rs_label(c[0], c[1]); },
        {{1, 0}, {0, 1}}, checks);
}

inline Group make_heisenberg(long long p) {
    if (!is_prime(p) || p < 3) throw group_error("heisenberg needs an odd prime");
    Elem pe = static_cast<Elem>(p);
    return make_coordinate_group(
        {pe, pe, pe}, "Heis" + std::to_string(p),
        [pe](const std::vector<Elem>& a, const std::vector<Elem>& b) {
            return std::vector<Elem>{static_cast<Elem>((a[0] + b[0]) % pe),
                                     static_cast<Elem>((a[1] + b[1]) % pe),
                                     static_cast<Elem>((a[2] + b[2] + a[0] * b[1]) % pe)};
        },
        [](const std::vector<Elem>& c) {
            return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                   std::to_string(c[2]) + ")";
        },
        {{1, 0, 0}, {0, 1, 0}});
}

inline Group make_wreath(long long p, Checks checks = Checks::standard) {
    if (!is_prime(p)) throw group_error("wreath_cpcp needs a prime");
    long long order = ipow(p, p + 1);
    if (order > kOrderCap) throw group_error("wreath order exceeds the engine cap");
    const Elem pe = static_cast<Elem>(p);
    std::vector<Elem> radix(static_cast<std::size_t>(p + 1), pe);
    std::vector<Elem> base(static_cast<std::size_t>(p + 1), 0);
    base[0] = 1;
    std::vector<Elem> shift(static_cast<std::size_t>(p + 1), 0);
    shift[static_cast<std::size_t>(p)] = 1;
    return make_coordinate_group(
        std::move(radix), "W" + std::to_string(p),
        // (v, s)(w, t) = (v + s.w, s + t), where (s.w)_i = w_{i-s mod p}
        [pe](const std::vector<Elem>& a, const std::vector<Elem>& b) {
            const std::size_t p2 = static_cast<std::size_t>(pe);
            std::vector<Elem> c(p2 + 1);
            Elem s = a[p2];
            for (std::size_t i = 0; i < p2; ++i) {
                std::size_t src = (i + p2 - static_cast<std::size_t>(s)) % p2;
                c[i] = static_cast<Elem>((a[i] + b[src]) % pe);
            }
            c[p2] = static_cast<Elem>((s + b[p2]) % pe);
            return c;
        },
        [pe](const std::vector<Elem>& c) {
            const std::size_t p2 = static_cast<std::size_t>(pe);
            std::string s = "(";
            for (std::size_t i = 0; i < p2; ++i) s += (i ? "," : "") + std::to_string(c[i]);
            s += "|";
            s += power_label("s", c[p2]);
            return s + ")";
        },
        {base, shift}, checks);
}

inline Group make_wreath_quotient(long long p, long long k) {
    if (!is_prime(p) || p < 3) throw group_error("wreath_quotient needs an odd prime");
    if (k < 3 || k > p) throw group_error("wreath_quotient needs 3 <= k <= p");
    Group w = make_wreath(p);
    Series lcs = lower_central_series(w);
    // K_k is the (k-1)-th term; the series of this group reaches it
    if (static_cast<std::size_t>(k - 1) >= lcs.terms.size())
        throw group_error("wreath_quotient: series too short");
    Quotient q = quotient_group(w, lcs.terms[static_cast<std::size_t>(k - 1)]);
    const Group& base = q.group;
    // rebuild under the catalogue name, keeping coset labels
    std::vector<std::string> labels(static_cast<std::size_t>(base.order()));
    for (Elem i = 0; i < base.order(); ++i) labels[static_cast<std::size_t>(i)] = base.label(i);
    Group src = base;
    return Group::create({.n = base.order(),
                          .rule = [src](Elem a, Elem b) { return src.mul(a, b); },
                          .gens = base.generators(),
                          .labels = std::move(labels),
                          .name = "W" + std::to_string(p) + "/K" + std::to_string(k)});
}

// A = Z[z]/(z-1)^{n-1} as a finite abelian group (via the Smith normal form
// of multiplication by (z-1)^{n-1} on the ring of integers of Q(z), z a
// primitive p-th root of unity), with z acting by multiplication. The
// semidirect product A x <z> has order p^n. For p = 2 this reduces to the
// dihedral action of -1 on Z/2^{n-1}.
inline Group make_cyclotomic(long long p, long long n, Checks checks = Checks::standard) {
    if (!is_prime(p)) throw group_error("cyclotomic_maxclass needs a prime");
    if (n < 3) throw group_error("cyclotomic_maxclass needs n >= 3");
    long long order = ipow(p, n);
    if (order > kOrderCap) throw group_error("family order exceeds the engine cap");

    const int d = static_cast<int>(p) - 1;
    IntMat zmat(d, d);  // multiplication by z on basis 1, z, ..., z^{d-1}
    for (int j = 0; j + 1 < d; ++j) zmat.at(j + 1, j) = 1;
    for (int i = 0; i < d; ++i) zmat.at(i, d - 1) = -1;
    IntMat lam = zmat;
    for (int i = 0; i < d; ++i) lam.at(i, i) -= 1;  // z - 1
    IntMat L = IntMat::identity(d);
    for (long long e = 0; e < n - 1; ++e) L = lam * L;

    SmithResult snf = smith_normal_form(L);

    std::vector<int> keep;      // coordinates with invariant factor > 1
    std::vector<Elem> radix;
    for (int i = 0; i < d; ++i) {
        long long di = snf.d.at(i, i);
        if (di > 1) {
            keep.push_back(i);
            radix.push_back(static_cast<Elem>(di));
        }
    }
    radix.push_back(static_cast<Elem>(p));  // the acting cyclic factor

    // action of z^j on the kept coordinates, entries reduced mod the factors
    IntMat b = snf.u * zmat * snf.uinv;
    auto reduce = [&](IntMat m) {
        for (int i = 0; i < d; ++i) {
            long long di = snf.d.at(i, i);
            if (di <= 0) continue;
            for (int j = 0; j < d; ++j) {
                long long v = m.at(i, j) % di;
                if (v < 0) v += di;
                m.at(i, j) = v;
            }
        }
        return m;
    };
    std::vector<IntMat> zpow;
    zpow.push_back(reduce(IntMat::identity(d)));
    for (long long j = 1; j < p; ++j) zpow.push_back(reduce(b * zpow.back()));

    const std::size_t na = keep.size();
    auto act = [zpow, keep, na, d](Elem j, const std::vector<Elem>& c) {
        const IntMat& m = zpow[static_cast<std::size_t>(j)];
        std::vector<long long> full(static_cast<std::size_t>(d), 0);
        for (std::size_t i = 0; i < na; ++i) full[static_cast<std::size_t>(keep[i])] = c[i];
        std::vector<Elem> out(na);
        for (std::size_t i = 0; i < na; ++i) {
            long long acc = 0;
            for (int k = 0; k < d; ++k) acc += m.at(keep[i], k) * full[static_cast<std::size_t>(k)];
            out[i] = static_cast<Elem>(acc);
        }
        return out;
    };

    std::vector<Elem> gen_a(na + 1, 0);  // image of 1 in A
    for (std::size_t i = 0; i < na; ++i) {
        long long v = snf.u.at(keep[i], 0) % radix[i];
        if (v < 0) v += radix[i];
        gen_a[i] = static_cast<Elem>(v);
    }
    std::vector<Elem> gen_z(na + 1, 0);
    gen_z[na] = 1;

    const Elem pe = static_cast<Elem>(p);
    std::vector<Elem> rad = radix;
    return make_coordinate_group(
        std::move(radix), "Cyc" + std::to_string(p) + "_" + std::to_string(n),
        [act, rad, pe, na](const std::vector<Elem>& x, const std::vector<Elem>& y) {
            std::vector<Elem> yc(y.begin(), y.begin() + static_cast<long>(na));
            std::vector<Elem> moved = act(x[na], yc);
            std::vector<Elem> out(na + 1);
            for (std::size_t i = 0; i < na; ++i)
                out[i] = static_cast<Elem>((x[i] + moved[i]) % rad[i]);
            out[na] = static_cast<Elem>((x[na] + y[na]) % pe);
            return out;
        },
        [na](const std::vector<Elem>& c) {
            std::string s = "(";
            for (std::size_t i = 0; i < na; ++i) s += (i ? "," : "") + std::to_string(c[i]);
            s += "|";
            s += power_label("z", c[na]);
            return s + ")";
        },
        {gen_a, gen_z}, checks);
}

inline Group make_modular(long long p, long long m, const std::string& name_override = "") {
    if (!is_prime(p) || m < 3) throw group_error("modular_pgroup needs a prime and m >= 3");
    if (p == 2 && m < 4) throw group_error("modular_pgroup with p = 2 needs m >= 4");
    std::string nm = name_override.empty() ? "M" + std::to_string(ipow(p, m)) : name_override;
    return make_two_generator(TwoGenKind::modular, p, m, std::move(nm));
}

}  // namespace detail

Group construct(const FamilyDescriptor& desc);

namespace detail {

inline Group construct_direct_product(const FamilyDescriptor& d) {
    long long p = require_param(d, "p");
    if (!is_prime(p)) throw group_error("direct_product needs a prime p");
    std::vector<Group> factors;
    long long base = param(d, "base", 0);
    if (base == 1)
        factors.push_back(p == 2 ? make_two_generator(TwoGenKind::dihedral, 2, 3, "D8")
                                 : make_heisenberg(p));
    else if (base == 2)
        factors.push_back(p == 2 ? make_two_generator(TwoGenKind::quaternion, 2, 3, "Q8")
                                 : make_modular(p, 3));
    else if (base != 0)
        throw group_error("direct_product: base must be 0, 1 or 2");
    for (int i = 1; i <= 9; ++i) {
        auto it = d.params.find("a" + std::to_string(i));
        if (it == d.params.end()) break;
        factors.push_back(make_cyclic(p, it->second));
    }
    if (factors.empty()) throw group_error("direct_product needs at least one factor");
    Group g = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i]);
    return g;
}

}  // namespace detail

inline Group construct(const FamilyDescriptor& desc) {
    using namespace detail;
    switch (desc.name) {
        case Family::cyclic:
            return make_cyclic(require_param(desc, "p"), param(desc, "m", param(desc, "k", 1)));
        case Family::elementary_abelian:
            return make_elementary(require_param(desc, "p"), require_param(desc, "k"));
        case Family::dihedral: {
            long long m = require_param(desc, "m");
            if (param(desc, "p", 2) != 2 || m < 3)
                throw group_error("dihedral needs p = 2 and m >= 3");
            return make_two_generator(TwoGenKind::dihedral, 2, m, "D" + std::to_string(ipow(2, m)));
        }
        case Family::quaternion: {
            long long m = require_param(desc, "m");
            if (param(desc, "p", 2) != 2 || m < 3)
                throw group_error("quaternion needs p = 2 and m >= 3");
            return make_two_generator(TwoGenKind::quaternion, 2, m,
                                      "Q" + std::to_string(ipow(2, m)));
        }
        case Family::semidihedral: {
            long long m = require_param(desc, "m");
            if (param(desc, "p", 2) != 2 || m < 4)
                throw group_error("semidihedral needs p = 2 and m >= 4");
            return make_two_generator(TwoGenKind::semidihedral, 2, m,
                                      "SD" + std::to_string(ipow(2, m)));
        }
        case Family::modular_pgroup: {
            long long p = require_param(desc, "p");
            long long m = require_param(desc, "m");
            if (m < 4) throw group_error("modular_pgroup needs m >= 4 (see extraspecial_exp_p2)");
            return make_modular(p, m);
        }
        case Family::heisenberg: return make_heisenberg(require_param(desc, "p"));
        case Family::extraspecial_exp_p2: {
            long long p = require_param(desc, "p");
            if (p == 2) throw group_error("extraspecial_exp_p2 needs an odd prime");
            return make_modular(p, 3);
        }
        case Family::wreath_cpcp: return make_wreath(require_param(desc, "p"));
        case Family::wreath_quotient:
            return make_wreath_quotient(require_param(desc, "p"), require_param(desc, "k"));
        case Family::cyclotomic_maxclass:
            return make_cyclotomic(require_param(desc, "p"), require_param(desc, "n"));
        case Family::direct_product: return detail::construct_direct_product(desc);
    }
    throw group_error("unknown family");
}

// ---------------------------------------------------------------------------
// Census: the deterministic corpus the claim suite sweeps, including designed
// negatives (abelian types, class-2 groups, groups with direct factors).
// ---------------------------------------------------------------------------

inline std::vector<Group> census(Elem p, Elem max_order, const std::string& mutant = "") {
    using namespace detail;
    if (!is_prime(p)) throw group_error("census needs a prime");
    const bool flip_dihedral = (mutant == "dihedral-flip");
    if (!mutant.empty() && !flip_dihedral) throw group_error("unknown mutant: " + mutant);

    std::vector<Group> out;
    auto add = [&](Group g) { out.push_back(std::move(g)); };

    for (long long k = 1;; ++k) {
        long long order = ipow(p, k);
        if (order > max_order || order > kOrderCap) break;

        add(make_cyclic(p, k));
        if (k >= 2) add(make_elementary(p, k));
        if (k >= 3) add(direct_product(make_cyclic(p, k - 1), make_cyclic(p, 1)));
        if (k >= 4)
            add(direct_product(direct_product(make_cyclic(p, k - 2), make_cyclic(p, 1)),
                               make_cyclic(p, 1)));

        if (p == 2 && k >= 3) {
            if (flip_dihedral)
                add(make_two_generator(TwoGenKind::dihedral, 2, k, "D" + std::to_string(order),
                                       Checks::none, true));
            else
                add(make_two_generator(TwoGenKind::dihedral, 2, k, "D" + std::to_string(order)));
            add(make_two_generator(TwoGenKind::quaternion, 2, k, "Q" + std::to_string(order)));
        }
        if (p == 2 && k >= 4)
            add(make_two_generator(TwoGenKind::semidihedral, 2, k, "SD" + std::to_string(order)));
        if (k >= 4) add(make_modular(p, k));
        if (p >= 3 && k == 3) {
            add(make_heisenberg(p));
            add(make_modular(p, 3));
        }
        if (k == p + 1) add(make_wreath(p));
        if (p >= 3 && p <= 5 && k >= 3 && k <= p) add(make_wreath_quotient(p, k));
        if (k >= 3) add(make_cyclotomic(p, k));

        if (p == 2 && k == 4) {
            add(direct_product(make_two_generator(TwoGenKind::dihedral, 2, 3, "D8"),
                               make_cyclic(2, 1)));
            add(direct_product(make_two_generator(TwoGenKind::quaternion, 2, 3, "Q8"),
                               make_cyclic(2, 1)));
        }
        if (p == 2 && k == 5)
            add(direct_product(direct_product(make_two_generator(TwoGenKind::dihedral, 2, 3, "D8"),
                                              make_cyclic(2, 1)),
                               make_cyclic(2, 1)));
        if (p >= 3 && k == 4) {
            add(direct_product(make_heisenberg(p), make_cyclic(p, 1)));
            add(direct_product(make_modular(p, 3), make_cyclic(p, 1)));
        }
    }
    return out;
}

struct FamilyDoc {
    std::string name;
    std::string params;
    std::string notes;
};

inline std::vector<FamilyDoc> catalogue_listing() {
    return {
        {"cyclic", "p, m", "C_{p^m}"},
        {"elementary_abelian", "p, k", "(C_p)^k"},
        {"dihedral", "m", "order 2^m, m >= 3"},
        {"quaternion", "m", "order 2^m, m >= 3"},
        {"semidihedral", "m", "order 2^m, m >= 4"},
        {"modular_pgroup", "p, m", "cyclic C_{p^{m-1}} twisted by p^{m-2}+1, m >= 4, class 2"},
        {"heisenberg", "p (odd)", "unitriangular 3x3 over F_p, order p^3, exponent p"},
        {"extraspecial_exp_p2", "p (odd)", "order p^3, exponent p^2"},
        {"wreath_cpcp", "p", "C_p wr C_p, order p^{p+1}, class p"},
        {"wreath_quotient", "p (odd, <= 5), k in [3, p]", "C_p wr C_p modulo the k-th lower central term, order p^k"},
        {"cyclotomic_maxclass", "p, n >= 3", "Z[z]/(z-1)^{n-1} split by <z>, order p^n, class n-1"},
        {"direct_product", "p, base in {0,1,2}, a1..a9",
         "optional nonabelian p^3 base (1: exponent p, 2: exponent p^2) times cyclic factors C_{p^{ai}}"},
    };
}

}  // namespace pgroup
