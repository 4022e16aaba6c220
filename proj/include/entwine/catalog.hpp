#pragma once

// Named worked examples. Each entry is a document whose root object has the
// entry's name; dependencies appear under their own catalog names. Entries
// are verified when built.

#include "entwine/document.hpp"

#include <functional>

namespace entwine {

struct CatalogEntry {
    std::string name;
    std::string description;
    Document document;
};

namespace catalog {

// ---------------------------------------------------------------------------
// Structures

inline Structure make_structure(Kind kind, Field f, std::vector<std::string> labels, const std::vector<Triple> &mul,
                                const std::vector<Scalar> &unit, const std::vector<Triple> &comul,
                                const std::vector<Scalar> &counit)
{
    Structure s;
    s.kind = kind;
    std::size_t n = labels.size();
    s.labels = std::move(labels);
    if (kind != Kind::coalgebra)
        s.algebra = make_algebra(f, n, mul, unit);
    if (kind != Kind::algebra)
        s.coalgebra = make_coalgebra(f, n, comul, counit);
    if (kind == Kind::hopf) {
        s.antipode = compute_antipode(s);
        if (!s.antipode)
            throw consistency_error("catalog: Hopf entry without an antipode");
    }
    return s;
}

/// Group algebra of the cyclic group of order n; basis g^0 .. g^{n-1}.
inline Structure cyclic_group_algebra(Field f, std::size_t n)
{
    std::vector<std::string> labels;
    std::vector<Triple> mul, comul;
    std::vector<Scalar> unit(n, Scalar(0)), counit(n, Scalar(1));
    unit[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
        comul.push_back({i, i, i, 1});
        for (std::size_t j = 0; j < n; ++j)
            mul.push_back({i, j, (i + j) % n, 1});
    }
    return make_structure(Kind::hopf, f, labels, mul, unit, comul, counit);
}

/// 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x.
inline Structure sweedler4()
{
    const Field f = Field::rationals();
    // Basis element g^a x^b has index a + 2b.
    std::vector<Triple> mul;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    if (b + d >= 2)
                        continue;
                    // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
                    long sign = (b * c) % 2 ? -1 : 1;
                    mul.push_back({a + 2 * b, c + 2 * d, (a + c) % 2 + 2 * (b + d), sign});
                }
    std::vector<Triple> comul = {
        {0, 0, 0, 1}, {1, 1, 1, 1},
        {2, 2, 0, 1}, {2, 1, 2, 1},  // Delta(x) = x (x) 1 + g (x) x
        {3, 3, 1, 1}, {3, 0, 3, 1},  // Delta(gx) = gx (x) g + 1 (x) gx
    };
    return make_structure(Kind::hopf, f, {"1", "g", "x", "gx"}, mul, {1, 0, 0, 0}, comul, {1, 1, 0, 0});
}

/// Monoid bialgebra of {1, z} with z^2 = z; z is grouplike and not
/// invertible, so there is no antipode.
inline Structure idempotent_monoid()
{
    return make_structure(Kind::bialgebra, Field::rationals(), {"1", "z"},
                          {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}}, {1, 0},
                          {{0, 0, 0, 1}, {1, 1, 1, 1}}, {1, 1});
}

inline Structure trivial()
{
    return make_structure(Kind::hopf, Field::rationals(), {"1"}, {{0, 0, 0, 1}}, {1}, {{0, 0, 0, 1}}, {1});
}

inline Structure dual_of(const Structure &s)
{
    Structure d = dualize_structure(s);
    if (d.kind == Kind::hopf)
        d.antipode = compute_antipode(d);
    return d;
}

// ---------------------------------------------------------------------------
// Doi-Koppinen ingredients

/// (H, H, H): H coacts on itself by Delta and acts on itself by mul.
inline DKObject hopf_module_dk(const std::string &h, const Structure &s)
{
    return {h, h, h, Coaction{Side::right, s.coalg().comul}, Action{Side::right, s.alg().mul}};
}

/// (k, A, C) with trivial coaction and action of the one-dimensional
/// bialgebra; its modules are the Long dimodules.
inline DKObject long_dk(const std::string &k, const std::string &a, std::size_t na, const std::string &c,
                        std::size_t nc)
{
    const Field f = Field::rationals();
    return {k, a, c, Coaction{Side::right, eye(f, na)}, Action{Side::right, eye(f, nc)}};
}

/// H = QC_3, A = functions on C_3 with delta_x . g = delta_{g^-1 x},
/// C = functions on C_3 as a coalgebra with delta_x -> delta_x (x) x.
inline AltDKObject schauenburg_c3(const std::string &h, const std::string &fun)
{
    const Field f = Field::rationals();
    const std::size_t n = 3;
    Action act{Side::right, Matrix(f, n, n * n)};
    Coaction co{Side::right, Matrix(f, n * n, n)};
    for (std::size_t x = 0; x < n; ++x) {
        co.map.set(x * n + x, x, Scalar(1));
        for (std::size_t g = 0; g < n; ++g)
            act.map.set((x + n - g) % n, x * n + g, Scalar(1));
    }
    return {h, fun, fun, act, co};
}

// ---------------------------------------------------------------------------
// Entry table

struct Builder {
    Document doc;

    Builder(Field f) { doc.field = f; }

    void put(const std::string &name, Object o) { doc.objects.insert_or_assign(name, std::move(o)); }

    const Structure &structure(const std::string &name) const { return doc.structure(name); }
};

using Recipe = std::function<void(Builder &)>;

struct Recipe_ {
    std::string name;
    std::string description;
    Field field;
    Recipe build;
};

inline void add_structure(Builder &b, const std::string &name)
{
    if (b.doc.has(name))
        return;
    Structure s;
    if (name == "trivial")
        s = trivial();
    else if (name == "qc2")
        s = cyclic_group_algebra(Field::rationals(), 2);
    else if (name == "qc3")
        s = cyclic_group_algebra(Field::rationals(), 3);
    else if (name == "f5c5")
        s = cyclic_group_algebra(Field::prime(5), 5);
    else if (name == "sweedler4")
        s = sweedler4();
    else if (name == "qm2")
        s = idempotent_monoid();
    else if (name.size() > 5 && name.ends_with("_dual")) {
        std::string base = name.substr(0, name.size() - 5);
        add_structure(b, base);
        s = dual_of(b.structure(base));
    } else
        throw input_error("catalog: unknown structure '" + name + "'");
    b.put(name, StructureObject{std::move(s)});
}

inline void add_flip(Builder &b, const std::string &name, const std::string &a, const std::string &c)
{
    add_structure(b, a);
    add_structure(b, c);
    b.put(name, EntwiningObject{a, c, flip_entwining(b.doc.algebra(a), b.doc.coalgebra(c)).psi});
}

inline void add_dk_hopf(Builder &b, const std::string &name, const std::string &h)
{
    add_structure(b, h);
    b.put(name, hopf_module_dk(h, b.structure(h)));
}

inline void add_hopfmod_entwining(Builder &b, const std::string &name, const std::string &h)
{
    add_structure(b, h);
    DKObject dk = hopf_module_dk(h, b.structure(h));
    DKStructure s{b.structure(h), b.doc.algebra(h), dk.algebra_coaction, b.doc.coalgebra(h), dk.coalgebra_action};
    b.put(name, EntwiningObject{h, h, dk_entwining(s).psi});
}

inline void add_schauenburg_entwining(Builder &b, const std::string &name)
{
    add_structure(b, "qc3");
    add_structure(b, "qc3_dual");
    AltDKObject alt = schauenburg_c3("qc3", "qc3_dual");
    AltDKStructure s{b.structure("qc3"), b.doc.algebra("qc3_dual"), alt.algebra_action, b.doc.coalgebra("qc3_dual"),
                     alt.coalgebra_coaction};
    b.put(name, EntwiningObject{"qc3_dual", "qc3_dual", alt_dk_entwining(s).psi});
}

/// H as a module over its own Hopf-module entwining: action mul, coaction Delta.
inline void add_hopf_module(Builder &b, const std::string &name, const std::string &h)
{
    std::string ent = "hopfmod_" + h;
    add_hopfmod_entwining(b, ent, h);
    const Structure &s = b.structure(h);
    ModuleObject m;
    m.entwining = ent;
    m.module.dim = s.dim();
    m.module.action = Action{Side::right, s.alg().mul};
    m.module.coaction = Coaction{Side::right, s.coalg().comul};
    b.put(name, std::move(m));
}

inline void add_free_module(Builder &b, const std::string &name, const std::string &ent)
{
    Entwining e = b.doc.entwining(ent);
    ModulePresentation free = free_entwined_module(e);
    b.put(name, ModuleObject{ent, "", "", free});
}

inline const std::vector<Recipe_> &recipes()
{
    static const std::vector<Recipe_> table = [] {
        const Field Q = Field::rationals(), F5 = Field::prime(5);
        std::vector<Recipe_> t;
        auto structure = [&](std::string name, std::string desc, Field f) {
            t.push_back({name, desc, f, [name](Builder &b) { add_structure(b, name); }});
        };
        structure("trivial", "one-dimensional bialgebra k", Q);
        structure("qc2", "group algebra of C2 over Q", Q);
        structure("qc3", "group algebra of C3 over Q", Q);
        structure("f5c5", "group algebra of C5 over F5", F5);
        structure("qc2_dual", "functions on C2 (dual of qc2)", Q);
        structure("qc3_dual", "functions on C3 (dual of qc3)", Q);
        structure("f5c5_dual", "functions on C5 over F5 (dual of f5c5)", F5);
        structure("sweedler4", "Sweedler's four-dimensional Hopf algebra over Q", Q);
        structure("sweedler4_dual", "dual of Sweedler's Hopf algebra", Q);
        structure("qm2", "monoid bialgebra of {1, z}, z^2 = z (no antipode)", Q);

        for (auto [h, f] : std::vector<std::pair<std::string, Field>>{
                 {"trivial", Q}, {"qc2", Q}, {"qc3", Q}, {"f5c5", F5}, {"sweedler4", Q}, {"qm2", Q}}) {
            std::string name = "flip_" + h;
            t.push_back({name, "flip entwining of " + h + " with itself", f,
                         [name, h](Builder &b) { add_flip(b, name, h, h); }});
        }
        t.push_back({"flip_qc2_qc3", "flip entwining of the algebra qc2 with the coalgebra qc3", Q,
                     [](Builder &b) { add_flip(b, "flip_qc2_qc3", "qc2", "qc3"); }});
        for (auto [h, f] : std::vector<std::pair<std::string, Field>>{
                 {"qc2", Q}, {"qc3", Q}, {"f5c5", F5}, {"sweedler4", Q}}) {
            std::string ent = "hopfmod_" + h, dk = "dk_hopf_" + h, mod = "hopfmodule_" + h, free = "free_" + ent;
            t.push_back({ent, "Hopf-module entwining psi(c (x) a) = a_1 (x) c a_2 on " + h, f,
                         [ent, h](Builder &b) { add_hopfmod_entwining(b, ent, h); }});
            t.push_back({dk, "Doi-Koppinen structure (H, H, H) for H = " + h, f,
                         [dk, h](Builder &b) { add_dk_hopf(b, dk, h); }});
            t.push_back({mod, h + " as a Hopf module over itself", f,
                         [mod, h](Builder &b) { add_hopf_module(b, mod, h); }});
            t.push_back({free, "free entwined module A (x) C over " + ent, f, [free, ent, h](Builder &b) {
                             add_hopfmod_entwining(b, ent, h);
                             add_free_module(b, free, ent);
                         }});
        }
        t.push_back({"free_flip_qc2_qc3", "free entwined module over flip_qc2_qc3", Q, [](Builder &b) {
                         add_flip(b, "flip_qc2_qc3", "qc2", "qc3");
                         add_free_module(b, "free_flip_qc2_qc3", "flip_qc2_qc3");
                     }});
        t.push_back({"dk_long_qc2_qc3", "Doi-Koppinen structure (k, qc2, qc3) whose modules are Long dimodules", Q,
                     [](Builder &b) {
                         for (auto s : {"trivial", "qc2", "qc3"})
                             add_structure(b, s);
                         b.put("dk_long_qc2_qc3", long_dk("trivial", "qc2", 2, "qc3", 3));
                     }});
        t.push_back({"altdk_schauenburg_qc3", "alternative Doi-Koppinen structure (QC3, functions, functions)", Q,
                     [](Builder &b) {
                         add_structure(b, "qc3");
                         add_structure(b, "qc3_dual");
                         b.put("altdk_schauenburg_qc3", schauenburg_c3("qc3", "qc3_dual"));
                     }});
        t.push_back({"schauenburg_qc3", "entwining psi(d_x (x) d_y) = d_{x^-1 y} (x) d_x of the alternative structure",
                     Q, [](Builder &b) { add_schauenburg_entwining(b, "schauenburg_qc3"); }});
        for (auto h : {"qc2", "sweedler4", "qm2"}) {
            std::string name = std::string("cleft_") + h;
            t.push_back({name, std::string("extension ") + h + " over itself with integral id", Q,
                         [name, h](Builder &b) {
                             add_structure(b, h);
                             const Structure &s = b.structure(h);
                             b.put(name, ExtensionObject{h, h, Coaction{Side::right, s.coalg().comul},
                                                         eye(s.field(), s.dim())});
                         }});
        }
        for (auto h : {"qc2", "sweedler4"}) {
            std::string name = std::string("cocleft_") + h;
            t.push_back({name, std::string("coextension ") + h + " over itself with cointegral id", Q,
                         [name, h](Builder &b) {
                             add_structure(b, h);
                             const Structure &s = b.structure(h);
                             b.put(name, CoextensionObject{h, h, Action{Side::right, s.alg().mul},
                                                           eye(s.field(), s.dim())});
                         }});
        }
        std::sort(t.begin(), t.end(), [](auto &x, auto &y) { return x.name < y.name; });
        return t;
    }();
    return table;
}

} // namespace catalog

inline std::vector<std::string> catalog_names()
{
    std::vector<std::string> out;
    for (auto &r : catalog::recipes())
        out.push_back(r.name);
    return out;
}

/// Builds and verifies an entry. Throws input_error for unknown names.
inline CatalogEntry catalog_get(const std::string &name)
{
    for (auto &r : catalog::recipes()) {
        if (r.name != name)
            continue;
        catalog::Builder b(r.field);
        r.build(b);
        for (auto &[obj, o] : b.doc.objects) {
            Report rep = check_object(b.doc, obj);
            if (!rep)
                throw consistency_error("catalog entry " + name + ": " + obj + " fails verification: " + rep.message);
        }
        return {r.name, r.description, std::move(b.doc)};
    }
    throw input_error("unknown catalog entry '" + name + "'");
}

/// Catalog names whose root object has the given type.
inline std::vector<std::string> catalog_names_of(const std::string &type)
{
    std::vector<std::string> out;
    for (auto &n : catalog_names()) {
        CatalogEntry e = catalog_get(n);
        if (type_name(e.document.get(n)) == type)
            out.push_back(n);
    }
    return out;
}

} // namespace entwine
