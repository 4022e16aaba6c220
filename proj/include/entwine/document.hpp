#pragma once

// Document format: a JSON object with keys "version" (1), "field" ("Q" or
// {"p": n}) and "objects" (name -> object). Rational scalars are canonical
// strings "a" or "a/b"; prime-field scalars are integers in [0, p). Sparse
// constants list input indices, then output indices, then the coefficient:
//
//   mul          [i, j, k, c]         e_i e_j gains c e_k
//   comul        [i, j, k, c]         Delta(e_i) gains c e_j (x) e_k
//   action       [m, a, target, c]    m_m . a_a (or a_a . m_m) gains c m_target
//   coaction     [m, target, k, c]    rho(m_m) gains c m_target (x) c_k
//   psi          [c, a, a', c', x]    psi(c_c (x) a_a) gains x a_a' (x) c_c'
//   pairing      [a, c, x]            <a_a, c_c> = x
//   matrix       [j, i, x]            f(e_j) gains x e_i
//
// Emission is canonical: sorted keys, entries in index order, zeros omitted.

#include "entwine/doikoppinen.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <variant>

namespace entwine {

using json = nlohmann::json;

struct StructureObject {
    Structure structure;
};

struct PairingObject {
    std::string algebra, coalgebra;
    Matrix matrix;
};

struct EntwiningObject {
    std::string algebra, coalgebra;
    Matrix psi;
};

/// An entwined module names its entwining; a plain (co)module names its
/// algebra and/or coalgebra.
struct ModuleObject {
    std::string entwining, algebra, coalgebra;
    ModulePresentation module;
};

struct DKObject {
    std::string bialgebra, algebra, coalgebra;
    Coaction algebra_coaction;
    Action coalgebra_action;
};

struct AltDKObject {
    std::string bialgebra, algebra, coalgebra;
    Action algebra_action;
    Coaction coalgebra_coaction;
};

struct MorphismObject {
    std::string source, target;
    std::map<std::string, Matrix> maps;
};

struct ExtensionObject {
    std::string bialgebra, algebra;
    Coaction coaction;
    std::optional<Matrix> integral;
};

struct CoextensionObject {
    std::string bialgebra, coalgebra;
    Action action;
    std::optional<Matrix> cointegral;
};

using Object = std::variant<StructureObject, PairingObject, EntwiningObject, ModuleObject, DKObject, AltDKObject,
                            MorphismObject, ExtensionObject, CoextensionObject>;

inline const char *type_name(const Object &o)
{
    static const char *names[] = {"structure", "pairing",  "entwining", "module",     "dk",
                                  "alt_dk",    "morphism", "extension", "coextension"};
    return names[o.index()];
}

struct Document {
    Field field = Field::rationals();
    std::map<std::string, Object> objects;

    bool has(const std::string &name) const { return objects.count(name) != 0; }

    const Object &get(const std::string &name) const
    {
        auto it = objects.find(name);
        if (it == objects.end())
            throw input_error("no object named '" + name + "'");
        return it->second;
    }

    template <class T> const T &get_as(const std::string &name) const
    {
        const Object &o = get(name);
        if (auto *p = std::get_if<T>(&o))
            return *p;
        throw input_error("object '" + name + "' is a " + type_name(o) + ", not the expected type");
    }

    const Structure &structure(const std::string &name) const { return get_as<StructureObject>(name).structure; }
    const Algebra &algebra(const std::string &name) const { return structure(name).alg(); }
    const Coalgebra &coalgebra(const std::string &name) const { return structure(name).coalg(); }

    Entwining entwining(const std::string &name) const
    {
        auto &e = get_as<EntwiningObject>(name);
        return {algebra(e.algebra), coalgebra(e.coalgebra), e.psi};
    }

    Pairing pairing(const std::string &name) const
    {
        auto &p = get_as<PairingObject>(name);
        return {algebra(p.algebra), coalgebra(p.coalgebra), p.matrix};
    }

    DKStructure dk(const std::string &name) const
    {
        auto &d = get_as<DKObject>(name);
        return {structure(d.bialgebra), algebra(d.algebra), d.algebra_coaction, coalgebra(d.coalgebra),
                d.coalgebra_action};
    }

    AltDKStructure alt_dk(const std::string &name) const
    {
        auto &d = get_as<AltDKObject>(name);
        return {structure(d.bialgebra), algebra(d.algebra), d.algebra_action, coalgebra(d.coalgebra),
                d.coalgebra_coaction};
    }

    Extension extension(const std::string &name) const
    {
        auto &x = get_as<ExtensionObject>(name);
        return {structure(x.bialgebra), algebra(x.algebra), x.coaction};
    }

    /// Names that no other object refers to, in sorted order.
    std::vector<std::string> roots() const;
};

// ---------------------------------------------------------------------------
// References

inline std::vector<std::string> references(const Object &o)
{
    std::vector<std::string> out;
    auto add = [&](const std::string &s) {
        if (!s.empty())
            out.push_back(s);
    };
    std::visit(
        [&](auto &x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PairingObject> || std::is_same_v<T, EntwiningObject>) {
                add(x.algebra);
                add(x.coalgebra);
            } else if constexpr (std::is_same_v<T, ModuleObject>) {
                add(x.entwining);
                add(x.algebra);
                add(x.coalgebra);
            } else if constexpr (std::is_same_v<T, DKObject> || std::is_same_v<T, AltDKObject>) {
                add(x.bialgebra);
                add(x.algebra);
                add(x.coalgebra);
            } else if constexpr (std::is_same_v<T, MorphismObject>) {
                add(x.source);
                add(x.target);
            } else if constexpr (std::is_same_v<T, ExtensionObject>) {
                add(x.bialgebra);
                add(x.algebra);
            } else if constexpr (std::is_same_v<T, CoextensionObject>) {
                add(x.bialgebra);
                add(x.coalgebra);
            }
        },
        o);
    return out;
}

inline std::vector<std::string> Document::roots() const
{
    std::set<std::string> referenced;
    for (auto &[name, o] : objects)
        for (auto &r : references(o))
            referenced.insert(r);
    std::vector<std::string> out;
    for (auto &[name, o] : objects)
        if (!referenced.count(name))
            out.push_back(name);
    return out;
}

/// The algebra and coalgebra dimensions a module acts and coacts with.
inline std::pair<std::size_t, std::size_t> module_partner_dims(const Document &d, const ModuleObject &m)
{
    std::size_t na = 0, nc = 0;
    if (!m.entwining.empty()) {
        auto &e = d.get_as<EntwiningObject>(m.entwining);
        na = d.structure(e.algebra).dim();
        nc = d.structure(e.coalgebra).dim();
    }
    if (!m.algebra.empty())
        na = d.structure(m.algebra).dim();
    if (!m.coalgebra.empty())
        nc = d.structure(m.coalgebra).dim();
    return {na, nc};
}

inline std::optional<Entwining> module_entwining(const Document &d, const ModuleObject &m)
{
    if (m.entwining.empty())
        return std::nullopt;
    return d.entwining(m.entwining);
}

// ---------------------------------------------------------------------------
// Emission

namespace detail {

inline json scalar_json(Field f, const Scalar &s)
{
    if (f.is_rational())
        return f.format(s);
    return s.get_num().get_ui();
}

inline json structure_constants(const Matrix &m, std::size_t n, bool product)
{
    // product: column i*n+j, row k. coproduct: column i, row j*n+k.
    json out = json::array();
    const Field f = m.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar &v = product ? m(k, i * n + j) : m(j * n + k, i);
                if (v != 0)
                    out.push_back({i, j, k, scalar_json(f, v)});
            }
    return out;
}

inline json vector_json(const Matrix &v, bool row)
{
    json out = json::array();
    std::size_t n = row ? v.cols() : v.rows();
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(scalar_json(v.field(), row ? v(0, i) : v(i, 0)));
    return out;
}

inline json matrix_json(const Matrix &m)
{
    json entries = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0)
                entries.push_back({j, i, scalar_json(m.field(), m(i, j))});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline json action_json(const Action &a, std::size_t dim_m, std::size_t dim_a)
{
    json entries = json::array();
    for (std::size_t m = 0; m < dim_m; ++m)
        for (std::size_t x = 0; x < dim_a; ++x)
            for (std::size_t t = 0; t < dim_m; ++t) {
                std::size_t col = a.side == Side::right ? m * dim_a + x : x * dim_m + m;
                if (a.map(t, col) != 0)
                    entries.push_back({m, x, t, scalar_json(a.map.field(), a.map(t, col))});
            }
    return {{"side", to_string(a.side)}, {"entries", entries}};
}

inline json coaction_json(const Coaction &c, std::size_t dim_m, std::size_t dim_c)
{
    json entries = json::array();
    for (std::size_t m = 0; m < dim_m; ++m)
        for (std::size_t t = 0; t < dim_m; ++t)
            for (std::size_t k = 0; k < dim_c; ++k) {
                std::size_t row = c.side == Side::right ? t * dim_c + k : k * dim_m + t;
                if (c.map(row, m) != 0)
                    entries.push_back({m, t, k, scalar_json(c.map.field(), c.map(row, m))});
            }
    return {{"side", to_string(c.side)}, {"entries", entries}};
}

inline json structure_json(const Structure &s)
{
    json o = {{"type", "structure"}, {"kind", to_string(s.kind)}, {"dim", s.dim()}, {"labels", s.labels}};
    const std::size_t n = s.dim();
    if (s.algebra) {
        o["mul"] = structure_constants(s.algebra->mul, n, true);
        o["unit"] = vector_json(s.algebra->unit, false);
    }
    if (s.coalgebra) {
        o["comul"] = structure_constants(s.coalgebra->comul, n, false);
        o["counit"] = vector_json(s.coalgebra->counit, true);
    }
    if (s.antipode)
        o["antipode"] = matrix_json(*s.antipode);
    return o;
}

inline json psi_json(const Matrix &psi, std::size_t na, std::size_t nc)
{
    json entries = json::array();
    for (std::size_t c = 0; c < nc; ++c)
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t a2 = 0; a2 < na; ++a2)
                for (std::size_t c2 = 0; c2 < nc; ++c2) {
                    const Scalar &v = psi(a2 * nc + c2, c * na + a);
                    if (v != 0)
                        entries.push_back({c, a, a2, c2, scalar_json(psi.field(), v)});
                }
    return entries;
}

} // namespace detail

inline json object_json(const Document &d, const Object &o)
{
    using namespace detail;
    return std::visit(
        [&](auto &x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, StructureObject>) {
                return structure_json(x.structure);
            } else if constexpr (std::is_same_v<T, PairingObject>) {
                json entries = json::array();
                for (std::size_t a = 0; a < x.matrix.rows(); ++a)
                    for (std::size_t c = 0; c < x.matrix.cols(); ++c)
                        if (x.matrix(a, c) != 0)
                            entries.push_back({a, c, scalar_json(d.field, x.matrix(a, c))});
                return {{"type", "pairing"}, {"algebra", x.algebra}, {"coalgebra", x.coalgebra}, {"matrix", entries}};
            } else if constexpr (std::is_same_v<T, EntwiningObject>) {
                std::size_t na = d.structure(x.algebra).dim(), nc = d.structure(x.coalgebra).dim();
                return {{"type", "entwining"},
                        {"algebra", x.algebra},
                        {"coalgebra", x.coalgebra},
                        {"psi", psi_json(x.psi, na, nc)}};
            } else if constexpr (std::is_same_v<T, ModuleObject>) {
                auto [na, nc] = module_partner_dims(d, x);
                json o = {{"type", "module"}, {"dim", x.module.dim}};
                if (!x.entwining.empty())
                    o["entwining"] = x.entwining;
                if (!x.algebra.empty())
                    o["algebra"] = x.algebra;
                if (!x.coalgebra.empty())
                    o["coalgebra"] = x.coalgebra;
                if (x.module.action)
                    o["action"] = action_json(*x.module.action, x.module.dim, na);
                if (x.module.coaction)
                    o["coaction"] = coaction_json(*x.module.coaction, x.module.dim, nc);
                return o;
            } else if constexpr (std::is_same_v<T, DKObject>) {
                std::size_t nh = d.structure(x.bialgebra).dim(), na = d.structure(x.algebra).dim(),
                            nc = d.structure(x.coalgebra).dim();
                return {{"type", "dk"},
                        {"bialgebra", x.bialgebra},
                        {"algebra", x.algebra},
                        {"coalgebra", x.coalgebra},
                        {"algebra_coaction", coaction_json(x.algebra_coaction, na, nh)},
                        {"coalgebra_action", action_json(x.coalgebra_action, nc, nh)}};
            } else if constexpr (std::is_same_v<T, AltDKObject>) {
                std::size_t nh = d.structure(x.bialgebra).dim(), na = d.structure(x.algebra).dim(),
                            nc = d.structure(x.coalgebra).dim();
                return {{"type", "alt_dk"},
                        {"bialgebra", x.bialgebra},
                        {"algebra", x.algebra},
                        {"coalgebra", x.coalgebra},
                        {"algebra_action", action_json(x.algebra_action, na, nh)},
                        {"coalgebra_coaction", coaction_json(x.coalgebra_coaction, nc, nh)}};
            } else if constexpr (std::is_same_v<T, MorphismObject>) {
                json maps = json::object();
                for (auto &[k, m] : x.maps)
                    maps[k] = matrix_json(m);
                return {{"type", "morphism"}, {"source", x.source}, {"target", x.target}, {"maps", maps}};
            } else if constexpr (std::is_same_v<T, ExtensionObject>) {
                std::size_t nh = d.structure(x.bialgebra).dim(), nb = d.structure(x.algebra).dim();
                json o = {{"type", "extension"},
                          {"bialgebra", x.bialgebra},
                          {"algebra", x.algebra},
                          {"coaction", coaction_json(x.coaction, nb, nh)}};
                if (x.integral)
                    o["integral"] = matrix_json(*x.integral);
                return o;
            } else {
                std::size_t nh = d.structure(x.bialgebra).dim(), nd = d.structure(x.coalgebra).dim();
                json o = {{"type", "coextension"},
                          {"bialgebra", x.bialgebra},
                          {"coalgebra", x.coalgebra},
                          {"action", action_json(x.action, nd, nh)}};
                if (x.cointegral)
                    o["cointegral"] = matrix_json(*x.cointegral);
                return o;
            }
        },
        o);
}

inline json field_json(Field f)
{
    if (f.is_rational())
        return "Q";
    return json{{"p", f.modulus()}};
}

inline json document_json(const Document &d)
{
    json objects = json::object();
    for (auto &[name, o] : d.objects)
        objects[name] = object_json(d, o);
    return {{"version", 1}, {"field", field_json(d.field)}, {"objects", objects}};
}

namespace detail {

inline bool flat(const json &v)
{
    if (!v.is_array())
        return !v.is_object();
    for (auto &x : v)
        if (x.is_array() || x.is_object())
            return false;
    return true;
}

inline void pretty(const json &v, std::string &out, int indent)
{
    std::string pad(indent + 2, ' ');
    if (flat(v)) {
        // Flat arrays print as [1, 2, "x"].
        bool in_string = false, escaped = false;
        for (char c : v.dump()) {
            out += c;
            if (in_string) {
                escaped = !escaped && c == '\\';
                if (c == '"' && !escaped)
                    in_string = false;
            } else if (c == '"') {
                in_string = true;
            } else if (c == ',') {
                out += ' ';
            }
        }
        return;
    }
    bool obj = v.is_object();
    if (v.empty()) {
        out += obj ? "{}" : "[]";
        return;
    }
    out += obj ? "{\n" : "[\n";
    std::size_t k = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++k) {
        out += pad;
        if (obj)
            out += json(it.key()).dump() + ": ";
        pretty(*it, out, indent + 2);
        out += k + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + (obj ? "}" : "]");
}

} // namespace detail

/// Canonical JSON text: sorted keys, one object member or nested array per
/// line, flat arrays on one line, trailing newline.
inline std::string to_canonical_text(const json &v)
{
    std::string out;
    detail::pretty(v, out, 0);
    return out + "\n";
}

inline std::string emit_document(const Document &d) { return to_canonical_text(document_json(d)); }

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Reader {
public:
    Reader(Field f) : field_(f) {}

    [[noreturn]] static void fail(const std::string &path, const std::string &what)
    {
        throw input_error(path + ": " + what);
    }

    static void only_keys(const json &o, const std::string &path, std::initializer_list<const char *> allowed)
    {
        if (!o.is_object())
            fail(path, "expected an object");
        for (auto &[k, v] : o.items()) {
            bool ok = false;
            for (const char *a : allowed)
                ok = ok || k == a;
            if (!ok)
                fail(path, "unknown field '" + k + "'");
        }
    }

    static const json &need(const json &o, const std::string &path, const char *key)
    {
        if (!o.contains(key))
            fail(path, std::string("missing field '") + key + "'");
        return o.at(key);
    }

    static std::size_t index(const json &v, const std::string &path, std::size_t bound)
    {
        if (!v.is_number_unsigned())
            fail(path, "expected a non-negative integer index");
        std::size_t i = v.get<std::size_t>();
        if (i >= bound)
            fail(path, "index " + std::to_string(i) + " out of range (dimension " + std::to_string(bound) + ")");
        return i;
    }

    static std::size_t count(const json &v, const std::string &path)
    {
        if (!v.is_number_unsigned())
            fail(path, "expected a non-negative integer");
        return v.get<std::size_t>();
    }

    static std::string text(const json &v, const std::string &path)
    {
        if (!v.is_string())
            fail(path, "expected a string");
        return v.get<std::string>();
    }

    Scalar scalar(const json &v, const std::string &path) const
    {
        try {
            if (field_.is_rational()) {
                if (!v.is_string())
                    fail(path, "rational scalars are strings such as \"3\" or \"-1/2\"");
                return field_.parse(v.get<std::string>());
            }
            if (!v.is_number_unsigned())
                fail(path, "prime-field scalars are integers in [0, " + std::to_string(field_.modulus()) + ")");
            return field_.parse(std::to_string(v.get<std::uint64_t>()));
        } catch (const input_error &e) {
            if (std::string(e.what()).rfind(path, 0) == 0)
                throw;
            fail(path, std::string("bad scalar literal: ") + e.what());
        }
    }

    const json &tuples(const json &v, const std::string &path, std::size_t arity) const
    {
        if (!v.is_array())
            fail(path, "expected an array");
        for (std::size_t t = 0; t < v.size(); ++t)
            if (!v[t].is_array() || v[t].size() != arity)
                fail(path + "[" + std::to_string(t) + "]", "expected a tuple of length " + std::to_string(arity));
        return v;
    }

    Matrix constants(const json &v, const std::string &path, std::size_t n, bool product) const
    {
        Matrix m = product ? Matrix(field_, n, n * n) : Matrix(field_, n * n, n);
        tuples(v, path, 4);
        for (std::size_t t = 0; t < v.size(); ++t) {
            std::string p = path + "[" + std::to_string(t) + "]";
            std::size_t i = index(v[t][0], p + "[0]", n), j = index(v[t][1], p + "[1]", n),
                        k = index(v[t][2], p + "[2]", n);
            Scalar c = scalar(v[t][3], p + "[3]");
            if (product)
                m.add(k, i * n + j, c);
            else
                m.add(j * n + k, i, c);
        }
        return m;
    }

    Matrix vector(const json &v, const std::string &path, std::size_t n, bool row) const
    {
        if (!v.is_array() || v.size() != n)
            fail(path, "expected an array of " + std::to_string(n) + " scalars");
        Matrix m = row ? Matrix(field_, 1, n) : Matrix(field_, n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            Scalar s = scalar(v[i], path + "[" + std::to_string(i) + "]");
            row ? m.set(0, i, s) : m.set(i, 0, s);
        }
        return m;
    }

    Matrix matrix(const json &v, const std::string &path) const
    {
        only_keys(v, path, {"rows", "cols", "entries"});
        std::size_t r = count(need(v, path, "rows"), path + ".rows"), c = count(need(v, path, "cols"), path + ".cols");
        Matrix m(field_, r, c);
        const json &e = tuples(need(v, path, "entries"), path + ".entries", 3);
        for (std::size_t t = 0; t < e.size(); ++t) {
            std::string p = path + ".entries[" + std::to_string(t) + "]";
            std::size_t j = index(e[t][0], p + "[0]", c), i = index(e[t][1], p + "[1]", r);
            m.add(i, j, scalar(e[t][2], p + "[2]"));
        }
        return m;
    }

    static Side side(const json &v, const std::string &path)
    {
        std::string s = text(v, path);
        if (s == "left")
            return Side::left;
        if (s == "right")
            return Side::right;
        fail(path, "side must be \"left\" or \"right\"");
    }

    Action action(const json &v, const std::string &path, std::size_t dim_m, std::size_t dim_a) const
    {
        only_keys(v, path, {"side", "entries"});
        Action a{side(need(v, path, "side"), path + ".side"), Matrix(field_, dim_m, dim_m * dim_a)};
        const json &e = tuples(need(v, path, "entries"), path + ".entries", 4);
        for (std::size_t t = 0; t < e.size(); ++t) {
            std::string p = path + ".entries[" + std::to_string(t) + "]";
            std::size_t m = index(e[t][0], p + "[0]", dim_m), x = index(e[t][1], p + "[1]", dim_a),
                        tg = index(e[t][2], p + "[2]", dim_m);
            a.map.add(tg, a.side == Side::right ? m * dim_a + x : x * dim_m + m, scalar(e[t][3], p + "[3]"));
        }
        return a;
    }

    Coaction coaction(const json &v, const std::string &path, std::size_t dim_m, std::size_t dim_c) const
    {
        only_keys(v, path, {"side", "entries"});
        Coaction c{side(need(v, path, "side"), path + ".side"), Matrix(field_, dim_m * dim_c, dim_m)};
        const json &e = tuples(need(v, path, "entries"), path + ".entries", 4);
        for (std::size_t t = 0; t < e.size(); ++t) {
            std::string p = path + ".entries[" + std::to_string(t) + "]";
            std::size_t m = index(e[t][0], p + "[0]", dim_m), tg = index(e[t][1], p + "[1]", dim_m),
                        k = index(e[t][2], p + "[2]", dim_c);
            c.map.add(c.side == Side::right ? tg * dim_c + k : k * dim_m + tg, m, scalar(e[t][3], p + "[3]"));
        }
        return c;
    }

private:
    Field field_;
};

inline Kind parse_kind(const std::string &s, const std::string &path)
{
    for (Kind k : {Kind::algebra, Kind::coalgebra, Kind::bialgebra, Kind::hopf})
        if (s == to_string(k))
            return k;
    Reader::fail(path, "unknown kind '" + s + "'");
}

inline Field parse_field(const json &v)
{
    if (v.is_string()) {
        if (v.get<std::string>() != "Q")
            Reader::fail("field", "expected \"Q\" or {\"p\": n}");
        return Field::rationals();
    }
    Reader::only_keys(v, "field", {"p"});
    const json &p = Reader::need(v, "field", "p");
    if (!p.is_number_unsigned())
        Reader::fail("field.p", "expected a prime");
    std::uint64_t n = p.get<std::uint64_t>();
    if (n >= (1ull << 31))
        Reader::fail("field.p", "modulus must be below 2^31");
    try {
        return Field::prime(n);
    } catch (const input_error &e) {
        Reader::fail("field.p", e.what());
    }
}

} // namespace detail

inline Document parse_document(const json &root)
{
    using detail::Reader;
    Reader::only_keys(root, "document", {"version", "field", "objects"});
    const json &version = Reader::need(root, "document", "version");
    if (!version.is_number_unsigned() || version.get<std::uint64_t>() != 1)
        Reader::fail("version", "unsupported version (expected 1)");
    Document d;
    d.field = detail::parse_field(Reader::need(root, "document", "field"));
    Reader rd(d.field);
    const json &objects = Reader::need(root, "document", "objects");
    if (!objects.is_object())
        Reader::fail("objects", "expected an object");

    auto type_of = [&](const std::string &name, const json &o) {
        std::string path = "objects." + name;
        if (!o.is_object())
            Reader::fail(path, "expected an object");
        return Reader::text(Reader::need(o, path, "type"), path + ".type");
    };
    auto ref = [&](const json &o, const std::string &path, const char *key, const char *want) {
        std::string name = Reader::text(Reader::need(o, path, key), path + "." + key);
        if (!objects.contains(name))
            Reader::fail(path + "." + key, "dangling reference to '" + name + "'");
        std::string t = type_of(name, objects.at(name));
        if (t != want)
            Reader::fail(path + "." + key, "'" + name + "' is a " + t + ", expected a " + want);
        return name;
    };
    auto dim_of = [&](const std::string &name) { return d.structure(name).dim(); };

    // Structures first, everything else may refer to them.
    for (auto &[name, o] : objects.items()) {
        if (type_of(name, o) != "structure")
            continue;
        std::string path = "objects." + name;
        Reader::only_keys(o, path, {"type", "kind", "dim", "labels", "mul", "unit", "comul", "counit", "antipode"});
        Structure s;
        s.kind = detail::parse_kind(Reader::text(Reader::need(o, path, "kind"), path + ".kind"), path + ".kind");
        std::size_t n = Reader::count(Reader::need(o, path, "dim"), path + ".dim");
        if (n == 0)
            Reader::fail(path + ".dim", "dimension must be positive");
        const json &labels = Reader::need(o, path, "labels");
        if (!labels.is_array() || labels.size() != n)
            Reader::fail(path + ".labels", "expected " + std::to_string(n) + " labels");
        for (std::size_t i = 0; i < n; ++i)
            s.labels.push_back(Reader::text(labels[i], path + ".labels[" + std::to_string(i) + "]"));
        bool want_alg = s.kind != Kind::coalgebra, want_coalg = s.kind != Kind::algebra;
        for (const char *k : {"mul", "unit"})
            if (o.contains(k) != want_alg)
                Reader::fail(path, std::string("field '") + k + "' does not match kind " + to_string(s.kind));
        for (const char *k : {"comul", "counit"})
            if (o.contains(k) != want_coalg)
                Reader::fail(path, std::string("field '") + k + "' does not match kind " + to_string(s.kind));
        if (want_alg)
            s.algebra = Algebra{rd.constants(o.at("mul"), path + ".mul", n, true),
                                rd.vector(o.at("unit"), path + ".unit", n, false)};
        if (want_coalg)
            s.coalgebra = Coalgebra{rd.constants(o.at("comul"), path + ".comul", n, false),
                                    rd.vector(o.at("counit"), path + ".counit", n, true)};
        if (o.contains("antipode")) {
            if (s.kind != Kind::hopf)
                Reader::fail(path + ".antipode", "only Hopf structures carry an antipode");
            s.antipode = rd.matrix(o.at("antipode"), path + ".antipode");
            if (s.antipode->rows() != n || s.antipode->cols() != n)
                Reader::fail(path + ".antipode", "antipode must be " + std::to_string(n) + "x" + std::to_string(n));
        }
        d.objects.emplace(name, StructureObject{std::move(s)});
    }
    auto need_alg = [&](const std::string &name, const std::string &path) {
        if (!d.structure(name).algebra)
            Reader::fail(path, "'" + name + "' has no multiplication");
    };
    auto need_coalg = [&](const std::string &name, const std::string &path) {
        if (!d.structure(name).coalgebra)
            Reader::fail(path, "'" + name + "' has no comultiplication");
    };
    auto need_bialg = [&](const std::string &name, const std::string &path) {
        Kind k = d.structure(name).kind;
        if (k != Kind::bialgebra && k != Kind::hopf)
            Reader::fail(path, "'" + name + "' is not a bialgebra");
    };

    // Entwinings next: modules refer to them.
    for (auto &[name, o] : objects.items()) {
        if (type_of(name, o) != "entwining")
            continue;
        std::string path = "objects." + name;
        Reader::only_keys(o, path, {"type", "algebra", "coalgebra", "psi"});
        EntwiningObject e;
        e.algebra = ref(o, path, "algebra", "structure");
        e.coalgebra = ref(o, path, "coalgebra", "structure");
        need_alg(e.algebra, path + ".algebra");
        need_coalg(e.coalgebra, path + ".coalgebra");
        std::size_t na = dim_of(e.algebra), nc = dim_of(e.coalgebra);
        e.psi = Matrix(d.field, na * nc, nc * na);
        const json &psi = rd.tuples(Reader::need(o, path, "psi"), path + ".psi", 5);
        for (std::size_t t = 0; t < psi.size(); ++t) {
            std::string p = path + ".psi[" + std::to_string(t) + "]";
            std::size_t c = Reader::index(psi[t][0], p + "[0]", nc), a = Reader::index(psi[t][1], p + "[1]", na),
                        a2 = Reader::index(psi[t][2], p + "[2]", na), c2 = Reader::index(psi[t][3], p + "[3]", nc);
            e.psi.add(a2 * nc + c2, c * na + a, rd.scalar(psi[t][4], p + "[4]"));
        }
        d.objects.emplace(name, std::move(e));
    }

    for (auto &[name, o] : objects.items()) {
        std::string type = type_of(name, o), path = "objects." + name;
        if (type == "structure" || type == "entwining")
            continue;
        if (type == "pairing") {
            Reader::only_keys(o, path, {"type", "algebra", "coalgebra", "matrix"});
            PairingObject p;
            p.algebra = ref(o, path, "algebra", "structure");
            p.coalgebra = ref(o, path, "coalgebra", "structure");
            need_alg(p.algebra, path + ".algebra");
            need_coalg(p.coalgebra, path + ".coalgebra");
            std::size_t na = dim_of(p.algebra), nc = dim_of(p.coalgebra);
            p.matrix = Matrix(d.field, na, nc);
            const json &m = rd.tuples(Reader::need(o, path, "matrix"), path + ".matrix", 3);
            for (std::size_t t = 0; t < m.size(); ++t) {
                std::string q = path + ".matrix[" + std::to_string(t) + "]";
                p.matrix.add(Reader::index(m[t][0], q + "[0]", na), Reader::index(m[t][1], q + "[1]", nc),
                             rd.scalar(m[t][2], q + "[2]"));
            }
            d.objects.emplace(name, std::move(p));
        } else if (type == "module") {
            Reader::only_keys(o, path, {"type", "dim", "entwining", "algebra", "coalgebra", "action", "coaction"});
            ModuleObject m;
            m.module.dim = Reader::count(Reader::need(o, path, "dim"), path + ".dim");
            if (o.contains("entwining")) {
                if (o.contains("algebra") || o.contains("coalgebra"))
                    Reader::fail(path, "an entwined module names its entwining only");
                m.entwining = ref(o, path, "entwining", "entwining");
            }
            if (o.contains("algebra")) {
                m.algebra = ref(o, path, "algebra", "structure");
                need_alg(m.algebra, path + ".algebra");
            }
            if (o.contains("coalgebra")) {
                m.coalgebra = ref(o, path, "coalgebra", "structure");
                need_coalg(m.coalgebra, path + ".coalgebra");
            }
            auto [na, nc] = module_partner_dims(d, m);
            if (o.contains("action")) {
                if (na == 0)
                    Reader::fail(path + ".action", "no algebra to act with");
                m.module.action = rd.action(o.at("action"), path + ".action", m.module.dim, na);
            }
            if (o.contains("coaction")) {
                if (nc == 0)
                    Reader::fail(path + ".coaction", "no coalgebra to coact with");
                m.module.coaction = rd.coaction(o.at("coaction"), path + ".coaction", m.module.dim, nc);
            }
            d.objects.emplace(name, std::move(m));
        } else if (type == "dk" || type == "alt_dk") {
            bool alt = type == "alt_dk";
            if (alt)
                Reader::only_keys(o, path,
                                  {"type", "bialgebra", "algebra", "coalgebra", "algebra_action", "coalgebra_coaction"});
            else
                Reader::only_keys(o, path,
                                  {"type", "bialgebra", "algebra", "coalgebra", "algebra_coaction", "coalgebra_action"});
            std::string h = ref(o, path, "bialgebra", "structure"), a = ref(o, path, "algebra", "structure"),
                        c = ref(o, path, "coalgebra", "structure");
            need_bialg(h, path + ".bialgebra");
            need_alg(a, path + ".algebra");
            need_coalg(c, path + ".coalgebra");
            std::size_t nh = dim_of(h), na = dim_of(a), nc = dim_of(c);
            if (alt) {
                AltDKObject x{h, a, c,
                              rd.action(Reader::need(o, path, "algebra_action"), path + ".algebra_action", na, nh),
                              rd.coaction(Reader::need(o, path, "coalgebra_coaction"), path + ".coalgebra_coaction",
                                          nc, nh)};
                d.objects.emplace(name, std::move(x));
            } else {
                DKObject x{h, a, c,
                           rd.coaction(Reader::need(o, path, "algebra_coaction"), path + ".algebra_coaction", na, nh),
                           rd.action(Reader::need(o, path, "coalgebra_action"), path + ".coalgebra_action", nc, nh)};
                d.objects.emplace(name, std::move(x));
            }
        } else if (type == "morphism") {
            Reader::only_keys(o, path, {"type", "source", "target", "maps"});
            MorphismObject m;
            for (const char *k : {"source", "target"}) {
                std::string n = Reader::text(Reader::need(o, path, k), path + "." + k);
                if (!objects.contains(n))
                    Reader::fail(path + "." + k, "dangling reference to '" + n + "'");
                (std::string(k) == "source" ? m.source : m.target) = n;
            }
            const json &maps = Reader::need(o, path, "maps");
            if (!maps.is_object())
                Reader::fail(path + ".maps", "expected an object");
            for (auto &[k, v] : maps.items())
                m.maps.emplace(k, rd.matrix(v, path + ".maps." + k));
            d.objects.emplace(name, std::move(m));
        } else if (type == "extension") {
            Reader::only_keys(o, path, {"type", "bialgebra", "algebra", "coaction", "integral"});
            ExtensionObject x;
            x.bialgebra = ref(o, path, "bialgebra", "structure");
            x.algebra = ref(o, path, "algebra", "structure");
            need_bialg(x.bialgebra, path + ".bialgebra");
            need_alg(x.algebra, path + ".algebra");
            x.coaction = rd.coaction(Reader::need(o, path, "coaction"), path + ".coaction", dim_of(x.algebra),
                                     dim_of(x.bialgebra));
            if (o.contains("integral"))
                x.integral = rd.matrix(o.at("integral"), path + ".integral");
            d.objects.emplace(name, std::move(x));
        } else if (type == "coextension") {
            Reader::only_keys(o, path, {"type", "bialgebra", "coalgebra", "action", "cointegral"});
            CoextensionObject x;
            x.bialgebra = ref(o, path, "bialgebra", "structure");
            x.coalgebra = ref(o, path, "coalgebra", "structure");
            need_bialg(x.bialgebra, path + ".bialgebra");
            need_coalg(x.coalgebra, path + ".coalgebra");
            x.action = rd.action(Reader::need(o, path, "action"), path + ".action", dim_of(x.coalgebra),
                                 dim_of(x.bialgebra));
            if (o.contains("cointegral"))
                x.cointegral = rd.matrix(o.at("cointegral"), path + ".cointegral");
            d.objects.emplace(name, std::move(x));
        } else {
            Reader::fail(path + ".type", "unknown object type '" + type + "'");
        }
    }
    return d;
}

inline Document parse_document(const std::string &text)
{
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw input_error(std::string("syntax error: ") + e.what());
    }
    return parse_document(root);
}

// ---------------------------------------------------------------------------
// Verification by object type

namespace detail {

inline const Matrix &map_named(const MorphismObject &m, const std::string &key, const std::string &name)
{
    auto it = m.maps.find(key);
    if (it == m.maps.end())
        throw input_error("morphism '" + name + "' needs a map named '" + key + "'");
    return it->second;
}

} // namespace detail

/// Verifies one object against the axioms of its type. Integrals and
/// cointegrals attached to (co)extensions are reported as facts only.
inline Report check_object(const Document &d, const std::string &name)
{
    const Object &o = d.get(name);
    Report r(std::string(type_name(o)) + " " + name);
    std::visit(
        [&](auto &x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, StructureObject>) {
                r.absorb(verify_structure(x.structure));
            } else if constexpr (std::is_same_v<T, PairingObject>) {
                Pairing p = d.pairing(name);
                if (!r.absorb(verify_measuring_pairing(p)))
                    return;
                Report alpha = check_alpha_condition(p);
                for (auto &[k, v] : alpha.facts)
                    r.fact(k, v);
                r.fact("alpha_condition", alpha ? "yes" : "no");
            } else if constexpr (std::is_same_v<T, EntwiningObject>) {
                r.absorb(verify_entwining(d.entwining(name)));
            } else if constexpr (std::is_same_v<T, ModuleObject>) {
                if (auto e = module_entwining(d, x)) {
                    r.absorb(verify_entwined_module(*e, x.module));
                } else {
                    const Algebra *a = x.algebra.empty() ? nullptr : &d.algebra(x.algebra);
                    const Coalgebra *c = x.coalgebra.empty() ? nullptr : &d.coalgebra(x.coalgebra);
                    r.absorb(verify_module_presentation(a, c, x.module));
                }
            } else if constexpr (std::is_same_v<T, DKObject>) {
                r.absorb(verify_dk(d.dk(name)));
            } else if constexpr (std::is_same_v<T, AltDKObject>) {
                AltDKStructure s = d.alt_dk(name);
                if (r.absorb(verify_alt_dk(s)))
                    r.absorb(verify_entwining(alt_dk_entwining(s)), "entwining.");
            } else if constexpr (std::is_same_v<T, MorphismObject>) {
                const Object &src = d.get(x.source), &tgt = d.get(x.target);
                if (src.index() != tgt.index())
                    throw input_error("morphism '" + name + "' connects objects of different types");
                if (std::holds_alternative<StructureObject>(src)) {
                    const Structure &s = d.structure(x.source), &t = d.structure(x.target);
                    const Matrix &f = detail::map_named(x, "f", name);
                    if (s.algebra && s.coalgebra)
                        r.absorb(verify_bialgebra_morphism(s, t, f));
                    else if (s.algebra)
                        r.absorb(verify_algebra_morphism(s.alg(), t.alg(), f));
                    else
                        r.absorb(verify_coalgebra_morphism(s.coalg(), t.coalg(), f));
                } else if (std::holds_alternative<EntwiningObject>(src)) {
                    r.absorb(verify_entwining_morphism(d.entwining(x.source), d.entwining(x.target),
                                                       detail::map_named(x, "gamma", name),
                                                       detail::map_named(x, "delta", name)));
                } else if (std::holds_alternative<ModuleObject>(src)) {
                    auto &m = std::get<ModuleObject>(src);
                    auto &n = std::get<ModuleObject>(tgt);
                    auto e = module_entwining(d, m);
                    if (!e || m.entwining != n.entwining)
                        throw input_error("module morphism '" + name + "' needs modules over one entwining");
                    r.absorb(hom_entwined(*e, m.module, n.module, detail::map_named(x, "f", name)));
                } else if (std::holds_alternative<DKObject>(src)) {
                    r.absorb(verify_dk_morphism(d.dk(x.source), d.dk(x.target), detail::map_named(x, "beta", name),
                                                detail::map_named(x, "gamma", name),
                                                detail::map_named(x, "delta", name)));
                } else {
                    throw input_error("morphisms between " + std::string(type_name(src)) + " objects are not supported");
                }
            } else if constexpr (std::is_same_v<T, ExtensionObject>) {
                Extension e = d.extension(name);
                if (!r.absorb(verify_comodule_algebra(e.bialgebra, e.algebra, e.coaction)))
                    return;
                r.fact("coinvariants_dim", std::to_string(coinvariants(e).dim()));
                if (x.integral) {
                    IntegralCheck ic = check_integral(e, *x.integral);
                    for (auto &[k, v] : ic.report.facts)
                        r.fact("integral." + k, v);
                }
            } else {
                Coextension c = coextension_quotient(d.structure(x.bialgebra), d.coalgebra(x.coalgebra), x.action);
                if (!r.absorb(c.report))
                    return;
                if (x.cointegral) {
                    CointegralCheck cc = check_cointegral(c, *x.cointegral);
                    for (auto &[k, v] : cc.report.facts)
                        r.fact("cointegral." + k, v);
                }
            }
        },
        o);
    return r;
}

} // namespace entwine
