#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 an axiom or
// hypothesis check failed, 2 bad input.

#include "entwine/catalog.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace entwine {

inline json report_json(const Report &r)
{
    json facts = json::array();
    for (auto &[k, v] : r.facts)
        facts.push_back({k, v});
    json o = {{"operation", r.operation}, {"pass", r.pass}, {"checked", r.checked}, {"facts", facts}};
    if (!r.pass) {
        json fail = {{"message", r.message}};
        if (r.witness)
            fail["witness"] = {{"axiom", r.witness->axiom},
                               {"input", r.witness->input},
                               {"output", r.witness->output},
                               {"lhs", r.witness->lhs},
                               {"rhs", r.witness->rhs}};
        o["failure"] = fail;
    }
    return o;
}

namespace cli {

struct Outcome {
    std::vector<Report> reports;
    std::optional<Document> emitted;

    bool pass() const
    {
        for (auto &r : reports)
            if (!r)
                return false;
        return true;
    }
};

inline Document load(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

/// The named object, or the unique unreferenced object of an allowed type.
inline std::string pick(const Document &d, const std::string &name, std::initializer_list<const char *> types)
{
    auto allowed = [&](const Object &o) {
        for (const char *t : types)
            if (std::string(type_name(o)) == t)
                return true;
        return false;
    };
    std::string list;
    for (const char *t : types)
        list += (list.empty() ? "" : ", ") + std::string(t);
    if (!name.empty()) {
        if (!allowed(d.get(name)))
            throw input_error("object '" + name + "' is a " + type_name(d.get(name)) + "; expected one of: " + list);
        return name;
    }
    std::vector<std::string> found;
    for (auto &r : d.roots())
        if (allowed(d.get(r)))
            found.push_back(r);
    if (found.size() != 1)
        throw input_error(found.empty() ? "no top-level object of type " + list
                                        : "several candidate objects; choose one with --object");
    return found[0];
}

inline std::string dual_name(const std::string &n) { return n + "_dual"; }

inline void put_dual_structure(Document &out, const Document &in, const std::string &name)
{
    Structure s = dualize_structure(in.structure(name));
    out.objects.insert_or_assign(dual_name(name), StructureObject{std::move(s)});
}

inline std::string format_vector(const Structure &s, const Matrix &col)
{
    std::string out;
    const Field f = col.field();
    for (std::size_t i = 0; i < col.rows(); ++i) {
        const Scalar &v = col(i, 0);
        if (v == 0)
            continue;
        std::string coeff = f.format(v);
        std::string term = v == 1 ? s.labels[i] : coeff == "-1" ? "-" + s.labels[i] : coeff + "*" + s.labels[i];
        if (!out.empty() && term[0] != '-')
            out += " + ";
        else if (!out.empty())
            out += " ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Commands

inline Outcome cmd_check(const Document &d, const std::string &name)
{
    Outcome o;
    if (!name.empty()) {
        o.reports.push_back(check_object(d, name));
        return o;
    }
    for (auto &[n, obj] : d.objects)
        o.reports.push_back(check_object(d, n));
    return o;
}

inline Outcome cmd_dualize(const Document &d, const std::string &want)
{
    std::string name = pick(d, want, {"structure", "entwining", "module", "dk", "alt_dk"});
    Outcome o;
    Document out;
    out.field = d.field;
    const Object &obj = d.get(name);
    if (std::holds_alternative<StructureObject>(obj)) {
        put_dual_structure(out, d, name);
        Report r("dualize structure " + name);
        r.absorb(verify_structure(out.structure(dual_name(name))));
        o.reports.push_back(r);
    } else if (auto *e = std::get_if<EntwiningObject>(&obj)) {
        DualEntwining de = dual_entwining(d.entwining(name));
        o.reports.push_back(de.report);
        if (!de.report)
            return o;
        put_dual_structure(out, d, e->algebra);
        put_dual_structure(out, d, e->coalgebra);
        out.objects.insert_or_assign(dual_name(name),
                                     EntwiningObject{dual_name(e->coalgebra), dual_name(e->algebra), de.dual.psi});
    } else if (auto *m = std::get_if<ModuleObject>(&obj)) {
        if (m->entwining.empty())
            throw input_error("dualize: module '" + name + "' is not an entwined module");
        auto &eo = d.get_as<EntwiningObject>(m->entwining);
        DualEntwining de = dual_entwining(d.entwining(m->entwining));
        o.reports.push_back(de.report);
        if (!de.report)
            return o;
        DualModule mr = dual_module_r(de, m->module);
        o.reports.push_back(mr.report);
        if (!mr.report)
            return o;
        put_dual_structure(out, d, eo.algebra);
        put_dual_structure(out, d, eo.coalgebra);
        std::string ent = dual_name(m->entwining);
        out.objects.insert_or_assign(ent, EntwiningObject{dual_name(eo.coalgebra), dual_name(eo.algebra), de.dual.psi});
        out.objects.insert_or_assign(dual_name(name), ModuleObject{ent, "", "", mr.module});
    } else if (auto *k = std::get_if<DKObject>(&obj)) {
        DualDK dd = dual_dk(d.dk(name));
        o.reports.push_back(dd.report);
        if (!dd.report)
            return o;
        for (auto &s : {k->bialgebra, k->algebra, k->coalgebra})
            put_dual_structure(out, d, s);
        out.objects.insert_or_assign(dual_name(name),
                                     DKObject{dual_name(k->bialgebra), dual_name(k->coalgebra), dual_name(k->algebra),
                                              dd.dual.algebra_coaction, dd.dual.coalgebra_action});
    } else {
        dualize_alt_dk(d.alt_dk(name));
    }
    o.emitted = std::move(out);
    return o;
}

inline Outcome cmd_smash(const Document &d, const std::string &want)
{
    std::string name = pick(d, want, {"entwining"});
    Entwining e = d.entwining(name);
    Outcome o;
    Report r("smash ring of " + name);
    if (!r.absorb(verify_entwining(e), "entwining.")) {
        o.reports.push_back(r);
        return o;
    }
    SmashRing s = build_smash(e);
    r.absorb(s.report);
    r.fact("dim", std::to_string(s.ring.dim()));
    o.reports.push_back(r);
    if (!s.report)
        return o;
    auto &eo = d.get_as<EntwiningObject>(name);
    const Structure &a = d.structure(eo.algebra), &c = d.structure(eo.coalgebra);
    Structure out;
    out.kind = Kind::algebra;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j)
            out.labels.push_back("E(" + a.labels[i] + "," + c.labels[j] + ")");
    out.algebra = s.ring;
    Document doc;
    doc.field = d.field;
    doc.objects.emplace(name + "_smash", StructureObject{std::move(out)});
    o.emitted = std::move(doc);
    return o;
}

inline Outcome cmd_coring(const Document &d, const std::string &want)
{
    std::string name = pick(d, want, {"entwining"});
    Entwining e = d.entwining(name);
    Outcome o;
    Report r("coring of " + name);
    if (r.absorb(verify_entwining(e), "entwining.")) {
        r.absorb(build_coring(e).report);
        if (r)
            r.absorb(nu_iso(e).report, "nu.");
    }
    o.reports.push_back(r);
    return o;
}

inline Outcome cmd_antipode(const Document &d, const std::string &want)
{
    std::string name = pick(d, want, {"structure"});
    const Structure &h = d.structure(name);
    Outcome o;
    Report r("antipode of " + name);
    if (!r.absorb(verify_structure(h))) {
        o.reports.push_back(r);
        return o;
    }
    auto s = compute_antipode(h);
    if (!s) {
        r.fail("no antipode: the identity is not convolution invertible");
        o.reports.push_back(r);
        return o;
    }
    for (std::size_t i = 0; i < h.dim(); ++i)
        r.fact("S(" + h.labels[i] + ")", format_vector(h, s->column(i)));
    r.absorb(verify_antipode(h.alg(), h.coalg(), *s));
    if (h.antipode && !(*h.antipode == *s))
        r.fail("the stored antipode differs from the computed one");
    o.reports.push_back(r);
    Structure out = h;
    out.kind = Kind::hopf;
    out.antipode = *s;
    Document doc;
    doc.field = d.field;
    doc.objects.emplace(name, StructureObject{std::move(out)});
    o.emitted = std::move(doc);
    return o;
}

inline Outcome cmd_rat(const Document &d, const std::string &pairing, const std::string &module)
{
    std::string pn = pick(d, pairing, {"pairing"});
    Pairing p = d.pairing(pn);
    auto &po = d.get_as<PairingObject>(pn);
    std::string mn = module;
    if (mn.empty()) {
        for (auto &[n, obj] : d.objects)
            if (auto *m = std::get_if<ModuleObject>(&obj); m && m->algebra == po.algebra && m->module.action) {
                if (!mn.empty())
                    throw input_error("several modules over the pairing; choose one with --module");
                mn = n;
            }
        if (mn.empty())
            throw input_error("no module over the pairing's algebra");
    }
    auto &mo = d.get_as<ModuleObject>(mn);
    if (mo.algebra != po.algebra || !mo.module.action)
        throw input_error("module '" + mn + "' is not a module over '" + po.algebra + "'");
    Outcome o;
    Report r("rational part of " + mn + " over " + pn);
    if (!r.absorb(verify_measuring_pairing(p), "pairing.") ||
        !r.absorb(verify_module(p.algebra, *mo.module.action, mo.module.dim), "module.")) {
        o.reports.push_back(r);
        return o;
    }
    Report alpha = check_alpha_condition(p);
    r.absorb(alpha, "alpha.");
    if (!alpha) {
        o.reports.push_back(r);
        return o;
    }
    RationalPart rat = rational_submodule(p, *mo.module.action, mo.module.dim);
    r.fact("rational_dim", std::to_string(rat.dim()));
    r.absorb(verify_comodule(p.coalgebra, rat.coaction, rat.dim()), "coaction.");
    // The coaction induces the original action back on the rational part.
    Action back = module_from_comodule(p, rat.coaction, rat.dim());
    r.expect_equal("rat.action_recovered", back.map, rat.action.map, {{rat.dim(), p.algebra.dim()}}, {{rat.dim()}});
    o.reports.push_back(r);
    return o;
}

inline Outcome cmd_adjunction(const Document &d, const std::string &m_name, const std::string &k_name)
{
    std::string mn = pick(d, m_name, {"module"});
    auto &mo = d.get_as<ModuleObject>(mn);
    if (mo.entwining.empty())
        throw input_error("adjunction: '" + mn + "' is not an entwined module");
    DualEntwining de = dual_entwining(d.entwining(mo.entwining));
    Outcome o;
    if (!de.report) {
        o.reports.push_back(de.report);
        return o;
    }
    ModulePresentation k;
    if (k_name.empty()) {
        DualModule mr = dual_module_r(de, mo.module);
        if (!mr.report) {
            o.reports.push_back(mr.report);
            return o;
        }
        k = mr.module;
    } else {
        auto &ko = d.get_as<ModuleObject>(k_name);
        if (ko.entwining.empty())
            throw input_error("adjunction: '" + k_name + "' is not an entwined module");
        Entwining ke = d.entwining(ko.entwining);
        if (!(ke.psi == de.dual.psi) || !(ke.algebra.mul == de.dual.algebra.mul) ||
            !(ke.coalgebra.comul == de.dual.coalgebra.comul))
            throw input_error("adjunction: '" + k_name + "' is not over the dual of '" + mo.entwining + "'");
        k = ko.module;
    }
    AdjunctionResult a = adjunction_check(de, mo.module, k);
    o.reports.push_back(a.report);
    return o;
}

inline Outcome cmd_dk(const Document &d, const std::string &want)
{
    std::string name = pick(d, want, {"dk", "alt_dk"});
    Outcome o;
    Report r("Doi-Koppinen " + name);
    if (std::holds_alternative<AltDKObject>(d.get(name))) {
        AltDKStructure s = d.alt_dk(name);
        if (r.absorb(verify_alt_dk(s)))
            r.absorb(verify_entwining(alt_dk_entwining(s)), "entwining.");
        r.fact("dual", "not supported for the alternative form");
        o.reports.push_back(r);
        return o;
    }
    DKStructure s = d.dk(name);
    if (!r.absorb(verify_dk(s))) {
        o.reports.push_back(r);
        return o;
    }
    Entwining e = dk_entwining(s);
    if (!r.absorb(verify_entwining(e), "entwining.")) {
        o.reports.push_back(r);
        return o;
    }
    SmashRing sm = build_smash(e);
    const std::size_t n = s.algebra.dim() * s.coalgebra.dim();
    if (r.absorb(sm.report, "smash."))
        r.expect_equal("dk.koppinen_product_is_smash_product", koppinen_product(s), sm.ring.mul, {{n, n}}, {{n}});
    DualDK dd = dual_dk(s);
    r.absorb(dd.report, "dual.");
    o.reports.push_back(r);
    return o;
}

inline Outcome cmd_cleft(const Document &d, const std::string &want)
{
    std::string name = pick(d, want, {"extension"});
    auto &x = d.get_as<ExtensionObject>(name);
    if (!x.integral)
        throw input_error("extension '" + name + "' has no integral");
    Extension e = d.extension(name);
    Outcome o;
    IntegralCheck ic = check_integral(e, *x.integral);
    Report r = ic.report;
    r.operation = "cleft " + name;
    r.fact("coinvariants_dim", std::to_string(coinvariants(e).dim()));
    if (ic.inverse)
        for (std::size_t i = 0; i < e.bialgebra.dim(); ++i)
            r.fact("inverse(" + e.bialgebra.labels[i] + ")",
                   format_vector(d.structure(x.algebra), ic.inverse->column(i)));
    o.reports.push_back(r);
    return o;
}

inline Outcome cmd_cocleft(const Document &d, const std::string &want)
{
    std::string name = pick(d, want, {"coextension"});
    auto &x = d.get_as<CoextensionObject>(name);
    if (!x.cointegral)
        throw input_error("coextension '" + name + "' has no cointegral");
    Outcome o;
    Coextension c = coextension_quotient(d.structure(x.bialgebra), d.coalgebra(x.coalgebra), x.action);
    Report r("cocleft " + name);
    if (!r.absorb(c.report, "coextension.")) {
        o.reports.push_back(r);
        return o;
    }
    r.fact("quotient_dim", std::to_string(c.quotient.dim()));
    CointegralCheck cc = check_cointegral(c, *x.cointegral);
    if (!r.absorb(cc.report, "cointegral.")) {
        o.reports.push_back(r);
        return o;
    }
    DualCoextension dc = dualize_coextension(c, *x.cointegral);
    r.absorb(dc.report, "dual.");
    if (dc.integral)
        r.absorb(dc.integral->report, "dual.integral.");
    o.reports.push_back(r);
    return o;
}

// ---------------------------------------------------------------------------
// Driver

inline void write_file(const std::string &path, const std::string &bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw input_error("cannot write '" + path + "'");
    out << bytes;
}

inline void print_reports(const Outcome &o, bool as_json, std::ostream &out)
{
    if (as_json) {
        json reports = json::array();
        for (auto &r : o.reports)
            reports.push_back(report_json(r));
        out << to_canonical_text(json{{"pass", o.pass()}, {"reports", reports}});
        return;
    }
    for (auto &r : o.reports)
        out << r.to_text();
}

} // namespace cli

/// Runs one command line. The report goes to `out`; when a command emits a
/// document and no output file is given, the document goes to `out` and the
/// report to `err`.
inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of entwining structures and their duals", "entwine"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string file, object, output, pairing, module, m_name, k_name, entry;
    bool as_json = false;
    auto common = [&](CLI::App *sub, bool emits) {
        sub->add_option("file", file, "input document")->required();
        sub->add_option("--object", object, "object to operate on");
        sub->add_flag("--json", as_json, "print the report as JSON");
        if (emits)
            sub->add_option("-o,--output", output, "write the emitted document here");
    };
    auto *check = app.add_subcommand("check", "verify every object (or one) against its axioms");
    common(check, false);
    auto *dualize = app.add_subcommand("dualize", "emit the dual of a structure, entwining, module or DK structure");
    common(dualize, true);
    auto *smash = app.add_subcommand("smash", "build and verify the smash ring of an entwining");
    common(smash, true);
    auto *coring = app.add_subcommand("coring", "build and verify the coring A (x) C and the map nu");
    common(coring, false);
    auto *antipode = app.add_subcommand("antipode", "compute the antipode of a bialgebra");
    common(antipode, true);
    auto *rat = app.add_subcommand("rat", "rational part of a module under a measuring pairing");
    rat->add_option("file", file, "input document")->required();
    rat->add_option("--pairing", pairing, "pairing object");
    rat->add_option("--module", module, "module object");
    rat->add_flag("--json", as_json, "print the report as JSON");
    auto *adj = app.add_subcommand("adjunction", "check Hom(M, K^r) ~ Hom(K, M_r) over the full dual entwining");
    adj->add_option("file", file, "input document")->required();
    adj->add_option("--m", m_name, "entwined module M");
    adj->add_option("--k", k_name, "module K over the dual entwining (default: M_r)");
    adj->add_flag("--json", as_json, "print the report as JSON");
    auto *dk = app.add_subcommand("dk", "verify a Doi-Koppinen structure, its smash product and its dual");
    common(dk, false);
    auto *cleft = app.add_subcommand("cleft", "check an integral of an extension");
    common(cleft, false);
    auto *cocleft = app.add_subcommand("cocleft", "check a cointegral of a coextension and its dual");
    common(cocleft, false);
    auto *cat = app.add_subcommand("catalog", "list, export or check the built-in examples");
    cat->require_subcommand(1);
    auto *cat_list = cat->add_subcommand("list", "list entry names");
    auto *cat_export = cat->add_subcommand("export", "print an entry as a document");
    cat_export->add_option("name", entry, "entry name")->required();
    cat_export->add_option("-o,--output", output, "write the document here");
    auto *cat_check = cat->add_subcommand("check", "verify every entry");
    cat_check->add_flag("--json", as_json, "print the report as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        cli::Outcome o;
        if (cat->parsed()) {
            if (cat_list->parsed()) {
                for (auto &n : catalog_names())
                    out << n << '\n';
                return 0;
            }
            if (cat_export->parsed()) {
                std::string bytes = emit_document(catalog_get(entry).document);
                if (output.empty())
                    out << bytes;
                else
                    cli::write_file(output, bytes);
                return 0;
            }
            if (cat_check->parsed()) {
                for (auto &n : catalog_names()) {
                    CatalogEntry e = catalog_get(n);
                    Report r = check_object(e.document, n);
                    r.operation = "catalog " + n;
                    o.reports.push_back(r);
                }
            }
        } else {
            Document d = cli::load(file);
            if (check->parsed())
                o = cli::cmd_check(d, object);
            else if (dualize->parsed())
                o = cli::cmd_dualize(d, object);
            else if (smash->parsed())
                o = cli::cmd_smash(d, object);
            else if (coring->parsed())
                o = cli::cmd_coring(d, object);
            else if (antipode->parsed())
                o = cli::cmd_antipode(d, object);
            else if (rat->parsed())
                o = cli::cmd_rat(d, pairing, module);
            else if (adj->parsed())
                o = cli::cmd_adjunction(d, m_name, k_name);
            else if (dk->parsed())
                o = cli::cmd_dk(d, object);
            else if (cleft->parsed())
                o = cli::cmd_cleft(d, object);
            else if (cocleft->parsed())
                o = cli::cmd_cocleft(d, object);
        }
        bool to_stdout = o.emitted && output.empty();
        cli::print_reports(o, as_json, to_stdout ? err : out);
        if (o.emitted) {
            std::string bytes = emit_document(*o.emitted);
            if (to_stdout)
                out << bytes;
            else
                cli::write_file(output, bytes);
        }
        return o.pass() ? 0 : 1;
    } catch (const input_error &e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const hypothesis_error &e) {
        err << "hypothesis not satisfied: " << e.what() << '\n';
        return 1;
    } catch (const consistency_error &e) {
        err << "check failed: " << e.what() << '\n';
        return 1;
    }
}

inline int run_cli(int argc, char **argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, out, err);
}

} // namespace entwine
