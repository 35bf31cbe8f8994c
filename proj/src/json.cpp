#include "paradoxkit/json.hpp"

#include <map>

#include "paradoxkit/errors.hpp"

namespace paradoxkit::io {

using exactlin::Integer;
using exactlin::Rational;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ParseError((path.empty() ? "/" : path) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end())
        fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& array(const Json& j, const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array");
    return j;
}

std::size_t index_from_json(const Json& j, const std::string& path)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

bool bool_from_json(const Json& j, const std::string& path)
{
    if (!j.is_boolean())
        fail(path, "expected true or false");
    return j.get<bool>();
}

std::string string_from_json(const Json& j, const std::string& path)
{
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get<std::string>();
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string at(const std::string& path, const char* key) { return path + "/" + key; }

words::Letter letter_from_json(const Json& j, const std::string& path)
{
    const std::string s = string_from_json(j, path);
    if (s.size() != 1)
        fail(path, "expected one letter");
    try {
        return words::letter_from_char(s[0]);
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

} // namespace

Json to_json(const Rational& q) { return exactlin::to_string(q); }

Json to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

Json to_json(const exactlin::Mat3Q& m)
{
    Json out = Json::array();
    for (const auto& e : m.entries())
        out.push_back(to_json(e));
    return out;
}

Json to_json(const exactlin::Vec3Q& v) { return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

Json to_json(const exactlin::ProjectiveDirection& d) { return Json::array({to_json(d[0]), to_json(d[1]), to_json(d[2])}); }

Json to_json(const words::ReducedWord& w) { return w.to_string(); }

Json to_json(const CheckList& checks)
{
    Json out = Json::array();
    for (const auto& c : checks.checks)
        out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return out;
}

Rational rational_from_json(const Json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    try {
        return exactlin::parse_rational(string_from_json(j, path));
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

Integer integer_from_json(const Json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    const std::string s = string_from_json(j, path);
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0)
        fail(path, "expected a decimal integer");
    return z;
}

words::ReducedWord word_from_json(const Json& j, const std::string& path)
{
    try {
        return words::ReducedWord::parse(string_from_json(j, path));
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

Json to_json(const freeness::FreenessCertificate& c)
{
    Json states = Json::array();
    for (const auto& s : c.states)
        states.push_back(Json{{"first", std::string(1, words::to_char(s.first))}, {"residue", s.residue}});
    Json transitions = Json::array();
    for (const auto& t : c.transitions)
        transitions.push_back(Json::array({t.from, std::string(1, words::to_char(t.prepended)), t.to}));
    return Json{{"mode", freeness::to_string(c.mode)},
                {"modulus", freeness::kModulus},
                {"base", Json::array({to_json(c.base[0]), to_json(c.base[1]), to_json(c.base[2])})},
                {"states", std::move(states)},
                {"initial", c.initial},
                {"transitions", std::move(transitions)}};
}

freeness::FreenessCertificate certificate_from_json(const Json& j)
{
    freeness::FreenessCertificate c;
    const std::string mode = string_from_json(field(j, "mode", ""), "/mode");
    if (mode == "vector")
        c.mode = freeness::ResidueMode::vector;
    else if (mode == "matrix")
        c.mode = freeness::ResidueMode::matrix;
    else
        fail("/mode", "expected \"vector\" or \"matrix\"");
    if (field(j, "modulus", "") != freeness::kModulus)
        fail("/modulus", "expected 7");
    const auto& base = array(field(j, "base", ""), "/base");
    if (base.size() != 3)
        fail("/base", "expected three integers");
    for (std::size_t i = 0; i < 3; ++i)
        c.base[i] = integer_from_json(base[i], at("/base", i));

    const auto& states = array(field(j, "states", ""), "/states");
    for (std::size_t i = 0; i < states.size(); ++i) {
        const std::string p = at("/states", i);
        freeness::ResidueState s;
        s.first = letter_from_json(field(states[i], "first", p), at(p, "first"));
        const auto& r = array(field(states[i], "residue", p), at(p, "residue"));
        for (std::size_t k = 0; k < r.size(); ++k) {
            const auto v = index_from_json(r[k], at(at(p, "residue"), k));
            if (v >= static_cast<std::size_t>(freeness::kModulus))
                fail(at(at(p, "residue"), k), "residue out of range");
            s.residue.push_back(static_cast<int>(v));
        }
        c.states.push_back(std::move(s));
    }

    const auto& initial = array(field(j, "initial", ""), "/initial");
    if (initial.size() != 4)
        fail("/initial", "expected four state indices");
    for (std::size_t i = 0; i < 4; ++i)
        c.initial[i] = index_from_json(initial[i], at("/initial", i));

    const auto& ts = array(field(j, "transitions", ""), "/transitions");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string p = at("/transitions", i);
        const auto& t = array(ts[i], p);
        if (t.size() != 3)
            fail(p, "expected [from, letter, to]");
        c.transitions.push_back(
            {index_from_json(t[0], at(p, std::size_t{0})), letter_from_json(t[1], at(p, std::size_t{1})), index_from_json(t[2], at(p, std::size_t{2}))});
    }
    return c;
}

Json to_json(const sphere::FixedDirectionSet& c)
{
    Json dirs = Json::array(), witnesses = Json::array();
    for (const auto& [d, w] : c.directions) {
        dirs.push_back(to_json(d));
        witnesses.push_back(to_json(w));
    }
    return Json{{"depth", c.depth}, {"count", c.size()}, {"directions", std::move(dirs)}, {"witnesses", std::move(witnesses)}};
}

sphere::FixedDirectionSet fixed_directions_from_json(const Json& j)
{
    sphere::FixedDirectionSet c;
    c.depth = static_cast<int>(index_from_json(field(j, "depth", ""), "/depth"));
    const auto& dirs = array(field(j, "directions", ""), "/directions");
    const auto& ws = array(field(j, "witnesses", ""), "/witnesses");
    if (dirs.size() != ws.size())
        fail("/witnesses", "expected one witness per direction");
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const std::string p = at("/directions", i);
        const auto& d = array(dirs[i], p);
        if (d.size() != 3)
            fail(p, "expected an integer triple");
        try {
            c.directions.emplace(exactlin::ProjectiveDirection(integer_from_json(d[0], at(p, std::size_t{0})),
                                                               integer_from_json(d[1], at(p, std::size_t{1})),
                                                               integer_from_json(d[2], at(p, std::size_t{2}))),
                                 word_from_json(ws[i], at("/witnesses", i)));
        } catch (const DegenerateInputError& e) {
            fail(p, e.what());
        }
    }
    return c;
}

Json to_json(const sphere::AbsorbingRotation& g)
{
    return Json{{"axis", to_json(g.axis)},
                {"angle", Json{{"exact", g.angle.to_string()},
                               {"decimal", g.angle_decimal()},
                               {"precision_bits", g.precision_bits}}},
                {"depth_checked", g.depth_checked},
                {"margin", g.margin_text}};
}

Json to_json(const paradox::NNPoly& p) { return p.coefficients(); }

Json to_json(const measures::GroupTable& g)
{
    return Json{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}};
}

measures::GroupTable group_from_json(const Json& j)
{
    const auto n = index_from_json(field(j, "order", ""), "/order");
    const auto& t = array(field(j, "table", ""), "/table");
    std::vector<measures::Element> table;
    for (std::size_t i = 0; i < t.size(); ++i)
        table.push_back(index_from_json(t[i], at("/table", i)));
    std::string name = "G";
    if (j.contains("name"))
        name = string_from_json(j["name"], "/name");
    try {
        return measures::GroupTable(n, std::move(table), std::move(name));
    } catch (const ModelError& e) {
        fail("/table", e.what());
    }
}

Json to_json(const measures::PointMassMeasure& mu)
{
    Json out = Json::array();
    for (const auto& q : mu.mass)
        out.push_back(to_json(q));
    return out;
}

Json to_json(const measures::CellWitness& w)
{
    auto names = [&](const std::vector<measures::Subset>& sets) {
        Json out = Json::array();
        for (auto s : sets) {
            Json cell = Json::array();
            for (std::size_t i = 0; i < w.cells(); ++i)
                if (s >> i & 1)
                    cell.push_back(w.cell_names[i]);
            out.push_back(std::move(cell));
        }
        return out;
    };
    return Json{{"cells", w.cell_names},
                {"pieces_a", names(w.pieces_a)},
                {"moved_a", names(w.moved_a)},
                {"pieces_b", names(w.pieces_b)},
                {"moved_b", names(w.moved_b)}};
}

Json to_json(const cauchy::Coords& x)
{
    Json out = Json::array();
    for (const auto& q : x)
        out.push_back(to_json(q));
    return out;
}

Json to_json(const cauchy::HamelModel& f)
{
    Json images = Json::array();
    for (const auto& q : f.images())
        images.push_back(to_json(q));
    return Json{{"rank", f.rank()}, {"basis_labels", f.labels()}, {"basis_images", std::move(images)},
                {"assumption", cauchy::kModelAssumption}};
}

cauchy::HamelModel hamel_from_json(const Json& j)
{
    const auto& labels = array(field(j, "basis_labels", ""), "/basis_labels");
    const auto& images = array(field(j, "basis_images", ""), "/basis_images");
    std::vector<std::string> ls;
    std::vector<Rational> is;
    for (std::size_t i = 0; i < labels.size(); ++i)
        ls.push_back(string_from_json(labels[i], at("/basis_labels", i)));
    for (std::size_t i = 0; i < images.size(); ++i)
        is.push_back(rational_from_json(images[i], at("/basis_images", i)));
    try {
        return cauchy::HamelModel(std::move(ls), std::move(is));
    } catch (const DomainError& e) {
        fail("", e.what());
    }
}

namespace {

std::vector<measures::Subset> named_sets(const Json& j, const std::string& path,
                                         const std::map<std::string, std::size_t>& cells)
{
    std::vector<measures::Subset> out;
    const auto& sets = array(j, path);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& s = array(sets[i], at(path, i));
        measures::Subset m = 0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            const std::string p = at(at(path, i), k);
            const auto it = cells.find(string_from_json(s[k], p));
            if (it == cells.end())
                fail(p, "unknown cell");
            m |= measures::Subset{1} << it->second;
        }
        out.push_back(m);
    }
    return out;
}

paradox::PointSet point_set(const Json& j, const std::string& path)
{
    paradox::PointSet out;
    const auto& a = array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.insert(static_cast<paradox::PointId>(index_from_json(a[i], at(path, i))));
    return out;
}

std::vector<std::string> labels(const Json& j, const std::string& path)
{
    std::vector<std::string> out;
    const auto& a = array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(string_from_json(a[i], at(path, i)));
    return out;
}

std::vector<paradox::PointSet> point_sets(const Json& j, const std::string& path)
{
    std::vector<paradox::PointSet> out;
    const auto& a = array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(point_set(a[i], at(path, i)));
    return out;
}

} // namespace

ContradictionInput contradiction_input_from_json(const Json& j)
{
    if (!j.is_object())
        fail("", "expected an object");
    ContradictionInput in;
    if (j.contains("invariant"))
        in.invariant = bool_from_json(j["invariant"], "/invariant");
    const auto& nu = array(field(j, "nu", ""), "/nu");
    for (std::size_t i = 0; i < nu.size(); ++i)
        in.nu.push_back(rational_from_json(nu[i], at("/nu", i)));

    if (j.contains("model")) {
        const Json& m = j["model"];
        const auto points = index_from_json(field(m, "points", "/model"), "/model/points");
        std::string identity = "e";
        if (m.contains("identity"))
            identity = string_from_json(m["identity"], "/model/identity");
        paradox::FiniteActionModel model(points, identity);
        const Json& actions = field(m, "actions", "/model");
        if (!actions.is_object())
            fail("/model/actions", "expected an object");
        for (const auto& [label, images] : actions.items()) {
            const std::string p = "/model/actions/" + label;
            std::vector<paradox::PointId> imgs;
            const auto& a = array(images, p);
            for (std::size_t i = 0; i < a.size(); ++i)
                imgs.push_back(static_cast<paradox::PointId>(index_from_json(a[i], at(p, i))));
            try {
                model.add_action(label, std::move(imgs));
            } catch (const ModelError& e) {
                fail(p, e.what());
            }
        }
        if (m.contains("compositions")) {
            const auto& cs = array(m["compositions"], "/model/compositions");
            for (std::size_t i = 0; i < cs.size(); ++i) {
                const auto l = labels(cs[i], at("/model/compositions", i));
                if (l.size() != 3)
                    fail(at("/model/compositions", i), "expected [g, h, gh]");
                model.add_composition(l[0], l[1], l[2]);
            }
        }
        paradox::ParadoxWitness w;
        w.pieces_a = point_sets(field(j, "pieces_a", ""), "/pieces_a");
        w.pieces_b = point_sets(field(j, "pieces_b", ""), "/pieces_b");
        w.movers_a = labels(field(j, "movers_a", ""), "/movers_a");
        w.movers_b = labels(field(j, "movers_b", ""), "/movers_b");
        const auto e = point_set(field(j, "E", ""), "/E");
        try {
            model.require_valid();
            in.witness = measures::cell_witness(model, e, w);
        } catch (const Error& err) {
            fail("", err.what());
        }
        return in;
    }

    const auto names = labels(field(j, "cells", ""), "/cells");
    if (names.empty() || names.size() > 64)
        fail("/cells", "expected 1..64 cells");
    std::map<std::string, std::size_t> cells;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!cells.emplace(names[i], i).second)
            fail(at("/cells", i), "duplicate cell name");
    in.witness.cell_names = names;
    in.witness.pieces_a = named_sets(field(j, "pieces_a", ""), "/pieces_a", cells);
    in.witness.moved_a = named_sets(field(j, "moved_a", ""), "/moved_a", cells);
    in.witness.pieces_b = named_sets(field(j, "pieces_b", ""), "/pieces_b", cells);
    in.witness.moved_b = named_sets(field(j, "moved_b", ""), "/moved_b", cells);
    return in;
}

Json to_json(const ContradictionInput& in)
{
    Json out = to_json(in.witness);
    Json nu = Json::array();
    for (const auto& q : in.nu)
        nu.push_back(to_json(q));
    out["nu"] = std::move(nu);
    out["invariant"] = in.invariant;
    return out;
}

Json parse(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Recover line and column from the byte offset.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

} // namespace paradoxkit::io
