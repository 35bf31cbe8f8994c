#include "paradoxkit/paradox.hpp"

#include <algorithm>
#include <unordered_map>

#include "paradoxkit/errors.hpp"

namespace paradoxkit::paradox {

using exactlin::Vec3Q;
using words::Letter;
using words::ReducedWord;

FiniteActionModel::FiniteActionModel(std::size_t point_count, std::string identity_label)
    : size_(point_count), identity_(std::move(identity_label))
{
    std::vector<PointId> id(point_count);
    for (std::size_t i = 0; i < point_count; ++i)
        id[i] = static_cast<PointId>(i);
    actions_[identity_] = std::move(id);
}

void FiniteActionModel::add_action(const std::string& label, std::vector<PointId> images)
{
    if (images.size() != size_)
        throw ModelError("action '" + label + "' has " + std::to_string(images.size()) + " images for " +
                         std::to_string(size_) + " points");
    std::vector<bool> hit(size_, false);
    for (PointId y : images) {
        if (y >= size_ || hit[y])
            throw ModelError("action '" + label + "' is not a bijection");
        hit[y] = true;
    }
    if (label == identity_) {
        for (std::size_t i = 0; i < size_; ++i)
            if (images[i] != i)
                throw ModelError("identity label '" + label + "' must act trivially");
    }
    actions_[label] = std::move(images);
}

void FiniteActionModel::add_composition(const std::string& g, const std::string& h, const std::string& gh)
{
    for (const auto* l : {&g, &h, &gh})
        if (!has_label(*l))
            throw ModelError("unknown label '" + *l + "'");
    compositions_.push_back({g, h, gh});
}

std::vector<std::string> FiniteActionModel::labels() const
{
    std::vector<std::string> out;
    for (const auto& [label, _] : actions_)
        out.push_back(label);
    return out;
}

PointId FiniteActionModel::apply(const std::string& label, PointId x) const
{
    const auto it = actions_.find(label);
    if (it == actions_.end())
        throw ModelError("unknown label '" + label + "'");
    if (x >= size_)
        throw ModelError("point " + std::to_string(x) + " outside model of size " + std::to_string(size_));
    return it->second[x];
}

PointSet FiniteActionModel::apply(const std::string& label, const PointSet& s) const
{
    PointSet out;
    for (PointId x : s)
        out.insert(apply(label, x));
    return out;
}

CheckList FiniteActionModel::audit() const
{
    CheckList out;
    bool bijective = true;
    std::string which;
    for (const auto& [label, images] : actions_) {
        std::vector<bool> hit(size_, false);
        for (PointId y : images) {
            if (y >= size_ || hit[y]) {
                bijective = false;
                which = label;
                break;
            }
            hit[y] = true;
        }
    }
    out.add("bijection", bijective, bijective ? "" : "'" + which + "' is not a bijection");

    const auto& id = actions_.at(identity_);
    bool trivial = true;
    for (std::size_t i = 0; i < size_; ++i)
        trivial = trivial && id[i] == i;
    out.add("identity", trivial, trivial ? "" : "identity label moves a point");

    bool composes = true;
    std::string detail;
    for (const auto& [g, h, gh] : compositions_)
        for (PointId x = 0; x < size_ && composes; ++x)
            if (apply(gh, x) != apply(g, apply(h, x))) {
                composes = false;
                detail = "(" + g + "*" + h + ")x != " + g + "(" + h + "x) at x = " + std::to_string(x);
            }
    out.add("composition", composes, detail);
    return out;
}

void FiniteActionModel::require_valid() const
{
    const auto report = audit();
    if (const auto* bad = report.first_failure())
        throw ModelError("action model fails " + bad->name + ": " + bad->detail);
}

std::string WitnessReport::first_violation() const
{
    const auto* bad = checks.first_failure();
    return bad ? bad->name + ": " + bad->detail : std::string{};
}

namespace {

void require_points(const FiniteActionModel& model, const PointSet& s, const char* what)
{
    if (!s.empty() && *s.rbegin() >= model.size())
        throw ModelError(std::string(what) + " contains a point outside the model");
}

std::string describe(const PointSet& s)
{
    std::string out = "{";
    std::size_t shown = 0;
    for (PointId x : s) {
        if (shown++)
            out += ",";
        if (shown > 8) {
            out += "...";
            break;
        }
        out += std::to_string(x);
    }
    return out + "}";
}

// Empty string if pairwise disjoint, else a description of one overlap.
std::string overlap(const std::vector<const PointSet*>& sets, const std::vector<std::string>& names)
{
    std::map<PointId, std::size_t> owner;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (PointId x : *sets[i]) {
            auto [it, fresh] = owner.emplace(x, i);
            if (!fresh)
                return names[it->second] + " and " + names[i] + " share point " + std::to_string(x);
        }
    return {};
}

PointSet unite(const std::vector<PointSet>& sets)
{
    PointSet out;
    for (const auto& s : sets)
        out.insert(s.begin(), s.end());
    return out;
}

} // namespace

WitnessReport verify_paradox_witness(const FiniteActionModel& model, const PointSet& e, const ParadoxWitness& w)
{
    model.require_valid();
    if (w.pieces_a.empty() || w.pieces_b.empty())
        throw ModelError("paradox witness needs m >= 1 and n >= 1 pieces");
    if (w.pieces_a.size() != w.movers_a.size() || w.pieces_b.size() != w.movers_b.size())
        throw ModelError("pieces and movers differ in length");
    require_points(model, e, "E");

    std::vector<const PointSet*> all;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < w.pieces_a.size(); ++i) {
        require_points(model, w.pieces_a[i], "piece");
        all.push_back(&w.pieces_a[i]);
        names.push_back("A" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < w.pieces_b.size(); ++i) {
        require_points(model, w.pieces_b[i], "piece");
        all.push_back(&w.pieces_b[i]);
        names.push_back("B" + std::to_string(i + 1));
    }

    WitnessReport report;
    std::string outside;
    for (std::size_t i = 0; i < all.size() && outside.empty(); ++i)
        for (PointId x : *all[i])
            if (!e.count(x)) {
                outside = names[i] + " contains " + std::to_string(x) + " not in E";
                break;
            }
    report.checks.add("pieces_in_E", outside.empty(), outside);
    const auto clash = overlap(all, names);
    report.checks.add("pieces_disjoint", clash.empty(), clash);

    auto moved_union = [&](const std::vector<PointSet>& pieces, const std::vector<std::string>& movers) {
        std::vector<PointSet> moved;
        for (std::size_t i = 0; i < pieces.size(); ++i)
            moved.push_back(model.apply(movers[i], pieces[i]));
        return unite(moved);
    };
    const auto ua = moved_union(w.pieces_a, w.movers_a);
    report.checks.add("moved_a_cover_E", ua == e, ua == e ? "" : "union g_i A_i = " + describe(ua) + " != E = " + describe(e));
    const auto ub = moved_union(w.pieces_b, w.movers_b);
    report.checks.add("moved_b_cover_E", ub == e, ub == e ? "" : "union h_j B_j = " + describe(ub) + " != E = " + describe(e));
    return report;
}

WitnessReport verify_equidecomp(const FiniteActionModel& model, const PointSet& e, const PointSet& f,
                                const EquidecompWitness& w)
{
    model.require_valid();
    if (w.pieces.size() != w.movers.size())
        throw ModelError("pieces and movers differ in length");
    require_points(model, e, "E");
    require_points(model, f, "F");

    std::vector<PointSet> moved;
    std::vector<const PointSet*> pieces, moved_ptrs;
    std::vector<std::string> names, moved_names;
    for (std::size_t i = 0; i < w.pieces.size(); ++i) {
        require_points(model, w.pieces[i], "piece");
        moved.push_back(model.apply(w.movers[i], w.pieces[i]));
        names.push_back("A" + std::to_string(i + 1));
        moved_names.push_back("g" + std::to_string(i + 1) + "A" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < w.pieces.size(); ++i) {
        pieces.push_back(&w.pieces[i]);
        moved_ptrs.push_back(&moved[i]);
    }

    WitnessReport report;
    const auto clash = overlap(pieces, names);
    report.checks.add("pieces_disjoint", clash.empty(), clash);
    const auto ue = unite(w.pieces);
    report.checks.add("pieces_union_E", ue == e, ue == e ? "" : "union A_i = " + describe(ue) + " != E = " + describe(e));
    const auto moved_clash = overlap(moved_ptrs, moved_names);
    report.checks.add("moved_disjoint", moved_clash.empty(), moved_clash);
    const auto uf = unite(moved);
    report.checks.add("moved_union_F", uf == f, uf == f ? "" : "union g_i A_i = " + describe(uf) + " != F = " + describe(f));
    return report;
}

TruncatedReport verify_truncated_witness(const TruncatedWitness& w)
{
    TruncatedReport report;
    std::vector<const PointSet*> all;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < w.pieces_a.size(); ++i) {
        all.push_back(&w.pieces_a[i].points);
        names.push_back("A" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < w.pieces_b.size(); ++i) {
        all.push_back(&w.pieces_b[i].points);
        names.push_back("B" + std::to_string(i + 1));
    }

    std::string outside;
    for (std::size_t i = 0; i < all.size() && outside.empty(); ++i)
        for (PointId x : *all[i])
            if (!w.e.count(x)) {
                outside = names[i] + " contains " + std::to_string(x) + " not in E";
                break;
            }
    report.checks.add("pieces_in_E", outside.empty(), outside);
    const auto clash = overlap(all, names);
    report.checks.add("pieces_disjoint", clash.empty(), clash);
    bool interior_in_e = std::includes(w.e.begin(), w.e.end(), w.interior.begin(), w.interior.end());
    report.checks.add("interior_in_E", interior_in_e);

    std::string mover_problem;
    auto moved = [&](const std::vector<TruncatedPiece>& pieces, const char* side) {
        PointSet covered;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            PointSet seen;
            for (PointId x : pieces[i].points) {
                const auto it = pieces[i].image.find(x);
                if (it == pieces[i].image.end()) {
                    if (mover_problem.empty())
                        mover_problem = std::string(side) + std::to_string(i + 1) + " has no image for " + std::to_string(x);
                    continue;
                }
                if (!it->second || !w.e.count(*it->second)) {
                    ++report.leaked;
                    continue;
                }
                if (!seen.insert(*it->second).second && mover_problem.empty())
                    mover_problem = "mover of " + std::string(side) + std::to_string(i + 1) + " is not injective";
                covered.insert(*it->second);
            }
        }
        return covered;
    };
    const auto covered_a = moved(w.pieces_a, "A");
    const auto covered_b = moved(w.pieces_b, "B");
    report.checks.add("movers_injective", mover_problem.empty(), mover_problem);

    auto cover_check = [&](const PointSet& covered, const char* name, std::size_t& boundary) {
        std::string missing;
        for (PointId x : w.interior)
            if (!covered.count(x)) {
                missing = "interior point " + std::to_string(x) + " not covered";
                break;
            }
        for (PointId x : w.e)
            if (!w.interior.count(x) && !covered.count(x))
                ++boundary;
        report.checks.add(name, missing.empty(), missing);
    };
    cover_check(covered_a, "interior_covered_a", report.boundary_uncovered_a);
    cover_check(covered_b, "interior_covered_b", report.boundary_uncovered_b);
    return report;
}

OrbitTransport orbit_transport(int depth, const freeness::FreenessCertificate& certificate, int cap)
{
    if (certificate.mode != freeness::ResidueMode::vector)
        throw PreconditionError("orbit transport needs a vector-mode certificate (it names the base point)");
    if (!freeness::verify_certificate(certificate))
        throw PreconditionError("freeness certificate does not verify");
    if (depth < 1)
        throw DomainError("orbit transport needs depth >= 1");

    OrbitTransport out;
    out.depth = depth;
    out.base = Vec3Q(certificate.base[0], certificate.base[1], certificate.base[2]);
    out.words = words::ball(depth, cap);
    const std::size_t count = out.words.size();

    std::unordered_map<ReducedWord, std::size_t> word_index;
    for (std::size_t i = 0; i < count; ++i)
        word_index.emplace(out.words[i], i);

    std::array<exactlin::Mat3Q, 4> gens;
    for (Letter x : words::kAlphabet)
        gens[static_cast<std::size_t>(words::index(x))] = exactlin::generator_matrix(x);

    // x w' * v0 = M(x) (w' * v0); tails are one level down.
    out.points.resize(count);
    out.points[0] = out.base;
    for (int level = 1; level <= depth; ++level) {
        const auto begin = static_cast<std::int64_t>(words::ball_size(level - 1));
        const auto end = static_cast<std::int64_t>(words::ball_size(level));
#pragma omp parallel for schedule(static)
        for (std::int64_t i = begin; i < end; ++i) {
            const auto& w = out.words[static_cast<std::size_t>(i)];
            const auto letters = w.letters();
            const auto tail = ReducedWord::reduce(std::span<const Letter>(letters).subspan(1));
            out.points[static_cast<std::size_t>(i)] =
                gens[static_cast<std::size_t>(words::index(w.front()))] * out.points[word_index.at(tail)];
        }
    }

    std::map<Vec3Q, PointId> point_id;
    std::vector<PointId> id_of_word(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto [it, fresh] = point_id.emplace(out.points[i], static_cast<PointId>(point_id.size()));
        id_of_word[i] = it->second;
    }
    out.distinct_points = point_id.size();

    auto& w = out.witness;
    w.point_count = point_id.size();
    for (std::size_t i = 0; i < count; ++i) {
        w.e.insert(id_of_word[i]);
        if (static_cast<int>(out.words[i].length()) <= depth - 1)
            w.interior.insert(id_of_word[i]);
    }

    auto piece = [&](Letter first, std::optional<Letter> mover) {
        TruncatedPiece p;
        p.mover = mover ? std::string(1, words::to_char(*mover)) : "e";
        for (std::size_t i = 0; i < count; ++i) {
            if (!words::starts_with(out.words[i], first))
                continue;
            const PointId id = id_of_word[i];
            p.points.insert(id);
            if (!mover) {
                p.image[id] = id;
                continue;
            }
            const auto moved = gens[static_cast<std::size_t>(words::index(*mover))] * out.points[i];
            const auto it = point_id.find(moved);
            p.image[id] = it == point_id.end() ? std::nullopt : std::optional<PointId>(it->second);
        }
        return p;
    };
    w.pieces_a = {piece(Letter::a, std::nullopt), piece(Letter::a_inv, Letter::a)};
    w.pieces_b = {piece(Letter::b, std::nullopt), piece(Letter::b_inv, Letter::b)};
    out.report = verify_truncated_witness(w);
    out.report.checks.add("orbit_injective", out.distinct_points == count,
                          std::to_string(out.distinct_points) + " distinct points for " + std::to_string(count) +
                              " words");
    return out;
}

} // namespace paradoxkit::paradox
