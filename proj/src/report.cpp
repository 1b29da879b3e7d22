#include "pdcoh/report.hpp"

#include <bit>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pdcoh/errors.hpp"

namespace pdcoh {

namespace {

// "(a1 a3)(t1 t2)" -> permutations of the simple roots and torus slots.
void parse_cycles(const std::string& text, const RootDatum& g, std::vector<int>& root_perm,
                  std::vector<int>& torus_perm) {
    root_perm.resize(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) root_perm[i] = static_cast<int>(i);
    torus_perm.resize(g.torus_coords.size());
    for (std::size_t i = 0; i < torus_perm.size(); ++i) torus_perm[i] = static_cast<int>(i);

    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(')
            throw Error(ErrorKind::ParseError, "galois cycles: expected '(' in '" + text + "'");
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos)
            throw Error(ErrorKind::ParseError, "galois cycles: unbalanced parentheses");
        std::istringstream cyc(text.substr(pos + 1, close - pos - 1));
        std::vector<std::pair<char, int>> members;
        std::string tok;
        while (cyc >> tok) {
            if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 't'))
                throw Error(ErrorKind::ParseError, "galois cycles: bad label '" + tok + "'");
            int idx = 0;
            try {
                idx = std::stoi(tok.substr(1));
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "galois cycles: bad label '" + tok + "'");
            }
            members.push_back({tok[0], idx - 1});
        }
        if (members.size() < 2)
            throw Error(ErrorKind::ParseError, "galois cycles: a cycle needs >= 2 labels");
        for (std::size_t k = 0; k < members.size(); ++k) {
            auto [kind, idx] = members[k];
            auto [kind2, idx2] = members[(k + 1) % members.size()];
            if (kind != kind2)
                throw Error(ErrorKind::ParseError,
                            "galois cycles: cannot mix root and torus labels in one cycle");
            auto& perm = (kind == 'a') ? root_perm : torus_perm;
            if (idx < 0 || idx >= static_cast<int>(perm.size()))
                throw Error(ErrorKind::ParseError, "galois cycles: label out of range");
            perm[idx] = idx2;
        }
        pos = close + 1;
    }
}

std::string render_cycles(const DiagramAutomorphism& tau) {
    std::string out;
    auto emit = [&out](const std::vector<int>& perm, char prefix) {
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (seen[i] || perm[i] == static_cast<int>(i)) continue;
            out += "(";
            std::size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) out += " ";
                out += prefix + std::to_string(j + 1);
                first = false;
                j = perm[j];
            }
            out += ")";
        }
    };
    emit(tau.root_perm, 'a');
    emit(tau.torus_perm, 't');
    return out;
}

std::vector<std::string> subset_label_list(std::uint32_t mask,
                                           const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (mask & (1u << i)) out.push_back(labels[i]);
    return out;
}

std::uint32_t mask_from_labels(const Json& arr, const std::vector<std::string>& labels) {
    std::uint32_t mask = 0;
    for (const auto& item : arr) {
        std::string want = item.get<std::string>();
        bool found = false;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == want) {
                mask |= (1u << i);
                found = true;
            }
        if (!found) throw Error(ErrorKind::ParseError, "unknown relative root label '" + want + "'");
    }
    return mask;
}

QVec parse_rat_array(const Json& arr) {
    QVec v;
    for (const auto& item : arr) {
        if (item.is_number_integer())
            v.push_back(Rat(static_cast<long>(item.get<long long>())));
        else
            v.push_back(parse_rat(item.get<std::string>()));
    }
    return v;
}

}  // namespace

LocalShtukaDatum parse_datum_json(const Json& doc) {
    if (doc.contains("preset")) return build_preset(doc["preset"].get<std::string>());
    if (!doc.contains("group") || !doc.contains("mu") || !doc.contains("nu"))
        throw Error(ErrorKind::ParseError, "datum file needs either a preset or group+mu+nu");

    CartanSpec spec = CartanSpec::parse(doc["group"].get<std::string>());
    Normalization norm;
    if (doc.contains("normalization"))
        for (const auto& item : doc["normalization"]) norm.factor_scale.push_back(parse_rat(item.get<std::string>()));
    RootDatum g = build_root_datum(spec, norm);

    DiagramAutomorphism tau = identity_automorphism(g);
    if (doc.contains("galois")) {
        const auto& gal = doc["galois"];
        std::vector<int> root_perm, torus_perm;
        parse_cycles(gal.contains("cycles") ? gal["cycles"].get<std::string>() : "", g, root_perm,
                     torus_perm);
        tau = make_diagram_automorphism(g, root_perm, torus_perm);
        if (gal.contains("order") && gal["order"].get<int>() != tau.order)
            throw Error(ErrorKind::ParseError,
                        "galois order " + std::to_string(gal["order"].get<int>()) +
                            " does not match the computed order " + std::to_string(tau.order));
    }

    int s = doc.contains("s") ? doc["s"].get<int>() : 1;

    QVec mu = parse_rat_array(doc["mu"]);
    QVec nu;
    if (doc["nu"].is_object()) {
        Rat lambda = parse_rat(doc["nu"]["lambda"].get<std::string>());
        nu = QVec(g.ambient_rank, lambda);
    } else {
        nu = parse_rat_array(doc["nu"]);
    }

    RelativeRootData j;
    if (doc.contains("j")) {
        const auto& jj = doc["j"];
        for (const auto& row : jj["delta"]) j.delta.push_back(parse_rat_array(row));
        for (const auto& row : jj["omega"]) j.omega.push_back(parse_rat_array(row));
        if (jj.contains("labels"))
            for (const auto& item : jj["labels"]) j.labels.push_back(item.get<std::string>());
        else
            for (std::size_t a = 0; a < j.delta.size(); ++a)
                j.labels.push_back("a" + std::to_string(a + 1));
    } else if (qvec_is_zero(nu)) {
        j = derive_J_folded(g, tau);
    } else {
        bool single_gl = spec.factors.size() == 1 && spec.factors[0].family == Family::GL;
        bool constant = true;
        for (const auto& x : nu)
            if (x != nu[0]) constant = false;
        if (single_gl && constant && tau.is_identity()) {
            j = derive_J_gln(g, spec.factors[0].rank, nu[0]);
        } else {
            throw Error(ErrorKind::ParseError,
                        "an explicit j block is required when nu != 0 and the group is not split GL");
        }
    }
    return build_datum(std::move(g), std::move(tau), s, std::move(mu), std::move(nu), std::move(j),
                       "explicit");
}

LocalShtukaDatum load_datum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open datum file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("datum file is not valid JSON: ") + e.what());
    }
    return parse_datum_json(doc);
}

Json datum_json(const LocalShtukaDatum& datum) {
    Json d;
    d["group"] = datum.g.spec.to_string();
    d["provenance"] = datum.provenance;
    d["preset"] = datum.preset_name;
    Json gal;
    gal["cycles"] = render_cycles(datum.tau);
    gal["order"] = datum.tau.order;
    d["galois"] = gal;
    d["s"] = datum.s;
    Json mu = Json::array();
    for (const auto& x : datum.mu) mu.push_back(rat_string(x));
    d["mu"] = mu;
    Json nu = Json::array();
    for (const auto& x : datum.nu) nu.push_back(rat_string(x));
    d["nu"] = nu;
    d["relative_roots"] = datum.j.labels;
    d["kostant_count"] = datum.kset.entries.size();
    d["dim_f"] = datum.dim_f;
    Json orbits = Json::array();
    for (std::size_t i = 0; i < datum.orbits.size(); ++i) {
        Json o;
        o["id"] = i;
        o["size"] = datum.orbits[i].size;
        o["length"] = datum.orbits[i].length;
        o["cycle"] = datum.orbits[i].size;  // Frobenius acts as one cycle
        orbits.push_back(o);
    }
    d["orbits"] = orbits;
    return d;
}

Json summand_json(const CohomologySummand& s, const LocalShtukaDatum& datum) {
    Json j;
    j["degree"] = s.degree;
    Json rep;
    rep["kind"] = (s.rep.kind == RepSymbol::SteinbergKind) ? "v" : "i";
    rep["I"] = subset_label_list(s.rep.I, datum.j.labels);
    j["rep"] = rep;
    Json gal;
    gal["rank"] = s.galois.rank;
    gal["twist"] = s.galois.twist;
    j["galois"] = gal;
    Json orbit;
    orbit["size"] = datum.orbits[s.orbit_id].size;
    orbit["length"] = datum.orbits[s.orbit_id].length;
    j["orbit"] = orbit;
    return j;
}

Json graded_sum_json(const GradedRepSum& sum, const LocalShtukaDatum& datum) {
    Json arr = Json::array();
    for (const auto& s : sum.summands) arr.push_back(summand_json(s, datum));
    return arr;
}

GradedRepSum parse_graded_sum(const Json& doc, const LocalShtukaDatum& datum) {
    GradedRepSum sum;
    for (const auto& item : doc) {
        CohomologySummand s;
        s.degree = item["degree"].get<int>();
        std::uint32_t mask = mask_from_labels(item["rep"]["I"], datum.j.labels);
        std::string kind = item["rep"]["kind"].get<std::string>();
        s.rep = (kind == "v") ? RepSymbol::v(mask, datum.full_subset()) : RepSymbol::ind(mask);
        s.galois.rank = item["galois"]["rank"].get<int>();
        s.galois.twist = item["galois"]["twist"].get<int>();
        int size = item["orbit"]["size"].get<int>();
        int length = item["orbit"]["length"].get<int>();
        s.orbit_id = -1;
        for (std::size_t oid = 0; oid < datum.orbits.size(); ++oid)
            if (datum.orbits[oid].size == size && datum.orbits[oid].length == length &&
                s.orbit_id < 0)
                s.orbit_id = static_cast<int>(oid);
        sum.summands.push_back(s);
    }
    return sum;
}

Json spectral_page_json(const SpectralPage& page, const LocalShtukaDatum& datum) {
    Json j;
    j["page"] = page.page;
    Json cells = Json::array();
    for (const auto& [pos, entries] : page.cells) {
        Json cell;
        cell["i"] = pos.first;
        cell["j"] = pos.second;
        Json list = Json::array();
        for (const auto& e : entries) {
            Json item;
            item["kind"] = (e.rep.kind == RepSymbol::SteinbergKind) ? "v" : "i";
            item["I"] = subset_label_list(e.rep.I, datum.j.labels);
            item["rank"] = e.galois.rank;
            item["twist"] = e.galois.twist;
            item["orbit"] = e.orbit_id;
            list.push_back(item);
        }
        cell["entries"] = list;
        cells.push_back(cell);
    }
    j["cells"] = cells;
    return j;
}

Json ext_answer_json(const ExtAnswer& answer) {
    Json j;
    j["value"] = ext_value_name(answer.value);
    if (answer.torsion_bound)
        j["torsion_bound"] = *answer.torsion_bound;
    j["trail"] = answer.trail;
    return j;
}

Json splitting_json(const SplittingReport& report, const LocalShtukaDatum& datum) {
    Json j;
    j["verdict"] = report.verdict == SplittingVerdict::ProvenByTheorem ? "ProvenByTheorem"
                                                                       : "ConjecturalForThisP";
    j["p"] = report.p;
    Json pairs = Json::array();
    for (const auto& pair : report.pairs) {
        Json pj;
        pj["source"] = pair.source;
        pj["orbit_a"] = pair.orbit_a;
        pj["orbit_b"] = pair.orbit_b;
        pj["I"] = subset_label_list(pair.I, datum.j.labels);
        pj["J"] = subset_label_list(pair.J, datum.j.labels);
        pj["ext"] = ext_answer_json(pair.answer);
        pairs.push_back(pj);
    }
    j["pairs"] = pairs;
    return j;
}

Json euler_json(const EulerReport& report, const LocalShtukaDatum& datum) {
    Json j;
    j["p"] = report.p;
    j["n"] = report.n;
    j["pass"] = report.pass;
    Json res = Json::array();
    for (const auto& [key, mult] : report.residual) {
        Json item;
        item["constituent"] = subset_label_list(key.first, datum.j.labels);
        item["twist"] = key.second;
        item["multiplicity"] = mult;
        res.push_back(item);
    }
    j["residual"] = res;
    return j;
}

Json make_report(const std::string& command, const LocalShtukaDatum& datum, Json parameters,
                 Json results) {
    Json r;
    Json engine;
    engine["name"] = kEngineName;
    engine["version"] = kEngineVersion;
    r["engine"] = engine;
    r["command"] = command;
    r["datum"] = datum_json(datum);
    r["parameters"] = std::move(parameters);
    r["results"] = std::move(results);
    return r;
}

std::string serialize_machine(const Json& report) { return report.dump(2) + "\n"; }

std::string rep_symbol_name(const RepSymbol& rep, const LocalShtukaDatum& datum,
                            bool continuous) {
    std::uint32_t full = datum.full_subset();
    std::string base;
    if (rep.kind == RepSymbol::IndKind) {
        base = (rep.I == full) ? "1" : ("i_" + subset_to_string(rep.I, datum.j.labels));
    } else if (rep.I == 0) {
        base = "St";
    } else {
        base = "v_" + subset_to_string(rep.I, datum.j.labels);
    }
    if (continuous && rep.kind == RepSymbol::SteinbergKind) base += "^cont";
    // Drinfeld data carry the classical special-representation labels.
    if (datum.preset_name.rfind("drinfeld:", 0) == 0 && !datum.j.labels.empty()) {
        int d = static_cast<int>(datum.j.labels.size());
        int size = std::popcount(rep.I);
        bool prefix = rep.I == ((size >= 32) ? 0xffffffffu : ((1u << size) - 1u));
        if (prefix) {
            int k = d - size;
            if (rep.kind == RepSymbol::SteinbergKind || rep.I == full)
                base += " (Sp_" + std::to_string(k) + ")";
        }
    }
    return base;
}

std::string render_graded_sum(const GradedRepSum& sum, const LocalShtukaDatum& datum,
                              bool continuous) {
    std::ostringstream out;
    if (sum.summands.empty()) {
        out << "  (empty)\n";
        return out.str();
    }
    out << "  degree  representation        galois(rank, twist)   orbit(size, length)\n";
    for (const auto& s : sum.summands) {
        std::ostringstream rep;
        rep << rep_symbol_name(s.rep, datum, continuous);
        out << "  " << std::setw(6) << s.degree << "  " << std::setw(20) << std::left << rep.str()
            << std::right << "  (" << s.galois.rank << ", " << std::setw(3) << s.galois.twist
            << ")             (" << datum.orbits[s.orbit_id].size << ", "
            << datum.orbits[s.orbit_id].length << ")\n";
    }
    return out.str();
}

std::string render_splitting(const SplittingReport& report, const LocalShtukaDatum& datum) {
    std::ostringstream out;
    out << "splitting hypotheses at p = " << report.p << ": "
        << (report.verdict == SplittingVerdict::ProvenByTheorem ? "ProvenByTheorem"
                                                                : "ConjecturalForThisP")
        << "\n";
    for (const auto& pair : report.pairs) {
        out << "  [" << pair.source << "] Ext^1(v_" << subset_to_string(pair.I, datum.j.labels)
            << ", v_" << subset_to_string(pair.J, datum.j.labels)
            << ") = " << ext_value_name(pair.answer.value);
        if (pair.answer.torsion_bound) out << " (torsion bound " << *pair.answer.torsion_bound << ")";
        out << "\n";
        for (const auto& t : pair.answer.trail) out << "      - " << t << "\n";
    }
    if (report.pairs.empty()) out << "  (no separating hypotheses required for this datum)\n";
    return out.str();
}

}  // namespace pdcoh
