#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"
#include "wreath/solver.hpp"

namespace wreath {

using Json = nlohmann::ordered_json;

inline Rat rat_from_str(const std::string& s) {
    try {
        Rat x(s);
        require(sgn(Rat(x.get_den())) != 0, "zero denominator");
        x.canonicalize();
        return x;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("malformed rational literal: " + s);
    }
}

/// A polynomial is a term list; each term is [e_q, e_t, e_u, e_T, e_p, e_S,
/// "coefficient"] in the canonical exponent order of the term map.
inline Json json_of_poly(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t = Json::array();
        for (int v = 0; v < kNumVars; ++v) t.push_back(m.e[v]);
        t.push_back(c.get_str());
        terms.push_back(std::move(t));
    }
    return terms;
}

inline Poly poly_from_json(const Json& j) {
    require(j.is_array(), "polynomial JSON must be an array of terms");
    Poly p;
    for (const Json& t : j) {
        require(t.is_array() && t.size() == kNumVars + 1, "malformed polynomial term");
        Exps m;
        for (int v = 0; v < kNumVars; ++v) m.e[v] = t[v].get<int16_t>();
        p.add_term(m, rat_from_str(t[kNumVars].get<std::string>()));
    }
    return p;
}

inline Json json_of_ratfunc(const RatFunc& f) {
    Json j;
    j["num"] = json_of_poly(f.num());
    j["den"] = json_of_poly(f.den());
    return j;
}

inline RatFunc ratfunc_from_json(const Json& j) {
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline Json json_of_partition(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
    require(j.is_array(), "partition JSON must be an array");
    return Partition(j.get<std::vector<long>>());
}

inline Json json_of_multipartition(const MultiPartition& mp) {
    Json j = Json::array();
    for (const Partition& p : mp) j.push_back(json_of_partition(p));
    return j;
}

inline MultiPartition multipartition_from_json(const Json& j) {
    require(j.is_array(), "multipartition JSON must be an array");
    MultiPartition mp;
    for (const Json& p : j) mp.push_back(partition_from_json(p));
    return mp;
}

/// {r, cap, basis, terms: [{index, coeff}]} with terms in canonical index
/// order.  basis selects the coordinates the term list is written in.
inline Json json_of_symfunc(const SymFunc<RatFunc>& f, const std::string& basis = "powersum",
                            long cap = -1) {
    require(basis == "powersum" || basis == "schur", "basis must be powersum or schur");
    Json j;
    j["r"] = f.r;
    j["cap"] = cap < 0 ? f.max_degree() : cap;
    j["basis"] = basis;
    Json terms = Json::array();
    auto emit = [&terms](const MultiPartition& mp, const RatFunc& c) {
        Json t;
        t["index"] = json_of_multipartition(mp);
        t["coeff"] = json_of_ratfunc(c);
        terms.push_back(std::move(t));
    };
    if (basis == "schur") {
        const ExactBackend bk;
        for (const auto& [mp, c] : powersum_to_schur(bk, f)) emit(mp, c);
    } else {
        for (const auto& [mp, c] : f.terms) emit(mp, c);
    }
    j["terms"] = std::move(terms);
    return j;
}

inline SymFunc<RatFunc> symfunc_from_json(const Json& j) {
    const ExactBackend bk;
    long r = j.at("r").get<long>();
    std::string basis = j.at("basis").get<std::string>();
    require(basis == "powersum" || basis == "schur", "basis must be powersum or schur");
    std::map<MultiPartition, RatFunc> coeffs;
    for (const Json& t : j.at("terms")) {
        MultiPartition mp = multipartition_from_json(t.at("index"));
        require(static_cast<long>(mp.size()) == r, "index rank mismatch");
        coeffs[mp] = ratfunc_from_json(t.at("coeff"));
    }
    if (basis == "schur") return schur_to_powersum(bk, coeffs, r);
    SymFunc<RatFunc> f(r);
    for (auto& [mp, c] : coeffs) sym_add_term(bk, f, mp, c);
    return f;
}

inline Json json_of_table(const WreathBasisTable& tab) {
    Json j;
    j["version"] = kSolverVersion;
    j["r"] = tab.r;
    j["core"] = json_of_partition(tab.core);
    j["n"] = tab.n;
    Json entries = Json::array();
    for (const auto& [lam, h] : tab.h) {
        Json e;
        e["label"] = json_of_partition(lam);
        e["h"] = json_of_symfunc(h);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

/// Rebuilds a table from its JSON form; nullopt when the key or format
/// version does not match (the caller falls back to solving).
inline std::optional<WreathBasisTable> table_from_json(const Json& j, long r,
                                                       const Partition& core, long n) {
    if (!j.is_object() || !j.contains("version")) return std::nullopt;
    if (j["version"].get<long>() != kSolverVersion) return std::nullopt;
    if (j["r"].get<long>() != r || j["n"].get<long>() != n) return std::nullopt;
    if (partition_from_json(j["core"]) != core) return std::nullopt;
    WreathBasisTable tab;
    tab.r = r;
    tab.core = core;
    tab.n = n;
    tab.quotients = multipartitions_of(n, r);
    for (const MultiPartition& q : tab.quotients)
        tab.labels.push_back(from_core_quotient(core, q, r));
    for (const Json& e : j["entries"]) {
        Partition lam = partition_from_json(e.at("label"));
        tab.h[lam] = symfunc_from_json(e.at("h"));
    }
    for (const Partition& lam : tab.labels)
        if (!tab.h.count(lam)) return std::nullopt;
    if (tab.h.size() != tab.labels.size()) return std::nullopt;
    return tab;
}

inline std::optional<std::string> env_cache_dir() {
    const char* v = std::getenv("WREATH_CACHE_DIR");
    if (!v || !*v) return std::nullopt;
    return std::string(v);
}

inline std::string table_cache_filename(long r, const Partition& core, long n) {
    std::string tag = core.empty() ? "empty" : "";
    for (std::size_t i = 0; i < core.parts().size(); ++i) {
        if (i) tag += ".";
        tag += std::to_string(core.parts()[i]);
    }
    return "htable_r" + std::to_string(r) + "_c" + tag + "_n" + std::to_string(n) + "_v" +
           std::to_string(kSolverVersion) + ".json";
}

/// solve_basis with a JSON disk cache.  A hit with matching key and version
/// short-circuits the solver; anything unreadable is recomputed and
/// rewritten.  Write failures are non-fatal (the solve still returns).
inline WreathBasisTable solve_basis_cached(long r, const Partition& core, long n,
                                           std::optional<std::string> dir = env_cache_dir()) {
    namespace fs = std::filesystem;
    fs::path path;
    if (dir) {
        path = fs::path(*dir) / table_cache_filename(r, core, n);
        std::ifstream in(path);
        if (in) {
            Json j = Json::parse(in, nullptr, false);
            if (!j.is_discarded())
                if (auto tab = table_from_json(j, r, core, n)) return *tab;
        }
    }
    WreathBasisTable tab = solve_basis(r, core, n);
    if (dir) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        fs::path tmp = path;
        tmp += ".tmp";
        std::ofstream out(tmp);
        if (out) {
            out << json_of_table(tab).dump(1) << "\n";
            out.close();
            if (out.good()) fs::rename(tmp, path, ec);
            if (ec) fs::remove(tmp, ec);
        }
    }
    return tab;
}

}  // namespace wreath
