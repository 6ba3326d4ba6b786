#pragma once

// Command adapters behind tools/normed_forms: each builds a JSON record (or CSV) from library
// calls and returns the process exit code. Integers are written as decimal strings.

#include "normed_forms/classify.hpp"
#include "normed_forms/lattices.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace nforms::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kInconclusive = 3, kIoError = 4 };

inline json int_json(const Int& x) { return x.get_str(); }
inline Int int_from(const json& j) { return parse_int(j.get<std::string>()); }

inline json form_json(const Form& f) { return {{"m", int_json(f.m)}, {"k", int_json(f.k)}, {"n", int_json(f.n)}}; }
inline Form form_from(const json& j) { return {int_from(j.at("m")), int_from(j.at("k")), int_from(j.at("n"))}; }

inline json params_json(const PlusParams& P) {
    return {{"m", int_json(P.m)}, {"k", int_json(P.k)}, {"n", int_json(P.n)}, {"p", int_json(P.p)}, {"q", int_json(P.q)}};
}
inline PlusParams params_from(const json& j) {
    return {int_from(j.at("m")), int_from(j.at("k")), int_from(j.at("n")), int_from(j.at("p")), int_from(j.at("q"))};
}

inline json quadruple_json(const Quadruple& Q) {
    return {{"a", int_json(Q.a)}, {"b", int_json(Q.b)}, {"c", int_json(Q.c)}, {"d", int_json(Q.d)}};
}
inline Quadruple quadruple_from(const json& j) {
    return {int_from(j.at("a")), int_from(j.at("b")), int_from(j.at("c")), int_from(j.at("d"))};
}

inline json vec_json(const Vec2& v) { return json::array({int_json(v.x1), int_json(v.x2)}); }
inline json mat_json(const Mat2& a) {
    return json::array({json::array({int_json(a.a11), int_json(a.a12)}), json::array({int_json(a.a21), int_json(a.a22)})});
}

inline Decision decision_from(const json& j) {
    const auto s = j.get<std::string>();
    if (s == "decided") return Decision::Decided;
    if (s == "bounded_search_only") return Decision::BoundedSearchOnly;
    throw PreconditionError("unknown decision quality '" + s + "'");
}

template <class T, class ToJson>
json verdict_json(const Verdict<T>& v, ToJson&& to) {
    return {{"admitted", v.admitted()}, {"witness", v.witness ? to(*v.witness) : json(nullptr)}, {"quality", to_string(v.quality)}};
}

template <class T, class FromJson>
Verdict<T> verdict_from(const json& j, FromJson&& from) {
    Verdict<T> v;
    if (!j.at("witness").is_null()) v.witness = from(j.at("witness"));
    v.quality = decision_from(j.at("quality"));
    return v;
}

/// The classification record: form, discriminant, definiteness and one verdict per type.
inline json report_json(const ClassificationReport& r) {
    return {{"form", form_json(r.form)},
            {"discriminant", int_json(discriminant(r.form))},
            {"definiteness", to_string(classify_definiteness(r.form))},
            {"types",
             {{"(+,+)", verdict_json(r.pp, params_json)},
              {"(-,+)", verdict_json(r.mp, params_json)},
              {"(+,-)", verdict_json(r.pm, params_json)},
              {"(-,-)", verdict_json(r.mm, quadruple_json)}}}};
}

inline ClassificationReport report_from(const json& j) {
    ClassificationReport r;
    r.form = form_from(j.at("form"));
    const json& t = j.at("types");
    r.pp = verdict_from<PlusParams>(t.at("(+,+)"), params_from);
    r.mp = verdict_from<PlusParams>(t.at("(-,+)"), params_from);
    r.pm = verdict_from<PlusParams>(t.at("(+,-)"), params_from);
    r.mm = verdict_from<Quadruple>(t.at("(-,-)"), quadruple_from);
    return r;
}

inline bool any_bounded(const ClassificationReport& r) {
    return r.pp.quality == Decision::BoundedSearchOnly || r.mm.quality == Decision::BoundedSearchOnly;
}

inline json semigroup_json(const SemigroupReport& s) {
    json ce = nullptr;
    if (s.counterexample) {
        ce = {{"x", vec_json(s.counterexample->x)}, {"y", vec_json(s.counterexample->y)}, {"product", int_json(s.counterexample->product)}};
    }
    return {{"values_sampled", s.values_sampled}, {"products_checked", s.products_checked}, {"counterexample", ce}, {"exact", s.exact}};
}

inline void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

inline int cmd_form_info(const Form& f, std::ostream& out) {
    const Definiteness def = classify_definiteness(f);
    json j = {{"form", form_json(f)}, {"discriminant", int_json(discriminant(f))}, {"definiteness", to_string(def)}};
    j["degenerate"] = def == Definiteness::Degenerate;
    if (f.is_zero()) {
        j["content"] = nullptr;
        j["primitive_part"] = nullptr;
    } else {
        const auto split = content_and_primitive(f);
        j["content"] = int_json(split.content);
        j["primitive_part"] = form_json(split.primitive);
    }
    j["reduced"] = nullptr;
    j["is_reduced"] = is_reduced(f);
    j["principal_form"] = nullptr;
    j["is_principal_class"] = nullptr;
    if (def != Definiteness::Degenerate) j["principal_form"] = form_json(principal_form(discriminant(f)));
    if (def == Definiteness::PositiveDefinite && is_primitive(f)) {
        const Form red = reduce(f).form;
        j["reduced"] = form_json(red);
        j["is_principal_class"] = red == principal_form(discriminant(f));
    }
    emit(out, j);
    return kOk;
}

struct ClassifyOptions {
    Int box = 100;
    bool strict = false;
    bool timing = false;
};

inline int cmd_classify(const Form& f, const ClassifyOptions& opt, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const ClassificationReport rep = full_classification(f, opt.box);
    json j = report_json(rep);
    if (opt.timing) {
        j["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    emit(out, j);
    return opt.strict && any_bounded(rep) ? kInconclusive : kOk;
}

/// %.12g with "-0" folded to "0".
inline std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s(buf);
    return s == "-0" ? "0" : s;
}

struct CurveOptions {
    int samples = 200;
    double theta_min = 0.0;
    double theta_max = 2 * std::numbers::pi;
    Branch branch = Branch::Plus;
};

/// theta_i = theta_min + i (theta_max - theta_min)/(N - 1); a single sample sits at theta_min.
inline std::vector<double> theta_grid(const CurveOptions& opt) {
    if (opt.samples < 0) throw PreconditionError("curve: --samples must be non-negative");
    std::vector<double> t(static_cast<std::size_t>(opt.samples));
    for (int i = 0; i < opt.samples; ++i) {
        t[i] = opt.samples == 1 ? opt.theta_min : opt.theta_min + i * (opt.theta_max - opt.theta_min) / (opt.samples - 1);
    }
    return t;
}

inline int cmd_curve(const Form& f, const CurveOptions& opt, std::ostream& out) {
    const auto points = curve_sample(f, theta_grid(opt), opt.branch);
    if (classify_definiteness(f) == Definiteness::Indefinite) out << "# hyperbolic branch: s = sinh, c = cosh\n";
    out << "theta,a,b,c,d\n";
    for (const auto& p : points) {
        out << format_real(p.theta) << ',' << format_real(p.a) << ',' << format_real(p.b) << ',' << format_real(p.c) << ','
            << format_real(p.d) << '\n';
    }
    return kOk;
}

inline int cmd_verify(const Pairing& s, const Form& f, std::ostream& out) {
    const bool normed = is_normed(s, f);
    json j = {{"pairing", {{"A1", mat_json(s.a1)}, {"A2", mat_json(s.a2)}}}, {"form", form_json(f)}, {"normed", normed}, {"type", nullptr}};
    if (normed && !is_degenerate(f)) j["type"] = to_string(type_of(s, f));
    emit(out, j);
    return normed ? kOk : kNegative;
}

inline int cmd_probe(const Form& f, const Int& sample_bound, const Int& search_bound, std::ostream& out) {
    json j = {{"form", form_json(f)}, {"sample_bound", int_json(sample_bound)}, {"search_bound", int_json(search_bound)}};
    j["semigroup"] = semigroup_json(semigroup_probe(f, sample_bound, search_bound));
    emit(out, j);
    return kOk;
}

inline json elem_json(const AElem& z) { return {{"u", z.u.get_str()}, {"v", z.v.get_str()}}; }

inline int cmd_lattice(const Form& f, const Int& height_bound, std::ostream& out) {
    json j = {{"form", form_json(f)}, {"discriminant", int_json(discriminant(f))}, {"found", false}};
    const auto emb = embed_form(f, height_bound);
    if (emb) {
        const Lattice& L = emb->lattice;
        j["found"] = true;
        j["basis"] = json::array({elem_json(emb->e1), elem_json(emb->e2)});
        j["canonical"] = {{"r", L.r().get_str()}, {"zeta", elem_json(L.zeta())}};
        j["lattice_form"] = form_json(lattice_to_form(L));
        j["lattice_discriminant"] = discriminant(L).get_str();
        json st = json::object();
        for (int k = 1; k <= 4; ++k) st["sigma" + std::to_string(k)] = stable_under(L, k);
        j["stable"] = st;
        j["ideal_of"] = nullptr;
        const Rat dstar = discriminant(L) / (L.r() * L.r());
        if (is_integer(dstar) && is_valid_discriminant(to_int(dstar))) {
            j["ideal_of"] = {{"discriminant", to_int(dstar).get_str()}, {"is_ideal", is_ideal_of(L, to_int(dstar))}};
        }
        j["principal"] = nullptr;
        j["cube_principal"] = nullptr;
        if (L.delta() < 0) {
            j["principal"] = is_principal(L);
            j["cube_principal"] = cube_is_principal(L);
        }
    }
    emit(out, j);
    return kOk;
}

enum class CatalogFormat { Jsonl, Csv };

struct CatalogOptions {
    Int dmin;
    Int dmax;
    CatalogFormat format = CatalogFormat::Jsonl;
    std::optional<Int> box;   ///< coefficient box, required for positive ranges
    Int search = 100;         ///< bound for indefinite searches
    Int sample = 3;           ///< semigroup probe sample box
    std::string out_path;     ///< empty: write to the given stream
    unsigned threads = 0;     ///< 0: NORMED_FORMS_THREADS, else hardware concurrency
};

/// Forms of the catalog in output order: discriminants ascending, then reduced_forms order for
/// negative ranges or (m, k, n) lexicographic within the box for positive ranges.
inline std::vector<Form> catalog_forms(const CatalogOptions& opt) {
    std::vector<Form> forms;
    if (opt.dmin > opt.dmax) return forms;
    if (opt.dmax < 0) {
        for (Int d = opt.dmin; d <= opt.dmax; ++d) {
            auto fs = reduced_forms(d);
            forms.insert(forms.end(), fs.begin(), fs.end());
        }
        return forms;
    }
    if (opt.dmin <= 0) throw PreconditionError("catalog: the range must be entirely negative or entirely positive");
    if (!opt.box) throw PreconditionError("catalog: positive discriminant ranges need --box");
    const Int& B = *opt.box;
    for (Int d = opt.dmin; d <= opt.dmax; ++d) {
        if (!is_valid_discriminant(d)) continue;
        for (Int m = -B; m <= B; ++m)
            for (Int k = -B; k <= B; ++k) {
                if (m == 0) continue;
                const Int num = k * k - d;
                if (!divides(4 * m, num)) continue;
                const Int n = num / (4 * m);
                if (abs(n) > B) continue;
                const Form f{m, k, n};
                if (is_primitive(f)) forms.push_back(f);
            }
    }
    return forms;
}

inline unsigned catalog_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NORMED_FORMS_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

inline json catalog_record(const Form& f, const CatalogOptions& opt) {
    const ClassificationReport rep = full_classification(f, opt.search);
    json j = report_json(rep);
    j["semigroup"] = semigroup_json(semigroup_probe(f, opt.sample, opt.search));
    j["order3"] = rep.mm.witness ? json(to_string(order3_verdict(*rep.mm.witness))) : json(nullptr);
    return j;
}

inline const char* kCatalogCsvHeader =
    "discriminant,m,k,n,definiteness,plus_types,plus_witness,plus_quality,minus_minus,minus_minus_witness,"
    "minus_minus_quality,order3,semigroup_counterexample,semigroup_exact";

inline std::string catalog_csv_row(const json& j) {
    auto ints = [](const json& obj, std::initializer_list<const char*> keys) {
        std::string s;
        for (const char* k : keys) s += (s.empty() ? "" : " ") + obj.at(k).get<std::string>();
        return s;
    };
    const json& plus = j.at("types").at("(+,+)");
    const json& mm = j.at("types").at("(-,-)");
    const json& sg = j.at("semigroup");
    std::ostringstream os;
    const json& form = j.at("form");
    os << j.at("discriminant").get<std::string>() << ',' << form.at("m").get<std::string>() << ','
       << form.at("k").get<std::string>() << ',' << form.at("n").get<std::string>() << ','
       << j.at("definiteness").get<std::string>() << ',' << (plus.at("admitted").get<bool>() ? "yes" : "no") << ','
       << (plus.at("witness").is_null() ? "" : ints(plus.at("witness"), {"m", "k", "n", "p", "q"})) << ','
       << plus.at("quality").get<std::string>() << ',' << (mm.at("admitted").get<bool>() ? "yes" : "no") << ','
       << (mm.at("witness").is_null() ? "" : ints(mm.at("witness"), {"a", "b", "c", "d"})) << ','
       << mm.at("quality").get<std::string>() << ',' << (j.at("order3").is_null() ? "" : j.at("order3").get<std::string>()) << ',';
    if (!sg.at("counterexample").is_null()) os << sg.at("counterexample").at("product").get<std::string>();
    os << ',' << (sg.at("exact").get<bool>() ? "yes" : "no");
    return os.str();
}

/// Classifies every catalog form on a worker pool; output order is the catalog order.
inline int cmd_catalog(const CatalogOptions& opt, std::ostream& out) {
    const std::vector<Form> forms = catalog_forms(opt);
    std::vector<std::string> lines(forms.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < forms.size(); i = next++) {
            try {
                const json j = catalog_record(forms[i], opt);
                lines[i] = opt.format == CatalogFormat::Jsonl ? j.dump() : catalog_csv_row(j);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned n_threads = std::min<std::size_t>(catalog_threads(opt.threads), std::max<std::size_t>(forms.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    std::ofstream file;
    std::ostream* dest = &out;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path, std::ios::binary | std::ios::trunc);
        if (!file) return kIoError;
        dest = &file;
    }
    if (opt.format == CatalogFormat::Csv) *dest << kCatalogCsvHeader << '\n';
    for (const auto& line : lines) *dest << line << '\n';
    dest->flush();
    if (!*dest) return kIoError;
    return kOk;
}

} // namespace nforms::cli
