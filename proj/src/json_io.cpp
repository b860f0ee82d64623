#include "seqlab/json_io.hpp"

#include "seqlab/errors.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace seqlab {

using nlohmann::json;

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational: expected a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

json ring_to_json(const RingElem& e) {
    json out = json::array();
    const auto& t = e.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        json term;
        term["xexp"] = it->first.xexp;
        term["lexp"] = it->first.lexp;
        term["num"] = it->second.num().get_str();
        term["den"] = it->second.den().get_str();
        out.push_back(std::move(term));
    }
    return out;
}

RingElem ring_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("ring element: expected a term array");
    RingElem e;
    for (const json& term : j) {
        long xexp = term.at("xexp").get<long>();
        long lexp = term.at("lexp").get<long>();
        mpz_class num(term.at("num").get<std::string>());
        mpz_class den(term.at("den").get<std::string>());
        e += RingElem::monomial(xexp, lexp, Rational(num, den));
    }
    return e;
}

json rowvec_to_json(const RowVec& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(ring_to_json(v[i]));
    return out;
}

RowVec rowvec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("row vector: expected an array");
    std::vector<RingElem> e;
    e.reserve(j.size());
    for (const json& x : j) e.push_back(ring_from_json(x));
    return RowVec(std::move(e));
}

json coeff_table_to_json(const CoeffTable& t) {
    json out;
    out["n"] = t.n;
    json g = json::array();
    for (const RingElem& e : t.g) g.push_back(ring_to_json(e));
    out["g"] = std::move(g);
    return out;
}

CoeffTable coeff_table_from_json(const json& j) {
    CoeffTable t;
    t.n = j.at("n").get<int>();
    for (const json& e : j.at("g")) t.g.push_back(ring_from_json(e));
    return t;
}

json kappa_to_json(const KappaTable& t) {
    json out;
    out["n"] = t.n;
    out["source"] = t.source;
    json counts = json::array();
    for (const mpz_class& c : t.counts) counts.push_back(c.get_str());
    out["counts"] = std::move(counts);
    return out;
}

KappaTable kappa_from_json(const json& j) {
    KappaTable t;
    t.n = j.at("n").get<int>();
    t.source = j.at("source").get<std::string>();
    for (const json& c : j.at("counts")) t.counts.emplace_back(c.get<std::string>());
    return t;
}

json genpoly_to_json(const GenPolyReport& r) {
    json out;
    out["k"] = r.k;
    out["ordering"] = ordering_name(r.ordering);
    out["formula_side"] = ring_to_json(r.formula_side);
    out["formula_text"] = r.formula_side.text();
    out["vector_side"] = ring_to_json(r.vector_side);
    out["vector_text"] = r.vector_side.text();
    out["difference"] = ring_to_json(r.difference);
    out["difference_text"] = r.difference.text();
    out["equal"] = r.equal;
    return out;
}

json eq2_to_json(const Eq2Report& r) {
    json out;
    out["level"] = r.level;
    out["sum"] = ring_to_json(r.sum);
    out["sum_text"] = r.sum.text();
    out["matches_level_minus_one"] = r.matches_level_minus_one;
    out["matches_level"] = r.matches_level;
    return out;
}

json kappa_reconcile_to_json(const KappaReconcileReport& r) {
    json out;
    out["n_max"] = r.n_max;
    json rows = json::array();
    for (const KappaRowComparison& row : r.rows) {
        json jr;
        jr["n"] = row.n;
        jr["direct"] = kappa_to_json(row.direct)["counts"];
        jr["printed"] = kappa_to_json(row.printed)["counts"];
        jr["agree"] = row.agree;
        jr["first_mismatch_k"] = row.first_mismatch_k;
        rows.push_back(std::move(jr));
    }
    out["rows"] = std::move(rows);
    json cands = json::array();
    for (const KappaCandidateVerdict& v : r.candidates) {
        json jc;
        jc["name"] = v.name;
        jc["matches_all"] = v.matches_all;
        jc["first_failure_n"] = v.first_failure_n;
        cands.push_back(std::move(jc));
    }
    out["candidates"] = std::move(cands);
    return out;
}

json hypothesis_to_json(const HypothesisReport& r) {
    json out;
    out["n_max"] = r.n_max;
    out["lambda"] = r.lambda_value ? r.lambda_value->str() : std::string("symbolic");
    json entries = json::array();
    for (const HypothesisEntry& e : r.entries) {
        json je;
        je["n"] = e.n;
        je["rule"] = e.rule;
        je["holds"] = e.holds;
        entries.push_back(std::move(je));
    }
    out["entries"] = std::move(entries);
    return out;
}

bool validate_hypothesis_json(const json& j, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!j.is_object()) return fail("report is not an object");
    if (!j.contains("n_max") || !j["n_max"].is_number_integer() || j["n_max"].get<int>() < 1)
        return fail("n_max missing or not a positive integer");
    if (!j.contains("lambda") || !j["lambda"].is_string())
        return fail("lambda missing or not a string");
    if (!j.contains("entries") || !j["entries"].is_array())
        return fail("entries missing or not an array");
    int n_max = j["n_max"].get<int>();
    if (static_cast<int>(j["entries"].size()) != n_max)
        return fail("entries length does not equal n_max");
    int expect = 1;
    for (const json& e : j["entries"]) {
        if (!e.is_object()) return fail("entry is not an object");
        if (!e.contains("n") || !e["n"].is_number_integer() || e["n"].get<int>() != expect)
            return fail("entry n values must run 1.." + std::to_string(n_max) + " in order");
        if (!e.contains("rule") || !e["rule"].is_string() || e["rule"].get<std::string>().empty())
            return fail("entry rule missing or empty");
        if (!e.contains("holds") || !e["holds"].is_boolean())
            return fail("entry holds missing or not a boolean");
        ++expect;
    }
    return true;
}

std::string csv_field(const std::string& s) {
    bool quote = s.find_first_of(",\"\r\n") != std::string::npos;
    if (!quote) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_record(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += "\r\n";
    return out;
}

std::vector<std::vector<std::string>> csv_parse(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    std::size_t i = 0;
    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
    };
    while (i < text.size()) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && !field_started) {
            in_quotes = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            end_row();
            ++i;
        } else if (c == '\n') { // tolerate bare LF on input
            end_row();
        } else {
            field += c;
            field_started = true;
        }
        ++i;
    }
    if (in_quotes) throw std::invalid_argument("csv: unterminated quoted field");
    if (field_started || !row.empty()) end_row();
    return rows;
}

std::string coeff_table_to_csv(const CoeffTable& t) {
    std::string out = csv_record({"n", "k", "xexp", "lexp", "num", "den"});
    for (std::size_t idx = 0; idx < t.g.size(); ++idx) {
        std::string n = std::to_string(t.n);
        std::string k = std::to_string(idx + 1);
        const auto& terms = t.g[idx].terms();
        if (terms.empty()) {
            out += csv_record({n, k, "", "", "", ""});
            continue;
        }
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
            out += csv_record({n, k, std::to_string(it->first.xexp),
                               std::to_string(it->first.lexp), it->second.num().get_str(),
                               it->second.den().get_str()});
    }
    return out;
}

CoeffTable coeff_table_from_csv(const std::string& text) {
    auto rows = csv_parse(text);
    if (rows.empty() || rows[0] != std::vector<std::string>{"n", "k", "xexp", "lexp", "num", "den"})
        throw std::invalid_argument("coeff csv: bad header");
    CoeffTable t;
    t.n = -1;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 6) throw std::invalid_argument("coeff csv: bad field count");
        int n = std::stoi(row[0]);
        if (n < 0 || n > 20) throw std::invalid_argument("coeff csv: n out of range");
        if (t.n == -1) {
            t.n = n;
            t.g.assign(std::size_t{1} << n, RingElem());
        } else if (t.n != n) {
            throw std::invalid_argument("coeff csv: mixed n values");
        }
        std::size_t k = std::stoul(row[1]);
        if (k < 1 || k > t.g.size()) throw std::invalid_argument("coeff csv: k out of range");
        if (row[2].empty()) continue; // zero-coefficient marker row
        t.g[k - 1] += RingElem::monomial(std::stol(row[2]), std::stol(row[3]),
                                         Rational(mpz_class(row[4]), mpz_class(row[5])));
    }
    if (t.n == -1) throw std::invalid_argument("coeff csv: no data rows");
    return t;
}

std::string kappa_rows_to_csv(const std::vector<KappaTable>& tables) {
    std::size_t width = 0;
    for (const KappaTable& t : tables)
        if (t.counts.size() > width) width = t.counts.size();
    std::vector<std::string> header{"n", "source"};
    for (std::size_t k = 0; k < width; ++k) header.push_back("k" + std::to_string(k));
    std::string out = csv_record(header);
    for (const KappaTable& t : tables) {
        std::vector<std::string> row{std::to_string(t.n), t.source};
        for (std::size_t k = 0; k < width; ++k)
            row.push_back(k < t.counts.size() ? t.counts[k].get_str() : std::string());
        out += csv_record(row);
    }
    return out;
}

std::vector<KappaTable> kappa_rows_from_csv(const std::string& text) {
    auto rows = csv_parse(text);
    if (rows.empty() || rows[0].size() < 2 || rows[0][0] != "n" || rows[0][1] != "source")
        throw std::invalid_argument("kappa csv: bad header");
    std::vector<KappaTable> tables;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() < 2) throw std::invalid_argument("kappa csv: bad field count");
        KappaTable t;
        t.n = std::stoi(row[0]);
        t.source = row[1];
        for (std::size_t i = 2; i < row.size(); ++i) {
            if (row[i].empty()) break;
            t.counts.emplace_back(row[i]);
        }
        tables.push_back(std::move(t));
    }
    return tables;
}

namespace {

std::vector<RingElem> seq_from_coeff_map(const json& j, const char* name, long n_need,
                                         bool required) {
    std::vector<RingElem> out;
    if (!j.contains(name)) {
        if (required)
            throw std::invalid_argument(std::string("coeff file: missing \"") + name + "\"");
        return out;
    }
    const json& m = j.at(name);
    if (!m.is_object())
        throw std::invalid_argument(std::string("coeff file: \"") + name + "\" must be an object");
    for (long idx = 3; idx <= n_need; ++idx) {
        std::string key = std::to_string(idx);
        if (!m.contains(key)) {
            if (required)
                throw std::invalid_argument(std::string("coeff file: \"") + name +
                                            "\" lacks index " + key);
            break;
        }
        out.push_back(RingElem(rational_from_json(m.at(key))));
    }
    return out;
}

} // namespace

Order2Problem order2_from_coeff_json(const json& j, long n_need) {
    if (!j.is_object()) throw std::invalid_argument("coeff file: expected an object");
    if (!j.contains("x1") || !j.contains("x2"))
        throw std::invalid_argument("coeff file: \"x1\" and \"x2\" are required");
    Order2Problem p;
    p.x1 = RingElem(rational_from_json(j.at("x1")));
    p.x2 = RingElem(rational_from_json(j.at("x2")));
    p.a = seq_from_coeff_map(j, "a", n_need, true);
    p.b = seq_from_coeff_map(j, "b", n_need, true);
    p.c = seq_from_coeff_map(j, "c", n_need, false);
    return p;
}

namespace {

std::string constant_str(const RingElem& e) {
    return e.is_zero() ? std::string("0") : e.constant_value().str();
}

json coeff_map_json(const std::vector<RingElem>& seq) {
    json m = json::object();
    for (std::size_t i = 0; i < seq.size(); ++i)
        m[std::to_string(i + 3)] = constant_str(seq[i]);
    return m;
}

} // namespace

json order2_to_coeff_json(const Order2Problem& p) {
    json out;
    out["x1"] = constant_str(p.x1);
    out["x2"] = constant_str(p.x2);
    out["a"] = coeff_map_json(p.a);
    out["b"] = coeff_map_json(p.b);
    if (!p.homogeneous()) out["c"] = coeff_map_json(p.c);
    return out;
}

json order2_instance_json(const Order2Problem& p) {
    json out;
    out["x1"] = p.x1.text();
    out["x2"] = p.x2.text();
    json a = json::object(), b = json::object(), c = json::object();
    for (std::size_t i = 0; i < p.a.size(); ++i) a[std::to_string(i + 3)] = p.a[i].text();
    for (std::size_t i = 0; i < p.b.size(); ++i) b[std::to_string(i + 3)] = p.b[i].text();
    for (std::size_t i = 0; i < p.c.size(); ++i) c[std::to_string(i + 3)] = p.c[i].text();
    out["a"] = std::move(a);
    out["b"] = std::move(b);
    if (!p.c.empty()) out["c"] = std::move(c);
    return out;
}

json full_history_instance_json(const FullHistoryProblem& p) {
    json out;
    out["w0"] = p.w0.text();
    json a = json::object();
    for (std::size_t m = 0; m < p.a.size(); ++m) {
        json row = json::array();
        for (const RingElem& e : p.a[m]) row.push_back(e.text());
        a[std::to_string(m + 1)] = std::move(row);
    }
    out["a"] = std::move(a);
    if (!p.c.empty()) {
        json c = json::object();
        for (std::size_t m = 0; m < p.c.size(); ++m) c[std::to_string(m + 1)] = p.c[m].text();
        out["c"] = std::move(c);
    }
    return out;
}

json affine_instance_json(const AffineVectorProblem& p) {
    auto vec_text = [](const RowVec& v) {
        json arr = json::array();
        for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(v[i].text());
        return arr;
    };
    json out;
    out["x1"] = vec_text(p.x1);
    json b = json::array(), a = json::array(), c = json::array();
    for (const BitWord& w : p.b) b.push_back(w.str01());
    for (const RowVec& v : p.a) a.push_back(vec_text(v));
    for (const RowVec& v : p.c) c.push_back(vec_text(v));
    out["b"] = std::move(b);
    out["a"] = std::move(a);
    out["c"] = std::move(c);
    return out;
}

} // namespace seqlab
