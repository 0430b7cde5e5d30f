#include "kbchroma/catalog_json.hpp"

#include <json.hpp>

#include <stdexcept>

namespace kbchroma {

namespace {

using json = nlohmann::ordered_json;

json poly_to_json(const RationalPoly& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).get_str());
    return arr;
}

RationalPoly poly_from_json(const json& arr) {
    std::vector<Rational> c;
    for (const auto& s : arr) {
        Rational r(s.get<std::string>(), 10);  // base fixed: no octal surprises
        r.canonicalize();
        c.push_back(std::move(r));
    }
    return RationalPoly(std::move(c));
}

// The f basis is triangular in degree (f_i has degree b-i, leading 1), so a
// polynomial of degree b-d has unique integer weights over f_d..f_b.
FBasisVector weights_from_poly(int b, int d, const RationalPoly& p) {
    FBasisVector v{b, d, std::vector<long>(size_t(b - d + 1), 0)};
    RationalPoly rest = p;
    for (int i = d; i <= b; ++i) {
        const Rational& lead = rest.coeff(b - i);
        if (lead == 0) continue;
        if (!is_integer(lead))
            throw std::invalid_argument("catalog json: eigenvalue is not an integer f-combination");
        v.weights[size_t(i - d)] = lead.get_num().get_si();
        rest -= f_basis(b, i) * lead;
    }
    if (!rest.is_zero())
        throw std::invalid_argument("catalog json: eigenvalue does not lie in the f basis span");
    while (!v.weights.empty() && v.weights.back() == 0) v.weights.pop_back();
    return v;
}

}  // namespace

std::string dump_catalog_json(const Catalog& cat, int indent) {
    json root;
    root["b"] = cat.family.b;
    root["boundary"] = to_string(cat.family.boundary);
    json entries = json::array();
    for (const auto& e : cat.entries) {
        json je;
        je["d"] = e.d;
        je["j"] = e.j;
        json parts = json::array();
        json cprimes = json::array();
        for (const auto& t : e.partitions) {
            parts.push_back(t.x);
            cprimes.push_back(t.cprime);
        }
        je["partitions"] = parts;
        je["cprime"] = cprimes;
        je["lambda_coeffs"] = poly_to_json(e.lambda_poly);
        je["coeff_poly_coeffs"] = poly_to_json(e.coeff_poly);
        je["contributing"] = e.contributing;
        entries.push_back(std::move(je));
    }
    root["entries"] = std::move(entries);
    return root.dump(indent) + "\n";
}

Catalog parse_catalog_json(const std::string& text) {
    json root = json::parse(text);
    Catalog cat;
    cat.family.b = root.at("b").get<int>();
    cat.family.boundary = boundary_from_string(root.at("boundary").get<std::string>());
    cat.family.chromatic_number = cat.family.b;
    cat.family.per_d_counts.assign(size_t(cat.family.b + 1), 0);

    for (const auto& je : root.at("entries")) {
        SpectrumEntry e;
        e.d = je.at("d").get<int>();
        e.j = je.at("j").get<int>();
        e.lambda_poly = poly_from_json(je.at("lambda_coeffs"));
        e.coeff_poly = poly_from_json(je.at("coeff_poly_coeffs"));
        e.lambda = weights_from_poly(cat.family.b, e.d, e.lambda_poly);
        e.contributing = je.at("contributing").get<bool>();
        const auto& parts = je.at("partitions");
        const auto& cps = je.at("cprime");
        if (parts.size() != cps.size())
            throw std::invalid_argument("catalog json: partitions/cprime length mismatch");
        for (size_t i = 0; i < parts.size(); ++i)
            e.partitions.push_back({parts[i].get<Partition>(), cps[i].get<long>()});
        if (e.contributing) ++cat.family.per_d_counts[size_t(e.d)];
        cat.entries.push_back(std::move(e));
    }
    cat.family.total_lambda_count = int(cat.entries.size());
    cat.family.contributing_count = 0;
    for (const auto& e : cat.entries)
        if (e.contributing) ++cat.family.contributing_count;
    return cat;
}

bool catalogs_equal(const Catalog& a, const Catalog& b) {
    if (a.family.b != b.family.b || a.family.boundary != b.family.boundary) return false;
    if (a.family.per_d_counts != b.family.per_d_counts) return false;
    if (a.family.total_lambda_count != b.family.total_lambda_count) return false;
    if (a.family.contributing_count != b.family.contributing_count) return false;
    if (a.entries.size() != b.entries.size()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i) {
        const auto& x = a.entries[i];
        const auto& y = b.entries[i];
        if (x.d != y.d || x.j != y.j) return false;
        if (!(x.lambda == y.lambda)) return false;
        if (x.lambda_poly != y.lambda_poly || x.coeff_poly != y.coeff_poly) return false;
        if (x.contributing != y.contributing) return false;
        if (x.partitions.size() != y.partitions.size()) return false;
        for (size_t k = 0; k < x.partitions.size(); ++k) {
            if (x.partitions[k].x != y.partitions[k].x) return false;
            if (x.partitions[k].cprime != y.partitions[k].cprime) return false;
        }
    }
    return true;
}

}  // namespace kbchroma
