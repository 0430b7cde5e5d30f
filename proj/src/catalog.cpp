#include "kbchroma/catalog.hpp"

#include <stdexcept>

#include "catalog_build.hpp"

namespace kbchroma {

std::string to_string(Boundary b) { return b == Boundary::torus ? "torus" : "klein"; }

Boundary boundary_from_string(const std::string& s) {
    if (s == "torus") return Boundary::torus;
    if (s == "klein") return Boundary::klein;
    throw std::invalid_argument("unknown boundary '" + s + "' (expected torus or klein)");
}

long SpectrumEntry::cprime_for(const Partition& x) const {
    for (const auto& t : partitions)
        if (t.x == x) return t.cprime;
    return 0;
}

const SpectrumEntry& Catalog::at(int d, int j) const {
    for (const auto& e : entries)
        if (e.d == d && e.j == j) return e;
    throw std::out_of_range("no catalog entry (" + std::to_string(d) + "," + std::to_string(j) +
                            ")");
}

std::vector<const SpectrumEntry*> Catalog::level(int d) const {
    std::vector<const SpectrumEntry*> out;
    for (const auto& e : entries)
        if (e.d == d) out.push_back(&e);
    return out;
}

namespace {

void require_supported_b(int b) {
    if (b != 5 && b != 6)
        throw std::invalid_argument("catalogs are available for b in {5, 6}; got b = " +
                                    std::to_string(b));
}

}  // namespace

const Catalog& toroidal_catalog(int b) {
    require_supported_b(b);
    static const Catalog t5 = detail::build_toroidal_5();
    static const Catalog t6 = detail::build_toroidal_6();
    return b == 5 ? t5 : t6;
}

const Catalog& klein_catalog(int b) {
    require_supported_b(b);
    static const Catalog k5 = detail::build_klein_5(toroidal_catalog(5));
    static const Catalog k6 = detail::build_klein_6(toroidal_catalog(6));
    return b == 5 ? k5 : k6;
}

const Catalog& catalog(int b, Boundary boundary) {
    return boundary == Boundary::torus ? toroidal_catalog(b) : klein_catalog(b);
}

namespace {

FBasisVector general_lambda(int b, int d, bool alternating) {
    if (b < 1 || d < 0 || d > b)
        throw std::invalid_argument("general lambda family: need 1 <= b and 0 <= d <= b");
    FBasisVector v{b, d, {}};
    const int kmax = std::min(d, b - d);
    for (int k = 0; k <= kmax; ++k) {
        BigInt w = binomial(unsigned(d), unsigned(k)) * falling_factorial(long(b - d), unsigned(k));
        long wl = long(w.get_si());
        if (alternating && (k % 2)) wl = -wl;
        if (alternating && (d % 2)) wl = -wl;
        v.weights.push_back(wl);
    }
    while (!v.weights.empty() && v.weights.back() == 0) v.weights.pop_back();
    return v;
}

}  // namespace

FBasisVector general_lambda_alternating(int b, int d) { return general_lambda(b, d, true); }

FBasisVector general_lambda_principal(int b, int d) { return general_lambda(b, d, false); }

std::vector<Lambda21> lambda21_family(int b) {
    if (b < 3) throw std::invalid_argument("lambda21_family: need b >= 3");
    const long bb = b;
    auto clamp = [b](std::vector<long> w) {
        // drop weights on f_i with i > b; those basis functions vanish
        while (static_cast<int>(w.size()) > b - 3 + 1) w.pop_back();
        while (!w.empty() && w.back() == 0) w.pop_back();
        return w;
    };
    long c4 = 2 * bb * (bb - 2) * (bb - 4);
    if (c4 % 3 != 0) throw std::logic_error("lambda21_family: non-integer multiplicity");
    std::vector<Lambda21> out;
    out.push_back({{b, 3, clamp({-1, 2 * (bb - 3), -(bb - 3) * (bb - 4)})}, 2 * (bb - 1)});
    out.push_back({{b, 3, clamp({-1, bb - 4, bb - 4})}, bb * (bb - 3)});
    out.push_back({{b, 3, clamp({-1, bb - 6, 3 * (bb - 4)})}, (bb - 1) * (bb - 2)});
    out.push_back({{b, 3, clamp({-1, -3, -3})}, c4 / 3});
    return out;
}

}  // namespace kbchroma
