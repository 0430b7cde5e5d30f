#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "kbchroma/catalog.hpp"

namespace kbchroma::detail {

// q, q - a, and descending-coefficient shorthands used by the data tables.
inline RationalPoly Q() { return RationalPoly::variable(); }
inline RationalPoly L(long a) { return RationalPoly::variable() - RationalPoly(a); }
inline RationalPoly pd(std::initializer_list<long> coeffs) { return RationalPoly::descending(coeffs); }
inline Rational fr(long num, long den) { return make_rational(num, den); }

class CatalogBuilder {
  public:
    CatalogBuilder(int b, Boundary boundary) : b_(b), boundary_(boundary) {}

    // Single-partition row: the coefficient is cprime * c_X.
    void row(int d, int j, std::vector<long> w, Partition x, long cprime) {
        SpectrumEntry e = base(d, j, std::move(w));
        e.partitions = {{std::move(x), cprime}};
        e.coeff_poly = coeff_c(e.partitions[0].x) * Rational(cprime);
        push(std::move(e));
    }

    // Degenerate row: several partitions share the eigenvalue; the combined
    // coefficient polynomial is stored verbatim and checked against
    // sum c' * c_X.
    void row(int d, int j, std::vector<long> w, std::vector<PartitionTerm> terms,
             RationalPoly combined) {
        SpectrumEntry e = base(d, j, std::move(w));
        e.partitions = std::move(terms);
        RationalPoly sum;
        for (const auto& t : e.partitions) sum += coeff_c(t.x) * Rational(t.cprime);
        if (sum != combined)
            throw std::logic_error("catalog row (" + std::to_string(d) + "," + std::to_string(j) +
                                   "): partition sum disagrees with tabulated coefficient");
        e.coeff_poly = std::move(combined);
        push(std::move(e));
    }

    // Top level d = b: degenerate over all partitions, coefficient given
    // explicitly with no per-partition breakdown.
    void top(int j, std::vector<long> w, RationalPoly poly) {
        SpectrumEntry e = base(b_, j, std::move(w));
        e.coeff_poly = std::move(poly);
        push(std::move(e));
    }

    Catalog finish() {
        Catalog cat;
        cat.family.b = b_;
        cat.family.boundary = boundary_;
        cat.family.chromatic_number = b_;
        cat.family.per_d_counts.assign(b_ + 1, 0);
        for (const auto& e : entries_)
            if (e.contributing) ++cat.family.per_d_counts[e.d];
        cat.family.total_lambda_count = static_cast<int>(entries_.size());
        cat.family.contributing_count = 0;
        for (const auto& e : entries_)
            if (e.contributing) ++cat.family.contributing_count;
        cat.entries = std::move(entries_);
        return cat;
    }

  private:
    SpectrumEntry base(int d, int j, std::vector<long> w) {
        SpectrumEntry e;
        e.d = d;
        e.j = j;
        e.lambda = FBasisVector{b_, d, std::move(w)};
        e.lambda_poly = e.lambda.expand();
        return e;
    }

    void push(SpectrumEntry e) {
        e.contributing = !e.coeff_poly.is_zero();
        entries_.push_back(std::move(e));
    }

    int b_;
    Boundary boundary_;
    std::vector<SpectrumEntry> entries_;
};

// Klein catalogs share the torus eigenvalues row for row; only the
// coefficient data differs.
class KleinBuilder {
  public:
    explicit KleinBuilder(const Catalog& torus) : torus_(torus) {}

    void row(int d, int j, Partition x, long cprime) {
        SpectrumEntry e = base(d, j);
        e.partitions = {{std::move(x), cprime}};
        e.coeff_poly = coeff_c(e.partitions[0].x) * Rational(cprime);
        push(std::move(e));
    }

    void row(int d, int j, std::vector<PartitionTerm> terms, RationalPoly combined) {
        SpectrumEntry e = base(d, j);
        e.partitions = std::move(terms);
        RationalPoly sum;
        for (const auto& t : e.partitions) sum += coeff_c(t.x) * Rational(t.cprime);
        if (sum != combined)
            throw std::logic_error("klein row (" + std::to_string(d) + "," + std::to_string(j) +
                                   "): partition sum disagrees with tabulated coefficient");
        e.coeff_poly = std::move(combined);
        push(std::move(e));
    }

    void top(int j, RationalPoly poly) {
        SpectrumEntry e = base(torus_.family.b, j);
        e.coeff_poly = std::move(poly);
        push(std::move(e));
    }

    Catalog finish() {
        if (entries_.size() != torus_.entries.size())
            throw std::logic_error("klein catalog: row count mismatch with torus");
        Catalog cat;
        cat.family.b = torus_.family.b;
        cat.family.boundary = Boundary::klein;
        cat.family.chromatic_number = torus_.family.b;
        cat.family.per_d_counts.assign(torus_.family.b + 1, 0);
        cat.family.contributing_count = 0;
        for (const auto& e : entries_) {
            if (e.contributing) {
                ++cat.family.per_d_counts[e.d];
                ++cat.family.contributing_count;
            }
        }
        cat.family.total_lambda_count = static_cast<int>(entries_.size());
        cat.entries = std::move(entries_);
        return cat;
    }

  private:
    SpectrumEntry base(int d, int j) {
        const SpectrumEntry& t = torus_.at(d, j);
        SpectrumEntry e;
        e.d = d;
        e.j = j;
        e.lambda = t.lambda;
        e.lambda_poly = t.lambda_poly;
        return e;
    }

    void push(SpectrumEntry e) {
        e.contributing = !e.coeff_poly.is_zero();
        entries_.push_back(std::move(e));
    }

    const Catalog& torus_;
    std::vector<SpectrumEntry> entries_;
};

Catalog build_toroidal_5();
Catalog build_klein_5(const Catalog& torus);
Catalog build_toroidal_6();
Catalog build_klein_6(const Catalog& torus);

}  // namespace kbchroma::detail
