#include "lgh/quadric.hpp"

#include <stdexcept>

#include "lgh/parallel.hpp"

namespace lgh {

namespace {

constexpr int kPairI[10] = {0, 0, 0, 0, 1, 1, 1, 2, 2, 3};
constexpr int kPairJ[10] = {0, 1, 2, 3, 1, 2, 3, 2, 3, 3};

// Monomial vectors (p_i p_j per coefficient slot) for every point id.
std::vector<std::array<gf_t, 10>> monomial_table(const GeometryTables& t) {
    std::vector<std::array<gf_t, 10>> mono(t.n_points());
    for (int p = 0; p < t.n_points(); ++p)
        for (int k = 0; k < 10; ++k)
            mono[p][k] = t.field.mul(t.points[p][kPairI[k]], t.points[p][kPairJ[k]]);
    return mono;
}

int zero_count_mono(const GF& f, const QForm& q,
                    const std::vector<std::array<gf_t, 10>>& mono) {
    int zeros = 0;
    for (const auto& m : mono) {
        gf_t v = 0;
        for (int k = 0; k < 10; ++k) v ^= f.mul(q.coeffs[k], m[k]);
        zeros += (v == 0);
    }
    return zeros;
}

} // namespace

int qform_coeff_index(int i, int j) {
    if (i > j) std::swap(i, j);
    static constexpr int base[4] = {0, 4, 7, 9};
    return base[i] + (j - i);
}

QForm standard_hyperbolic() {
    QForm q;
    q.coeffs[qform_coeff_index(0, 1)] = 1;
    q.coeffs[qform_coeff_index(2, 3)] = 1;
    return q;
}

QForm elliptic_example() {
    QForm q;
    q.coeffs[qform_coeff_index(0, 1)] = 1;
    q.coeffs[qform_coeff_index(2, 2)] = 1;
    q.coeffs[qform_coeff_index(2, 3)] = 1;
    q.coeffs[qform_coeff_index(3, 3)] = 2;
    return q;
}

const char* to_string(QuadricType t) {
    switch (t) {
        case QuadricType::hyperbolic: return "hyperbolic";
        case QuadricType::elliptic: return "elliptic";
        default: return "degenerate";
    }
}

const char* to_string(LineClass c) {
    switch (c) {
        case LineClass::contained: return "contained";
        case LineClass::secant: return "secant";
        case LineClass::tangent: return "tangent";
        default: return "external";
    }
}

gf_t evaluate(const GF& f, const QForm& q, const Vec4& p) {
    gf_t v = 0;
    for (int k = 0; k < 10; ++k)
        v ^= f.mul(q.coeffs[k], f.mul(p[kPairI[k]], p[kPairJ[k]]));
    return v;
}

BitVec zero_set(const GeometryTables& t, const QForm& q) {
    BitVec z(t.n_points());
    for (int p = 0; p < t.n_points(); ++p)
        if (evaluate(t.field, q, t.points[p]) == 0) z.set(p);
    return z;
}

int bilinear_rank(const GF& f, const QForm& q) {
    // Polar form b(x,y) = Q(x+y)+Q(x)+Q(y): alternating, matrix entry (i,j)
    // is the cross coefficient c_{ij}, diagonal zero.
    std::vector<Vec4> rows(4, Vec4{0, 0, 0, 0});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) rows[i][j] = q.coeffs[qform_coeff_index(i, j)];
    return rref(f, rows);
}

QuadricClass classify(const GeometryTables& t, const QForm& q) {
    int rank = bilinear_rank(t.field, q);
    int zeros = (int)zero_set(t, q).count();
    if (rank < 4) return {QuadricType::degenerate, zeros, rank};
    int qq = t.q;
    if (zeros == (qq + 1) * (qq + 1)) return {QuadricType::hyperbolic, zeros, rank};
    if (zeros == qq * qq + 1) return {QuadricType::elliptic, zeros, rank};
    throw std::logic_error("classify: nondegenerate form with impossible zero count");
}

LineClass classify_line(const GeometryTables& t, const BitVec& zeros, int32_t line) {
    int on = 0;
    for (int32_t p : t.line_points[line]) on += zeros.test(p);
    if (on == 0) return LineClass::external;
    if (on == 1) return LineClass::tangent;
    if (on == 2) return LineClass::secant;
    if (on == t.q + 1) return LineClass::contained;
    throw std::logic_error("classify_line: line meets quadric in an impossible count");
}

LineCensus line_census(const GeometryTables& t, const BitVec& zeros) {
    LineCensus c;
    for (int l = 0; l < t.n_lines(); ++l) {
        switch (classify_line(t, zeros, l)) {
            case LineClass::contained: ++c.contained; break;
            case LineClass::secant: ++c.secant; break;
            case LineClass::tangent: ++c.tangent; break;
            case LineClass::external: ++c.external; break;
        }
    }
    return c;
}

std::array<std::vector<int32_t>, 2> reguli(const GeometryTables& t, const QForm& q) {
    if (classify(t, q).tag != QuadricType::hyperbolic)
        throw std::invalid_argument("reguli: form is not hyperbolic");
    BitVec zeros = zero_set(t, q);
    std::vector<int32_t> contained;
    for (int l = 0; l < t.n_lines(); ++l)
        if (classify_line(t, zeros, l) == LineClass::contained) contained.push_back(l);
    // Contained lines split into two families: same family = skew, opposite
    // families meet. Seed with the smallest id.
    std::array<std::vector<int32_t>, 2> fam;
    int32_t seed = contained[0];
    for (int32_t l : contained) {
        bool meets_seed = l != seed && meet_id(t, seed, l).has_value();
        fam[meets_seed ? 1 : 0].push_back(l);
    }
    for (const auto& f : fam)
        if ((int)f.size() != t.q + 1)
            throw std::logic_error("reguli: family size is not q+1");
    return fam;
}

int plane_section_size(const GeometryTables& t, const BitVec& zeros, int32_t plane) {
    int n = 0;
    for (std::size_t p = zeros.find_next(0); p < zeros.size(); p = zeros.find_next(p + 1))
        n += t.point_on_plane((int32_t)p, plane);
    return n;
}

PlaneCensus plane_census(const GeometryTables& t, const BitVec& zeros) {
    std::vector<int> section(t.n_planes(), 0);
    for (std::size_t p = zeros.find_next(0); p < zeros.size(); p = zeros.find_next(p + 1))
        for (int32_t pl : t.point_planes[p]) ++section[pl];
    PlaneCensus c;
    for (int pl = 0; pl < t.n_planes(); ++pl) {
        if (section[pl] == 2 * t.q + 1) ++c.line_pair_planes;
        else if (section[pl] == t.q + 1) ++c.conic_planes;
        else throw std::logic_error("plane_census: impossible section size");
    }
    return c;
}

std::vector<int32_t> external_lines(const GeometryTables& t, const QForm& q) {
    BitVec zeros = zero_set(t, q);
    std::vector<int32_t> out;
    for (int l = 0; l < t.n_lines(); ++l)
        if (classify_line(t, zeros, l) == LineClass::external) out.push_back(l);
    return out;
}

int64_t n_form_classes(int q) {
    int64_t n = 0, p = 1;
    for (int k = 0; k < 10; ++k) {
        n += p;
        p *= q;
    }
    return n; // (q^10 - 1) / (q - 1)
}

QForm form_by_index(int q, int64_t index) {
    // Block k holds the classes whose first nonzero coefficient is slot k,
    // with q^(9-k) members ordered lexicographically on the free slots.
    int64_t block = 1;
    for (int k = 0; k < 9; ++k) block *= q; // q^9
    QForm f;
    int k = 0;
    while (index >= block) {
        index -= block;
        block /= q;
        ++k;
        if (k > 9) throw std::out_of_range("form_by_index: index too large");
    }
    f.coeffs[k] = 1;
    for (int j = 9; j > k; --j) {
        f.coeffs[j] = (gf_t)(index % q);
        index /= q;
    }
    return f;
}

std::vector<QForm> scan_forms(const GeometryTables& t,
                              bool (*pred)(const QuadricClass&), int threads) {
    if (t.q != 4) throw std::invalid_argument("scan_forms: only q=4 is supported");
    auto mono = monomial_table(t);
    const int64_t n = n_form_classes(t.q);
    const int hyper_zeros = (t.q + 1) * (t.q + 1);
    const int ellip_zeros = t.q * t.q + 1;
    auto chunk = [&](int, int64_t b, int64_t e) {
        std::vector<QForm> out;
        for (int64_t i = b; i < e; ++i) {
            QForm f = form_by_index(t.q, i);
            int rank = bilinear_rank(t.field, f);
            int zeros = zero_count_mono(t.field, f, mono);
            QuadricClass cls{QuadricType::degenerate, zeros, rank};
            if (rank == 4) {
                if (zeros == hyper_zeros) cls.tag = QuadricType::hyperbolic;
                else if (zeros == ellip_zeros) cls.tag = QuadricType::elliptic;
                else throw std::logic_error("scan_forms: impossible zero count");
            }
            if (pred(cls)) out.push_back(f);
        }
        return out;
    };
    auto parts = chunked_map<std::vector<QForm>>(n, 64, resolve_threads(threads), chunk);
    std::vector<QForm> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return all;
}

HyperbolicExternals hyperbolic_external_sets(const GeometryTables& t, int threads) {
    if (t.q != 4) throw std::invalid_argument("hyperbolic_external_sets: only q=4");
    auto mono = monomial_table(t);
    const int64_t n = n_form_classes(t.q);
    const int hyper_zeros = (t.q + 1) * (t.q + 1);
    auto chunk = [&](int, int64_t b, int64_t e) {
        HyperbolicExternals out;
        BitVec zeros(t.n_points());
        for (int64_t i = b; i < e; ++i) {
            QForm f = form_by_index(t.q, i);
            if (bilinear_rank(t.field, f) < 4) continue;
            zeros.clear();
            int nz = 0;
            for (int p = 0; p < t.n_points(); ++p) {
                gf_t v = 0;
                for (int k = 0; k < 10; ++k) v ^= t.field.mul(f.coeffs[k], mono[p][k]);
                if (v == 0) {
                    zeros.set(p);
                    ++nz;
                }
            }
            if (nz != hyper_zeros) continue;
            BitVec ext(t.n_lines());
            for (int l = 0; l < t.n_lines(); ++l) {
                bool hit = false;
                for (int32_t p : t.line_points[l])
                    if (zeros.test(p)) { hit = true; break; }
                if (!hit) ext.set(l);
            }
            out.forms.push_back(f);
            out.external.push_back(std::move(ext));
        }
        return out;
    };
    auto parts = chunked_map<HyperbolicExternals>(n, 64, resolve_threads(threads), chunk);
    HyperbolicExternals all;
    for (auto& p : parts) {
        all.forms.insert(all.forms.end(), p.forms.begin(), p.forms.end());
        for (auto& b : p.external) all.external.push_back(std::move(b));
    }
    return all;
}

} // namespace lgh
