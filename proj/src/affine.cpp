#include "toric/affine.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace toric {

namespace {

// Scale (a, b) so that a is primitive integer with positive leading entry.
void normalize_hyperplane(IntVec& a, Rat& b) {
    Int g = 0;
    for (auto& v : a) g = gcd(g, v);
    if (g == 0) throw std::invalid_argument("hyperplane has zero normal");
    int lead = 0;
    while (a[lead] == 0) ++lead;
    bool flip = a[lead] < 0;
    if (flip) g = -g;
    if (g != 1) {
        for (auto& v : a) v /= g;
        b /= Rat(g);
    }
}

RatMat hyperplane_rows(const AffineArrangement& arr, const std::vector<int>& subset) {
    RatMat rows;
    for (int i : subset) {
        RatVec row(arr.n + 1);
        for (int j = 0; j < arr.n; ++j) row[j] = Rat(arr.normals[i][j]);
        row[arr.n] = arr.offsets[i];
        rows.push_back(std::move(row));
    }
    return rows;
}

// Intersection flat of a subset of hyperplanes; nullopt if empty.
std::optional<Flat> flat_of_subset(const AffineArrangement& arr, const std::vector<int>& subset) {
    RatMat rows = hyperplane_rows(arr, subset);
    auto piv = rref(rows);
    for (int p : piv)
        if (p == arr.n) return std::nullopt;  // 0 = 1: empty intersection
    return Flat{std::move(rows), arr.n};
}

std::vector<int> flat_pivots(const Flat& f) {
    std::vector<int> piv;
    for (auto& row : f.rows)
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) {
                piv.push_back(static_cast<int>(c));
                break;
            }
    return piv;
}

}  // namespace

bool Flat::operator<(const Flat& o) const {
    if (rows.size() != o.rows.size()) return rows.size() < o.rows.size();
    return rows < o.rows;
}

bool flat_subset(const Flat& inner, const Flat& outer) {
    auto piv = flat_pivots(inner);
    for (auto& row : outer.rows)
        if (!in_rowspace(inner.rows, piv, row)) return false;
    return true;
}

bool AffineArrangement::is_central() const {
    std::vector<int> all(m());
    for (int i = 0; i < m(); ++i) all[i] = i;
    return flat_of_subset(*this, all).has_value();
}

std::optional<RatVec> AffineArrangement::non_essential_witness() const {
    RatMat a(m(), RatVec(n));
    for (int i = 0; i < m(); ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(normals[i][j]);
    if (m() == 0) {
        RatVec v(n, Rat(0));
        if (n == 0) return std::nullopt;
        v[0] = 1;
        return v;
    }
    return kernel_vector(a);
}

void AffineArrangement::require_essential() const {
    if (auto w = non_essential_witness()) {
        std::string s = "arrangement is not essential; invariant direction (";
        for (size_t i = 0; i < w->size(); ++i) s += (i ? ", " : "") + rat_str((*w)[i]);
        throw std::domain_error(s + ")");
    }
}

AffineArrangement AffineArrangement::parse(const std::string& raw_text) {
    std::string text = strip_comments(raw_text);
    std::istringstream in(text);
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "affine")
        throw std::invalid_argument("expected header: affine <n>");
    if (n <= 0) throw std::invalid_argument("dimension must be positive");
    AffineArrangement arr;
    arr.n = n;
    std::string line;
    std::getline(in, line);
    std::set<std::pair<IntVec, Rat>> seen;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        IntVec a;
        a.push_back(Int(tok));
        for (int j = 1; j < n; ++j) {
            if (!(ls >> tok)) throw std::invalid_argument("short hyperplane line: " + line);
            a.push_back(Int(tok));
        }
        if (!(ls >> tok) || tok != "|")
            throw std::invalid_argument("expected '|' before offset: " + line);
        if (!(ls >> tok)) throw std::invalid_argument("missing offset: " + line);
        Rat b = parse_rat(tok);
        normalize_hyperplane(a, b);
        if (!seen.insert({a, b}).second)
            throw std::invalid_argument("duplicate hyperplane: " + line);
        arr.normals.push_back(std::move(a));
        arr.offsets.push_back(std::move(b));
    }
    if (arr.m() == 0) throw std::invalid_argument("arrangement has no hyperplanes");
    return arr;
}

AffineArrangement AffineArrangement::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

IntersectionLattice intersection_lattice(const AffineArrangement& a) {
    int m = a.m();
    if (m > 20) throw std::length_error("too many hyperplanes for subset enumeration");
    std::set<Flat> flats;
    bool any_empty = false;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) subset.push_back(i);
        if (auto f = flat_of_subset(a, subset))
            flats.insert(std::move(*f));
        else
            any_empty = true;
    }
    IntersectionLattice lat;
    std::vector<Flat> fl(flats.begin(), flats.end());
    std::sort(fl.begin(), fl.end(), [](const Flat& x, const Flat& y) {
        if (x.codim() != y.codim()) return x.codim() < y.codim();
        return x < y;
    });
    int maxcodim = 0;
    for (auto& f : fl) maxcodim = std::max(maxcodim, f.codim());
    std::vector<int> ranks;
    std::vector<std::pair<int, int>> less;
    for (size_t i = 0; i < fl.size(); ++i) {
        ranks.push_back(fl[i].codim());
        if (fl[i].codim() == 0) lat.whole_space_index = static_cast<int>(i);
    }
    for (size_t i = 0; i < fl.size(); ++i)
        for (size_t j = 0; j < fl.size(); ++j)
            if (i != j && fl[i].codim() < fl[j].codim() && flat_subset(fl[j], fl[i]))
                less.emplace_back(static_cast<int>(i), static_cast<int>(j));
    if (any_empty) {
        lat.empty_index = static_cast<int>(fl.size());
        ranks.push_back(maxcodim + 1);
        for (size_t i = 0; i < fl.size(); ++i)
            less.emplace_back(static_cast<int>(i), lat.empty_index);
    }
    lat.flats = std::move(fl);
    lat.poset = GradedPoset::from_relations(std::move(ranks), less);
    return lat;
}

IntPoly characteristic_polynomial(const AffineArrangement& a) {
    auto lat = intersection_lattice(a);
    std::vector<Int> coeffs(a.n + 1, Int(0));
    for (size_t i = 0; i < lat.flats.size(); ++i) {
        Int mu = lat.poset.moebius(lat.whole_space_index, static_cast<int>(i));
        coeffs[lat.flats[i].dim()] += mu;
    }
    return IntPoly(std::move(coeffs));
}

RegionCounts region_counts(const AffineArrangement& a) {
    auto lat = intersection_lattice(a);
    auto z = zaslavsky_invariants(lat.poset);
    if (lat.empty_index < 0) return {z.z, Int(0), z.z};
    return {z.z - z.z_bounded, z.z_bounded, z.z_unbounded};
}

namespace {

std::vector<LinCon> sign_constraints(const AffineArrangement& a, const std::vector<int>& sigma,
                                     bool homogeneous) {
    std::vector<LinCon> cons;
    for (size_t i = 0; i < sigma.size(); ++i) {
        int s = sigma[i] == 0 ? 1 : sigma[i];
        LinCon c;
        c.a.resize(a.n);
        for (int j = 0; j < a.n; ++j) c.a[j] = Rat(a.normals[i][j]) * s;
        c.c = homogeneous ? Rat(0) : -a.offsets[i] * s;
        c.rel = sigma[i] == 0 ? Rel::Eq : Rel::Gt;
        cons.push_back(std::move(c));
    }
    return cons;
}

bool face_unbounded(const AffineArrangement& a, const std::vector<int>& sigma) {
    // Recession cone nonzero: same signs non-strictly around zero offsets,
    // with at least one strict inequality achievable.
    for (size_t j = 0; j < sigma.size(); ++j) {
        if (sigma[j] == 0) continue;
        std::vector<LinCon> cons;
        for (size_t i = 0; i < sigma.size(); ++i) {
            LinCon c;
            c.a.resize(a.n);
            for (int k = 0; k < a.n; ++k) c.a[k] = Rat(a.normals[i][k]) * (sigma[i] == 0 ? 1 : sigma[i]);
            c.c = 0;
            c.rel = sigma[i] == 0 ? Rel::Eq : (i == j ? Rel::Gt : Rel::Ge);
            cons.push_back(std::move(c));
        }
        if (feasible(a.n, cons)) return true;
    }
    return false;
}

void enum_rec(const AffineArrangement& a, std::vector<int>& sigma, size_t i, FaceEnum& out) {
    if (i == static_cast<size_t>(a.m())) {
        RatMat zero_rows;
        for (size_t k = 0; k < sigma.size(); ++k)
            if (sigma[k] == 0) {
                RatVec r(a.n);
                for (int j = 0; j < a.n; ++j) r[j] = Rat(a.normals[k][j]);
                zero_rows.push_back(std::move(r));
            }
        out.faces.push_back(sigma);
        out.dim.push_back(a.n - rank_of(zero_rows));
        out.unbounded.push_back(face_unbounded(a, sigma));
        return;
    }
    for (int s : {0, 1, -1}) {
        sigma.push_back(s);
        if (feasible(a.n, sign_constraints(a, sigma, false))) enum_rec(a, sigma, i + 1, out);
        sigma.pop_back();
    }
}

}  // namespace

FaceEnum enumerate_faces(const AffineArrangement& a) {
    a.require_essential();
    FaceEnum out;
    std::vector<int> sigma;
    enum_rec(a, sigma, 0, out);
    return out;
}

RegionCounts region_counts_brute(const AffineArrangement& a) {
    auto fe = enumerate_faces(a);
    RegionCounts rc{0, 0, 0};
    for (size_t i = 0; i < fe.faces.size(); ++i) {
        bool region = std::all_of(fe.faces[i].begin(), fe.faces[i].end(),
                                  [](int s) { return s != 0; });
        if (!region) continue;
        rc.regions += 1;
        if (fe.unbounded[i])
            rc.unbounded += 1;
        else
            rc.bounded += 1;
    }
    return rc;
}

namespace {

bool conformal_less(const std::vector<int>& s, const std::vector<int>& t) {
    bool strict = false;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0 && t[i] != 0)
            strict = true;
        else if (s[i] != t[i])
            return false;
    }
    return strict;
}

int lattice_index_of_face(const AffineArrangement& a, const IntersectionLattice& lat,
                          const std::vector<int>& sigma) {
    std::vector<int> zeros;
    for (size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] == 0) zeros.push_back(static_cast<int>(i));
    auto f = flat_of_subset(a, zeros);
    if (!f) throw std::logic_error("face with empty affine hull");
    for (size_t i = 0; i < lat.flats.size(); ++i)
        if (lat.flats[i] == *f) return static_cast<int>(i);
    throw std::logic_error("face affine hull missing from intersection lattice");
}

}  // namespace

CentralFacePoset face_poset_central(const AffineArrangement& a) {
    a.require_essential();
    if (!a.is_central()) throw std::domain_error("arrangement is not central");
    auto fe = enumerate_faces(a);
    CentralFacePoset out;
    out.lattice = intersection_lattice(a);
    int nf = static_cast<int>(fe.faces.size());
    std::vector<int> ranks(nf + 1);
    std::vector<std::pair<int, int>> less;
    for (int i = 0; i < nf; ++i) {
        ranks[i] = fe.dim[i];
        out.flat_of.push_back(lattice_index_of_face(a, out.lattice, fe.faces[i]));
        for (int j = 0; j < nf; ++j)
            if (i != j && conformal_less(fe.faces[i], fe.faces[j])) less.emplace_back(i, j);
        less.emplace_back(i, nf);
    }
    ranks[nf] = a.n + 1;  // artificial top
    out.flat_of.push_back(-1);
    out.poset = GradedPoset::from_relations(std::move(ranks), less);
    return out;
}

CdPoly psi_central(const AffineArrangement& a) {
    a.require_essential();
    if (!a.is_central()) throw std::domain_error("arrangement is not central");
    auto lat = intersection_lattice(a);
    return omega(ab_a() * ab_index_stanley(lat.poset)).star();
}

UnboundedStructures unbounded_structures(const AffineArrangement& a) {
    a.require_essential();
    if (a.is_central()) throw std::domain_error("arrangement is central");
    UnboundedStructures out;
    out.lattice = intersection_lattice(a);
    std::set<int> proper;
    for (int r = 1; r <= a.n - 1; ++r) proper.insert(r);
    out.l_ub = rank_selection(out.lattice.poset, proper);

    auto fe = enumerate_faces(a);
    int nf = static_cast<int>(fe.faces.size());
    // T: 0 = empty face, 1..nf = faces (rank dim+1), nf+1 = artificial top.
    {
        std::vector<int> ranks(nf + 2);
        std::vector<std::pair<int, int>> less;
        ranks[0] = 0;
        ranks[nf + 1] = a.n + 2;
        out.t_flat_of.assign(nf + 2, -1);
        for (int i = 0; i < nf; ++i) {
            ranks[i + 1] = fe.dim[i] + 1;
            out.t_flat_of[i + 1] = lattice_index_of_face(a, out.lattice, fe.faces[i]);
            less.emplace_back(0, i + 1);
            less.emplace_back(i + 1, nf + 1);
            for (int j = 0; j < nf; ++j)
                if (i != j && conformal_less(fe.faces[i], fe.faces[j]))
                    less.emplace_back(i + 1, j + 1);
        }
        less.emplace_back(0, nf + 1);
        out.t_poset = GradedPoset::from_relations(std::move(ranks), less);
    }
    // T_ub: sphere of unbounded faces, ranked by face dimension.
    std::vector<int> unb;
    for (int i = 0; i < nf; ++i)
        if (fe.unbounded[i]) unb.push_back(i);
    {
        int k = static_cast<int>(unb.size());
        std::vector<int> ranks(k + 2);
        std::vector<std::pair<int, int>> less;
        ranks[0] = 0;
        ranks[k + 1] = a.n + 1;
        for (int x = 0; x < k; ++x) {
            ranks[x + 1] = fe.dim[unb[x]];
            less.emplace_back(0, x + 1);
            less.emplace_back(x + 1, k + 1);
            for (int y = 0; y < k; ++y)
                if (x != y && conformal_less(fe.faces[unb[x]], fe.faces[unb[y]]))
                    less.emplace_back(x + 1, y + 1);
        }
        less.emplace_back(0, k + 1);
        out.t_ub = GradedPoset::from_relations(std::move(ranks), less);
    }
    // Q: lower ideal of unbounded faces in T*, plus a top; ranks from T*.
    {
        int k = static_cast<int>(unb.size());
        std::vector<int> ranks(k + 2);
        std::vector<std::pair<int, int>> less;
        ranks[0] = 0;                // the whole-space element (top of T)
        ranks[k + 1] = a.n + 2;      // adjoined top, rank of the empty face in T*
        out.q_flat_of.assign(k + 2, -1);
        out.q_flat_of[0] = 0;  // bottom of adjoin_bottom(L)
        out.q_flat_of[k + 1] = out.lattice.empty_index + 1;
        for (int x = 0; x < k; ++x) {
            ranks[x + 1] = a.n + 1 - fe.dim[unb[x]];
            out.q_flat_of[x + 1] = lattice_index_of_face(a, out.lattice, fe.faces[unb[x]]) + 1;
            less.emplace_back(0, x + 1);
            less.emplace_back(x + 1, k + 1);
            for (int y = 0; y < k; ++y)
                if (x != y && conformal_less(fe.faces[unb[y]], fe.faces[unb[x]]))
                    less.emplace_back(x + 1, y + 1);
        }
        less.emplace_back(0, k + 1);
        out.q_poset = GradedPoset::from_relations(std::move(ranks), less, false);
    }
    return out;
}

CdPoly psi_unbounded(const AffineArrangement& a) {
    auto st = unbounded_structures(a);
    return omega(ab_a() * ab_index_stanley(st.l_ub)).star();
}

namespace {

void check_chain(const GradedPoset& p, const std::vector<int>& chain) {
    if (chain.size() < 2 || chain.front() != p.bottom() || chain.back() != p.top())
        throw std::invalid_argument("chain must run from the bottom to the top");
    for (size_t i = 1; i < chain.size(); ++i)
        if (!p.less(chain[i - 1], chain[i]))
            throw std::invalid_argument("chain is not strictly increasing");
}

}  // namespace

Int fiber_cardinality_central(const GradedPoset& l_aug, const std::vector<int>& chain) {
    check_chain(l_aug, chain);
    Int prod = 1;
    for (size_t i = 2; i < chain.size(); ++i)
        prod *= zaslavsky_invariants(interval(l_aug, chain[i - 1], chain[i])).z;
    return prod;
}

Int fiber_cardinality_unbounded(const GradedPoset& l_aug, const std::vector<int>& chain) {
    check_chain(l_aug, chain);
    size_t k = chain.size() - 1;
    Int prod = 1;
    for (size_t i = 2; i < k; ++i)
        prod *= zaslavsky_invariants(interval(l_aug, chain[i - 1], chain[i])).z;
    if (k >= 2)
        prod *= zaslavsky_invariants(interval(l_aug, chain[k - 1], chain[k])).z_unbounded;
    return prod;
}

Int fiber_cardinality_toric(const GradedPoset& p_aug, const std::vector<int>& chain) {
    check_chain(p_aug, chain);
    size_t k = chain.size() - 1;
    Int prod = 1;
    for (size_t i = 2; i < k; ++i)
        prod *= zaslavsky_invariants(interval(p_aug, chain[i - 1], chain[i])).z;
    if (k >= 2)
        prod *= zaslavsky_invariants(interval(p_aug, chain[k - 1], chain[k])).z_toric;
    return prod;
}

}  // namespace toric
