#include "secant_hodge/oracles.hpp"

#include "secant_hodge/builders.hpp"
#include "secant_hodge/secant_curves.hpp"
#include "secant_hodge/secant_lines.hpp"
#include "secant_hodge/symmetric_products.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace secant_hodge {

namespace {

using boost::multiprecision::cpp_int;

using Word = std::vector<int>; // sorted letter indices into gamma_1..gamma_2g

// All nondecreasing (sym) or increasing (!sym) words of length len over n letters, lex order.
std::vector<Word> words(int n, int len, bool sym) {
    std::vector<Word> out;
    Word cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x < n; ++x) {
            cur.push_back(x);
            self(self, sym ? x : x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::string word_label(const Word& w, const char* sep) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += sep;
        s += "g" + std::to_string(w[i] + 1);
    }
    return s;
}

// Wedge summands (b, T) of IH^p(sigma_m): wedge^b H^1 (-T).
struct Summand {
    int b = 0;
    int T = 0;
    bool zero_map = false; // the Hard Lefschetz i = 0 summand above the middle
};

std::vector<Summand> ih_summands(int m, int p) {
    const int mid = 2 * m - 1;
    std::vector<Summand> out;
    if (p < 0 || p > 2 * mid) return out;
    if (p <= mid) {
        for (int i = 0; 2 * i <= p; ++i)
            if (2 * i >= p - m) out.push_back({p - 2 * i, i, false});
        return out;
    }
    const int t = p - mid;
    for (int i = 0; 2 * i <= mid - t; ++i)
        if (2 * i >= m - 1 - t) out.push_back({mid - t - 2 * i, i + t, i == 0});
    return out;
}

struct TermLayout {
    struct Block {
        Summand s;
        std::size_t offset = 0;
        std::vector<Word> wedge;
    };
    std::vector<Word> sym;
    std::vector<Block> blocks;
};

} // namespace

bool IntMatrix::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not compose");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t l = 0; l < a.cols; ++l) {
            const std::int64_t x = a.at(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) = checked_add(c.at(i, j), checked_mul(x, b.at(l, j)));
        }
    return c;
}

std::size_t exact_rank(const IntMatrix& m) {
    const std::size_t R = m.rows, C = m.cols;
    if (R == 0 || C == 0) return 0;
    std::vector<std::vector<cpp_int>> a(R, std::vector<cpp_int>(C));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m.at(i, j);
    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = rank;
        while (piv < R && a[piv][col] == 0) ++piv;
        if (piv == R) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

BasedComplex build_wss_complex(int g, int k, int w) {
    if (g < 0 || k < 2 || w < 0 || w > 2 * (2 * k - 1)) throw std::invalid_argument("build_wss_complex: parameters out of range");
    const int n = 2 * g;
    auto letter_tag = [&](const Word& x) {
        int p = 0;
        for (int c : x) p += c < g ? 1 : 0;
        return Bidegree{p, static_cast<int>(x.size()) - p};
    };

    std::vector<TermLayout> layouts(k);
    BasedComplex cx;
    for (int l = 0; l < k; ++l) {
        TermLayout& lay = layouts[l];
        lay.sym = words(n, l, true);
        BasedSpace space;
        space.label = "Sym^" + std::to_string(l) + " H1 (x) IH^" + std::to_string(w - l) + "(sigma_" + std::to_string(k - l) + ")";
        for (const Summand& s : ih_summands(k - l, w - l)) {
            TermLayout::Block blk{s, space.basis.size(), words(n, s.b, false)};
            for (const Word& sw : lay.sym)
                for (const Word& ww : blk.wedge) {
                    const Bidegree a = letter_tag(sw), b = letter_tag(ww);
                    space.basis.push_back({word_label(sw, "*") + " (x) " + word_label(ww, "^") + " (-" + std::to_string(s.T) + ")",
                                           {a.first + b.first + s.T, a.second + b.second + s.T}, s.T});
                }
            lay.blocks.push_back(std::move(blk));
        }
        cx.terms.push_back(std::move(space));
    }

    for (int l = 0; l + 1 < k; ++l) {
        const TermLayout& src = layouts[l];
        const TermLayout& dst = layouts[l + 1];
        IntMatrix d(cx.terms[l + 1].dim(), cx.terms[l].dim());
        std::map<Word, std::size_t> sym_index;
        for (std::size_t i = 0; i < dst.sym.size(); ++i) sym_index[dst.sym[i]] = i;
        for (const auto& sb : src.blocks) {
            if (sb.s.zero_map || sb.s.b == 0) continue;
            const auto tb = std::find_if(dst.blocks.begin(), dst.blocks.end(),
                                         [&](const TermLayout::Block& x) { return x.s.T == sb.s.T && x.s.b == sb.s.b - 1; });
            if (tb == dst.blocks.end()) continue;
            std::map<Word, std::size_t> wedge_index;
            for (std::size_t i = 0; i < tb->wedge.size(); ++i) wedge_index[tb->wedge[i]] = i;
            for (std::size_t si = 0; si < src.sym.size(); ++si)
                for (std::size_t wi = 0; wi < sb.wedge.size(); ++wi) {
                    const std::size_t col = sb.offset + si * sb.wedge.size() + wi;
                    const Word& v = sb.wedge[wi];
                    for (std::size_t pos = 0; pos < v.size(); ++pos) {
                        Word s2 = src.sym[si];
                        s2.insert(std::upper_bound(s2.begin(), s2.end(), v[pos]), v[pos]);
                        Word rest = v;
                        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
                        const std::size_t row = tb->offset + sym_index.at(s2) * tb->wedge.size() + wedge_index.at(rest);
                        d.at(row, col) += (pos % 2 == 0) ? 1 : -1;
                    }
                }
        }
        cx.differentials.push_back(std::move(d));
    }
    return cx;
}

std::vector<std::pair<int, HodgeStructure>> complex_cohomology(const BasedComplex& c) {
    const std::size_t len = c.terms.size();
    // Per term: bidegree -> indices.
    std::vector<std::map<Bidegree, std::vector<std::size_t>>> by_tag(len);
    for (std::size_t l = 0; l < len; ++l)
        for (std::size_t i = 0; i < c.terms[l].dim(); ++i) by_tag[l][c.terms[l].basis[i].tag].push_back(i);

    auto block_rank = [&](std::size_t l, const Bidegree& t) -> std::size_t {
        if (l + 1 >= len) return 0;
        const auto s = by_tag[l].find(t);
        const auto d = by_tag[l + 1].find(t);
        if (s == by_tag[l].end() || d == by_tag[l + 1].end()) return 0;
        IntMatrix sub(d->second.size(), s->second.size());
        for (std::size_t r = 0; r < d->second.size(); ++r)
            for (std::size_t q = 0; q < s->second.size(); ++q) sub.at(r, q) = c.differentials[l].at(d->second[r], s->second[q]);
        return exact_rank(sub);
    };

    std::vector<std::pair<int, HodgeStructure>> out;
    for (std::size_t l = 0; l < len; ++l) {
        HodgeStructure h;
        for (const auto& [tag, idx] : by_tag[l]) {
            const std::size_t out_rank = block_rank(l, tag);
            const std::size_t in_rank = l == 0 ? 0 : block_rank(l - 1, tag);
            const std::size_t dim = idx.size() - out_rank - in_rank;
            if (dim) h.add(tag.first, tag.second, static_cast<Count>(dim));
        }
        out.emplace_back(static_cast<int>(l), std::move(h));
    }
    return out;
}

std::vector<std::pair<int, HodgeStructure>> wss_cohomology(int g, int k, int w) {
    return complex_cohomology(build_wss_complex(g, k, w));
}

bool differentials_square_to_zero(const BasedComplex& c) {
    for (std::size_t l = 0; l + 1 < c.differentials.size(); ++l)
        if (!multiply(c.differentials[l + 1], c.differentials[l]).is_zero()) return false;
    return true;
}

bool differentials_preserve_tags(const BasedComplex& c) {
    for (std::size_t l = 0; l < c.differentials.size(); ++l) {
        const IntMatrix& d = c.differentials[l];
        for (std::size_t r = 0; r < d.rows; ++r)
            for (std::size_t q = 0; q < d.cols; ++q) {
                if (d.at(r, q) == 0) continue;
                const BasisVector& a = c.terms[l].basis[q];
                const BasisVector& b = c.terms[l + 1].basis[r];
                if (a.tag != b.tag || a.tate != b.tate) return false;
            }
    }
    return true;
}

ScissorResult scissor_check_lines(const HodgeDiamond& y) {
    const CohomologyTable yt = from_diamond(y);
    const EPolynomial lhs = e_polynomial(sing_cohomology_secant(SecantLinesContext(y)));
    const EPolynomial rhs = e_polynomial(yt) + e_polynomial(total_space_P(yt)) - e_polynomial(phi(yt));
    ScissorResult r;
    r.residual = lhs - rhs;
    r.ok = r.residual.is_zero();
    r.detail = "E(Sigma) - E(Y) - E(P) + E(Phi) = " + r.residual.to_string();
    return r;
}

ScissorResult scissor_check_curves(int g, int k) {
    if (g < 0 || k < 2) throw std::invalid_argument("scissor_check_curves: need g >= 0, k >= 2");
    auto closed = [&](int i) {
        if (i == 0) return EPolynomial{};
        if (i == 1) return e_polynomial(curve(g));
        return e_polynomial(sing_cohomology_higher(SecantCurveContext(g, i)));
    };
    auto sym_curve = [&](int m) { return e_polynomial(macdonald_sym_curve(g, m)); };
    // One step of the stratification recursion given E(sigma_i), i < m.
    auto step = [&](int m, const std::vector<EPolynomial>& e) {
        EPolynomial z;
        for (int i = 1; i <= m - 1; ++i) z = z + sym_curve(m - i) * (e[i] - e[i - 1]);
        return e_polynomial(bk_space(g, m)) - z + e[m - 1];
    };

    std::vector<EPolynomial> cl(k + 1), rec(k + 1);
    for (int i = 0; i <= k; ++i) cl[i] = closed(i);
    rec[1] = cl[1];
    for (int m = 2; m <= k; ++m) rec[m] = step(m, rec);

    ScissorResult r;
    r.residual = cl[k] - step(k, cl);
    r.secondary_residual = cl[k] - rec[k];
    r.ok = r.residual.is_zero() && r.secondary_residual.is_zero();
    r.detail = "closed-form stratification residual " + r.residual.to_string() + "; recursion residual " +
               r.secondary_residual.to_string();
    return r;
}

namespace {

void compare_tables(const CohomologyTable& lhs, const CohomologyTable& rhs, const std::string& what, IdentityResult& r) {
    int top = std::max(lhs.max_degree(), rhs.max_degree());
    for (int j = 0; j <= top; ++j)
        if (!(lhs.at(j) == rhs.at(j))) {
            r.ok = false;
            r.mismatches.push_back(what + " degree " + std::to_string(j) + ": " + lhs.at(j).to_string() + " vs " +
                                   rhs.at(j).to_string());
        }
}

} // namespace

IdentityResult semismall_check(int g, int k) {
    if (g < 0 || k < 1) throw std::invalid_argument("semismall_check: need g >= 0, k >= 1");
    const CohomologyTable lhs = bk_space(g, k);
    CohomologyTable rhs;
    for (int l = 1; l <= k; ++l) {
        const CohomologyTable ih = l == 1 ? curve(g) : ih_higher_secant_table(SecantCurveContext(g, l));
        rhs = direct_sum(rhs, shift_twist(ih, 2 * (k - l), k - l));
    }
    IdentityResult r;
    compare_tables(lhs, rhs, "H(B^" + std::to_string(k) + ")", r);
    return r;
}

IdentityResult decomposition_check_lines(const HodgeDiamond& y) {
    const int n = y.dim();
    const CohomologyTable yt = from_diamond(y);
    const CohomologyTable bl = blowup_point(yt);
    const CohomologyTable lhs = total_space_P(yt);
    CohomologyTable rhs = ih_secant_table(SecantLinesContext(y));
    auto place = [&](const HodgeStructure& fiber, int shift, int twist) {
        for (const auto& [a, h] : yt.entries()) rhs.add(a + shift, tate_twist(tensor(fiber, h), -twist));
    };
    for (int l = 0; l <= n - 1; ++l) place(bl.at(n + 1 + l), n + 1 + l, 0);
    for (int l = 0; l <= n - 2; ++l) place(bl.at(l), 2 + l, 1);
    IdentityResult r;
    compare_tables(lhs, rhs, "H(P)", r);
    return r;
}

DualityResult duality_lefschetz_check(const CohomologyTable& t, int d) {
    if (!t.is_pure()) throw std::invalid_argument("duality_lefschetz_check needs a pure table");
    DualityResult r;
    auto offend = [&](int j, const Bidegree& b, const char* kind) {
        r.ok = false;
        r.offenses.push_back({j, b.first, b.second, kind});
    };
    for (int j = 0; j <= d; ++j) {
        const HodgeStructure expected = tate_twist(t.at(d - j), -j);
        const HodgeStructure& actual = t.at(d + j);
        std::map<Bidegree, bool> seen;
        for (const auto& [b, m] : expected.classes()) seen[b] = true;
        for (const auto& [b, m] : actual.classes()) seen[b] = true;
        for (const auto& [b, unused] : seen)
            if (expected.at(b.first, b.second) != actual.at(b.first, b.second)) offend(d + j, b, "poincare");
    }
    for (int j = 0; j < d; ++j) {
        const HodgeStructure lower = tate_twist(t.at(j), -1);
        const HodgeStructure& upper = t.at(j + 2);
        for (const auto& [b, m] : lower.classes())
            if (upper.at(b.first, b.second) < m) offend(j + 2, b, "lefschetz");
    }
    return r;
}

} // namespace secant_hodge
