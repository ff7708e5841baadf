#include "colorlie/abelian_group.hpp"

#include <algorithm>
#include <stdexcept>

#include "colorlie/errors.hpp"

namespace colorlie {

namespace {

void check_rectangular(const IntMatrix& M) {
    for (const auto& row : M)
        if (row.size() != M[0].size()) throw ValidationError("matrix rows have unequal lengths");
}

void swap_rows(IntMatrix& A, std::size_t i, std::size_t j) {
    if (i != j) std::swap(A[i], A[j]);
}

void add_row(IntMatrix& A, std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < A[dst].size(); ++c) A[dst][c] += k * A[src][c];
}

void negate_row(IntMatrix& A, std::size_t i) {
    for (auto& x : A[i]) x = -x;
}

void swap_cols(IntMatrix& A, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : A) std::swap(row[i], row[j]);
}

void add_col(IntMatrix& A, std::size_t dst, std::size_t src, const Integer& k) {
    for (auto& row : A) row[dst] += k * row[src];
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix I(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t m = a.size();
    const std::size_t k = m ? a[0].size() : 0;
    const std::size_t n = b.empty() ? 0 : b[0].size();
    if (b.size() != k) throw ValidationError("matrix product dimension mismatch");
    IntMatrix out(m, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

SmithResult smith_normal_form(const IntMatrix& M) {
    const std::size_t m = M.size();
    const std::size_t n = m ? M[0].size() : 0;
    if (m) check_rectangular(M);

    SmithResult r;
    r.U = identity_matrix(m);
    r.V = identity_matrix(n);
    r.Vinv = identity_matrix(n);
    r.D = M;

    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
        // D, V gain col_dst += k * col_src; Vinv compensates with row_src -= k * row_dst.
        add_col(r.D, dst, src, k);
        add_col(r.V, dst, src, k);
        add_row(r.Vinv, src, dst, -k);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        swap_cols(r.D, i, j);
        swap_cols(r.V, i, j);
        swap_rows(r.Vinv, i, j);
    };

    const std::size_t steps = std::min(m, n);
    bool exhausted = false;
    for (std::size_t p = 0; p < steps && !exhausted; ++p) {
        for (;;) {
            // Smallest nonzero entry of the trailing submatrix becomes the pivot.
            bool found = false;
            std::size_t bi = p, bj = p;
            Integer best;
            for (std::size_t i = p; i < m; ++i)
                for (std::size_t j = p; j < n; ++j) {
                    if (r.D[i][j] == 0) continue;
                    Integer a = abs(r.D[i][j]);
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        bi = i;
                        bj = j;
                    }
                }
            if (!found) {
                exhausted = true;
                break;
            }
            swap_rows(r.D, p, bi);
            swap_rows(r.U, p, bi);
            col_swap(p, bj);

            bool clean = true;
            for (std::size_t i = p + 1; i < m; ++i) {
                if (r.D[i][p] == 0) continue;
                Integer k = r.D[i][p] / r.D[p][p];
                add_row(r.D, i, p, -k);
                add_row(r.U, i, p, -k);
                if (r.D[i][p] != 0) clean = false;
            }
            for (std::size_t j = p + 1; j < n; ++j) {
                if (r.D[p][j] == 0) continue;
                Integer k = r.D[p][j] / r.D[p][p];
                col_op(j, p, -k);
                if (r.D[p][j] != 0) clean = false;
            }
            if (!clean) continue;  // remainders are strictly smaller, try again

            // Pivot must divide the rest of the submatrix for d1 | d2 | ...
            bool fixed = false;
            for (std::size_t i = p + 1; i < m && !fixed; ++i)
                for (std::size_t j = p + 1; j < n && !fixed; ++j)
                    if (r.D[i][j] % r.D[p][p] != 0) {
                        add_row(r.D, p, i, Integer(1));
                        add_row(r.U, p, i, Integer(1));
                        fixed = true;
                    }
            if (fixed) continue;

            if (r.D[p][p] < 0) {
                negate_row(r.D, p);
                negate_row(r.U, p);
            }
            break;
        }
    }

    if (matrix_product(matrix_product(r.U, M), r.V) != r.D)
        throw std::logic_error("Smith normal form postcondition U*M*V == D failed");
    if (matrix_product(r.V, r.Vinv) != identity_matrix(n))
        throw std::logic_error("Smith normal form postcondition V*Vinv == I failed");
    return r;
}

HermiteResult hermite_normal_form(const IntMatrix& M) {
    const std::size_t m = M.size();
    const std::size_t n = m ? M[0].size() : 0;
    if (m) check_rectangular(M);

    HermiteResult r;
    r.H = M;
    r.T = identity_matrix(m);

    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        // Euclid down the column until a single nonzero entry remains at `row`.
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = row; i < m; ++i) {
                if (r.H[i][col] == 0) continue;
                if (best == m || abs(r.H[i][col]) < abs(r.H[best][col])) best = i;
            }
            if (best == m) break;  // column is zero from `row` down
            swap_rows(r.H, row, best);
            swap_rows(r.T, row, best);
            bool others = false;
            for (std::size_t i = row + 1; i < m; ++i) {
                if (r.H[i][col] == 0) continue;
                Integer k = r.H[i][col] / r.H[row][col];
                add_row(r.H, i, row, -k);
                add_row(r.T, i, row, -k);
                if (r.H[i][col] != 0) others = true;
            }
            if (!others) break;
        }
        if (r.H[row][col] == 0) continue;  // no pivot in this column

        if (r.H[row][col] < 0) {
            negate_row(r.H, row);
            negate_row(r.T, row);
        }
        for (std::size_t i = 0; i < row; ++i) {
            // Reduce entries above the pivot into [0, pivot).
            Integer k;
            mpz_fdiv_q(k.get_mpz_t(), r.H[i][col].get_mpz_t(), r.H[row][col].get_mpz_t());
            if (k != 0) {
                add_row(r.H, i, row, -k);
                add_row(r.T, i, row, -k);
            }
        }
        r.pivot_cols.push_back(col);
        ++row;
    }
    r.rank = row;

    if (matrix_product(r.T, M) != r.H)
        throw std::logic_error("Hermite normal form postcondition T*M == H failed");
    return r;
}

bool GroupElement::is_identity() const {
    return std::all_of(canon_.begin(), canon_.end(), [](const Integer& x) { return x == 0; });
}

bool GroupElement::operator==(const GroupElement& other) const {
    if (pres_ != other.pres_)
        throw PresentationMismatch("comparing elements of different presentations");
    return canon_ == other.canon_;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.presentation() != b.presentation())
        throw PresentationMismatch("multiplying elements of different presentations");
    std::vector<Integer> word(a.word());
    for (std::size_t i = 0; i < word.size(); ++i) word[i] += b.word()[i];
    return a.presentation()->element(std::move(word));
}

GroupElement inverse(const GroupElement& a) {
    std::vector<Integer> word(a.word());
    for (auto& x : word) x = -x;
    return a.presentation()->element(std::move(word));
}

GroupElement pow(const GroupElement& a, const Integer& e) {
    std::vector<Integer> word(a.word());
    for (auto& x : word) x *= e;
    return a.presentation()->element(std::move(word));
}

std::optional<Integer> order_of(const GroupElement& a) {
    const auto& moduli = a.presentation()->column_moduli();
    Integer order(1);
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        const Integer& y = a.canonical()[j];
        if (y == 0) continue;
        if (moduli[j] == 0) return std::nullopt;  // free coordinate
        order = lcm(order, moduli[j] / gcd(moduli[j], y));
    }
    return order;
}

GroupPtr GroupPresentation::create(std::size_t num_generators,
                                   std::vector<std::vector<Integer>> relations,
                                   std::vector<std::string> names) {
    auto p = std::shared_ptr<GroupPresentation>(new GroupPresentation());
    p->num_generators_ = num_generators;
    for (const auto& rel : relations)
        if (rel.size() != num_generators)
            throw ValidationError("relation vector length does not match generator count");
    p->relations_ = std::move(relations);

    if (names.empty()) {
        for (std::size_t i = 0; i < num_generators; ++i) names.push_back("g" + std::to_string(i + 1));
    }
    if (names.size() != num_generators)
        throw ValidationError("generator name count does not match generator count");
    p->names_ = std::move(names);

    const std::size_t s = num_generators;
    if (p->relations_.empty()) {
        p->V_ = identity_matrix(s);
        p->Vinv_ = identity_matrix(s);
        p->moduli_.assign(s, Integer(0));
    } else {
        auto snf = smith_normal_form(p->relations_);
        p->V_ = std::move(snf.V);
        p->Vinv_ = std::move(snf.Vinv);
        p->moduli_.assign(s, Integer(0));
        for (std::size_t j = 0; j < s && j < p->relations_.size(); ++j) p->moduli_[j] = snf.D[j][j];
    }
    for (const auto& d : p->moduli_) {
        if (d == 0)
            ++p->rank_;
        else if (d > 1)
            p->invariant_factors_.push_back(d);
    }
    return p;
}

GroupPtr GroupPresentation::cyclic_product(const std::vector<Integer>& orders) {
    std::vector<std::vector<Integer>> relations;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 0) throw ValidationError("cyclic factor order must be >= 0");
        if (orders[i] == 0) continue;  // free factor
        std::vector<Integer> rel(orders.size(), Integer(0));
        rel[i] = orders[i];
        relations.push_back(std::move(rel));
    }
    return create(orders.size(), std::move(relations));
}

std::optional<Integer> GroupPresentation::order() const {
    if (rank_ > 0) return std::nullopt;
    Integer n(1);
    for (const auto& d : invariant_factors_) n *= d;
    return n;
}

Integer GroupPresentation::exponent() const {
    if (rank_ > 0) throw InfiniteGroup("exponent of an infinite group");
    Integer e(1);
    for (const auto& d : invariant_factors_) e = lcm(e, d);
    return e;
}

std::vector<Integer> GroupPresentation::canonicalize(const std::vector<Integer>& word) const {
    const std::size_t s = num_generators_;
    std::vector<Integer> y(s, Integer(0));
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < s; ++i)
            if (word[i] != 0 && V_[i][j] != 0) y[j] += word[i] * V_[i][j];
    for (std::size_t j = 0; j < s; ++j) {
        if (moduli_[j] == 0) continue;
        mpz_fdiv_r(y[j].get_mpz_t(), y[j].get_mpz_t(), moduli_[j].get_mpz_t());
    }
    return y;
}

GroupElement GroupPresentation::element(std::vector<Integer> word) const {
    if (word.size() != num_generators_)
        throw ValidationError("word length does not match generator count");
    auto canon = canonicalize(word);
    return GroupElement(shared_from_this(), std::move(word), std::move(canon));
}

GroupElement GroupPresentation::identity() const {
    return element(std::vector<Integer>(num_generators_, Integer(0)));
}

GroupElement GroupPresentation::generator(std::size_t i) const {
    if (i >= num_generators_) throw ValidationError("generator index out of range");
    std::vector<Integer> word(num_generators_, Integer(0));
    word[i] = 1;
    return element(std::move(word));
}

GroupElement GroupPresentation::from_canonical(const std::vector<Integer>& coords) const {
    const std::size_t s = num_generators_;
    if (coords.size() != s) throw ValidationError("coordinate length does not match generator count");
    std::vector<Integer> word(s, Integer(0));
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < s; ++i)
            if (coords[i] != 0 && Vinv_[i][j] != 0) word[j] += coords[i] * Vinv_[i][j];
    return element(std::move(word));
}

std::vector<GroupElement> GroupPresentation::enumerate() const {
    if (rank_ > 0) throw InfiniteGroup("cannot enumerate an infinite group");
    std::vector<std::size_t> torsion_coords;
    for (std::size_t j = 0; j < moduli_.size(); ++j)
        if (moduli_[j] > 1) torsion_coords.push_back(j);

    std::vector<GroupElement> out;
    std::vector<Integer> coords(num_generators_, Integer(0));
    for (;;) {
        out.push_back(from_canonical(coords));
        std::size_t k = 0;
        for (; k < torsion_coords.size(); ++k) {
            std::size_t j = torsion_coords[k];
            coords[j] += 1;
            if (coords[j] < moduli_[j]) break;
            coords[j] = 0;
        }
        if (k == torsion_coords.size()) break;
    }
    return out;
}

std::optional<CyclicIntersection> cyclic_intersection(const GroupElement& t,
                                                      const std::vector<GroupElement>& K) {
    const GroupPtr& pres = t.presentation();
    for (const auto& k : K)
        if (k.presentation() != pres)
            throw PresentationMismatch("subgroup generators from a different presentation");

    const std::size_t s = pres->num_generators();
    const auto& moduli = pres->column_moduli();

    // Lattice rows: canonical coordinates of K, then the torsion relations.
    IntMatrix B;
    for (const auto& k : K) B.push_back(k.canonical());
    for (std::size_t j = 0; j < s; ++j) {
        if (moduli[j] == 0) continue;
        std::vector<Integer> row(s, Integer(0));
        row[j] = moduli[j];
        B.push_back(std::move(row));
    }

    std::vector<Rational> residual(s);
    for (std::size_t j = 0; j < s; ++j) residual[j] = Rational(t.canonical()[j]);

    HermiteResult hnf;
    std::vector<Rational> coeff;  // per nonzero HNF row, as a multiple of n
    if (!B.empty()) {
        hnf = hermite_normal_form(B);
        coeff.assign(hnf.rank, Rational(0));
        for (std::size_t i = 0; i < hnf.rank; ++i) {
            std::size_t c = hnf.pivot_cols[i];
            if (residual[c] == 0) continue;
            Rational q = residual[c] / Rational(hnf.H[i][c]);
            coeff[i] = q;
            for (std::size_t j = 0; j < s; ++j)
                if (hnf.H[i][j] != 0) residual[j] -= q * Rational(hnf.H[i][j]);
        }
    }
    for (const auto& rj : residual)
        if (rj != 0) return std::nullopt;  // no positive power of t reaches <K>

    Integer n(1);
    for (const auto& q : coeff) n = lcm(n, q.get_den());

    // Coefficients over B's rows, then keep the K part.
    std::vector<Integer> over_b(B.size(), Integer(0));
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        Rational a = coeff[i] * Rational(n);
        for (std::size_t j = 0; j < B.size(); ++j)
            if (hnf.T[i][j] != 0) over_b[j] += a.get_num() * hnf.T[i][j];
    }
    CyclicIntersection out;
    out.n = n;
    out.expression.assign(over_b.begin(), over_b.begin() + K.size());

    // t^n must equal the expression word exactly.
    GroupElement check = pres->identity();
    for (std::size_t j = 0; j < K.size(); ++j) check = check * pow(K[j], out.expression[j]);
    if (!(pow(t, n) == check))
        throw std::logic_error("cyclic_intersection produced an invalid expression");
    return out;
}

std::string to_string(const GroupElement& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.word().size(); ++i) {
        if (i) out += ",";
        out += a.word()[i].get_str();
    }
    return out + ")";
}

}  // namespace colorlie
