#include "uqaw/modules.hpp"

#include <chrono>
#include <functional>

#include "uqaw/errors.hpp"

namespace uqaw {

namespace {

std::vector<std::string> index_labels(const std::string& prefix, long count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (long i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

CheckItem timed_item(const std::string& name, const std::function<bool()>& fn) {
    auto start = std::chrono::steady_clock::now();
    bool ok = fn();
    auto stop = std::chrono::steady_clock::now();
    CheckItem item;
    item.name = name;
    item.pass = ok;
    item.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return item;
}

}  // namespace

UqModule finite_uq_module(long n, int eps) {
    if (n < 0) throw invalid_argument_error("finite module needs n >= 0");
    if (eps != 1 && eps != -1) throw invalid_argument_error("eps must be +-1");
    const int dim = static_cast<int>(n) + 1;
    UqModule m;
    m.kind = UqModule::Kind::Finite;
    m.n = n;
    m.eps = eps;
    Scalar q = Scalar::q();
    Scalar e(eps);
    Matrix E(dim, dim), F(dim, dim), K(dim, dim), Kinv(dim, dim);
    for (long i = 0; i <= n; ++i) {
        K.at(i, i) = e * q.pow(n - 2 * i);
        Kinv.at(i, i) = e * q.pow(2 * i - n);
        if (i + 1 <= n) F.at(i + 1, i) = q_bracket(i + 1);
        if (i >= 1) E.at(i - 1, i) = e * q_bracket(n - i + 1);
    }
    auto labels = index_labels("v", dim);
    m.E = {std::move(E), labels};
    m.F = {std::move(F), labels};
    m.K = {std::move(K), labels};
    m.Kinv = {std::move(Kinv), labels};
    return m;
}

UqModule truncated_verma(const Scalar& lambda, long window) {
    if (window < 1) throw invalid_argument_error("truncated Verma needs window >= 1");
    if (lambda.is_zero()) throw invalid_argument_error("lambda must be nonzero");
    const int dim = static_cast<int>(window);
    UqModule m;
    m.kind = UqModule::Kind::VermaTruncated;
    m.lambda = lambda;
    m.window = window;
    Scalar q = Scalar::q();
    Matrix E(dim, dim), F(dim, dim), K(dim, dim), Kinv(dim, dim);
    for (long i = 0; i < window; ++i) {
        K.at(i, i) = lambda * q.pow(-2 * i);
        Kinv.at(i, i) = lambda.inverse() * q.pow(2 * i);
        if (i + 1 < window) F.at(i + 1, i) = q_bracket(i + 1);  // top image dropped
        if (i >= 1) E.at(i - 1, i) = param_bracket(lambda, 1 - i);
    }
    auto labels = index_labels("m", dim);
    m.E = {std::move(E), labels};
    m.F = {std::move(F), labels};
    m.K = {std::move(K), labels};
    m.Kinv = {std::move(Kinv), labels};
    return m;
}

Matrix module_matrix(const UqModule& m, const UElement& x) {
    const int dim = m.dim();
    Matrix out(dim, dim);
    for (const auto& [mono, c] : x.terms()) {
        Matrix term = Matrix::identity(dim);
        term = m.F.mat.pow(mono.f);
        Matrix kpart = mono.k >= 0 ? m.K.mat.pow(mono.k) : m.Kinv.mat.pow(-mono.k);
        term = term * kpart;
        term = term * m.E.mat.pow(mono.e);
        out = out + term.scaled(c);
    }
    return out;
}

namespace {

// Relation residue restricted to the sound columns.
bool columns_zero(const Matrix& m, int cols) {
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

}  // namespace

CheckReport module_relation_check(const UqModule& m) {
    CheckReport report;
    report.title = "module defining relations";
    const int sound = m.sound_cols();
    Scalar q = Scalar::q();

    report.add(timed_item("K Kinv = 1", [&]() {
        return (m.K.mat * m.Kinv.mat - Matrix::identity(m.dim())).is_zero() &&
               (m.Kinv.mat * m.K.mat - Matrix::identity(m.dim())).is_zero();
    }));
    report.add(timed_item("K E = q^2 E K", [&]() {
        return columns_zero(m.K.mat * m.E.mat - (m.E.mat * m.K.mat).scaled(q.pow(2)),
                            sound);
    }));
    report.add(timed_item("K F = q^-2 F K", [&]() {
        return columns_zero(m.K.mat * m.F.mat - (m.F.mat * m.K.mat).scaled(q.pow(-2)),
                            sound);
    }));
    report.add(timed_item("E F - F E = (K - Kinv)/(q - q^-1)", [&]() {
        Matrix lhs = m.E.mat * m.F.mat - m.F.mat * m.E.mat;
        Matrix rhs = (m.K.mat - m.Kinv.mat).scaled((q - q.inverse()).inverse());
        return columns_zero(lhs - rhs, sound);
    }));
    report.add(timed_item("Casimir acts as the expected scalar", [&]() {
        Matrix cas = module_matrix(m, u_casimir());
        Scalar expected =
            m.kind == UqModule::Kind::Finite
                ? Scalar(m.eps) * (q.pow(m.n + 1) + q.pow(-m.n - 1))
                : m.lambda * q + m.lambda.inverse() * q.inverse();
        Matrix diff = cas - Matrix::identity(m.dim()).scaled(expected);
        // the Casimir in FE-form is exact on every column of the truncation
        return diff.is_zero();
    }));
    return report;
}

// ---------------------------------------------------------------------------
// Irreducibility

bool is_plus_minus_q_power(const Scalar& x, long n_min, long n_max) {
    Polynomial den = x.den();
    Polynomial num = x.num();
    if (!den.is_one() || num.terms().size() != 1) {
        // q^-n values have a monomial denominator
        if (!(den.is_unit_monomial() && num.terms().size() == 1)) return false;
    }
    const Term& t = num.terms()[0];
    if (!(t.coeff == 1 || t.coeff == -1)) return false;
    if (t.mono.degree() != t.mono.exponent(ParamSet::q_index)) return false;
    long e = t.mono.exponent(ParamSet::q_index);
    if (!den.is_one()) {
        const Monomial& dm = den.terms()[0].mono;
        if (dm.degree() != dm.exponent(ParamSet::q_index)) return false;
        e -= dm.exponent(ParamSet::q_index);
    }
    return e >= n_min && e <= n_max;
}

bool verma_irreducible(const Scalar& lambda) {
    // lambda in {+-q^n | n in N} makes the module reducible
    return !is_plus_minus_q_power(lambda, 0, INT32_MAX);
}

bool vn_irreducible(long n) {
    // q is a formal variable, so q^{2i} != 1 for every 1 <= i <= n
    return n >= 0;
}

bool vd_irreducible(long d, const Scalar& a, const Scalar& b, const Scalar& c) {
    // (i) generic q; (ii) none of abc, a^-1 b c, a b^-1 c, a b c^-1 equals
    // q^{d+1-2i} for 1 <= i <= d
    Scalar q = Scalar::q();
    std::vector<Scalar> products = {a * b * c, a.inverse() * b * c,
                                    a * b.inverse() * c, a * b * c.inverse()};
    for (long i = 1; i <= d; ++i) {
        Scalar target = q.pow(d + 1 - 2 * i);
        for (const Scalar& p : products)
            if (p == target) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Scalar family and V_d(a,b,c)

AWScalarFamily aw_scalar_family(const Scalar& a, const Scalar& b, const Scalar& c,
                                const Scalar& nu) {
    if (a.is_zero() || b.is_zero() || c.is_zero() || nu.is_zero())
        throw invalid_argument_error("scalar family needs nonzero a, b, c, nu");
    return AWScalarFamily{a, b, c, nu};
}

Scalar AWScalarFamily::theta(long i) const {
    Scalar q = Scalar::q();
    return a * q.pow(2 * i) * nu.inverse() + a.inverse() * q.pow(-2 * i) * nu;
}

Scalar AWScalarFamily::theta_star(long i) const {
    Scalar q = Scalar::q();
    return b * q.pow(2 * i) * nu.inverse() + b.inverse() * q.pow(-2 * i) * nu;
}

Scalar AWScalarFamily::theta_eps(long i) const {
    Scalar q = Scalar::q();
    return c * q.pow(2 * i) * nu.inverse() + c.inverse() * q.pow(-2 * i) * nu;
}

Scalar AWScalarFamily::phi(long i) const {
    Scalar q = Scalar::q();
    return a.inverse() * b.inverse() * q * nu * (q.pow(i) - q.pow(-i)) *
           (q.pow(i - 1) * nu.inverse() - q.pow(1 - i) * nu) *
           (q.pow(-i) - a * b * c * q.pow(i - 1) * nu.inverse()) *
           (q.pow(-i) - a * b * c.inverse() * q.pow(i - 1) * nu.inverse());
}

Scalar AWScalarFamily::omega() const {
    Scalar q = Scalar::q();
    return (b + b.inverse()) * (c + c.inverse()) +
           (a + a.inverse()) * (q * nu + q.inverse() * nu.inverse());
}

Scalar AWScalarFamily::omega_star() const {
    Scalar q = Scalar::q();
    return (c + c.inverse()) * (a + a.inverse()) +
           (b + b.inverse()) * (q * nu + q.inverse() * nu.inverse());
}

Scalar AWScalarFamily::omega_eps() const {
    Scalar q = Scalar::q();
    return (a + a.inverse()) * (b + b.inverse()) +
           (c + c.inverse()) * (q * nu + q.inverse() * nu.inverse());
}

AWModule aw_vd_module(long d, const Scalar& a, const Scalar& b, const Scalar& c) {
    if (d < 0) throw invalid_argument_error("aw_vd_module needs d >= 0");
    Scalar q = Scalar::q();
    AWModule m;
    m.d = d;
    m.family = aw_scalar_family(a, b, c, q.pow(d));
    const int dim = static_cast<int>(d) + 1;
    Matrix A(dim, dim), B(dim, dim), C(dim, dim);
    const AWScalarFamily& fam = m.family;
    Scalar denom = (q.pow(2) - q.pow(-2)).inverse();
    Scalar central = (q + q.inverse()).inverse();
    for (long i = 0; i <= d; ++i) {
        A.at(i, i) = fam.theta(i);
        if (i + 1 <= d) A.at(i + 1, i) = Scalar(1);
        B.at(i, i) = fam.theta_star(i);
        if (i >= 1) B.at(i - 1, i) = fam.phi(i);
        // C v_i = phi_i (q^-1 th_i - q th_{i-1})/(q^2-q^-2) v_{i-1}
        //   + [(om^e - th_i th*_i)/(q+q^-1) + (q^-1 phi_{i+1} - q phi_i)/(q^2-q^-2)] v_i
        //   + (q^-1 th*_{i+1} - q th*_i)/(q^2-q^-2) v_{i+1}
        // with phi_0 = phi_{d+1} = 0 at nu = q^d.
        if (i >= 1)
            C.at(i - 1, i) = fam.phi(i) *
                             (q.inverse() * fam.theta(i) - q * fam.theta(i - 1)) * denom;
        C.at(i, i) = (fam.omega_eps() - fam.theta(i) * fam.theta_star(i)) * central +
                     (q.inverse() * fam.phi(i + 1) - q * fam.phi(i)) * denom;
        if (i + 1 <= d)
            C.at(i + 1, i) =
                (q.inverse() * fam.theta_star(i + 1) - q * fam.theta_star(i)) * denom;
    }
    auto labels = index_labels("v", dim);
    m.A = {std::move(A), labels};
    m.B = {std::move(B), labels};
    m.C = {std::move(C), labels};
    m.alpha = fam.omega();
    m.beta = fam.omega_star();
    m.gamma = fam.omega_eps();
    return m;
}

Matrix aw_module_matrix(const AWModule& m, const AWElement& x) {
    const int dim = m.dim();
    Matrix out(dim, dim);
    for (const auto& [mono, coeff] : x.terms()) {
        Scalar c = coeff * m.alpha.pow(mono.r) * m.beta.pow(mono.s) *
                   m.gamma.pow(mono.t);
        Matrix term = m.A.mat.pow(mono.a) * m.B.mat.pow(mono.b) * m.C.mat.pow(mono.c);
        out = out + term.scaled(c);
    }
    return out;
}

CheckReport aw_module_relation_check(const AWModule& m) {
    CheckReport report;
    report.title = "V_d defining relations";
    Scalar q = Scalar::q();
    Scalar three = q_bracket(3);
    const Matrix& A = m.A.mat;
    const Matrix& B = m.B.mat;
    Matrix AB = A * B, BA = B * A;
    Scalar w = (q.pow(2) - q.pow(-2)).pow(2);

    report.add(timed_item("A^3 relation", [&]() {
        Matrix lhs = A.pow(3) * B - (A.pow(2) * B * A).scaled(three) +
                     (A * B * A.pow(2)).scaled(three) - B * A.pow(3);
        return (lhs - (BA - AB).scaled(w)).is_zero();
    }));
    report.add(timed_item("B^3 relation", [&]() {
        Matrix lhs = B.pow(3) * A - (B.pow(2) * A * B).scaled(three) +
                     (B * A * B.pow(2)).scaled(three) - A * B.pow(3);
        return (lhs - (AB - BA).scaled(w)).is_zero();
    }));
    report.add(timed_item("mixed degree-4 relation with gamma", [&]() {
        Scalar qq = q.pow(2) + q.pow(-2);
        Matrix lhs = B.pow(2) * A.pow(2) - (BA * BA).scaled(qq) + (AB * AB).scaled(qq) -
                     A.pow(2) * B.pow(2);
        Matrix rhs = (AB - BA).scaled((q - q.inverse()).pow(2) * m.gamma);
        return (lhs - rhs).is_zero();
    }));
    report.add(timed_item("alpha/beta/gamma definitions hold as matrices", [&]() {
        Scalar denom = (q.pow(2) - q.pow(-2)).inverse();
        Scalar central = (q + q.inverse()).inverse();
        const Matrix& C = m.C.mat;
        Matrix ra = A + ((B * C).scaled(q) - (C * B).scaled(q.inverse())).scaled(denom) -
                    Matrix::identity(m.dim()).scaled(m.alpha * central);
        Matrix rb = B + ((C * A).scaled(q) - (A * C).scaled(q.inverse())).scaled(denom) -
                    Matrix::identity(m.dim()).scaled(m.beta * central);
        Matrix rc = C + ((A * B).scaled(q) - (B * A).scaled(q.inverse())).scaled(denom) -
                    Matrix::identity(m.dim()).scaled(m.gamma * central);
        return ra.is_zero() && rb.is_zero() && rc.is_zero();
    }));
    return report;
}

// ---------------------------------------------------------------------------
// Leonard checks

namespace {

struct DirectOutcome {
    bool ok = false;
    std::string detail;
};

// Diagonalizes X against its expected eigenvalue list and tests that Y (and
// optionally Z) is irreducible tridiagonal in that eigenbasis.
DirectOutcome direct_check(const Matrix& X, const std::vector<Scalar>& eigenvalues,
                           const std::vector<const Matrix*>& others) {
    const int n = X.rows();
    // multiplicity-free check
    for (size_t i = 0; i < eigenvalues.size(); ++i)
        for (size_t j = i + 1; j < eigenvalues.size(); ++j)
            if (eigenvalues[i] == eigenvalues[j])
                return {false, "repeated eigenvalue"};
    // minimal polynomial check: prod (X - theta_i) = 0, so X is diagonalizable
    Matrix prod = Matrix::identity(n);
    for (const Scalar& t : eigenvalues)
        prod = prod * (X - Matrix::identity(n).scaled(t));
    if (!prod.is_zero()) return {false, "not diagonalizable"};

    Matrix P(n, n);
    for (int c = 0; c < n; ++c) {
        auto basis = nullspace(X - Matrix::identity(n).scaled(eigenvalues[c]));
        if (basis.size() != 1) return {false, "eigenspace dimension != 1"};
        for (int r = 0; r < n; ++r) P.at(r, c) = basis[0][r];
    }
    auto Pinv = inverse(P);
    if (!Pinv) return {false, "eigenbasis not invertible"};
    for (const Matrix* Y : others) {
        Matrix T = *Pinv * *Y * P;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long gap = std::abs(i - j);
                if (gap > 1 && !T.at(i, j).is_zero())
                    return {false, "not tridiagonal"};
                if (gap == 1 && T.at(i, j).is_zero())
                    return {false, "tridiagonal but reducible"};
            }
    }
    return {true, ""};
}

std::vector<Scalar> eigenvalue_list(const AWModule& m, char which) {
    std::vector<Scalar> out;
    for (long i = 0; i <= m.d; ++i) {
        if (which == 'A') out.push_back(m.family.theta(i));
        else if (which == 'B') out.push_back(m.family.theta_star(i));
        else out.push_back(m.family.theta_eps(i));
    }
    return out;
}

// Criterion route: neither square parameter lies in {q^{2(d-i)} | 1<=i<=2d-1}.
bool square_excluded(const AWModule& m, const Scalar& param) {
    Scalar q = Scalar::q();
    Scalar sq = param * param;
    for (long i = 1; i <= 2 * m.d - 1; ++i)
        if (sq == q.pow(2 * (m.d - i))) return false;
    return true;
}

const Matrix& op_of(const AWModule& m, char which) {
    return which == 'A' ? m.A.mat : which == 'B' ? m.B.mat : m.C.mat;
}

Scalar param_of(const AWModule& m, char which) {
    return which == 'A' ? m.family.a : which == 'B' ? m.family.b : m.family.c;
}

LeonardPairResult pair_check(const AWModule& m, char x, char y) {
    LeonardPairResult r;
    r.module_irreducible = vd_irreducible(m.d, m.family.a, m.family.b, m.family.c);
    DirectOutcome d1 = direct_check(op_of(m, x), eigenvalue_list(m, x), {&op_of(m, y)});
    DirectOutcome d2 = direct_check(op_of(m, y), eigenvalue_list(m, y), {&op_of(m, x)});
    r.direct = d1.ok && d2.ok;
    if (!d1.ok) r.detail = std::string(1, x) + ": " + d1.detail;
    else if (!d2.ok) r.detail = std::string(1, y) + ": " + d2.detail;
    r.criterion = square_excluded(m, param_of(m, x)) && square_excluded(m, param_of(m, y));
    r.agree = r.direct == r.criterion;
    return r;
}

}  // namespace

LeonardPairResult leonard_check_pair(const AWModule& m, LeonardPair which) {
    switch (which) {
        case LeonardPair::AB: return pair_check(m, 'A', 'B');
        case LeonardPair::BC: return pair_check(m, 'B', 'C');
        case LeonardPair::CA: return pair_check(m, 'C', 'A');
    }
    throw error("internal: unknown pair");
}

LeonardTripleResult leonard_check_triple(const AWModule& m) {
    LeonardTripleResult r;
    r.module_irreducible = vd_irreducible(m.d, m.family.a, m.family.b, m.family.c);
    r.ab = leonard_check_pair(m, LeonardPair::AB);
    r.bc = leonard_check_pair(m, LeonardPair::BC);
    r.ca = leonard_check_pair(m, LeonardPair::CA);
    // direct triple: each operator diagonal with the other two irreducible
    // tridiagonal in its eigenbasis
    bool direct = true;
    const char names[3] = {'A', 'B', 'C'};
    for (char x : names) {
        std::vector<const Matrix*> others;
        for (char y : names)
            if (y != x) others.push_back(&op_of(m, y));
        DirectOutcome out = direct_check(op_of(m, x), eigenvalue_list(m, x), others);
        direct = direct && out.ok;
    }
    r.direct = direct;
    r.criterion = square_excluded(m, m.family.a) && square_excluded(m, m.family.b) &&
                  square_excluded(m, m.family.c);
    r.agree = r.direct == r.criterion;
    return r;
}

}  // namespace uqaw
