#ifndef QFROB_LINALG_HPP
#define QFROB_LINALG_HPP

// Concrete model of the monoidal dagger-category with duals: typed complex
// matrices under composition and Kronecker product, the functors dagger,
// (-)^* and (-)_*, duality morphisms, and tolerance-based comparison.
//
// Index convention (load-bearing for every other module): the LEFT tensor
// factor is major, i.e. the flattened index of e_a (x) e_b is a*dim(b) + b.

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qfrob/errors.hpp"

namespace qfrob {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct Wire {
    int dim = 0;
    bool dual = false;

    friend bool operator==(const Wire& a, const Wire& b) {
        return a.dim == b.dim && a.dual == b.dual;
    }
};

// An object of the category: an ordered tensor word of (dimension, dual)
// factors. The empty word is the tensor unit I.
struct WireWord {
    std::vector<Wire> factors;

    WireWord() = default;
    explicit WireWord(std::vector<Wire> f) : factors(std::move(f)) {}

    static WireWord unit() { return WireWord{}; }
    static WireWord single(int dim, bool dual = false) {
        return WireWord{{Wire{dim, dual}}};
    }

    Eigen::Index total() const {
        Eigen::Index t = 1;
        for (const Wire& w : factors) t *= w.dim;
        return t;
    }

    // (A (x) B)^* = B^* (x) A^*: reverse the factor order and flip flags.
    WireWord dualized() const {
        std::vector<Wire> f(factors.rbegin(), factors.rend());
        for (Wire& w : f) w.dual = !w.dual;
        return WireWord{std::move(f)};
    }

    WireWord concat(const WireWord& other) const {
        std::vector<Wire> f = factors;
        f.insert(f.end(), other.factors.begin(), other.factors.end());
        return WireWord{std::move(f)};
    }

    friend bool operator==(const WireWord& a, const WireWord& b) {
        return a.factors == b.factors;
    }
    friend bool operator!=(const WireWord& a, const WireWord& b) {
        return !(a == b);
    }
};

std::string to_string(const WireWord& w);

struct Tolerance {
    double atol = 1e-9;
    double rtol = 1e-9;

    bool close(double x, double y) const {
        return std::abs(x - y) <= atol + rtol * std::max(std::abs(x), std::abs(y));
    }
    bool close(const Complex& x, const Complex& y) const {
        return std::abs(x - y) <= atol + rtol * std::max(std::abs(x), std::abs(y));
    }
    static Tolerance strict() { return Tolerance{0.0, 0.0}; }
};

// A morphism of Hilb: matrix with shape cod.total() x dom.total().
struct Morphism {
    WireWord dom;
    WireWord cod;
    Matrix data;

    Morphism() = default;
    Morphism(WireWord d, WireWord c, Matrix m);

    bool is_scalar() const { return dom.total() == 1 && cod.total() == 1; }
    Complex scalar() const;
    bool is_state() const { return dom.factors.empty(); }

    static Morphism scalar_value(Complex z);
    static Morphism state(const WireWord& cod, const Vector& v);
};

Morphism identity(const WireWord& w);
Morphism identity(int n);

// g after f; wire words must match exactly.
Morphism compose(const Morphism& g, const Morphism& f);

// Kronecker product, left factor major; words concatenate.
Morphism tensor(const Morphism& f, const Morphism& g);

// Conjugate transpose; dom/cod swapped.
Morphism dagger(const Morphism& f);

// The conjugation functor (-)_*: entrywise conjugation together with the
// order-reversal of tensor factors, so that f_* : A^* -> B^* for f : A -> B.
Morphism conjugate(const Morphism& f);

// The duality functor (-)^* = ((-)_*)^dagger: f^* : B^* -> A^*.
Morphism dual(const Morphism& f);

// Left duality morphisms. cup(W) = epsilon_W : I -> W^* (x) W and
// cap(W) = eta_W : W (x) W^* -> I; composite words nest canonically so the
// triangle equations hold exactly. Right duality morphisms are their daggers.
Morphism cup(const WireWord& w);
Morphism cup(int n);
Morphism cap(const WireWord& w);
Morphism cap(int n);

// The symmetry A (x) B -> B (x) A, (i,j) |-> (j,i) blockwise.
Morphism swap(const WireWord& a, const WireWord& b);
Morphism swap(int a, int b);

// Reinterpret the wire words of a morphism without touching the matrix;
// total dimensions must agree. Used to flatten composite objects.
Morphism relabel(const Morphism& f, const WireWord& dom, const WireWord& cod);

// Largest singular value.
double operator_norm(const Morphism& f);
double operator_norm(const Matrix& m);

struct EigenPair {
    Complex value;
    Vector vector;  // unit norm; pairwise orthonormal across the returned list
};

// Spectral decomposition of a normal endomorphism via the Schur form; the
// returned eigenvectors are orthonormal even for degenerate eigenvalues.
// Throws NotNormal when the commutator f f^dag - f^dag f exceeds tolerance.
std::vector<EigenPair> eig_normal(const Morphism& f, const Tolerance& tol = {});
std::vector<EigenPair> eig_normal(const Matrix& m, const Tolerance& tol = {});

// Largest entrywise deviation between two matrices of identical shape.
double max_deviation(const Matrix& a, const Matrix& b);
double max_deviation(const Morphism& a, const Morphism& b);

// Entrywise comparison under tolerance; total dimensions must agree.
bool approx_equal(const Morphism& a, const Morphism& b, const Tolerance& tol = {});

}  // namespace qfrob

#endif
