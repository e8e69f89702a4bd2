#pragma once

#include "cobalt/graded.hpp"
#include "cobalt/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cobalt {

/// Weakly decreasing positive parts; trailing zeros are never stored.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < length() ? parts[static_cast<std::size_t>(i)] : 0; }
    bool fits(int rows, int cols) const;
    /// Complement inside the rows x cols box.
    Partition complement(int rows, int cols) const;
    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

/// Partitions inside the box, ordered by size and then with larger parts first.
std::vector<Partition> box_partitions(int rows, int cols);

/// Size limit for Grassmannian rings: COBALT_MAX_N, default 8.
int grass_max_n();

/// Z[x_1..x_{n-d}]/(s_{d+1}, ..., s_n) with x_i in degree i.
RingPresentation grass_presentation(int n, int d);

/// Determinant of the d x d matrix (x_{a_r - r + c}) with x_0 = 1 and x_i = 0
/// outside 0..n-d, as a polynomial in x_1..x_{n-d}.
Polynomial schur_poly(const Partition& a, int n, int d);

/// R_{n,d} with its Schur basis and exact coordinates in that basis.
class GrassRing {
public:
    GrassRing(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    int num_vars() const { return n_ - d_; }
    int top_degree() const { return d_ * (n_ - d_); }
    const RingPresentation& presentation() const { return *ring_; }
    const std::vector<Partition>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }
    std::optional<std::size_t> index_of(const Partition& a) const;
    const Polynomial& schur(std::size_t i) const { return schur_[i]; }
    const Partition& top_class() const { return basis_.back(); }

    /// Schur coordinates of a polynomial in x_1..x_{n-d}.
    std::vector<Integer> coordinates(const Polynomial& p) const;
    bool is_zero(const Polynomial& p) const;
    Polynomial element(std::span<const Integer> coords) const;
    std::vector<Integer> product(std::size_t a, std::size_t b) const;

    /// Smallest and one-past-largest basis index of the given degree.
    std::pair<std::size_t, std::size_t> degree_range(int k) const;

private:
    struct Degree {
        std::unique_ptr<GradedPiece> piece;
        std::unique_ptr<LatticeQuotient> quotient;
        IntMatrix schur_inverse;
    };

    int n_;
    int d_;
    RingPtr ring_;
    std::vector<Partition> basis_;
    std::vector<Polynomial> schur_;
    std::vector<std::size_t> degree_start_;
    std::vector<Degree> degrees_;
};

/// Shared instance per (n, d); throws BoundExceeded above grass_max_n().
std::shared_ptr<const GrassRing> grass_ring(int n, int d);

/// Matrix of a map in Schur coordinates: row i is the image of source basis i.
struct SchurMap {
    std::shared_ptr<const GrassRing> source;
    std::shared_ptr<const GrassRing> target;
    IntMatrix matrix;
    int degree_shift = 0;
};

/// pi : R_{n+1,d+1} -> R_{n,d+1}, x_i -> x_i for i < n-d and x_{n-d} -> 0.
SchurMap map_pi(int n, int d);
/// iota : R_{n,d} -> R_{n+1,d+1}, Delta_a -> Delta_{(n-d, a)}.
SchurMap map_iota(int n, int d);
/// f : R_{n+1,d+1} -> R_{n,d}, x_i -> x_i.
SchurMap map_f(int n, int d);

/// c[a][b] = Schur coordinates of Delta_a * Delta_b.
using StructureConstants = std::vector<std::vector<std::vector<Integer>>>;
StructureConstants structure_constants(int n, int d);
/// Same constants by expanding polynomials and solving over Q against the
/// relation span, without the Smith-form coordinate machinery.
StructureConstants structure_constants_by_expansion(int n, int d);

IntMatrix pairing_gram(int n, int d);

Check verify_rank(int n, int d);
Check verify_complex(int n, int d);
Check verify_eq1(int n, int d);
Check verify_eq2(int n, int d);
Check verify_pairing(int n, int d);
Check verify_structure_constants(int n, int d);

nlohmann::json coordinates_to_json(const GrassRing& ring, std::span<const Integer> coords);

/// Q-linear solve: coefficients c with target = sum c_i basis_i modulo the row
/// span of `relations`. nullopt when no solution exists.
std::optional<std::vector<Rational>> solve_modulo(const std::vector<std::vector<Rational>>& relations,
                                                  const std::vector<std::vector<Rational>>& basis,
                                                  const std::vector<Rational>& target);

} // namespace cobalt
