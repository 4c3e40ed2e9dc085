#pragma once

// The numerical Grothendieck group of Ku(Y): the rank-two lattice spanned by
//   v = 1 - H^2/d,   w = H - H^2/2 + (1/6 - 1/d) H^3,
// with Euler form [[-1, -1], [1-d, -d]] in the basis (v, w).

#include "kuwalls/chern.hpp"
#include "kuwalls/rational.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kuwalls {

/// Coordinates a v + b w.
struct KuClass {
  long a = 0;
  long b = 0;

  friend bool operator==(const KuClass&, const KuClass&) = default;
  friend auto operator<=>(const KuClass&, const KuClass&) = default;
};

std::ostream& operator<<(std::ostream& os, const KuClass& c);

inline constexpr KuClass kClassV{1, 0};
inline constexpr KuClass kClassW{0, 1};

using IntMatrix2 = std::array<std::array<long, 2>, 2>;

ChernVector v_vector(const FanoContext& ctx);
ChernVector w_vector(const FanoContext& ctx);
/// a v + b w as a Chern vector.
ChernVector embed(const FanoContext& ctx, const KuClass& c);

/// Gram matrix M with M[i][j] = chi(e_i, e_j), e = (v, w).
IntMatrix2 euler_matrix(int degree);

/// p^T M q. Throws std::out_of_range("degree out of range") unless 1 <= d <= 5.
long euler_form(int degree, const KuClass& p, const KuClass& q);

class NotInSpanError : public std::runtime_error {
 public:
  NotInSpanError(int coefficient, Rational residual);

  /// Index k of the first Ch_k that a v + b w cannot match.
  int coefficient() const { return coefficient_; }
  const Rational& residual() const { return residual_; }

 private:
  int coefficient_;
  Rational residual_;
};

/// Exact coordinates; integral == false flags scratch values such as halves of classes.
struct KuCoordinates {
  Rational a;
  Rational b;
  bool integral = false;

  /// Throws std::domain_error when !integral.
  KuClass to_class() const;
};

/// Solves a v + b w = x. Throws NotInSpanError when x is outside the span.
KuCoordinates class_from_chern(const FanoContext& ctx, const ChernVector& x);

/// Action of the rotation functor on (a, b): v -> w - v, w -> w - 2v. Columns are images.
IntMatrix2 rotation_matrix();

IntMatrix2 multiply(const IntMatrix2& m, const IntMatrix2& n);
KuClass apply(const IntMatrix2& m, const KuClass& c);

/// All (a, b) with |a|, |b| <= bound and euler_form(d, c, c) == target, sorted.
std::vector<KuClass> classes_with_self_pairing(int degree, long target, long bound);

/// dim Ext^i for i = 0..3.
struct ExtTable {
  std::array<long, 4> dims{};

  /// Throws std::invalid_argument on negative entries.
  explicit ExtTable(std::array<long, 4> d);

  long alternating_sum() const;
  friend bool operator==(const ExtTable&, const ExtTable&) = default;
};

struct ExtVerdict {
  long alternating_sum = 0;
  long expected_chi = 0;
  bool euler_ok = false;
  bool homological_dimension_ok = false;
  /// Unset when the Serre check was not requested.
  std::optional<bool> serre_ok;

  bool passed() const { return euler_ok && homological_dimension_ok && serre_ok.value_or(true); }
};

/// (i) sum (-1)^i dims[i] == chi(cls, cls); (ii) dims[3] == 0;
/// (iii) when serre_trivial_numerics, dims[i] == dims[2 - i].
ExtVerdict check_ext_table(int degree, const KuClass& cls, const ExtTable& t,
                           bool serre_trivial_numerics);

}  // namespace kuwalls
